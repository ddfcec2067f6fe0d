#!/usr/bin/env python3
"""Run the verification sweep and archive the machine-readable report.

Example:
    python scripts/run_verify.py --from 3 --to 25 --out report.json
"""

import argparse
import sys
from pathlib import Path

from spinpic import verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--from", dest="start", type=int, default=3)
    parser.add_argument("--to", dest="end", type=int, default=22)
    parser.add_argument("--out", type=Path, default=None, help="write the JSON report here")
    args = parser.parse_args()

    report = verify.build_report(args.start, args.end)
    text = verify.report_json(report)
    if args.out is not None:
        args.out.write_text(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)
    total = report["payload"]["total-checks"]
    print(f"verify {args.start}..{args.end}: {report['status']} "
          f"({total} checks, {len(report['failures'])} failures)", file=sys.stderr)
    return 0 if report["status"] == "OK" else 1


if __name__ == "__main__":
    sys.exit(main())
