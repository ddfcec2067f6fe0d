#!/usr/bin/env python3
"""Emit the Kodaira-type certificate for each genus in a range, one JSON
object per line (JSONL). Handy for diffing runs or feeding a dashboard.

Example:
    python scripts/export_certificates.py --from 3 --to 22 > certificates.jsonl
"""

import argparse
import json
import sys

from spinpic.kodaira import certificate_json, classify
from spinpic.picard import GenusCtx


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--from", dest="start", type=int, default=3)
    parser.add_argument("--to", dest="end", type=int, default=22)
    args = parser.parse_args()

    for g in range(args.start, args.end + 1):
        doc = certificate_json(classify(GenusCtx(g)))
        print(json.dumps(doc, sort_keys=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
