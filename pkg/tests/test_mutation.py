"""Single +1 perturbations of any constant must flip at least one verify check.

The three constant families the engine rests on are the pushforward
multiplicities, the stored curve intersection numbers, and the theta-null
coefficients. Each case patches exactly one entry and asserts that the
per-genus suite reports a failure.
"""

import pytest

from spinpic import catalog, testcurves, transfer, verify
from spinpic.picard import DivisorClass, GenusCtx, S_SIDE, labels_for, s_labels
from spinpic.testcurves import CurveFunctional


def _failures(g):
    return [c for c in verify.run_genus(g) if not c.ok]


@pytest.mark.parametrize("label", s_labels(GenusCtx(6)))
def test_perturbed_pushforward_degree_is_caught(label, monkeypatch):
    original = transfer.pushforward_degree

    def bumped(ctx, lab):
        return original(ctx, lab) + (1 if lab == label else 0)

    monkeypatch.setattr(transfer, "pushforward_degree", bumped)
    assert _failures(6), f"no check caught the perturbed multiplicity at {label}"


_CTX5 = GenusCtx(5)
_CURVE_CASES = [
    (c.name, label)
    for c in testcurves.standard_curves(_CTX5)
    for label in labels_for(_CTX5, c.side)
]


@pytest.mark.parametrize("name,label", _CURVE_CASES)
def test_perturbed_curve_entry_is_caught(name, label, monkeypatch):
    original = testcurves.standard_curves

    def bumped(ctx):
        out = []
        for c in original(ctx):
            if c.name == name:
                numbers = dict(c.numbers)
                numbers[label] += 1
                c = CurveFunctional(c.name, c.ctx, c.side, numbers)
            out.append(c)
        return out

    monkeypatch.setattr(testcurves, "standard_curves", bumped)
    assert _failures(5), f"no check caught the perturbed entry {name}.{label}"


@pytest.mark.parametrize("label", s_labels(GenusCtx(5)))
def test_perturbed_thetanull_coefficient_is_caught(label, monkeypatch):
    original = catalog.thetanull_class

    def bumped(ctx):
        cls = original(ctx)
        coeff = dict(cls.coeff)
        coeff[label] += 1
        return DivisorClass(ctx, S_SIDE, coeff)

    monkeypatch.setattr(catalog, "thetanull_class", bumped)
    assert _failures(5), f"no check caught the perturbed theta coefficient at {label}"


def test_unperturbed_suite_is_clean():
    assert _failures(5) == []
    assert _failures(6) == []
