"""The twelve acceptance criteria, one test each.

Each test prints its pass/fail line; the lines are also collected into a
section of the pytest terminal summary.  Run this file directly for the
plain listing."""

import pytest

from rectsurf.selftest import CRITERIA, run_criterion

from conftest import ACCEPTANCE_LINES

# writhe of the planar drawing moves with the cut (tb+ = writhe - #corners
# opening left-up, and that count depends on the cut); tb+-, lk are invariant
KNOWN = {2: "writhe is cut-dependent; tb+, tb-, lk are cut-invariant"}


@pytest.mark.parametrize(
    "number",
    [pytest.param(n, id="%02d-%s" % (n, name.replace(" ", "-")),
                  marks=[pytest.mark.xfail(reason=KNOWN[n], strict=True)] if n in KNOWN else [])
     for n, name, _ in CRITERIA])
def test_criterion(number):
    res = run_criterion(number)
    ACCEPTANCE_LINES.append(res.line())
    print(res.line())
    assert res.passed, res.detail


def test_cut_invariance_failure_is_writhe_only():
    res = run_criterion(2)
    assert "tb+ 0, tb- 0, lk 0," in res.detail
    assert "writhe 0" not in res.detail


if __name__ == "__main__":
    import sys

    from rectsurf.selftest import run_all
    results = run_all()
    sys.exit(0 if all(r.passed for r in results) else 1)
