"""Both kernel backends implement the same contract."""

import random

import pytest

from rpqcalc._kernel import _fallback

backends = [_fallback]
try:
    from rpqcalc._kernel import _core
    backends.append(_core)
except ImportError:
    _core = None


@pytest.mark.parametrize("mod", [5 ** 10, 5 ** 22, 7 ** 28, 3 ** 60])
def test_backends_agree(mod):
    if _core is None:
        pytest.skip("compiled kernel not built")
    rng = random.Random(mod)
    count = 200
    base = rng.randrange(1, mod)
    vals = [rng.randrange(mod) for _ in range(count)]
    w = [rng.randrange(mod) for _ in range(count)]
    assert _core.power_table(base, count, mod) == \
        _fallback.power_table(base, count, mod)
    assert _core.elementwise_mulmod(vals, w, mod) == \
        _fallback.elementwise_mulmod(vals, w, mod)
    assert _core.weighted_sum(w, vals, mod) == \
        _fallback.weighted_sum(w, vals, mod)
    for e in (0, 1, 2, 7):
        assert _core.pow_weighted_sum(vals, e, w, mod) == \
            _fallback.pow_weighted_sum(vals, e, w, mod)
    assert _core.alt_sum(vals, mod) == _fallback.alt_sum(vals, mod)


@pytest.mark.parametrize("backend", backends)
def test_reference_values(backend):
    assert backend.power_table(2, 5, 1000) == [1, 2, 4, 8, 16]
    assert backend.weighted_sum([1, 2], [3, 4], 100) == 11
    assert backend.pow_weighted_sum([2, 3], 2, [1, 1], 100) == 13
    assert backend.alt_sum([5, 1, 2], 100) == 6
    assert backend.elementwise_mulmod([3, 4], [5, 6], 7) == [1, 3]


def test_selection_reports_backend():
    from rpqcalc import _kernel
    assert _kernel.BACKEND in ("cython", "python")
