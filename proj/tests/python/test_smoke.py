import math

import pytest

try:
    import entlab as el
except ImportError:
    el = pytest.importorskip("_core")


def test_haar_state_is_normalized():
    rng = el.RngStream(1, 0)
    psi = el.haar_state([2, 2], rng)
    norm = sum(abs(a) ** 2 for a in psi.amplitudes)
    assert norm == pytest.approx(1.0, abs=1e-12)


def test_entropy_of_bell_state():
    r = 1.0 / math.sqrt(2.0)
    psi = el.PureState([r, 0.0, 0.0, r], [2, 2])
    assert el.entanglement_entropy(psi, el.BipartiteShape(2, 2)) == pytest.approx(1.0, abs=1e-10)


def test_page_bound_and_tail():
    shape = el.BipartiteShape(2, 2)
    assert el.page_lower_bound(shape) == pytest.approx(0.278652, abs=1e-5)
    assert 0.0 < el.tail_rhs(el.BipartiteShape(3, 3), 0.5, 1.0) < 1.0


def test_tail_requires_da_at_least_three():
    with pytest.raises(ValueError):
        el.tail_rhs(el.BipartiteShape(2, 8), 0.5, 1.0)


def test_min_entanglement_on_random_subspace():
    rng = el.RngStream(7, 0)
    sp = el.random_subspace(el.BipartiteShape(2, 2), 2, rng)
    opt_rng = el.RngStream(7, 1)
    rep = el.min_entanglement(sp, 4, 1000, 1e-6, opt_rng)
    assert 0.0 <= rep.min_bits <= 1.0 + 1e-9


def test_sdc_roundtrip():
    rng = el.RngStream(3, 0)
    psi = el.haar_state([2, 3], rng)
    shape = el.BipartiteShape(2, 3)
    out = el.sdc_send(psi, shape)
    assert out.fidelity == pytest.approx(el.sdc_fidelity_formula(psi, shape), abs=1e-10)


def test_determinism_across_streams():
    a = el.haar_state([3, 3], el.RngStream(11, 4)).amplitudes
    b = el.haar_state([3, 3], el.RngStream(11, 4)).amplitudes
    assert list(a) == list(b)
