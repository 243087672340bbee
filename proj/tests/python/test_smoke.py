import math

import pytest

import equivox as eq


def test_entropies_and_distance():
    assert eq.shannon_entropy([0.25, 0.25, 0.25, 0.25]) == pytest.approx(2.0)
    assert eq.binary_entropy(0.5) == pytest.approx(1.0)
    assert eq.binary_entropy(0.75) == pytest.approx(0.8112781244591328, abs=1e-12)
    nu = [[0.5, 0.0], [0.0, 0.5]]
    assert eq.conditional_entropy(nu) == pytest.approx(0.0, abs=1e-12)
    uniform = [[0.25, 0.25], [0.25, 0.25]]
    assert eq.conditional_entropy(uniform) == pytest.approx(1.0)
    assert eq.tv_distance(nu, uniform) == pytest.approx(0.5)


def test_bound_and_walk():
    assert eq.bound_conditional(0.5, 3) == pytest.approx(1.5)
    assert eq.bound_conditional(1.0, 4) == pytest.approx(2.0)
    p, q = eq.saturating_pair(0.3, 4, 3)
    report = eq.verify_bound(p, q)
    assert report["saturated"]
    assert report["epsilon"] == pytest.approx(0.3)

    trace = eq.walk(p, q)
    assert trace["violated_invariant"] == ""
    gaps = [s["gap"] for s in trace["steps"]]
    tvs = [s["tv"] for s in trace["steps"]]
    assert all(b >= a - 1e-9 for a, b in zip(gaps, gaps[1:]))
    assert all(b <= a + 1e-9 for a, b in zip(tvs, tvs[1:]))
    final_q = trace["final_q"]
    assert eq.conditional_entropy(final_q) <= 1e-9


def test_walk_precondition():
    p = [[1.0, 0.0], [0.0, 0.0]]
    q = [[0.0, 0.0], [0.0, 1.0]]
    with pytest.raises(RuntimeError):
        eq.walk(p, q)


def test_majorization():
    assert eq.majorizes([1.0, 0.0], [0.5, 0.5])
    assert not eq.majorizes([0.4, 0.4, 0.2], [0.5, 0.3, 0.2])
    assert eq.t_transform_from_unjust([0.7, 0.3], [0.6, 0.4]) == pytest.approx(0.25)
    chain = eq.witness_chain([1.0, 0.0, 0.0], [1 / 3, 1 / 3, 1 / 3])
    assert len(chain) <= 2
    v = [1.0, 0.0, 0.0]
    for i, j, t in chain:
        v = eq.apply_t_transform(v, i, j, t)
    assert v == pytest.approx([1 / 3, 1 / 3, 1 / 3], abs=1e-8)
    assert eq.majorant_vector(4, 2.5) == pytest.approx([1.0, 1.0, 0.5, 0.0])


def test_quantum_bounds():
    assert eq.winter_bound(1.0, 2) == pytest.approx(4.0)
    assert eq.wilde_bound(0.25, 2) == pytest.approx(0.25 * math.log2(3) + eq.binary_entropy(0.25))
    phi, iso = eq.isotropic_pair(2, 0.25)
    gap = abs(eq.conditional_vn_entropy(2, 2, phi) - eq.conditional_vn_entropy(2, 2, iso))
    assert gap == pytest.approx(eq.wilde_bound(0.25, 2), abs=1e-9)
    assert eq.trace_distance(phi, iso) == pytest.approx(0.25, abs=1e-10)
    assert eq.von_neumann_entropy(phi) == pytest.approx(0.0, abs=1e-9)


def test_spinalign_surface():
    assert eq.fan_norm([[3, 0, 0], [0, 1, 0], [0, 0, 0.5]], 2) == pytest.approx(4.0)
    assert eq.schatten_norm([[3, 0], [0, 4]], 2.0) == pytest.approx(5.0)
    assert not eq.feasible_projector_pair(2, 2, 0.0, 3)
    p1, p2, overlap = eq.optimal_projector_pair(1, 1, 0.5, 2)
    assert overlap == pytest.approx(0.5)
    spec = eq.two_projector_spectrum(2.0, 1.0, [0.5])
    assert spec[0] == pytest.approx((3 + math.sqrt(3)) / 2)


def test_erasure():
    assert eq.erasure_capacity(0.25, 4) == pytest.approx(1.0)
    assert eq.q4(0.1) == pytest.approx(0.0523)
    t = eq.improvement_threshold()
    assert t == pytest.approx((5 - math.sqrt(13)) / 6, abs=1e-14)
    assert abs(eq.q4(t) - t) <= 1e-12
    assert eq.r4_bound(0.5) == pytest.approx(0.5)
    assert eq.ekr_recovery_bound(1, 0.3) == pytest.approx(0.7)
