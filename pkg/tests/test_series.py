"""Series arithmetic, coefficient extraction, and recentering."""

import json

import numpy as np
import pytest

from bohrlab.series import (
    DiskDomain,
    PowerSeries,
    TailBound,
    add,
    differentiate,
    mul,
    numeric_taylor,
    recenter_affine,
    recenter_affine_inverse,
    reconstruction_error,
)

from oracles import automorphism_coeffs, random_decaying_series


def test_add_cancellation():
    p = PowerSeries.polynomial([1.0, 1.0])
    q = PowerSeries.polynomial([1.0, -1.0])
    s = add(p, q)
    assert np.allclose(s.coeffs, [2.0, 0.0])


def test_add_identity_preserves_series_and_tail():
    p = PowerSeries(np.array([0.3, 0.2, 0.1]), TailBound(0.5, 2.0))
    z = PowerSeries.zero(order=2)
    s = add(p, z)
    assert np.array_equal(s.coeffs, p.coeffs)
    assert s.tail == TailBound(0.5, 2.0)


def test_add_mismatched_orders_truncates_and_drops_tail():
    p = PowerSeries(np.array([1.0, 2.0, 3.0, 4.0]), TailBound(0.1, 1.0))
    q = PowerSeries(np.array([1.0, 1.0]), TailBound(0.1, 1.0))
    s = add(p, q)
    assert s.order == 1
    assert np.allclose(s.coeffs, [2.0, 3.0])
    assert s.tail is None


def test_mul_difference_of_squares():
    p = PowerSeries.polynomial([1.0, 1.0, 0.0])
    q = PowerSeries.polynomial([1.0, -1.0, 0.0])
    s = mul(p, q)
    assert np.allclose(s.coeffs, [1.0, 0.0, -1.0])


def test_mul_by_one_identity():
    rng = np.random.default_rng(7)
    p = PowerSeries(random_decaying_series(rng, 12))
    one = PowerSeries.constant(1.0, order=12)
    assert np.allclose(mul(p, one).coeffs, p.coeffs, atol=0, rtol=0)


def test_evaluation_homomorphism_add_mul():
    # zero-padded operands keep the truncated product exact
    rng = np.random.default_rng(11)
    for trial in range(20):
        ca = np.concatenate([random_decaying_series(rng, 10), np.zeros(30)])
        cb = np.concatenate([random_decaying_series(rng, 10), np.zeros(30)])
        p, q = PowerSeries(ca), PowerSeries(cb)
        z = 0.5 * np.exp(2j * np.pi * rng.uniform())
        assert abs(add(p, q).evaluate(z) - (p.evaluate(z) + q.evaluate(z))) < 1e-12
        z = 0.3 * np.exp(2j * np.pi * rng.uniform())
        assert abs(mul(p, q).evaluate(z) - p.evaluate(z) * q.evaluate(z)) < 1e-12


def test_differentiate_matches_finite_difference():
    rng = np.random.default_rng(3)
    p = PowerSeries(random_decaying_series(rng, 16))
    dp = differentiate(p)
    h = 1e-6
    for z in (0.1 + 0.2j, -0.3j, 0.25):
        fd = (p.evaluate(z + h) - p.evaluate(z - h)) / (2 * h)
        assert abs(dp.evaluate(z) - fd) < 1e-7


def test_numeric_taylor_monomial_exact():
    p = numeric_taylor(lambda z: z**2, 4)
    assert np.allclose(p.coeffs, [0, 0, 1, 0, 0], atol=1e-10)


def test_numeric_taylor_polynomial_exactness():
    rng = np.random.default_rng(5)
    for _ in range(10):
        coeffs = random_decaying_series(rng, 16)
        ref = PowerSeries(coeffs)
        p = numeric_taylor(ref.evaluate, 16)
        assert np.max(np.abs(p.coeffs - coeffs)) < 1e-10
    # larger orders need a larger sampling radius to beat roundoff growth
    coeffs = random_decaying_series(rng, 64)
    ref = PowerSeries(coeffs)
    p = numeric_taylor(ref.evaluate, 64, rho=0.9)
    assert np.max(np.abs(p.coeffs - coeffs)) < 1e-10


def test_numeric_taylor_automorphism_closed_form():
    a = 0.5
    p = numeric_taylor(lambda z: (a - z) / (1 - a * z), 24, rho=0.75)
    assert np.max(np.abs(p.coeffs - automorphism_coeffs(a, 24))) < 1e-10


def test_numeric_taylor_reconstructs_on_half_radius():
    a = 0.7
    f = lambda z: (a - z) / (1 - a * z)
    p = numeric_taylor(f, 32, rho=0.6)
    assert reconstruction_error(p, f, radius=0.3) < 1e-10


def test_numeric_taylor_rejects_bad_input():
    with pytest.raises(ValueError):
        numeric_taylor(lambda z: z * np.nan, 4)  # non-finite samples
    with pytest.raises(ValueError):
        numeric_taylor(lambda z: z, 0)
    with pytest.raises(ValueError):
        numeric_taylor(lambda z: z, 4, rho=1.5)
    with pytest.raises(ValueError):
        numeric_taylor(lambda z: z, 4, samples=8)


def test_recenter_identity_at_zero():
    rng = np.random.default_rng(9)
    p = PowerSeries(random_decaying_series(rng, 10))
    assert np.array_equal(recenter_affine(p, 0.0).coeffs, p.coeffs)


def test_recenter_single_term_scaling():
    p = PowerSeries(np.array([0.0, 1.0, 0.0]))
    g = recenter_affine(p, 0.5)
    assert np.allclose(g.coeffs, [0.0, 0.5, 0.0])


def test_recenter_evaluation_oracle():
    # g(z) = sum alpha_n (z-gamma)^n must equal G((z-gamma)/(1-gamma))
    rng = np.random.default_rng(13)
    for gamma in (0.1, 0.5, 0.8):
        alpha = PowerSeries(random_decaying_series(rng, 24))
        G = recenter_affine(alpha, gamma)
        z = gamma + 0.1
        lhs = G.evaluate((z - gamma) / (1 - gamma))
        rhs = alpha.evaluate(z - gamma)
        assert abs(lhs - rhs) < 1e-12


def test_recenter_roundtrip_and_domain_errors():
    rng = np.random.default_rng(1)
    p = PowerSeries(random_decaying_series(rng, 12))
    back = recenter_affine_inverse(recenter_affine(p, 0.4), 0.4)
    assert np.max(np.abs(back.coeffs - p.coeffs)) < 1e-14
    for bad in (-0.1, 1.0, 1.5):
        with pytest.raises(ValueError):
            recenter_affine(p, bad)


def test_recenter_tail_metadata():
    p = PowerSeries(np.array([1.0, 0.5]), TailBound(0.5, 1.0))
    assert recenter_affine(p, 0.5).tail == TailBound(0.25, 1.0)
    assert recenter_affine_inverse(p, 0.5).tail is None  # 0.5/0.5 = 1 is not a decay rate
    q = PowerSeries(np.array([1.0, 0.5]), TailBound(0.2, 1.0))
    assert recenter_affine_inverse(q, 0.5).tail == TailBound(0.4, 1.0)


def test_tail_bound_validation_and_soundness_spot_check():
    with pytest.raises(ValueError):
        TailBound(1.0, 1.0)
    with pytest.raises(ValueError):
        TailBound(0.5, -1.0)
    # a genuinely geometric series satisfies its own certificate on the
    # stored range beyond half the order
    q, C = 0.7, 2.0
    coeffs = C * q ** np.arange(41)
    p = PowerSeries(coeffs, TailBound(q, C))
    n = np.arange(41)
    stored = np.abs(p.coeffs[n > 20])
    assert np.all(stored <= C * q ** n[n > 20] * (1 + 1e-12))


def test_series_validation():
    with pytest.raises(ValueError):
        PowerSeries(np.array([]))
    with pytest.raises(ValueError):
        PowerSeries(np.array([1.0, np.nan]))
    with pytest.raises(ValueError):
        PowerSeries(np.array([1.0, np.inf]))
    p = PowerSeries(np.array([1.0]))
    with pytest.raises(ValueError):
        p.coeffs[0] = 2.0  # frozen buffer


def test_json_round_trip_schema():
    p = PowerSeries(np.array([1.0 + 2.0j, 3.0]), TailBound(0.25, 1.5))
    data = p.to_dict()
    assert set(data) == {"coeffs", "order", "tail"}
    assert data["coeffs"] == [[1.0, 2.0], [3.0, 0.0]]
    assert data["order"] == 1
    assert data["tail"] == {"q": 0.25, "C": 1.5}
    q = PowerSeries.from_dict(json.loads(json.dumps(data)))
    assert np.array_equal(q.coeffs, p.coeffs)
    assert q.tail == p.tail
    bare = PowerSeries(np.array([1.0]))
    assert bare.to_dict()["tail"] is None
    assert PowerSeries.from_dict(bare.to_dict()).tail is None


def test_disk_domain_geometry():
    for gamma in np.linspace(0.0, 0.95, 25):
        dom = DiskDomain(float(gamma))
        assert abs(dom.radius - abs(dom.center) - 1.0) < 1e-12
    dom = DiskDomain(0.5)
    assert dom.contains(0.999)
    assert dom.contains(-2.9)
    assert not dom.contains(1.001)
    # the affine maps are mutually inverse and send the unit circle to the boundary
    z = 0.7 * np.exp(1j * np.linspace(0, 2 * np.pi, 17))
    assert np.max(np.abs(dom.to_unit_disk(dom.from_unit_disk(z)) - z)) < 1e-14
    assert np.all(np.abs(dom.from_unit_disk(z) - dom.center) < dom.radius)
    with pytest.raises(ValueError):
        DiskDomain(1.0)
