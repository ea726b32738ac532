import math

import numpy as np
import pytest

import levyarc as la


def test_k0_closed_form():
    assert la.k0(1.0) == pytest.approx(0.42102443824070833, rel=1e-13)
    assert la.k0_laplace(1.0) == pytest.approx(1.0)
    with pytest.raises(la.DomainError):
        la.k0(0.0)


def test_ex1_transform_is_k0():
    m = la.exp_power(math.pi / 4, -0.5, 1.0, 0.5)
    r = np.array([0.1, 0.5, 1.0, 3.0])
    got = la.transform_density(m, "a1", r)[0]
    want = np.array([la.k0(x) for x in r])
    assert np.max(np.abs(got / want - 1)) < 1e-6


def test_transform_json_and_inversion():
    m = la.exp_power(1.0, 0.0, 1.0, 2.0)
    out = la.transform(m, "a1")
    assert out["components"][0]["density"]["kind"] == "table"
    u, tails = la.invert_arcsine1(la.transform(m, "a1"), grid=np.geomspace(0.05, 3.0, 20))
    assert np.max(np.abs(tails[0] - la.tail(m, u)[0])) < 1e-5
    with pytest.raises(la.NotInRange):
        la.invert_arcsine1(la.atoms([(1.0, 1.0)]))


def test_classify_and_errors():
    assert la.classify(la.exp_power(1.0, 0.0, 1.0, 1.0), "jurek")["verdict"] == "member"
    assert la.classify(la.fixture_input("JUREK_CE"), "jurek")["verdict"] == "non_member"
    with pytest.raises(la.ConfigError):
        la.transform(la.atoms([(1.0, 1.0)]), "nope")
    with pytest.raises(la.MalformedMeasure):
        la.density({"d": 0, "components": []}, [1.0])


def test_triplet_and_sampling():
    t = la.triplet([[0.25]], [0.2], la.atoms([(1.0, 1.5)]))
    z = np.linspace(-3, 3, 13)
    cf = la.char_fn(t, z)
    assert cf[6] == 1.0
    assert np.all(np.abs(cf) <= 1.0 + 1e-15)
    draws, _ = la.sample(t, "cos_pi_half", paths=20000, steps=200, seed=5)
    assert draws.shape == (20000, 1)
    again, _ = la.sample(t, "cos_pi_half", paths=20000, steps=200, seed=5)
    assert np.array_equal(draws, again)
    ecf = np.exp(1j * np.outer(z, draws[:, 0])).mean(axis=1)
    assert np.max(np.abs(ecf - la.transformed_char_fn(t, "cos_pi_half", z))) < 0.03
    tt = la.transform_triplet(la.triplet([[2.0]], [1.0], la.atoms([])), "cos_pi_half")
    assert tt["Sigma"][0][0] == pytest.approx(1.0)
    assert tt["gamma"][0] == pytest.approx(2 / math.pi)


def test_checks_available():
    assert len(la.check_names()) == 14
    r = la.run_check("frac_half")
    assert r["pass"] and r["measured"] < r["tolerance"]
