from fractions import Fraction

import pytest

import itervote

IC = itervote.IMPARTIAL_CULTURE
U = (2, 1, 0)


def test_potential_and_equilibrium_winners():
    assert itervote.potential_winners([5, 5, 2, 0, 0, 0]) == [1, 2]
    assert itervote.equilibrium_winners([5, 5, 2, 0, 0, 0]) == itervote.equilibrium_winners(
        [5, 5, 2, 0, 0, 0], oracle=True
    )
    assert itervote.adversarial_loss([5, 5, 2, 0, 0, 0], U) == -7


def test_exact_eadpoa_small_n():
    value, per_w = itervote.exact_eadpoa(IC, U, 3)
    assert value == Fraction(-1, 9)
    assert sum(per_w.values()) == value
    value, _ = itervote.exact_eadpoa(IC, (1, 1, 1), 7)
    assert value == 0


def test_float_mode_matches_exact():
    exact, _ = itervote.exact_eadpoa(IC, U, 10)
    approx, _ = itervote.exact_eadpoa(IC, U, 10, mode="float")
    assert approx == pytest.approx(float(exact), rel=1e-12)


def test_tie_probability_and_poa_bar():
    assert itervote.tie_probability(IC, 6, [1, 2, 3]) == Fraction(10, 81)
    assert itervote.poa_bar(IC, U, 20, [1, 2]) < 0


def test_classify_impartial_culture():
    report = itervote.classify(IC, U)
    assert report["combined"] == "-Theta(1)"
    assert report["lambda"] == ["1/3", "1/3", "1/3"]


def test_classify_accepts_decimals_as_rationals():
    report = itervote.classify(["0.35", "0.25", "0.10", "0.10", "0.05", "0.15"], U)
    assert report["w_star"] == [1, 2]


def test_estimate_is_deterministic():
    a = itervote.estimate_eadpoa(IC, U, 12, 5000, seed=3, threads=1)
    b = itervote.estimate_eadpoa(IC, U, 12, 5000, seed=3, threads=4)
    assert a == b
    exact, _ = itervote.exact_eadpoa(IC, U, 12)
    assert abs(a["mean"] - float(exact)) < 5 * a["stderr"]


def test_identity_suite():
    reports = itervote.run_identity_suite("binomial-sums", q_max=10)
    assert len(reports) == 80
    assert all(r["status"] == "exact-match" for r in reports)


def test_rate_fit():
    fit = itervote.rate_fit([(n, n ** 0.5) for n in (100, 200, 400, 800)])
    assert fit["all"]["slope"] == pytest.approx(0.5)


def test_errors():
    with pytest.raises(ValueError):
        itervote.exact_eadpoa([1, 2], U, 3)
    with pytest.raises(itervote.ResourceLimit):
        itervote.poa_bar(IC, U, 500, [1, 2])
    with pytest.raises(ValueError):
        itervote.run_identity_suite("nonexistent")
