"""Iterative plurality voting dynamics, expected dynamic price of anarchy and rate classification."""

import json
from fractions import Fraction

from . import _itervote
from ._itervote import InfeasibleCondition, InvalidInput, ResourceLimit, identity_suites

IMPARTIAL_CULTURE = tuple(Fraction(1, 6) for _ in range(6))


def _q(values):
    return [str(Fraction(v)) for v in values]


def _value(d):
    exact = d["exact"]
    return Fraction(exact) if exact is not None else d["float"]


def potential_winners(counts):
    return _itervote.potential_winners(list(counts))


def equilibrium_winners(counts, oracle=False):
    if oracle:
        return _itervote.equilibrium_winners_oracle(list(counts))
    return _itervote.equilibrium_winners(list(counts))


def adversarial_loss(counts, u):
    return Fraction(_itervote.adversarial_loss(list(counts), _q(u)))


def exact_eadpoa(pi, u, n, mode="exact", threads=0):
    """Returns (value, {W: value}) with Fractions in exact mode and floats otherwise."""
    r = _itervote.exact_eadpoa(_q(pi), _q(u), n, mode, threads)
    return _value(r), {w: _value(v) for w, v in r["per_W"].items()}


def poa_bar(pi, u, n, W, mode="exact"):
    return _value(_itervote.poa_bar(_q(pi), _q(u), n, list(W), mode))


def tie_probability(pi, n, W, mode="exact"):
    return _value(_itervote.tie_probability(_q(pi), n, list(W), mode))


def classify(pi, u, epsilon=None):
    eps = None if epsilon is None else str(Fraction(epsilon))
    return json.loads(_itervote.classify_json(_q(pi), _q(u), eps))


def rate_fit(series, min_points=4):
    return _itervote.rate_fit([(int(n), float(v)) for n, v in series], min_points)


def estimate_eadpoa(pi, u, n, samples, seed=1, threads=0):
    return _itervote.estimate_eadpoa(_q(pi), _q(u), n, samples, seed, threads)


def run_identity_suite(suite, q_max=300, u_max=300):
    return _itervote.run_identity_suite(suite, q_max, u_max)


__all__ = [
    "IMPARTIAL_CULTURE",
    "InfeasibleCondition",
    "InvalidInput",
    "ResourceLimit",
    "adversarial_loss",
    "classify",
    "equilibrium_winners",
    "estimate_eadpoa",
    "exact_eadpoa",
    "identity_suites",
    "poa_bar",
    "potential_winners",
    "rate_fit",
    "run_identity_suite",
    "tie_probability",
]
