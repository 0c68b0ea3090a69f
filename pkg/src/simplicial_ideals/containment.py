"""Containment between powers of skeleton ideals, and resurgence.

The central question is for which pairs (m, r) the m-th symbolic power of
I(n,c) sits inside the r-th ordinary power.  For these ideals the answer is
a closed-form inequality in exact integer arithmetic; this module implements
that criterion, a brute-force oracle that re-decides the question from the
generators, a sufficient condition for containments between symbolic powers
of different codimensions, and the resurgence sup { m/r : noncontainment }
together with its witness sequence.

All ratios are ``fractions.Fraction``; floating point never enters a
decision.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParameterError
from .simplicial import (
    SimplicialSpec,
    ordinary_member,
    symbolic_member,
    symbolic_power,
)


def _require_positive(**params):
    for name, value in params.items():
        if value < 1:
            raise ParameterError(f"{name}={value} must be >= 1")


def decompose_exponent(c, m):
    """Write m = k*c - p with 0 <= p < c; returns (k, p), k = ceil(m/c)."""
    _require_positive(c=c, m=m)
    k = -(-m // c)
    return k, k * c - m


def containment_criterion(n, c, m, r):
    """Exact test for: m-th symbolic power of I(n,c) inside r-th ordinary power.

    With m = k*c - p, 0 <= p < c, the containment holds iff
    r * (n - c + 2) <= (n + 1) * k - p.  This is an if-and-only-if; the
    boundary case of equality is a containment.
    """
    SimplicialSpec(n, c)
    _require_positive(m=m, r=r)
    k, p = decompose_exponent(c, m)
    return r * (n - c + 2) <= (n + 1) * k - p


def containment_oracle(n, c, m, r, max_candidates=None):
    """Decide the same containment by brute force: every minimal generator
    of the symbolic power must pass the ordinary-power membership test."""
    spec = SimplicialSpec(n, c)
    _require_positive(m=m, r=r)
    sym = symbolic_power(spec, m, max_candidates=max_candidates)
    return all(ordinary_member(spec, r, g) for g in sym.gens)


def symbolic_containment_sufficient(c, d, m, s):
    """Sufficient condition for: m-th symbolic power of I(n,c) inside the
    s-th symbolic power of I(n,d) (any ambient n): c <= d and s*c <= m*d.

    One-directional -- the containment can hold while this returns False.
    """
    _require_positive(c=c, d=d, m=m, s=s)
    return c <= d and s * c <= m * d


def symbolic_containment_oracle(n, c, d, m, s, max_candidates=None):
    """Decide the cross-codimension symbolic containment from the generators.

    Membership in the target symbolic power is the closed-form d-subset test,
    so only the source ideal is ever enumerated.
    """
    src = SimplicialSpec(n, c)
    dst = SimplicialSpec(n, d)
    _require_positive(m=m, s=s)
    sym = symbolic_power(src, m, max_candidates=max_candidates)
    return all(symbolic_member(dst, s, g) for g in sym.gens)


def resurgence(n, c):
    """Exact resurgence of I(n,c): the reduced rational c*(n-c+2)/(n+1)."""
    SimplicialSpec(n, c)
    return Fraction(c * (n - c + 2), n + 1)


def resurgence_witness(n, c, k):
    """The k-th noncontainment witness pair (m_k, r_k).

    m_k = k*c and r_k is the smallest integer strictly greater than
    (n+1)*k/(n-c+2) -- i.e. floor + 1 even when the quotient is integral.
    The pair is guaranteed noncontained and m_k/r_k approaches the
    resurgence from below as k grows.
    """
    SimplicialSpec(n, c)
    _require_positive(k=k)
    m = k * c
    r = (n + 1) * k // (n - c + 2) + 1
    return m, r


def empirical_resurgence_sup(n, c, max_m, max_r, use_oracle=False,
                             max_candidates=None):
    """Largest m/r with noncontainment over the box 1..max_m x 1..max_r.

    Returns (sup, (m, r)) as an exact Fraction with the first pair attaining
    it (scanning m then r ascending), or (None, None) if every pair in the
    box is a containment.  The closed-form criterion decides noncontainment
    unless ``use_oracle`` forces the brute-force route.
    """
    SimplicialSpec(n, c)
    _require_positive(max_m=max_m, max_r=max_r)
    best = None
    argmax = None
    for m in range(1, max_m + 1):
        for r in range(1, max_r + 1):
            if use_oracle:
                contained = containment_oracle(n, c, m, r,
                                               max_candidates=max_candidates)
            else:
                contained = containment_criterion(n, c, m, r)
            if contained:
                continue
            ratio = Fraction(m, r)
            if best is None or ratio > best:
                best = ratio
                argmax = (m, r)
    return best, argmax


def smallest_containing_symbolic_power(n, c, r, use_oracle=False,
                                       max_candidates=None):
    """Least m with the (m, r) containment.  Well defined because the
    criterion bound grows strictly with m; m = c*r always succeeds, which
    caps the scan."""
    SimplicialSpec(n, c)
    _require_positive(r=r)
    for m in range(1, c * r + 1):
        if use_oracle:
            if containment_oracle(n, c, m, r, max_candidates=max_candidates):
                return m
        elif containment_criterion(n, c, m, r):
            return m
    raise AssertionError(f"no containing m up to c*r for n={n} c={c} r={r}")


def containment_boundary(n, c, max_r, use_oracle=False, max_candidates=None):
    """Table [(r, least containing m)] for r = 1..max_r.

    Boundary data only -- recorded for inspection, no conclusion about
    optimality of any general bound is drawn from it.
    """
    return [(r, smallest_containing_symbolic_power(
        n, c, r, use_oracle=use_oracle, max_candidates=max_candidates))
        for r in range(1, max_r + 1)]


@dataclass(frozen=True)
class ContainmentVerdict:
    """A containment query with its fast-path answer and optional oracle check."""

    query: dict
    fast_path: bool
    oracle: bool = None
    agree: bool = None


def check_containment(n, c, m, r, with_oracle=False, max_candidates=None):
    """Verdict for the symbolic-in-ordinary containment of I(n,c)."""
    fast = containment_criterion(n, c, m, r)
    oracle = agree = None
    if with_oracle:
        oracle = containment_oracle(n, c, m, r, max_candidates=max_candidates)
        agree = fast == oracle
    return ContainmentVerdict(
        query={"n": n, "c": c, "m": m, "r": r},
        fast_path=fast, oracle=oracle, agree=agree)


def check_symbolic_containment(n, c, d, m, s, with_oracle=False,
                               max_candidates=None):
    """Verdict for the symbolic-in-symbolic containment I(n,c) -> I(n,d).

    The fast path is only sufficient, so fast=False with oracle=True is a
    legitimate outcome (agree records plain equality of the two answers).
    """
    SimplicialSpec(n, c)
    SimplicialSpec(n, d)
    fast = symbolic_containment_sufficient(c, d, m, s)
    oracle = agree = None
    if with_oracle:
        oracle = symbolic_containment_oracle(
            n, c, d, m, s, max_candidates=max_candidates)
        agree = fast == oracle
    return ContainmentVerdict(
        query={"n": n, "c": c, "d": d, "m": m, "s": s},
        fast_path=fast, oracle=oracle, agree=agree)


@dataclass(frozen=True)
class ResurgenceReport:
    """Exact resurgence with witness samples and an optional box sweep."""

    n: int
    c: int
    rho: Fraction
    witnesses: list = field(default_factory=list)  # (k, m_k, r_k, ratio)
    box: tuple = None
    empirical_sup: Fraction = None
    empirical_argmax: tuple = None


def resurgence_report(n, c, witness_count=0, box=None, use_oracle=False,
                      max_candidates=None):
    rho = resurgence(n, c)
    witnesses = []
    for k in range(1, witness_count + 1):
        m, r = resurgence_witness(n, c, k)
        witnesses.append((k, m, r, Fraction(m, r)))
    sup = argmax = None
    if box is not None:
        max_m, max_r = box
        sup, argmax = empirical_resurgence_sup(
            n, c, max_m, max_r, use_oracle=use_oracle,
            max_candidates=max_candidates)
    return ResurgenceReport(n=n, c=c, rho=rho, witnesses=witnesses,
                            box=tuple(box) if box else None,
                            empirical_sup=sup, empirical_argmax=argmax)
