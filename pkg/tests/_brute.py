"""Deliberately naive reference implementations used only as test oracles.

Everything here enumerates instead of using closed forms, so agreement with
the package's fast paths is meaningful evidence.
"""

from itertools import combinations, combinations_with_replacement, product

from simplicial_ideals import Monomial


def brute_symbolic_member(n, c, m, mono):
    """Check every c-subset of coordinates, no sorting shortcut."""
    return all(sum(mono.exps[i] for i in sub) >= m
               for sub in combinations(range(n + 1), c))


def _minimalize(monos):
    kept = []
    for mono in sorted(monos, key=lambda x: (x.degree, x.exps)):
        if not any(other.divides(mono) for other in kept):
            kept.append(mono)
    return kept


def brute_symbolic_gens(n, c, m):
    """Minimal generators of the m-th symbolic power by full enumeration.

    Only vectors with entries <= m are scanned: capping an entry at m keeps
    every c-subset sum at or above m (the capped entry alone contributes m to
    any subset containing it), and the capped vector divides the original, so
    no minimal generator has an entry above m.
    """
    members = [Monomial(vec) for vec in product(range(m + 1), repeat=n + 1)
               if all(sum(vec[i] for i in sub) >= m
                      for sub in combinations(range(n + 1), c))]
    return _minimalize(members)


def brute_skeleton_gens(n, c):
    """Squarefree monomials of degree n-c+2, straight from the definition."""
    gens = []
    for sub in combinations(range(n + 1), n - c + 2):
        vec = [0] * (n + 1)
        for i in sub:
            vec[i] = 1
        gens.append(Monomial(vec))
    return gens


def brute_power_gens(n, c, r):
    """Minimal generators of I(n,c)^r by expanding all r-fold products."""
    base = brute_skeleton_gens(n, c)
    prods = set()
    for combo in combinations_with_replacement(base, r):
        acc = Monomial.unit(n)
        for factor in combo:
            acc = acc * factor
        prods.add(acc)
    return _minimalize(prods)


def brute_ordinary_member(n, c, r, mono, gens=None):
    """Divisibility against the expanded generating set of I(n,c)^r."""
    if gens is None:
        gens = brute_power_gens(n, c, r)
    return any(g.divides(mono) for g in gens)
