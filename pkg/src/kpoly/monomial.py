"""Brute-force and closed-form oracles for square-free ideals generated by
Borel-fixed monomial primes: inclusion-exclusion Hilbert and K-polynomials,
the shellable per-facet refinement, and direct Hilbert-function counting.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .lattice import (
    CapExceeded,
    IntPolynomial,
    Point,
    PointSet,
    SignedSupport,
    as_point,
    dominates,
    vec_max,
    vec_sub,
)

DEFAULT_SUBSET_CAP = 20
CAP_ENV_VAR = "KPOLY_CAP_SUBSETS"


def subset_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV_VAR)
    return int(env) if env else DEFAULT_SUBSET_CAP


@dataclass(frozen=True)
class BorelPrime:
    """Monomial prime generated by the first a_i variables of each component,
    inside the ambient with m_i + 1 variables of each degree e_i."""

    a: Point
    m: Point

    def __post_init__(self):
        a = as_point(self.a)
        m = as_point(self.m, len(a))
        if not dominates(m, a):
            raise ValueError(f"prime vector {a} exceeds ambient {m}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "m", m)

    @property
    def codim(self) -> int:
        return sum(self.a)


@dataclass(frozen=True)
class SquareFreeIdeal:
    """Intersection of pairwise incomparable Borel primes, stored as the
    tuple of a-vectors in the caller's order (the order matters for the
    shellable refinement)."""

    m: Point
    primes: tuple[Point, ...]

    def __post_init__(self):
        m = as_point(self.m)
        primes = tuple(as_point(a, len(m)) for a in self.primes)
        if not primes:
            raise ValueError("an ideal needs at least one minimal prime")
        for a in primes:
            if not dominates(m, a):
                raise ValueError(f"prime vector {a} exceeds ambient {m}")
        for a, b in itertools.combinations(primes, 2):
            if dominates(a, b) or dominates(b, a):
                raise ValueError(f"primes {a} and {b} are comparable")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "primes", primes)

    @property
    def ambient_p(self) -> int:
        return len(self.m)

    def borel_primes(self) -> list[BorelPrime]:
        return [BorelPrime(a, self.m) for a in self.primes]


def prime_sum(primes) -> BorelPrime:
    """Sum of Borel primes = componentwise max of their a-vectors."""
    primes = list(primes)
    if not primes:
        raise ValueError("sum of an empty prime list")
    m = primes[0].m
    a = primes[0].a
    for q in primes[1:]:
        if q.m != m:
            raise ValueError("primes live in different ambients")
        a = vec_max(a, q.a)
    return BorelPrime(a, m)


def hilbert_poly_prime(q: BorelPrime) -> SignedSupport:
    """Single binomial-product term at n = m - a with coefficient 1."""
    for i, (ai, mi) in enumerate(zip(q.a, q.m)):
        if ai > mi:
            raise ValueError(f"irrelevant component {i + 1}: a_i = {ai} > m_i = {mi}")
    return SignedSupport(len(q.m), {vec_sub(q.m, q.a): 1})


def _ie_coefficients_subsets(gens: list[Point], cap: int) -> dict[Point, int]:
    """Signed subset sums grouped by join, by Gray-code iteration over 2^k - 1
    nonempty subsets (incremental max on insert, recompute on removal)."""
    k = len(gens)
    if k > cap:
        raise CapExceeded(
            f"inclusion-exclusion over {k} primes exceeds the 2^{cap} subset cap"
        )
    coeffs: dict[Point, int] = {}
    members: list[bool] = [False] * k
    size = 0
    current: Point | None = None
    prev_gray = 0
    for g in range(1, 1 << k):
        gray = g ^ (g >> 1)
        bit = (gray ^ prev_gray).bit_length() - 1
        prev_gray = gray
        if members[bit]:
            members[bit] = False
            size -= 1
            current = None
            for i in range(k):
                if members[i]:
                    current = gens[i] if current is None else vec_max(current, gens[i])
        else:
            members[bit] = True
            size += 1
            current = gens[bit] if current is None else vec_max(current, gens[bit])
        if size == 0:
            continue
        sign = 1 if (size - 1) % 2 == 0 else -1
        coeffs[current] = coeffs.get(current, 0) + sign
    return {v: c for v, c in coeffs.items() if c}


def _ie_coefficients_lattice(gens: list[Point], closure_cap: int = 200_000) -> dict[Point, int]:
    """Same signed sums, factored through the join closure of the generators:
    on the closure L, sum_{w <= v} c_w = 1 for every v, which determines the
    c_v by a direct recursion in O(|L|^2)."""
    closure = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for x in frontier:
            for g in gens:
                y = vec_max(x, g)
                if y not in closure:
                    new.add(y)
        closure.update(new)
        frontier = new
        if len(closure) > closure_cap:
            raise CapExceeded(f"join closure exceeded {closure_cap} elements")
    order = sorted(closure, key=lambda v: (sum(v), v))
    coeffs: dict[Point, int] = {}
    for idx, v in enumerate(order):
        below = sum(
            coeffs[w] for w in order[:idx] if w != v and dominates(v, w)
        )
        coeffs[v] = 1 - below
    return {v: c for v, c in coeffs.items() if c}


def ie_join_coefficients(J: SquareFreeIdeal, method: str = "auto", cap: int | None = None) -> dict[Point, int]:
    """Coefficient of each prime sum p_v in the inclusion-exclusion expansion.

    method: "subsets" (Gray-code, capped at 2^cap), "lattice" (join-closure
    recursion), or "auto" (subsets when feasible, lattice beyond the cap).
    """
    gens = list(J.primes)
    limit = subset_cap(cap)
    if method == "subsets":
        return _ie_coefficients_subsets(gens, limit)
    if method == "lattice":
        return _ie_coefficients_lattice(gens)
    if method == "auto":
        if len(gens) <= limit:
            return _ie_coefficients_subsets(gens, limit)
        return _ie_coefficients_lattice(gens)
    raise ValueError(f"unknown IE method {method!r}")


def hilbert_poly_ie(J: SquareFreeIdeal, method: str = "auto", cap: int | None = None) -> SignedSupport:
    """Inclusion-exclusion Hilbert polynomial: signed binomial-product terms
    at m - join over all nonempty prime subsets, like terms combined."""
    coeffs = ie_join_coefficients(J, method, cap)
    return SignedSupport(J.ambient_p, {vec_sub(J.m, v): c for v, c in coeffs.items()})


def k_poly_ie(J: SquareFreeIdeal, method: str = "auto", cap: int | None = None) -> IntPolynomial:
    """Inclusion-exclusion twisted K-polynomial: the prime p_a contributes z^a."""
    coeffs = ie_join_coefficients(J, method, cap)
    return IntPolynomial(J.ambient_p, coeffs)


def msupp_to_ideal(msupp: PointSet, m) -> SquareFreeIdeal:
    """Primes p_{m - n} for n in msupp, ordered by natural lex on msupp
    (which is the shelling order of the associated facets)."""
    m = as_point(m, msupp.ambient_p)
    if not msupp:
        raise ValueError("empty multidegree support")
    sums = {sum(q) for q in msupp}
    if len(sums) > 1:
        raise ValueError("multidegree support must be homogeneous")
    for n in msupp:
        if not dominates(m, n):
            raise ValueError(f"point {n} exceeds ambient {m}")
    return SquareFreeIdeal(m, tuple(vec_sub(m, n) for n in sorted(msupp)))


def hilbert_poly_shellable(J: SquareFreeIdeal) -> SignedSupport:
    """Per-facet refinement of the IE formula for a shelling order.

    Assumes the primes of J are listed in a shelling order of the associated
    facets (msupp_to_ideal produces one).  Each facet contributes its own
    term minus an inclusion-exclusion over the codimension-(c+1) pairwise
    sums with its predecessors; those sums are checked at runtime to be the
    facet's prime plus a single variable.
    """
    codims = {sum(a) for a in J.primes}
    if len(codims) > 1:
        raise ValueError("shellable refinement needs primes of equal codimension")
    c = codims.pop()
    acc: dict[Point, int] = {}

    def add(n: Point, delta: int):
        v = acc.get(n, 0) + delta
        if v:
            acc[n] = v
        else:
            acc.pop(n, None)

    for j, aj in enumerate(J.primes):
        add(vec_sub(J.m, aj), 1)
        block: list[Point] = []
        seen = set()
        for l in range(j):
            q = vec_max(J.primes[l], aj)
            if sum(q) == c + 1 and q not in seen:
                seen.add(q)
                block.append(q)
        for q in block:
            diff = vec_sub(q, aj)
            if sum(diff) != 1:
                raise ValueError(
                    f"refinement shape violated: {q} is not prime {aj} plus one variable"
                )
        for r in range(1, len(block) + 1):
            sign = 1 if (r - 1) % 2 == 0 else -1
            for sub in itertools.combinations(block, r):
                v = sub[0]
                for q in sub[1:]:
                    v = vec_max(v, q)
                add(vec_sub(J.m, v), -sign)
    return SignedSupport(J.ambient_p, acc)


def _compositions(total: int, parts: int):
    """All ways to write total as an ordered sum of `parts` nonnegative ints."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def count_monomials(v: Point, m: Point) -> int:
    import math

    return math.prod(math.comb(vi + mi, mi) for vi, mi in zip(v, m))


def hilbert_function_bruteforce(J: SquareFreeIdeal, v, cap: int = 2_000_000) -> int:
    """Number of multidegree-v monomials outside J, computed two ways:

    * direct enumeration of all monomials of multidegree v (a monomial
      survives iff its variables avoid some minimal prime entirely), and
    * the closed form: the IE Hilbert polynomial evaluated at v.

    The two counts must agree; a mismatch is an internal error.
    """
    from .stalactite import hilbert_eval

    v = as_point(v, J.ambient_p)
    n_monomials = count_monomials(v, J.m)
    if n_monomials > cap:
        raise CapExceeded(f"{n_monomials} monomials exceed the enumeration cap {cap}")

    # A monomial avoids p_a iff, in every component i, it only uses variables
    # x_{i,j} with j >= a_i; only the smallest used index per component matters.
    per_component = []
    for vi, mi in zip(v, J.m):
        mins = []
        for comp in _compositions(vi, mi + 1):
            first = next((j for j, e in enumerate(comp) if e), None)
            mins.append(first)  # None when vi == 0: no constraint
        per_component.append(mins)

    coverage: dict[tuple, bool] = {}

    def covered(s: tuple) -> bool:
        hit = coverage.get(s)
        if hit is None:
            hit = any(
                all(si is None or si >= ai for si, ai in zip(s, a)) for a in J.primes
            )
            coverage[s] = hit
        return hit

    direct = sum(1 for s in itertools.product(*per_component) if covered(s))

    closed = hilbert_eval(hilbert_poly_ie(J), v)
    if direct != closed:
        raise RuntimeError(
            f"internal inconsistency: direct count {direct} != closed form {closed} at {v}"
        )
    return direct


def ideal_to_json(J: SquareFreeIdeal) -> dict:
    return {"m": list(J.m), "primes": [list(a) for a in J.primes]}


def ideal_from_json(data) -> SquareFreeIdeal:
    return SquareFreeIdeal(tuple(data["m"]), tuple(tuple(a) for a in data["primes"]))
