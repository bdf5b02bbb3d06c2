"""Permutations, divided differences, and Grothendieck/Schubert polynomials.

The Grothendieck recursion starts from the staircase monomial at the longest
permutation and walks down by isobaric divided differences at ascents.  All
polynomials use num_vars = p so that exponent vectors line up with the
reflection n -> m - n used by the matrix-Schubert pipeline.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from multiprocessing import Pool

from .lattice import (
    CapExceeded,
    IntPolynomial,
    Point,
    PointSet,
)

Perm = tuple[int, ...]

CENSUS_CAP = 8


def as_perm(values) -> Perm:
    w = tuple(int(v) for v in values)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{len(w)}")
    return w


def parse_perm(text: str) -> Perm:
    """Accept "1,5,3,2,4" and bracketed "[1,5,3,2,4]"."""
    body = text.strip().strip("[]")
    return as_perm(int(tok) for tok in body.replace(",", " ").split())


def inversions(w: Perm) -> int:
    return sum(
        1
        for i in range(len(w))
        for j in range(i + 1, len(w))
        if w[i] > w[j]
    )


def longest_perm(p: int) -> Perm:
    return tuple(range(p, 0, -1))


def rothe_diagram(w: Perm) -> frozenset[tuple[int, int]]:
    """Cells D(w) = {(i, j) : w(i) > j and w^{-1}(j) > i}, 1-based."""
    p = len(w)
    winv = [0] * (p + 1)
    for i, v in enumerate(w, start=1):
        winv[v] = i
    return frozenset(
        (i, j)
        for i in range(1, p + 1)
        for j in range(1, w[i - 1])
        if winv[j] > i
    )


def ascent_positions(w: Perm) -> list[int]:
    return [j for j in range(1, len(w)) if w[j - 1] < w[j]]


def swap_adjacent(w: Perm, j: int) -> Perm:
    """Exchange the entries in positions j and j+1 (1-based)."""
    u = list(w)
    u[j - 1], u[j] = u[j], u[j - 1]
    return tuple(u)


# ---------------------------------------------------------------------------
# divided-difference kernels on raw {exponent tuple: coeff} dicts

def _swap_exp(e: Point, i: int) -> Point:
    w = list(e)
    w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w)


def _divide_by_var_difference(num: dict, i: int) -> dict:
    """Exact quotient of an antisymmetric-in-(z_i, z_{i+1}) polynomial by
    z_i - z_{i+1}; a nonzero remainder means an arithmetic bug upstream."""
    groups: dict[Point, dict] = {}
    for e, c in num.items():
        rest = list(e)
        a, b = rest[i], rest[i + 1]
        rest[i] = rest[i + 1] = 0
        groups.setdefault(tuple(rest), {})[(a, b)] = c
    out: dict[Point, int] = {}
    for rest, pairs in groups.items():
        # view the group as a polynomial in z = z_i with coefficients in
        # w = z_{i+1}, then divide synthetically by (z - w)
        by_zdeg: dict[int, dict[int, int]] = {}
        for (a, b), c in pairs.items():
            by_zdeg.setdefault(a, {})[b] = c
        d = max(by_zdeg)
        prev = dict(by_zdeg.get(d, {}))
        quotient = {d - 1: prev}
        for k in range(d - 1, 0, -1):
            nxt = {b + 1: c for b, c in prev.items()}
            for b, c in by_zdeg.get(k, {}).items():
                c = nxt.get(b, 0) + c
                if c:
                    nxt[b] = c
                else:
                    del nxt[b]
            quotient[k - 1] = nxt
            prev = nxt
        remainder = {b + 1: c for b, c in prev.items()}
        for b, c in by_zdeg.get(0, {}).items():
            c = remainder.get(b, 0) + c
            if c:
                remainder[b] = c
            else:
                del remainder[b]
        if remainder:
            raise RuntimeError(
                "nonzero remainder in divided difference; this indicates an "
                "arithmetic bug, the numerator must be antisymmetric"
            )
        base = list(rest)
        for k, wmap in quotient.items():
            for b, c in wmap.items():
                base[i], base[i + 1] = k, b
                out[tuple(base)] = c
    return out


def _divided_difference_raw(terms: dict, j: int) -> dict:
    i = j - 1
    num: dict[Point, int] = {}
    for e, c in terms.items():
        v = num.get(e, 0) + c
        if v:
            num[e] = v
        else:
            del num[e]
        se = _swap_exp(e, i)
        v = num.get(se, 0) - c
        if v:
            num[se] = v
        else:
            del num[se]
    if not num:
        return {}
    return _divide_by_var_difference(num, i)


def _isobaric_raw(terms: dict, j: int) -> dict:
    # (1 - z_{j+1}) * f, then the ordinary divided difference
    shifted: dict[Point, int] = dict(terms)
    for e, c in terms.items():
        e2 = list(e)
        e2[j] += 1
        e2 = tuple(e2)
        v = shifted.get(e2, 0) - c
        if v:
            shifted[e2] = v
        else:
            del shifted[e2]
    return _divided_difference_raw(shifted, j)


def divided_difference(f: IntPolynomial, j: int) -> IntPolynomial:
    """(f - f with z_j, z_{j+1} swapped) / (z_j - z_{j+1}), exactly."""
    if not 1 <= j <= f.num_vars - 1:
        raise ValueError(f"operator index {j} outside 1..{f.num_vars - 1}")
    return IntPolynomial._raw(f.num_vars, _divided_difference_raw(f.terms, j))


def isobaric_divided_difference(f: IntPolynomial, j: int) -> IntPolynomial:
    """Divided difference of (1 - z_{j+1}) * f."""
    if not 1 <= j <= f.num_vars - 1:
        raise ValueError(f"operator index {j} outside 1..{f.num_vars - 1}")
    return IntPolynomial._raw(f.num_vars, _isobaric_raw(f.terms, j))


# ---------------------------------------------------------------------------
# Grothendieck and Schubert polynomials

def staircase_terms(p: int) -> dict:
    return {tuple(range(p - 1, -1, -1)): 1}


@lru_cache(maxsize=None)
def _grothendieck_terms(w: Perm):
    p = len(w)
    if w == longest_perm(p):
        return staircase_terms(p)
    j = ascent_positions(w)[0]
    return _isobaric_raw(_grothendieck_terms(swap_adjacent(w, j)), j)


def grothendieck(w) -> IntPolynomial:
    """Grothendieck polynomial, memoized along the ascent chain up to the
    longest permutation; the result is independent of the ascent choices."""
    w = as_perm(w)
    return IntPolynomial._raw(len(w), dict(_grothendieck_terms(w)))


def lowest_degree_part(f: IntPolynomial) -> IntPolynomial:
    if not f.terms:
        return f
    lo = min(sum(e) for e in f.terms)
    return IntPolynomial._raw(
        f.num_vars, {e: c for e, c in f.terms.items() if sum(e) == lo}
    )


def schubert(w) -> IntPolynomial:
    """Sum of the lowest-degree terms of the Grothendieck polynomial."""
    return lowest_degree_part(grothendieck(w))


def _is_zero_one_terms(terms: dict) -> bool:
    lo = min(sum(e) for e in terms)
    return all(c == 1 for e, c in terms.items() if sum(e) == lo)


def is_zero_one(w) -> bool:
    """True when every Schubert coefficient lies in {0, 1}."""
    w = as_perm(w)
    return _is_zero_one_terms(_grothendieck_terms(w))


# ---------------------------------------------------------------------------
# zero-one census

def _perms_by_length(p: int) -> dict[int, list[Perm]]:
    buckets: dict[int, list[Perm]] = {}
    for w in itertools.permutations(range(1, p + 1)):
        buckets.setdefault(inversions(w), []).append(w)
    return buckets


def _census_serial(p: int) -> int:
    buckets = _perms_by_length(p)
    n_inv = p * (p - 1) // 2
    level = {longest_perm(p): staircase_terms(p)}
    count = 0
    for ell in range(n_inv, -1, -1):
        for w in buckets.get(ell, []):
            if _is_zero_one_terms(level[w]):
                count += 1
        if ell == 0:
            break
        nxt = {}
        for w in buckets.get(ell - 1, []):
            j = ascent_positions(w)[0]
            nxt[w] = _isobaric_raw(level[swap_adjacent(w, j)], j)
        level = nxt
    return count


def _census_block(args) -> int:
    p, block = args
    w0 = longest_perm(p)
    memo: dict[Perm, dict] = {w0: staircase_terms(p)}

    def get(w: Perm) -> dict:
        chain = []
        while w not in memo:
            chain.append(w)
            w = swap_adjacent(w, ascent_positions(w)[0])
        terms = memo[w]
        for v in reversed(chain):
            terms = _isobaric_raw(terms, ascent_positions(v)[0])
            memo[v] = terms
        return terms

    return sum(1 for w in block if _is_zero_one_terms(get(w)))


def count_zero_one(p: int, jobs: int = 1, cap: int = CENSUS_CAP) -> int:
    """Number of permutations in S_p with a zero-one Schubert polynomial."""
    if p < 1:
        raise ValueError("p must be positive")
    if p > cap:
        raise CapExceeded(f"census for p = {p} exceeds the cap {cap}")
    if jobs <= 1 or p <= 3:
        return _census_serial(p)
    perms = sorted(itertools.permutations(range(1, p + 1)))
    step = (len(perms) + jobs - 1) // jobs
    blocks = [(p, perms[k : k + step]) for k in range(0, len(perms), step)]
    with Pool(processes=jobs) as pool:
        return sum(pool.map(_census_block, blocks))


def zero_one_permutations(p: int) -> list[Perm]:
    """All w in S_p with zero-one Schubert polynomial, in lex order."""
    buckets = _perms_by_length(p)
    n_inv = p * (p - 1) // 2
    level = {longest_perm(p): staircase_terms(p)}
    found = []
    for ell in range(n_inv, -1, -1):
        for w in buckets.get(ell, []):
            if _is_zero_one_terms(level[w]):
                found.append(w)
        if ell == 0:
            break
        nxt = {}
        for w in buckets.get(ell - 1, []):
            j = ascent_positions(w)[0]
            nxt[w] = _isobaric_raw(level[swap_adjacent(w, j)], j)
        level = nxt
    return sorted(found)


# ---------------------------------------------------------------------------
# matrix-Schubert pipeline

def msupp_of_matrix_schubert(w) -> tuple[PointSet, Point]:
    """Multidegree support of the matrix Schubert variety inside the product
    of p projective (p-1)-spaces: m = (p-1, ..., p-1) and the support is the
    reflection of the Schubert support.  Requires a zero-one permutation."""
    w = as_perm(w)
    if not is_zero_one(w):
        raise ValueError(f"{w} is not zero-one; its multidegrees exceed 1")
    p = len(w)
    m = ((p - 1),) * p
    S = schubert(w)
    msupp = PointSet(p, (tuple(mi - ei for mi, ei in zip(m, e)) for e in S.terms))
    return msupp, m


def grothendieck_via_stalactites(w) -> IntPolynomial:
    """Grothendieck polynomial through the stalactite route: reconstruct the
    signed Hilbert support from the multidegree support and reflect it."""
    from .stalactite import hsupp_from_msupp

    w = as_perm(w)
    msupp, m = msupp_of_matrix_schubert(w)
    H = hsupp_from_msupp(msupp)
    return IntPolynomial._raw(
        len(w),
        {tuple(mi - ni for mi, ni in zip(m, n)): c for n, c in H.terms.items()},
    )


def grothendieck_via_mobius(w) -> IntPolynomial:
    """Grothendieck polynomial through the Mobius route on the downset poset."""
    from .mobius import kpoly_from_mobius

    w = as_perm(w)
    msupp, m = msupp_of_matrix_schubert(w)
    return kpoly_from_mobius(msupp, m)
