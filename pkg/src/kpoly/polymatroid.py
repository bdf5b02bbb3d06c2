"""Axiom-level verifiers for base polymatroids, g-polymatroids and caves.

Every checker returns a Check whose witness pinpoints the first violated
condition (points are reported as lists, indices 1-based) so failures are
debuggable from test output and from the CLI.
"""

from __future__ import annotations

import itertools
import random

from .lattice import (
    CapExceeded,
    Check,
    EmptySetError,
    PointSet,
    check_index_subset,
    homogenize,
    support_bounds,
    top,
    truncate,
    unit_shift,
)

G_POLY_METHODS = ("axioms", "homogenization", "inequality_points")


def is_base_polymatroid(P: PointSet) -> Check:
    """Homogeneity plus the exchange axiom for every ordered pair.

    The empty set and singletons pass vacuously.
    """
    if len(P) <= 1:
        return Check(True)
    p = P.ambient_p
    sums = {sum(q) for q in P}
    if len(sums) > 1:
        lo = min(P, key=sum)
        hi = max(P, key=sum)
        return Check(False, {"condition": "homogeneous", "points": [list(lo), list(hi)]})
    for u in P:
        for v in P:
            if u == v:
                continue
            for i in range(p):
                if u[i] <= v[i]:
                    continue
                if not any(
                    u[j] < v[j] and unit_shift(u, i, j) in P for j in range(p)
                ):
                    return Check(
                        False,
                        {"condition": "exchange", "u": list(u), "v": list(v), "i": i + 1},
                    )
    return Check(True)


def check_symmetric_exchange(P: PointSet) -> Check:
    """Strengthened exchange: the swap works on both sides simultaneously.

    Holds for every base polymatroid, so this is a cross-validation property,
    not a classifier.  Raises if P is not a base polymatroid to begin with.
    """
    base = is_base_polymatroid(P)
    if not base:
        raise ValueError(f"not a base polymatroid: {base.witness}")
    p = P.ambient_p
    for u in P:
        for v in P:
            if u == v:
                continue
            for i in range(p):
                if u[i] <= v[i]:
                    continue
                if not any(
                    u[j] < v[j]
                    and unit_shift(u, i, j) in P
                    and unit_shift(v, j, i) in P
                    for j in range(p)
                ):
                    return Check(
                        False,
                        {"condition": "symmetric-exchange", "u": list(u), "v": list(v), "i": i + 1},
                    )
    return Check(True)


def _axiom_check(G: PointSet) -> Check:
    p = G.ambient_p
    for u in G:
        su = sum(u)
        for v in G:
            if u == v:
                continue
            sv = sum(v)
            for i in range(p):
                if u[i] <= v[i]:
                    continue
                swap = any(
                    u[j] < v[j]
                    and unit_shift(u, i, j) in G
                    and unit_shift(v, j, i) in G
                    for j in range(p)
                )
                drop = (
                    su > sv
                    and unit_shift(u, i, None) in G
                    and unit_shift(v, None, i) in G
                )
                if not (swap or drop):
                    return Check(
                        False,
                        {"condition": "exchange", "u": list(u), "v": list(v), "i": i + 1},
                    )
            if su < sv:
                if not any(
                    u[j] < v[j]
                    and unit_shift(u, None, j) in G
                    and unit_shift(v, j, None) in G
                    for j in range(p)
                ):
                    return Check(
                        False,
                        {"condition": "expansion", "u": list(u), "v": list(v)},
                    )
    return Check(True)


def is_g_polymatroid(G: PointSet, method: str = "axioms") -> Check:
    """Generalized-polymatroid test via one of three routes.

    axioms            direct Exchange + Expansion over all ordered pairs
    homogenization    append the slack coordinate, then base-polymatroid exchange
    inequality_points the set must equal the integer points of its own
                      support-bound system (necessary always, and exact for
                      genuine g-polymatroids by Frank's characterization)
    """
    if method not in G_POLY_METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {G_POLY_METHODS}")
    if len(G) == 0:
        return Check(True)
    if method == "axioms":
        return _axiom_check(G)
    if method == "homogenization":
        res = is_base_polymatroid(homogenize(G))
        if res:
            return res
        w = dict(res.witness)
        w["condition"] = "homogenized-" + w["condition"]
        return Check(False, w)
    sys_ = inequality_system(G)
    Z = integer_points(sys_)
    if Z == G:
        return Check(True)
    extra = [list(q) for q in Z if q not in G]
    return Check(False, {"condition": "integer-points", "extra_points": extra})


class GPolyInequalitySystem:
    """Lower/upper bounds c(J) <= sum_{j in J} y_j <= b(J) for all nonempty J."""

    __slots__ = ("ambient_p", "lower", "upper")

    def __init__(self, ambient_p: int, lower: dict, upper: dict):
        self.ambient_p = ambient_p
        self.lower = {frozenset(check_index_subset(J, ambient_p)): int(c) for J, c in lower.items()}
        self.upper = {frozenset(check_index_subset(J, ambient_p)): int(b) for J, b in upper.items()}
        if set(self.lower) != set(self.upper):
            raise ValueError("lower and upper bounds must cover the same subsets")

    def subsets(self):
        return sorted(self.lower, key=lambda J: (len(J), sorted(J)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GPolyInequalitySystem)
            and self.ambient_p == other.ambient_p
            and self.lower == other.lower
            and self.upper == other.upper
        )

    def __repr__(self) -> str:
        rows = ", ".join(
            f"{self.lower[J]}<=sum{sorted(J)}<={self.upper[J]}" for J in self.subsets()
        )
        return f"GPolyInequalitySystem(p={self.ambient_p}, {rows})"


def inequality_system(A: PointSet) -> GPolyInequalitySystem:
    """Support bounds of A over all 2^p - 1 nonempty index subsets."""
    if not A:
        raise EmptySetError("inequality system of an empty set")
    p = A.ambient_p
    lower, upper = {}, {}
    for r in range(1, p + 1):
        for J in itertools.combinations(range(1, p + 1), r):
            lo, hi = support_bounds(A, J)
            lower[frozenset(J)] = lo
            upper[frozenset(J)] = hi
    return GPolyInequalitySystem(p, lower, upper)


def integer_points(sys_: GPolyInequalitySystem, cap: int = 10_000_000) -> PointSet:
    """All lattice points y >= 0 satisfying every double inequality.

    Enumeration is bounded by the box 0 <= y_i <= b({i}).
    """
    p = sys_.ambient_p
    boxes = [sys_.upper[frozenset({i})] for i in range(1, p + 1)]
    if any(b < 0 for b in boxes):
        return PointSet(p)
    volume = 1
    for b in boxes:
        volume *= b + 1
    if volume > cap:
        raise CapExceeded(f"integer-point box has {volume} cells (cap {cap})")
    constraints = [
        (tuple(j - 1 for j in sorted(J)), sys_.lower[J], sys_.upper[J])
        for J in sys_.subsets()
    ]
    points = []
    for y in itertools.product(*(range(b + 1) for b in boxes)):
        ok = True
        for idx, lo, hi in constraints:
            s = sum(y[i] for i in idx)
            if s < lo or s > hi:
                ok = False
                break
        if ok:
            points.append(y)
    return PointSet(p, points)


def system_to_json(sys_: GPolyInequalitySystem) -> dict:
    return {
        "p": sys_.ambient_p,
        "bounds": [
            {"J": sorted(J), "c": sys_.lower[J], "b": sys_.upper[J]}
            for J in sys_.subsets()
        ],
    }


def system_from_json(data) -> GPolyInequalitySystem:
    p = int(data["p"])
    lower = {tuple(row["J"]): int(row["c"]) for row in data["bounds"]}
    upper = {tuple(row["J"]): int(row["b"]) for row in data["bounds"]}
    return GPolyInequalitySystem(p, lower, upper)


def axis_orders(p: int, policy):
    """Resolve an order policy to a list of 1-based axis orders.

    policy: "natural", "all", or ("sample", k, seed).  Exhausting all p!
    orders is only allowed for p <= 6; beyond that a sample policy with an
    explicit seed is required.
    """
    if policy == "natural":
        return [tuple(range(1, p + 1))]
    if policy == "all":
        if p > 6:
            raise ValueError(
                f"all-orders policy would enumerate {p}! orders; pass ('sample', k, seed)"
            )
        return [tuple(o) for o in itertools.permutations(range(1, p + 1))]
    if isinstance(policy, tuple) and len(policy) == 3 and policy[0] == "sample":
        _, k, seed = policy
        rng = random.Random(seed)
        orders = []
        seen = set()
        for _ in range(int(k)):
            o = tuple(rng.sample(range(1, p + 1), p))
            if o not in seen:
                seen.add(o)
                orders.append(o)
        return orders
    raise ValueError(f"unknown order policy {policy!r}")


def is_cave(C: PointSet, order_policy="all") -> Check:
    """Cave test: every nonempty truncation must have a polymatroid top,
    satisfy the stalactite-union formula for every requested axis order,
    and (off the origin) be a g-polymatroid."""
    from .stalactite import stalactite_union

    if not C:
        raise EmptySetError("cave test on an empty set")
    p = C.ambient_p
    orders = axis_orders(p, order_policy)
    maxes = [max(q[i] for q in C) for i in range(p)]

    # distinct truncations only; remember whether any nonzero b produced each
    trunc: dict[tuple, tuple[PointSet, Point, bool]] = {}
    for b in itertools.product(*(range(m + 1) for m in maxes)):
        A = truncate(C, b)
        if not A:
            continue
        key = A.points
        nonzero = any(b)
        if key in trunc:
            prev_A, prev_b, prev_nonzero = trunc[key]
            trunc[key] = (prev_A, prev_b, prev_nonzero or nonzero)
        else:
            trunc[key] = (A, b, nonzero)

    for A, b, needs_gpoly in trunc.values():
        T = top(A)
        chk = is_base_polymatroid(T)
        if not chk:
            return Check(
                False,
                {"condition": "top-polymatroid", "truncation": list(b), **chk.witness},
            )
        if needs_gpoly:
            chk = is_g_polymatroid(A, "axioms")
            if not chk:
                return Check(
                    False,
                    {
                        "condition": "truncation-g-polymatroid",
                        "truncation": list(b),
                        **chk.witness,
                    },
                )
        for order in orders:
            covered = set()
            for _, st in stalactite_union(T, order):
                covered.update(st)
            if covered != set(A.points):
                missing = sorted(set(A.points) - covered)
                extra = sorted(covered - set(A.points))
                return Check(
                    False,
                    {
                        "condition": "stalactite-union",
                        "truncation": list(b),
                        "order": list(order),
                        "missing": [list(q) for q in missing],
                        "extra": [list(q) for q in extra],
                    },
                )
    return Check(True)
