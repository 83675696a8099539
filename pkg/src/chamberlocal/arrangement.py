"""
Affine line (and point) arrangements over Q: normalization, intersection
poset, Betti numbers, chambers, separating sets, recession cones, opposite
chambers and localization.

A hyperplane ``a . x = c`` is stored with integer coefficients, gcd 1 and the
first nonzero entry of ``a`` positive.  The sign of a chamber with respect to
``H_i`` is the sign of ``a_i . x - c_i`` on it.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

Point = tuple[Fraction, ...]


class ArrangementError(ValueError):
    """Invalid arrangement input (duplicate, zero normal, non-essential)."""


class InternalConsistencyError(AssertionError):
    """A cross-check that must hold by construction failed."""


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple[int, ...]
    offset: int
    index: int = 0

    @property
    def key(self) -> tuple:
        return self.normal + (self.offset,)

    def value(self, x: Sequence) -> Fraction:
        """``a . x - c`` at the point x."""
        return sum((Fraction(a) * xi for a, xi in zip(self.normal, x)), Fraction(0)) - self.offset

    def side(self, x: Sequence) -> int:
        return _sign(self.value(x))

    def __str__(self):
        names = "xy" if len(self.normal) == 2 else "x"
        terms = []
        for a, v in zip(self.normal, names):
            if a:
                terms.append(f"{a}{v}" if abs(a) != 1 else ("-" if a < 0 else "") + v)
        return " + ".join(terms).replace("+ -", "- ") + f" = {self.offset}"


def normalize_hyperplane(coeffs: Sequence, offset, index: int = 0) -> Hyperplane:
    """Scale ``coeffs . x = offset`` (rationals allowed) to the canonical integer form."""
    vals = [Fraction(v) for v in list(coeffs) + [offset]]
    if all(v == 0 for v in vals[:-1]):
        raise ArrangementError(f"hyperplane {index + 1}: zero normal vector")
    den = math.lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g = math.gcd(*ints)
    ints = [v // g for v in ints]
    lead = next(v for v in ints[:-1] if v)
    if lead < 0:
        ints = [-v for v in ints]
    return Hyperplane(tuple(ints[:-1]), ints[-1], index)


@dataclass(frozen=True)
class Arrangement:
    ell: int
    hyperplanes: tuple[Hyperplane, ...]
    infinity_points: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.hyperplanes)

    def __len__(self):
        return len(self.hyperplanes)

    def __iter__(self):
        return iter(self.hyperplanes)

    def __getitem__(self, i) -> Hyperplane:
        return self.hyperplanes[i]

    def equations(self) -> list[tuple[tuple[int, ...], int]]:
        return [(h.normal, h.offset) for h in self.hyperplanes]

    def sign_vector(self, x: Sequence) -> tuple[int, ...]:
        return tuple(h.side(x) for h in self.hyperplanes)


def _parallel(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) == 1:
        return True
    return a[0] * b[1] - a[1] * b[0] == 0


def normalize_arrangement(raw: Sequence, ell: int, *, essential: bool = True) -> Arrangement:
    """Build an :class:`Arrangement` from ``[(normal, offset), ...]``.

    >>> A = normalize_arrangement([((1, 0), 0), ((1, 0), 1), ((0, 1), 0)], 2)
    >>> A.infinity_points
    ((0, 1), (2,))
    """
    if ell not in (1, 2):
        raise ArrangementError(f"ambient dimension must be 1 or 2, got {ell}")
    hyps: list[Hyperplane] = []
    seen: dict[tuple, int] = {}
    for i, (normal, offset) in enumerate(raw):
        normal = tuple(normal) if isinstance(normal, (tuple, list)) else (normal,)
        if len(normal) != ell:
            raise ArrangementError(f"hyperplane {i + 1}: expected {ell} normal coefficients, got {len(normal)}")
        h = normalize_hyperplane(normal, offset, i)
        if h.key in seen:
            raise ArrangementError(f"hyperplane {i + 1} duplicates hyperplane {seen[h.key] + 1}")
        seen[h.key] = i
        hyps.append(h)
    classes: list[list[int]] = []
    for h in hyps:
        for cls in classes:
            if _parallel(hyps[cls[0]].normal, h.normal):
                cls.append(h.index)
                break
        else:
            classes.append([h.index])
    if essential:
        if not hyps:
            raise ArrangementError("empty arrangement is not essential")
        if ell == 2 and len(classes) < 2:
            raise ArrangementError("non-essential arrangement: all lines are parallel")
    return Arrangement(ell, tuple(hyps), tuple(tuple(c) for c in classes))


# ---------------------------------------------------------------------------
# intersection poset and Betti numbers

@dataclass(frozen=True)
class Edge:
    dim: int
    point: Point | None           # the point for 0-dimensional edges
    hyperplanes: tuple[int, ...]  # indices of hyperplanes containing the edge
    mobius: int

    @property
    def multiplicity(self) -> int:
        return len(self.hyperplanes)


@dataclass(frozen=True)
class IntersectionPoset:
    edges: tuple[Edge, ...]

    def of_dim(self, k: int) -> list[Edge]:
        return [e for e in self.edges if e.dim == k]

    @property
    def points(self) -> list[Edge]:
        return self.of_dim(0)

    def point_edge(self, x: Sequence) -> Edge:
        x = tuple(Fraction(v) for v in x)
        for e in self.points:
            if e.point == x:
                return e
        raise ArrangementError(f"{x} is not a 0-dimensional edge")


def intersect_lines(h: Hyperplane, g: Hyperplane) -> Point | None:
    (a1, a2), (b1, b2) = h.normal, g.normal
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    x = Fraction(h.offset * b2 - a2 * g.offset, det)
    y = Fraction(a1 * g.offset - h.offset * b1, det)
    return (x, y)


@functools.lru_cache(maxsize=256)
def intersection_poset(A: Arrangement) -> IntersectionPoset:
    ambient = Edge(A.ell, None, (), 1)
    lines = [Edge(A.ell - 1, (Fraction(h.offset, h.normal[0]),) if A.ell == 1 else None, (h.index,), -1)
             for h in A]
    if A.ell == 1:
        return IntersectionPoset((ambient, *lines))
    through: dict[Point, set[int]] = {}
    for i, h in enumerate(A):
        for g in A.hyperplanes[i + 1:]:
            p = intersect_lines(h, g)
            if p is not None:
                through.setdefault(p, set()).update((h.index, g.index))
    points = [Edge(0, p, tuple(sorted(s)), len(s) - 1) for p, s in sorted(through.items())]
    return IntersectionPoset((ambient, *lines, *points))


def betti(A: Arrangement) -> tuple[int, ...]:
    """Betti numbers of the complexified complement, ``(1, n)`` or ``(1, n, b2)``."""
    if A.ell == 1:
        return (1, A.n)
    b2 = sum(e.multiplicity - 1 for e in intersection_poset(A).points)
    return (1, A.n, b2)


def whitney_betti(A: Arrangement) -> tuple[int, ...]:
    """``b_k = sum of |mu(X)|`` over edges of codimension k (independent check of betti)."""
    out = [0] * (A.ell + 1)
    for e in intersection_poset(A).edges:
        out[A.ell - e.dim] += abs(e.mobius)
    return tuple(out)


# ---------------------------------------------------------------------------
# chambers

@dataclass(frozen=True)
class Chamber:
    sign: tuple[int, ...]
    witness: Point
    bounded: bool
    recession: tuple[Point, ...] = field(default=())  # () bounded, (d,) ray, (d1, d2) sector

    def __str__(self):
        return "".join("+" if s > 0 else "-" for s in self.sign)


def _open_interval_on_line(A: Arrangement, sign: Sequence[int], skip: int, base: Point, direction: Point):
    """Parameter interval ``(lo, hi)`` of ``base + t*direction`` inside the open chamber.

    ``None`` bounds mean unbounded; returns None when empty.
    """
    lo = hi = None
    for h, s in zip(A.hyperplanes[:skip], sign):
        slope = s * sum(a * d for a, d in zip(h.normal, direction))
        val = s * h.value(base)
        # need val + slope * t > 0
        if slope == 0:
            if val <= 0:
                return None
            continue
        t = -val / slope
        if slope > 0:
            lo = t if lo is None else max(lo, t)
        else:
            hi = t if hi is None else min(hi, t)
    if lo is not None and hi is not None and lo >= hi:
        return None
    return lo, hi


def _pick_inside(lo, hi) -> Fraction:
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return hi - 1
    if hi is None:
        return lo + 1
    return (lo + hi) / 2


def _insert_chambers(A: Arrangement) -> list[tuple[tuple[int, ...], Point]]:
    ell = A.ell
    cells: list[tuple[tuple[int, ...], Point]] = [((), (Fraction(0),) * ell)]
    for k, h in enumerate(A.hyperplanes):
        if ell == 1:
            base = (Fraction(h.offset, h.normal[0]),)
            along = None
        else:
            a1, a2 = h.normal
            base = (Fraction(h.offset * a1, a1 * a1 + a2 * a2), Fraction(h.offset * a2, a1 * a1 + a2 * a2))
            along = (Fraction(-a2), Fraction(a1))
        normal = tuple(Fraction(a) for a in h.normal)
        new = []
        for sign, wit in cells:
            if ell == 1:
                hit = all(s * g.side(base) > 0 for g, s in zip(A.hyperplanes[:k], sign))
                split_at = base if hit else None
            else:
                iv = _open_interval_on_line(A, sign, k, base, along)
                split_at = None
                if iv is not None:
                    t = _pick_inside(*iv)
                    split_at = (base[0] + t * along[0], base[1] + t * along[1])
            if split_at is None:
                s = h.side(wit)
                assert s != 0
                new.append((sign + (s,), wit))
                continue
            # step off h along its normal, staying inside the old cell
            lo, hi = _open_interval_on_line(A, sign, k, split_at, normal)
            eps = min([abs(v) for v in (lo, hi) if v is not None], default=Fraction(2)) / 2
            for s in (1, -1):
                p = tuple(x + s * eps * a for x, a in zip(split_at, normal))
                assert h.side(p) == s
                new.append((sign + (s,), p))
        cells = new
    return cells


def recession_cone(A: Arrangement, sign: Sequence[int]) -> tuple[Point, ...]:
    """Extreme rays of ``{d : s_i (a_i . d) >= 0}``: () for {0}, one ray, or two for a sector."""
    if A.ell == 1:
        # a chamber of a point arrangement is bounded unless it is an end ray
        if all(g == sign[0] for g in sign):
            return ((Fraction(sign[0]),),)
        return ()
    cands = []
    for h in A:
        a1, a2 = h.normal
        for d in ((Fraction(-a2), Fraction(a1)), (Fraction(a2), Fraction(-a1))):
            if all(s * (g.normal[0] * d[0] + g.normal[1] * d[1]) >= 0 for g, s in zip(A, sign)):
                if not any(_same_ray(d, e) for e in cands):
                    cands.append(d)
    if len(cands) <= 1:
        return tuple(cands)

    def cross(u, v):
        return u[0] * v[1] - u[1] * v[0]

    for d1 in cands:
        for d2 in cands:
            if cross(d1, d2) > 0 and all(cross(d1, e) >= 0 and cross(e, d2) >= 0 for e in cands):
                return (d1, d2)
    raise InternalConsistencyError(f"recession cone of {sign} is not pointed")


def _same_ray(u: Point, v: Point) -> bool:
    return u[0] * v[1] == u[1] * v[0] and u[0] * v[0] + u[1] * v[1] > 0


@functools.lru_cache(maxsize=256)
def enumerate_chambers(A: Arrangement) -> tuple[Chamber, ...]:
    """All chambers by incremental insertion, sorted by sign vector (``+`` first)."""
    cells = _insert_chambers(A)
    out = []
    for sign, wit in cells:
        if A.sign_vector(wit) != sign:
            raise InternalConsistencyError(f"witness {wit} does not realize {sign}")
        rec = recession_cone(A, sign)
        out.append(Chamber(sign, wit, not rec, rec))
    out.sort(key=lambda c: tuple(-s for s in c.sign))
    if len({c.sign for c in out}) != len(out):
        raise InternalConsistencyError("duplicate sign vectors")
    b = betti(A)
    total = sum(b)
    bounded = sum((-1) ** k * x for k, x in enumerate(b)) * (-1) ** A.ell
    n_bounded = sum(c.bounded for c in out)
    if len(out) != total or n_bounded != bounded:
        raise InternalConsistencyError(
            f"found {len(out)} chambers ({n_bounded} bounded), expected {total} ({bounded})")
    return tuple(out)


def chamber_index(A: Arrangement) -> dict[tuple[int, ...], Chamber]:
    return {c.sign: c for c in enumerate_chambers(A)}


def chamber_at(A: Arrangement, x: Sequence) -> Chamber:
    sign = A.sign_vector(x)
    if 0 in sign:
        raise ValueError(f"{x} lies on a hyperplane")
    return chamber_index(A)[sign]


def separating(A: Arrangement, C: Chamber, D: Chamber) -> frozenset[int]:
    return frozenset(i for i, (s, t) in enumerate(zip(C.sign, D.sign)) if s != t)


def infinity_span(A: Arrangement, C: Chamber) -> tuple[int, Point | None]:
    """Dimension of the projective span of the chamber's face at infinity.

    Returns ``(0, d)`` with the recession ray direction d, or ``(1, None)``
    when the face at infinity is an arc spanning the line at infinity.
    """
    if C.bounded:
        raise ValueError(f"chamber {C} is bounded")
    if len(C.recession) == 1:
        return 0, C.recession[0]
    return 1, None


def opposite_chamber(A: Arrangement, C: Chamber) -> Chamber:
    dim, d = infinity_span(A, C)
    if A.ell == 1 or dim == 1:
        keep = set()
    else:
        keep = {h.index for h in A if h.normal[0] * d[0] + h.normal[1] * d[1] == 0}
    sign = tuple(s if i in keep else -s for i, s in enumerate(C.sign))
    try:
        return chamber_index(A)[sign]
    except KeyError:
        raise InternalConsistencyError(f"opposite sign vector {sign} of {C} is infeasible") from None


def localize(A: Arrangement, x: Sequence) -> tuple[Arrangement, tuple[int, ...]]:
    """Sub-arrangement of hyperplanes through the vertex x, and its index map into A."""
    edge = intersection_poset(A).point_edge(x)
    sub = normalize_arrangement([(A[i].normal, A[i].offset) for i in edge.hyperplanes], A.ell)
    return sub, edge.hyperplanes


def is_central(A: Arrangement) -> bool:
    if A.ell == 1:
        return A.n == 1
    pts = intersection_poset(A).points
    return len(pts) == 1 and pts[0].multiplicity == A.n
