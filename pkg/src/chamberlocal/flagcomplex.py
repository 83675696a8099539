"""
Generic flags near the line at infinity, the chamber stratification, the
degree map and the twisted chamber cochain complex of a rank-one local system.

For ``ell == 1`` the flag line is the ambient line itself, so the same code
gives the two-term complex ``K[ch^0] -> K[ch^1]`` with all degrees equal to 1.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arrangement import (Arrangement, Chamber, InternalConsistencyError, betti, chamber_at,
                          enumerate_chambers, infinity_span, intersection_poset, opposite_chamber,
                          separating)
from .exactfield import Field, FieldElem, Matrix, matrix_rank


@dataclass(frozen=True)
class Flag:
    """``F^0 in F^1``: the line ``x(s) = origin + s*direction`` and a point on it.

    ``crossings`` lists ``(s, i)`` where ``H_i`` meets the line, sorted by s.
    The basepoint sits beyond the last crossing.
    """

    ell: int
    seed: int
    origin: tuple[Fraction, ...]
    direction: tuple[Fraction, ...]
    crossings: tuple[tuple[Fraction, int], ...]
    base_param: Fraction
    ball: tuple[Fraction, Fraction]

    def point(self, s) -> tuple[Fraction, ...]:
        return tuple(o + s * d for o, d in zip(self.origin, self.direction))

    @property
    def basepoint(self) -> tuple[Fraction, ...]:
        return self.point(self.base_param)

    def sample_params(self) -> list[Fraction]:
        """One parameter inside each interval of the line cut by the crossings (left to right)."""
        ss = [s for s, _ in self.crossings]
        return [ss[0] - 1] + [(a + b) / 2 for a, b in zip(ss, ss[1:])] + [ss[-1] + 1]


def _crossings(A: Arrangement, origin, direction) -> list[tuple[Fraction, int]]:
    out = []
    for h in A:
        slope = sum(a * d for a, d in zip(h.normal, direction))
        out.append((-h.value(origin) / slope, h.index))
    out.sort()
    return out


def build_flag(A: Arrangement, seed: int = 1) -> Flag:
    """Deterministic generic flag near infinity; tries directions ``(1, t)`` for t = seed, seed+1, ..."""
    if A.ell == 1:
        origin, direction = (Fraction(0),), (Fraction(1),)
    else:
        vertices = [e.point for e in intersection_poset(A).points]
        t = seed
        while any(h.normal[0] * t - h.normal[1] == 0 for h in A):
            t += 1
        u = (Fraction(1), Fraction(t))
        c = max(u[0] * p[0] + u[1] * p[1] for p in vertices) + 1
        norm = u[0] ** 2 + u[1] ** 2
        origin = (c * u[0] / norm, c * u[1] / norm)
        direction = (-u[1], u[0])
    cr = _crossings(A, origin, direction)
    F = Flag(A.ell, seed, origin, direction, tuple(cr), cr[-1][0] + 1, (cr[0][0] - 1, cr[-1][0] + 1))
    verify_flag(A, F)
    return F


def verify_flag(A: Arrangement, F: Flag) -> None:
    """Raise InternalConsistencyError unless F is generic and near infinity."""
    params = [s for s, _ in F.crossings]
    if len(params) != A.n or len(set(params)) != A.n:
        raise InternalConsistencyError("flag line must cross every hyperplane at distinct points")
    if not all(s < F.base_param for s in params):
        raise InternalConsistencyError("F^0 separates the crossings")
    lo, hi = F.ball
    if not all(lo < s < hi for s in params):
        raise InternalConsistencyError("ball does not contain all crossings")
    if A.ell == 2:
        d = F.direction
        normal = (-d[1], d[0])
        level = normal[0] * F.origin[0] + normal[1] * F.origin[1]
        for h in A:
            if h.normal[0] * d[0] + h.normal[1] * d[1] == 0:
                raise InternalConsistencyError(f"flag line parallel to {h}")
        sides = {(normal[0] * p[0] + normal[1] * p[1] - level > 0) - (normal[0] * p[0] + normal[1] * p[1] - level < 0)
                 for p in (e.point for e in intersection_poset(A).points)}
        if 0 in sides or len(sides) != 1:
            raise InternalConsistencyError("flag line separates or contains vertices")


@dataclass(frozen=True)
class Stratification:
    ch0: tuple[Chamber, ...]
    ch1: tuple[Chamber, ...]   # in order along the flag line, leftmost (unbounded) first
    ch2: tuple[Chamber, ...]
    bch: tuple[tuple[Chamber, ...], ...]
    uch: tuple[tuple[Chamber, ...], ...]

    @property
    def strata(self) -> tuple[tuple[Chamber, ...], ...]:
        return (self.ch0, self.ch1, self.ch2)

    def sizes(self, ell: int) -> tuple[int, ...]:
        return tuple(len(c) for c in self.strata[: ell + 1])


@functools.lru_cache(maxsize=256)
def stratify(A: Arrangement, F: Flag) -> Stratification:
    chambers = enumerate_chambers(A)
    along = [chamber_at(A, F.point(s)) for s in F.sample_params()]
    ch0 = (chamber_at(A, F.basepoint),)
    if along[-1] != ch0[0]:
        raise InternalConsistencyError("F^0 is not in the last interval of the flag line")
    ch1 = tuple(along[:-1])
    met = {c.sign for c in along}
    ch2 = tuple(c for c in chambers if c.sign not in met)
    # C meets F^k in a bounded set: always for k = 0, inner intervals for k = 1, bounded chambers for k = ell
    bch = [ch0, ch1[1:], tuple(c for c in ch2 if c.bounded)]
    uch = [(), ch1[:1], tuple(c for c in ch2 if not c.bounded)]
    if A.ell == 1:
        bch[1] = tuple(c for c in ch1 if c.bounded)
        uch[1] = tuple(c for c in ch1 if not c.bounded)
    st = Stratification(ch0, ch1, ch2, tuple(bch), tuple(uch))
    _check_counts(A, st)
    return st


def _check_counts(A: Arrangement, st: Stratification) -> None:
    b = betti(A)
    if st.sizes(A.ell) != b or (A.ell == 1 and st.ch2):
        raise InternalConsistencyError(f"stratum sizes {st.sizes(A.ell)} differ from Betti numbers {b}")
    for k in range(A.ell):
        if len(st.bch[k]) != len(st.uch[k + 1]):
            raise InternalConsistencyError(f"#bch^{k} != #uch^{k + 1}")
    if {c.sign for c in st.bch[A.ell]} != {c.sign for c in enumerate_chambers(A) if c.bounded}:
        raise InternalConsistencyError("bch^ell differs from the bounded chambers")


def degree(A: Arrangement, F: Flag, C: Chamber, D: Chamber, k: int | None = None) -> int:
    """Degree of the pair (C, D) with C in ch^k and D in ch^(k+1)."""
    st = stratify(A, F)
    if k is None:
        k = next((j for j, s in enumerate(st.strata) if C in s), None)
    if k not in (0, 1) or C not in st.strata[k]:
        raise ValueError(f"chamber {C} is not in ch^{k} for k in (0, 1)")
    if D not in st.strata[k + 1]:
        raise ValueError(f"chamber {D} is not in ch^{k + 1}")
    if k == 0:
        return 1
    pos = st.ch1.index(C)
    return _interval_degree(A, F, pos, D.sign)


def _interval_degree(A: Arrangement, F: Flag, pos: int, target: Sequence[int]) -> int:
    def sigma(crossing: int) -> int:
        i = F.crossings[crossing][1]
        h = A[i]
        forward = sum(a * d for a, d in zip(h.normal, F.direction)) > 0
        return 1 if (target[i] > 0) == forward else -1

    # interval pos runs from crossing pos-1 (or the ball boundary) to crossing pos
    left = 1 if pos == 0 else sigma(pos - 1)
    right = sigma(pos)
    return (right - left) // 2


@dataclass(frozen=True)
class CharacterSpec:
    """Rank-one local system given by square roots ``r_i`` of the monodromies ``q_i``."""

    field: Field
    roots: tuple[FieldElem, ...]

    def __post_init__(self):
        for r in self.roots:
            if r.field != self.field:
                raise ValueError(f"root {r!r} not in {self.field!r}")
            if r.is_zero():
                raise ValueError("square roots of monodromies must be nonzero")

    @classmethod
    def from_exponents(cls, field: Field, zeta2m: FieldElem, exponents: Sequence[int]) -> CharacterSpec:
        return cls(field, tuple(zeta2m ** a for a in exponents))

    @property
    def n(self) -> int:
        return len(self.roots)

    @property
    def q(self) -> tuple[FieldElem, ...]:
        return tuple(r * r for r in self.roots)

    @property
    def q_infinity(self) -> FieldElem:
        return self.r_infinity * self.r_infinity

    @property
    def r_infinity(self) -> FieldElem:
        prod = self.field.one()
        for r in self.roots:
            prod = prod * r
        return prod.inverse()

    def is_trivial(self) -> bool:
        one = self.field.one()
        return all(x == one for x in self.q)

    def restrict(self, keep: Sequence[int]) -> CharacterSpec:
        return CharacterSpec(self.field, tuple(self.roots[i] for i in keep))

    def flip(self, i: int) -> CharacterSpec:
        roots = list(self.roots)
        roots[i] = -roots[i]
        return CharacterSpec(self.field, tuple(roots))

    def to_json(self) -> dict:
        return {"field": repr(self.field), "roots": [r.to_json() for r in self.roots],
                "q": [x.to_json() for x in self.q]}


def delta(A: Arrangement, C: Chamber, D: Chamber, chi: CharacterSpec) -> FieldElem:
    return _delta_sep(separating(A, C, D), chi)


def _delta_sep(sep, chi: CharacterSpec) -> FieldElem:
    R = chi.field.one()
    for i in sorted(sep):
        R = R * chi.roots[i]
    return R - R.inverse()


@dataclass(frozen=True)
class ComplexShape:
    """Nonzero-degree incidences ``(row, col, deg, sep)`` of both differentials."""

    sizes: tuple[int, ...]
    maps: tuple[tuple[tuple[int, int, int, frozenset[int]], ...], ...]


@functools.lru_cache(maxsize=256)
def complex_shape(A: Arrangement, F: Flag) -> ComplexShape:
    st = stratify(A, F)
    maps = []
    for k in range(A.ell):
        src, dst = st.strata[k], st.strata[k + 1]
        cells = []
        for col, C in enumerate(src):
            for row, D in enumerate(dst):
                d = 1 if k == 0 else _interval_degree(A, F, col, D.sign)
                if d:
                    cells.append((row, col, d, separating(A, C, D)))
        maps.append(tuple(cells))
    return ComplexShape(st.sizes(A.ell), tuple(maps))


@dataclass(frozen=True)
class ChamberComplex:
    nabla: tuple[Matrix, ...]            # nabla[k]: K[ch^k] -> K[ch^(k+1)], shape |ch^(k+1)| x |ch^k|
    labels: tuple[tuple[str, ...], ...]  # chamber sign strings per stratum

    @property
    def nabla0(self) -> Matrix:
        return self.nabla[0]

    @property
    def nabla1(self) -> Matrix | None:
        return self.nabla[1] if len(self.nabla) > 1 else None

    def ranks(self) -> tuple[int, ...]:
        return tuple(matrix_rank(m) for m in self.nabla)

    def dims(self) -> tuple[int, ...]:
        return cohomology_dims(tuple(len(l) for l in self.labels), self.ranks())


def cohomology_dims(sizes: Sequence[int], ranks: Sequence[int]) -> tuple[int, ...]:
    """Dimensions ``sizes[k] - rank(d_k) - rank(d_(k-1))`` of a finite cochain complex."""
    out = []
    for k, size in enumerate(sizes):
        h = size - (ranks[k] if k < len(ranks) else 0) - (ranks[k - 1] if k else 0)
        if h < 0:
            raise InternalConsistencyError(f"negative cohomology dimension in degree {k}")
        out.append(h)
    return tuple(out)


def _assemble(A: Arrangement, F: Flag, field: Field, entry) -> ChamberComplex:
    shape = complex_shape(A, F)
    st = stratify(A, F)
    zero = field.zero()
    mats = []
    for k, cells in enumerate(shape.maps):
        rows, cols = shape.sizes[k + 1], shape.sizes[k]
        data = [zero] * (rows * cols)
        for row, col, d, sep in cells:
            data[row * cols + col] = entry(d, sep)
        mats.append(Matrix(field, rows, cols, tuple(data)))
    labels = tuple(tuple(str(c) for c in s) for s in st.strata[: A.ell + 1])
    cx = ChamberComplex(tuple(mats), labels)
    if len(mats) == 2 and not (mats[1] @ mats[0]).is_zero():
        raise InternalConsistencyError("nabla o nabla != 0")
    return cx


def build_complex(A: Arrangement, F: Flag, chi: CharacterSpec) -> ChamberComplex:
    if chi.n != A.n:
        raise ValueError(f"character has {chi.n} roots for {A.n} hyperplanes")
    cache: dict[frozenset, FieldElem] = {}

    def entry(d, sep):
        if sep not in cache:
            cache[sep] = _delta_sep(sep, chi)
        return cache[sep] if d == 1 else -cache[sep]

    return _assemble(A, F, chi.field, entry)


def linearized_complex(A: Arrangement, F: Flag, w: Sequence[FieldElem]) -> ChamberComplex:
    """First-order part of the chamber complex: entries ``deg * sum_{i in Sep} w_i``."""
    if len(w) != A.n:
        raise ValueError(f"weight vector has {len(w)} entries for {A.n} hyperplanes")
    field = w[0].field

    def entry(d, sep):
        s = field.zero()
        for i in sep:
            s = s + w[i]
        return s * d

    return _assemble(A, F, field, entry)


@dataclass(frozen=True)
class CohomologyReport:
    h: tuple[int, ...]
    betti: tuple[int, ...]
    ranks: tuple[int, ...]
    character: CharacterSpec
    seed: int

    @property
    def euler(self) -> int:
        return sum((-1) ** k * x for k, x in enumerate(self.h))

    def to_json(self) -> dict:
        return {"h": list(self.h), "betti": list(self.betti), "ranks": list(self.ranks),
                "character": self.character.to_json(), "flag_seed": self.seed}


def local_cohomology(A: Arrangement, chi: CharacterSpec, seed: int = 1) -> CohomologyReport:
    F = build_flag(A, seed)
    cx = build_complex(A, F, chi)
    ranks = cx.ranks()
    h = cohomology_dims(complex_shape(A, F).sizes, ranks)
    b = betti(A)
    if sum((-1) ** k * x for k, x in enumerate(h)) != sum((-1) ** k * x for k, x in enumerate(b)):
        raise InternalConsistencyError("Euler characteristic mismatch")
    return CohomologyReport(h, b, ranks, chi, seed)


def opposite_pairs(A: Arrangement, F: Flag) -> list[tuple[Chamber, Chamber, int, int]]:
    """``(C, C^v, dim X(C), deg(C, C^v))`` for every C in bch^(ell-1)."""
    st = stratify(A, F)
    out = []
    for C in st.bch[A.ell - 1]:
        D = opposite_chamber(A, C)
        dim, _ = infinity_span(A, C)
        out.append((C, D, dim, degree(A, F, C, D, A.ell - 1)))
    return out
