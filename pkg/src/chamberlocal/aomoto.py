"""
Orlik-Solomon algebra of an arrangement in dimension 1 or 2 and the Aomoto
complex ``(A^*, w.)`` of multiplication by a degree-one class w.

Degree-two basis: for every vertex p with incident lines ``i_1 < ... < i_m``
the products ``e_{i_1} e_{i_j}`` for ``j >= 2``.  Any other product is rewritten
with the relation ``e_a e_b = e_{i_1} e_b - e_{i_1} e_a``; products of parallel
lines vanish.
"""
from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .arrangement import Arrangement, intersection_poset, localize
from .exactfield import QQ, Field, FieldElem, Matrix, matrix_rank
from .flagcomplex import build_flag, cohomology_dims, linearized_complex


@dataclass(frozen=True)
class OSAlgebra:
    n: int
    ell: int
    basis2: tuple[tuple[int, int], ...]
    # (a, b) with a < b  ->  {basis2 position: integer coefficient}
    products: dict

    @property
    def dims(self) -> tuple[int, ...]:
        return (1, self.n) if self.ell == 1 else (1, self.n, len(self.basis2))

    def product(self, a: int, b: int) -> dict[int, int]:
        """``e_a e_b`` in the degree-two basis as ``{position: coefficient}``."""
        if a == b:
            return {}
        if a < b:
            return self.products.get((a, b), {})
        return {k: -v for k, v in self.products.get((b, a), {}).items()}

    def __hash__(self):
        return hash((self.n, self.ell, self.basis2))


@functools.lru_cache(maxsize=256)
def build_os(A: Arrangement) -> OSAlgebra:
    if A.ell == 1:
        return OSAlgebra(A.n, 1, (), {})
    basis2: list[tuple[int, int]] = []
    products: dict[tuple[int, int], dict[int, int]] = {}
    for vertex in intersection_poset(A).points:
        first, *rest = vertex.hyperplanes
        pos = {}
        for j in rest:
            pos[j] = len(basis2)
            basis2.append((first, j))
        for j in rest:
            products[(first, j)] = {pos[j]: 1}
        for a, b in itertools.combinations(rest, 2):
            products[(a, b)] = {pos[b]: 1, pos[a]: -1}
    return OSAlgebra(A.n, 2, tuple(basis2), products)


def weights(field: Field, values: Sequence) -> tuple[FieldElem, ...]:
    return tuple(field(v) for v in values)


def cup_matrix(os: OSAlgebra, w: Sequence[FieldElem], k: int) -> Matrix:
    """Matrix of ``w . : A^k -> A^(k+1)`` in the standard bases."""
    field = w[0].field
    if k == 0:
        return Matrix(field, os.n, 1, tuple(w))
    if k != 1:
        raise ValueError(f"cup_matrix degree must be 0 or 1, got {k}")
    rows, cols = len(os.basis2), os.n
    data = [field.zero()] * (rows * cols)
    for j in range(cols):
        for i in range(os.n):
            if w[i].is_zero():
                continue
            for pos, c in os.product(i, j).items():
                data[pos * cols + j] = data[pos * cols + j] + w[i] * c
    return Matrix(field, rows, cols, tuple(data))


def cup_maps(os: OSAlgebra, w: Sequence[FieldElem]) -> list[Matrix]:
    return [cup_matrix(os, w, k) for k in range(os.ell)]


def aomoto_betti(A: Arrangement, w: Sequence[FieldElem]) -> tuple[int, ...]:
    os = build_os(A)
    return cohomology_dims(os.dims, [matrix_rank(m) for m in cup_maps(os, w)])


def cup_ranks(A: Arrangement, w: Sequence[FieldElem]) -> tuple[int, ...]:
    return tuple(matrix_rank(m) for m in cup_maps(build_os(A), w))


def linearized_dims(A: Arrangement, w: Sequence[FieldElem], seed: int = 1) -> tuple[int, ...]:
    F = build_flag(A, seed)
    return linearized_complex(A, F, w).dims()


@dataclass
class CupReport:
    checked: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def check_cup_nonzero(A: Arrangement, field: Field, samples: Sequence[Sequence[FieldElem]] | None = None,
                      exhaustive_bound: int = 7) -> CupReport:
    """Check that ``w .`` is nonzero in every degree for each nonzero w.

    Over a finite field with at most ``exhaustive_bound`` elements all of
    ``K^n`` is enumerated; otherwise ``samples`` must be supplied.
    """
    if samples is None:
        if field.order is None or field.order > exhaustive_bound:
            raise ValueError(f"{field!r} is too large to enumerate; pass samples")
        elems = field.elements()
        samples = itertools.product(elems, repeat=A.n)
    os = build_os(A)
    checked, bad = 0, []
    for w in samples:
        w = tuple(w)
        if all(x.is_zero() for x in w):
            continue
        checked += 1
        for k, m in enumerate(cup_maps(os, w)):
            if m.is_zero():
                bad.append((tuple(x.to_json() for x in w), k + 1))
    return CupReport(checked, bad)


def random_weights(field: Field, n: int, rng: random.Random, *, nonzero_sum: bool = False,
                   spread: int = 9) -> tuple[FieldElem, ...]:
    """Random weight vector with small integer (or residue) entries."""
    while True:
        if field.order is not None:
            w = tuple(field(rng.randrange(field.order)) for _ in range(n))
        else:
            w = tuple(field(rng.randint(-spread, spread)) for _ in range(n))
        total = sum(w, field.zero())
        if any(w) and (not nonzero_sum or total):
            return w


def localized_cup_ranks(A: Arrangement, w: Sequence[FieldElem], x) -> tuple[int, ...]:
    """Cup-map ranks of the central sub-arrangement at vertex x with restricted weights."""
    sub, index = localize(A, x)
    return cup_ranks(sub, [w[i] for i in index])


def rational_samples(n: int, count: int, seed: int = 0) -> list[tuple[FieldElem, ...]]:
    rng = random.Random(seed)
    return [random_weights(QQ, n, rng) for _ in range(count)]
