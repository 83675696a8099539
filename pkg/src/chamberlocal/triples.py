"""
Deletion-restriction triples ``(A, A', A'')`` for an affine distinguished
hyperplane H, the induced local systems, Betti additivity and the dimension
inequality coming from the long exact sequence.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import Arrangement, ArrangementError, betti, intersect_lines, normalize_arrangement
from .flagcomplex import CharacterSpec, local_cohomology


@dataclass(frozen=True)
class Triple:
    base: Arrangement
    distinguished: int
    deleted: Arrangement | None         # None when A' is empty
    deleted_essential: bool
    restricted: Arrangement | None      # None when A'' lives in a point (ell = 1)
    restricted_lines: tuple[tuple[int, ...], ...] = field(default=())  # lines of A through each point of A''
    deleted_index: tuple[int, ...] = field(default=())                 # A' position -> A index
    # for a non-essential A' (all lines parallel): its ell = 1 essentialization
    essentialized: Arrangement | None = None


def make_triple(A: Arrangement, H: int, *, essential_only: bool = False) -> Triple:
    if not 0 <= H < A.n:
        raise IndexError(f"no hyperplane {H} in an arrangement of {A.n}")
    keep = tuple(i for i in range(A.n) if i != H)
    raw = [(A[i].normal, A[i].offset) for i in keep]
    deleted = normalize_arrangement(raw, A.ell, essential=False) if keep else None
    essential = deleted is not None and (A.ell == 1 or len(deleted.infinity_points) >= 2)
    if not essential and essential_only:
        raise ArrangementError(f"deleting hyperplane {H + 1} leaves a non-essential arrangement")
    ess = None
    if deleted is not None and not essential and A.ell == 2:
        ess = _essentialize(deleted)
    if A.ell == 1:
        return Triple(A, H, deleted, essential, None, (), keep, ess)
    h = A[H]
    a1, a2 = h.normal
    norm = a1 * a1 + a2 * a2
    origin = (Fraction(h.offset * a1, norm), Fraction(h.offset * a2, norm))
    along = (-a2, a1)
    through: dict[Fraction, list[int]] = {}
    for i in keep:
        p = intersect_lines(h, A[i])
        if p is not None:
            s = ((p[0] - origin[0]) * along[0] + (p[1] - origin[1]) * along[1]) / norm
            through.setdefault(s, []).append(i)
    params = sorted(through)
    restricted = normalize_arrangement([((1,), s) for s in params], 1)
    lines = tuple(tuple(through[s]) for s in params)
    return Triple(A, H, deleted, essential, restricted, lines, keep, ess)


def _essentialize(D: Arrangement) -> Arrangement:
    """Parallel lines ``a.x = c_i`` -> points ``c_i`` on the line."""
    a = D[0].normal
    return normalize_arrangement([((1,), Fraction(h.offset) * _ratio(a, h.normal)) for h in D], 1)


def _ratio(a, b) -> Fraction:
    # b = t * a for parallel normals; return 1/t so that b.x = c  <=>  a.x = c/t
    k = 0 if a[0] else 1
    return Fraction(a[k], b[k])


def deleted_betti(T: Triple) -> tuple[int, ...]:
    ell = T.base.ell
    if T.deleted is None:
        return (1,) + (0,) * ell
    if T.deleted_essential:
        return betti(T.deleted)
    b = betti(T.essentialized)
    return b + (0,) * (ell + 1 - len(b))


def restricted_betti(T: Triple) -> tuple[int, ...]:
    if T.restricted is None:
        return (1,)
    return betti(T.restricted)


@dataclass(frozen=True)
class AdditivityReport:
    b: tuple[int, ...]
    b_deleted: tuple[int, ...]
    b_restricted: tuple[int, ...]
    ok: bool


def betti_additivity(A: Arrangement, H: int) -> AdditivityReport:
    """``b_k(M) = b_k(M') + b_(k-1)(M'')`` for all k."""
    T = make_triple(A, H)
    b, bd, br = betti(A), deleted_betti(T), restricted_betti(T)
    ok = all(b[k] == bd[k] + (br[k - 1] if 0 < k <= len(br) else 0) for k in range(len(b)))
    return AdditivityReport(b, bd, br, ok)


def induced_characters(T: Triple, chi: CharacterSpec) -> tuple[CharacterSpec, CharacterSpec | None]:
    """Characters on ``A'`` (drop r_H) and on ``A''`` (product of r_i over lines through each point)."""
    one = chi.field.one()
    if chi.q[T.distinguished] != one:
        raise ValueError(f"monodromy around hyperplane {T.distinguished + 1} is not trivial")
    deleted = chi.restrict(T.deleted_index)
    if T.restricted is None:
        return deleted, None
    roots = []
    for lines in T.restricted_lines:
        r = one
        for i in lines:
            r = r * chi.roots[i]
        roots.append(r)
    return deleted, CharacterSpec(chi.field, tuple(roots))


def _cohomology(arr: Arrangement | None, chi: CharacterSpec | None, ell: int) -> tuple[int, ...]:
    if arr is None:
        return (1,) + (0,) * ell
    return local_cohomology(arr, chi).h


@dataclass(frozen=True)
class TripleReport:
    h: tuple[int, ...]
    h_deleted: tuple[int, ...]
    h_restricted: tuple[int, ...]
    b: tuple[int, ...]
    b_deleted: tuple[int, ...]
    b_restricted: tuple[int, ...]
    inequality_ok: bool
    equality_degrees: tuple[int, ...]   # degrees k with h^k = b_k
    equality_case_ok: bool

    def to_json(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.__dict__.items()}


def triple_inequality(A: Arrangement, H: int, chi: CharacterSpec) -> TripleReport:
    T = make_triple(A, H)
    chi_d, chi_r = induced_characters(T, chi)
    ell = A.ell
    h = local_cohomology(A, chi).h
    if T.deleted is None:
        h_d = (1,) + (0,) * ell
    elif T.deleted_essential:
        h_d = local_cohomology(T.deleted, chi_d).h
    else:
        # M' is (line minus points) x C: same cohomology as the essentialization
        # the essentialization keeps the parallel lines in order, so chi_d carries over
        hd = local_cohomology(T.essentialized, chi_d).h
        h_d = hd + (0,) * (ell + 1 - len(hd))
    h_r = _cohomology(T.restricted, chi_r, 0)
    b, b_d, b_r = betti(A), deleted_betti(T), restricted_betti(T)

    def prev(v, k):
        return v[k - 1] if 0 < k <= len(v) else 0

    ineq = all(h[k] <= h_d[k] + prev(h_r, k) for k in range(ell + 1))
    triggered = tuple(k for k in range(ell + 1) if h[k] == b[k])
    eq_ok = all(h_d[k] == b_d[k] and prev(h_r, k) == prev(b_r, k) for k in triggered)
    return TripleReport(h, h_d, h_r, b, b_d, b_r, ineq, triggered, eq_ok)
