import itertools

import pytest

from chamberlocal import corpus
from chamberlocal.arrangement import ArrangementError, betti, normalize_arrangement
from chamberlocal.exactfield import cyclotomic
from chamberlocal.flagcomplex import CharacterSpec, local_cohomology
from chamberlocal.sweep import SweepConfig
from chamberlocal.triples import (betti_additivity, deleted_betti, induced_characters, make_triple,
                                  restricted_betti, triple_inequality)

ARRS = corpus.corpus(extra=True)


def test_make_triple_generic():
    T = make_triple(corpus.get("generic3"), 2)
    assert T.deleted.n == 2 and T.deleted_essential
    assert T.restricted.n == 2
    assert sorted(T.restricted_lines) == [(0,), (1,)]


def test_make_triple_pencil_dedup():
    T = make_triple(corpus.get("pencil3"), 0)
    assert T.restricted.n == 1
    assert T.restricted_lines == ((1, 2),)


def test_make_triple_parallel_deleted():
    A = corpus.get("strip")
    T = make_triple(A, 2)
    assert not T.deleted_essential and T.essentialized.n == 2
    assert deleted_betti(T) == (1, 2, 0)
    with pytest.raises(ArrangementError):
        make_triple(A, 2, essential_only=True)
    with pytest.raises(IndexError):
        make_triple(A, 3)


@pytest.mark.parametrize("name,H,b,bd,br", [
    ("generic3", 2, (1, 3, 3), (1, 2, 1), (1, 2)),
    ("pencil3", 0, (1, 3, 2), (1, 2, 1), (1, 1)),
    ("points2", 0, (1, 2), (1, 1), (1,)),
])
def test_betti_additivity_examples(name, H, b, bd, br):
    rep = betti_additivity(corpus.get(name), H)
    assert (rep.b, rep.b_deleted, rep.b_restricted, rep.ok) == (b, bd, br, True)


@pytest.mark.parametrize("name", list(ARRS))
def test_betti_additivity_everywhere(name):
    A = ARRS[name]
    assert all(betti_additivity(A, H).ok for H in range(A.n))


def test_induced_character_product():
    A = corpus.get("near_pencil5")
    K = cyclotomic(6)
    z = K.zeta()
    chi = CharacterSpec(K, (K(1), z, z ** 2, z ** 4, z))
    T = make_triple(A, 0)
    chi_d, chi_r = induced_characters(T, chi)
    assert chi_d.roots == chi.roots[1:]
    for lines, r in zip(T.restricted_lines, chi_r.roots):
        prod = K.one()
        for i in lines:
            prod = prod * chi.roots[i]
        assert r == prod
    with pytest.raises(ValueError):
        induced_characters(make_triple(A, 1), chi)


def test_triple_examples():
    A = corpus.get("generic3")
    K = cyclotomic(4)
    i = K.zeta()
    rep = triple_inequality(A, 2, CharacterSpec(K, (i, i, K(1))))
    assert rep.inequality_ok
    triv = triple_inequality(A, 2, CharacterSpec(K, (K(1),) * 3))
    assert triv.h == triv.b and triv.h_deleted == triv.b_deleted and triv.h_restricted == triv.b_restricted
    assert triv.equality_degrees == (0, 1, 2) and triv.equality_case_ok


@pytest.mark.parametrize("name", list(ARRS))
@pytest.mark.parametrize("m", [2, 3])
def test_triple_inequality_sweep(name, m):
    A = ARRS[name]
    cfg = SweepConfig(A, m)
    for exps in cfg.exponent_tuples():
        chi = cfg.character(exps)
        for H in range(A.n):
            if exps[H] % m:
                continue
            rep = triple_inequality(A, H, chi)
            assert rep.inequality_ok and rep.equality_case_ok
            if not chi.is_trivial():
                assert rep.equality_degrees == ()


@pytest.mark.parametrize("name", [k for k, A in ARRS.items() if A.ell == 2])
def test_restricted_closed_form(name):
    A = ARRS[name]
    cfg = SweepConfig(A, 3)
    for H in range(A.n):
        T = make_triple(A, H)
        n2 = T.restricted.n
        for exps in itertools.product(range(3), repeat=A.n):
            if exps[H]:
                continue
            _, chi_r = induced_characters(T, cfg.character(exps))
            h = local_cohomology(T.restricted, chi_r).h
            assert h == ((1, n2) if chi_r.is_trivial() else (0, n2 - 1))
            assert restricted_betti(T) == (1, n2)
