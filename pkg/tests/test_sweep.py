import pytest

from chamberlocal import corpus
from chamberlocal.exactfield import smallest_prime_with_roots
from chamberlocal.sweep import SweepConfig, SweepTooLarge, cross_validate, evaluate_character, run_sweep


def test_generic3_m2():
    rep = run_sweep(SweepConfig(corpus.get("generic3"), 2))
    assert len(rep.results) == 8 and rep.passed
    assert rep.summary["trivial"] == 1 and rep.summary["nontrivial"] == 7
    assert rep.summary["strict"] == 7 and rep.summary["trivial_equality"] == 1
    assert rep.h_distribution() == {(0, 0, 1): 7}


def test_pencil3_m3():
    rep = run_sweep(SweepConfig(corpus.get("pencil3"), 3))
    assert len(rep.results) == 27 and rep.passed
    nontrivial = [r for r in rep.results if not r.trivial]
    assert len(nontrivial) == 26 and all(r.h[1] <= 1 for r in nontrivial)
    # Künneth: h = (0, 1, 1) exactly when the product of the q_i is 1
    for r in nontrivial:
        assert r.h == ((0, 1, 1) if sum(r.exponents) % 3 == 0 else (0, 0, 0))


def test_cross_m2():
    rep = run_sweep(SweepConfig(corpus.get("cross"), 2))
    assert rep.h_distribution() == {(0, 0, 0): 3}


def test_lexicographic_order_and_determinism():
    cfg = SweepConfig(corpus.get("pencil3_plus1"), 2)
    rep = run_sweep(cfg)
    exps = [r.exponents for r in rep.results]
    assert exps == sorted(exps) and len(exps) == 16
    assert exps[0] == (0, 0, 0, 0) and rep.results[0].trivial
    par = run_sweep(cfg, workers=2)
    assert [r.to_json() for r in par.results] == [r.to_json() for r in rep.results]


def test_guard():
    cfg = SweepConfig(corpus.get("near_pencil5"), 4, limit=100)
    with pytest.raises(SweepTooLarge):
        run_sweep(cfg)


def test_config_validation():
    A = corpus.get("generic3")
    with pytest.raises(ValueError):
        SweepConfig(A, 0)
    with pytest.raises(ValueError):
        SweepConfig(A, 3, prime=11)
    assert SweepConfig(A, 3, prime=13).field.order == 13


@pytest.mark.parametrize("m,p", [(2, 5), (3, 7), (4, 17)])
def test_default_prime(m, p):
    assert smallest_prime_with_roots(2 * m) == p
    assert SweepConfig(corpus.get("generic3"), m).with_prime().prime == p


@pytest.mark.parametrize("m", [2, 3])
def test_prime_matches_cyclotomic(m):
    A = corpus.get("near_pencil5")
    cyc = run_sweep(SweepConfig(A, m))
    fp = run_sweep(SweepConfig(A, m).with_prime())
    assert [r.h for r in cyc.results] == [r.h for r in fp.results]


def test_evaluate_character_flags():
    A = corpus.get("generic4")
    cfg = SweepConfig(A, 2)
    res = evaluate_character(A, cfg.character((1, 0, 0, 0)), (1, 0, 0, 0))
    assert res.passed and not res.trivial and res.nabla_nonzero
    assert res.to_json()["pass"] is True


@pytest.mark.parametrize("name", sorted(corpus.corpus(extra=True)))
def test_cross_validate(name):
    rep = cross_validate(SweepConfig(corpus.corpus(extra=True)[name], 3), samples=8)
    assert rep.ok, rep.failures


def test_report_json():
    rep = run_sweep(SweepConfig(corpus.get("points2"), 2))
    doc = rep.to_json(full=False)
    assert "results" not in doc and doc["characters"] == 4 and doc["pass"]
    assert len(rep.to_json()["results"]) == 4
