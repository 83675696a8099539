"""
Exhaustive sweeps over finite-order characters ``q_i = zeta_m^(a_i)`` and the
per-character verdicts: strict inequality ``h^k < b_k`` for nontrivial
characters, equality for the trivial one, nonvanishing differentials, the
``b_1 - 2`` bound and the Euler identity.
"""
from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .aomoto import aomoto_betti, linearized_dims, random_weights
from .arrangement import Arrangement, betti
from .exactfield import (GF, QQ, Field, FieldElem, cyclotomic, matrix_rank, root_of_unity,
                         smallest_prime_with_roots)
from .flagcomplex import (CharacterSpec, build_complex, build_flag, cohomology_dims, complex_shape,
                          local_cohomology)

DEFAULT_LIMIT = 10 ** 6


class SweepTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    arrangement: Arrangement
    m: int
    prime: int | None = None   # None: cyclotomic field Q(zeta_2m); else F_p with 2m | p - 1
    limit: int = DEFAULT_LIMIT
    seed: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"character order must be >= 1, got {self.m}")
        if self.prime is not None and (self.prime - 1) % (2 * self.m):
            raise ValueError(f"2m = {2 * self.m} does not divide p - 1 = {self.prime - 1}")

    @property
    def field(self) -> Field:
        return cyclotomic(2 * self.m) if self.prime is None else GF(self.prime)

    @property
    def root(self) -> FieldElem:
        """Fixed element of order 2m; r_i is its a_i-th power."""
        return root_of_unity(self.field, 2 * self.m, 1)

    def character(self, exponents: Sequence[int]) -> CharacterSpec:
        return CharacterSpec.from_exponents(self.field, self.root, exponents)

    def exponent_tuples(self):
        return itertools.product(range(self.m), repeat=self.arrangement.n)

    def count(self) -> int:
        return self.m ** self.arrangement.n

    def with_prime(self, prime: int | None = None) -> SweepConfig:
        p = prime or smallest_prime_with_roots(2 * self.m)
        return SweepConfig(self.arrangement, self.m, p, self.limit, self.seed)


@dataclass(frozen=True)
class CharacterResult:
    exponents: tuple[int, ...]
    h: tuple[int, ...]
    ranks: tuple[int, ...]
    trivial: bool
    strict: bool            # h^k < b_k in every degree
    equality: bool          # h == b
    gap_two: bool           # h^k <= b_k - 2 for 1 <= k <= ell - 1
    euler_ok: bool
    nabla_nonzero: bool

    @property
    def passed(self) -> bool:
        if self.trivial:
            return self.equality and self.euler_ok
        return self.strict and self.gap_two and self.euler_ok and self.nabla_nonzero

    def to_json(self) -> dict:
        return {"exponents": list(self.exponents), "h": list(self.h), "ranks": list(self.ranks),
                "trivial": self.trivial, "strict": self.strict, "gap_two": self.gap_two,
                "euler_ok": self.euler_ok, "nabla_nonzero": self.nabla_nonzero, "pass": self.passed}


def evaluate_character(A: Arrangement, chi: CharacterSpec, exponents: Sequence[int], seed: int = 1) -> CharacterResult:
    F = build_flag(A, seed)
    cx = build_complex(A, F, chi)
    ranks = tuple(matrix_rank(mat) for mat in cx.nabla)
    h = cohomology_dims(complex_shape(A, F).sizes, ranks)
    b = betti(A)
    euler = sum((-1) ** k * (x - y) for k, (x, y) in enumerate(zip(h, b))) == 0
    return CharacterResult(
        exponents=tuple(exponents),
        h=h,
        ranks=ranks,
        trivial=chi.is_trivial(),
        strict=all(x < y for x, y in zip(h, b)),
        equality=h == b,
        gap_two=all(h[k] <= b[k] - 2 for k in range(1, A.ell)),
        euler_ok=euler,
        nabla_nonzero=all(not mat.is_zero() for mat in cx.nabla),
    )


def _evaluate(args):
    config, exps = args
    return evaluate_character(config.arrangement, config.character(exps), exps, config.seed)


@dataclass
class SweepReport:
    config: SweepConfig
    results: list[CharacterResult]
    seconds: float = 0.0
    summary: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CharacterResult]:
        return [r for r in self.results if not r.passed]

    def h_distribution(self) -> dict[tuple[int, ...], int]:
        out: dict[tuple[int, ...], int] = {}
        for r in self.results:
            if not r.trivial:
                out[r.h] = out.get(r.h, 0) + 1
        return dict(sorted(out.items()))

    def to_json(self, full: bool = True) -> dict:
        doc = {
            "m": self.config.m,
            "field": repr(self.config.field),
            "characters": len(self.results),
            "summary": self.summary,
            "h_distribution": [{"h": list(h), "count": c} for h, c in self.h_distribution().items()],
            "pass": self.passed,
            "seconds": round(self.seconds, 3),
        }
        if full:
            doc["results"] = [r.to_json() for r in self.results]
        return doc


def run_sweep(config: SweepConfig, workers: int = 1) -> SweepReport:
    """Evaluate every character of order dividing m, in lexicographic exponent order."""
    if config.count() > config.limit:
        raise SweepTooLarge(f"{config.count()} characters exceed the limit {config.limit}")
    start = time.perf_counter()
    jobs = [(config, exps) for exps in config.exponent_tuples()]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_evaluate, jobs, chunksize=64))
    else:
        results = [_evaluate(j) for j in jobs]
    nontrivial = [r for r in results if not r.trivial]
    summary = {
        "trivial": len(results) - len(nontrivial),
        "nontrivial": len(nontrivial),
        "strict": sum(r.strict for r in nontrivial),
        "gap_two": sum(r.gap_two for r in nontrivial),
        "nabla_nonzero": sum(r.nabla_nonzero for r in nontrivial),
        "euler_ok": sum(r.euler_ok for r in results),
        "trivial_equality": sum(r.equality for r in results if r.trivial),
        "failures": sum(not r.passed for r in results),
    }
    return SweepReport(config, results, time.perf_counter() - start, summary)


@dataclass
class CrossReport:
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"checked": self.checked, "failures": self.failures, "pass": self.ok}


def cross_validate(config: SweepConfig, samples: int = 16, seeds: tuple[int, int] = (1, 8),
                   rng_seed: int = 0) -> CrossReport:
    """Oracle battery on a deterministic sample of characters.

    Flag independence, every single square-root sign flip, the Euler identity,
    agreement between the cyclotomic and prime-field realizations, and the
    linearized chamber complex against the Aomoto complex.
    """
    A = config.arrangement
    rng = random.Random(rng_seed)
    all_exps = list(config.exponent_tuples())
    picked = all_exps if len(all_exps) <= samples else [all_exps[0]] + rng.sample(all_exps[1:], samples - 1)
    other = config.with_prime() if config.prime is None else SweepConfig(A, config.m, None, config.limit)
    b = betti(A)
    euler_b = sum((-1) ** k * x for k, x in enumerate(b))
    report = CrossReport()
    for exps in picked:
        chi = config.character(exps)
        h = local_cohomology(A, chi, seeds[0]).h
        checks = {
            "flag_seed": local_cohomology(A, chi, seeds[1]).h == h,
            "root_flip": all(local_cohomology(A, chi.flip(i), seeds[0]).h == h for i in range(A.n)),
            "euler": sum((-1) ** k * x for k, x in enumerate(h)) == euler_b,
            "field_swap": local_cohomology(A, other.character(exps), seeds[0]).h == h,
        }
        report.checked += 1
        report.failures.extend({"exponents": list(exps), "check": k} for k, ok in checks.items() if not ok)
    for K in (QQ, GF(7)):
        w = random_weights(K, A.n, rng)
        report.checked += 1
        if aomoto_betti(A, w) != linearized_dims(A, w, seeds[0]):
            report.failures.append({"weights": [x.to_json() for x in w], "check": "linearization"})
    return report
