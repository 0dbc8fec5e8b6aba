"""Empirical verification suites.

Each suite re-checks one of the structural claims behind this package by
comparing the closed-form or generated answer against the brute-force
oracles on an exhaustive small population plus a seeded random one.  The
suites power ``ncfkit verify`` and the acceptance tests; failures carry a
printable counterexample (table, word, blocks), and identical arguments
always reproduce identical runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional

from .enumeration import (
    count_mncf,
    enumerate_mncf,
    enumerate_ncf,
    layer_compositions,
    random_ncf_spec,
)
from .ncf import (
    NcfLayerSpec,
    NotNcf,
    Profile,
    construct,
    recognize,
    sensitivity_bounds,
    sensitivity_formula,
)
from .sensitivity import full_report, sensitivity_with_witness
from .truthtable import Monotonicity, TruthTable

DEFAULT_SEED = 271828


@dataclass
class SuiteResult:
    suite: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = f"{status} {self.suite}: {self.checks} checks"
        if self.failures:
            line += f", {len(self.failures)} failures"
        return line

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": self.checks,
            "passed": self.ok,
            "failures": self.failures,
        }


def _ncf_population(
    n: int, exhaustive_max: int, sample: int, rng: random.Random
) -> Iterator[NcfLayerSpec]:
    if n <= exhaustive_max:
        yield from enumerate_ncf(n, max_n=n)
    else:
        for _ in range(sample):
            yield random_ncf_spec(n, rng)


def verify_formula(
    max_n: int = 10,
    exhaustive_max: int = 5,
    sample: int = 1000,
    seed: int = DEFAULT_SEED,
) -> SuiteResult:
    """Closed-form sensitivity == brute-force sensitivity on every function.

    Exhaustive through ``exhaustive_max`` variables, ``sample`` seeded random
    layered functions per size beyond that.
    """
    result = SuiteResult("formula")
    rng = random.Random(seed)
    for n in range(2, max_n + 1):
        for spec in _ncf_population(n, exhaustive_max, sample, rng):
            table = construct(spec)
            oracle, witness = sensitivity_with_witness(table, max_n=n)
            formula = sensitivity_formula(spec.profile())
            result.checks += 1
            if oracle != formula:
                result.fail(
                    f"spec {spec} table {table}: formula {formula} != "
                    f"oracle {oracle} at word {witness}"
                )
    return result


def verify_bs_eq_s(
    max_n: int = 8,
    exhaustive_max: int = 4,
    sample: int = 200,
    seed: int = DEFAULT_SEED,
) -> SuiteResult:
    """Block sensitivity (and every size-capped variant) == sensitivity."""
    result = SuiteResult("bs_eq_s")
    rng = random.Random(seed)
    for n in range(2, max_n + 1):
        for spec in _ncf_population(n, exhaustive_max, sample, rng):
            table = construct(spec)
            report = full_report(table, max_n=n)
            formula = sensitivity_formula(spec.profile())
            result.checks += 1
            if report.bs != report.s or report.bs != formula:
                result.fail(
                    f"spec {spec} table {table}: s={report.s} "
                    f"bs={report.bs} formula={formula} at word "
                    f"{report.bs_witness_word} blocks "
                    f"{[sorted(b) for b in report.bs_witness_blocks]}"
                )
                continue
            bad_l = [l for l, v in report.bs_l.items() if v != report.s]
            if bad_l:
                result.fail(
                    f"spec {spec} table {table}: bs_l != s at l={bad_l}"
                )
    return result


def verify_mncf(max_n: int = 4) -> SuiteResult:
    """Monotone-NCF generator against a raw truth-table scan, plus counts.

    For each size up to min(max_n, 4): filter all 2^(2^n) tables for
    monotone AND nested canalyzing, and require that set to equal the
    generator's image; sizes 5..max_n only compare the closed-form count
    against the stream length.
    """
    result = SuiteResult("mncf")
    for n in range(2, max_n + 1):
        specs = list(enumerate_mncf(n))
        count = count_mncf(n)
        result.checks += 1
        if count.total != len(specs):
            result.fail(
                f"n={n}: closed-form count {count.total} != "
                f"stream length {len(specs)}"
            )
        if n > 4:
            continue
        tables = {spec.truth_table().values for spec in specs}
        result.checks += 1
        if len(tables) != len(specs):
            result.fail(f"n={n}: generator emitted duplicate tables")
        scan = set()
        for code in range(1 << (1 << n)):
            values = bytes((code >> j) & 1 for j in range(1 << n))
            table = TruthTable(n, values)
            if table.monotonicity() is Monotonicity.NEITHER:
                continue
            if isinstance(recognize(table), NotNcf):
                continue
            scan.add(values)
        result.checks += 1
        if scan != tables:
            extra = len(tables - scan)
            missing = len(scan - tables)
            result.fail(
                f"n={n}: generator image differs from table scan "
                f"({extra} extra, {missing} missing)"
            )
    return result


def verify_bounds(max_n: int = 12) -> SuiteResult:
    """Formula values sit inside the (n, r) bounds for every profile."""
    result = SuiteResult("bounds")
    for n in range(2, max_n + 1):
        for ks in layer_compositions(n):
            profile = Profile(ks)
            value = sensitivity_formula(profile)
            lower, upper = sensitivity_bounds(profile)
            r = profile.r
            result.checks += 1
            ok = lower <= value <= upper and 2 * value >= n + 1
            if r == 1:
                ok = ok and value == n
            if r == n - 1:
                exact = (n + 2) // 2 if n % 2 == 0 else (n + 1) // 2
                ok = ok and value == exact
            if not ok:
                result.fail(
                    f"profile {profile}: value {value} outside "
                    f"[{lower}, {upper}] (n={n}, r={r})"
                )
    return result


def _random_table(n: int, rng: random.Random) -> TruthTable:
    return TruthTable(n, bytes(rng.getrandbits(1) for _ in range(1 << n)))


def verify_invariance(
    trials: int = 500, max_n: int = 8, seed: int = DEFAULT_SEED
) -> SuiteResult:
    """s, bs, and every bs_l survive permutation, input shift, complement."""
    result = SuiteResult("invariance")
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(2, max_n)
        f = _random_table(n, rng)
        sigma = list(range(1, n + 1))
        rng.shuffle(sigma)
        shift = tuple(rng.getrandbits(1) for _ in range(n))
        base = full_report(f, max_n=n)
        transformed = {
            "complement": f.complement(),
            "permute": f.permute(sigma),
            "xor_shift": f.xor_shift(shift),
        }
        result.checks += 1
        for name, g in transformed.items():
            rep = full_report(g, max_n=n)
            if (rep.s, rep.bs, dict(rep.bs_l)) != (
                base.s,
                base.bs,
                dict(base.bs_l),
            ):
                result.fail(
                    f"{name} changed measures on table {f} "
                    f"(sigma={sigma}, shift={shift}): "
                    f"({base.s},{base.bs}) -> ({rep.s},{rep.bs})"
                )
    return result


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "formula": verify_formula,
    "bs_eq_s": verify_bs_eq_s,
    "mncf": verify_mncf,
    "bounds": verify_bounds,
    "invariance": verify_invariance,
}

#: Which keyword arguments each suite accepts from the CLI.
_SUITE_KWARGS = {
    "formula": {"max_n", "sample", "seed"},
    "bs_eq_s": {"max_n", "sample", "seed"},
    "mncf": {"max_n"},
    "bounds": {"max_n"},
    "invariance": {"max_n", "seed", "trials"},
}


def run_suite(
    name: str,
    max_n: Optional[int] = None,
    sample: Optional[int] = None,
    seed: Optional[int] = None,
) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    kwargs = {}
    allowed = _SUITE_KWARGS[name]
    if max_n is not None and "max_n" in allowed:
        kwargs["max_n"] = max_n
    if sample is not None:
        if "sample" in allowed:
            kwargs["sample"] = sample
        elif "trials" in allowed:
            kwargs["trials"] = sample
    if seed is not None and "seed" in allowed:
        kwargs["seed"] = seed
    return SUITES[name](**kwargs)
