"""Exhaustive search for twists and verification of the expected catalog.

A twist of a parameter tuple is a permutation of the distance alphabet
that maps its realized triple set onto a metric set still holding every
geodesic triple.  The search sweeps the full symmetric group for one
diameter, grades every (permutation, tuple) pair with the backend
kernel, and groups the hits into families keyed by permutation.

The verifiers compare the search output against the four closed-form
permutations and their expected parameter families, reporting per-row
results instead of raising, so callers can render or exit on them.
"""

from __future__ import annotations

import itertools
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._backend import twist_verdict_grid
from .errors import BudgetError, InvalidInputError, InvalidStateError
from .parameter_space import (
    ParameterTuple,
    enumerate_candidates,
    realized_set,
    table1_rows,
)
from .permutations import Twist, identity, mu, rho, rho_inverse, tau
from .triangle_catalog import _tables
from .twistability import OUTCOME_TWISTABLE, check_twistable

MAX_SEARCH_DELTA = 8

_JOBS_ENV = "MHG_TWIST_JOBS"

#: display names for the four closed-form twists, in output order
NAMED_TWISTS = ("rho", "rho-inv", "tau0", "tau1")


def named_twists(delta: int) -> list[tuple[str, Twist]]:
    """The four closed-form twists for one diameter, in display order."""
    return [
        ("rho", rho(delta)),
        ("rho-inv", rho_inverse(delta)),
        ("tau0", tau(delta, 0)),
        ("tau1", tau(delta, 1)),
    ]


def _resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        env = os.environ.get(_JOBS_ENV)
        if env is not None:
            try:
                jobs = int(env)
            except ValueError as exc:
                raise InvalidInputError(f"{_JOBS_ENV} must be an integer: {env!r}") from exc
        else:
            jobs = os.cpu_count() or 1
    if not isinstance(jobs, int) or jobs < 1:
        raise InvalidInputError(f"jobs must be a positive integer, got {jobs!r}")
    return jobs


def _run_grid(perms: np.ndarray, delta: int, members: np.ndarray, jobs: int) -> np.ndarray:
    tabs = _tables(delta)
    args = (tabs.triples, tabs.rank3d, members, tabs.metric,
            tabs.even_small_metric_ranks, tabs.geodesic_ranks)
    if jobs == 1 or perms.shape[0] < 2 * jobs:
        return twist_verdict_grid(perms, *args)
    chunks = np.array_split(perms, jobs)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(lambda c: twist_verdict_grid(c, *args), chunks))
    return np.vstack(parts)


def find_twists(delta: int, jobs: int | None = None) -> dict[Twist, list[ParameterTuple]]:
    """Families of parameter tuples twisted by each non-identity permutation.

    Sweeps all delta! permutations against every self-consistent tuple
    for the diameter.  Keys are the permutations with at least one hit,
    in lexicographic image order; each family is sorted by tuple.  The
    identity, which fixes every realized set, is left out.
    """
    if not isinstance(delta, int) or not 3 <= delta <= MAX_SEARCH_DELTA:
        raise BudgetError(
            f"twist search supports delta in 3..{MAX_SEARCH_DELTA}, got {delta!r}"
        )
    jobs = _resolve_jobs(jobs)
    candidates = enumerate_candidates(delta)
    members = np.stack([realized_set(p).to_bool_array() for p in candidates]).astype(np.uint8)
    perms = np.array(
        list(itertools.permutations(range(1, delta + 1))), dtype=np.int64
    )
    grid = _run_grid(perms, delta, members, jobs)
    if not grid[0].all():
        raise InvalidStateError("identity failed to fix some realized set")
    families: dict[Twist, list[ParameterTuple]] = {}
    for p in map(int, np.flatnonzero(grid.any(axis=1))):
        if p == 0:
            continue
        hits = [candidates[t] for t in map(int, np.flatnonzero(grid[p]))]
        hits.sort(key=ParameterTuple.sort_key)
        families[Twist(tuple(int(x) for x in perms[p]))] = hits
    return families


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of checking the twist keys against the four formulas."""

    delta: int
    passed: bool
    expected: tuple[tuple[str, Twist], ...]
    coincidences: tuple[tuple[str, ...], ...]
    extra: tuple[Twist, ...]
    missing: tuple[Twist, ...]
    family_sizes: tuple[tuple[Twist, int], ...]

    def lines(self) -> list[str]:
        out = [f"delta={self.delta} twist keys: {'PASS' if self.passed else 'FAIL'}"]
        sizes = dict(self.family_sizes)
        for name, t in self.expected:
            n = sizes.get(t, 0)
            out.append(f"  {name} = {t.cycles()}: {n} tuple(s)")
        for names in self.coincidences:
            out.append(f"  coincidence: {' = '.join(names)}")
        for t in self.extra:
            out.append(f"  unexpected key: {t.cycles()} ({sizes.get(t, 0)} tuple(s))")
        for t in self.missing:
            out.append(f"  missing key: {t.cycles()}")
        return out

    def to_json(self) -> str:
        return json.dumps(
            {
                "delta": self.delta,
                "passed": self.passed,
                "expected": {name: t.cycles() for name, t in self.expected},
                "coincidences": [list(c) for c in self.coincidences],
                "extra": [t.cycles() for t in self.extra],
                "missing": [t.cycles() for t in self.missing],
                "family_sizes": {t.cycles(): n for t, n in self.family_sizes},
            },
            sort_keys=True,
        )


def verify_theorem_twists(
    delta: int,
    jobs: int | None = None,
    families: dict[Twist, list[ParameterTuple]] | None = None,
) -> TheoremReport:
    """Check that the twist keys are exactly the four closed forms.

    Distinct formula names can denote one permutation; such
    coincidences are reported and the key expected only once.
    """
    if families is None:
        families = find_twists(delta, jobs=jobs)
    named = named_twists(delta)
    by_value: dict[Twist, list[str]] = {}
    for name, t in named:
        by_value.setdefault(t, []).append(name)
    coincidences = tuple(
        tuple(names) for names in by_value.values() if len(names) > 1
    )
    expected_set = set(by_value)
    found_set = set(families)
    extra = tuple(sorted(found_set - expected_set, key=lambda t: t.images))
    missing = tuple(sorted(expected_set - found_set, key=lambda t: t.images))
    sizes = tuple(
        (t, len(fam))
        for t, fam in sorted(families.items(), key=lambda kv: kv[0].images)
    )
    return TheoremReport(
        delta=delta,
        passed=not extra and not missing,
        expected=tuple(named),
        coincidences=coincidences,
        extra=extra,
        missing=missing,
        family_sizes=sizes,
    )


@dataclass(frozen=True)
class Table1Report:
    """Outcome of checking twist families against the expected rows."""

    delta: int
    passed: bool
    rows: tuple[tuple[str, ParameterTuple, bool], ...]
    unlisted: tuple[tuple[str, ParameterTuple], ...]
    unexpected: tuple[tuple[Twist, tuple[ParameterTuple, ...]], ...]

    def lines(self) -> list[str]:
        out = [f"delta={self.delta} twist families: {'PASS' if self.passed else 'FAIL'}"]
        for kind, params, ok in self.rows:
            out.append(f"  [{'PASS' if ok else 'FAIL'}] {kind}: {params}")
        for kind, params in self.unlisted:
            out.append(f"  unlisted tuple under {kind}: {params}")
        for twist, fam in self.unexpected:
            out.append(
                f"  unexpected key {twist.cycles()}: "
                + ", ".join(str(p) for p in fam)
            )
        return out

    def to_json(self) -> str:
        return json.dumps(
            {
                "delta": self.delta,
                "passed": self.passed,
                "rows": [
                    {"kind": kind, "params": params.as_dict(), "found": ok}
                    for kind, params, ok in self.rows
                ],
                "unlisted": [
                    {"kind": kind, "params": params.as_dict()}
                    for kind, params in self.unlisted
                ],
                "unexpected": [
                    {
                        "sigma": twist.cycles(),
                        "families": [p.as_dict() for p in fam],
                    }
                    for twist, fam in self.unexpected
                ],
            },
            sort_keys=True,
        )


_KIND_TO_NAME = {
    "rho": "rho",
    "rho_inverse": "rho-inv",
    "tau0": "tau0",
    "tau1": "tau1",
}


def verify_table1(
    delta: int,
    jobs: int | None = None,
    families: dict[Twist, list[ParameterTuple]] | None = None,
) -> Table1Report:
    """Compare each closed-form twist's family with the expected rows."""
    if families is None:
        families = find_twists(delta, jobs=jobs)
    named = dict(named_twists(delta))
    rows = []
    expected_by_name: dict[str, set[ParameterTuple]] = {n: set() for n in NAMED_TWISTS}
    for kind, params in table1_rows(delta):
        name = _KIND_TO_NAME[kind]
        expected_by_name[name].add(params)
        found = params in families.get(named[name], ())
        rows.append((name, params, found))
    unlisted = []
    for name in NAMED_TWISTS:
        fam = set(families.get(named[name], ()))
        for params in sorted(fam - expected_by_name[name], key=ParameterTuple.sort_key):
            unlisted.append((name, params))
    known = set(named.values())
    unexpected = tuple(
        (t, tuple(fam))
        for t, fam in sorted(families.items(), key=lambda kv: kv[0].images)
        if t not in known
    )
    passed = all(ok for _, _, ok in rows) and not unlisted and not unexpected
    return Table1Report(
        delta=delta,
        passed=passed,
        rows=tuple(rows),
        unlisted=tuple(unlisted),
        unexpected=unexpected,
    )


def classification_rows(
    delta: int,
    jobs: int | None = None,
    families: dict[Twist, list[ParameterTuple]] | None = None,
) -> list[dict[str, str]]:
    """CSV-ready verdict rows for one diameter.

    One row per (closed-form twist, candidate tuple) pair, in display
    order, then rows for any keys the sweep found beyond those.  When
    two formula names give one permutation only the first is emitted.
    """
    if families is None:
        families = find_twists(delta, jobs=jobs)
    rows = []
    seen: set[Twist] = set()
    for _, twist in named_twists(delta):
        if twist in seen:
            continue
        seen.add(twist)
        for params in enumerate_candidates(delta):
            verdict = check_twistable(params, twist)
            rows.append(_csv_row(twist, params, verdict.outcome, verdict.witness_text()))
    for twist, fam in sorted(families.items(), key=lambda kv: kv[0].images):
        if twist in seen:
            continue
        for params in fam:
            rows.append(_csv_row(twist, params, OUTCOME_TWISTABLE, ""))
    return rows


def _csv_row(twist: Twist, params: ParameterTuple, outcome: str, witness: str):
    k1, k2, c, cprime = params.csv_fields()[1:]
    return {
        "sigma": twist.cycles(),
        "delta": str(params.delta),
        "K1": k1,
        "K2": k2,
        "C": c,
        "Cprime": cprime,
        "verdict": outcome,
        "witness": witness,
    }


def classify_cycle_twists(n: int) -> list[Twist]:
    """All twists of the n-cycle metric: the modular maps for units of n.

    Each unit k of Z_n relabels the cycle by multiplication, sending
    distance d to min(kd mod n, n - kd mod n).  Units k and n - k give
    one map, so the list holds each permutation once, in order of its
    least unit.  The identity (k = 1) is included.  Every returned map
    is checked against the cycle itself before being returned.
    """
    if not isinstance(n, int) or n < 3:
        raise InvalidInputError(f"cycle twists need an integer n >= 3, got {n!r}")
    if n > 128:
        raise BudgetError(f"cycle alphabet {n // 2} exceeds the supported maximum")
    out: dict[Twist, int] = {}
    for k in range(1, n):
        if math.gcd(k, n) == 1:
            t = mu(n, k)
            out.setdefault(t, k)
    twists = list(out)
    _verify_cycle_twists(n, twists)
    return twists


def _verify_cycle_twists(n: int, twists: list[Twist]) -> None:
    """Confirm each map really sends the cycle metric to a cycle metric."""
    from .finite_graphs import apply_twist_metric, cycle_graph

    g = cycle_graph(n)
    for t in twists:
        report = apply_twist_metric(g, t)
        if not report.valid:
            raise InvalidStateError(
                f"cycle twist {t.cycles()} produced an invalid metric on C_{n}"
            )
        degrees = (report.matrix == 1).sum(axis=1)
        if not (degrees == 2).all():
            raise InvalidStateError(
                f"cycle twist {t.cycles()} did not map C_{n} onto a cycle"
            )
