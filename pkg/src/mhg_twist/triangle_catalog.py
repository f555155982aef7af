"""Dense sets of sorted distance triples over the alphabet {1..delta}.

A triple (i, j, k) with i <= j <= k records that some three vertices
pairwise realize those distances.  The triple is *metric* when i + j >= k.
Sets of triples are stored as bitsets indexed by the lexicographic rank of
the triple, so images under a twist and membership tests are cheap and the
classifier can batch whole families into numpy matrices.
"""
from __future__ import annotations

import json
from functools import lru_cache
from itertools import combinations_with_replacement
from types import SimpleNamespace

import numpy as np

from .errors import (
    DimensionMismatchError,
    InvalidInputError,
    OutOfAlphabetError,
)
from .permutations import MAX_DELTA, Twist


@lru_cache(maxsize=None)
def all_triples(delta: int) -> tuple[tuple[int, int, int], ...]:
    """All sorted triples over {1..delta}, in lexicographic (rank) order."""
    _check_delta(delta)
    return tuple(combinations_with_replacement(range(1, delta + 1), 3))


@lru_cache(maxsize=None)
def triple_rank(delta: int) -> dict[tuple[int, int, int], int]:
    return {t: r for r, t in enumerate(all_triples(delta))}


def is_triangle(triple) -> bool:
    """Triangle inequality for a sorted triple."""
    i, j, k = triple
    return i + j >= k


def perimeter(triple) -> int:
    return sum(triple)


@lru_cache(maxsize=None)
def _tables(delta: int) -> SimpleNamespace:
    """Shared numpy lookup tables for one alphabet size."""
    trips = np.array(all_triples(delta), dtype=np.int64)
    n = len(trips)
    perim = trips.sum(axis=1)
    mins = trips[:, 0]
    metric = trips[:, 0] + trips[:, 1] >= trips[:, 2]
    even = perim % 2 == 0
    rank3d = np.full((delta + 1,) * 3, -1, dtype=np.int64)
    rank3d[trips[:, 0], trips[:, 1], trips[:, 2]] = np.arange(n)
    geodesic = np.array(
        [rank3d[1, k, k + 1] for k in range(1, delta)], dtype=np.int64
    )
    return SimpleNamespace(
        n=n,
        triples=trips,
        perimeter=perim,
        mins=mins,
        metric=metric,
        even=even,
        rank3d=rank3d,
        nonmetric_ranks=np.flatnonzero(~metric),
        geodesic_ranks=geodesic,
        even_small_metric_ranks=np.flatnonzero(
            metric & even & (perim <= 2 * delta)
        ),
    )


class TriangleSet:
    """Immutable bitset of sorted triples over a fixed alphabet."""

    __slots__ = ("delta", "_bits")

    def __init__(self, delta: int, bits: int = 0):
        _check_delta(delta)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "_bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("TriangleSet is immutable")

    @classmethod
    def from_triples(cls, delta: int, triples) -> "TriangleSet":
        _check_delta(delta)
        ranks = triple_rank(delta)
        bits = 0
        for t in triples:
            bits |= 1 << _rank_of(delta, ranks, t)
        return cls(delta, bits)

    @classmethod
    def from_bool_array(cls, delta: int, arr) -> "TriangleSet":
        arr = np.asarray(arr, dtype=bool)
        if arr.shape != (_tables(delta).n,):
            raise DimensionMismatchError(
                f"expected {_tables(delta).n} flags for delta={delta}, got {arr.shape}"
            )
        packed = np.packbits(arr.astype(np.uint8), bitorder="little")
        return cls(delta, int.from_bytes(packed.tobytes(), "little"))

    def to_bool_array(self) -> np.ndarray:
        n = _tables(self.delta).n
        raw = self._bits.to_bytes((n + 7) // 8, "little")
        flags = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return flags[:n].astype(bool)

    def __contains__(self, triple) -> bool:
        r = _rank_of(self.delta, triple_rank(self.delta), triple)
        return bool((self._bits >> r) & 1)

    def members(self) -> list[tuple[int, int, int]]:
        trips = all_triples(self.delta)
        bits = self._bits
        out = []
        r = 0
        while bits:
            if bits & 1:
                out.append(trips[r])
            bits >>= 1
            r += 1
        return out

    def __len__(self) -> int:
        return self._bits.bit_count()

    def __iter__(self):
        return iter(self.members())

    def __eq__(self, other):
        return (
            isinstance(other, TriangleSet)
            and self.delta == other.delta
            and self._bits == other._bits
        )

    def __hash__(self):
        return hash((self.delta, self._bits))

    def __repr__(self):
        return f"TriangleSet(delta={self.delta}, size={len(self)})"

    def to_json(self) -> str:
        return json.dumps(
            {"delta": self.delta, "triples": [list(t) for t in self.members()]},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "TriangleSet":
        try:
            data = json.loads(text)
            delta = data["delta"]
            triples = [tuple(t) for t in data["triples"]]
        except (json.JSONDecodeError, TypeError, KeyError) as exc:
            raise InvalidInputError(f"bad triangle-set JSON: {text!r}") from exc
        return cls.from_triples(delta, triples)


def realized_set(params) -> TriangleSet:
    """The triple set a parameter tuple stands for.

    Membership for a sorted metric triple with perimeter p and minimum m:
    odd p needs a finite K1 with 2*K1 + 1 <= p <= 2*K2 + 2*m and p < C1;
    even p needs p < C0.
    """
    return _realized_cached(
        params.delta, params.k1, params.k2, params.c0, params.c1
    )


@lru_cache(maxsize=4096)
def _realized_cached(delta, k1, k2, c0, c1) -> TriangleSet:
    tabs = _tables(delta)
    p = tabs.perimeter
    even_ok = tabs.even & (p < c0)
    # with k1 infinite the lower bound is never met, killing all odd triples
    odd_ok = (
        ~tabs.even
        & (p >= 2 * k1 + 1)
        & (p <= 2 * k2 + 2 * tabs.mins)
        & (p < c1)
    )
    return TriangleSet.from_bool_array(delta, tabs.metric & (even_ok | odd_ok))


@lru_cache(maxsize=65536)
def _rank_permutation_cached(delta: int, images: tuple) -> np.ndarray:
    tabs = _tables(delta)
    imgs = np.asarray(images, dtype=np.int64)
    mapped = imgs[tabs.triples - 1]
    mapped.sort(axis=1)
    ranks = tabs.rank3d[mapped[:, 0], mapped[:, 1], mapped[:, 2]]
    ranks.setflags(write=False)
    return ranks


def rank_permutation(twist: Twist) -> np.ndarray:
    """rank -> rank map induced on sorted triples by a twist."""
    return _rank_permutation_cached(twist.delta, twist.images)


def image_set(tset: TriangleSet, twist: Twist) -> TriangleSet:
    """Pointwise image of every member triple under the twist."""
    if tset.delta != twist.delta:
        raise DimensionMismatchError(
            f"set delta {tset.delta} != twist delta {twist.delta}"
        )
    src = tset.to_bool_array()
    out = np.zeros_like(src)
    out[rank_permutation(twist)] = src
    return TriangleSet.from_bool_array(tset.delta, out)


def is_metric(tset: TriangleSet) -> tuple[bool, tuple | None]:
    """Check all members are metric; witness is the first failure in rank order."""
    flags = tset.to_bool_array()
    bad = np.flatnonzero(flags & ~_tables(tset.delta).metric)
    if bad.size:
        return False, all_triples(tset.delta)[int(bad[0])]
    return True, None


def contains_geodesics(tset: TriangleSet) -> tuple[bool, int | None]:
    """Check every (1, k, k+1) with k < delta is present; witness is least missing k."""
    flags = tset.to_bool_array()
    present = flags[_tables(tset.delta).geodesic_ranks]
    missing = np.flatnonzero(~present)
    if missing.size:
        return False, int(missing[0]) + 1
    return True, None


def gamma_diameter(tset: TriangleSet, i: int) -> int:
    """Largest k with (i, i, k) in the set, 0 if none.

    For i = delta this is the diameter of the subgraph induced on a fiber
    of vertices at distance delta from a base point.
    """
    if not 1 <= i <= tset.delta:
        raise OutOfAlphabetError(f"i={i!r} not in 1..{tset.delta}")
    for k in range(tset.delta, 0, -1):
        if tuple(sorted((i, i, k))) in tset:
            return k
    return 0


def fiber_distances(tset: TriangleSet, i: int) -> list[int]:
    """All k with (i, i, k) in the set, ascending."""
    if not 1 <= i <= tset.delta:
        raise OutOfAlphabetError(f"i={i!r} not in 1..{tset.delta}")
    return [k for k in range(1, tset.delta + 1) if tuple(sorted((i, i, k))) in tset]


def _rank_of(delta, ranks, triple) -> int:
    t = tuple(triple)
    if len(t) != 3:
        raise InvalidInputError(f"expected a triple, got {t!r}")
    if any(not isinstance(x, (int, np.integer)) for x in t):
        raise InvalidInputError(f"triple entries must be integers: {t!r}")
    if not (t[0] <= t[1] <= t[2]):
        raise InvalidInputError(f"triple must be sorted ascending: {t!r}")
    if not (1 <= t[0] and t[2] <= delta):
        raise OutOfAlphabetError(f"triple {t} not within 1..{delta}")
    return ranks[t]


def _check_delta(delta):
    if not isinstance(delta, int) or not 1 <= delta <= MAX_DELTA:
        raise InvalidInputError(
            f"delta must be an integer in 1..{MAX_DELTA}, got {delta!r}"
        )
