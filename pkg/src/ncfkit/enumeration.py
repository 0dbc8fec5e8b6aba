"""Generation and exact counting of (monotone) nested canalyzing functions.

A layered function is monotone exactly when every layer uses one uniform
canalyzing input and consecutive layers alternate between a and its
complement; the first layer's input decides the direction (0 gives
increasing, 1 decreasing).  Monotone NCFs are therefore parametrized by an
ordered variable partition (last part of size >= 2) plus two free bits,
giving the count  4 * sum over valid partitions of n! / (k_1! ... k_r!).

Streams are emitted in a fixed canonical order so runs are reproducible:
layer-size compositions by layer count then lexicographically, ordered
partitions lexicographically, then input bits ascending.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Dict, Iterator, Optional, Sequence, Tuple

from .errors import CapExceededError
from .ncf import NcfLayerSpec, Profile, construct
from .truthtable import Monotonicity

#: Full NCF streams grow as (ordered partitions) * 2^(n+1); monotone
#: streams drop the per-variable input freedom and reach further.
NCF_ENUM_CAP = 6
MNCF_ENUM_CAP = 12

Composition = Tuple[int, ...]


def _compositions_with_r(n: int, r: int) -> Iterator[Composition]:
    """Lexicographic compositions of n into r parts >= 1 with last part >= 2."""
    if r == 1:
        if n >= 2:
            yield (n,)
        return
    # leave at least r-2 ones plus a final part of 2
    for k in range(1, n - r + 1):
        for rest in _compositions_with_r(n - k, r - 1):
            yield (k,) + rest


def layer_compositions(n: int) -> Iterator[Composition]:
    """All valid layer-size compositions, ordered by layer count then lex."""
    for r in range(1, n):
        yield from _compositions_with_r(n, r)


def multinomial(n: int, ks: Sequence[int]) -> int:
    """n! / (k_1! ... k_r!) via a product of binomials; exact big integer."""
    if sum(ks) != n:
        raise ValueError(f"parts {tuple(ks)} do not sum to {n}")
    out = 1
    remaining = n
    for k in ks:
        out *= comb(remaining, k)
        remaining -= k
    return out


def ordered_partitions(
    variables: Tuple[int, ...], sizes: Sequence[int]
) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Ordered set partitions with the given part sizes, lexicographic."""
    if not sizes:
        yield ()
        return
    head_size = sizes[0]
    for head in combinations(variables, head_size):
        chosen = set(head)
        rest = tuple(v for v in variables if v not in chosen)
        for tail in ordered_partitions(rest, sizes[1:]):
            yield (head,) + tail


@dataclass(frozen=True)
class MncfSpec:
    """A monotone layered function: variable partition plus two free bits.

    Layer i uses canalyzing input ``a`` when i is odd and its complement
    when i is even; ``b`` is the output constant.
    """

    n: int
    partition: Tuple[Tuple[int, ...], ...]
    a: int
    b: int

    def __post_init__(self):
        if self.a not in (0, 1) or self.b not in (0, 1):
            raise ValueError("a and b must be bits")
        parts = tuple(tuple(sorted(part)) for part in self.partition)
        object.__setattr__(self, "partition", parts)
        seen: set = set()
        for part in parts:
            seen.update(part)
        if seen != set(range(1, self.n + 1)):
            raise ValueError("partition must cover variables 1..n exactly")
        if sum(len(p) for p in parts) != self.n:
            raise ValueError("partition parts overlap")
        if not parts or len(parts[-1]) < 2:
            raise ValueError("last layer must hold at least two variables")

    def to_layer_spec(self) -> NcfLayerSpec:
        layers = []
        for i, part in enumerate(self.partition, start=1):
            inp = self.a if i % 2 == 1 else self.a ^ 1
            layers.append(tuple((v, inp) for v in sorted(part)))
        return NcfLayerSpec(n=self.n, layers=tuple(layers), b=self.b)

    def truth_table(self):
        return construct(self.to_layer_spec())


def is_mncf(spec: NcfLayerSpec) -> bool:
    """True when the layered function is monotone: uniform inputs per layer,
    alternating between consecutive layers."""
    first = None
    for i, layer in enumerate(spec.layers, start=1):
        inputs = {a for _, a in layer}
        if len(inputs) != 1:
            return False
        inp = inputs.pop()
        if first is None:
            first = inp
        expected = first if i % 2 == 1 else first ^ 1
        if inp != expected:
            return False
    return True


def mncf_direction(spec: NcfLayerSpec) -> Optional[Monotonicity]:
    """Direction of a monotone layered function, None if not monotone.

    With output constant 0, first-layer input 0 gives an increasing
    function and 1 a decreasing one; a set output constant complements the
    function, which flips the direction.  Net rule: increasing exactly
    when the first-layer input equals b.
    """
    if not is_mncf(spec):
        return None
    first_input = spec.layers[0][0][1]
    if first_input == spec.b:
        return Monotonicity.INCREASING
    return Monotonicity.DECREASING


def enumerate_mncf(
    n: int,
    profile: Optional[Profile] = None,
    max_n: Optional[int] = None,
) -> Iterator[MncfSpec]:
    """Every monotone layered function on n variables, exactly once."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    limit = MNCF_ENUM_CAP if max_n is None else max_n
    if n > limit:
        raise CapExceededError("enumerate_mncf", n, limit)
    return _mncf_stream(n, profile)


def _mncf_stream(n: int, profile: Optional[Profile]) -> Iterator[MncfSpec]:
    variables = tuple(range(1, n + 1))
    for ks in layer_compositions(n):
        if profile is not None and ks != profile.ks:
            continue
        for partition in ordered_partitions(variables, ks):
            for a in (0, 1):
                for b in (0, 1):
                    yield MncfSpec(n=n, partition=partition, a=a, b=b)


def enumerate_ncf(
    n: int,
    profile: Optional[Profile] = None,
    max_n: Optional[int] = None,
) -> Iterator[NcfLayerSpec]:
    """Every layered function on n variables, exactly once.

    For each ordered partition the canalyzing inputs sweep all 2^n
    assignments (layer-major variable order, ascending) and b both values,
    so each partition contributes 2^(n+1) distinct functions.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    limit = NCF_ENUM_CAP if max_n is None else max_n
    if n > limit:
        raise CapExceededError("enumerate_ncf", n, limit)
    return _ncf_stream(n, profile)


def _ncf_stream(n: int, profile: Optional[Profile]) -> Iterator[NcfLayerSpec]:
    variables = tuple(range(1, n + 1))
    for ks in layer_compositions(n):
        if profile is not None and ks != profile.ks:
            continue
        for partition in ordered_partitions(variables, ks):
            flat = [v for part in partition for v in part]
            for bits in range(1 << n):
                assignment = {v: (bits >> p) & 1 for p, v in enumerate(flat)}
                layers = tuple(
                    tuple((v, assignment[v]) for v in sorted(part))
                    for part in partition
                )
                for b in (0, 1):
                    yield NcfLayerSpec(n=n, layers=layers, b=b)


@dataclass(frozen=True)
class CountTable:
    """Exact monotone-NCF count with its per-composition breakdown.

    ``per_profile`` maps each composition to the number of ordered variable
    partitions realizing it (a multinomial coefficient); the total is 4x
    their sum, the factor covering the two free bits.
    """

    n: int
    total: int
    per_profile: Dict[Composition, int]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "per_profile": {
                ",".join(str(k) for k in ks): count
                for ks, count in self.per_profile.items()
            },
        }


def count_mncf(n: int) -> CountTable:
    """Closed-form monotone-NCF count; agrees with the stream length."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    per: Dict[Composition, int] = {}
    for ks in layer_compositions(n):
        per[ks] = multinomial(n, ks)
    return CountTable(n=n, total=4 * sum(per.values()), per_profile=per)


def count_ncf(n: int, profile: Optional[Profile] = None) -> int:
    """Number of layered functions: 2^(n+1) per ordered partition."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    total = 0
    for ks in layer_compositions(n):
        if profile is not None and ks != profile.ks:
            continue
        total += multinomial(n, ks) * (1 << (n + 1))
    return total


def random_ncf_spec(n: int, rng: random.Random) -> NcfLayerSpec:
    """Uniform random layered function on n variables.

    Compositions are weighted by their partition counts, the partition is
    a sliced shuffle, and inputs and b are fair bits, which together make
    every canonical description equally likely.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    comps = list(layer_compositions(n))
    weights = [multinomial(n, ks) for ks in comps]
    ks = rng.choices(comps, weights=weights, k=1)[0]
    variables = list(range(1, n + 1))
    rng.shuffle(variables)
    layers = []
    pos = 0
    for k in ks:
        part = variables[pos : pos + k]
        layers.append(tuple((v, rng.getrandbits(1)) for v in sorted(part)))
        pos += k
    return NcfLayerSpec(n=n, layers=tuple(layers), b=rng.getrandbits(1))
