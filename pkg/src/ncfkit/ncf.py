"""Nested canalyzing functions in canonical layered form.

A nested canalyzing function (NCF) on n >= 2 variables is described by an
ordered partition of the variables into layers, a canalyzing input bit per
variable, and an output constant b.  Writing M_i for the product of
(x_v xor a_v) over layer i's variables, the function is

    M_1 (M_2 ( ... (M_{r-1} (M_r xor 1) xor 1) ... ) xor 1) xor b

(for r = 1 simply M_1 xor b).  Operationally: scan the layers in order and
emit b xor ((i-1) mod 2) at the first layer i holding some variable at its
canalyzing input; a word that clears every layer gets b xor (r mod 2).
Every NCF has exactly one such description once layers are required to be
maximal and the last layer to hold at least two variables, which is what
makes recognition, the profile [k_1..k_r] of layer sizes, and the layer
number r well defined.

Recognition peels maximal layers: collect ALL (variable, input) pairs that
force the current function constant, check they agree on the forced value,
emit them as a layer, fix those variables at their complemented inputs and
recurse.  Collecting all pairs (not a greedy single variable) is what lands
on the canonical maximal-layer form.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from .errors import ParseError
from .truthtable import TruthTable, Word

LayerPair = Tuple[int, int]  # (variable index, canalyzing input)
Layer = Tuple[LayerPair, ...]


@dataclass(frozen=True)
class Profile:
    """Layer sizes [k_1, ..., k_r]; k_i >= 1, k_r >= 2, summing to n."""

    ks: Tuple[int, ...]

    def __post_init__(self):
        ks = tuple(int(k) for k in self.ks)
        object.__setattr__(self, "ks", ks)
        if not ks:
            raise ValueError("profile needs at least one layer")
        if any(k < 1 for k in ks):
            raise ValueError(f"layer sizes must be >= 1, got {ks}")
        if ks[-1] < 2:
            raise ValueError(f"last layer size must be >= 2, got {ks}")

    @property
    def n(self) -> int:
        return sum(self.ks)

    @property
    def r(self) -> int:
        return len(self.ks)

    def __str__(self) -> str:
        return "[" + ",".join(str(k) for k in self.ks) + "]"


@dataclass(frozen=True)
class NcfLayerSpec:
    """Canonical description: ordered layers of (variable, input) pairs + b.

    Variable indices across layers partition 1..n; within a layer pairs are
    kept in ascending variable order (the within-layer order carries no
    meaning, so normalizing makes equality structural).
    """

    n: int
    layers: Tuple[Layer, ...]
    b: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"layered form needs n >= 2, got n={self.n}")
        if self.b not in (0, 1):
            raise ValueError(f"output constant must be 0 or 1, got {self.b!r}")
        if not self.layers:
            raise ValueError("at least one layer required")
        norm = []
        seen: set = set()
        for layer in self.layers:
            if not layer:
                raise ValueError("empty layer")
            for v, a in layer:
                if not 1 <= v <= self.n:
                    raise ValueError(f"variable x{v} out of range 1..{self.n}")
                if a not in (0, 1):
                    raise ValueError(f"canalyzing input must be 0 or 1: x{v}")
                if v in seen:
                    raise ValueError(f"variable x{v} appears twice")
                seen.add(v)
            norm.append(tuple(sorted((int(v), int(a)) for v, a in layer)))
        if len(seen) != self.n:
            missing = sorted(set(range(1, self.n + 1)) - seen)
            raise ValueError(f"layers do not cover variables {missing}")
        if len(norm[-1]) < 2:
            raise ValueError("last layer must hold at least two variables")
        object.__setattr__(self, "layers", tuple(norm))

    @property
    def r(self) -> int:
        return len(self.layers)

    def profile(self) -> Profile:
        return Profile(tuple(len(layer) for layer in self.layers))

    def canalyzed_values(self) -> Tuple[int, ...]:
        """Forced output of each layer: b, then alternating."""
        return tuple(self.b ^ ((i - 1) & 1) for i in range(1, self.r + 1))

    def to_string(self) -> str:
        inner = " | ".join(
            " ".join(f"x{v}:{a}" for v, a in layer) for layer in self.layers
        )
        return f"[{inner}] b={self.b}"

    def __str__(self) -> str:
        return self.to_string()

    @classmethod
    def parse(cls, text: str) -> "NcfLayerSpec":
        return parse_layer_spec(text)


_PAIR_RE = re.compile(r"x(\d+):([01])$")


def parse_layer_spec(text: str) -> NcfLayerSpec:
    """Parse "[x1:0 x2:1 | x3:0 x4:0] b=0" into a validated spec."""
    open_idx = text.find("[")
    if open_idx < 0:
        raise ParseError("expected '[' to open the layer list", 0, text)
    if text[:open_idx].strip():
        raise ParseError("unexpected text before '['", 0, text)
    close_idx = text.find("]", open_idx)
    if close_idx < 0:
        raise ParseError("missing closing ']'", len(text) - 1, text)
    body = text[open_idx + 1 : close_idx]

    layers = []
    pos = open_idx + 1
    for chunk in body.split("|"):
        pairs = []
        for m in re.finditer(r"\S+", chunk):
            token = m.group(0)
            token_pos = pos + m.start()
            pm = _PAIR_RE.match(token)
            if not pm:
                raise ParseError(
                    f"expected token like 'x2:0', got {token!r}",
                    token_pos,
                    text,
                )
            pairs.append((int(pm.group(1)), int(pm.group(2))))
        if not pairs:
            raise ParseError("empty layer", pos, text)
        layers.append(tuple(pairs))
        pos += len(chunk) + 1

    tail = text[close_idx + 1 :].strip()
    tail_pos = close_idx + 1 + (
        len(text[close_idx + 1 :]) - len(text[close_idx + 1 :].lstrip())
    )
    bm = re.match(r"b=([01])$", tail)
    if not bm:
        raise ParseError(
            f"expected 'b=0' or 'b=1' after ']', got {tail!r}", tail_pos, text
        )
    n = sum(len(layer) for layer in layers)
    try:
        return NcfLayerSpec(n=n, layers=tuple(layers), b=int(bm.group(1)))
    except ValueError as exc:
        raise ParseError(str(exc), open_idx, text) from exc


class NcfFailure(enum.Enum):
    """Why recognition rejected a table."""

    CONSTANT = "constant"
    INESSENTIAL_VARIABLE = "inessential_variable"
    NO_CANALYZING_VARIABLE = "no_canalyzing_variable"
    INCONSISTENT_CANALYZED_VALUES = "inconsistent_canalyzed_values"


@dataclass(frozen=True)
class NotNcf:
    """Normal (non-error) recognition outcome for tables outside the class."""

    stage: NcfFailure
    layer: Optional[int] = None
    detail: str = ""

    def __str__(self) -> str:
        where = f" at layer {self.layer}" if self.layer is not None else ""
        tail = f": {self.detail}" if self.detail else ""
        return f"not nested canalyzing ({self.stage.value}{where}{tail})"


RecognitionResult = Union[NcfLayerSpec, NotNcf]


def construct(spec: NcfLayerSpec) -> TruthTable:
    """Tabulate the layered form; depends on all n variables, never constant."""
    n, r, b = spec.n, spec.r, spec.b
    canalyzed = spec.canalyzed_values()
    fallthrough = b ^ (r & 1)
    out = bytearray(1 << n)
    for j in range(1 << n):
        value = fallthrough
        for i, layer in enumerate(spec.layers):
            hit = False
            for v, a in layer:
                if (j >> (v - 1)) & 1 == a:
                    hit = True
                    break
            if hit:
                value = canalyzed[i]
                break
        out[j] = value
    return TruthTable(n, bytes(out))


def _restriction_constant(vals: bytes, m: int, i: int, a: int) -> Optional[int]:
    """Value forced by fixing variable i+1 (0-based i) to a, or None."""
    first = vals[a << i]
    for j in range(len(vals)):
        if (j >> i) & 1 == a and vals[j] != first:
            return None
    return first


def _restrict_complements(
    vals: bytes, m: int, fixed: Sequence[Tuple[int, int]]
) -> bytes:
    """Fix the given 0-based variables to the given bits, drop them."""
    taken = {i for i, _ in fixed}
    survivors = [i for i in range(m) if i not in taken]
    base = 0
    for i, bit in fixed:
        base |= bit << i
    out = bytearray(1 << len(survivors))
    for w in range(len(out)):
        j = base
        for k, i in enumerate(survivors):
            j |= ((w >> k) & 1) << i
        out[w] = vals[j]
    return bytes(out)


def recognize(f: TruthTable) -> RecognitionResult:
    """Return the unique layered description of f, or a NotNcf diagnostic.

    Rejections carry the stage reached: constant table, a variable the
    function does not depend on, a peeling step with no canalyzing
    variable, or (defensively) a step whose canalyzing pairs disagree on
    the forced value.
    """
    if f.n < 2:
        raise ValueError(f"recognition needs n >= 2, got n={f.n}")
    if f.is_constant():
        return NotNcf(NcfFailure.CONSTANT)
    essential = f.essential_variables()
    if len(essential) != f.n:
        missing = sorted(set(range(1, f.n + 1)) - essential)
        return NotNcf(
            NcfFailure.INESSENTIAL_VARIABLE,
            detail="no dependence on " + ", ".join(f"x{v}" for v in missing),
        )

    vals = f.values
    m = f.n
    varmap = list(range(1, f.n + 1))  # current index (0-based) -> original
    layers = []
    canalyzed = []
    while True:
        step = len(layers) + 1
        pairs = []  # (current 0-based index, input, forced value)
        for i in range(m):
            for a in (0, 1):
                forced = _restriction_constant(vals, m, i, a)
                if forced is not None:
                    pairs.append((i, a, forced))
        if not pairs:
            return NotNcf(NcfFailure.NO_CANALYZING_VARIABLE, layer=step)
        forced_values = {c for _, _, c in pairs}
        pair_vars = [i for i, _, _ in pairs]
        if len(forced_values) != 1 or len(set(pair_vars)) != len(pair_vars):
            return NotNcf(
                NcfFailure.INCONSISTENT_CANALYZED_VALUES,
                layer=step,
                detail="canalyzing pairs disagree on the forced value",
            )
        value = forced_values.pop()
        if canalyzed and value == canalyzed[-1]:
            return NotNcf(
                NcfFailure.INCONSISTENT_CANALYZED_VALUES,
                layer=step,
                detail="forced value failed to alternate",
            )
        canalyzed.append(value)
        layers.append(tuple(sorted((varmap[i], a) for i, a, _ in pairs)))
        if len(pairs) == m:
            break  # all remaining variables canalyze: final layer
        vals = _restrict_complements(vals, m, [(i, a ^ 1) for i, a, _ in pairs])
        survivors = [i for i in range(m) if i not in set(pair_vars)]
        varmap = [varmap[i] for i in survivors]
        m = len(survivors)
    return NcfLayerSpec(n=f.n, layers=tuple(layers), b=canalyzed[0])


def profile_of(spec: NcfLayerSpec) -> Profile:
    return spec.profile()


def layer_number(spec: NcfLayerSpec) -> int:
    return spec.r


def sensitivity_formula(profile: Profile) -> int:
    """Closed-form sensitivity of any function with this layer profile.

    n for a single layer; otherwise the larger of the odd-position layer
    sizes and the even-position layer sizes, where whichever alternating
    sum excludes the last layer gains +1.
    """
    ks = profile.ks
    r = profile.r
    if r == 1:
        return profile.n
    odd = sum(ks[0::2])
    even = sum(ks[1::2])
    if r % 2:
        return max(odd, even + 1)
    return max(odd + 1, even)


def sensitivity_bounds(profile: Profile) -> Tuple[int, int]:
    """(lower, upper) bounds implied by (n, r) alone; exact at r=1 and r=n-1.

    The general lower bound is (n+1)/2, rounded up here since sensitivity
    is integral; the upper bound is n+1-(r+1)/2 for odd r and n+1-r/2 for
    even r.
    """
    n, r = profile.n, profile.r
    if r == 1:
        return n, n
    if r == n - 1:
        exact = (n + 2) // 2 if n % 2 == 0 else (n + 1) // 2
        return exact, exact
    lower = (n + 2) // 2
    upper = n + 1 - (r + 1) // 2 if r % 2 else n + 1 - r // 2
    return lower, upper


@dataclass(frozen=True)
class StandardForm:
    """A layered function reduced to standard position plus the way back.

    ``table`` has every canalyzing input 0, output constant 0, and variables
    relabeled so each layer is contiguous.  The original function is
    recovered as

        table.xor_shift(shift).permute(sigma)   (+ complement if output_flip)

    which only applies transforms that leave sensitivity, block sensitivity
    and every size-capped variant unchanged.
    """

    table: TruthTable
    sigma: Tuple[int, ...]  # sigma[k-1] = original variable at position k
    shift: Word
    output_flip: bool


def standardize(spec: NcfLayerSpec) -> StandardForm:
    sizes = [len(layer) for layer in spec.layers]
    std_layers = []
    pos = 1
    for k in sizes:
        std_layers.append(tuple((pos + j, 0) for j in range(k)))
        pos += k
    std_spec = NcfLayerSpec(n=spec.n, layers=tuple(std_layers), b=0)
    sigma = []
    shift = []
    for layer in spec.layers:
        for v, a in layer:
            sigma.append(v)
            shift.append(a)
    return StandardForm(
        table=construct(std_spec),
        sigma=tuple(sigma),
        shift=tuple(shift),
        output_flip=bool(spec.b),
    )
