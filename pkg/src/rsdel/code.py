"""Code construction, encoding, interpolation, and on-disk formats.

A code instance is described by an odd prime p, the canonical irreducible
cubic g over F_p, and an ordered tuple delta of distinct nonzero base-field
values.  The evaluation points are

    alpha_i = delta_i + delta_i^2 * gamma        (coordinates (d, d^2, 0))

and a message (m1, m2) in F_{p^3}^2 encodes to c_i = m1 + m2 * alpha_i.
Positions are 1-based everywhere in the public API.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DegenerateInterpolationError, FieldMismatchError, ParameterError
from .field import CubicField, ExtElem, MonicCubic, PrimeField, find_irreducible_cubic

# int64 vector math keeps sums of five coordinate products below 2^63 as long
# as p stays below this bound; beyond it arrays switch to object dtype.
_INT64_MAX_P = 1 << 30


class CodeSpec:
    """Everything needed to encode and decode one code instance.

    Derived data (field contexts, evaluation-point arrays, the delta lookup
    table) is computed once here.  Treat instances as immutable; the numpy
    arrays are marked read-only.
    """

    __slots__ = ("p", "g", "delta", "n", "field", "ext", "delta_index",
                 "_alpha", "_dtype")

    def __init__(self, p: int, g: MonicCubic, delta: Sequence[int], *,
                 alpha_rows=None):
        field = PrimeField(p)
        ext = CubicField(field, g)
        delta = tuple(int(d) for d in delta)
        n = len(delta)
        if not 3 <= n <= p - 1:
            raise ParameterError(
                f"blocklength must satisfy 3 <= n <= p - 1, got n={n} p={p}")
        if any(not 0 < d < p for d in delta):
            raise ParameterError("delta entries must be nonzero residues mod p")
        if len(set(delta)) != n:
            raise ParameterError("delta entries must be distinct")
        self.p = p
        self.g = ext.g
        self.field = field
        self.ext = ext
        self.delta = delta
        self.n = n
        self.delta_index = {d: i + 1 for i, d in enumerate(delta)}
        dtype = np.int64 if p <= _INT64_MAX_P else object
        self._dtype = dtype
        if alpha_rows is None:
            d = np.array(delta, dtype=dtype)
            alpha = np.stack([d, d * d % p, np.zeros(n, dtype=dtype)], axis=1)
        else:
            alpha = np.array(alpha_rows, dtype=dtype) % p
            if alpha.shape != (n, 3):
                raise ParameterError("alpha override must have shape (n, 3)")
            if len({tuple(int(c) for c in row) for row in alpha}) != n:
                raise ParameterError("evaluation points must be distinct")
        alpha.setflags(write=False)
        self._alpha = alpha

    def __eq__(self, other):
        return (
            isinstance(other, CodeSpec)
            and other.p == self.p
            and other.g == self.g
            and other.delta == self.delta
            and np.array_equal(other._alpha, self._alpha)
        )

    def __hash__(self):
        return hash((self.p, self.g, self.delta))

    def __repr__(self):
        return f"CodeSpec(p={self.p}, g={tuple(self.g)}, n={self.n})"

    def alpha_coords(self, i: int):
        """Coordinate triple of the i-th evaluation point, i in 1..n."""
        if not 1 <= i <= self.n:
            raise ParameterError(f"position {i} out of range 1..{self.n}")
        row = self._alpha[i - 1]
        return (int(row[0]), int(row[1]), int(row[2]))

    def alpha_at(self, i: int) -> ExtElem:
        return ExtElem(self.ext, self.alpha_coords(i))

    @property
    def alpha(self):
        """All evaluation points as ExtElem, in position order."""
        return tuple(self.alpha_at(i) for i in range(1, self.n + 1))

    def fast_search_ok(self) -> bool:
        # packed int64 keys need p^3 < 2^63
        return self.p < (1 << 21)


def build_code(p: int, n: int, delta_override: Optional[Sequence[int]] = None) -> CodeSpec:
    """Construct the code with the canonical cubic and delta = (1, ..., n)."""
    if delta_override is not None:
        delta = tuple(delta_override)
        if len(delta) != n:
            raise ParameterError(f"delta override has {len(delta)} entries, expected {n}")
    else:
        delta = tuple(range(1, n + 1))
    g = find_irreducible_cubic(p)
    return CodeSpec(p, g, delta)


@dataclass(frozen=True)
class Message:
    """A pair (m1, m2); the encoded word evaluates m1 + m2*x at each point."""

    m1: ExtElem
    m2: ExtElem


class Codeword:
    """Length-n vector of F_{p^3} symbols, stored as an (n, 3) array."""

    __slots__ = ("spec", "coords")

    def __init__(self, spec: CodeSpec, coords):
        coords = np.asarray(coords, dtype=spec._dtype)
        if coords.shape != (spec.n, 3):
            raise ParameterError(f"codeword must have shape ({spec.n}, 3)")
        coords.setflags(write=False)
        self.spec = spec
        self.coords = coords

    def __len__(self):
        return self.spec.n

    def __getitem__(self, i: int) -> ExtElem:
        row = self.coords[i]
        return ExtElem(self.spec.ext, (int(row[0]), int(row[1]), int(row[2])))

    def __iter__(self):
        for i in range(len(self)):
            yield self[i]

    def symbols(self):
        return tuple(self)

    def symbol_tuples(self):
        return [(int(r[0]), int(r[1]), int(r[2])) for r in self.coords]

    def __eq__(self, other):
        return (
            isinstance(other, Codeword)
            and other.spec == self.spec
            and np.array_equal(other.coords, self.coords)
        )

    def __hash__(self):
        return hash((self.spec.p, self.spec.delta, self.coords.tobytes()
                     if self.coords.dtype == np.int64 else tuple(map(tuple, self.coords))))

    def __repr__(self):
        return f"Codeword(n={self.spec.n}, p={self.spec.p})"


def encode(spec: CodeSpec, m: Message) -> Codeword:
    """Evaluate m1 + m2*alpha_i at every evaluation point, vectorized."""
    if m.m1.field != spec.ext or m.m2.field != spec.ext:
        raise FieldMismatchError("message does not belong to this code's field")
    p = spec.p
    a0 = spec._alpha[:, 0]
    a1 = spec._alpha[:, 1]
    a2 = spec._alpha[:, 2]
    e0, e1, e2 = m.m2.coords
    m10, m11, m12 = m.m1.coords
    h0, h1, h2, k0, k1, k2 = spec.ext._consts
    # schoolbook product of the constant m2 with each alpha_i, degree-3 and
    # degree-4 terms folded back in; z3/z4 reduced early to bound int64 growth
    z3 = (e1 * a2 + e2 * a1) % p
    z4 = e2 * a2 % p
    c0 = (e0 * a0 + z3 * h0 + z4 * k0 + m10) % p
    c1 = (e0 * a1 + e1 * a0 + z3 * h1 + z4 * k1 + m11) % p
    c2 = (e0 * a2 + e1 * a1 + e2 * a0 + z3 * h2 + z4 * k2 + m12) % p
    return Codeword(spec, np.stack([c0, c1, c2], axis=1))


def interpolate(spec: CodeSpec, i: int, j: int, y_i: ExtElem, y_j: ExtElem) -> Message:
    """Recover (m1, m2) from two distinct evaluation positions.

    m2 = (y_i - y_j) / (alpha_i - alpha_j),  m1 = y_i - m2 * alpha_i.
    """
    if i == j:
        raise DegenerateInterpolationError(f"positions coincide: i = j = {i}")
    ai = spec.alpha_at(i)
    aj = spec.alpha_at(j)
    m2 = (y_i - y_j) / (ai - aj)
    m1 = y_i - m2 * ai
    return Message(m1, m2)


def gamma_map(spec: CodeSpec, i: int, j: int, k: int) -> ExtElem:
    """Ratio (alpha_i - alpha_j) / (alpha_j - alpha_k) for i < j < k.

    Injective over increasing triples for specs built from the quadratic
    evaluation map; that is exactly what check_injectivity certifies.
    """
    if not (1 <= i < j < k <= spec.n):
        raise ParameterError(
            f"triple must be strictly increasing within 1..{spec.n}, got {(i, j, k)}")
    ai, aj, ak = spec.alpha_at(i), spec.alpha_at(j), spec.alpha_at(k)
    return (ai - aj) / (aj - ak)


def lookup_delta(spec: CodeSpec, d: int) -> Optional[int]:
    """1-based position of base-field value d in delta, or None."""
    return spec.delta_index.get(int(d))


def random_message(spec: CodeSpec, rng: random.Random) -> Message:
    return Message(spec.ext.rand(rng), spec.ext.rand(rng))


# -- on-disk formats -----------------------------------------------------
#
# Code-spec file: three whitespace-separated key lines.
#     p 5
#     g 1 1 0          (g0 g1 g2)
#     delta 1 2 3 4
#
# Symbol files (codewords, received words): one symbol per line as
# comma-separated canonical coordinates "c0,c1,c2".


def save_spec(spec: CodeSpec, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"p {spec.p}\n")
        fh.write(f"g {spec.g.g0} {spec.g.g1} {spec.g.g2}\n")
        fh.write("delta " + " ".join(str(d) for d in spec.delta) + "\n")


def load_spec(path) -> CodeSpec:
    fields = {}
    with open(path) as fh:
        for line in fh:
            parts = line.split()
            if not parts:
                continue
            key, values = parts[0], parts[1:]
            if key in fields:
                raise ParameterError(f"duplicate key {key!r} in spec file")
            try:
                fields[key] = [int(v) for v in values]
            except ValueError:
                raise ParameterError(f"non-integer value on line {line!r}") from None
    missing = {"p", "g", "delta"} - fields.keys()
    if missing:
        raise ParameterError(f"spec file is missing keys: {sorted(missing)}")
    extra = fields.keys() - {"p", "g", "delta"}
    if extra:
        raise ParameterError(f"spec file has unknown keys: {sorted(extra)}")
    if len(fields["p"]) != 1:
        raise ParameterError("key p takes exactly one value")
    if len(fields["g"]) != 3:
        raise ParameterError("key g takes exactly three values (g0 g1 g2)")
    p = fields["p"][0]
    g = MonicCubic(*fields["g"])
    return CodeSpec(p, g, fields["delta"])


def save_symbols(path, word) -> None:
    """Write a codeword or any symbol sequence, one c0,c1,c2 line each."""
    if isinstance(word, Codeword):
        rows = word.symbol_tuples()
    else:
        rows = [sym.coords for sym in word]
    with open(path, "w") as fh:
        for c0, c1, c2 in rows:
            fh.write(f"{c0},{c1},{c2}\n")


def load_symbols(path, spec: CodeSpec):
    """Read a symbol sequence of any length into a tuple of ExtElem."""
    out = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 3:
                raise ParameterError(
                    f"line {lineno}: expected three comma-separated ints, got {line!r}")
            try:
                c0, c1, c2 = (int(v) for v in parts)
            except ValueError:
                raise ParameterError(f"line {lineno}: non-integer coordinate") from None
            if not all(0 <= c < spec.p for c in (c0, c1, c2)):
                raise ParameterError(
                    f"line {lineno}: coordinates must be canonical in [0, {spec.p})")
            out.append(ExtElem(spec.ext, (c0, c1, c2)))
    return tuple(out)


def load_codeword(path, spec: CodeSpec) -> Codeword:
    symbols = load_symbols(path, spec)
    if len(symbols) != spec.n:
        raise ParameterError(
            f"codeword file has {len(symbols)} symbols, code needs {spec.n}")
    return Codeword(spec, np.array([s.coords for s in symbols], dtype=spec._dtype))
