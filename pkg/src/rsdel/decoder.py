"""Decoders that recover a codeword from three surviving symbols.

Both decoders start from the invariant ratio

    beta = (y1 - y2) / (y2 - y3)
         = (alpha_k1 - alpha_k2) / (alpha_k2 - alpha_k3)

where (k1, k2, k3) are the unknown kept positions.  The cubic decoder scans
increasing triples in lexicographic order until the ratio matches.  The
linear decoder reads the kept delta values straight out of beta:  writing
beta = a*gamma^2 + b*gamma + c and beta*gamma = r*gamma^2 + s*gamma + t, the
kept positions satisfy

    p2 = a*(d3 - d2) + r*(d3^2 - d2^2)                       = 0
    p0 = d1 - d2 + c*(d3 - d2) + t*(d3^2 - d2^2)             = 0
    p1 = d1^2 - d2^2 + b*(d3 - d2) + s*(d3^2 - d2^2)         = 0

(d_m short for delta_{k_m}), which collapses to a closed form: with
theta = a/r,

    d2 = (b - theta*(c^2 + s - 2*c*t*theta + t^2*theta^2))
         / (2*(c + c^2 - 2*c*t*theta + t*theta*(t*theta - 1)))
    d3 = -d2 - theta
    d1 = d2*(1 + 2*c - 2*t*theta) + theta*(c - t*theta)

The quadratic behind d2 has a second root -a/(2r); it forces d2 = d3 and is
never returned.  If r = 0 or the denominator vanishes the solver signals
needs-fallback and the triple search runs instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter
from typing import Optional

import numpy as np

from .channel import DeletionPattern
from .code import CodeSpec, Message, Codeword, encode, gamma_map, interpolate, lookup_delta
from .errors import (
    InconsistentReceivedWordError,
    UnrecognizedReceivedWordError,
)
from .field import ExtElem, PrimeField

PATH_CLOSED_FORM = "closed-form"
PATH_FALLBACK = "fallback-search"
PATH_CONSTANT = "constant"

# Nominal F_p costs per operation, used by the instrumentation so counts are
# exactly reproducible (extension inversion has a rare data-dependent step
# count that would otherwise leak into them).  add/sub/mul/inv on F_p cost 1;
# extension ops are priced at their schoolbook decomposition.
OPS_EXT_ADD = 3
OPS_EXT_SUB = 3
OPS_EXT_MUL = 25
OPS_EXT_INV = 80
OPS_BETA = 2 * OPS_EXT_SUB + OPS_EXT_INV + OPS_EXT_MUL
OPS_GAMMA_MAP = 2 * OPS_EXT_SUB + OPS_EXT_INV + OPS_EXT_MUL
OPS_SOLVE = 24              # straight-line closed form incl. two F_p inversions
OPS_INTERPOLATE = 2 * OPS_EXT_SUB + OPS_EXT_INV + 2 * OPS_EXT_MUL
OPS_THIRD_POINT = OPS_EXT_MUL + OPS_EXT_ADD
OPS_ENCODE_PER_SYMBOL = 15  # vectorized schoolbook product + fold, per symbol
OPS_SEARCH_SETUP_PER_POS = OPS_EXT_MUL + OPS_EXT_ADD  # beta*alpha_j, target per j
OPS_SEARCH_ROW_PER_ENTRY = OPS_EXT_ADD  # candidate sum per scanned k entry
OPS_SEARCH_PER_TRIPLE = 1   # one ratio test (key comparison) per scanned triple

_NUMPY_SEARCH_MIN_N = 32


@dataclass
class DecodeInstrumentation:
    """Field-operation and timing probe threaded through one or more decodes.

    total_ops accumulates every priced operation; search_ops only those spent
    identifying the kept triple (beta, coefficient extraction, solving and
    validation for the linear path; beta plus the scan for the cubic path).
    """

    total_ops: int = 0
    search_ops: int = 0
    search_seconds: float = 0.0


@dataclass(frozen=True)
class ReceivedTriple:
    y1: ExtElem
    y2: ExtElem
    y3: ExtElem

    @classmethod
    def from_symbols(cls, symbols, truncate: bool = False) -> "ReceivedTriple":
        symbols = tuple(symbols)
        if len(symbols) > 3 and truncate:
            symbols = symbols[:3]
        if len(symbols) != 3:
            raise InconsistentReceivedWordError(
                f"decoder consumes exactly three symbols, got {len(symbols)}")
        return cls(*symbols)

    def __iter__(self):
        return iter((self.y1, self.y2, self.y3))


@dataclass
class DecodeOutcome:
    message: Message
    codeword: Codeword
    kappa: DeletionPattern
    path: str


def compute_beta(y: ReceivedTriple, inst: Optional[DecodeInstrumentation] = None):
    """The triple ratio, or None when the received word is constant.

    Exactly two equal symbols cannot come out of the channel: a degree-one
    codeword is constant (m2 = 0) or injective on evaluation points.
    """
    e12 = y.y1 == y.y2
    e23 = y.y2 == y.y3
    if e12 and e23:
        return None
    if e12 or e23 or y.y1 == y.y3:
        raise InconsistentReceivedWordError(
            "exactly two of three received symbols are equal")
    if inst:
        inst.total_ops += OPS_BETA
    return (y.y1 - y.y2) / (y.y2 - y.y3)


def extract_coefficients(beta: ExtElem,
                         inst: Optional[DecodeInstrumentation] = None):
    """Read (a, b, c, r, s, t) from beta and beta*gamma.

    beta = a*gamma^2 + b*gamma + c, beta*gamma = r*gamma^2 + s*gamma + t.
    Equivalently r = b - a*g2, s = c - a*g1, t = -a*g0.
    """
    c, b, a = beta.decompose()
    bg = beta * beta.field.gamma
    t, s, r = bg.decompose()
    if inst:
        inst.total_ops += OPS_EXT_MUL
    return (a, b, c, r, s, t)


def solve_deltas(pf: PrimeField, coeffs,
                 inst: Optional[DecodeInstrumentation] = None):
    """Closed-form kept delta values (d1, d2, d3), or None for needs-fallback.

    None is returned when r = 0 (theta undefined) or the d2 denominator is 0
    (the quadratic degenerates).  The alternate quadratic root -a/(2r) is
    never produced; it would force d2 = d3.
    """
    a, b, c, r, s, t = coeffs
    p = pf.p
    if r % p == 0:
        return None
    theta = a * pow(r, -1, p) % p
    tt = t * theta % p
    den = 2 * (c + c * c - 2 * c * tt + tt * (tt - 1)) % p
    if den == 0:
        return None
    num = (b - theta * (c * c + s - 2 * c * tt + tt * tt)) % p
    d2 = num * pow(den, -1, p) % p
    d3 = (-d2 - theta) % p
    d1 = (d2 * (1 + 2 * c - 2 * tt) + theta * (c - tt)) % p
    if inst:
        inst.total_ops += OPS_SOLVE
    return (d1, d2, d3)


# -- triple search -------------------------------------------------------
#
# The scan tests Gamma(i, j, k) == beta without divisions:
#
#     alpha_i - alpha_j == beta * (alpha_j - alpha_k)
#     <=>  alpha_i + beta*alpha_k == alpha_j + beta*alpha_j
#
# so with balpha_j = beta * alpha_j precomputed, each triple costs one
# coordinate add and one comparison.  Injectivity of the ratio map means at
# most one triple can ever match.


def _search_triple_python(spec: CodeSpec, beta, inst):
    ext = spec.ext
    p = spec.p
    n = spec.n
    alpha = [spec.alpha_coords(i) for i in range(1, n + 1)]
    balpha = [ext.mul(beta, a) for a in alpha]
    target = [ext.add(a, ba) for a, ba in zip(alpha, balpha)]
    if inst:
        inst.total_ops += n * OPS_SEARCH_SETUP_PER_POS
    tests = 0
    found = None
    for i in range(n - 2):
        ai0, ai1, ai2 = alpha[i]
        for j in range(i + 1, n - 1):
            tj = target[j]
            for k in range(j + 1, n):
                bk = balpha[k]
                tests += 1
                if ((ai0 + bk[0]) % p, (ai1 + bk[1]) % p, (ai2 + bk[2]) % p) == tj:
                    found = (i + 1, j + 1, k + 1)
                    break
            if found:
                break
        if found:
            break
    if inst:
        inst.total_ops += tests * (OPS_SEARCH_PER_TRIPLE + OPS_EXT_ADD)
    return found


def _search_triple_numpy(spec: CodeSpec, beta, inst):
    p = spec.p
    n = spec.n
    a0 = spec._alpha[:, 0]
    a1 = spec._alpha[:, 1]
    a2 = spec._alpha[:, 2]
    e0, e1, e2 = beta
    h0, h1, h2, k0, k1, k2 = spec.ext._consts
    z3 = (e1 * a2 + e2 * a1) % p
    z4 = e2 * a2 % p
    b0 = (e0 * a0 + z3 * h0 + z4 * k0) % p
    b1 = (e0 * a1 + e1 * a0 + z3 * h1 + z4 * k1) % p
    b2 = (e0 * a2 + e1 * a1 + e2 * a0 + z3 * h2 + z4 * k2) % p
    pp = p * p
    # packed keys are exact: coordinates are canonical and p^3 < 2^63
    kv = (a0 + b0) % p + ((a1 + b1) % p) * p + ((a2 + b2) % p) * pp
    if inst:
        inst.total_ops += n * OPS_SEARCH_SETUP_PER_POS
    tests = 0
    found = None
    for i in range(n - 2):
        lo = i + 2  # 0-based k candidates start here
        w = ((int(a0[i]) + b0[lo:]) % p
             + ((int(a1[i]) + b1[lo:]) % p) * p
             + ((int(a2[i]) + b2[lo:]) % p) * pp)
        rows = kv[i + 1:n - 1]
        # rows index j = i+1+rj, cols index k = i+2+rk; valid when rk >= rj
        eq = rows[:, None] == w[None, :]
        width = n - lo
        tests += (width + 1) * width // 2  # valid (j, k) pairs in this block
        if inst:
            inst.total_ops += width * OPS_SEARCH_ROW_PER_ENTRY
        if eq.any():
            for rj, rk in np.argwhere(eq):
                if rk >= rj:
                    found = (i + 1, i + 2 + int(rj), i + 3 + int(rk))
                    break
        if found:
            break
    if inst:
        inst.total_ops += tests * OPS_SEARCH_PER_TRIPLE
    return found


def _search_triple(spec: CodeSpec, beta_coords, inst):
    if spec.n >= _NUMPY_SEARCH_MIN_N and spec.fast_search_ok():
        return _search_triple_numpy(spec, beta_coords, inst)
    return _search_triple_python(spec, beta_coords, inst)


# -- decoders ------------------------------------------------------------


def _constant_outcome(spec, y, inst):
    m = Message(y.y1, spec.ext.zero)
    if inst:
        inst.total_ops += spec.n * OPS_ENCODE_PER_SYMBOL
    return DecodeOutcome(m, encode(spec, m), DeletionPattern(()), PATH_CONSTANT)


def _finish(spec, y, kappa, path, inst):
    k1, k2, k3 = kappa
    m = interpolate(spec, k1, k2, y.y1, y.y2)
    third = m.m1 + m.m2 * spec.alpha_at(k3)
    if inst:
        inst.total_ops += OPS_INTERPOLATE + OPS_THIRD_POINT
    if third != y.y3:
        raise UnrecognizedReceivedWordError(
            f"third received symbol is off the interpolated line at {kappa}")
    cw = encode(spec, m)
    if inst:
        inst.total_ops += spec.n * OPS_ENCODE_PER_SYMBOL
    return DecodeOutcome(m, cw, DeletionPattern(kappa), path)


def decode_cubic(spec: CodeSpec, y: ReceivedTriple,
                 inst: Optional[DecodeInstrumentation] = None) -> DecodeOutcome:
    """Decode by scanning all increasing triples for a ratio match.

    Worst case Theta(n^3) ratio tests; raises UnrecognizedReceivedWordError
    when no triple matches.
    """
    t0 = perf_counter()
    ops0 = inst.total_ops if inst else 0
    beta = compute_beta(y, inst)
    if beta is None:
        return _constant_outcome(spec, y, inst)
    kappa = _search_triple(spec, beta.coords, inst)
    if inst:
        inst.search_ops += inst.total_ops - ops0
        inst.search_seconds += perf_counter() - t0
    if kappa is None:
        raise UnrecognizedReceivedWordError(
            "no kept triple is consistent with the received word")
    return _finish(spec, y, kappa, PATH_FALLBACK, inst)


def decode_linear(spec: CodeSpec, y: ReceivedTriple,
                  inst: Optional[DecodeInstrumentation] = None) -> DecodeOutcome:
    """Decode via the closed form; falls back to the triple search on
    degeneracy or failed validation.

    Triple identification costs O(1) field operations, re-encoding O(n).
    """
    t0 = perf_counter()
    ops0 = inst.total_ops if inst else 0
    beta = compute_beta(y, inst)
    if beta is None:
        return _constant_outcome(spec, y, inst)
    coeffs = extract_coefficients(beta, inst)
    sol = solve_deltas(spec.field, coeffs, inst)
    if sol is not None:
        i1 = lookup_delta(spec, sol[0])
        i2 = lookup_delta(spec, sol[1])
        i3 = lookup_delta(spec, sol[2])
        if (i1 is not None and i2 is not None and i3 is not None
                and i1 < i2 < i3):
            if inst:
                inst.total_ops += OPS_GAMMA_MAP
            if gamma_map(spec, i1, i2, i3) == beta:
                if inst:
                    inst.search_ops += inst.total_ops - ops0
                    inst.search_seconds += perf_counter() - t0
                return _finish(spec, y, (i1, i2, i3), PATH_CLOSED_FORM, inst)
    # needs-fallback: degenerate closed form or validation failed
    kappa = _search_triple(spec, beta.coords, inst)
    if inst:
        inst.search_ops += inst.total_ops - ops0
        inst.search_seconds += perf_counter() - t0
    if kappa is None:
        raise UnrecognizedReceivedWordError(
            "no kept triple is consistent with the received word")
    return _finish(spec, y, kappa, PATH_FALLBACK, inst)
