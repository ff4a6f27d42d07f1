"""Traces of u^i v^j three independent ways.

1. :func:`trace_word` -- exact recursion from the SL2 identity
   tr(MN) = tr(M) tr(N) - tr(M N^-1), reducing the u-power first and then
   the v-power.
2. :func:`series_table` -- expansion of the generating function
   sum_{i,j} tr(u^i v^j) s^i t^j =
   (2 - s x - t y + s t z) / ((1 - s x + s^2)(1 - t y + t^2)),
   whose denominators are the characteristic polynomials det(1 - s u) and
   det(1 - t v).  The numerator pairing (x with s, y with t) is the one
   consistent with x = tr(u); the flipped pairing is kept available as a
   deliberately wrong negative control.
3. :func:`numeric_rep` -- explicit 2x2 matrices for a representation on a
   chosen irreducible component, for float cross-checks.

The memo table behind trace_word is the only shared state in this module;
lru_cache keeps it consistent under concurrent use and the results do not
depend on evaluation order.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import TracePoly
from .charvariety import AdmissiblePair, Component, TorusKnotConfig

SERIES_MAX = 16


@lru_cache(maxsize=None)
def trace_word(i: int, j: int) -> TracePoly:
    """tr(u^i v^j) as an exact polynomial in x, y, z (i, j >= 0).

    For i, j >= 1 the result has z-degree exactly 1.
    """
    if i < 0 or j < 0:
        raise ValueError("exponents must be nonnegative")
    if (i, j) == (0, 0):
        return TracePoly.constant(2)
    if (i, j) == (1, 0):
        return TracePoly.x()
    if (i, j) == (0, 1):
        return TracePoly.y()
    if (i, j) == (1, 1):
        return TracePoly.z()
    if i >= 2:
        # tr(u * u^{i-1} v^j) = tr(u) tr(u^{i-1} v^j) - tr(u^{i-2} v^j)
        return TracePoly.x() * trace_word(i - 1, j) - trace_word(i - 2, j)
    # i <= 1, j >= 2: peel a v off the right
    return trace_word(i, j - 1) * TracePoly.y() - trace_word(i, j - 2)


def _second_kind(gen: TracePoly, n: int) -> list[TracePoly]:
    """S_0..S_n with S_0 = 1, S_1 = gen, S_{m+1} = gen*S_m - S_{m-1}."""
    out = [TracePoly.constant(1)]
    if n >= 1:
        out.append(gen)
    for _ in range(2, n + 1):
        out.append(gen * out[-1] - out[-2])
    return out


def series_table(max_i: int, max_j: int, pairing: str = "x-with-s") -> list[list[TracePoly]]:
    """Power-series coefficients G[i][j] of the trace generating function.

    1/(1 - s x + s^2) expands to sum_i S_i(x) s^i with S_i the degree-i
    second-kind recursion polynomials, so the (i, j) coefficient is read off
    as a finite combination of S_i(x) and S_j(y).  pairing="x-with-t"
    instead expands the numerator 2 - t x - s y + s t z (a wrong convention,
    kept for negative-control tests).
    """
    if max_i > SERIES_MAX or max_j > SERIES_MAX:
        raise ValueError(f"series bounds are limited to {SERIES_MAX}")
    if pairing not in ("x-with-s", "x-with-t"):
        raise ValueError(f"unknown pairing {pairing!r}")
    sx = _second_kind(TracePoly.x(), max_i)
    sy = _second_kind(TracePoly.y(), max_j)
    zero = TracePoly()

    def S(table, m):
        return table[m] if m >= 0 else zero

    x, y, z = TracePoly.x(), TracePoly.y(), TracePoly.z()
    out = []
    for i in range(max_i + 1):
        row = []
        for j in range(max_j + 1):
            if pairing == "x-with-s":
                entry = (2 * S(sx, i) * S(sy, j)
                         - x * S(sx, i - 1) * S(sy, j)
                         - y * S(sx, i) * S(sy, j - 1)
                         + z * S(sx, i - 1) * S(sy, j - 1))
            else:
                entry = (2 * S(sx, i) * S(sy, j)
                         - x * S(sx, i) * S(sy, j - 1)
                         - y * S(sx, i - 1) * S(sy, j)
                         + z * S(sx, i - 1) * S(sy, j - 1))
            row.append(entry)
        out.append(row)
    return out


def leading_z_coeff(i: int, j: int, pair: AdmissiblePair, cfg: TorusKnotConfig) -> float:
    """Closed-form z-coefficient of tr(u^i v^j) on one irreducible component.

    Equals sin(i k pi/q) sin(j l pi/p) / (sin(k pi/q) sin(l pi/p)); requires
    i, j >= 1.
    """
    if i < 1 or j < 1:
        raise ValueError("the closed form needs i, j >= 1")
    a = math.pi * pair.k / cfg.q
    b = math.pi * pair.l / cfg.p
    return (math.sin(i * a) * math.sin(j * b)) / (math.sin(a) * math.sin(b))


@dataclass(frozen=True)
class NumericRep:
    """A numeric SL2 representation pinned to one irreducible component."""

    U: np.ndarray
    V: np.ndarray
    pair: AdmissiblePair
    z_param: complex
    cfg: TorusKnotConfig

    def word(self, i: int, j: int) -> np.ndarray:
        return np.linalg.matrix_power(self.U, i) @ np.linalg.matrix_power(self.V, j)

    def trace(self, i: int, j: int) -> complex:
        return complex(np.trace(self.word(i, j)))

    def validate(self, tol_det: float = 1e-12, tol_trace: float = 1e-9) -> None:
        comp = Component("irreducible", self.cfg, self.pair)
        if abs(np.linalg.det(self.U) - 1) > tol_det:
            raise ValueError("det U drifted from 1")
        if abs(np.linalg.det(self.V) - 1) > tol_det:
            raise ValueError("det V drifted from 1")
        if abs(np.trace(self.U) - comp.x_const) > tol_trace:
            raise ValueError("tr U is off the component")
        if abs(np.trace(self.V) - comp.y_const) > tol_trace:
            raise ValueError("tr V is off the component")
        if abs(np.trace(self.U @ self.V) - self.z_param) > tol_trace:
            raise ValueError("tr UV missed the requested z")

    def relation_defects(self) -> tuple[float, float]:
        """Operator-norm distances of U^q and V^p from (-1)^k Id, (-1)^l Id."""
        q, p = self.cfg.q, self.cfg.p
        uq = np.linalg.matrix_power(self.U, q) - (-1) ** self.pair.k * np.eye(2)
        vp = np.linalg.matrix_power(self.V, p) - (-1) ** self.pair.l * np.eye(2)
        return (float(np.linalg.norm(uq, 2)), float(np.linalg.norm(vp, 2)))


def numeric_rep(pair: AdmissiblePair, z_param: complex, cfg: TorusKnotConfig) -> NumericRep:
    """Matrices U, V with tr U = x_c, tr V = y_c, tr UV = z_param.

    U is diagonal with eigenvalues exp(+-i k pi / q).  V = [[a, 1], [ad-1, d]]
    has the prescribed trace and determinant 1; a is solved from the linear
    system tr V = y_c, tr UV = z_param, which is nonsingular because the
    eigenvalues of U are distinct.  The construction succeeds for every
    z_param; exactly at the two abelian meeting z-values the pair becomes
    reducible (V turns triangular) but the matrices remain valid.
    """
    xi = cmath.exp(1j * math.pi * pair.k / cfg.q)
    eta_sum = 2.0 * math.cos(math.pi * pair.l / cfg.p)
    denom = xi - 1 / xi
    if abs(denom) < 1e-15:
        raise ValueError(f"degenerate eigenvalue data for pair {pair}")
    a = (z_param - eta_sum / xi) / denom
    d = eta_sum - a
    U = np.array([[xi, 0.0], [0.0, 1 / xi]], dtype=complex)
    V = np.array([[a, 1.0], [a * d - 1.0, d]], dtype=complex)
    rep = NumericRep(U, V, pair, complex(z_param), cfg)
    rep.validate()
    return rep
