"""SL2(C) character variety of the torus-knot group <u, v | u^q = v^p>.

Convention, used consistently everywhere in this package: u is the generator
whose relation exponent is q, so an irreducible representation has
eigenvalue exp(i*k*pi/q) on u with k in [1, q-1], and exp(i*l*pi/p) on v with
l in [1, p-1].  Trace coordinates are x = tr(u), y = tr(v), z = tr(uv), and
an SL2 element with eigenvalue exp(i*theta) has trace 2*cos(theta).

The variety is a disjoint union of (p-1)(q-1)/2 affine lines (one per
admissible pair, coordinatized by z) plus one abelian line parametrized by
s -> (T_p(s), T_q(s), T_{p+q}(s)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import TracePoly, UniPoly, chebyshev


@dataclass(frozen=True)
class TorusKnotConfig:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise ValueError("p and q must both be at least 2")
        if self.p == self.q:
            raise ValueError("p and q must differ")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError("p and q must be coprime")


@dataclass(frozen=True)
class AdmissiblePair:
    """Eigenvalue labels (k on u mod q, l on v mod p) of the same parity."""

    k: int
    l: int


@dataclass(frozen=True)
class Component:
    """One line of the character variety.

    Irreducible components carry the constant traces of the two generators;
    equality and ordering decisions use the integer labels only, never the
    float approximations.
    """

    kind: str  # "abelian" or "irreducible"
    cfg: TorusKnotConfig
    pair: AdmissiblePair | None = None

    @property
    def x_const(self) -> float:
        if self.pair is None:
            raise ValueError("abelian component has no constant x")
        return 2.0 * math.cos(math.pi * self.pair.k / self.cfg.q)

    @property
    def y_const(self) -> float:
        if self.pair is None:
            raise ValueError("abelian component has no constant y")
        return 2.0 * math.cos(math.pi * self.pair.l / self.cfg.p)

    def to_json(self) -> dict:
        if self.pair is None:
            return {"kind": "abelian", "k": None, "l": None,
                    "x_c": None, "y_c": None}
        return {"kind": "irreducible", "k": self.pair.k, "l": self.pair.l,
                "x_c": self.x_const, "y_c": self.y_const}


def admissible_pairs(cfg: TorusKnotConfig) -> list[AdmissiblePair]:
    """All (k, l) with k in [1, q-1], l in [1, p-1], k = l mod 2, lex order."""
    return [
        AdmissiblePair(k, l)
        for k in range(1, cfg.q)
        for l in range(1, cfg.p)
        if (k - l) % 2 == 0
    ]


def components(cfg: TorusKnotConfig) -> list[Component]:
    """The abelian line followed by one component per admissible pair."""
    out = [Component("abelian", cfg)]
    out.extend(Component("irreducible", cfg, pair) for pair in admissible_pairs(cfg))
    return out


def abelian_parametrization(cfg: TorusKnotConfig) -> tuple[UniPoly, UniPoly, UniPoly]:
    """(x, y, z) along the abelian line, as polynomials in s = t + 1/t."""
    return chebyshev(cfg.p), chebyshev(cfg.q), chebyshev(cfg.p + cfg.q)


def restrict_to_component(
    f: TracePoly,
    comp: Component,
    trim_tol: float = 1e-10,
) -> UniPoly:
    """Restriction of f to one component.

    Irreducible component: substitute the constant x and y, leaving a float
    polynomial in z; coefficients within trim_tol (scaled by the largest one)
    of zero are dropped.  Abelian component: exact composition with the
    parametrization, a Fraction polynomial in s.
    """
    if comp.kind == "abelian":
        sx, sy, sz = abelian_parametrization(comp.cfg)
        return f.substitute(sx, sy, sz)
    profile = [float(c) for c in f.z_profile(comp.x_const, comp.y_const)]
    scale = max([1.0] + [abs(c) for c in profile])
    profile = [0.0 if abs(c) <= trim_tol * scale else c for c in profile]
    return UniPoly("z", profile)


def degree(f: TracePoly, cfg: TorusKnotConfig) -> int:
    """Max z-degree of f restricted to the irreducible components (0 if none)."""
    best = 0
    for pair in admissible_pairs(cfg):
        r = restrict_to_component(f, Component("irreducible", cfg, pair))
        best = max(best, r.degree)
    return best


def leading_coeff_vector(f: TracePoly, d: int, cfg: TorusKnotConfig) -> list[float]:
    """Coefficient of z^d in the restriction of f, per admissible pair.

    Requires degree(f, cfg) <= d; entries are 0.0 where the restriction has
    lower degree.
    """
    if degree(f, cfg) > d:
        raise ValueError("degree of f exceeds the requested grade")
    out = []
    for pair in admissible_pairs(cfg):
        r = restrict_to_component(f, Component("irreducible", cfg, pair))
        out.append(float(r[d]) if d <= r.degree else 0.0)
    return out


def abelian_meeting_points(pair: AdmissiblePair, cfg: TorusKnotConfig) -> tuple[float, float]:
    """z-values where the abelian line meets the component of the pair.

    These are 2*cos(k*pi/q + l*pi/p) and 2*cos(k*pi/q - l*pi/p): the two
    diagonal (hence reducible) points on the line x = x_c, y = y_c.
    """
    a = math.pi * pair.k / cfg.q
    b = math.pi * pair.l / cfg.p
    return (2.0 * math.cos(a + b), 2.0 * math.cos(a - b))


def abelian_parameter_witnesses(
    pair: AdmissiblePair, cfg: TorusKnotConfig, tol: float = 1e-9
) -> list[int]:
    """Indices m of 2pq-th roots of unity t = exp(i*pi*m/(pq)) hitting the pair.

    Returns the m in [0, 2pq) with x(t) = x_c and y(t) = y_c, one
    representative per conjugate pair {t, 1/t}.
    """
    p, q = cfg.p, cfg.q
    comp = Component("irreducible", cfg, pair)
    hits = []
    seen = set()
    for m in range(2 * p * q):
        partner = (-m) % (2 * p * q)
        if partner in seen:
            continue
        xv = 2.0 * math.cos(math.pi * m * p / (p * q))
        yv = 2.0 * math.cos(math.pi * m * q / (p * q))
        if abs(xv - comp.x_const) < tol and abs(yv - comp.y_const) < tol:
            hits.append(m)
            seen.add(m)
    return hits


def knot_trace(cfg: TorusKnotConfig) -> TracePoly:
    """tr(u^q) = tr(v^p) as a polynomial in x (the class of the knot)."""
    tq = chebyshev(cfg.q)
    return TracePoly({(i, 0, 0): Fraction(c) for i, c in enumerate(tq.coeffs) if c})
