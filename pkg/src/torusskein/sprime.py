"""The quotient S'(T, 2k) of the relative solid-torus skein module.

Fix a slope p >= 1 (the framing curve of the marked points runs once around
the meridian direction and p times around the core) and k >= 1.  The quotient
kills every multicurve containing a winding-0 arc: any such multicurve
contains an innermost trivial arc joining consecutive marked points, so this
matches killing boundary-parallel arcs between consecutive points.  The
survivors are the elements w^m -- k seam-crossing arcs in rainbow position
plus m core loops -- and powers m >= p-1 reduce through relations obtained by
rotating the null tangles that contain one trivial arc.  The reduced
coordinates live in the basis {w^0, ..., w^(p-2)}.

The rotation operator shifts every marked point one step along the framing
curve, the last one passing the seam.  Its collar word sends one traveller
strand p times backwards around the annulus (slope p; one trip along the
framing curve), crossing each other strand once per full turn, plus one
framing curl and a global power of A.  The crossing sign, curl count and
A-power are configuration constants: the shipped defaults are validated by
the rotation invariants (rot^(2k) = 1 on quotient coordinates,
rot e_j = A^(u_j) e_(p-j) with u_(p-j) = -u_j), which pin them up to skein
equivalence; see the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Laurent, UniPoly
from .skein import (
    DEFAULT_CROSSING_BUDGET,
    AnnularTangle,
    Multicurve,
    PlanarityError,
    SkeinElement,
    cap,
    crossing,
    cup,
    kink_slices,
    loop_slices,
    multicurve_tangle,
    resolve,
    rot,
)


class QuotientError(RuntimeError):
    """A reduction relation has a non-invertible leading coefficient."""


@dataclass(frozen=True)
class CollarConfig:
    """Over/under pattern and framing curls of the rotation collar."""

    crossing_sign: int = 1
    curls: int = 1

    @property
    def curl_sign(self) -> int:
        return self.crossing_sign


DEFAULT_COLLAR = CollarConfig()


def rotation_slices(slope: int, width: int, config: CollarConfig = DEFAULT_COLLAR) -> tuple:
    """Collar word of the rotation on ``width`` strands at the given slope.

    The strand at position 0 makes slope-1 full backward turns (each one a
    seam passage followed by a crossing sweep back down through the other
    strands) and one final seam passage, leaving every other strand shifted
    down one position.  Curls are appended for the framing correction.
    """
    if slope < 1:
        raise ValueError("slope must be at least 1")
    if width < 1:
        raise ValueError("rotation needs at least one strand")
    word: list = []
    for _ in range(config.curls):
        word.extend(kink_slices(0, config.curl_sign))
    down = [crossing(m, config.crossing_sign) for m in range(width - 2, -1, -1)]
    for _ in range(slope - 1):
        word.append(rot(-1))
        word.extend(down)
    word.append(rot(-1))
    return tuple(word)


def rotate(tangle: AnnularTangle, slope: int, config: CollarConfig = DEFAULT_COLLAR) -> AnnularTangle:
    """The collar word of the rotation stacked onto a tangle.

    This is the diagrammatic part only; the full operator carries the
    framing normalization A^(rotation_norm_exponent), applied by
    :func:`rotated_element`.
    """
    collar = rotation_slices(slope, tangle.endpoints, config)
    return AnnularTangle(tangle.endpoints, collar + tangle.slices)


def rotation_norm_exponent(slope: int, width: int) -> int:
    """Framing A-power of the rotation on ``width`` strands at ``slope``.

    The default collar word realizes the rotation only up to a global power
    of A; the exponent width + slope - 4 restores the three defining
    invariants (rot^(2k) = 1 on the quotient, rot e_j proportional to
    e_(slope-j) by a plus power of A, antisymmetric exponents), checked over
    slopes up to 7 and k up to 4.
    """
    return width + slope - 4


def rotated_element(tangle: AnnularTangle, slope: int,
                    config: CollarConfig = DEFAULT_COLLAR,
                    budget: int | None = DEFAULT_CROSSING_BUDGET) -> SkeinElement:
    """The rotation operator applied to a closed tangle, normalization included."""
    el = resolve(rotate(tangle, slope, config), budget)
    return el.scale(Laurent.A(rotation_norm_exponent(slope, tangle.endpoints)))


# ---------------------------------------------------------------------------
# distinguished tangles
# ---------------------------------------------------------------------------


def power_tangle(k: int, m: int) -> AnnularTangle:
    """w^m: the k-arc seam rainbow with m core loops inside."""
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    slices = [cap(width - 1) for width in range(2 * k, 0, -2)]
    slices.extend(loop_slices(m))
    return AnnularTangle(2 * k, tuple(slices))


def null_tangle(k: int, n: int) -> AnnularTangle:
    """k-1 seam arcs, one trivial arc on the last two points, n core loops.

    Dies in the quotient; its rotation yields the reduction relation of
    degree n + slope - 1.
    """
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    slices = [cap(2 * k - 2)]
    slices.extend(cap(width - 1) for width in range(2 * k - 2, 0, -2))
    slices.extend(loop_slices(n))
    return AnnularTangle(2 * k, tuple(slices))


def basis_tangle(k: int, j: int, slope: int,
                 config: CollarConfig = DEFAULT_COLLAR) -> AnnularTangle:
    """Basis tangle e(k, j): a j-times-winding exterior strand on the outer
    pair of marked points, around a (k-1)-strand once-winding cable on the
    middle ones.  Requires 1 <= j <= slope-1 (and j >= 1 for any slope)."""
    if k < 1:
        raise ValueError("need k >= 1")
    if not 1 <= j <= max(slope - 1, 1):
        raise ValueError(f"index j={j} out of range for slope {slope}")
    width = 2 * k
    word: list = []
    down = [crossing(m, config.crossing_sign) for m in range(width - 2, -1, -1)]
    for _ in range(j - 1):
        word.append(rot(-1))
        word.extend(down)
    word.append(rot(-1))
    word.append(cap(width - 2))
    word.extend(cap(w - 1) for w in range(width - 2, 0, -2))
    return AnnularTangle(width, tuple(word))


def framing_curve_tangle(slope: int, config: CollarConfig = DEFAULT_COLLAR) -> AnnularTangle:
    """The framing curve pushed into the solid torus: winds ``slope`` times
    around the annulus, drawn as a spiral with slope-1 crossings."""
    if slope < 1:
        raise ValueError("slope must be at least 1")
    word: list = [cup(0)]
    for _ in range(slope - 1):
        word.append(rot(1))
        word.append(crossing(0, config.crossing_sign))
    word.append(rot(1))
    word.append(cap(0))
    return AnnularTangle(0, tuple(word))


def expand_framing_curve(slope: int, config: CollarConfig = DEFAULT_COLLAR) -> UniPoly:
    """Class of the pushed-in framing curve in the loop basis {y^m}.

    Returns a degree-``slope`` polynomial in y over the Laurent ring; the
    leading coefficient is a unit.
    """
    el = resolve(framing_curve_tangle(slope, config))
    coeffs = [Laurent.zero()] * (slope + 1)
    for mc, c in el.terms.items():
        if mc.arcs:
            raise PlanarityError("closed curve resolved to a term with arcs")
        if mc.loops >= len(coeffs):
            coeffs.extend([Laurent.zero()] * (mc.loops + 1 - len(coeffs)))
        coeffs[mc.loops] = coeffs[mc.loops] + c
    return UniPoly("y", coeffs)


def closed_basis_element(j: int, slope: int,
                         config: CollarConfig = DEFAULT_COLLAR) -> SkeinElement:
    """e(0, j) = (framing curve)^n * y^m in S(T, 0), where j = slope*n + m."""
    if j < 0:
        raise ValueError("need j >= 0")
    n, m = divmod(j, slope)
    poly = expand_framing_curve(slope, config) ** n * UniPoly("y", [0] * m + [1])
    terms = {Multicurve((), deg): c for deg, c in enumerate(poly.coeffs) if c}
    return SkeinElement(0, terms)


# ---------------------------------------------------------------------------
# quotient coordinates
# ---------------------------------------------------------------------------


def _rainbow_arcs(k: int) -> tuple:
    return tuple((i, 2 * k - 1 - i, -1) for i in range(k))


def winding_part(el: SkeinElement, k: int) -> dict[int, Laurent]:
    """Image of el after killing trivial-arc terms, as a map loops -> coeff.

    Every survivor must be a rainbow multicurve w^m; anything else signals a
    bookkeeping bug and raises.
    """
    if el.endpoints != 2 * k:
        raise ValueError("endpoint count does not match k")
    rainbow = _rainbow_arcs(k)
    out: dict[int, Laurent] = {}
    for mc, c in el.terms.items():
        if mc.has_trivial_arc():
            continue
        if mc.arcs != rainbow:
            raise PlanarityError(f"unexpected surviving multicurve {mc}")
        s = out.get(mc.loops, Laurent.zero()) + c
        if s:
            out[mc.loops] = s
        else:
            out.pop(mc.loops, None)
    return out


@lru_cache(maxsize=None)
def reduction_relation(slope: int, k: int, n: int,
                       config: CollarConfig = DEFAULT_COLLAR) -> tuple:
    """Coefficients (by loop power) of the relation rotate(null_tangle(k, n)).

    The relation vanishes in the quotient; it has top degree n + slope - 1
    with a unit leading coefficient, which makes the rewriting well founded.
    A non-unit leading coefficient is a hard failure.
    """
    el = rotated_element(null_tangle(k, n), slope, config)
    poly = winding_part(el, k)
    top = n + slope - 1
    degree = max(poly) if poly else -1
    if degree != top:
        raise QuotientError(
            f"relation (slope={slope}, k={k}, n={n}) has degree {degree}, "
            f"expected {top}: {poly}")
    if poly[top].unit_parts() is None:
        raise QuotientError(
            f"relation (slope={slope}, k={k}, n={n}) has non-invertible "
            f"leading coefficient {poly[top]}")
    return tuple(poly.get(m, Laurent.zero()) for m in range(top + 1))


def quotient_coordinates(el: SkeinElement, slope: int, k: int,
                         config: CollarConfig = DEFAULT_COLLAR) -> list[Laurent]:
    """Coordinates of el in the quotient basis {w^m : 0 <= m <= slope-2}."""
    if slope < 2:
        raise ValueError("slope must be at least 2 for a nontrivial quotient")
    poly = winding_part(el, k)
    while poly:
        m = max(poly)
        if m < slope - 1:
            break
        rel = reduction_relation(slope, k, m - slope + 1, config)
        factor = poly[m] * rel[m].unit_inverse()
        for d in range(m + 1):
            if not rel[d]:
                continue
            s = poly.get(d, Laurent.zero()) - factor * rel[d]
            if s:
                poly[d] = s
            else:
                poly.pop(d, None)
    return [poly.get(m, Laurent.zero()) for m in range(slope - 1)]


def tangle_coordinates(tangle: AnnularTangle, slope: int, k: int,
                       config: CollarConfig = DEFAULT_COLLAR,
                       budget: int | None = DEFAULT_CROSSING_BUDGET) -> list[Laurent]:
    return quotient_coordinates(resolve(tangle, budget), slope, k, config)


# ---------------------------------------------------------------------------
# the rotation as a matrix on quotient coordinates
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def rotation_matrix(slope: int, k: int,
                    config: CollarConfig = DEFAULT_COLLAR) -> tuple:
    """Columns of the rotation operator in the basis {w^m}, m < slope-1.

    Column m holds the quotient coordinates of rotate(w^m).  Rotating an
    arbitrary element then reduces to one matrix-vector product, which keeps
    every state sum within the crossing budget no matter how many times the
    rotation is iterated.
    """
    cols = []
    for m in range(slope - 1):
        el = rotated_element(power_tangle(k, m), slope, config)
        cols.append(tuple(quotient_coordinates(el, slope, k, config)))
    return tuple(cols)


def apply_matrix(cols, vec: list[Laurent]) -> list[Laurent]:
    dim = len(cols)
    out = [Laurent.zero()] * dim
    for m, c in enumerate(vec):
        if not c:
            continue
        col = cols[m]
        for i in range(dim):
            if col[i]:
                out[i] = out[i] + c * col[i]
    return out


def identity_matrix(dim: int):
    return tuple(tuple(Laurent.one() if i == m else Laurent.zero()
                       for i in range(dim)) for m in range(dim))


def matrix_power(cols, n: int):
    result = identity_matrix(len(cols))
    base = cols
    while n:
        if n & 1:
            result = tuple(tuple(apply_matrix(base, list(col))) for col in result)
        base = tuple(tuple(apply_matrix(base, list(col))) for col in base)
        n >>= 1
    return result


def unit_ratio(vec_a: list[Laurent], vec_b: list[Laurent]) -> Laurent:
    """The unit u with vec_a = u * vec_b, if one exists.

    Needs at least one coordinate of vec_b to be a unit (true for the
    triangular basis vectors this is used on).
    """
    for a, b in zip(vec_a, vec_b):
        if not b or b.unit_parts() is None:
            continue
        cand = a * b.unit_inverse()
        if cand.unit_parts() is None:
            raise ValueError(f"ratio {cand} is not a unit")
        if all(x == cand * y for x, y in zip(vec_a, vec_b)):
            return cand
        raise ValueError("coordinates are not proportional by one unit")
    raise ValueError("no unit coordinate to divide by")


@lru_cache(maxsize=None)
def basis_coordinates(slope: int, k: int,
                      config: CollarConfig = DEFAULT_COLLAR) -> tuple:
    """Quotient coordinates of the raw basis tangles e(k, j), j = 1..slope-1."""
    return tuple(
        tuple(tangle_coordinates(basis_tangle(k, j, slope, config), slope, k, config))
        for j in range(1, slope)
    )


@lru_cache(maxsize=None)
def rotation_exponents(slope: int, k: int,
                       config: CollarConfig = DEFAULT_COLLAR) -> tuple:
    """Exponents u_j with rotate(e_j) = A^(u_j) e_(slope-j), j = 1..slope-1.

    Raises if the proportionality unit carries a minus sign, which would
    contradict the braid-normalization argument behind the basis.
    """
    cols = rotation_matrix(slope, k, config)
    coords = basis_coordinates(slope, k, config)
    out = []
    for j in range(1, slope):
        image = apply_matrix(cols, list(coords[j - 1]))
        target = list(coords[slope - j - 1])
        unit = unit_ratio(image, target)
        sign, e = unit.unit_parts()
        if sign != 1:
            raise QuotientError(
                f"rotation sends e_{j} to {unit} * e_{slope - j}; "
                "expected a pure power of A")
        out.append(e)
    return tuple(out)


def normalized_basis_coordinates(slope: int, k: int,
                                 config: CollarConfig = DEFAULT_COLLAR) -> list[list[Laurent]]:
    """Basis coordinates rescaled so rotate(e_j) = e_(slope-j) exactly."""
    coords = [list(c) for c in basis_coordinates(slope, k, config)]
    expo = rotation_exponents(slope, k, config)
    for j in range(1, slope):
        if 2 * j > slope:
            u = Laurent.A(-expo[j - 1])
            coords[j - 1] = [c * u for c in coords[j - 1]]
    return coords
