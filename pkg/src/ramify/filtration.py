"""Ramification filtrations of maximal elementary abelian p-extensions.

Let F be a local field with residue characteristic p and residue field of
cardinality q = p^f, and let G be the Galois group of its maximal elementary
abelian p-extension. This module computes the ramification filtration of G in
upper and lower numbering, the piecewise-linear transition maps between the
two numberings, the different/discriminant exponents, and the filtered
F_p-space models (Kummer or Artin-Schreier side) whose lines correspond to
the degree-p cyclic extensions of F.

Three parameter regimes are supported:

* characteristic 0, zeta_p not in F ("regular"; forces p odd): G has
  F_p-dimension 1 + ef, upper breaks at -1 and b_upper(1..e);
* characteristic 0, zeta_p in F (forces (p-1) | e; automatic for p = 2):
  dimension 2 + ef, one extra upper break at p*e/(p-1);
* characteristic p (zeta_p in F by convention): G is infinite; upper
  numbering is reported as a truncation, while lower numbering lives on the
  finite quotients cut out by the level-m Artin-Schreier spaces.

Locations and indices are exact integers; Herbrand maps carry exact rational
breakpoints and slopes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .breaks import b_lower, b_upper, c_truncation

__all__ = [
    "FieldParams",
    "RamificationFiltration",
    "HerbrandMap",
    "FilteredSpace",
    "splitting_data",
    "upper_filtration",
    "lower_filtration",
    "herbrand_psi",
    "herbrand_phi",
    "index_table",
    "different_exponent_oracle",
    "different_exponent_closed",
    "discriminant_exponent",
    "cyclic_discriminant",
    "tres_ramifiee_discriminant",
    "v_space_model",
    "unit_space_model",
    "break_of_line",
    "orthogonal_index",
    "dim_at_level",
    "BELOW_BREAK_RANGE",
    "ABOVE_BREAK_RANGE",
    "V_REGULAR",
    "UBAR_ZETA",
    "WP_CHAR_P",
]

# Labels for the three filtered-space models.
V_REGULAR = "V_regular"
UBAR_ZETA = "Ubar_zeta"
WP_CHAR_P = "wp_char_p"

# Boundary tags returned by orthogonal_index outside [1, b_upper(e)].
BELOW_BREAK_RANGE = "below_break_range"
ABOVE_BREAK_RANGE = "above_break_range"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class FieldParams:
    """Arithmetic invariants of the base local field.

    p: residue characteristic (prime). f: residual degree over the prime
    field, so q = p^f. characteristic: 0 or p. e: absolute ramification
    index (characteristic 0 only; must be None in characteristic p).
    zeta_in_field: whether a primitive p-th root of unity lies in the field;
    None asks the constructor to fill in the forced value (True in
    characteristic p and for p = 2; otherwise it must be given).
    """

    p: int
    f: int
    characteristic: int = 0
    e: Optional[int] = None
    zeta_in_field: Optional[bool] = None

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError("p must be a prime")
        if self.f < 1:
            raise ValueError("f must be a positive integer")
        if self.characteristic not in (0, self.p):
            raise ValueError("characteristic must be 0 or p")
        if self.characteristic == 0:
            if self.e is None or self.e < 1:
                raise ValueError("e must be a positive integer in characteristic 0")
            if self.zeta_in_field is None:
                if self.p == 2:
                    object.__setattr__(self, "zeta_in_field", True)
                else:
                    raise ValueError("zeta_in_field must be given in characteristic 0")
            if self.p == 2 and not self.zeta_in_field:
                raise ValueError("p = 2 forces zeta_in_field")
            if self.zeta_in_field and self.e % (self.p - 1) != 0:
                raise ValueError("zeta in field requires (p - 1) | e")
        else:
            if self.e is not None:
                raise ValueError("e is undefined in characteristic p")
            if self.zeta_in_field is None:
                object.__setattr__(self, "zeta_in_field", True)
            elif not self.zeta_in_field:
                raise ValueError("characteristic p fixes zeta_in_field by convention")

    @property
    def q(self) -> int:
        return self.p**self.f

    @property
    def e1(self) -> Fraction:
        """e/(p-1); the unit filtration stops just above p*e1."""
        if self.characteristic != 0:
            raise ValueError("e1 is undefined in characteristic p")
        return Fraction(self.e, self.p - 1)

    @property
    def s(self) -> int:
        """Ramification index of F(zeta_p)|F: the least s with (p-1) | e*s."""
        if self.characteristic != 0 or self.zeta_in_field:
            raise ValueError("s is defined for the regular case only")
        return (self.p - 1) // math.gcd(self.e, self.p - 1)

    @property
    def regular(self) -> bool:
        return self.characteristic == 0 and not self.zeta_in_field


def splitting_data(
    params: FieldParams, residual_class_order: Optional[int] = None
) -> tuple[int, Optional[int], Optional[int]]:
    """(s, r, m) for K = F(zeta_p) over a regular F: ramification index s,
    residual degree r, total degree m = r*s.

    s is always computable from (e, p). r needs extra arithmetic input: the
    order of the class that -p (to the power s) defines in the residue field
    modulo (p-1)-th powers; pass it as residual_class_order when known. For
    F = Q_p (e = f = 1) the answer (p-1, 1, p-1) is built in; otherwise r and
    m come back as None when not supplied.
    """
    if not params.regular:
        raise ValueError("splitting undefined unless zeta is outside the field")
    s = params.s
    if residual_class_order is not None:
        if residual_class_order < 1:
            raise ValueError("residual class order must be positive")
        return s, residual_class_order, residual_class_order * s
    if params.e == 1 and params.f == 1:
        return s, 1, s
    return s, None, None


@dataclass(frozen=True)
class RamificationFiltration:
    """Jump data of the filtration of a pro-p group G.

    jumps is ordered by location; (location, codim) means the group drops by
    a factor of p^codim as the numbering crosses the location (the group AT
    a break is still the larger one). total_dim is the F_p-dimension of G
    and equals the sum of the codims, except that truncated filtrations only
    model an initial stretch of an infinite group, in which case total_dim
    covers just the listed jumps.
    """

    p: int
    numbering: str
    total_dim: int
    jumps: tuple[tuple[int, int], ...]
    truncated: bool = False

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError("p must be a prime")
        if self.numbering not in ("upper", "lower"):
            raise ValueError("numbering must be 'upper' or 'lower'")
        locs = [loc for loc, _ in self.jumps]
        if locs != sorted(locs) or len(set(locs)) != len(locs):
            raise ValueError("jump locations must strictly increase")
        if any(c < 1 for _, c in self.jumps):
            raise ValueError("codimensions must be positive")
        if sum(c for _, c in self.jumps) != self.total_dim:
            raise ValueError("codimensions must account for total_dim")

    @property
    def locations(self) -> tuple[int, ...]:
        return tuple(loc for loc, _ in self.jumps)

    @property
    def codims(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.jumps)

    def dim_at(self, u: Union[int, Fraction]) -> int:
        """F_p-dimension of the filtration member at numbering value u."""
        return self.total_dim - sum(c for loc, c in self.jumps if loc < u)


def _require_char_p_bound(max_index: Optional[int]) -> int:
    if max_index is None or max_index < 1:
        raise ValueError("characteristic p needs a positive truncation index")
    return max_index


def upper_filtration(
    params: FieldParams, max_index: Optional[int] = None
) -> RamificationFiltration:
    """Ramification filtration of G in upper numbering.

    Characteristic 0: complete, with breaks at -1 and b_upper(1..e), each
    positive break of codimension f, plus a final codimension-1 break at
    p*e/(p-1) when zeta is in the field. Characteristic p: infinite; the
    first max_index positive breaks are listed and the result is marked
    truncated.
    """
    p, f = params.p, params.f
    if params.characteristic == 0:
        jumps = [(-1, 1)]
        jumps += [(b_upper(i, p), f) for i in range(1, params.e + 1)]
        if params.zeta_in_field:
            jumps.append((int(p * params.e1), 1))
            return RamificationFiltration(p, "upper", 2 + params.e * f, tuple(jumps))
        return RamificationFiltration(p, "upper", 1 + params.e * f, tuple(jumps))
    n = _require_char_p_bound(max_index)
    jumps = [(-1, 1)] + [(b_upper(i, p), f) for i in range(1, n + 1)]
    return RamificationFiltration(p, "upper", 1 + n * f, tuple(jumps), truncated=True)


def lower_filtration(
    params: FieldParams, max_index: Optional[int] = None
) -> RamificationFiltration:
    """Ramification filtration in lower numbering.

    Characteristic 0: breaks at -1 and b_lower(1..e), plus b_lower(e) + q^e
    when zeta is in the field. Characteristic p: lower numbering only exists
    on finite quotients; max_index is the level m of the quotient, whose
    breaks sit at -1 and at b_lower(i) for i in [1, c_truncation(m)]. That
    filtration is complete (the quotient group is finite), so it is not
    marked truncated.
    """
    p, f, q = params.p, params.f, params.q
    if params.characteristic == 0:
        jumps = [(-1, 1)]
        jumps += [(b_lower(i, p, q), f) for i in range(1, params.e + 1)]
        if params.zeta_in_field:
            jumps.append((b_lower(params.e, p, q) + q**params.e, 1))
            return RamificationFiltration(p, "lower", 2 + params.e * f, tuple(jumps))
        return RamificationFiltration(p, "lower", 1 + params.e * f, tuple(jumps))
    m = _require_char_p_bound(max_index)
    count = c_truncation(m, p)
    jumps = [(-1, 1)] + [(b_lower(i, p, q), f) for i in range(1, count + 1)]
    return RamificationFiltration(p, "lower", 1 + count * f, tuple(jumps))


@dataclass(frozen=True)
class HerbrandMap:
    """Increasing piecewise-linear bijection of [0, oo) with exact data.

    breakpoints[0] is (0, 0); slopes[i] applies between breakpoints i and
    i+1, and slopes[-1] extends beyond the last breakpoint. All values are
    Fractions.
    """

    breakpoints: tuple[tuple[Fraction, Fraction], ...]
    slopes: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.breakpoints or self.breakpoints[0] != (0, 0):
            raise ValueError("transition maps are anchored at (0, 0)")
        if len(self.slopes) != len(self.breakpoints):
            raise ValueError("need one slope per segment plus the final ray")
        if any(s <= 0 for s in self.slopes):
            raise ValueError("slopes must be positive")
        xs = [x for x, _ in self.breakpoints]
        if xs != sorted(xs) or len(set(xs)) != len(xs):
            raise ValueError("breakpoints must strictly increase")

    def __call__(self, x: Union[int, Fraction]) -> Fraction:
        x = Fraction(x)
        if x < 0:
            raise ValueError("transition maps are defined on [0, oo) only")
        for (x0, y0), (x1, y1) in zip(self.breakpoints, self.breakpoints[1:]):
            if x <= x1:
                return y0 + (x - x0) * (y1 - y0) / (x1 - x0)
        xl, yl = self.breakpoints[-1]
        return yl + (x - xl) * self.slopes[-1]

    def inverse(self) -> "HerbrandMap":
        return HerbrandMap(
            breakpoints=tuple((y, x) for x, y in self.breakpoints),
            slopes=tuple(1 / s for s in self.slopes),
        )


def _transition(
    p: int, positive_jumps: list[tuple[int, int]], exponent_sign: int
) -> HerbrandMap:
    """Piecewise-linear map whose slope is p^(sign * codims crossed so far)."""
    points = [(Fraction(0), Fraction(0))]
    slopes: list[Fraction] = []
    crossed = 0
    x_prev, y_prev = Fraction(0), Fraction(0)
    for loc, codim in positive_jumps:
        slope = Fraction(p) ** (exponent_sign * crossed)
        x = Fraction(loc)
        y = y_prev + slope * (x - x_prev)
        points.append((x, y))
        slopes.append(slope)
        crossed += codim
        x_prev, y_prev = x, y
    slopes.append(Fraction(p) ** (exponent_sign * crossed))
    return HerbrandMap(breakpoints=tuple(points), slopes=tuple(slopes))


def herbrand_psi(upper: RamificationFiltration) -> HerbrandMap:
    """Transition from upper to lower numbering of a complete filtration.

    The slope past an upper break u is the index of the subgroup there
    inside the inertia group (breaks at locations <= 0 do not count), so
    psi(b_upper(i)) = b_lower(i).
    """
    if upper.numbering != "upper":
        raise ValueError("psi consumes an upper-numbering filtration")
    if upper.truncated:
        raise ValueError("cannot build the transition of a truncated filtration")
    positive = [(loc, c) for loc, c in upper.jumps if loc > 0]
    return _transition(upper.p, positive, exponent_sign=+1)


def herbrand_phi(lower: RamificationFiltration) -> HerbrandMap:
    """Transition from lower to upper numbering; inverse of herbrand_psi."""
    if lower.numbering != "lower":
        raise ValueError("phi consumes a lower-numbering filtration")
    if lower.truncated:
        raise ValueError("cannot build the transition of a truncated filtration")
    positive = [(loc, c) for loc, c in lower.jumps if loc > 0]
    return _transition(lower.p, positive, exponent_sign=-1)


def index_table(params: FieldParams) -> list[tuple[int, Optional[int], int]]:
    """Index of the upper filtration member inside inertia, per interval.

    Rows (lo, hi, index) mean: for u in ]lo, hi] the subgroup at u has index
    `index` in the inertia group; hi = None on the final unbounded row. The
    first row starts at 0 and the index there is 1. Regular case only.
    """
    if not params.regular:
        raise ValueError("index table is defined for the regular case only")
    p, f, e = params.p, params.f, params.e
    bounds = [0] + [b_upper(i, p) for i in range(1, e + 1)]
    rows: list[tuple[int, Optional[int], int]] = []
    for i in range(e):
        rows.append((bounds[i], bounds[i + 1], params.q**i))
    rows.append((bounds[e], None, params.q**e))
    return rows


def different_exponent_oracle(lower: RamificationFiltration) -> int:
    """Valuation of the different by direct summation over lower numbering.

    Sums (order of the group at l) - 1 over integers l >= 0, segment by
    segment so that huge break values stay cheap. Needs a complete
    lower-numbering filtration.
    """
    if lower.numbering != "lower":
        raise ValueError("the oracle consumes a lower-numbering filtration")
    if lower.truncated:
        raise ValueError("cannot sum an infinite filtration")
    p = lower.p
    total = 0
    prev_loc: Optional[int] = None
    crossed = 0
    for loc, codim in lower.jumps:
        start = 0 if prev_loc is None else max(0, prev_loc + 1)
        if loc >= start:
            count = loc - start + 1
            dim = lower.total_dim - crossed
            total += count * (p**dim - 1)
        prev_loc = loc
        crossed += codim
    return total


def different_exponent_closed(params: FieldParams) -> int:
    """(1 + b_upper(e)) * q^e - (1 + b_lower(e)), regular case."""
    if not params.regular:
        raise ValueError("closed form covers the regular case only")
    p, q, e = params.p, params.q, params.e
    return (1 + b_upper(e, p)) * q**e - (1 + b_lower(e, p, q))


def discriminant_exponent(params: FieldParams) -> int:
    """Valuation of the discriminant: p times the different exponent."""
    return params.p * different_exponent_closed(params)


def cyclic_discriminant(params: FieldParams, break_index: int) -> tuple[int, int]:
    """(v(d), c) for a degree-p cyclic extension with break b_upper(i).

    v(d) = (p-1)(1 + b_upper(i)) is the discriminant exponent and
    c = v(d) - (p-1) the conductor-like companion used by the mass sums.
    """
    if break_index < 1:
        raise ValueError("break index out of domain")
    if params.characteristic == 0 and break_index > params.e:
        raise ValueError("break index exceeds e")
    b = b_upper(break_index, params.p)
    v = (params.p - 1) * (1 + b)
    return v, v - (params.p - 1)


def tres_ramifiee_discriminant(params: FieldParams) -> tuple[int, int]:
    """(v(d), c) for the deepest-break extensions when zeta is in the field.

    Their break is p*e/(p-1), giving c = p*e via the same
    (p-1)(1 + break) rule.
    """
    if params.characteristic != 0 or not params.zeta_in_field:
        raise ValueError("no tres ramifiee extensions for these parameters")
    top = int(params.p * params.e1)
    v = (params.p - 1) * (1 + top)
    return v, v - (params.p - 1)


@dataclass(frozen=True)
class FilteredSpace:
    """Descending jump data of a filtered F_p-space.

    jumps is ordered by strictly decreasing index; (index, codim) means the
    space at that index gains `codim` dimensions over the next deeper level.
    The member at index j therefore has dimension sum of codims at indices
    >= j (see dim_at_level). label names which of the three models this is.
    """

    p: int
    total_dim: int
    label: str
    jumps: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.label not in (V_REGULAR, UBAR_ZETA, WP_CHAR_P):
            raise ValueError("unknown space label")
        idxs = [j for j, _ in self.jumps]
        if idxs != sorted(idxs, reverse=True) or len(set(idxs)) != len(idxs):
            raise ValueError("jump indices must strictly decrease")
        if sum(c for _, c in self.jumps) != self.total_dim:
            raise ValueError("codimensions must account for total_dim")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(j for j, _ in self.jumps)


def dim_at_level(space: FilteredSpace, index: int) -> int:
    """Dimension of the filtration member at the given index."""
    return sum(c for j, c in space.jumps if j >= index)


def v_space_model(params: FieldParams) -> FilteredSpace:
    """The filtered space of Kummer classes cutting out degree-p extensions
    of a regular F, filtered by the unit filtration of K = F(zeta_p).

    Indices are in the normalized valuation of K. The deepest line sits at
    p*e1*s = p*e*s/(p-1); below it the space grows by f dimensions at each
    index p*e1*s - b_upper(i)*s, i in [1, e]. Total dimension 1 + ef.
    """
    if not params.regular:
        raise ValueError("the V model is defined for the regular case only")
    p, f, e, s = params.p, params.f, params.e, params.s
    top = p * params.e * s // (p - 1)
    jumps = [(top, 1)] + [(top - b_upper(i, p) * s, f) for i in range(1, e + 1)]
    return FilteredSpace(p=p, total_dim=1 + e * f, label=V_REGULAR, jumps=tuple(jumps))


def unit_space_model(
    params: FieldParams, level: Optional[int] = None
) -> FilteredSpace:
    """Filtered model of the classes cutting out degree-p extensions when
    zeta is in the field.

    Characteristic 0: the unit-class space of F itself, dimension 2 + ef,
    with jumps at p*e/(p-1) (the deepest line), at b_upper(e..1) (f each)
    and at 0 (the unramified direction); `level` must be omitted.

    Characteristic p: the level-m Artin-Schreier space, an ascending chain
    indexed here by -m: jumps at 0 and at -b_upper(i) for the
    c_truncation(level) break indices with b_upper(i) <= level. `level`
    (= m) is required since the full space is infinite-dimensional.
    """
    p, f = params.p, params.f
    if params.characteristic == 0:
        if not params.zeta_in_field:
            raise ValueError("regular case: use v_space_model")
        if level is not None:
            raise ValueError("level applies to characteristic p only")
        e = params.e
        top = int(p * params.e1)
        jumps = [(top, 1)]
        jumps += [(b_upper(i, p), f) for i in range(e, 0, -1)]
        jumps.append((0, 1))
        return FilteredSpace(p=p, total_dim=2 + e * f, label=UBAR_ZETA, jumps=tuple(jumps))
    m = _require_char_p_bound(level)
    count = c_truncation(m, p)
    jumps = [(0, 1)] + [(-b_upper(i, p), f) for i in range(1, count + 1)]
    return FilteredSpace(p=p, total_dim=1 + count * f, label=WP_CHAR_P, jumps=tuple(jumps))


def break_of_line(
    space: FilteredSpace, depth_index: int, params: FieldParams
) -> int:
    """Upper-numbering break of the degree-p extension cut out by a line at
    the given depth of the space. -1 means unramified.

    Depth conventions per model: V_regular uses the space's own indices
    (p*e1*s is the unramified line); Ubar_zeta uses unit-filtration levels m
    (break p*e1 - m, with m = p*e1 unramified); wp_char_p uses pole order m
    (break m, with m = 0 unramified).
    """
    if space.label == V_REGULAR:
        if depth_index not in space.indices:
            raise ValueError("illegal depth for this space")
        top = space.indices[0]
        if depth_index == top:
            return -1
        s = params.s
        return (top - depth_index) // s
    if space.label == UBAR_ZETA:
        if depth_index not in space.indices:
            raise ValueError("illegal depth for this space")
        top = space.indices[0]
        if depth_index == top:
            return -1
        return top - depth_index
    # wp_char_p: depths are pole orders, stored negated.
    if -depth_index not in space.indices:
        raise ValueError("illegal depth for this space")
    if depth_index == 0:
        return -1
    return depth_index


def orthogonal_index(
    u: Union[int, Fraction], params: FieldParams
) -> Union[int, str]:
    """Index in the V model of the annihilator of the upper subgroup at u.

    For u in [1, b_upper(e)] the annihilator under the Kummer pairing is the
    V-filtration member at index p*e1*s - ceil(u)*s + 1. Outside that range
    the subgroup is pinned: for -1 < u < 1 it equals the full inertia group
    (tag BELOW_BREAK_RANGE) and for u > b_upper(e) it is trivial, with the
    whole space as annihilator (tag ABOVE_BREAK_RANGE).
    """
    if not params.regular:
        raise ValueError("orthogonality is defined for the regular case only")
    u = Fraction(u)
    if u <= -1:
        raise ValueError("u must exceed -1")
    top_break = b_upper(params.e, params.p)
    if u < 1:
        return BELOW_BREAK_RANGE
    if u > top_break:
        return ABOVE_BREAK_RANGE
    s = params.s
    top = params.p * params.e * s // (params.p - 1)
    return top - math.ceil(u) * s + 1
