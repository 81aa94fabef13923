"""Spectral (Olson) order, meets and joins of simple observables.

The order compares interval resolutions pointwise, inverted: x is below y
when y((-inf,t)) <= x((-inf,t)) for every real t.  All resolutions here
are step functions with jumps on a finite merged grid, so sampling the
grid, one interior point per gap, and one point on each side is
exhaustive.

Meets are computed two independent ways and cross-checked: pointwise
joins of open resolutions at grid points packaged through
left_regularize, and pointwise joins of closed resolutions evaluated
inside the gaps (the finite form of the inf-from-the-right
regularization; a right-continuous step attains that inf throughout the
open gap).  Joins are dual.  When some pointwise bound does not exist in
the backend, existence of the observable meet/join is settled by
exhaustive enumeration of all observables on the merged grid, which is
sound and complete: any lower or upper bound can be moved onto the grid
without leaving the bounding set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebras import EffectAlgebra, EffectElement
from .errors import (
    BackendMismatch,
    CertificationTooLarge,
    EmptyFamily,
    InvalidAlgebra,
    NonIncreasingPoints,
    NonMonotoneInput,
    SpectrumOutsideUnitInterval,
)
from .observables import (
    Interval,
    PiecewiseMap,
    SimpleObservable,
    StepResolution,
    from_closed_values,
    question,
)

DEFAULT_ENUMERATION_CAP = 100_000


@dataclass(frozen=True)
class OlsonComparison:
    """Two-sided comparison verdict with a refuting grid point.

    verdict is one of "equal", "less_or_equal", "greater_or_equal",
    "incomparable".  witness_t is a merged-grid point at which the
    defining inequality of a failed direction is refuted: the failed
    direction itself for one-sided verdicts, the left-to-right direction
    when both fail.  Equal comparisons carry no witness.
    """

    verdict: str
    witness_t: Fraction | None


@dataclass(frozen=True)
class BoundResult:
    """Outcome of olson_meet/olson_join or their brute-force oracles.

    certified is "elementwise" when the result came from pointwise
    backend bounds on the merged grid, "exhaustive" when it came from
    enumerating every observable on the grid.  When a meet or join does
    not exist, frontier holds the maximal lower bounds (respectively
    minimal upper bounds) found by the enumeration.
    """

    exists: bool
    observable: SimpleObservable | None
    certified: str
    frontier: tuple[SimpleObservable, ...] = ()


def _family(xs: Iterable[SimpleObservable]) -> tuple[SimpleObservable, ...]:
    out = tuple(xs)
    if not out:
        raise EmptyFamily("need at least one observable")
    alg = out[0].algebra
    for x in out[1:]:
        if x.algebra is not alg:
            raise BackendMismatch("observables live over different backends")
    return out


def merged_grid(xs: Iterable[SimpleObservable]) -> tuple[Fraction, ...]:
    """Sorted union of the spectra; every resolution is constant between
    consecutive merged points."""
    pts: set[Fraction] = set()
    for x in xs:
        pts.update(x.points)
    return tuple(sorted(pts))


def interior_samples(grid: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """One point inside each gap (t_i, t_{i+1}) plus one beyond the top."""
    mids = [
        (a + b) / 2 for a, b in zip(grid, grid[1:])
    ]
    mids.append(grid[-1] + 1)
    return tuple(mids)


def _order_samples(grid: Sequence[Fraction]) -> tuple[Fraction, ...]:
    below = grid[0] - 1
    return (below, *grid, *interior_samples(grid))


def olson_leq(x: SimpleObservable, y: SimpleObservable) -> bool:
    """x is spectrally below y: y((-inf,t)) <= x((-inf,t)) for all t.

    The equivalent closed-interval test runs alongside and both verdicts
    must agree; a split verdict means the backend order is broken.
    """
    xs = _family((x, y))
    alg = xs[0].algebra
    samples = _order_samples(merged_grid(xs))
    open_ok = all(
        alg.leq(y.resolution_open(t), x.resolution_open(t)) for t in samples
    )
    closed_ok = all(
        alg.leq(y.resolution_closed(t), x.resolution_closed(t)) for t in samples
    )
    if open_ok != closed_ok:
        raise InvalidAlgebra(
            "open and closed interval tests disagree; backend order is inconsistent"
        )
    return open_ok


def _refuting_grid_point(
    x: SimpleObservable, y: SimpleObservable, grid: Sequence[Fraction]
) -> Fraction:
    """First grid point where the defining inequality of x-below-y fails."""
    alg = x.algebra
    for t in grid:
        if not alg.leq(y.resolution_open(t), x.resolution_open(t)):
            return t
        if not alg.leq(y.resolution_closed(t), x.resolution_closed(t)):
            return t
    raise InvalidAlgebra("refuted comparison has no grid witness; order is inconsistent")


def compare(x: SimpleObservable, y: SimpleObservable) -> OlsonComparison:
    xs = _family((x, y))
    grid = merged_grid(xs)
    leq_ok = olson_leq(x, y)
    geq_ok = olson_leq(y, x)
    if leq_ok and geq_ok:
        return OlsonComparison("equal", None)
    if leq_ok:
        return OlsonComparison("less_or_equal", _refuting_grid_point(y, x, grid))
    if geq_ok:
        return OlsonComparison("greater_or_equal", _refuting_grid_point(x, y, grid))
    return OlsonComparison("incomparable", _refuting_grid_point(x, y, grid))


# -- regularization of monotone grid families --------------------------------


def _grid_pairs(
    algebra: EffectAlgebra,
    pairs: Sequence[tuple[Fraction, EffectElement]],
) -> tuple[tuple[Fraction, ...], tuple[EffectElement, ...]]:
    if not pairs:
        raise NonMonotoneInput("need at least one grid value")
    ts = tuple(Fraction(t) for t, _ in pairs)
    ws = tuple(w for _, w in pairs)
    if any(b <= a for a, b in zip(ts, ts[1:])):
        raise NonIncreasingPoints(f"grid not strictly increasing: {ts}")
    for w in ws:
        algebra._payload(w)
    for a, b in zip(ws, ws[1:]):
        if not algebra.leq(a, b):
            raise NonMonotoneInput("grid values must be nondecreasing")
    return ts, ws


def left_regularize(
    algebra: EffectAlgebra,
    pairs: Sequence[tuple[Fraction, EffectElement]],
) -> StepResolution:
    """Sup-from-the-left closure of a monotone family known on a grid.

    The input lists the family's values at its grid points; off the grid
    it is zero strictly below and one strictly above, and jumps sit on
    the open side of each point.  The closure is then the left-continuous
    step with value w_i on (t_i, t_{i+1}], i.e. the unique step
    resolution whose open-interval values extend the input.  The first
    value must be zero; a second application is the identity.
    """
    ts, ws = _grid_pairs(algebra, pairs)
    if ws[0] != algebra.zero:
        raise NonMonotoneInput("family must start at 0")
    return StepResolution(algebra, ts, (*ws, algebra.one))


def right_regularize(
    algebra: EffectAlgebra,
    pairs: Sequence[tuple[Fraction, EffectElement]],
) -> tuple[tuple[Fraction, EffectElement], ...]:
    """Inf-from-the-right closure, evaluated at the same grid points.

    With jumps on the open side of each point, the inf over (t_i, inf)
    is attained just above t_i, so each value moves one knot to the
    left and the one-tail lands on the last point.  Applied after
    left_regularize this yields exactly the closed-interval family of
    the induced observable.
    """
    ts, ws = _grid_pairs(algebra, pairs)
    shifted = (*ws[1:], algebra.one)
    return tuple(zip(ts, shifted))


# -- meets and joins ----------------------------------------------------------


def _meet_open_route(
    alg: EffectAlgebra,
    xs: Sequence[SimpleObservable],
    grid: Sequence[Fraction],
) -> SimpleObservable | None:
    vals = []
    for t in grid:
        v = alg.join_many([x.resolution_open(t) for x in xs])
        if v is None:
            return None
        vals.append(v)
    return left_regularize(alg, tuple(zip(grid, vals))).to_observable()


def _meet_closed_route(
    alg: EffectAlgebra,
    xs: Sequence[SimpleObservable],
    grid: Sequence[Fraction],
) -> SimpleObservable | None:
    vals = []
    for s in interior_samples(grid):
        v = alg.join_many([x.resolution_closed(s) for x in xs])
        if v is None:
            return None
        vals.append(v)
    return from_closed_values(alg, tuple(zip(grid, vals)))


def _join_open_route(
    alg: EffectAlgebra,
    xs: Sequence[SimpleObservable],
    grid: Sequence[Fraction],
) -> SimpleObservable | None:
    vals = []
    for t in grid:
        v = alg.meet_many([x.resolution_open(t) for x in xs])
        if v is None:
            return None
        vals.append(v)
    return left_regularize(alg, tuple(zip(grid, vals))).to_observable()


def _join_closed_route(
    alg: EffectAlgebra,
    xs: Sequence[SimpleObservable],
    grid: Sequence[Fraction],
) -> SimpleObservable | None:
    vals = []
    for s in interior_samples(grid):
        v = alg.meet_many([x.resolution_closed(s) for x in xs])
        if v is None:
            return None
        vals.append(v)
    return from_closed_values(alg, tuple(zip(grid, vals)))


def olson_meet(
    xs: Iterable[SimpleObservable],
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> BoundResult:
    """Greatest lower bound of a finite family in the spectral order.

    Pointwise joins of the resolutions on the merged grid give the meet
    whenever every needed join exists in the backend; the open-interval
    and closed-interval computations must produce the same observable.
    If some pointwise join is missing, existence is settled by the
    exhaustive grid-observable oracle and its answer is returned.
    """
    family = _family(xs)
    alg = family[0].algebra
    grid = merged_grid(family)
    via_open = _meet_open_route(alg, family, grid)
    via_closed = _meet_closed_route(alg, family, grid)
    if via_open is not None and via_closed is not None:
        if via_open != via_closed:
            raise InvalidAlgebra(
                "open and closed meet routes disagree; backend joins are inconsistent"
            )
        return BoundResult(True, via_open, "elementwise")
    return brute_force_meet(family, cap=cap)


def olson_join(
    xs: Iterable[SimpleObservable],
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> BoundResult:
    """Least upper bound; dual of olson_meet in every respect."""
    family = _family(xs)
    alg = family[0].algebra
    grid = merged_grid(family)
    via_open = _join_open_route(alg, family, grid)
    via_closed = _join_closed_route(alg, family, grid)
    if via_open is not None and via_closed is not None:
        if via_open != via_closed:
            raise InvalidAlgebra(
                "open and closed join routes disagree; backend meets are inconsistent"
            )
        return BoundResult(True, via_open, "elementwise")
    return brute_force_join(family, cap=cap)


# -- exhaustive oracles -------------------------------------------------------


def enumerate_grid_observables(
    algebra: EffectAlgebra,
    grid: Sequence[Fraction],
    cap: int = DEFAULT_ENUMERATION_CAP,
):
    """Yield every observable supported inside the given grid.

    Observables with spectrum in a grid of k points correspond exactly
    to monotone chains c_1 <= ... <= c_k = one of closed-resolution
    values; zero jumps drop out in canonical form, so sub-grid spectra
    are included.  Raises CertificationTooLarge when the chain space
    can exceed cap.
    """
    pts = tuple(sorted({Fraction(t) for t in grid}))
    if not pts:
        raise EmptyFamily("grid must be nonempty")
    elems = tuple(algebra.elements())
    bound = len(elems) ** (len(pts) - 1)
    if bound > cap:
        raise CertificationTooLarge(
            f"up to {bound} grid observables exceeds cap {cap}"
        )

    def chains(prev: EffectElement, remaining: int):
        if remaining == 1:
            yield (algebra.one,)
            return
        for e in elems:
            if algebra.leq(prev, e):
                for rest in chains(e, remaining - 1):
                    yield (e, *rest)

    for chain in chains(algebra.zero, len(pts)):
        yield from_closed_values(algebra, tuple(zip(pts, chain)))


def brute_force_meet(
    xs: Iterable[SimpleObservable],
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> BoundResult:
    """Certified meet by enumerating all observables on the merged grid.

    Sound and complete: every lower bound of the family has closed
    values that can be restricted to the merged grid without leaving
    the set of lower bounds or moving up past any of them, so a
    greatest lower bound exists among all bounded observables iff one
    exists among the grid observables.
    """
    family = _family(xs)
    alg = family[0].algebra
    grid = merged_grid(family)
    lower = [
        g
        for g in enumerate_grid_observables(alg, grid, cap=cap)
        if all(olson_leq(g, x) for x in family)
    ]
    for g in lower:
        if all(olson_leq(h, g) for h in lower):
            return BoundResult(True, g, "exhaustive")
    maximal = tuple(
        g for g in lower if not any(g != h and olson_leq(g, h) for h in lower)
    )
    return BoundResult(False, None, "exhaustive", maximal)


def brute_force_join(
    xs: Iterable[SimpleObservable],
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> BoundResult:
    family = _family(xs)
    alg = family[0].algebra
    grid = merged_grid(family)
    upper = [
        g
        for g in enumerate_grid_observables(alg, grid, cap=cap)
        if all(olson_leq(x, g) for x in family)
    ]
    for g in upper:
        if all(olson_leq(g, h) for h in upper):
            return BoundResult(True, g, "exhaustive")
    minimal = tuple(
        g for g in upper if not any(g != h and olson_leq(h, g) for h in upper)
    )
    return BoundResult(False, None, "exhaustive", minimal)


# -- involution lattice on unit-interval observables --------------------------


def _require_unit_spectrum(x: SimpleObservable) -> None:
    if x.points[0] < 0 or x.points[-1] > 1:
        raise SpectrumOutsideUnitInterval(
            f"involution needs spectra inside [0,1], got {x.points}"
        )


def involution_suite(x: SimpleObservable, y: SimpleObservable) -> dict[str, bool]:
    """Check the involution-lattice identities on a pair of unit-interval
    observables.

    Most checks are unconditional; the question items apply when an
    input is a two-valued question and hold vacuously otherwise.  The
    spread bounds use g(t)=min{t,1-t} and h(t)=max{t,1-t}: mapping a
    spectrum through a pointwise-smaller function can only move the
    observable down, so g(x) sits below both x and its reflection and
    h(x) above both.  The flipped readings fail already at two-point
    questions.  The degenerate variant max{1,1-t} collapses to the
    constant map 1 on the unit interval, so its upper-bound claim holds
    for every input; it is reported under its own key and nothing
    stronger is asserted for it.
    """
    family = _family((x, y))
    alg = family[0].algebra
    for z in family:
        _require_unit_spectrum(z)
    g_map = PiecewiseMap.min_t_one_minus_t()
    h_map = PiecewiseMap.max_t_one_minus_t()
    h_literal = PiecewiseMap((
        (Interval(None, Fraction(0)), Fraction(-1), Fraction(1)),
        (Interval(Fraction(0), None, True), Fraction(0), Fraction(1)),
    ))

    report: dict[str, bool] = {}
    nx, ny = x.negate(), y.negate()

    report["double_negation"] = nx.negate() == x and ny.negate() == y

    antitone = True
    if olson_leq(x, y):
        antitone = antitone and olson_leq(ny, nx)
    if olson_leq(y, x):
        antitone = antitone and olson_leq(nx, ny)
    report["antitone"] = antitone

    report["bounds_reflection"] = (
        question(alg, alg.zero).negate() == question(alg, alg.one)
        and question(alg, alg.one).negate() == question(alg, alg.zero)
    )

    meet_xy = olson_meet((x, y))
    join_xy = olson_join((x, y))
    meet_neg = olson_meet((nx, ny))
    join_neg = olson_join((nx, ny))
    de_morgan_meet = True
    if meet_xy.exists:
        de_morgan_meet = (
            join_neg.exists and meet_xy.observable.negate() == join_neg.observable
        )
    de_morgan_join = True
    if join_xy.exists:
        de_morgan_join = (
            meet_neg.exists and join_xy.observable.negate() == meet_neg.observable
        )
    report["de_morgan_meet"] = de_morgan_meet
    report["de_morgan_join"] = de_morgan_join

    question_negation = True
    for z, nz in ((x, nx), (y, ny)):
        a = z.question_element()
        if a is not None:
            question_negation = question_negation and nz == question(
                alg, alg.complement(a)
            )
    report["question_negation"] = question_negation

    question_lattice = True
    a, b = x.question_element(), y.question_element()
    if a is not None and b is not None:
        ab_meet = alg.meet(a, b)
        ab_join = alg.join(a, b)
        if ab_meet is not None:
            question_lattice = question_lattice and (
                meet_xy.exists and meet_xy.observable == question(alg, ab_meet)
            )
        if ab_join is not None:
            question_lattice = question_lattice and (
                join_xy.exists and join_xy.observable == question(alg, ab_join)
            )
        question_lattice = question_lattice and (
            olson_leq(x, y) == alg.leq(a, b)
        ) and (olson_leq(y, x) == alg.leq(b, a))
    report["question_lattice"] = question_lattice

    spread_meet = True
    spread_join = True
    spread_join_literal = True
    sharp_kernel = True
    for z, nz in ((x, nx), (y, ny)):
        self_meet = olson_meet((z, nz))
        self_join = olson_join((z, nz))
        if self_meet.exists:
            spread_meet = spread_meet and olson_leq(
                z.apply_map(g_map), self_meet.observable
            )
        if self_join.exists:
            spread_join = spread_join and olson_leq(
                self_join.observable, z.apply_map(h_map)
            )
            spread_join_literal = spread_join_literal and olson_leq(
                self_join.observable, z.apply_map(h_literal)
            )
        a = z.question_element()
        if a is not None and self_meet.exists:
            is_bottom = self_meet.observable == question(alg, alg.zero)
            sharp_kernel = sharp_kernel and (is_bottom == alg.is_sharp(a))
    report["spread_meet"] = spread_meet
    report["spread_join"] = spread_join
    report["spread_join_literal"] = spread_join_literal
    report["sharp_question_kernel"] = sharp_kernel
    return report
