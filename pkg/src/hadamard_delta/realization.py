"""Exact barycentric geometry of the realized contraction.

Points of ``|D^m|`` are tuples of :class:`fractions.Fraction` summing to 1.
The prism ``|D^m| x [0,1]`` is cut into cells ``S_0 .. S_m`` where ``S_k``
is spanned by ``(e_0,0) .. (e_k,0), (e_k,1) .. (e_m,1)``; the realized
homotopy is affine on each cell.  Everything here is exact, no floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (
    IndexOutOfRange,
    LevelMismatch,
    NotInCell,
    ParameterOutOfRange,
    TargetMismatch,
)
from .hadamard import hadamard
from .reports import CheckResult
from .simplex import MonotoneMap, check_ordinal

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True, order=True)
class BaryPoint:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(c if type(c) is Fraction else Fraction(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if not coords:
            raise ParameterOutOfRange("a barycentric point needs at least one coordinate")
        if any(c < 0 for c in coords):
            raise ParameterOutOfRange(f"negative barycentric coordinate in {coords}")
        if sum(coords) != 1:
            raise ParameterOutOfRange(f"coordinates sum to {sum(coords)}, not 1")

    @property
    def level(self) -> int:
        return len(self.coords) - 1

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self):
        return ",".join(str(c) for c in self.coords)


def vertex(m: int, i: int) -> BaryPoint:
    return BaryPoint(tuple(ONE if j == i else ZERO for j in range(m + 1)))


@dataclass(frozen=True, order=True)
class PrismPoint:
    base: BaryPoint
    t: Fraction

    def __post_init__(self):
        t = Fraction(self.t)
        object.__setattr__(self, "t", t)
        if not 0 <= t <= 1:
            raise ParameterOutOfRange(f"t = {t} outside [0, 1]")

    @property
    def level(self) -> int:
        return self.base.level

    def __str__(self):
        return f"u={self.base} t={self.t}"


@dataclass(frozen=True)
class PrismCell:
    level: int
    k: int

    def __post_init__(self):
        if not 0 <= self.k <= self.level:
            raise IndexOutOfRange(f"cell index {self.k} outside 0..{self.level}")

    @property
    def vertices(self) -> list[tuple[int, int]]:
        """``(i, t)`` pairs standing for the prism vertices ``(e_i, t)``."""
        m, k = self.level, self.k
        return [(i, 0) for i in range(k + 1)] + [(i, 1) for i in range(k, m + 1)]

    def vertex_points(self) -> list[PrismPoint]:
        return [PrismPoint(vertex(self.level, i), Fraction(t)) for i, t in self.vertices]


@dataclass(frozen=True)
class AffineDecomposition:
    """Weights ``a_0..a_k`` on bottom vertices and ``b_k..b_m`` on top vertices."""

    k: int
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.a) != self.k + 1:
            raise LevelMismatch(f"expected {self.k + 1} bottom weights, got {len(self.a)}")
        if any(x < 0 for x in self.a + self.b) or sum(self.a) + sum(self.b) != 1:
            raise ParameterOutOfRange("weights must be nonnegative and sum to 1")

    @property
    def level(self) -> int:
        return self.k + len(self.b) - 1

    @property
    def t(self) -> Fraction:
        return sum(self.b, ZERO)

    def reconstruct(self) -> PrismPoint:
        m, k = self.level, self.k
        u = [ZERO] * (m + 1)
        for i, x in enumerate(self.a):
            u[i] += x
        for j, x in enumerate(self.b):
            u[k + j] += x
        return PrismPoint(BaryPoint(tuple(u)), self.t)


def realize_map(alpha: MonotoneMap, u: BaryPoint) -> BaryPoint:
    """Push ``u`` forward along ``alpha``: ``w_j`` sums ``u_i`` over ``alpha(i) = j``."""
    if u.level != alpha.source:
        raise LevelMismatch(f"point at level {u.level}, map starts at [{alpha.source}]")
    w = [ZERO] * (alpha.target + 1)
    for i, j in enumerate(alpha.values):
        w[j] += u[i]
    return BaryPoint(tuple(w))


def step_index(beta: MonotoneMap) -> int:
    """The ``k`` in ``-1..m`` with ``beta`` zero up to ``k`` and one after."""
    if beta.target != 1:
        raise TargetMismatch(f"step index needs a map into [1], got [{beta.target}]")
    return beta.values.count(0) - 1


def s_coord(beta: MonotoneMap, u: BaryPoint) -> Fraction:
    if u.level != beta.source:
        raise LevelMismatch(f"point at level {u.level}, map starts at [{beta.source}]")
    k = step_index(beta)
    return sum(u.coords[k + 1:], ZERO)


def homotopy_point(alpha: MonotoneMap, beta: MonotoneMap, u: BaryPoint) -> BaryPoint:
    """Realized ``H^n`` at ``(alpha, beta; u)`` by the closed-form sums.

    Mass at indices ``<= k`` collapses to vertex 0; the rest follows ``alpha``.
    Works for ``k = -1`` too, where nothing collapses.
    """
    if u.level != alpha.source or u.level != beta.source:
        raise LevelMismatch(
            f"point at level {u.level}, maps start at [{alpha.source}] and [{beta.source}]"
        )
    k = step_index(beta)
    s = s_coord(beta, u)
    v = [ZERO] * (alpha.target + 1)
    for i in range(k + 1, u.level + 1):
        v[alpha(i)] += u[i]
    v[0] += 1 - s
    return BaryPoint(tuple(v))


def homotopy_point_by_pushforward(alpha: MonotoneMap, beta: MonotoneMap, u: BaryPoint) -> BaryPoint:
    return realize_map(hadamard(alpha, beta), u)


def _check_cell(m: int, k: int, p: PrismPoint):
    if p.level != m:
        raise LevelMismatch(f"point at level {p.level}, cell at level {m}")
    if not 0 <= k <= m:
        raise IndexOutOfRange(f"cell index {k} outside 0..{m}")


def cell_membership(m: int, k: int, p: PrismPoint) -> bool:
    _check_cell(m, k, p)
    above = sum(p.base.coords[k + 1:], ZERO)
    return above <= p.t <= above + p.base[k]


def cover_index(p: PrismPoint) -> set[int]:
    return {k for k in range(p.level + 1) if cell_membership(p.level, k, p)}


def cell_decompose(m: int, k: int, p: PrismPoint) -> AffineDecomposition:
    if not cell_membership(m, k, p):
        raise NotInCell(f"{p} is not in S_{k}")
    u = p.base.coords
    bk = p.t - sum(u[k + 1:], ZERO)
    a = tuple(u[:k]) + (u[k] - bk,)
    b = (bk,) + tuple(u[k + 1:])
    return AffineDecomposition(k, a, b)


def affine_image(alpha: MonotoneMap, d: AffineDecomposition) -> BaryPoint:
    """Bottom vertices go to vertex 0, top vertex ``(e_i, 1)`` to vertex ``alpha(i)``."""
    if d.level != alpha.source:
        raise LevelMismatch(f"decomposition at level {d.level}, map starts at [{alpha.source}]")
    v = [ZERO] * (alpha.target + 1)
    v[0] += sum(d.a, ZERO)
    for j, x in enumerate(d.b):
        v[alpha(d.k + j)] += x
    return BaryPoint(tuple(v))


def standard_contraction(w: BaryPoint, t) -> BaryPoint:
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise ParameterOutOfRange(f"t = {t} outside [0, 1]")
    c = [t * x for x in w.coords]
    c[0] += 1 - t
    return BaryPoint(tuple(c))


def prism_triangulation(m: int) -> list[tuple[MonotoneMap, MonotoneMap]]:
    """For each ``k``, the pair ``(alpha_k: [m+1]->[m], beta_k: [m+1]->[1])`` spanning ``S_k``."""
    check_ordinal(m)
    return [
        (
            MonotoneMap(m + 1, m, tuple(i if i <= k else i - 1 for i in range(m + 2))),
            MonotoneMap(m + 1, 1, tuple(0 if i <= k else 1 for i in range(m + 2))),
        )
        for k in range(m + 1)
    ]


def triangulation_vertices(m: int, k: int) -> list[tuple[int, int]]:
    alpha_k, beta_k = prism_triangulation(m)[k]
    return [(alpha_k(i), beta_k(i)) for i in range(m + 2)]


# ---------------------------------------------------------------------------
# grids


def simplex_grid(m: int, denominator: int) -> list[BaryPoint]:
    """Points of ``|D^m|`` whose coordinates are multiples of ``1/denominator``."""
    pts = []
    # stars and bars over the composition of ``denominator`` into m+1 parts
    for bars in combinations(range(denominator + m), m):
        cuts = (-1,) + bars + (denominator + m,)
        parts = [cuts[i + 1] - cuts[i] - 1 for i in range(m + 1)]
        pts.append(BaryPoint(tuple(Fraction(x, denominator) for x in parts)))
    return sorted(pts, reverse=True)


def barycenter(m: int) -> BaryPoint:
    return BaryPoint((Fraction(1, m + 1),) * (m + 1))


def prism_grid(m: int, denominator: int) -> list[PrismPoint]:
    """Grid points of the prism, plus the base barycenter column when ``denominator >= 2``.

    Every cell vertex is on the grid for any denominator.
    """
    if denominator < 1:
        raise ParameterOutOfRange("grid denominator must be at least 1")
    bases = simplex_grid(m, denominator)
    if denominator >= 2 and barycenter(m) not in bases:
        bases.append(barycenter(m))
    ts = [Fraction(i, denominator) for i in range(denominator + 1)]
    return [PrismPoint(u, t) for u in bases for t in ts]


# ---------------------------------------------------------------------------
# measurements


@dataclass
class DeviationReport:
    n: int
    m: int
    alpha: MonotoneMap
    denominator: int
    points: int
    max_deviation: Fraction
    witness: PrismPoint | None
    witness_affine: BaryPoint | None
    witness_contraction: BaryPoint | None
    vertex_agreement: bool
    slice_agreement: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "alpha": str(self.alpha),
            "grid_denominator": self.denominator,
            "points": self.points,
            "max_deviation": str(self.max_deviation),
            "witness": str(self.witness) if self.witness else None,
            "affine_value": str(self.witness_affine) if self.witness_affine else None,
            "contraction_value": str(self.witness_contraction) if self.witness_contraction else None,
            "vertex_agreement": self.vertex_agreement,
            "slice_agreement": self.slice_agreement,
        }


def linf(a: BaryPoint, b: BaryPoint) -> Fraction:
    return max(abs(x - y) for x, y in zip(a.coords, b.coords))


def affine_value(alpha: MonotoneMap, p: PrismPoint) -> BaryPoint:
    k = min(cover_index(p))
    return affine_image(alpha, cell_decompose(p.level, k, p))


def contraction_value(alpha: MonotoneMap, p: PrismPoint) -> BaryPoint:
    return standard_contraction(realize_map(alpha, p.base), p.t)


def compare_on_grid(n: int, m: int, alpha: MonotoneMap, denominator: int) -> DeviationReport:
    """Measure how far the cellwise-affine homotopy is from the straight-line contraction.

    Reports the largest coordinate gap over the grid with the first point
    reaching it, and whether the two agree exactly at every cell vertex and
    on the ``t = 0`` and ``t = 1`` slices.
    """
    if alpha.source != m or alpha.target != n:
        raise LevelMismatch(f"alpha is [{alpha.source}]->[{alpha.target}], expected [{m}]->[{n}]")
    best = ZERO
    witness = wa = wc = None
    pts = prism_grid(m, denominator)
    slices_ok = True
    for p in pts:
        a = affine_value(alpha, p)
        c = contraction_value(alpha, p)
        d = linf(a, c)
        if p.t in (0, 1) and d != 0:
            slices_ok = False
        if d > best:
            best, witness, wa, wc = d, p, a, c
    vertices_ok = all(
        affine_image(alpha, cell_decompose(m, k, v)) == contraction_value(alpha, v)
        for k in range(m + 1)
        for v in PrismCell(m, k).vertex_points()
    )
    return DeviationReport(n, m, alpha, denominator, len(pts), best, witness, wa, wc,
                           vertices_ok, slices_ok)


def overlap_consistency(m: int, alpha: MonotoneMap, denominator: int) -> CheckResult:
    """Points lying in several cells must get the same image from each."""
    result = CheckResult("realization.overlap_consistency")
    for p in prism_grid(m, denominator):
        ks = sorted(cover_index(p))
        if len(ks) < 2:
            continue
        images = [affine_image(alpha, cell_decompose(m, k, p)) for k in ks]
        result.record(
            all(im == images[0] for im in images),
            operation="overlap_consistency",
            inputs=lambda: f"alpha={alpha} p=({p}) cells={ks}",
            expected=lambda: str(images[0]),
            actual=" | ".join(map(str, images)),
        )
    return result
