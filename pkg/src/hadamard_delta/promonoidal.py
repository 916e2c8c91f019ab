"""The Cartesian promonoidal kernel on the simplex category.

An element of ``P([p],[q];[r])`` is a coend class of triples
``(alpha: [m]->[p], beta: [m]->[q], gamma: [r]->[m])`` modulo
``(alpha.f, beta.f, gamma) ~ (alpha, beta, f.gamma)``.  Every class has the
canonical representative ``(alpha.gamma, beta.gamma, id_r)``, so equality of
classes is equality of canonical forms.  The unit ``J([r]) = D([r],[0])`` is a
singleton at every level.

The coend itself is never formed; :func:`truncation_stability` rebuilds the
quotient by union-find over a bounded slice of representatives as an
independent cross-check on the canonical forms.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import SourceTargetMismatch
from .hadamard import hadamard
from .simplex import (
    MonotoneMap,
    check_ordinal,
    compose,
    count_maps,
    degeneracy_maps,
    enumerate_maps,
    face_maps,
    identity,
)


@dataclass(frozen=True, order=True)
class KernelClass:
    """A representative ``[alpha, beta, gamma]`` of ``P([p],[q];[r])``."""

    alpha: MonotoneMap
    beta: MonotoneMap
    gamma: MonotoneMap

    def __post_init__(self):
        if self.alpha.source != self.beta.source:
            raise SourceTargetMismatch(
                f"alpha and beta must share a source, got [{self.alpha.source}] and [{self.beta.source}]"
            )
        if self.gamma.target != self.alpha.source:
            raise SourceTargetMismatch(
                f"gamma lands in [{self.gamma.target}], expected [{self.alpha.source}]"
            )

    @property
    def p(self) -> int:
        return self.alpha.target

    @property
    def q(self) -> int:
        return self.beta.target

    @property
    def r(self) -> int:
        return self.gamma.source

    @property
    def rep_level(self) -> int:
        return self.alpha.source

    @property
    def is_canonical(self) -> bool:
        return self.gamma == identity(self.r)

    def __str__(self):
        return f"[{self.alpha} ; {self.beta} ; {self.gamma}]"


def normalize_kernel(c: KernelClass) -> KernelClass:
    if c.is_canonical:
        return c
    return KernelClass(compose(c.alpha, c.gamma), compose(c.beta, c.gamma), identity(c.r))


def eta(c: KernelClass) -> tuple[MonotoneMap, MonotoneMap]:
    """Identify a class with a pair of maps out of ``[r]``."""
    return compose(c.alpha, c.gamma), compose(c.beta, c.gamma)


def eta_inverse(f: MonotoneMap, g: MonotoneMap) -> KernelClass:
    if f.source != g.source:
        raise SourceTargetMismatch(f"f and g must share a source, got [{f.source}] and [{g.source}]")
    return KernelClass(f, g, identity(f.source))


def canonical_classes(p: int, q: int, r: int) -> list[KernelClass]:
    return [eta_inverse(f, g) for f in enumerate_maps(r, p) for g in enumerate_maps(r, q)]


def representatives(p: int, q: int, r: int, max_level: int) -> Iterator[KernelClass]:
    """All triples with representing level ``m <= max_level``."""
    for m in range(max_level + 1):
        for alpha in enumerate_maps(m, p):
            for beta in enumerate_maps(m, q):
                for gamma in enumerate_maps(r, m):
                    yield KernelClass(alpha, beta, gamma)


def kernel_act(fp: MonotoneMap, fq: MonotoneMap, h: MonotoneMap, c: KernelClass) -> KernelClass:
    """``P(fp, fq; h)``: postcompose in the two covariant slots, precompose ``h`` in the third."""
    if fp.source != c.p or fq.source != c.q:
        raise SourceTargetMismatch(
            f"covariant maps start at [{fp.source}],[{fq.source}], class lives over [{c.p}],[{c.q}]"
        )
    if h.target != c.r:
        raise SourceTargetMismatch(f"h lands in [{h.target}], class is at level [{c.r}]")
    return KernelClass(compose(fp, c.alpha), compose(fq, c.beta), compose(c.gamma, h))


def relation_check(alpha: MonotoneMap, beta: MonotoneMap, gamma: MonotoneMap, f: MonotoneMap) -> bool:
    """Do ``[alpha.f, beta.f, gamma]`` and ``[alpha, beta, f.gamma]`` normalize alike?"""
    if f.target != alpha.source or f.target != beta.source:
        raise SourceTargetMismatch(f"f lands in [{f.target}], alpha/beta start at [{alpha.source}]")
    if gamma.target != f.source:
        raise SourceTargetMismatch(f"gamma lands in [{gamma.target}], f starts at [{f.source}]")
    left = KernelClass(compose(alpha, f), compose(beta, f), gamma)
    right = KernelClass(alpha, beta, compose(f, gamma))
    return normalize_kernel(left) == normalize_kernel(right)


@dataclass(frozen=True)
class UnitElement:
    """The single element of ``J([r])``, i.e. the map ``[r] -> [0]``."""

    r: int

    @property
    def map(self) -> MonotoneMap:
        return MonotoneMap(self.r, 0, (0,) * (self.r + 1))


def unit_element(r: int) -> UnitElement:
    return UnitElement(check_ordinal(r))


def unit_act(h: MonotoneMap, e: UnitElement) -> UnitElement:
    if h.target != e.r:
        raise SourceTargetMismatch(f"h lands in [{h.target}], unit element at [{e.r}]")
    return UnitElement(compose(e.map, h).source)


def delta(c: KernelClass) -> MonotoneMap:
    """``(alpha * beta) . gamma``, a map ``[r] -> [p*q]``."""
    return compose(hadamard(c.alpha, c.beta), c.gamma)


def delta_naturality_check(h: MonotoneMap, c: KernelClass) -> bool:
    if h.target != c.r:
        raise SourceTargetMismatch(f"h lands in [{h.target}], class is at level [{c.r}]")
    moved = kernel_act(identity(c.p), identity(c.q), h, c)
    return delta(moved) == compose(delta(c), h)


def symmetry_instance(c: KernelClass) -> KernelClass:
    return KernelClass(c.beta, c.alpha, c.gamma)


# ---------------------------------------------------------------------------
# Day convolution of representables


@dataclass(frozen=True, order=True)
class DayClass:
    """A representative ``[pi ; alpha, beta]`` of ``(D^p * D^q)([r])``.

    ``pi`` lives in ``P([x],[y];[r])`` with ``alpha: [x] -> [p]`` and
    ``beta: [y] -> [q]``.
    """

    pi: KernelClass
    alpha: MonotoneMap
    beta: MonotoneMap

    def __post_init__(self):
        if self.alpha.source != self.pi.p or self.beta.source != self.pi.q:
            raise SourceTargetMismatch(
                f"alpha/beta start at [{self.alpha.source}],[{self.beta.source}], "
                f"pi lives over [{self.pi.p}],[{self.pi.q}]"
            )

    p = property(lambda self: self.alpha.target)
    q = property(lambda self: self.beta.target)
    r = property(lambda self: self.pi.r)
    x = property(lambda self: self.pi.p)
    y = property(lambda self: self.pi.q)

    def __str__(self):
        return f"[{self.pi} ; {self.alpha} , {self.beta}]"


def _pushed(d: DayClass) -> KernelClass:
    return kernel_act(d.alpha, d.beta, identity(d.r), d.pi)


def normalize_day(d: DayClass) -> DayClass:
    """Canonical form: ``x = p``, ``y = q``, identities on the outside, ``pi`` canonical."""
    return DayClass(normalize_kernel(_pushed(d)), identity(d.p), identity(d.q))


def day_to_pair(d: DayClass) -> tuple[MonotoneMap, MonotoneMap]:
    return eta(_pushed(d))


def pair_to_day(f: MonotoneMap, g: MonotoneMap) -> DayClass:
    return DayClass(eta_inverse(f, g), identity(f.target), identity(g.target))


def day_level(p: int, q: int, r: int) -> list[DayClass]:
    return [
        pair_to_day(f, g)
        for f in enumerate_maps(r, p)
        for g in enumerate_maps(r, q)
    ]


def theta(d: DayClass) -> MonotoneMap:
    return delta(_pushed(d))


def day_representatives(p: int, q: int, r: int, bound: int) -> Iterator[DayClass]:
    """Representatives with ``x, y <= bound`` and ``pi`` canonical."""
    for x in range(bound + 1):
        for y in range(bound + 1):
            for pi in canonical_classes(x, y, r):
                for alpha in enumerate_maps(x, p):
                    for beta in enumerate_maps(y, q):
                        yield DayClass(pi, alpha, beta)


def day_relation_pairs(p: int, q: int, r: int, bound: int) -> Iterator[tuple[str, DayClass, DayClass]]:
    """Pairs of representatives that the Day coend identifies.

    Three families, objects up to ``bound``: moving ``u: [x'] -> [x]`` across
    the first slot, moving ``v: [y'] -> [y]`` across the second, and replacing
    ``pi`` by another representative of the same kernel class.
    """
    for x, x2, y in product(range(bound + 1), repeat=3):
        for pi2 in canonical_classes(x2, y, r):
            for u in enumerate_maps(x2, x):
                moved = kernel_act(u, identity(y), identity(r), pi2)
                for alpha in enumerate_maps(x, p):
                    au = compose(alpha, u)
                    for beta in enumerate_maps(y, q):
                        yield "u", DayClass(moved, alpha, beta), DayClass(pi2, au, beta)
    for x, y, y2 in product(range(bound + 1), repeat=3):
        for pi2 in canonical_classes(x, y2, r):
            for v in enumerate_maps(y2, y):
                moved = kernel_act(identity(x), v, identity(r), pi2)
                for alpha in enumerate_maps(x, p):
                    for beta in enumerate_maps(y, q):
                        yield "v", DayClass(moved, alpha, beta), DayClass(pi2, alpha, compose(beta, v))
    for x, y in product(range(bound + 1), repeat=2):
        for pi in representatives(x, y, r, bound):
            if pi.is_canonical:
                continue
            canon = normalize_kernel(pi)
            for alpha in enumerate_maps(x, p):
                for beta in enumerate_maps(y, q):
                    yield "pi", DayClass(pi, alpha, beta), DayClass(canon, alpha, beta)


# ---------------------------------------------------------------------------
# Bounded coend quotient by union-find


class UnionFind:
    def __init__(self):
        self.parent = {}
        self.size = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]

    def count(self) -> int:
        return sum(1 for x in self.parent if self.parent[x] == x)


def _bounded_morphisms(bound: int, generators: bool):
    if not generators:
        for a in range(bound + 1):
            for b in range(bound + 1):
                yield from enumerate_maps(a, b)
        return
    for m in range(bound + 1):
        yield from face_maps(m)
        if m + 1 <= bound:
            yield from degeneracy_maps(m)


def coend_quotient_count(p: int, q: int, r: int, bound: int, generators: bool = True) -> int:
    """Number of classes among representatives of level ``<= bound``.

    With ``generators`` the relation is imposed only along face and
    degeneracy maps, which generate the same equivalence relation on the
    bounded slice because every map factors through intermediate levels no
    larger than its endpoints.
    """
    uf = UnionFind()
    for m in range(bound + 1):
        for a in enumerate_maps(m, p):
            for b in enumerate_maps(m, q):
                for g in enumerate_maps(r, m):
                    uf.add((a.values, b.values, g.values))
    gammas = {m: [g.values for g in enumerate_maps(r, m)] for m in range(bound + 1)}
    for f in _bounded_morphisms(bound, generators):
        fv = f.values
        for a in enumerate_maps(f.target, p):
            av = a.values
            af = tuple(av[i] for i in fv)
            for b in enumerate_maps(f.target, q):
                bv = b.values
                bf = tuple(bv[i] for i in fv)
                for gv in gammas[f.source]:
                    uf.union((af, bf, gv), (av, bv, tuple(fv[i] for i in gv)))
    return uf.count()


@dataclass
class TruncationReport:
    p: int
    q: int
    r: int
    bound: int
    count_at_bound: int
    count_at_next: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.count_at_bound == self.count_at_next == self.expected


def truncation_stability(p: int, q: int, r: int, bound: int, generators: bool = True) -> TruncationReport:
    if bound < r:
        raise ValueError(f"bound {bound} must be at least r = {r}")
    return TruncationReport(
        p, q, r, bound,
        coend_quotient_count(p, q, r, bound, generators),
        coend_quotient_count(p, q, r, bound + 1, generators),
        count_maps(r, p) * count_maps(r, q),
    )
