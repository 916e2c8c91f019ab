"""Exhaustive verification suites behind ``hadamard-delta verify``.

Each suite is a list of named checks; each check tallies instances and keeps
counterexamples.  Bounds derive from :class:`SuiteConfig`.  Everything is
exhaustive unless ``sample`` is set, in which case the relation-style
checks draw that many instances with ``random.Random(seed)``.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from itertools import product

from . import coherence as coh
from .hadamard import factor_hadamard, hadamard, homotopy_endpoints, homotopy_level, simplicial_map_check
from .promonoidal import (
    KernelClass,
    canonical_classes,
    day_level,
    day_relation_pairs,
    day_representatives,
    day_to_pair,
    delta,
    delta_naturality_check,
    eta,
    eta_inverse,
    kernel_act,
    normalize_day,
    normalize_kernel,
    relation_check,
    representatives,
    theta,
    truncation_stability,
    unit_act,
    unit_element,
)
from .realization import (
    PrismPoint,
    PrismCell,
    affine_image,
    cell_decompose,
    compare_on_grid,
    cover_index,
    homotopy_point,
    homotopy_point_by_pushforward,
    overlap_consistency,
    prism_grid,
    prism_triangulation,
    realize_map,
    s_coord,
    simplex_grid,
    step_index,
)
from .reports import CheckResult, SuiteReport
from .simplex import (
    MonotoneMap,
    compose,
    constant_map,
    count_maps,
    enumerate_maps,
    identity,
    make_map,
    terminal_map,
    vertex_map,
)

SUITES = ("core", "kernel", "coherence", "hadamard", "homotopy", "realization")


@dataclass(frozen=True)
class SuiteConfig:
    suite: str = "all"
    max_dim: int = 3
    grid_denominator: int = 4
    sample_seed: int = 0
    format: str = "text"
    counterexample_limit: int = 10
    deep: bool = False
    sample: int | None = None

    def __post_init__(self):
        if self.suite not in SUITES + ("all",):
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.max_dim < 0:
            raise ValueError("max_dim must be >= 0")
        if self.grid_denominator < 1:
            raise ValueError("grid_denominator must be >= 1")
        if self.format not in ("text", "json"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.counterexample_limit < 0:
            raise ValueError("counterexample_limit must be >= 0")
        if self.sample is not None and self.sample < 1:
            raise ValueError("sample must be >= 1")

    @property
    def small(self) -> int:
        return min(self.max_dim, 2)

    @property
    def coherence_bound(self) -> int:
        return min(self.max_dim, 2 if self.deep else 1)

    def as_dict(self) -> dict:
        return asdict(self)


def _pick(items, config: SuiteConfig):
    if config.sample is None:
        return items
    items = list(items)
    if len(items) <= config.sample:
        return items
    return random.Random(config.sample_seed).sample(items, config.sample)


def _eq_record(check: CheckResult, operation: str, inputs: str, expected, actual):
    check.record(expected == actual, operation=operation, inputs=inputs,
                 expected=lambda: str(expected), actual=lambda: str(actual))


# ---------------------------------------------------------------------------


def core_checks(config: SuiteConfig) -> list[CheckResult]:
    d = config.max_dim
    counts = CheckResult("core.count_maps")
    order = CheckResult("core.enumeration_order")
    for m, n in product(range(d + 3), repeat=2):
        maps = enumerate_maps(m, n)
        _eq_record(counts, "count_maps", lambda: f"m={m} n={n}", len(maps), count_maps(m, n))
        tables = [f.values for f in maps]
        order.record(all(a < b for a, b in zip(tables, tables[1:])),
                     operation="enumerate_maps", inputs=lambda: f"m={m} n={n}")

    ident = CheckResult("core.identity_laws")
    special = CheckResult("core.special_maps")
    for m, n in product(range(d + 1), repeat=2):
        for f in enumerate_maps(m, n):
            ok = compose(identity(n), f) == f and compose(f, identity(m)) == f
            ident.record(ok, operation="compose", inputs=lambda: f"f={f}")
            _eq_record(special, "terminal_map", lambda: f"f={f}", terminal_map(m), compose(terminal_map(n), f))
        for eps in (0, 1):
            _eq_record(special, "vertex_map", lambda: f"eps={eps} m={m}",
                       constant_map(m, 1, eps), compose(vertex_map(eps), terminal_map(m)))

    assoc = CheckResult("core.associativity")
    for a, b, c, e in product(range(d + 1), repeat=4):
        for f in enumerate_maps(a, b):
            for g in enumerate_maps(b, c):
                gf = compose(g, f)
                for h in enumerate_maps(c, e):
                    _eq_record(assoc, "compose", lambda: f"h={h} g={g} f={f}",
                               compose(compose(h, g), f), compose(h, gf))
    return [counts, order, ident, special, assoc]


def kernel_checks(config: SuiteConfig) -> list[CheckResult]:
    d, e = config.max_dim, config.small

    bij = CheckResult("kernel.eta_bijection")
    for p, q, r in product(range(d + 1), repeat=3):
        classes = canonical_classes(p, q, r)
        distinct = len(set(classes)) == len(classes) == count_maps(r, p) * count_maps(r, q)
        for c in classes:
            f, g = eta(c)
            ok = distinct and eta_inverse(f, g) == c and normalize_kernel(c) == c
            bij.record(ok, operation="eta", inputs=lambda: f"p={p} q={q} r={r} class={c}",
                       expected=lambda: str(c), actual=lambda: str(eta_inverse(f, g)))

    units = CheckResult("kernel.unit_singleton")
    for r in range(d + 1):
        for r2 in range(d + 1):
            for h in enumerate_maps(r2, r):
                _eq_record(units, "unit_act", lambda: f"h={h}", unit_element(r2), unit_act(h, unit_element(r)))

    rel = CheckResult("kernel.coend_relation")
    norm = CheckResult("kernel.normalize")
    dinv = CheckResult("kernel.delta_well_defined")
    cases = [
        (alpha, beta, gamma, f)
        for p, q, r, m, m2 in product(range(e + 1), repeat=5)
        for f in enumerate_maps(m2, m)
        for alpha in enumerate_maps(m, p)
        for beta in enumerate_maps(m, q)
        for gamma in enumerate_maps(r, m2)
    ]
    for alpha, beta, gamma, f in _pick(cases, config):
        inputs = f"alpha={alpha} beta={beta} gamma={gamma} f={f}"
        rel.record(relation_check(alpha, beta, gamma, f), operation="relation_check", inputs=inputs)
        left = KernelClass(compose(alpha, f), compose(beta, f), gamma)
        right = KernelClass(alpha, beta, compose(f, gamma))
        _eq_record(dinv, "delta", inputs, delta(right), delta(left))
    for p, q, r in product(range(e + 1), repeat=3):
        for c in representatives(p, q, r, d):
            n = normalize_kernel(c)
            norm.record(normalize_kernel(n) == n and eta(n) == eta(c),
                        operation="normalize_kernel", inputs=lambda: str(c))
            _eq_record(dinv, "delta", str(c), delta(n), delta(c))

    nat = CheckResult("kernel.delta_naturality")
    nat_cases = [
        (h, c)
        for p, q, r, r2 in product(range(e + 1), repeat=4)
        for c in representatives(p, q, r, e)
        for h in enumerate_maps(r2, r)
    ]
    for h, c in _pick(nat_cases, config):
        nat.record(delta_naturality_check(h, c), operation="delta_naturality_check",
                   inputs=lambda: f"h={h} class={c}",
                   expected=lambda: str(compose(delta(c), h)),
                   actual=lambda: str(delta(kernel_act(identity(c.p), identity(c.q), h, c))))

    act = CheckResult("kernel.action_normalization")
    e1 = min(d, 1)
    act_cases = [
        (fp, fq, h, c)
        for p, q, r, p2, q2, r2 in product(range(e1 + 1), repeat=6)
        for c in representatives(p, q, r, e1 + 1)
        for fp in enumerate_maps(p, p2)
        for fq in enumerate_maps(q, q2)
        for h in enumerate_maps(r2, r)
    ]
    for fp, fq, h, c in _pick(act_cases, config):
        lhs = normalize_kernel(kernel_act(fp, fq, h, c))
        rhs = normalize_kernel(kernel_act(fp, fq, h, normalize_kernel(c)))
        _eq_record(act, "kernel_act", lambda: f"fp={fp} fq={fq} h={h} class={c}", rhs, lhs)

    trunc = CheckResult("kernel.truncation_stability")
    for p, q, r in product(range(e + 1), repeat=3):
        rep = truncation_stability(p, q, r, r + 2)
        trunc.record(rep.ok, operation="truncation_stability", inputs=lambda: f"p={p} q={q} r={r} B={r + 2}",
                     expected=lambda: str(rep.expected),
                     actual=lambda: f"{rep.count_at_bound},{rep.count_at_next}")

    day = CheckResult("kernel.day_level")
    agree = CheckResult("kernel.theta_agreement")
    for p, q, r in product(range(e + 1), repeat=3):
        level = day_level(p, q, r)
        day.record(
            len(set(level)) == len(level) == count_maps(r, p) * count_maps(r, q)
            and all(normalize_day(x) == x for x in level),
            operation="day_level", inputs=lambda: f"p={p} q={q} r={r}",
            expected=lambda: str(count_maps(r, p) * count_maps(r, q)), actual=lambda: str(len(set(level))),
        )
        for x in day_representatives(p, q, r, e):
            f, g = day_to_pair(x)
            _eq_record(agree, "theta", str(x), hadamard(f, g), theta(x))

    well = CheckResult("kernel.theta_well_defined")
    bound = 2 if config.deep else 1
    day_cases = [
        case
        for p, q, r in product(range(e + 1), repeat=3)
        for case in day_relation_pairs(p, q, r, min(bound, d))
    ]
    for kind, lhs, rhs in _pick(day_cases, config):
        ok = theta(lhs) == theta(rhs) and normalize_day(lhs) == normalize_day(rhs)
        well.record(ok, operation=f"theta[{kind}]", inputs=lambda: f"{lhs} ~ {rhs}",
                    expected=lambda: str(theta(rhs)), actual=lambda: str(theta(lhs)))
    return [bij, units, rel, norm, dinv, nat, act, trunc, day, agree, well]


def coherence_checks(config: SuiteConfig) -> list[CheckResult]:
    b = config.coherence_bound
    rng = range(b + 1)
    pent = CheckResult("coherence.pentagon")
    for p, q, r, s, w in product(rng, repeat=5):
        pent.merge(coh.pentagon_check(p, q, r, s, w))
    tri = CheckResult("coherence.triangle")
    for p, q, w in product(rng, repeat=3):
        tri.merge(coh.triangle_check(p, q, w))
    hexa = CheckResult("coherence.hexagon")
    for p, q, r, w in product(rng, repeat=4):
        hexa.merge(coh.hexagon_check(p, q, r, w))
    uni = CheckResult("coherence.unitor_symmetry")
    for q, w in product(rng, repeat=2):
        uni.merge(coh.unitor_symmetry_check(q, w))
    sym = CheckResult("coherence.symmetry")
    for p, q, r in product(range(config.small + 1), repeat=3):
        sym.merge(coh.symmetry_involution_check(p, q, r))

    bij = CheckResult("coherence.bijections")
    for p, q, r2, w in product(rng, repeat=4):
        rep = coh.associator_instance(p, q, r2, w)
        bij.record(rep.ok, operation="associator_instance", inputs=rep.name,
                   expected=lambda: str(rep.expected_size), actual=lambda: f"{rep.left_size}->{rep.right_size}")
    for q, w in product(rng, repeat=2):
        rep = coh.unitor_instance(q, w)
        bij.record(rep.ok, operation="unitor_instance", inputs=rep.name,
                   expected=lambda: str(rep.expected_size), actual=lambda: f"{rep.left_size}->{rep.right_size}")
    for r in range(config.max_dim + 1):
        bij.record(coh.unit_is_terminal(r), operation="unit_is_terminal", inputs=lambda: f"r={r}")
    return [pent, tri, hexa, uni, sym, bij]


def hadamard_checks(config: SuiteConfig) -> list[CheckResult]:
    d, e = config.max_dim, config.small
    closure = CheckResult("hadamard.monotone_closure")
    comm = CheckResult("hadamard.commutativity")
    unit = CheckResult("hadamard.unit")
    for m, p, q in product(range(d + 1), repeat=3):
        for alpha in enumerate_maps(m, p):
            for beta in enumerate_maps(m, q):
                h = hadamard(alpha, beta)
                vals = h.values
                closure.record(
                    h.target == p * q and all(a <= b for a, b in zip(vals, vals[1:]))
                    and all(0 <= v <= p * q for v in vals),
                    operation="hadamard", inputs=lambda: f"alpha={alpha} beta={beta}", actual=lambda: str(h),
                )
                _eq_record(comm, "hadamard", lambda: f"alpha={alpha} beta={beta}", vals, hadamard(beta, alpha).values)
        if q == 0:
            for alpha in enumerate_maps(m, p):
                _eq_record(unit, "hadamard", lambda: f"alpha={alpha}", alpha, hadamard(alpha, constant_map(m, 1, 1)))

    assoc = CheckResult("hadamard.associativity")
    for m, p, q, r in product(range(e + 1), repeat=4):
        for a in enumerate_maps(m, p):
            for b in enumerate_maps(m, q):
                ab = hadamard(a, b)
                for c in enumerate_maps(m, r):
                    _eq_record(assoc, "hadamard", lambda: f"a={a} b={b} c={c}",
                               hadamard(a, hadamard(b, c)), hadamard(ab, c))

    simp = CheckResult("hadamard.simplicial_map")
    for p, q in product(range(e + 1), repeat=2):
        simp.merge(simplicial_map_check(p, q, d))

    fact = CheckResult("hadamard.factorization")
    witness = make_map(1, 4, [3, 3])
    found = factor_hadamard(witness, 2, 2)
    fact.record(not found and count_maps(1, 2) ** 2 == 36, operation="factor_hadamard",
                inputs="h=3,3 p=2 q=2", expected="[]", actual=lambda: str([(str(a), str(b)) for a, b in found]))
    h = make_map(1, 4, [0, 4])
    fact.record((make_map(1, 2, [0, 2]), make_map(1, 2, [1, 2])) in factor_hadamard(h, 2, 2),
                operation="factor_hadamard", inputs="h=0,4 p=2 q=2")
    for m, n in product(range(d + 1), repeat=2):
        for f in enumerate_maps(m, n):
            fact.record((f, constant_map(m, 1, 1)) in factor_hadamard(f, n, 1),
                        operation="factor_hadamard", inputs=lambda: f"h={f} p={n} q=1")
    return [closure, comm, unit, assoc, simp, fact]


def homotopy_checks(config: SuiteConfig) -> list[CheckResult]:
    d = config.max_dim
    ends = CheckResult("homotopy.endpoints")
    total = CheckResult("homotopy.level_table")
    for n in range(d + 1):
        ends.merge(homotopy_endpoints(n, d))
        for m in range(d + 1):
            level = homotopy_level(n, m)
            ok = len(level.table) == count_maps(m, n) * count_maps(m, 1) and all(
                v.target == n and v == hadamard(a, b) for (a, b), v in level.table.items()
            )
            total.record(ok, operation="homotopy_level", inputs=lambda: f"n={n} m={m}")
    return [ends, total]


def realization_checks(config: SuiteConfig) -> list[CheckResult]:
    d, den = config.max_dim, config.grid_denominator
    two = CheckResult("realization.two_path")
    scons = CheckResult("realization.s_consistency")
    lower = CheckResult("realization.lower_face")
    for m in range(d + 1):
        grid = simplex_grid(m, den)
        betas = enumerate_maps(m, 1)
        for u in grid:
            for beta in betas:
                s = s_coord(beta, u)
                _eq_record(scons, "s_coord", lambda: f"beta={beta} u={u}", realize_map(beta, u)[1], s)
        for n in range(d + 1):
            for alpha in enumerate_maps(m, n):
                for beta in betas:
                    k = step_index(beta)
                    for u in grid:
                        inputs = f"alpha={alpha} beta={beta} u={u}"
                        v = homotopy_point(alpha, beta, u)
                        _eq_record(two, "homotopy_point", inputs, homotopy_point_by_pushforward(alpha, beta, u), v)
                        if k >= 0:
                            p = PrismPoint(u, s_coord(beta, u))
                            ok = k in cover_index(p)
                            if ok:
                                ok = affine_image(alpha, cell_decompose(m, k, p)) == v
                            lower.record(ok, operation="affine_image", inputs=inputs, expected=lambda: str(v))

    cover = CheckResult("realization.cover_and_decompose")
    verts = CheckResult("realization.triangulation_vertices")
    glue = CheckResult("realization.gluing")
    overlap = CheckResult("realization.overlap_consistency")
    agree = CheckResult("realization.contraction_agreement")
    for m in range(d + 1):
        for p in prism_grid(m, den):
            ks = cover_index(p)
            ok = bool(ks) and all(cell_decompose(m, k, p).reconstruct() == p for k in ks)
            cover.record(ok, operation="cell_decompose", inputs=lambda: str(p), actual=lambda: str(sorted(ks)))
        tri = prism_triangulation(m)
        for k, (alpha_k, beta_k) in enumerate(tri):
            _eq_record(verts, "prism_triangulation", lambda: f"m={m} k={k}", PrismCell(m, k).vertices,
                       [(alpha_k(i), beta_k(i)) for i in range(m + 2)])
        wgrid = simplex_grid(m + 1, den)
        for n in range(d + 1):
            for alpha in enumerate_maps(m, n):
                for k, (alpha_k, beta_k) in enumerate(tri):
                    for w in wgrid:
                        lhs = homotopy_point(compose(alpha, alpha_k), beta_k, w)
                        pt = PrismPoint(realize_map(alpha_k, w), s_coord(beta_k, w))
                        rhs = affine_image(alpha, cell_decompose(m, k, pt))
                        _eq_record(glue, "gluing", lambda: f"alpha={alpha} k={k} w={w}", rhs, lhs)
                overlap.merge(overlap_consistency(m, alpha, den))
                rep = compare_on_grid(n, m, alpha, den)
                agree.record(rep.vertex_agreement and rep.slice_agreement,
                             operation="compare_on_grid", inputs=lambda: f"alpha={alpha} D={den}")
    return [two, scons, lower, cover, verts, glue, overlap, agree]


SUITE_CHECKS = {
    "core": core_checks,
    "kernel": kernel_checks,
    "coherence": coherence_checks,
    "hadamard": hadamard_checks,
    "homotopy": homotopy_checks,
    "realization": realization_checks,
}


def run_suite(config: SuiteConfig) -> SuiteReport:
    names = SUITES if config.suite == "all" else (config.suite,)
    checks = [c for name in names for c in SUITE_CHECKS[name](config)]
    return SuiteReport.from_checks(config.suite, config.as_dict(), checks, config.counterexample_limit)


def probe_note() -> str:
    return (
        "measurement only: the cellwise-affine homotopy and the straight-line contraction "
        "agree at every cell vertex and on the t=0 and t=1 slices; a nonzero deviation means "
        "they differ inside the cells, so reading the straight-line map as equal to the "
        "realized homotopy on whole cells remains an open interpretation question"
    )
