"""Pointwise products of monotone maps and the contraction of a simplex.

``hadamard(a, b)`` multiplies two maps out of a common ``[m]`` value by
value, landing in ``[p*q]``.  With ``q = 1`` it gives the homotopy
``H^n : D^n x D^1 -> D^n`` whose end at the constant-1 map is the identity
and whose end at the constant-0 map is the 0-vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import SourceMismatch, SourceTargetMismatch, TargetMismatch
from .reports import CheckResult
from .simplex import (
    MonotoneMap,
    check_ordinal,
    compose,
    constant_map,
    enumerate_maps,
)


def hadamard(alpha: MonotoneMap, beta: MonotoneMap) -> MonotoneMap:
    if alpha.source != beta.source:
        raise SourceMismatch(
            f"hadamard needs a common source, got [{alpha.source}] and [{beta.source}]"
        )
    return MonotoneMap(
        alpha.source,
        alpha.target * beta.target,
        tuple(a * b for a, b in zip(alpha.values, beta.values)),
    )


def hadamard_source_naturality(alpha: MonotoneMap, beta: MonotoneMap, theta: MonotoneMap) -> bool:
    """Check ``(a*b) . theta == (a . theta) * (b . theta)``."""
    if alpha.source != beta.source:
        raise SourceMismatch("alpha and beta must share a source")
    if theta.target != alpha.source:
        raise SourceTargetMismatch(
            f"theta lands in [{theta.target}], maps start at [{alpha.source}]"
        )
    return compose(hadamard(alpha, beta), theta) == hadamard(
        compose(alpha, theta), compose(beta, theta)
    )


def simplicial_map_check(p: int, q: int, bound: int) -> CheckResult:
    """Check that H_{p,q} commutes with every ``theta: [k] -> [m]``, ``k, m <= bound``."""
    result = CheckResult(f"hadamard.simplicial_map[p={p},q={q}]")
    for m in range(bound + 1):
        pairs = list(product(enumerate_maps(m, p), enumerate_maps(m, q)))
        for k in range(bound + 1):
            for theta in enumerate_maps(k, m):
                for alpha, beta in pairs:
                    lhs = hadamard(compose(alpha, theta), compose(beta, theta))
                    rhs = compose(hadamard(alpha, beta), theta)
                    result.record(
                        lhs == rhs,
                        operation="hadamard_source_naturality",
                        inputs=lambda: f"alpha={alpha} beta={beta} theta={theta}",
                        expected=lambda: str(rhs),
                        actual=lambda: str(lhs),
                    )
    return result


@dataclass
class HomotopyLevel:
    """The level-``m`` component of ``H^n`` as an explicit table."""

    n: int
    m: int
    table: dict = field(default_factory=dict)

    def __call__(self, alpha: MonotoneMap, beta: MonotoneMap) -> MonotoneMap:
        return self.table[alpha, beta]


def homotopy(alpha: MonotoneMap, beta: MonotoneMap) -> MonotoneMap:
    """``H^n_[m](alpha, beta)`` for ``beta`` into ``[1]``."""
    if beta.target != 1:
        raise TargetMismatch(f"the interval factor must land in [1], got [{beta.target}]")
    return hadamard(alpha, beta)


def homotopy_level(n: int, m: int) -> HomotopyLevel:
    level = HomotopyLevel(check_ordinal(n), check_ordinal(m))
    for alpha in enumerate_maps(m, n):
        for beta in enumerate_maps(m, 1):
            level.table[alpha, beta] = homotopy(alpha, beta)
    return level


def homotopy_endpoints(n: int, bound: int) -> CheckResult:
    """Both end conditions of ``H^n`` for every ``alpha: [m] -> [n]``, ``m <= bound``.

    Each ``alpha`` contributes two instances: the 1-end must return ``alpha``
    and the 0-end the constant map at vertex 0.
    """
    result = CheckResult(f"homotopy.endpoints[n={n}]")
    for m in range(bound + 1):
        zero = constant_map(m, n, 0)
        for alpha in enumerate_maps(m, n):
            for eps, expected in ((1, alpha), (0, zero)):
                actual = homotopy(alpha, constant_map(m, 1, eps))
                result.record(
                    actual == expected,
                    operation="homotopy_endpoint",
                    inputs=lambda: f"alpha={alpha} eps={eps}",
                    expected=lambda: str(expected),
                    actual=lambda: str(actual),
                )
    return result


def factor_hadamard(h: MonotoneMap, p: int, q: int) -> list[tuple[MonotoneMap, MonotoneMap]]:
    """Every ``(alpha, beta)`` with ``hadamard(alpha, beta) == h``, by exhaustive search."""
    check_ordinal(p)
    check_ordinal(q)
    if h.target != p * q:
        raise TargetMismatch(f"h lands in [{h.target}], expected [{p * q}]")
    return [
        (alpha, beta)
        for alpha in enumerate_maps(h.source, p)
        for beta in enumerate_maps(h.source, q)
        if all(a * b == v for a, b, v in zip(alpha.values, beta.values, h.values))
    ]
