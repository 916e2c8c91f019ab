"""Associator, unitors and symmetry of the kernel, checked on instances.

An element of an iterated coend such as ``int^x P(p,q;x) x P(x,r;w)`` is a
binary tree: internal nodes carry a :class:`KernelClass`, leaves are
ordinals, and unit leaves stand for the singleton ``J(x)``.  The tree
``Node(c, L, R)`` lives over ``c.r`` and requires ``c.p == obj(L)``,
``c.q == obj(R)``.  A :class:`Bracketed` element pairs a tree with a map
``[w] -> [obj(tree)]``.

Flattening pushes maps down the tree through ``eta`` and yields nested
tuples of maps out of ``[w]``; two elements are the same class iff their
flattenings agree.  The structure isomorphisms rewrite trees locally and
are compared after flattening.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Union

from .errors import DeltaError
from .promonoidal import (
    KernelClass,
    canonical_classes,
    eta,
    eta_inverse,
    kernel_act,
    symmetry_instance,
)
from .reports import CheckResult
from .simplex import MonotoneMap, compose, count_maps, enumerate_maps, identity, terminal_map


@dataclass(frozen=True)
class Leaf:
    obj: int


@dataclass(frozen=True)
class UnitLeaf:
    obj: int


@dataclass(frozen=True)
class Node:
    kernel: KernelClass
    left: "Tree"
    right: "Tree"

    def __post_init__(self):
        if self.kernel.p != self.left.obj or self.kernel.q != self.right.obj:
            raise DeltaError(
                f"kernel over [{self.kernel.p}],[{self.kernel.q}] does not match "
                f"children over [{self.left.obj}],[{self.right.obj}]"
            )

    @property
    def obj(self) -> int:
        return self.kernel.r


Tree = Union[Leaf, UnitLeaf, Node]

UNIT = "*"


@dataclass(frozen=True)
class Bracketed:
    tree: Tree
    into: MonotoneMap

    def __post_init__(self):
        if self.into.target != self.tree.obj:
            raise DeltaError(f"map lands in [{self.into.target}], tree lives over [{self.tree.obj}]")

    @property
    def w(self) -> int:
        return self.into.source


def flatten_tree(tree: Tree, into: MonotoneMap):
    if isinstance(tree, Leaf):
        return into
    if isinstance(tree, UnitLeaf):
        return UNIT
    a, b = eta(tree.kernel)
    return (flatten_tree(tree.left, compose(a, into)), flatten_tree(tree.right, compose(b, into)))


def flatten(e: Bracketed):
    """Nested tuple of maps out of ``[w]`` (``'*'`` for unit slots)."""
    return flatten_tree(e.tree, e.into)


def shape_of(tree: Tree):
    if isinstance(tree, Leaf):
        return tree.obj
    if isinstance(tree, UnitLeaf):
        return UNIT
    return (shape_of(tree.left), shape_of(tree.right))


def build_canonical(shape, maps, w: int) -> Bracketed:
    """Canonical element of a bracketing from leaf maps out of ``[w]``.

    ``shape`` is a nested pair structure whose leaves are ordinals or
    ``'*'``; ``maps`` lists one map per ordinal leaf, left to right.
    """
    it = iter(maps)

    def build(s) -> tuple[Tree, MonotoneMap]:
        if s == UNIT:
            return UnitLeaf(w), identity(w)
        if isinstance(s, int):
            f = next(it)
            if f.target != s or f.source != w:
                raise DeltaError(f"leaf map {f!r} does not fit [{w}] -> [{s}]")
            return Leaf(s), f
        lt, lf = build(s[0])
        rt, rf = build(s[1])
        return Node(eta_inverse(lf, rf), lt, rt), identity(w)

    tree, into = build(shape)
    return Bracketed(tree, into)


def leaf_objects(shape) -> list[int]:
    if shape == UNIT:
        return []
    if isinstance(shape, int):
        return [shape]
    return leaf_objects(shape[0]) + leaf_objects(shape[1])


def canonical_elements(shape, w: int):
    objs = leaf_objects(shape)
    for maps in product(*(enumerate_maps(w, o) for o in objs)):
        yield build_canonical(shape, maps, w)


# ---------------------------------------------------------------------------
# local rewrites: each returns (new_tree, adjust) with adjust: [obj old] -> [obj new]


def _assoc(t: Tree):
    """``(A B) C -> A (B C)``."""
    if not (isinstance(t, Node) and isinstance(t.left, Node)):
        raise DeltaError("associator needs a left-nested node")
    inner, outer = t.left, t.kernel
    a, b = eta(inner.kernel)
    f, h = eta(outer)
    v = t.obj
    new_inner = Node(eta_inverse(compose(b, f), h), inner.right, t.right)
    new_outer = Node(eta_inverse(compose(a, f), identity(v)), inner.left, new_inner)
    return new_outer, identity(v)


def _assoc_inv(t: Tree):
    """``A (B C) -> (A B) C``."""
    if not (isinstance(t, Node) and isinstance(t.right, Node)):
        raise DeltaError("inverse associator needs a right-nested node")
    inner, outer = t.right, t.kernel
    b, c = eta(inner.kernel)
    f, g = eta(outer)
    v = t.obj
    new_inner = Node(eta_inverse(f, compose(b, g)), t.left, inner.left)
    new_outer = Node(eta_inverse(identity(v), compose(c, g)), new_inner, inner.right)
    return new_outer, identity(v)


def _left_unitor(t: Tree):
    """``J B -> B``."""
    if not (isinstance(t, Node) and isinstance(t.left, UnitLeaf)):
        raise DeltaError("left unitor needs a unit on the left")
    _, b = eta(t.kernel)
    return t.right, b


def _right_unitor(t: Tree):
    """``A J -> A``."""
    if not (isinstance(t, Node) and isinstance(t.right, UnitLeaf)):
        raise DeltaError("right unitor needs a unit on the right")
    a, _ = eta(t.kernel)
    return t.left, a


def _symmetry(t: Tree):
    if not isinstance(t, Node):
        raise DeltaError("symmetry needs a node")
    return Node(symmetry_instance(t.kernel), t.right, t.left), identity(t.obj)


REWRITES: dict[str, Callable] = {
    "assoc": _assoc,
    "assoc_inv": _assoc_inv,
    "lambda": _left_unitor,
    "rho": _right_unitor,
    "sigma": _symmetry,
}


def _rewrite_tree(t: Tree, path: str, op: Callable):
    if not path:
        return op(t)
    if not isinstance(t, Node):
        raise DeltaError(f"path {path!r} runs past a leaf")
    side, rest = path[0], path[1:]
    c = t.kernel
    if side == "L":
        new_child, adjust = _rewrite_tree(t.left, rest, op)
        kernel = kernel_act(adjust, identity(c.q), identity(c.r), c)
        return Node(kernel, new_child, t.right), identity(t.obj)
    if side == "R":
        new_child, adjust = _rewrite_tree(t.right, rest, op)
        kernel = kernel_act(identity(c.p), adjust, identity(c.r), c)
        return Node(kernel, t.left, new_child), identity(t.obj)
    raise DeltaError(f"bad path step {side!r}")


def apply_at(e: Bracketed, op: str, path: str = "") -> Bracketed:
    """Apply a structure isomorphism at the subtree reached by ``path`` ('L'/'R' steps)."""
    tree, adjust = _rewrite_tree(e.tree, path, REWRITES[op])
    return Bracketed(tree, compose(adjust, e.into))


def apply_all(e: Bracketed, steps) -> Bracketed:
    for op, path in steps:
        e = apply_at(e, op, path)
    return e


# ---------------------------------------------------------------------------
# coherence diagrams

PENTAGON = (
    [("assoc", ""), ("assoc", "")],
    [("assoc", "L"), ("assoc", ""), ("assoc", "R")],
)
TRIANGLE = (
    [("assoc", ""), ("lambda", "R")],
    [("rho", "L")],
)
HEXAGON = (
    [("assoc", ""), ("sigma", ""), ("assoc", "")],
    [("sigma", "L"), ("assoc", ""), ("sigma", "R")],
)
HEXAGON_INV = (
    [("assoc_inv", ""), ("sigma", ""), ("assoc_inv", "")],
    [("sigma", "R"), ("assoc_inv", ""), ("sigma", "L")],
)


def _diagram_check(name: str, shape, w: int, paths, expected: Callable | None = None) -> CheckResult:
    result = CheckResult(name)
    first, second = paths
    for e in canonical_elements(shape, w):
        a = flatten(apply_all(e, first))
        b = flatten(apply_all(e, second))
        ok = a == b
        if ok and expected is not None:
            ok = a == expected(flatten(e))
        result.record(ok, operation=name, inputs=lambda: f"w={w} element={_fmt(flatten(e))}",
                      expected=lambda: _fmt(b), actual=lambda: _fmt(a))
    return result


def _fmt(x) -> str:
    if isinstance(x, tuple):
        return "(" + " ".join(_fmt(y) for y in x) + ")"
    return str(x)


def pentagon_check(p: int, q: int, r: int, s: int, w: int) -> CheckResult:
    return _diagram_check(
        "coherence.pentagon", (((p, q), r), s), w, PENTAGON,
        expected=lambda t: (t[0][0][0], (t[0][0][1], (t[0][1], t[1]))),
    )


def triangle_check(p: int, q: int, w: int) -> CheckResult:
    return _diagram_check(
        "coherence.triangle", ((p, UNIT), q), w, TRIANGLE,
        expected=lambda t: (t[0][0], t[1]),
    )


def hexagon_check(p: int, q: int, r: int, w: int) -> CheckResult:
    res = _diagram_check(
        "coherence.hexagon", ((p, q), r), w, HEXAGON,
        expected=lambda t: (t[0][1], (t[1], t[0][0])),
    )
    return res.merge(_diagram_check(
        "coherence.hexagon", (p, (q, r)), w, HEXAGON_INV,
        expected=lambda t: ((t[1][1], t[0]), t[1][0]),
    ))


def unitor_symmetry_check(q: int, w: int) -> CheckResult:
    """``lambda == rho . sigma`` elementwise on ``J (x) D^q`` at level ``w``."""
    return _diagram_check(
        "coherence.unitor_symmetry", (UNIT, q), w,
        ([("lambda", "")], [("sigma", ""), ("rho", "")]),
        expected=lambda t: t[1],
    )


def symmetry_involution_check(p: int, q: int, r: int) -> CheckResult:
    result = CheckResult("coherence.symmetry")
    for c in canonical_classes(p, q, r):
        twice = symmetry_instance(symmetry_instance(c))
        f, g = eta(c)
        ok = twice == c and eta(symmetry_instance(c)) == (g, f)
        result.record(ok, operation="symmetry_instance", inputs=lambda: str(c),
                      expected=lambda: str(c), actual=lambda: str(twice))
    return result


# ---------------------------------------------------------------------------
# bijection reports


@dataclass
class BijectionReport:
    name: str
    left_size: int
    right_size: int
    expected_size: int
    well_defined: bool
    injective: bool

    @property
    def ok(self) -> bool:
        return (
            self.well_defined
            and self.injective
            and self.left_size == self.right_size == self.expected_size
        )


def associator_instance(p: int, q: int, r2: int, w: int, level_bound: int | None = None) -> BijectionReport:
    """Re-bracketing ``int^x P(p,q;x) x P(x,r2;w) -> int^y P(q,r2;y) x P(p,y;w)``.

    Left representatives are swept over every intermediate ``x <= level_bound``
    (default ``w + 1``), so the map is exercised on non-canonical
    representatives too; it must be constant on each class and injective
    on classes.
    """
    if level_bound is None:
        level_bound = w + 1
    image: dict = {}
    well_defined = True
    right_seen = set()
    for x in range(level_bound + 1):
        for inner in canonical_classes(p, q, x):
            for outer in canonical_classes(x, r2, w):
                e = Bracketed(Node(outer, Node(inner, Leaf(p), Leaf(q)), Leaf(r2)), identity(w))
                key = flatten(e)
                out = apply_at(e, "assoc")
                val = flatten(out)
                if image.setdefault(key, val) != val:
                    well_defined = False
                right_seen.add(val)
    expected = count_maps(w, p) * count_maps(w, q) * count_maps(w, r2)
    return BijectionReport(
        f"associator[{p},{q},{r2};{w}]",
        len(image), len(right_seen), expected, well_defined,
        injective=len(set(image.values())) == len(image),
    )


def unitor_instance(q: int, w: int, level_bound: int | None = None) -> BijectionReport:
    """``int^x J(x) x P(x,q;w) -> D(w,q)`` via the left unitor."""
    if level_bound is None:
        level_bound = w + 1
    image: dict = {}
    well_defined = True
    for x in range(level_bound + 1):
        for c in canonical_classes(x, q, w):
            e = Bracketed(Node(c, UnitLeaf(x), Leaf(q)), identity(w))
            key = flatten(e)
            val = flatten(apply_at(e, "lambda"))
            if image.setdefault(key, val) != val:
                well_defined = False
    targets = set(enumerate_maps(w, q))
    return BijectionReport(
        f"unitor[{q};{w}]",
        len(image), len(set(image.values()) & targets), count_maps(w, q), well_defined,
        injective=len(set(image.values())) == len(image),
    )


def unit_is_terminal(r: int) -> bool:
    """``J([r])`` has exactly one element."""
    return enumerate_maps(r, 0) == (terminal_map(r),)
