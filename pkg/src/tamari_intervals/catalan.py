"""Binary trees, Dyck paths, planar forests and the rotation order on trees.

Trees are unlabeled; the label of a node is its position in an in-order
traversal (the unique binary-search-tree labeling), counted from 1.

Planar forests are ordered forests of ordered trees.  A forest can be labeled
in two ways, both giving every subtree a contiguous block of labels:

* preorder (root before children): the final forest of a tree, flows;
* postorder (children before root): the initial forest of a tree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence


class NoLeftChild(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


class MalformedPath(ValueError):
    pass


# ---------------------------------------------------------------------------
# binary trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class BinaryTree:
    """A node with (possibly empty) left and right subtrees.

    The empty tree is ``None`` everywhere in this package.
    """

    left: Optional[BinaryTree] = None
    right: Optional[BinaryTree] = None
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "size", 1 + tree_size(self.left) + tree_size(self.right))

    def __str__(self) -> str:
        return render_tree(self)


Tree = Optional[BinaryTree]


def tree_size(t: Tree) -> int:
    return 0 if t is None else t.size


def render_tree(t: Tree) -> str:
    if t is None:
        return "."
    return f"({render_tree(t.left)}{render_tree(t.right)})"


def left_comb(n: int) -> Tree:
    t = None
    for _ in range(n):
        t = BinaryTree(t, None)
    return t


def right_comb(n: int) -> Tree:
    t = None
    for _ in range(n):
        t = BinaryTree(None, t)
    return t


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Tree, ...]:
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in _trees(k):
            for right in _trees(n - 1 - k):
                out.append(BinaryTree(left, right))
    return tuple(out)


def enumerate_trees(n: int) -> tuple[Tree, ...]:
    """All binary trees with ``n`` nodes, split by left-subtree size, smaller first."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    return _trees(n)


def catalan(n: int) -> int:
    c = 1
    for k in range(n):
        c = c * 2 * (2 * k + 1) // (k + 2)
    return c


def inorder_nodes(t: Tree, offset: int = 0) -> Iterator[tuple[int, BinaryTree]]:
    """Yield ``(label, node)`` pairs in in-order."""
    if t is None:
        return
    yield from inorder_nodes(t.left, offset)
    label = offset + tree_size(t.left) + 1
    yield label, t
    yield from inorder_nodes(t.right, label)


def right_rotate(t: Tree, pos: int) -> BinaryTree:
    """Rewrite ``y(x(A, B), C)`` into ``x(A, y(B, C))`` at the node labeled ``pos``."""
    if t is None or not 1 <= pos <= t.size:
        raise IndexError(f"no node at position {pos}")
    label = tree_size(t.left) + 1
    if pos < label:
        return BinaryTree(right_rotate(t.left, pos), t.right)
    if pos > label:
        return BinaryTree(t.left, right_rotate(t.right, pos - label))
    x = t.left
    if x is None:
        raise NoLeftChild(f"node {pos} has no left child")
    return BinaryTree(x.left, BinaryTree(x.right, t.right))


# ---------------------------------------------------------------------------
# Dyck paths
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        height = 0
        for i, s in enumerate(self.steps):
            if s == "U":
                height += 1
            elif s == "D":
                height -= 1
            else:
                raise MalformedPath(f"bad step {s!r} at {i}")
            if height < 0:
                raise MalformedPath(f"path goes below zero at step {i}")
        if height != 0:
            raise MalformedPath("path does not return to zero")

    @property
    def size(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps


def tree_from_dyck(d: DyckPath | str) -> Tree:
    """Split ``D = D1 U D2 D`` at the last up step leaving height zero."""
    steps = d.steps if isinstance(d, DyckPath) else DyckPath(d).steps

    def build(lo: int, hi: int) -> Tree:
        if lo == hi:
            return None
        height, last = 0, lo
        for i in range(lo, hi):
            if height == 0:
                last = i
            height += 1 if steps[i] == "U" else -1
        return BinaryTree(build(lo, last), build(last + 1, hi - 1))

    return build(0, len(steps))


def dyck_from_tree(t: Tree) -> DyckPath:
    def word(t: Tree) -> str:
        if t is None:
            return ""
        return word(t.left) + "U" + word(t.right) + "D"

    return DyckPath(word(t))


def contacts(d: DyckPath) -> int:
    """Returns to height zero, the starting point excluded."""
    height, count = 0, 0
    for s in d.steps:
        height += 1 if s == "U" else -1
        if height == 0:
            count += 1
    return count


def initial_rise_path(d: DyckPath) -> int:
    return len(d.steps) - len(d.steps.lstrip("U"))


# ---------------------------------------------------------------------------
# planar forests
# ---------------------------------------------------------------------------

PlanarTree = tuple  # a node is the tuple of its children


def _node_size(node: PlanarTree) -> int:
    return 1 + sum(_node_size(c) for c in node)


@dataclass(frozen=True)
class PlanarForest:
    """Ordered forest; ``trees`` is a tuple of nodes, a node is a tuple of children."""

    trees: tuple = ()

    @property
    def size(self) -> int:
        return sum(_node_size(t) for t in self.trees)

    def parents(self, order: str = "preorder") -> dict[int, Optional[int]]:
        """Parent map (``None`` for roots) under the given labeling."""
        out: dict[int, Optional[int]] = {}
        counter = 0

        def pre(node, parent):
            nonlocal counter
            counter += 1
            me = counter
            out[me] = parent
            for c in node:
                pre(c, me)

        def post(node) -> int:
            nonlocal counter
            kids = [post(c) for c in node]
            counter += 1
            for k in kids:
                out[k] = counter
            out.setdefault(counter, None)
            return counter

        for t in self.trees:
            if order == "preorder":
                pre(t, None)
            elif order == "postorder":
                out[post(t)] = None
            else:
                raise ValueError(f"unknown order {order!r}")
        return dict(sorted(out.items()))

    def children_counts(self) -> list[int]:
        """Number of children of each node, in preorder."""
        counts: list[int] = []

        def walk(node):
            counts.append(len(node))
            for c in node:
                walk(c)

        for t in self.trees:
            walk(t)
        return counts

    def roots(self, order: str = "preorder") -> list[int]:
        return [v for v, p in self.parents(order).items() if p is None]

    @classmethod
    def from_parents(
        cls, n: int, parent: Sequence[Optional[int]] | dict, order: str = "preorder"
    ) -> PlanarForest:
        """Rebuild the forest from a parent map on labels ``1..n``.

        ``parent`` is either a dict or a sequence indexed by ``label - 1``.
        Raises ``ValueError`` when the map is not compatible with ``order``.
        """
        get = parent.get if isinstance(parent, dict) else (lambda v: parent[v - 1])
        children: dict[Optional[int], list[int]] = {None: []}
        for v in range(1, n + 1):
            children.setdefault(v, [])
        for v in range(1, n + 1):
            p = get(v)
            if p is not None and not 1 <= p <= n:
                raise ValueError(f"parent {p} of {v} out of range")
            children[p].append(v)

        def build(v) -> PlanarTree:
            return tuple(build(c) for c in children[v])

        forest = cls(tuple(build(r) for r in children[None]))
        if forest.size != n or forest.parents(order) != {v: get(v) for v in range(1, n + 1)}:
            raise ValueError(f"parent map is not a {order}-labeled forest")
        return forest

    @classmethod
    def from_children_counts(cls, counts: Sequence[int]) -> PlanarForest:
        """Decode a preorder sequence of child counts (Łukasiewicz decoding)."""
        pos = 0

        def take() -> PlanarTree:
            nonlocal pos
            if pos >= len(counts):
                raise ValueError("child-count sequence ends inside a tree")
            k = counts[pos]
            pos += 1
            return tuple(take() for _ in range(k))

        trees = []
        while pos < len(counts):
            trees.append(take())
        return cls(tuple(trees))

    def __str__(self) -> str:
        return render_forest(self)


def render_forest(f: PlanarForest) -> str:
    def node(n) -> str:
        return "(" + "".join(node(c) for c in n) + ")"

    return "".join(node(t) for t in f.trees)


@lru_cache(maxsize=None)
def _forests(n: int) -> tuple[PlanarForest, ...]:
    if n == 0:
        return (PlanarForest(()),)
    out = []
    for k in range(n):  # first tree has k + 1 nodes
        for kids in _forests(k):
            for rest in _forests(n - 1 - k):
                out.append(PlanarForest((kids.trees,) + rest.trees))
    return tuple(out)


def enumerate_forests(n: int) -> tuple[PlanarForest, ...]:
    """All ordered forests with ``n`` nodes."""
    return _forests(n)


def _dec_trees(t: Tree) -> tuple:
    if t is None:
        return ()
    return _dec_trees(t.left) + (_dec_trees(t.right),)


def _inc_trees(t: Tree) -> tuple:
    if t is None:
        return ()
    return (_inc_trees(t.left),) + _inc_trees(t.right)


def dec_forest_of_tree(t: Tree) -> PlanarForest:
    """Final forest: ``b`` is below ``a`` iff ``b`` lies in the right subtree of ``a``.

    Preorder-labeled.
    """
    return PlanarForest(_dec_trees(t))


def inc_forest_of_tree(t: Tree) -> PlanarForest:
    """Initial forest: ``a`` is below ``c`` iff ``a`` lies in the left subtree of ``c``.

    Postorder-labeled.
    """
    return PlanarForest(_inc_trees(t))


def tree_from_dec_forest(f: PlanarForest) -> Tree:
    def build(trees: tuple) -> Tree:
        if not trees:
            return None
        return BinaryTree(build(trees[:-1]), build(trees[-1]))

    return build(f.trees)


def tree_from_inc_forest(f: PlanarForest) -> Tree:
    def build(trees: tuple) -> Tree:
        if not trees:
            return None
        return BinaryTree(build(trees[0]), build(trees[1:]))

    return build(f.trees)


# ---------------------------------------------------------------------------
# rotation-closure oracle
# ---------------------------------------------------------------------------


def _rotations(t: Tree) -> Iterator[BinaryTree]:
    for pos, node in inorder_nodes(t):
        if node.left is not None:
            yield right_rotate(t, pos)


@lru_cache(maxsize=None)
def _upsets(n: int) -> dict[Tree, frozenset]:
    covers = {t: tuple(_rotations(t)) for t in enumerate_trees(n)}
    ups = {}
    for t in covers:
        seen = {t}
        queue = deque([t])
        while queue:
            for s in covers[queue.popleft()]:
                if s not in seen:
                    seen.add(s)
                    queue.append(s)
        ups[t] = frozenset(seen)
    return ups


def tamari_leq_bruteforce(t1: Tree, t2: Tree) -> bool:
    """``t1 <= t2`` iff ``t2`` is reachable from ``t1`` by right rotations."""
    n = tree_size(t1)
    if n != tree_size(t2):
        raise SizeMismatch(f"sizes differ: {n} vs {tree_size(t2)}")
    return t2 in _upsets(n)[t1]
