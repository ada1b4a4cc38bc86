"""Text formats for every object kind.

=========  ==============================================  =====================
kind       grammar                                         example
=========  ==============================================  =====================
tree       ``T := "." | "(" T T ")"``                      ``(.(..))``
dyck       nonempty word over ``U``, ``D``                 ``UUDD``
poset      ``n ":" [a "->" b {"," a "->" b}]``             ``4: 2->1, 3->1, 3->4``
forest     ``F := T+``, ``T := "(" T* ")"``                ``(())()``
flow       ``FT := "(" int FT* ")"``, forest = ``FT+``     ``(-1 (1))``
tree-pair  two trees, optionally comma separated           ``(.(..)) ((..).)``
=========  ==============================================  =====================

Whitespace is ignored everywhere except inside integers.
"""

from __future__ import annotations

import re

from .catalan import (
    BinaryTree,
    DyckPath,
    MalformedPath,
    PlanarForest,
    Tree,
    render_forest,
    render_tree,
)
from .flows import Flow, FlowError, validate_flow
from .interval_poset import IntervalPoset, IntervalPosetError, validate

KINDS = ("tree", "dyck", "poset", "forest", "flow", "tree-pair")


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line, self.column = line, col
        super().__init__(f"line {line}, column {col}: {message}")


class ValidationError(ValueError):
    """A well-formed text describing an invalid object."""


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str) -> None:
        self.skip()
        if not self.text.startswith(token, self.pos):
            self.fail(f"expected {token!r}")
        self.pos += len(token)

    def integer(self) -> int:
        self.skip()
        m = re.compile(r"-?\d+").match(self.text, self.pos)
        if not m:
            self.fail("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def finish(self) -> None:
        if not self.at_end():
            self.fail("unexpected trailing input")

    def fail(self, message: str):
        raise ParseError(message, self.text, self.pos)


def _tree(r: _Reader) -> Tree:
    c = r.peek()
    if c == ".":
        r.pos += 1
        return None
    if c != "(":
        r.fail("expected '.' or '('")
    r.pos += 1
    left = _tree(r)
    right = _tree(r)
    r.expect(")")
    return BinaryTree(left, right)


def _forest_node(r: _Reader, with_inputs: bool, inputs: list[int]) -> tuple:
    r.expect("(")
    if with_inputs:
        inputs.append(r.integer())
    kids = []
    while r.peek() == "(":
        kids.append(_forest_node(r, with_inputs, inputs))
    r.expect(")")
    return tuple(kids)


def _forest(r: _Reader, with_inputs: bool) -> tuple[PlanarForest, list[int]]:
    inputs: list[int] = []
    trees = [_forest_node(r, with_inputs, inputs)]
    while r.peek() == "(":
        trees.append(_forest_node(r, with_inputs, inputs))
    return PlanarForest(tuple(trees)), inputs


def parse_tree(text: str) -> Tree:
    r = _Reader(text)
    t = _tree(r)
    r.finish()
    return t


def parse_tree_pair(text: str) -> tuple[Tree, Tree]:
    r = _Reader(text)
    t1 = _tree(r)
    if r.peek() == ",":
        r.pos += 1
    t2 = _tree(r)
    r.finish()
    return t1, t2


def parse_dyck(text: str) -> DyckPath:
    word = "".join(text.split())
    if not word:
        raise ParseError("empty Dyck path", text, 0)
    bad = re.search(r"[^UD\s]", text)
    if bad:
        raise ParseError(f"unexpected {bad.group()!r}", text, bad.start())
    try:
        return DyckPath(word)
    except MalformedPath as exc:
        raise ValidationError(str(exc)) from exc


def parse_poset(text: str) -> IntervalPoset:
    r = _Reader(text)
    n = r.integer()
    if n < 0:
        r.fail("size must be nonnegative")
    r.expect(":")
    pairs = []
    if not r.at_end():
        while True:
            a = r.integer()
            r.expect("->")
            b = r.integer()
            pairs.append((a, b))
            if r.at_end():
                break
            r.expect(",")
    try:
        return validate(n, pairs)
    except IntervalPosetError as exc:
        raise ValidationError(str(exc)) from exc


def parse_forest(text: str) -> PlanarForest:
    r = _Reader(text)
    forest, _ = _forest(r, with_inputs=False)
    r.finish()
    return forest


def parse_flow(text: str) -> Flow:
    r = _Reader(text)
    forest, inputs = _forest(r, with_inputs=True)
    r.finish()
    try:
        return validate_flow(forest, inputs)
    except FlowError as exc:
        raise ValidationError(str(exc)) from exc


_PARSERS = {
    "tree": parse_tree,
    "dyck": parse_dyck,
    "poset": parse_poset,
    "forest": parse_forest,
    "flow": parse_flow,
    "tree-pair": parse_tree_pair,
}


def parse_object(kind: str, text: str):
    try:
        parser = _PARSERS[kind]
    except KeyError:
        raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}") from None
    return parser(text)


# -- rendering ------------------------------------------------------------------


def render_poset(i: IntervalPoset) -> str:
    pairs = ", ".join(f"{a}->{b}" for a, b in i.covers())
    return f"{i.n}:" + (f" {pairs}" if pairs else "")


def render_flow(f: Flow) -> str:
    inputs = iter(f.inputs)

    def node(n) -> str:
        inner = [str(next(inputs))] + [node(c) for c in n]
        return "(" + " ".join(inner) + ")"

    return " ".join(node(t) for t in f.forest.trees)


def render_object(value) -> str:
    if value is None or isinstance(value, BinaryTree):
        return render_tree(value)
    if isinstance(value, DyckPath):
        return value.steps
    if isinstance(value, IntervalPoset):
        return render_poset(value)
    if isinstance(value, PlanarForest):
        return render_forest(value)
    if isinstance(value, Flow):
        return render_flow(value)
    if isinstance(value, tuple) and len(value) == 2:
        return f"{render_tree(value[0])} {render_tree(value[1])}"
    raise TypeError(f"cannot render {type(value).__name__}")


# -- DOT ------------------------------------------------------------------------


def render_dot(value: IntervalPoset | Flow) -> str:
    """Graphviz digraph.  Posets: increasing covers blue, decreasing covers red,
    edges point from the smaller element of ``⊲`` to the larger.  Flows: nodes
    labeled ``label:input``, edges child to parent annotated with the rate."""
    lines = ["digraph {"]
    if isinstance(value, IntervalPoset):
        lines.append('  node [shape=plaintext];')
        lines += [f'  {v} [label="{v}"];' for v in range(1, value.n + 1)]
        lines += [f"  {a} -> {b} [color=red];" for a, b in value.dec_covers()]
        lines += [f"  {a} -> {b} [color=blue];" for a, b in value.inc_covers()]
    elif isinstance(value, Flow):
        lines.append("  node [shape=circle];")
        lines += [f'  {v} [label="{v}:{x}"];' for v, x in enumerate(value.inputs, 1)]
        for v, p in value.parents.items():
            rate = value.rates[v - 1]
            if p is None:
                lines.append(f'  out{v} [shape=point];')
                lines.append(f'  {v} -> out{v} [label="{rate}"];')
            else:
                lines.append(f'  {v} -> {p} [label="{rate}"];')
    else:
        raise TypeError(f"cannot render {type(value).__name__} as DOT")
    lines.append("}")
    return "\n".join(lines) + "\n"
