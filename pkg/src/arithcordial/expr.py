"""Graph expressions such as ``join(empty:7, kayak:3,0,3)``.

Grammar (whitespace is ignored between tokens)::

    expr := atom | op "(" expr "," expr ")"
    op   := "join" | "corona" | "tensor"
    atom := "path:" n | "cycle:" n | "star:" n | "complete:" n | "empty:" n
          | "ladder:" n | "kayak:" n "," m "," k | "snake:" n "," m
          | "file:" path

A file path runs up to the next ``,`` or ``)``.
"""

from dataclasses import dataclass

from . import graphs as gr
from .errors import ParseError

ARITY = {
    "path": 1,
    "cycle": 1,
    "star": 1,
    "complete": 1,
    "empty": 1,
    "ladder": 1,
    "kayak": 3,
    "snake": 2,
}
BUILDERS = {
    "path": gr.path,
    "cycle": gr.cycle,
    "star": gr.star,
    "complete": gr.complete,
    "empty": gr.empty,
    "ladder": gr.ladder,
    "kayak": gr.kayak_paddle,
    "snake": gr.snake,
}
OPS = {"join": gr.join, "corona": gr.corona, "tensor": gr.tensor}


@dataclass(frozen=True)
class Atom:
    name: str
    args: tuple

    def __str__(self):
        return f"{self.name}:" + ",".join(str(a) for a in self.args)

    def evaluate(self):
        if self.name == "file":
            return gr.load(self.args[0])
        return BUILDERS[self.name](*self.args)


@dataclass(frozen=True)
class Op:
    name: str
    left: object
    right: object

    def __str__(self):
        return f"{self.name}({self.left},{self.right})"

    def evaluate(self):
        return OPS[self.name](self.left.evaluate(), self.right.evaluate())


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"unexpected {found!r}", self.pos, (repr(ch),))
        self.pos += 1

    def word(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start : self.pos], start

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise ParseError(f"unexpected {found!r}", self.pos, ("integer",))
        return int(self.text[start : self.pos])

    def expr(self):
        name, start = self.word()
        if name in OPS:
            self.expect("(")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            return Op(name, left, right)
        if name in ARITY:
            self.expect(":")
            args = [self.integer()]
            for _ in range(ARITY[name] - 1):
                self.expect(",")
                args.append(self.integer())
            return Atom(name, tuple(args))
        if name == "file":
            self.expect(":")
            self.skip()
            begin = self.pos
            while self.pos < len(self.text) and self.text[self.pos] not in ",)":
                self.pos += 1
            target = self.text[begin : self.pos].strip()
            if not target:
                raise ParseError("empty file path", begin, ("path",))
            return Atom("file", (target,))
        expected = sorted(OPS) + sorted(ARITY) + ["file"]
        raise ParseError(f"unknown graph constructor {name!r}", start, expected)


def parse_graph_expr(text):
    p = _Parser(text)
    tree = p.expr()
    if p.peek():
        raise ParseError(f"trailing input {text[p.pos:]!r}", p.pos, ("end of input",))
    return tree


def graph_from_expr(text):
    return parse_graph_expr(text).evaluate()
