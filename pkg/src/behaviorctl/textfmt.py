"""Reader and writer for ``.bhv`` model files.

Example::

    # plant of subsystem 1
    behavior P1 {
      vars: w1:2, s12:2, c1:2;
      rows: [xi^2+2, -1, 0, -1, 0, -1],
            [-1, 0, 1, 0, 0, 0],
            [-1, 0, 0, 0, 1, 0];
    }

    network mass_spring {
      subsystems: (1, P1, K1), (2, P2, K2);
      edges: (1, 2, s=2, k=2);
    }

The indeterminate is ``xi``; coefficients are integers or ``p/q``.  An empty
``rows:`` clause is a behavior without equations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .behavior import Behavior, Signature, VarGroup, minimize
from .network import Edge, Network, Subsystem, validate
from .polymat import Poly, PolyMat, format_poly


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        self.msg, self.line, self.col = msg, line, col
        super().__init__(f"line {line}, col {col}: {msg}")


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT, NAT, SYM, EOF
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)|(?P<NAT>[0-9]+)"
    r"|(?P<SYM>[{}:;,\[\]()+\-/^*=])"
)


def tokenize(text: str) -> list[Token]:
    toks = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind in ("IDENT", "NAT", "SYM"):
            toks.append(Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    toks.append(Token("EOF", "", line, pos - line_start + 1))
    return toks


@dataclass
class NetworkDef:
    """Names of the behaviors bound to each subsystem, plus the edges."""

    subsystems: list[tuple[int, str, str]]
    edges: list[Edge]


@dataclass
class ModelFile:
    behaviors: dict[str, Behavior] = field(default_factory=dict)
    networks: dict[str, NetworkDef] = field(default_factory=dict)

    def network(self, name: str) -> Network:
        nd = self.networks[name]
        subs = [
            Subsystem(self.behaviors[p], self.behaviors[k])
            for _, p, k in sorted(nd.subsystems)
        ]
        return Network(subs, nd.edges)


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0
        self.model = ModelFile()

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.col)

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def at(self, text: str) -> bool:
        return self.tok.text == text and self.tok.kind != "EOF"

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            self.error(f"expected {text!r}, found {found!r}")
        return self.advance()

    def ident(self) -> Token:
        if self.tok.kind != "IDENT":
            self.error(f"expected a name, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def nat(self) -> int:
        if self.tok.kind != "NAT":
            self.error(f"expected a non-negative integer, found {self.tok.text or 'end of input'!r}")
        return int(self.advance().text)

    def keyword(self, word: str) -> None:
        self.expect(word)
        self.expect(":")

    # grammar

    def parse(self) -> ModelFile:
        while self.tok.kind != "EOF":
            if self.at("behavior"):
                self.behavior_def()
            elif self.at("network"):
                self.network_def()
            else:
                self.error(f"expected 'behavior' or 'network', found {self.tok.text!r}")
        return self.model

    def behavior_def(self) -> None:
        self.expect("behavior")
        name_tok = self.ident()
        name = name_tok.text
        if name in self.model.behaviors:
            self.error(f"behavior {name!r} defined twice", name_tok)
        self.expect("{")
        self.keyword("vars")
        groups = []
        if not self.at(";"):
            groups.append(self.vargroup())
            while self.at(","):
                self.advance()
                groups.append(self.vargroup())
        self.expect(";")
        seen = set()
        for g, tok in groups:
            if g.name in seen:
                self.error(f"variable group {g.name!r} repeated", tok)
            seen.add(g.name)
        sig = Signature(g for g, _ in groups)
        self.keyword("rows")
        rows = []
        if not self.at(";"):
            rows.append(self.row(sig.total_dim))
            while self.at(","):
                self.advance()
                rows.append(self.row(sig.total_dim))
        self.expect(";")
        self.expect("}")
        self.model.behaviors[name] = Behavior(sig, PolyMat(rows, cols=sig.total_dim))

    def vargroup(self) -> tuple[VarGroup, Token]:
        tok = self.ident()
        self.expect(":")
        return VarGroup(tok.text, self.nat()), tok

    def row(self, width: int) -> list[Poly]:
        start = self.expect("[")
        entries = []
        if not self.at("]"):
            entries.append(self.poly())
            while self.at(","):
                self.advance()
                entries.append(self.poly())
        self.expect("]")
        if len(entries) != width:
            self.error(f"row has {len(entries)} entries but vars need {width}", start)
        return entries

    def poly(self) -> Poly:
        sign = 1
        if self.at("+") or self.at("-"):
            sign = -1 if self.advance().text == "-" else 1
        acc = self.term().scale(sign)
        while self.at("+") or self.at("-"):
            sign = -1 if self.advance().text == "-" else 1
            acc = acc + self.term().scale(sign)
        return acc

    def term(self) -> Poly:
        coeff = None
        if self.tok.kind == "NAT":
            num = int(self.advance().text)
            den = 1
            if self.at("/"):
                self.advance()
                dtok = self.tok
                den = self.nat()
                if den == 0:
                    self.error("zero denominator", dtok)
            coeff = Fraction(num, den)
            if self.at("*"):
                self.advance()
                if not self.at("xi"):
                    self.error("expected 'xi' after '*'")
        if self.tok.kind == "IDENT":
            if self.tok.text != "xi":
                self.error(f"unknown indeterminate {self.tok.text!r}; only 'xi' is allowed")
            self.advance()
            power = 1
            if self.at("^"):
                self.advance()
                if self.at("-"):
                    self.error("negative exponents are not allowed")
                power = self.nat()
            if self.tok.kind == "IDENT" or self.at("*"):
                self.error("multivariate or repeated terms are not allowed")
            return Poly([0] * power + [1]).scale(1 if coeff is None else coeff)
        if coeff is None:
            self.error(f"expected a polynomial term, found {self.tok.text or 'end of input'!r}")
        return Poly.const(coeff)

    def network_def(self) -> None:
        start = self.expect("network")
        name_tok = self.ident()
        if name_tok.text in self.model.networks:
            self.error(f"network {name_tok.text!r} defined twice", name_tok)
        self.expect("{")
        self.keyword("subsystems")
        subs = []
        if not self.at(";"):
            subs.append(self.subsystem())
            while self.at(","):
                self.advance()
                subs.append(self.subsystem())
        self.expect(";")
        self.keyword("edges")
        edges = []
        if not self.at(";"):
            edges.append(self.edge())
            while self.at(","):
                self.advance()
                edges.append(self.edge())
        self.expect(";")
        self.expect("}")
        idx = sorted(i for i, _, _, _ in subs)
        if idx != list(range(1, len(subs) + 1)):
            self.error(f"subsystem indices must be 1..{len(subs)}, got {idx}", start)
        nd = NetworkDef([(i, p, k) for i, p, k, _ in subs], [e for e, _ in edges])
        self.model.networks[name_tok.text] = nd
        for e, tok in edges:
            if not (1 <= e.i < e.j <= len(subs)):
                self.error(f"edge ({e.i},{e.j}) needs 1 <= i < j <= {len(subs)}", tok)
        bad = validate(self.model.network(name_tok.text))
        if bad:
            self.error(f"network {name_tok.text!r} is inconsistent: " + "; ".join(map(str, bad)), name_tok)

    def subsystem(self) -> tuple[int, str, str, Token]:
        start = self.expect("(")
        i = self.nat()
        self.expect(",")
        refs = []
        for _ in range(2):
            tok = self.ident()
            if tok.text not in self.model.behaviors:
                self.error(f"undefined behavior {tok.text!r}", tok)
            refs.append(tok.text)
            if len(refs) == 1:
                self.expect(",")
        self.expect(")")
        return i, refs[0], refs[1], start

    def edge(self) -> tuple[Edge, Token]:
        start = self.expect("(")
        i = self.nat()
        self.expect(",")
        j = self.nat()
        self.expect(",")
        self.expect("s")
        self.expect("=")
        s = self.nat()
        self.expect(",")
        self.expect("k")
        self.expect("=")
        k = self.nat()
        self.expect(")")
        return Edge(i, j, s, k), start


def parse_model(text: str) -> ModelFile:
    return _Parser(text).parse()


def load_model(path) -> ModelFile:
    with open(path, encoding="utf-8") as f:
        return parse_model(f.read())


def serialize_behavior(name: str, B: Behavior, canonical: bool = False) -> str:
    if canonical:
        B = minimize(B)
    vars_ = ", ".join(f"{g.name}:{g.dim}" for g in B.sig.groups)
    rows = ["[" + ", ".join(format_poly(p) for p in B.R.row(i)) + "]" for i in range(B.R.rows)]
    body = (",\n" + " " * 8).join(rows)
    return f"behavior {name} {{\n  vars: {vars_};\n  rows: {body};\n}}\n"


def serialize_network(name: str, nd: NetworkDef) -> str:
    subs = ", ".join(f"({i}, {p}, {k})" for i, p, k in sorted(nd.subsystems))
    edges = ", ".join(f"({e.i}, {e.j}, s={e.s_dim}, k={e.k_dim})" for e in nd.edges)
    return f"network {name} {{\n  subsystems: {subs};\n  edges: {edges};\n}}\n"


def serialize(obj, name: str = "B", canonical: bool = False) -> str:
    """Text for a :class:`ModelFile` or a single named :class:`Behavior`."""
    if isinstance(obj, Behavior):
        return serialize_behavior(name, obj, canonical)
    parts = [serialize_behavior(n, B, canonical) for n, B in obj.behaviors.items()]
    parts += [serialize_network(n, nd) for n, nd in obj.networks.items()]
    return "\n".join(parts)
