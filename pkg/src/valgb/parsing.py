"""Problem-file grammar and polynomial expression parser.

A problem file is line oriented::

    field Qp(3)          # or: field Q | field Qt
    vars x,y
    order lex x>y        # or: order grevlex (priority optional)
    weight 0,0           # optional, defaults to all zeros
    ideal: 3x^2+x*y+18y^2
    target: x^2+y^2      # optional, used by normal-form queries

Polynomial expressions allow integer and rational coefficients, implicit
multiplication, ^ for powers, parenthesized subexpressions, and division by
constants; over Q(t) the name t denotes the valuation parameter, so scalars
like (1+t^5) or (3+t)/(1+t) are ordinary subexpressions.  Errors carry exact
line/column positions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import CoefficientField, QQ, Qp, Qt, RationalFunctionField
from .polynomials import Polynomial, TermOrder
from .weights import WeightedOrder


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


@dataclass
class ProblemFile:
    field: CoefficientField
    names: list[str]
    order: TermOrder
    weights: tuple
    generators: list[Polynomial]
    target: Polynomial | None = None

    @property
    def nvars(self) -> int:
        return len(self.names)

    def weighted_order(self) -> WeightedOrder:
        return WeightedOrder(self.weights, self.order)


# ---------------------------------------------------------------------------
# expression tokenizer / parser
# ---------------------------------------------------------------------------

_SYMBOLS = {"^": "CARET", "*": "STAR", "/": "SLASH", "+": "PLUS", "-": "MINUS",
            "(": "LPAR", ")": "RPAR"}


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str, line: int, col: int) -> list[_Token]:
    tokens = []
    i = 0
    cur_col = col
    while i < len(text):
        ch = text[i]
        if ch in " \t":
            i += 1
            cur_col += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(_SYMBOLS[ch], ch, line, cur_col))
            i += 1
            cur_col += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", text[i:j], line, cur_col))
            cur_col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("NAME", text[i:j], line, cur_col))
            cur_col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, cur_col)
    tokens.append(_Token("EOF", "", line, cur_col))
    return tokens


class _ExprParser:
    def __init__(self, tokens: list[_Token], field: CoefficientField, names: list[str]):
        self.tokens = tokens
        self.pos = 0
        self.field = field
        self.names = names
        self.nvars = len(names)
        self.var_index = {name: i for i, name in enumerate(names)}
        self.t_is_scalar = isinstance(field, RationalFunctionField) and "t" not in self.var_index

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str):
        tok = self.peek()
        raise ParseError(message, tok.line, tok.col)

    def parse(self) -> Polynomial:
        poly = self.expr()
        if self.peek().kind != "EOF":
            self.error(f"unexpected {self.peek().text!r}")
        return poly

    def _sign_run(self) -> int:
        sign = 1
        while self.peek().kind in ("PLUS", "MINUS"):
            if self.take().kind == "MINUS":
                sign = -sign
        return sign

    def expr(self) -> Polynomial:
        sign = self._sign_run()
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek().kind in ("PLUS", "MINUS"):
            sign = self._sign_run()
            t = self.term()
            acc = acc + t if sign > 0 else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.power()
        while True:
            kind = self.peek().kind
            if kind == "STAR":
                self.take()
                acc = acc * self.power()
            elif kind == "SLASH":
                tok = self.take()
                divisor = self.power()
                acc = self._divide(acc, divisor, tok)
            elif kind in ("INT", "NAME", "LPAR"):
                acc = acc * self.power()  # implicit multiplication
            else:
                return acc

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek().kind == "CARET":
            self.take()
            tok = self.peek()
            if tok.kind != "INT":
                self.error("expected a nonnegative integer exponent")
            self.take()
            exponent = int(tok.text)
            out = Polynomial.constant(self.field, self.nvars, self.field.one())
            for _ in range(exponent):
                out = out * base
            return out
        return base

    def atom(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "INT":
            self.take()
            return Polynomial.constant(self.field, self.nvars, int(tok.text))
        if tok.kind == "NAME":
            self.take()
            idx = self.var_index.get(tok.text)
            if idx is not None:
                return Polynomial.variable(self.field, self.nvars, idx)
            if tok.text == "t" and self.t_is_scalar:
                return Polynomial.constant(self.field, self.nvars, self.field.phi(1))
            raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.col)
        if tok.kind == "LPAR":
            self.take()
            inner = self.expr()
            if self.peek().kind != "RPAR":
                self.error("expected ')'")
            self.take()
            return inner
        self.error(f"unexpected {tok.text!r}" if tok.text else "unexpected end of input")

    def _divide(self, num: Polynomial, den: Polynomial, tok: _Token) -> Polynomial:
        if den.is_zero():
            raise ParseError("division by zero", tok.line, tok.col)
        nonconstant = [m for m in den.terms if any(m)]
        if nonconstant:
            raise ParseError(
                "can only divide by a constant (scalar) expression", tok.line, tok.col
            )
        scalar = next(iter(den.terms.values()))
        return num.scale(self.field.inv(scalar))


def parse_polynomial(
    text: str,
    field: CoefficientField,
    names: list[str],
    line: int = 1,
    col: int = 1,
) -> Polynomial:
    tokens = _tokenize(text, line, col)
    return _ExprParser(tokens, field, names).parse()


# ---------------------------------------------------------------------------
# problem files
# ---------------------------------------------------------------------------

_DIRECTIVES = ("field", "vars", "order", "weight", "ideal", "target")


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def _parse_field_spec(spec: str, line: int, col: int) -> CoefficientField:
    spec = spec.strip()
    if spec == "Q":
        return QQ
    if spec == "Qt":
        return Qt()
    if spec.startswith("Qp(") and spec.endswith(")"):
        inner = spec[3:-1].strip()
        if not inner.isdigit():
            raise ParseError(f"bad prime {inner!r}", line, col)
        try:
            return Qp(int(inner))
        except ValueError as exc:
            raise ParseError(str(exc), line, col) from None
    raise ParseError(f"unknown field {spec!r} (expected Qp(p), Q, or Qt)", line, col)


def _parse_order_spec(spec: str, names: list[str], line: int, col: int) -> TermOrder:
    parts = spec.strip().split(None, 1)
    if not parts:
        raise ParseError("empty order specification", line, col)
    kind = parts[0]
    if kind not in ("lex", "grevlex"):
        raise ParseError(f"unknown order {kind!r} (expected lex or grevlex)", line, col)
    if len(parts) == 1:
        return TermOrder(kind)
    listed = [v.strip() for v in parts[1].split(">")]
    indices = []
    for v in listed:
        if v not in names:
            raise ParseError(f"unknown variable {v!r} in order", line, col)
        indices.append(names.index(v))
    if sorted(indices) != list(range(len(names))):
        raise ParseError(
            "order priority must list every variable exactly once", line, col
        )
    return TermOrder(kind, tuple(indices))


def parse_problem(text: str) -> ProblemFile:
    field = None
    names: list[str] | None = None
    order_spec: tuple[str, int, int] | None = None
    weights: tuple | None = None
    poly_chunks: dict[str, list[tuple[str, int, int]]] = {"ideal": [], "target": []}
    section: str | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = _strip_comment(raw)
        if not stripped.strip():
            continue
        lead = stripped.lstrip()
        indent = len(stripped) - len(lead)
        word = None
        for directive in _DIRECTIVES:
            if lead == directive or lead.startswith((directive + " ", directive + ":", directive + "\t")):
                word = directive
                break
        if word is not None:
            rest = lead[len(word):]
            consumed = indent + len(word)
            if rest.startswith(":"):
                rest = rest[1:]
                consumed += 1
            rest_col = consumed + 1
            if word == "field":
                field = _parse_field_spec(rest, lineno, rest_col)
                section = None
            elif word == "vars":
                names = [v.strip() for v in rest.split(",") if v.strip()]
                if not names:
                    raise ParseError("empty variable list", lineno, rest_col)
                if len(set(names)) != len(names):
                    raise ParseError("duplicate variable names", lineno, rest_col)
                section = None
            elif word == "order":
                order_spec = (rest, lineno, rest_col)
                section = None
            elif word == "weight":
                entries = [w.strip() for w in rest.split(",") if w.strip()]
                try:
                    weights = tuple(int(w) for w in entries)
                except ValueError:
                    raise ParseError("weights must be integers", lineno, rest_col) from None
                section = None
            else:  # ideal / target
                section = word
                if rest.strip():
                    poly_chunks[word].extend(
                        _split_on_commas(rest, lineno, rest_col)
                    )
        elif section is not None:
            poly_chunks[section].extend(_split_on_commas(stripped, lineno, 1))
        else:
            raise ParseError(f"unrecognized line {stripped.strip()!r}", lineno, 1)

    if field is None:
        raise ParseError("missing 'field' directive", 1, 1)
    if names is None:
        raise ParseError("missing 'vars' directive", 1, 1)
    if isinstance(field, RationalFunctionField) and "t" in names:
        raise ParseError("variable name 't' is reserved over Qt", 1, 1)

    if order_spec is None:
        order = TermOrder("grevlex")
    else:
        order = _parse_order_spec(order_spec[0], names, order_spec[1], order_spec[2])
    if weights is None:
        weights = (0,) * len(names)
    if len(weights) != len(names):
        raise ParseError(
            f"weight length {len(weights)} does not match {len(names)} variables", 1, 1
        )

    if not poly_chunks["ideal"]:
        raise ParseError("missing 'ideal:' section", 1, 1)
    generators = [
        parse_polynomial(chunk, field, names, line, col)
        for chunk, line, col in poly_chunks["ideal"]
    ]

    target = None
    if poly_chunks["target"]:
        if len(poly_chunks["target"]) > 1:
            chunk, line, col = poly_chunks["target"][1]
            raise ParseError("only one target polynomial is allowed", line, col)
        chunk, line, col = poly_chunks["target"][0]
        target = parse_polynomial(chunk, field, names, line, col)

    return ProblemFile(field, names, order, weights, generators, target)


def _split_on_commas(text: str, line: int, col: int) -> list[tuple[str, int, int]]:
    """Split a physical line into polynomial chunks at top-level commas."""
    chunks = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            piece = text[start:i]
            if piece.strip():
                chunks.append((piece, line, col + start))
            start = i + 1
    piece = text[start:]
    if piece.strip():
        chunks.append((piece, line, col + start))
    return chunks
