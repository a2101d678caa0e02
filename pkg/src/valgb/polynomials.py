"""Sparse multivariate polynomials, monomials and classical term orders.

Monomials are exponent tuples; polynomials map monomials to nonzero field
scalars.  Polynomial values are immutable by convention: every operation
returns a fresh object and per-order leading data is memoized on instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .fields import CoefficientField

Monomial = tuple

ONE_MONO_CACHE: dict[int, Monomial] = {}


def unit_monomial(nvars: int) -> Monomial:
    m = ONE_MONO_CACHE.get(nvars)
    if m is None:
        m = (0,) * nvars
        ONE_MONO_CACHE[nvars] = m
    return m


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Componentwise a - b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class TermOrder:
    """Classical monomial order: lex or grevlex, with a variable priority.

    ``priority`` lists variable indices from most to least significant;
    None means declaration order (0, 1, ..., n-1).
    """

    kind: str
    priority: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown term order kind {self.kind!r}")
        if self.priority is not None:
            pr = tuple(self.priority)
            if sorted(pr) != list(range(len(pr))):
                raise ValueError("priority must be a permutation of variable indices")
            object.__setattr__(self, "priority", pr)

    def _permute(self, m: Monomial) -> tuple:
        if self.priority is None:
            return m
        return tuple(m[i] for i in self.priority)

    def sort_key(self, m: Monomial):
        """Key that sorts monomials ascending in this order (larger key = larger)."""
        pm = self._permute(m)
        if self.kind == "lex":
            return pm
        return (sum(pm), tuple(-e for e in reversed(pm)))

    def compare(self, a: Monomial, b: Monomial) -> int:
        """+1 if a is larger, -1 if smaller, 0 if equal."""
        ka, kb = self.sort_key(a), self.sort_key(b)
        return (ka > kb) - (ka < kb)

    def label(self, names: list[str] | None = None) -> str:
        if self.priority is None:
            return self.kind
        if names is None:
            inner = ">".join(f"x{i + 1}" for i in self.priority)
        else:
            inner = ">".join(names[i] for i in self.priority)
        return f"{self.kind}[{inner}]"


LEX = TermOrder("lex")
GREVLEX = TermOrder("grevlex")


class Polynomial:
    """Sparse homogeneous-friendly polynomial over a coefficient field."""

    __slots__ = ("field", "nvars", "terms", "_cache")

    def __init__(self, field: CoefficientField, nvars: int, terms=None, *, _clean=False):
        self.field = field
        self.nvars = nvars
        if terms is None:
            terms = {}
        if _clean:
            self.terms = terms
        else:
            clean = {}
            for mono, c in dict(terms).items():
                mono = tuple(mono)
                if len(mono) != nvars or any(e < 0 for e in mono):
                    raise ValueError(f"bad exponent vector {mono} for {nvars} variables")
                c = field.coerce(c)
                if not field.is_zero(c):
                    clean[mono] = c
            self.terms = clean
        self._cache = {}

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars, {}, _clean=True)

    @classmethod
    def constant(cls, field, nvars, c):
        return cls(field, nvars, {unit_monomial(nvars): c})

    @classmethod
    def variable(cls, field, nvars, i):
        mono = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(field, nvars, {mono: field.one()}, _clean=True)

    @classmethod
    def term(cls, field, nvars, mono, coeff):
        return cls(field, nvars, {tuple(mono): coeff})

    # -- basic queries --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int | None:
        if not self.terms:
            return None
        return max(mono_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        cached = self._cache.get("homog")
        if cached is None:
            degs = {mono_degree(m) for m in self.terms}
            cached = len(degs) <= 1
            self._cache["homog"] = cached
        return cached

    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms; None for the zero polynomial."""
        if not self.is_homogeneous():
            raise ValueError("polynomial is not homogeneous")
        return self.degree()

    def support(self):
        return self.terms.keys()

    def coefficient(self, mono: Monomial):
        return self.terms.get(tuple(mono), self.field.zero())

    # -- arithmetic -----------------------------------------------------------
    def _compat(self, other: "Polynomial"):
        if self.field != other.field:
            raise ValueError("coefficient field mismatch")
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._compat(other)
        field = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            cur = out.get(m)
            if cur is None:
                out[m] = c
            else:
                s = field.add(cur, c)
                if field.is_zero(s):
                    del out[m]
                else:
                    out[m] = s
        return Polynomial(field, self.nvars, out, _clean=True)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._compat(other)
        field = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            cur = out.get(m)
            if cur is None:
                out[m] = field.neg(c)
            else:
                s = field.sub(cur, c)
                if field.is_zero(s):
                    del out[m]
                else:
                    out[m] = s
        return Polynomial(field, self.nvars, out, _clean=True)

    def __neg__(self) -> "Polynomial":
        field = self.field
        return Polynomial(
            field, self.nvars, {m: field.neg(c) for m, c in self.terms.items()}, _clean=True
        )

    def scale(self, c) -> "Polynomial":
        field = self.field
        c = field.coerce(c)
        if field.is_zero(c):
            return Polynomial.zero(field, self.nvars)
        out = {}
        for m, a in self.terms.items():
            prod = field.mul(c, a)
            if not field.is_zero(prod):  # possible over Z/p^m
                out[m] = prod
        return Polynomial(field, self.nvars, out, _clean=True)

    def mono_mul(self, v: Monomial, coeff=None) -> "Polynomial":
        """Multiply by the monomial x^v, optionally times a scalar."""
        field = self.field
        if coeff is not None:
            coeff = field.coerce(coeff)
        v = tuple(v)
        out = {}
        for m, a in self.terms.items():
            c = a if coeff is None else field.mul(coeff, a)
            if coeff is None or not field.is_zero(c):
                out[mono_mul(m, v)] = c
        return Polynomial(field, self.nvars, out, _clean=True)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._compat(other)
        field = self.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                prod = field.mul(c1, c2)
                cur = out.get(m)
                if cur is None:
                    if not field.is_zero(prod):
                        out[m] = prod
                else:
                    s = field.add(cur, prod)
                    if field.is_zero(s):
                        del out[m]
                    else:
                        out[m] = s
        return Polynomial(field, self.nvars, out, _clean=True)

    def map_coefficients(self, fn, target_field=None) -> "Polynomial":
        field = target_field or self.field
        out = {}
        for m, c in self.terms.items():
            c2 = fn(c)
            if not field.is_zero(c2):
                out[m] = c2
        return Polynomial(field, self.nvars, out, _clean=True)

    # -- comparison -----------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return poly_to_str(self)


def monomials_of_degree(nvars: int, d: int, order: TermOrder | None = None) -> list[Monomial]:
    """All degree-d monomials in nvars variables, sorted descending."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    out = list(_compositions(nvars, d))
    key = (order or GREVLEX).sort_key
    out.sort(key=key, reverse=True)
    return out


def _compositions(nvars: int, d: int) -> Iterator[Monomial]:
    if nvars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(nvars - 1, d - first):
            yield (first,) + rest


def default_names(nvars: int) -> list[str]:
    return [f"x{i + 1}" for i in range(nvars)]


def poly_to_str(
    f: Polynomial, names: list[str] | None = None, order: TermOrder | None = None
) -> str:
    """Deterministic text form; terms sorted descending in the given order."""
    if f.is_zero():
        return "0"
    if names is None:
        names = default_names(f.nvars)
    key = (order or GREVLEX).sort_key
    monos = sorted(f.terms, key=key, reverse=True)
    parts = []
    for m in monos:
        neg, mag = f.field.format_coefficient(f.terms[m])
        if mono_degree(m) == 0:
            body = mag
        else:
            vars_part = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(m)
                if e > 0
            )
            body = vars_part if mag == "1" else f"{mag}*{vars_part}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("-" if neg else "+") + body)
    return "".join(parts)
