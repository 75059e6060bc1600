"""Exact sparse multivariate polynomials over QQ or a prime field.

Monomials are plain exponent tuples; a :class:`Polynomial` maps monomials to
nonzero coefficients.  Rational coefficients are ``gmpy2.mpq`` values (always
canonical); prime-field coefficients are Python ints in ``[0, p)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple

import gmpy2
from gmpy2 import mpq

Monomial = Tuple[int, ...]


class StructuralError(ValueError):
    """Operands live in different rings or have mismatched shapes."""


class ParseError(ValueError):
    """Malformed polynomial text."""

    def __init__(self, message: str, column: int | None = None):
        super().__init__(message if column is None else f"{message} (column {column})")
        self.column = column


# --------------------------------------------------------------------------
# fields


@dataclass(frozen=True)
class Field:
    """QQ when ``characteristic == 0``, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p and (p < 2 or not gmpy2.is_prime(p)):
            raise ValueError(f"modulus {p} is not prime")

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    def __call__(self, value) -> object:
        """Coerce an int, Fraction-like or string ``a/b`` into the field."""
        p = self.characteristic
        if isinstance(value, str):
            value = mpq(value)
        if p:
            if isinstance(value, int):
                return value % p
            q = mpq(value)
            num, den = int(q.numerator), int(q.denominator)
            if den % p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes mod {p}")
            return num * pow(den, -1, p) % p
        return mpq(value)

    def inv(self, a):
        p = self.characteristic
        if p:
            return pow(int(a), -1, p)
        return 1 / a

    def random_element(self, rng, bound: int = 10_000):
        """Uniform nonzero integer in ``[-bound, bound]`` coerced into the field."""
        while True:
            c = self(rng.randint(-bound, bound))
            if c:
                return c

    def __str__(self) -> str:
        return f"Fp {self.characteristic}" if self.characteristic else "QQ"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


# --------------------------------------------------------------------------
# monomial orders


def _degrevlex_key(e: Monomial) -> tuple:
    # ascending key == descending monomial
    return (-sum(e),) + e[::-1]


def _lex_key(e: Monomial) -> tuple:
    return tuple(-a for a in e)


@dataclass(frozen=True)
class MonomialOrder:
    """A global monomial order.

    ``kind`` is ``"degrevlex"``, ``"lex"`` or ``"block"``; the block order
    compares the first ``block`` variables by degrevlex and breaks ties by
    degrevlex on the rest, so it eliminates the leading block.
    """

    kind: str = "degrevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.block < 1:
            raise ValueError("block order needs a positive block size")

    @property
    def sort_key(self) -> Callable[[Monomial], tuple]:
        """Key whose ascending sort lists monomials from largest to smallest."""
        if self.kind == "degrevlex":
            return _degrevlex_key
        if self.kind == "lex":
            return _lex_key
        k = self.block

        def key(e, k=k):
            head, tail = e[:k], e[k:]
            return (-sum(head),) + head[::-1] + (-sum(tail),) + tail[::-1]

        return key

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != len(b):
            raise StructuralError("monomials with different numbers of variables")
        ka, kb = self.sort_key(a), self.sort_key(b)
        if ka == kb:
            return 0
        return 1 if ka < kb else -1

    def __str__(self) -> str:
        return f"block({self.block})" if self.kind == "block" else self.kind


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def elimination_order(block: int) -> MonomialOrder:
    return MonomialOrder("block", block)


def monomial_compare(a: Monomial, b: Monomial, order: MonomialOrder = DEGREVLEX) -> int:
    """-1, 0 or 1 as ``a`` is smaller than, equal to or greater than ``b``."""
    return order.compare(a, b)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


# --------------------------------------------------------------------------
# rings and polynomials


class PolyRing:
    """Polynomial ring ``field[vars]``."""

    def __init__(self, variables: Sequence[str], field: Field = QQ):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"repeated variable names in {variables}")
        for v in variables:
            if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", v):
                raise ValueError(f"bad variable name {v!r}")
        self.variables = variables
        self.field = field
        self.nvars = len(variables)
        self._index = {v: i for i, v in enumerate(variables)}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"PolyRing({list(self.variables)}, {self.field})"

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def gens(self) -> list["Polynomial"]:
        return [self.var(v) for v in self.variables]

    def var(self, name: str) -> "Polynomial":
        e = [0] * self.nvars
        e[self._index[name]] = 1
        return Polynomial(self, {tuple(e): self.field(1)})

    def monomial(self, exps: Iterable[int], coeff=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise StructuralError("exponent vector has wrong length")
        c = self.field(coeff)
        return Polynomial(self, {exps: c} if c else {})

    def extend(self, front: Sequence[str] = (), back: Sequence[str] = ()) -> "PolyRing":
        """Ring with extra variables before and/or after the current ones."""
        return PolyRing(tuple(front) + self.variables + tuple(back), self.field)

    def __call__(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)


def _clean(terms: Dict[Monomial, object]) -> Dict[Monomial, object]:
    return {m: c for m, c in terms.items() if c}


class Polynomial:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, object]):
        self.ring = ring
        self.terms = terms if isinstance(terms, dict) else dict(terms)
        self._hash = None

    # -- basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(m) for m in self.terms), default=-1)

    def leading_monomial(self, order: MonomialOrder = DEGREVLEX) -> Monomial:
        return min(self.terms, key=order.sort_key)

    def leading_coefficient(self, order: MonomialOrder = DEGREVLEX):
        return self.terms[self.leading_monomial(order)]

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Monomial, object]]:
        key = order.sort_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]))

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.leading_coefficient(order)))

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field(0))

    # -- arithmetic
    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise StructuralError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.constant(other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        p = self.ring.field.characteristic
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if p:
                s %= p
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return self.scale(-1)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def scale(self, c) -> "Polynomial":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero()
        p = self.ring.field.characteristic
        if p:
            return Polynomial(self.ring, {m: a * c % p for m, a in self.terms.items()})
        return Polynomial(self.ring, {m: a * c for m, a in self.terms.items()})

    def mul_term(self, mono: Monomial, c=1) -> "Polynomial":
        p = self.ring.field.characteristic
        out = {}
        for m, a in self.terms.items():
            b = a * c
            if p:
                b %= p
            out[tuple(x + y for x, y in zip(m, mono))] = b
        return Polynomial(self.ring, out)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        p = self.ring.field.characteristic
        terms: Dict[Monomial, object] = {}
        get = terms.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                terms[m] = get(m, 0) + c1 * c2
        if p:
            terms = {m: c % p for m, c in terms.items()}
        return Polynomial(self.ring, _clean(terms))

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_divide(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises ArithmeticError otherwise."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        order = DEGREVLEX
        lm = divisor.leading_monomial(order)
        lc_inv = self.ring.field.inv(divisor.terms[lm])
        p = self.ring.field.characteristic
        rem = dict(self.terms)
        quo: Dict[Monomial, object] = {}
        key = order.sort_key
        while rem:
            m = min(rem, key=key)
            if not divides(lm, m):
                raise ArithmeticError("division is not exact")
            shift = tuple(a - b for a, b in zip(m, lm))
            c = rem[m] * lc_inv
            if p:
                c %= p
            quo[shift] = c
            for dm, dc in divisor.terms.items():
                t = tuple(a + b for a, b in zip(dm, shift))
                v = rem.get(t, 0) - c * dc
                if p:
                    v %= p
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return Polynomial(self.ring, quo)

    # -- ring changes
    def embed(self, ring: PolyRing, offset: int = 0) -> "Polynomial":
        """Copy into ``ring`` placing the variables at positions ``offset..``."""
        if ring.field != self.ring.field:
            raise StructuralError("field mismatch")
        back = ring.nvars - offset - self.ring.nvars
        if offset < 0 or back < 0:
            raise StructuralError("target ring too small")
        pad_front, pad_back = (0,) * offset, (0,) * back
        return Polynomial(ring, {pad_front + m + pad_back: c for m, c in self.terms.items()})

    def restrict(self, ring: PolyRing, offset: int = 0) -> "Polynomial":
        """Inverse of :meth:`embed`; the dropped variables must not occur."""
        n = ring.nvars
        out = {}
        for m, c in self.terms.items():
            if any(m[:offset]) or any(m[offset + n:]):
                raise StructuralError("polynomial involves dropped variables")
            out[m[offset:offset + n]] = c
        return Polynomial(ring, out)

    def evaluate(self, point: Sequence) -> object:
        p = self.ring.field.characteristic
        total = self.ring.field(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x ** e
            total = total + v
        return total % p if p else total

    # -- comparison / hashing
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, type(mpq(0)))):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_polynomial(self)


# --------------------------------------------------------------------------
# text syntax


def _format_coeff(c, field: Field) -> str:
    if field.characteristic:
        return str(int(c))
    q = mpq(c)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_polynomial(f: Polynomial, order: MonomialOrder = DEGREVLEX) -> str:
    if f.is_zero():
        return "0"
    names = f.ring.variables
    field = f.ring.field
    parts = []
    for m, c in f.sorted_terms(order):
        mono = "*".join(
            name if e == 1 else f"{name}^{e}" for name, e in zip(names, m) if e
        )
        neg = False
        if field.characteristic:
            cs = _format_coeff(c, field)
        else:
            neg = c < 0
            cs = _format_coeff(-c if neg else c, field)
        if mono:
            term = mono if cs == "1" else f"{cs}*{mono}"
        else:
            term = cs
        if not parts:
            parts.append("-" + term if neg else term)
        else:
            parts.append(("- " if neg else "+ ") + term)
    return " ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z][A-Za-z0-9_]*)|(\^)|(\*)|([+-]))")


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``3*x^2*y - 1/2*y^4`` style text into ``ring``.

    Terms are products of integer or ``a/b`` coefficients and variables with
    optional ``^`` powers, joined by ``+``/``-``.  Whitespace is ignored.
    """
    pos = 0
    n = len(text)
    tokens: list[tuple[str, str, int]] = []
    while pos < n:
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", col)
        kind = next(i for i in range(1, 6) if mt.group(i) is not None)
        col = mt.start(kind) + 1
        tokens.append(("num var ^ * sign".split()[kind - 1], mt.group(kind), col))
        pos = mt.end()
    if not tokens:
        raise ParseError("empty polynomial", 1)

    field = ring.field
    result: Dict[Monomial, object] = {}
    i = 0

    def expect_factor(i):
        if i >= len(tokens):
            raise ParseError("expression ends unexpectedly", len(text) + 1)
        kind, val, col = tokens[i]
        if kind == "num":
            return ("num", mpq(val)), i + 1
        if kind == "var":
            if val not in ring._index:
                raise ParseError(f"unknown variable {val!r}", col)
            power = 1
            if i + 1 < len(tokens) and tokens[i + 1][0] == "^":
                if i + 2 >= len(tokens) or tokens[i + 2][0] != "num" or "/" in tokens[i + 2][1]:
                    c2 = tokens[i + 2][2] if i + 2 < len(tokens) else len(text) + 1
                    raise ParseError("exponent must be a non-negative integer", c2)
                power = int(tokens[i + 2][1])
                return ("var", ring._index[val], power), i + 3
            return ("var", ring._index[val], power), i + 1
        raise ParseError(f"unexpected {val!r}", col)

    first = True
    while i < len(tokens):
        sign = 1
        kind, val, col = tokens[i]
        if kind == "sign":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' before {val!r}", col)
        first = False
        coeff = mpq(sign)
        exps = [0] * ring.nvars
        factor, i = expect_factor(i)
        while True:
            if factor[0] == "num":
                coeff *= factor[1]
            else:
                exps[factor[1]] += factor[2]
            if i < len(tokens) and tokens[i][0] == "*":
                factor, i = expect_factor(i + 1)
                continue
            if i < len(tokens) and tokens[i][0] in ("var", "num"):
                raise ParseError("missing '*' between factors", tokens[i][2])
            break
        m = tuple(exps)
        result[m] = result.get(m, 0) + field(coeff)
        if field.characteristic:
            result[m] %= field.characteristic
    return Polynomial(ring, _clean(result))
