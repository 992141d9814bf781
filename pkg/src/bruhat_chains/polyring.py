"""
Sparse multivariate polynomials with exact rational coefficients.

Variables are small integer codes laid out in the fixed order
``x1 < ... < x10 < y1 < ... < y10 < z < a1 < ... < a9`` (``a`` for alpha).
A monomial is a sorted tuple of ``(code, exponent)`` pairs and a polynomial
maps monomials to nonzero ``int`` or ``Fraction`` coefficients.  Coefficients
with denominator one are always stored as ``int``.

>>> x1, x2 = Poly.x(1), Poly.x(2)
>>> print(x1 * (x1 + x2))
x1^2 + x1*x2
>>> print(divided_difference(1, x1**2))
x1 + x2
>>> print(reduce_mod_I(Poly.x(3), 3))
-x1 - x2
"""

from __future__ import annotations

import itertools
import json
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "Poly", "X", "Y", "Z", "ALPHA", "var_name", "parse_var",
    "divided_difference", "y_derivative", "substitute", "reduce_mod_I",
    "is_sub_staircase", "elementary_symmetric", "complete_homogeneous",
    "power_sum",
]

_NX = 10  # slots reserved per x/y family; matches permcore.MAX_N

Z = 2 * _NX + 1


def X(i: int) -> int:
    if not 1 <= i <= _NX:
        raise ValueError(f"x index {i} out of range")
    return i


def Y(i: int) -> int:
    if not 1 <= i <= _NX:
        raise ValueError(f"y index {i} out of range")
    return _NX + i


def ALPHA(i: int) -> int:
    if not 1 <= i < _NX:
        raise ValueError(f"alpha index {i} out of range")
    return Z + i


def var_name(code: int) -> str:
    if 1 <= code <= _NX:
        return f"x{code}"
    if code <= 2 * _NX:
        return f"y{code - _NX}"
    if code == Z:
        return "z"
    return f"a{code - Z}"


_VAR_RE = re.compile(r"^(x|y|a)(\d+)$|^z$")


def parse_var(name: str) -> int:
    m = _VAR_RE.match(name)
    if not m:
        raise ValueError(f"unknown variable {name!r}")
    if name == "z":
        return Z
    kind, idx = m.group(1), int(m.group(2))
    return {"x": X, "y": Y, "a": ALPHA}[kind](idx)


def _is_x(code: int) -> bool:
    return 1 <= code <= _NX


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


@lru_cache(maxsize=1 << 18)
def _mono_mul(m1: tuple, m2: tuple) -> tuple:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        e2 = d.get(v, 0) + e
        if e2:
            d[v] = e2
        else:
            del d[v]
    return tuple(sorted(d.items()))


def _mono_str(mono: tuple) -> str:
    return "*".join(var_name(v) if e == 1 else f"{var_name(v)}^{e}" for v, e in mono)


class Poly:
    """An immutable polynomial; compare, hash and print by canonical form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    clean[mono] = _norm(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> Poly:
        # terms already canonical, no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> Poly:
        return cls({(): c})

    @classmethod
    def var(cls, code: int) -> Poly:
        return cls._raw({((code, 1),): 1})

    @classmethod
    def x(cls, i: int) -> Poly:
        return cls.var(X(i))

    @classmethod
    def y(cls, i: int) -> Poly:
        return cls.var(Y(i))

    @classmethod
    def z(cls) -> Poly:
        return cls.var(Z)

    @classmethod
    def alpha(cls, i: int) -> Poly:
        return cls.var(ALPHA(i))

    @classmethod
    def monomial(cls, exps: dict, coeff=1) -> Poly:
        mono = tuple(sorted((v, e) for v, e in exps.items() if e))
        return cls({mono: coeff})

    @classmethod
    def x_monomial(cls, gamma, coeff=1) -> Poly:
        """``coeff * x^gamma`` for a dense exponent sequence."""
        return cls.monomial({X(i): e for i, e in enumerate(gamma, start=1)}, coeff)

    @staticmethod
    def lift(value) -> Poly:
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction, Rational)):
            return Poly.constant(value)
        raise TypeError(f"cannot treat {type(value).__name__} as a polynomial")

    # -- container protocol --------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order."""
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.lift(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        try:
            other = Poly.lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            c2 = out.get(mono, 0) + c
            if c2:
                out[mono] = _norm(c2)
            else:
                out.pop(mono, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = Poly.lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Poly.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        try:
            other = Poly.lift(other)
        except TypeError:
            return NotImplemented
        if len(other._terms) == 1 and () in other._terms:
            return self.scale(other._terms[()])
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        if not c:
            return Poly()
        return Poly._raw({m: _norm(v * c) for m, v in self._terms.items()})

    def __truediv__(self, c):
        if isinstance(c, Poly):
            if not c.is_constant():
                raise TypeError("only division by constants is supported")
            c = c.constant_value()
        return self.scale(Fraction(1) / Fraction(c))

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- inspection ----------------------------------------------------

    def is_constant(self) -> bool:
        return all(m == () for m in self._terms)

    def constant_term(self):
        return self._terms.get((), 0)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.constant_term()

    def variables(self) -> set[int]:
        return {v for m in self._terms for v, _ in m}

    def degree_in(self, code: int) -> int:
        return max((e for m in self._terms for v, e in m if v == code), default=0)

    def total_degree(self, codes=None) -> int:
        if not self._terms:
            return -1
        return max(sum(e for v, e in m if codes is None or v in codes) for m in self._terms)

    def x_degree_components(self) -> dict[int, Poly]:
        """Split into pieces homogeneous in the x variables."""
        parts: dict[int, dict] = {}
        for m, c in self._terms.items():
            d = sum(e for v, e in m if _is_x(v))
            parts.setdefault(d, {})[m] = c
        return {d: Poly._raw(t) for d, t in parts.items()}

    def split_x(self, n: int) -> dict[tuple, Poly]:
        """Group by dense x-exponent vector of width n; values are the non-x cofactors."""
        out: dict[tuple, dict] = {}
        for m, c in self._terms.items():
            gamma = [0] * n
            rest = []
            for v, e in m:
                if _is_x(v):
                    if v > n:
                        raise ValueError(f"{var_name(v)} outside x1..x{n}")
                    gamma[v - 1] = e
                else:
                    rest.append((v, e))
            out.setdefault(tuple(gamma), {})[tuple(rest)] = c
        return {g: Poly._raw(t) for g, t in out.items()}

    def map_monomials(self, fn) -> Poly:
        """Apply ``fn(mono) -> (mono', factor)`` to every term."""
        out: dict = {}
        for m, c in self._terms.items():
            m2, factor = fn(m)
            if factor:
                out[m2] = out.get(m2, 0) + c * factor
        return Poly(out)

    def partial(self, code: int) -> Poly:
        def d(mono):
            for k, (v, e) in enumerate(mono):
                if v == code:
                    rest = mono[:k] + (((v, e - 1),) if e != 1 else ()) + mono[k + 1:]
                    return rest, e
            return mono, 0
        return self.map_monomials(d)

    def swap(self, c1: int, c2: int) -> Poly:
        def s(mono):
            swapped = tuple(sorted((c2 if v == c1 else c1 if v == c2 else v, e) for v, e in mono))
            return swapped, 1
        return self.map_monomials(s)

    def subs(self, assignment: dict) -> Poly:
        """Simultaneous substitution ``code -> Poly or number``."""
        if not assignment:
            return self
        images = {v: Poly.lift(p) for v, p in assignment.items()}
        powers: dict = {}

        def power(v, e):
            key = (v, e)
            if key not in powers:
                powers[key] = images[v] ** e
            return powers[key]

        acc: dict = {}
        for m, c in self._terms.items():
            kept = tuple((v, e) for v, e in m if v not in images)
            factor = None
            for v, e in m:
                if v in images:
                    factor = power(v, e) if factor is None else factor * power(v, e)
            if factor is None:
                acc[kept] = acc.get(kept, 0) + c
                continue
            for m2, c2 in factor._terms.items():
                mono = _mono_mul(kept, m2)
                acc[mono] = acc.get(mono, 0) + c * c2
        return Poly(acc)

    def evaluate(self, value=1):
        """Set every variable to ``value`` and return the number."""
        total = 0
        for m, c in self._terms.items():
            total += c * value ** sum(e for _, e in m)
        return _norm(Fraction(total)) if isinstance(total, Fraction) else total

    # -- output --------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.items():
            neg = c < 0
            a = -c if neg else c
            body = _mono_str(m)
            if not body:
                text = str(a)
            elif a == 1:
                text = body
            else:
                text = f"{a}*{body}"
            pieces.append(("-" if neg else "+", text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"Poly({str(self)!r})"

    def to_json(self) -> list:
        out = []
        for m, c in self.items():
            c = Fraction(c)
            out.append({
                "exponents": {var_name(v): e for v, e in m},
                "num": str(c.numerator),
                "den": str(c.denominator),
            })
        return out

    @classmethod
    def from_json(cls, data) -> Poly:
        if isinstance(data, str):
            data = json.loads(data)
        terms: dict = {}
        for row in data:
            mono = tuple(sorted((parse_var(k), int(e)) for k, e in row["exponents"].items()))
            terms[mono] = terms.get(mono, 0) + Fraction(int(row["num"]), int(row["den"]))
        return cls(terms)


def substitute(f: Poly, assignment: dict) -> Poly:
    return f.subs(assignment)


def y_derivative(i: int, f: Poly) -> Poly:
    return f.partial(Y(i))


def divided_difference(i: int, f: Poly) -> Poly:
    """
    ``(f - s_i f) / (x_i - x_{i+1})``, computed term by term.

    A term ``x_i^p x_{i+1}^q`` with p > q contributes
    ``(x_i x_{i+1})^q * h_{p-q-1}(x_i, x_{i+1})``; p < q flips the sign.
    """
    xi, xj = X(i), X(i + 1)
    out: dict = {}
    for m, c in f._terms.items():
        p = q = 0
        rest = []
        for v, e in m:
            if v == xi:
                p = e
            elif v == xj:
                q = e
            else:
                rest.append((v, e))
        if p == q:
            continue
        sign = 1 if p > q else -1
        lo, gap = min(p, q), abs(p - q)
        for r in range(gap):
            exps = dict(rest)
            a, b = lo + gap - 1 - r, lo + r
            if a:
                exps[xi] = a
            if b:
                exps[xj] = b
            mono = tuple(sorted(exps.items()))
            out[mono] = out.get(mono, 0) + sign * c
    return Poly(out)


def is_sub_staircase(gamma, n: int) -> bool:
    return all(0 <= g <= n - i for i, g in enumerate(gamma, start=1))


@lru_cache(maxsize=None)
def _compositions(total: int, parts: int) -> tuple[tuple[int, ...], ...]:
    if parts == 0:
        return ((),) if total == 0 else ()
    out = []
    for first in range(total, -1, -1):
        for tail in _compositions(total - first, parts - 1):
            out.append((first,) + tail)
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def _reduce_x_monomial(n: int, gamma: tuple) -> tuple:
    """
    Normal form of ``x^gamma`` modulo the coinvariant ideal.

    Rewrites ``x_k^(n-k+1)`` with ``h_{n-k+1}(x_1..x_k)``, always at the
    largest offending k; each step is lex-decreasing with x_n most
    significant, so the recursion terminates.
    """
    k = next((k for k in range(n, 0, -1) if gamma[k - 1] > n - k), None)
    if k is None:
        return ((gamma, 1),)
    m = n - k + 1
    base = list(gamma)
    base[k - 1] -= m
    acc: dict = {}
    for comp in _compositions(m, k):
        if comp[k - 1] == m:
            continue
        g = tuple(base[i] + comp[i] if i < k else base[i] for i in range(n))
        for g2, c in _reduce_x_monomial(n, g):
            acc[g2] = acc.get(g2, 0) - c
    return tuple((g, c) for g, c in acc.items() if c)


def reduce_mod_I(f: Poly, n: int) -> Poly:
    """Sub-staircase representative of ``f`` modulo the ideal of constant-free symmetric polynomials in x1..xn."""
    acc: dict = {}
    for gamma, cofactor in f.split_x(n).items():
        if is_sub_staircase(gamma, n):
            reduced = ((gamma, 1),)
        else:
            reduced = _reduce_x_monomial(n, gamma)
        for g2, c in reduced:
            # x codes sort before every other variable
            xmono = tuple((X(i), e) for i, e in enumerate(g2, start=1) if e)
            for rest, c2 in cofactor._terms.items():
                mono = xmono + rest
                acc[mono] = acc.get(mono, 0) + c * c2
    return Poly(acc)


def elementary_symmetric(j: int, n: int) -> Poly:
    out = Poly()
    for idx in itertools.combinations(range(1, n + 1), j):
        out = out + Poly.monomial({X(i): 1 for i in idx})
    return out


def complete_homogeneous(j: int, k: int) -> Poly:
    """``h_j(x_1, ..., x_k)``."""
    return Poly({tuple((X(i), e) for i, e in enumerate(c, start=1) if e): 1
                 for c in _compositions(j, k)})


def power_sum(j: int, n: int) -> Poly:
    return Poly({((X(i), j),): 1 for i in range(1, n + 1)})
