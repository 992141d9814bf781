"""
Schubert and padded Schubert polynomials, the operator ``Delta``, and
expansion of coinvariant-algebra elements in the Schubert basis.

Expansions are plain dicts ``Permutation -> Poly`` whose coefficients carry
no x variables.

>>> print(schubert(Permutation.parse("132")))
x1 + x2
>>> print(padded_schubert(Permutation.parse("132")))
x1*y1*y2 + x2*y1^2
>>> format_expansion(monk_product(Permutation.parse("132"), 1))
'S[231] + S[312]'
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .bruhat import BruhatError, covers_up, is_cover
from .permcore import (Permutation, all_permutations, lehmer_code,
                       longest_element, reduced_words)
from .polyring import (X, Y, Poly, divided_difference, is_sub_staircase,
                       reduce_mod_I)
from .report import Report

__all__ = [
    "NotSubStaircase", "SchubertExpansion", "staircase", "schubert",
    "schubert_table", "pad", "unpad", "padded_schubert", "delta",
    "delta_on_quotient", "principal_specialization", "macdonald_sum",
    "expand_in_schubert_basis", "expand_by_leading_terms", "monk_product",
    "remark_operator", "expansion_to_poly", "format_expansion",
    "expansion_to_json", "verify_padded_delta", "verify_monk",
    "verify_macdonald",
]

SchubertExpansion = dict  # Permutation -> Poly, zero coefficients absent


class NotSubStaircase(BruhatError):
    pass


def staircase(n: int) -> tuple[int, ...]:
    return tuple(range(n - 1, -1, -1))


@lru_cache(maxsize=None)
def schubert_table(n: int) -> dict[Permutation, Poly]:
    """Every Schubert polynomial of ``S_n``, by descending divided differences from ``x^rho``."""
    table = {longest_element(n): Poly.x_monomial(staircase(n))}
    for w in sorted(all_permutations(n), key=lambda p: -p.length):
        for i in w.right_descents():
            u = w.swap_positions(i, i + 1)
            if u not in table:
                table[u] = divided_difference(i, table[w])
    return table


def schubert(w: Permutation) -> Poly:
    return schubert_table(w.n)[w]


def pad(f: Poly, n: int) -> Poly:
    """``x^g -> x^g y^(rho - g)``; cofactors in z/alpha pass through."""
    rho = staircase(n)
    out = Poly()
    for gamma, cofactor in f.split_x(n).items():
        if not is_sub_staircase(gamma, n):
            raise NotSubStaircase(f"exponent {gamma} exceeds staircase {rho}")
        exps = {X(i): g for i, g in enumerate(gamma, start=1)}
        exps.update({Y(i): r - g for i, (r, g) in enumerate(zip(rho, gamma), start=1)})
        out = out + Poly.monomial(exps) * cofactor
    return out


def unpad(f: Poly) -> Poly:
    """Set every y variable to 1 (negative y exponents included)."""
    ys = {v for v in f.variables() if Y(1) <= v <= Y(10)}
    return f.map_monomials(lambda m: (tuple((v, e) for v, e in m if v not in ys), 1))


@lru_cache(maxsize=None)
def padded_schubert(w: Permutation) -> Poly:
    return pad(schubert(w), w.n)


def delta(f: Poly) -> Poly:
    """``sum_i x_i * d f / d y_i``."""
    out = Poly()
    for v in sorted(f.variables()):
        if Y(1) <= v <= Y(10):
            i = v - Y(1) + 1
            out = out + Poly.x(i) * f.partial(v)
    return out


def delta_on_quotient(f: Poly, n: int) -> Poly:
    """
    Monomial rule ``x^g -> (sum_i (n - i - g_i) x_i) x^g`` applied to every
    term (exponents may exceed the staircase), then reduced modulo I.
    """
    out: dict = {}
    for gamma, cofactor in f.split_x(n).items():
        for i in range(1, n + 1):
            weight = n - i - gamma[i - 1]
            if not weight:
                continue
            g2 = list(gamma)
            g2[i - 1] += 1
            g2 = tuple(g2)
            out[g2] = out.get(g2, Poly()) + cofactor.scale(weight)
    total = Poly()
    for gamma, cofactor in out.items():
        total = total + Poly.x_monomial(gamma) * cofactor
    return reduce_mod_I(total, n)


def principal_specialization(w: Permutation) -> int:
    return schubert(w).evaluate(1)


def macdonald_sum(w: Permutation) -> Fraction:
    """``(1/l!) * sum over reduced words of the product of the letters``."""
    total = sum(prod(word) for word in reduced_words(w))
    return Fraction(total, factorial(w.length))


def expand_in_schubert_basis(f: Poly, n: int) -> SchubertExpansion:
    """
    Coefficients of ``f mod I`` in the Schubert basis.

    The coefficient of ``S_w`` is the x-free part of ``d_w f`` where
    ``d_w = d_{a_1} ... d_{a_l}`` for a reduced word of w.  The values
    ``d_u f`` are shared along a tree: ``d_w f = d_a (d_{s_a w} f)`` for a
    left descent a of w.
    """
    reduced = reduce_mod_I(f, n)
    if not reduced:
        return {}
    top = reduced.total_degree(set(range(X(1), X(n) + 1)))
    e = all_permutations(n)[0]
    images = {e: reduced}
    out: SchubertExpansion = {}
    for w in all_permutations(n):
        if w.length > top:
            break
        if w.length:
            a = w.left_descents()[0]
            parent = images.get(_left_simple(a, w))
            if not parent:
                continue
            g = divided_difference(a, parent)
            if not g:
                continue
            images[w] = g
        coeff = images[w].x_degree_components().get(0)
        if coeff:
            out[w] = coeff
    return out


def _left_simple(a: int, w: Permutation) -> Permutation:
    # s_a * w swaps the values a and a+1
    return Permutation(tuple(a + 1 if v == a else a if v == a + 1 else v for v in w.window))


def expand_by_leading_terms(f: Poly, n: int) -> SchubertExpansion:
    """
    Independent expansion by triangular elimination: under lex order with
    x_n most significant, the leading monomial of ``S_w`` is ``x^code(w)``.
    """
    by_code = {lehmer_code(w): w for w in all_permutations(n)}
    rest = reduce_mod_I(f, n)
    out: SchubertExpansion = {}
    while rest:
        parts = rest.split_x(n)
        lead = max(parts, key=lambda g: tuple(reversed(g)))
        w = by_code[lead]
        coeff = parts[lead]
        out[w] = out.get(w, Poly()) + coeff
        rest = rest - schubert(w) * coeff
    return {w: c for w, c in out.items() if c}


def expansion_to_poly(expansion: SchubertExpansion) -> Poly:
    total = Poly()
    for w, c in expansion.items():
        total = total + schubert(w) * c
    return total


def monk_product(w: Permutation, m: int) -> SchubertExpansion:
    """``(x_1 + ... + x_m) S_w`` as a sum of ``S_{w t(j,k)}`` over covers with j <= m < k."""
    if not 1 <= m < w.n:
        raise ValueError(f"m={m} outside 1..{w.n - 1}")
    return {w.swap_positions(j, k): Poly.constant(1)
            for j in range(1, m + 1)
            for k in range(m + 1, w.n + 1)
            if is_cover(w, j, k)}


def remark_operator(f: Poly, n: int) -> Poly:
    """
    ``y^rho * Delta(f / y^rho)`` for padded f, using Laurent exponents in y.

    The result is generally not padded; unpad and expand it to compare with
    the operator ``R``.
    """
    rho = staircase(n)
    y_rho = {Y(i): r for i, r in enumerate(rho, start=1)}
    down = Poly.monomial({v: -e for v, e in y_rho.items()})
    up = Poly.monomial(y_rho)
    return delta(f * down) * up


def _perm_key(w: Permutation):
    return (w.length, w.window)


def format_expansion(expansion: SchubertExpansion) -> str:
    if not expansion:
        return "0"
    pieces = []
    for w in sorted(expansion, key=_perm_key):
        c = expansion[w]
        if c == 1:
            pieces.append(f"S[{w}]")
        elif c.is_constant():
            pieces.append(f"{c}*S[{w}]")
        else:
            pieces.append(f"({c})*S[{w}]")
    return " + ".join(pieces)


def expansion_to_json(expansion: SchubertExpansion) -> dict[str, str]:
    return {str(w): str(expansion[w]) for w in sorted(expansion, key=_perm_key)}


def verify_padded_delta(n: int) -> Report:
    """Delta of each padded Schubert polynomial against the cover sum with weights ``1 + 2b``."""
    report = Report("prop22", n)
    top = comb(n, 2)
    for w in all_permutations(n):
        lhs = delta(padded_schubert(w))
        rhs = Poly()
        for cov in covers_up(w):
            rhs = rhs + padded_schubert(cov.upper).scale(1 + 2 * cov.b)
        report.add(f"prop22/w={w}", lhs == rhs, f"{len(covers_up(w))} covers")
        spec = lhs.evaluate(1)
        expect = (top - w.length) * principal_specialization(w)
        report.add(f"prop22/degree/w={w}", spec == expect, f"Delta(1..1)={spec}, expected {expect}")
    return report


def verify_monk(n: int) -> Report:
    report = Report("prop23", n)
    for w in all_permutations(n):
        s = schubert(w)
        for m in range(1, n):
            factor = sum((Poly.x(i) for i in range(1, m + 1)), Poly())
            direct = expand_in_schubert_basis(factor * s, n)
            rule = monk_product(w, m)
            report.add(f"prop23/w={w}/m={m}", direct == rule, format_expansion(rule))
    return report


def verify_macdonald(n: int) -> Report:
    report = Report("prop24", n)
    for w in all_permutations(n):
        ps = principal_specialization(w)
        mac = macdonald_sum(w)
        ps_inv = principal_specialization(w.inverse())
        ok = mac == ps == ps_inv
        report.add(f"prop24/w={w}", ok,
                   f"S_w(1)={ps}, macdonald={mac}, S_(w^-1)(1)={ps_inv}, words={len(reduced_words(w))}")
    return report
