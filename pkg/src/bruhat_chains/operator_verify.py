"""
Linear operators on the Schubert basis of the coinvariant algebra.

Operators are stored column-sparse: ``columns[w]`` is the expansion of the
image of ``S_w``.  Entries are polynomials in alpha and z.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from math import comb, factorial, prod

from .bruhat import covers_up
from .chainsum import chain_table, preset, stembridge_product, weight
from .permcore import Permutation, all_permutations, identity, longest_element
from .polyring import ALPHA, Z, Poly, power_sum, reduce_mod_I
from .report import Report
from .schubert import (SchubertExpansion, delta, delta_on_quotient,
                       expand_in_schubert_basis, pad, principal_specialization,
                       schubert, staircase, unpad)

__all__ = [
    "SchubertOperator", "operator_M", "operator_R", "operator_Delta_matrix",
    "delta_matrix_via_quotient", "multiplication_operator", "operator_Mk",
    "operator_M_plus_zR", "beta", "mk_element", "verify_lemma", "LEMMAS",
]

LEMMAS = ("L31", "L32", "L33", "L34", "L41")


def _add_into(acc: dict, key, value: Poly) -> None:
    total = acc.get(key, Poly()) + value
    if total:
        acc[key] = total
    else:
        acc.pop(key, None)


class SchubertOperator:
    def __init__(self, n: int, columns: dict[Permutation, SchubertExpansion] | None = None):
        self.n = n
        self.columns = {}
        for w, col in (columns or {}).items():
            clean = {u: Poly.lift(c) for u, c in col.items() if c}
            if clean:
                self.columns[w] = clean

    @classmethod
    def identity(cls, n: int) -> SchubertOperator:
        return cls(n, {w: {w: Poly.constant(1)} for w in all_permutations(n)})

    def column(self, w: Permutation) -> SchubertExpansion:
        return dict(self.columns.get(w, {}))

    def entry(self, u: Permutation, w: Permutation) -> Poly:
        return self.columns.get(w, {}).get(u, Poly())

    def apply(self, vector: SchubertExpansion) -> SchubertExpansion:
        out: dict = {}
        for w, coeff in vector.items():
            for u, entry in self.columns.get(w, {}).items():
                _add_into(out, u, entry * coeff)
        return out

    def __matmul__(self, other: SchubertOperator) -> SchubertOperator:
        return SchubertOperator(self.n, {w: self.apply(col) for w, col in other.columns.items()})

    def __add__(self, other: SchubertOperator) -> SchubertOperator:
        cols = {w: dict(col) for w, col in self.columns.items()}
        for w, col in other.columns.items():
            target = cols.setdefault(w, {})
            for u, c in col.items():
                _add_into(target, u, c)
        return SchubertOperator(self.n, cols)

    def scale(self, c) -> SchubertOperator:
        c = Poly.lift(c)
        return SchubertOperator(self.n, {w: {u: e * c for u, e in col.items()}
                                         for w, col in self.columns.items()})

    def __sub__(self, other: SchubertOperator) -> SchubertOperator:
        return self + other.scale(-1)

    def commutator(self, other: SchubertOperator) -> SchubertOperator:
        """``[self, other] = self*other - other*self``."""
        return self @ other - other @ self

    def subs(self, assignment: dict) -> SchubertOperator:
        return SchubertOperator(self.n, {w: {u: e.subs(assignment) for u, e in col.items()}
                                         for w, col in self.columns.items()})

    def __eq__(self, other):
        if not isinstance(other, SchubertOperator):
            return NotImplemented
        return self.n == other.n and self.columns == other.columns

    __hash__ = None

    def nnz(self) -> int:
        return sum(len(col) for col in self.columns.values())

    def __repr__(self):
        return f"SchubertOperator(n={self.n}, nnz={self.nnz()})"


def _alpha_range(i: int, j: int) -> Poly:
    return sum((Poly.alpha(k) for k in range(i, j)), Poly())


@lru_cache(maxsize=None)
def operator_M(n: int) -> SchubertOperator:
    return SchubertOperator(n, {w: {c.upper: _alpha_range(c.i, c.j) for c in covers_up(w)}
                                for w in all_permutations(n)})


@lru_cache(maxsize=None)
def operator_R(n: int) -> SchubertOperator:
    return SchubertOperator(n, {w: {c.upper: Poly.constant(c.b - c.d) for c in covers_up(w)}
                                for w in all_permutations(n)})


@lru_cache(maxsize=None)
def operator_Delta_matrix(n: int) -> SchubertOperator:
    return SchubertOperator(n, {w: {c.upper: Poly.constant(1 + 2 * c.b) for c in covers_up(w)}
                                for w in all_permutations(n)})


def delta_matrix_via_quotient(n: int) -> SchubertOperator:
    """Independent route to the Delta matrix: monomial rule, reduce, expand."""
    return SchubertOperator(n, {w: expand_in_schubert_basis(delta_on_quotient(schubert(w), n), n)
                                for w in all_permutations(n)})


def multiplication_operator(g: Poly, n: int) -> SchubertOperator:
    return SchubertOperator(n, {w: expand_in_schubert_basis(g * schubert(w), n)
                                for w in all_permutations(n)})


@lru_cache(maxsize=None)
def operator_Mk(n: int, k: int) -> SchubertOperator:
    """``M_1 = M`` and ``M_{k+1} = [M_k, R]``."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return operator_M(n)
    return operator_Mk(n, k - 1).commutator(operator_R(n))


@lru_cache(maxsize=None)
def operator_M_plus_zR(n: int) -> SchubertOperator:
    return operator_M(n) + operator_R(n).scale(Poly.z())


def beta(i: int, n: int) -> Poly:
    """``alpha_i + ... + alpha_{n-1}``."""
    return _alpha_range(i, n)


def mk_element(n: int, k: int) -> Poly:
    """``(k-1)! * sum_{i<n} beta_i x_i^k``."""
    total = sum((beta(i, n) * Poly.x(i) ** k for i in range(1, n)), Poly())
    return total.scale(factorial(k - 1))


def _partitions(total: int, largest: int | None = None):
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def _random_x_poly(rng: random.Random, n: int, terms: int, max_exp: int) -> Poly:
    out = Poly()
    for _ in range(terms):
        gamma = [rng.randint(0, max_exp) for _ in range(n)]
        out = out + Poly.x_monomial(gamma, rng.randint(-3, 3))
    return out


def _lemma31(n: int, seed: int) -> Report:
    report = Report("L31", n, key="lemma")
    rng = random.Random(seed)
    for k in range(1, 5):
        for trial in range(4):
            gamma = tuple(rng.randint(0, n) for _ in range(n))
            gen = power_sum(k, n) * Poly.x_monomial(gamma)
            out = delta_on_quotient(gen, n)
            report.add(f"L31/generator/p{k}/{trial}", not out, f"x^{gamma}: {out}")
    for trial in range(6):
        f = _random_x_poly(rng, n, 4, n)
        h = _random_x_poly(rng, n, 3, n - 1)
        g = f + power_sum(rng.randint(1, 4), n) * h
        same = delta_on_quotient(f, n) == delta_on_quotient(g, n)
        report.add(f"L31/representative/{trial}", same, "f and f + p_k*h give equal images")
    rho = staircase(n)
    bad = 0
    count = 0
    for gamma in itertools.product(*(range(r + 1) for r in rho)):
        mono = Poly.x_monomial(gamma)
        via_y = unpad(delta(pad(mono, n)))
        formula = sum((Poly.x(i).scale(n - i - gamma[i - 1]) for i in range(1, n + 1)), Poly()) * mono
        count += 1
        if via_y != formula:
            bad += 1
    report.add("L31/padded-agrees", bad == 0, f"{count} sub-staircase monomials, {bad} mismatches")
    return report


def _lemma32(n: int) -> Report:
    report = Report("L32", n, key="lemma")
    for k in range(1, comb(n, 2) + 1):
        lhs = operator_Mk(n, k)
        rhs = multiplication_operator(mk_element(n, k), n)
        report.add(f"L32/k={k}", lhs == rhs, f"nnz={lhs.nnz()}")
    ones = {ALPHA(i): 1 for i in range(1, n)}
    weights = sum((Poly.x(i).scale(n - i) for i in range(1, n)), Poly())
    decomposition = operator_Delta_matrix(n) - multiplication_operator(weights, n)
    report.add("L32/R=Delta-rho.x", decomposition == operator_R(n), "R column check")
    report.add("L32/M(1)=rho.x", operator_M(n).subs(ones) == multiplication_operator(weights, n),
               "M at alpha=1")
    report.add("L32/Delta-two-routes", operator_Delta_matrix(n) == delta_matrix_via_quotient(n),
               "cover weights 1+2b vs monomial rule")
    return report


def _lemma33(n: int) -> Report:
    report = Report("L33", n, key="lemma")
    top = comb(n, 2)
    elements = {k: mk_element(n, k) for k in range(1, top + 1)}
    for parts in _partitions(top):
        if parts == (1,) * top:
            continue
        product = prod((elements[k] for k in parts), start=Poly.constant(1))
        reduced = reduce_mod_I(product, n)
        label = "+".join(map(str, parts))
        report.add(f"L33/{label}", not reduced, f"{len(product)} terms before reduction")
    return report


def _lemma34(n: int) -> Report:
    report = Report("L34", n, key="lemma")
    top = comb(n, 2)
    e, w0 = identity(n), longest_element(n)
    mz = operator_M_plus_zR(n)
    m = operator_M(n)
    v_mz = {e: Poly.constant(1)}
    v_m = {e: Poly.constant(1)}
    thm13 = preset("thm13")
    for step in range(1, top + 1):
        v_mz = mz.apply(v_mz)
        v_m = m.apply(v_m)
        # coefficient of S_u after `step` applications is the chain count e -> u
        ok = all(v_mz.get(u, Poly()) == chain_table(thm13, u)[e]
                 for u in all_permutations(n) if u.length == step)
        report.add(f"L34/iterate/{step}", ok, "coefficients match weighted chain counts")
    support_ok = set(v_mz) <= {w0} and set(v_m) <= {w0}
    c_mz = v_mz.get(w0, Poly())
    c_m = v_m.get(w0, Poly())
    report.add("L34/top", support_ok and c_mz == c_m and c_mz.degree_in(Z) == 0, str(c_mz))
    report.add("L34/stembridge", c_m == stembridge_product(n), "coefficient equals the root product")
    col_ok = all(mz.entry(c.upper, w) == weight(thm13, c)
                 for w in all_permutations(n) for c in covers_up(w))
    report.add("L34/matrix=weights", col_ok, "(M+zR) entries are the thm13 edge weights")
    report.add("L34/R.1=0", not operator_R(n).column(e), "R annihilates S_e")
    return report


def _lemma41(n: int) -> Report:
    report = Report("L41", n, key="lemma")
    top = comb(n, 2)
    z = Poly.z()
    table = chain_table(preset("thm14"), longest_element(n))
    for w in all_permutations(n):
        ups = covers_up(w)
        total = sum(principal_specialization(c.upper) * (c.b - c.c) for c in ups)
        report.add(f"L41/w={w}", total == 0, f"sum={total} over {len(ups)} covers")
        if not ups:
            continue
        # the induction step, term by term
        scale = factorial(top - w.length - 1)
        first = scale * sum(principal_specialization(c.upper) * (1 + 2 * c.b) for c in ups)
        second = z.scale(scale * total)
        lhs = sum((weight(preset("thm14"), c) * table[c.upper] for c in ups), Poly())
        ok = (lhs == first - second and not second
              and first == factorial(top - w.length) * principal_specialization(w))
        report.add(f"L41/induction/w={w}", ok, f"m={lhs}, first={first}")
    return report


def verify_lemma(which: str, n: int, seed: int = 0) -> Report:
    which = which.upper().replace("LEM", "L")
    if which == "L31":
        return _lemma31(n, seed)
    if which == "L32":
        return _lemma32(n)
    if which == "L33":
        return _lemma33(n)
    if which == "L34":
        return _lemma34(n)
    if which == "L41":
        return _lemma41(n)
    raise ValueError(f"unknown lemma {which!r}; expected one of {LEMMAS}")
