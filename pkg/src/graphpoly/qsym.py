"""Quasisymmetric functions in the monomial basis with coefficients in Z[q].

Two independent routes produce the weighted enumerator of an m-graph
polytope:

* ``psi`` works on the 1-uniform decorated graph, splitting it along each
  flag by ripping, sewing and truncating (``decorated``).
* ``fq_oracle`` works on the level hypergraph only, splitting it along each
  flag by restriction and contraction (``hyper``).

Neither imports anything from the other's pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import comb
from typing import Iterable, Iterator, Mapping

from . import decorated as dec
from .flags import Flag, enumerate_flags, flags_on
from .graphcore import SimpleGraph, is_connected, longest_induced_path
from .hyper import Hypergraph, rank, split_by_flag_h

Composition = tuple[int, ...]


class InconsistentResult(ArithmeticError):
    """An internal invariant failed; indicates a bug upstream."""


@dataclass(frozen=True)
class QPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "QPolynomial":
        return cls((0,) * power + (coeff,))

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __neg__(self):
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, q: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * q + c
        return total

    def substitute_neg(self) -> "QPolynomial":
        """p(-q)."""
        return QPolynomial(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if mono and abs(c) == 1:
                term = ("-" if c < 0 else "") + mono
            else:
                term = f"{c}{mono}"
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


class QSymElement:
    """Homogeneous element sum_alpha c_alpha(q) M_alpha of degree ``degree``."""

    def __init__(self, degree: int, terms: Mapping[Composition, QPolynomial] | None = None):
        self.degree = degree
        self.terms: dict[Composition, QPolynomial] = {}
        for alpha, p in (terms or {}).items():
            self.add(alpha, p)

    def add(self, alpha: Composition, p: QPolynomial) -> None:
        alpha = tuple(alpha)
        if sum(alpha) != self.degree or any(a < 1 for a in alpha):
            raise ValueError(f"{alpha} is not a composition of {self.degree}")
        new = self.terms.get(alpha, QPolynomial()) + p
        if new:
            self.terms[alpha] = new
        else:
            self.terms.pop(alpha, None)

    def __add__(self, other: "QSymElement") -> "QSymElement":
        if other.degree != self.degree:
            raise ValueError("degrees differ")
        out = QSymElement(self.degree, self.terms)
        for alpha, p in other.terms.items():
            out.add(alpha, p)
        return out

    def coefficient(self, alpha: Iterable[int]) -> QPolynomial:
        return self.terms.get(tuple(alpha), QPolynomial())

    def items(self) -> Iterator[tuple[Composition, QPolynomial]]:
        return iter(sorted(self.terms.items()))

    def __eq__(self, other):
        return isinstance(other, QSymElement) and self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for alpha, p in self.items():
            name = "M_" + ",".join(map(str, alpha))
            out.append(f"({p}){name}")
        return " + ".join(out)


def monomial(alpha: Iterable[int], coeff: int = 1) -> QSymElement:
    alpha = tuple(alpha)
    return QSymElement(sum(alpha), {alpha: QPolynomial((coeff,))})


def from_constants(degree: int, coeffs: Mapping[Composition, int]) -> QSymElement:
    return QSymElement(degree, {a: QPolynomial((c,)) for a, c in coeffs.items()})


def psi_decorated(gw: dec.DecoratedGraph, m: int) -> QSymElement:
    """Flag sum of q^{rk_m} M_type for a decorated graph."""
    if m < 1:
        raise ValueError("level m must be >= 1")
    n = gw.n
    if n == 0:
        raise ValueError("psi needs at least one vertex")

    @cache
    def block_size_minus_components(prev: int, cur: int) -> int:
        part = dec.split_block(gw, prev, cur, m)
        return part.n - dec.n_components(part)

    counts: dict[Composition, dict[int, int]] = {}
    for f in flags_on(gw.ground):
        rk = sum(block_size_minus_components(p, c) for p, c in f.steps())
        by_rank = counts.setdefault(f.type(), {})
        by_rank[rk] = by_rank.get(rk, 0) + 1
    return _collect(n, counts)


def psi(g: SimpleGraph, m: int) -> QSymElement:
    return psi_decorated(dec.uniform(g), m)


def fq_oracle(h: Hypergraph) -> QSymElement:
    """Flag sum of q^{rk(H/F)} M_type computed from hypergraph splittings."""
    if h.n < 1:
        raise ValueError("hypergraph needs n >= 1")
    counts: dict[Composition, dict[int, int]] = {}
    for f in enumerate_flags(h.n):
        rk = rank(split_by_flag_h(h, f))
        by_rank = counts.setdefault(f.type(), {})
        by_rank[rk] = by_rank.get(rk, 0) + 1
    return _collect(h.n, counts)


def _collect(n: int, counts: dict[Composition, dict[int, int]]) -> QSymElement:
    out = QSymElement(n)
    for alpha, by_rank in counts.items():
        top = max(by_rank)
        out.add(alpha, QPolynomial(tuple(by_rank.get(i, 0) for i in range(top + 1))))
    return out


def specialize_q(e: QSymElement, q0: int) -> QSymElement:
    return QSymElement(e.degree, {a: QPolynomial((p(q0),)) for a, p in e.terms.items()})


def constant_terms(e: QSymElement) -> dict[Composition, int]:
    """Coefficients of ``specialize_q(e, 0)`` as a plain dict."""
    return {a: p.coeffs[0] for a, p in specialize_q(e, 0).items()}


def f_polynomial(e: QSymElement) -> tuple[int, ...]:
    """Face numbers f_0, f_1, ... via the principal specialization at -1.

    ps^1(M_alpha)(x) = binomial(x, len(alpha)), which is (-1)^len(alpha) at x = -1.
    """
    total = QPolynomial()
    for alpha, p in e.terms.items():
        p_neg = p.substitute_neg()
        total = total + (p_neg if len(alpha) % 2 == 0 else -p_neg)
    if e.degree % 2:
        total = -total
    if not total.coeffs or any(c < 0 for c in total.coeffs):
        raise InconsistentResult(f"face numbers {total.coeffs} are not nonnegative")
    return total.coeffs


def stabilization_index(g: SimpleGraph) -> int:
    """Level after which psi(g, k) stops changing: longest induced path size minus one."""
    if g.n < 2:
        raise ValueError("stabilization needs n >= 2")
    if not is_connected(g):
        raise ValueError("stabilization is defined for connected graphs")
    return longest_induced_path(g) - 1


def ordered_bell(n: int) -> int:
    """Number of flags on [n] via a(n) = sum_k C(n,k) a(n-k)."""
    a = [1]
    for i in range(1, n + 1):
        a.append(sum(comb(i, k) * a[i - k] for k in range(1, i + 1)))
    return a[n]


__all__ = [
    "Composition", "Flag", "InconsistentResult", "QPolynomial", "QSymElement", "constant_terms",
    "enumerate_flags", "f_polynomial", "fq_oracle", "from_constants", "monomial", "ordered_bell",
    "psi", "psi_decorated", "specialize_q", "stabilization_index",
]
