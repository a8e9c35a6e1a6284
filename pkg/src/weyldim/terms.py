"""Terms and elements of a free module E = A_n^m with p simultaneous orders.

A term is theta * e_k for a normal monomial theta and a basis vector e_k
(generator indices are 1-based).  The i-th term order compares, in turn:
ord_i, the remaining blockwise orders by ascending block index, block i's
x exponents then d exponents, every other block's x then d exponents by
ascending block index, and finally the generator index (smaller index =
smaller term).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .errors import InputError, ZeroElementError
from .weyl import (
    ExponentPair,
    Partition,
    Vector,
    WeylElement,
    _check_vector,
    block_orders,
    mono_mul,
    vadd,
    vsub,
)


class Term(NamedTuple):
    gen: int
    theta: ExponentPair


class GammaTerm(NamedTuple):
    """Shape datum of an element: slack exponents d plus its first leader."""

    d: Vector
    head: Term


def monomial_key(i: int, theta: ExponentPair, P: Partition):
    """Comparison key of a monomial under the i-th order (i is 1-based)."""
    if not 1 <= i <= P.p:
        raise InputError(f"order index {i} out of range 1..{P.p}")
    alpha, beta = theta
    bo = block_orders(theta, P)
    j = i - 1
    key = [bo[j]]
    key.extend(bo[:j])
    key.extend(bo[j + 1:])
    a, b = P.blocks[j]
    key.extend(alpha[a:b])
    key.extend(beta[a:b])
    for k, (a, b) in enumerate(P.blocks):
        if k == j:
            continue
        key.extend(alpha[a:b])
        key.extend(beta[a:b])
    return tuple(key)


def term_key(i: int, t: Term, P: Partition):
    return monomial_key(i, t.theta, P) + (t.gen,)


def term_compare(i: int, u: Term, v: Term, P: Partition) -> int:
    """-1, 0, or 1 as u is below, equal to, or above v in the i-th order."""
    ku, kv = term_key(i, u, P), term_key(i, v, P)
    return (ku > kv) - (ku < kv)


def term_divides(v: Term, u: Term) -> ExponentPair | None:
    """Quotient monomial theta with theta * v = u commutatively, else None.

    Terms on different generators never divide one another.
    """
    if v.gen != u.gen:
        return None
    (va, vb), (ua, ub) = v.theta, u.theta
    if any(x > y for x, y in zip(va, ua)) or any(x > y for x, y in zip(vb, ub)):
        return None
    return ExponentPair(vsub(ua, va), vsub(ub, vb))


def term_lcm(u: Term, v: Term) -> Term | None:
    """Least common multiple; None encodes the zero lcm across generators."""
    if u.gen != v.gen:
        return None
    (ua, ub), (va, vb) = u.theta, v.theta
    alpha = tuple(max(x, y) for x, y in zip(ua, va))
    beta = tuple(max(x, y) for x, y in zip(ub, vb))
    return Term(u.gen, ExponentPair(alpha, beta))


class ModuleElement:
    """A finite rational combination of terms of A_n^m."""

    __slots__ = ("n", "m", "terms", "_leaders")

    def __init__(self, n: int, m: int, terms: Mapping[Term, Fraction] | Iterable):
        if m < 1:
            raise InputError(f"free module rank must be >= 1, got {m}")
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        clean: dict[Term, Fraction] = {}
        for key, c in items:
            c = Fraction(c)
            if c == 0:
                continue
            gen, theta = key
            if not 1 <= gen <= m:
                raise InputError(f"generator index {gen} out of range 1..{m}")
            alpha = _check_vector(theta[0], n, "alpha")
            beta = _check_vector(theta[1], n, "beta")
            t = Term(gen, ExponentPair(alpha, beta))
            c = clean.get(t, Fraction(0)) + c
            if c == 0:
                clean.pop(t, None)
            else:
                clean[t] = c
        self.n = n
        self.m = m
        self.terms = clean
        self._leaders: dict = {}

    @classmethod
    def zero(cls, n: int, m: int) -> "ModuleElement":
        return cls(n, m, {})

    @classmethod
    def single(cls, n: int, m: int, gen: int, alpha, beta, coeff=1) -> "ModuleElement":
        t = Term(gen, ExponentPair(tuple(alpha), tuple(beta)))
        return cls(n, m, {t: Fraction(coeff)})

    @classmethod
    def basis_vector(cls, n: int, m: int, gen: int) -> "ModuleElement":
        z = (0,) * n
        return cls.single(n, m, gen, z, z)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModuleElement)
            and (self.n, self.m) == (other.n, other.m)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.m, frozenset(self.terms.items())))

    def _check_compat(self, other: "ModuleElement"):
        if (self.n, self.m) != (other.n, other.m):
            raise InputError(
                f"mixed module shapes: ({self.n},{self.m}) vs ({other.n},{other.m})"
            )

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        self._check_compat(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            s = acc.get(k, Fraction(0)) + c
            if s == 0:
                acc.pop(k, None)
            else:
                acc[k] = s
        return ModuleElement(self.n, self.m, acc)

    def __neg__(self) -> "ModuleElement":
        return ModuleElement(self.n, self.m, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + (-other)

    def scale(self, c) -> "ModuleElement":
        c = Fraction(c)
        if c == 0:
            return ModuleElement.zero(self.n, self.m)
        return ModuleElement(self.n, self.m, {k: c * v for k, v in self.terms.items()})

    def coeff(self, t: Term) -> Fraction:
        return self.terms.get(t, Fraction(0))

    def sorted_terms(self, P: Partition) -> list[tuple[Term, Fraction]]:
        """Terms by descending first order; canonical for serialization."""
        return sorted(
            self.terms.items(), key=lambda kv: term_key(1, kv[0], P), reverse=True
        )

    def __repr__(self):
        if self.is_zero():
            return "ModuleElement(0)"
        bits = []
        for (gen, (alpha, beta)), c in sorted(self.terms.items()):
            xs = "".join(f"x{i+1}^{e}" for i, e in enumerate(alpha) if e)
            ds = "".join(f"d{i+1}^{e}" for i, e in enumerate(beta) if e)
            bits.append(f"{c}*{xs}{ds}e{gen}")
        return "ModuleElement(" + " + ".join(bits) + ")"


def leader(f: ModuleElement, i: int, P: Partition) -> tuple[Term, Fraction]:
    """Greatest term of f under the i-th order, with its coefficient."""
    if f.is_zero():
        raise ZeroElementError("leader of the zero element is undefined")
    cache_key = (P.sizes, i)
    hit = f._leaders.get(cache_key)
    if hit is not None:
        return hit
    best = max(f.terms, key=lambda t: term_key(i, t, P))
    out = (best, f.terms[best])
    f._leaders[cache_key] = out
    return out


def leader_term(f: ModuleElement, i: int, P: Partition) -> Term:
    return leader(f, i, P)[0]


def leading_coeff(f: ModuleElement, i: int, P: Partition) -> Fraction:
    return leader(f, i, P)[1]


def act(D: WeylElement, f: ModuleElement) -> ModuleElement:
    """Module action of an algebra element, componentwise on generators."""
    if D.n != f.n:
        raise InputError(f"mixed variable counts: {D.n} vs {f.n}")
    acc: dict[Term, Fraction] = {}
    for theta_d, cd in D.terms.items():
        for (gen, theta_f), cf in f.terms.items():
            c = cd * cf
            for key, w in mono_mul(theta_d, theta_f):
                t = Term(gen, key)
                s = acc.get(t, Fraction(0)) + c * w
                if s == 0:
                    acc.pop(t, None)
                else:
                    acc[t] = s
    return ModuleElement(f.n, f.m, acc)


def mono_act(theta: ExponentPair, gen_shift: Term) -> list[tuple[Term, int]]:
    """theta acting on a single term, expanded with integer weights."""
    gen, tau = gen_shift
    return [(Term(gen, key), w) for key, w in mono_mul(theta, tau)]


def rho(f: ModuleElement, P: Partition) -> GammaTerm:
    """Shape datum: per-order leader gaps d_i plus the first leader."""
    head = leader_term(f, 1, P)
    base = block_orders(head.theta, P)
    d = []
    for i in range(2, P.p + 1):
        ui = leader_term(f, i, P)
        d.append(block_orders(ui.theta, P)[i - 1] - base[i - 1])
    return GammaTerm(tuple(d), head)


def gamma_divides(g: GammaTerm, f: GammaTerm) -> bool:
    """Divisibility of shape data: heads divide, gaps componentwise <=."""
    if len(g.d) != len(f.d):
        raise InputError("shape data from different partitions")
    if term_divides(g.head, f.head) is None:
        return False
    return all(x <= y for x, y in zip(g.d, f.d))
