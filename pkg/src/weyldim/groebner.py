"""Groebner bases of A_n^m submodules under several simultaneous orders.

Reduction eliminates the greatest eligible term under the head order while
respecting order caps taken from the tail orders.  Completion runs staged
from the last order down to the first; every nonzero reduced S-element is
inserted and re-opens the pair queues of its stage and all later stages.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import InputError, WeylDimError, ZeroElementError
from .terms import (
    GammaTerm,
    ModuleElement,
    Term,
    act,
    block_orders,
    leader,
    leader_term,
    rho,
    term_divides,
    term_key,
    term_lcm,
)
from .weyl import ExponentPair, Partition, WeylElement


class OrderSequence(NamedTuple):
    """A head order plus the tail orders constraining each reduction step."""

    head: int
    tail: tuple[int, ...]

    def check(self, p: int):
        seen = {self.head, *self.tail}
        if len(seen) != 1 + len(self.tail):
            raise InputError(f"order sequence repeats an index: {self}")
        if any(not 1 <= i <= p for i in seen):
            raise InputError(f"order sequence {self} out of range 1..{p}")


def suffix_sequence(r: int, p: int) -> OrderSequence:
    """The sequence (<_r, <_{r+1}, ..., <_p)."""
    return OrderSequence(r, tuple(range(r + 1, p + 1)))


def full_sequence(p: int) -> OrderSequence:
    return suffix_sequence(1, p)


def _eligible(
    w: Term,
    g: ModuleElement,
    seq: OrderSequence,
    caps: Sequence[int],
    P: Partition,
) -> ExponentPair | None:
    """Quotient theta if g can eliminate w within the tail order caps."""
    q = term_divides(leader_term(g, seq.head, P), w)
    if q is None:
        return None
    if seq.tail:
        qbo = block_orders(q, P)
        for pos, i in enumerate(seq.tail):
            gi = block_orders(leader_term(g, i, P).theta, P)[i - 1]
            if qbo[i - 1] + gi > caps[pos]:
                return None
    return q


def is_reduced(
    f: ModuleElement, g: ModuleElement, seq: OrderSequence, P: Partition
) -> bool:
    """True when no term of f is eliminable by g under seq."""
    seq.check(P.p)
    if f.is_zero():
        return True
    if g.is_zero():
        raise ZeroElementError("reduction against the zero element")
    caps = [
        block_orders(leader_term(f, i, P).theta, P)[i - 1] for i in seq.tail
    ]
    return all(_eligible(w, g, seq, caps, P) is None for w in f.terms)


def multi_reduce(
    f: ModuleElement,
    G: Sequence[ModuleElement],
    seq: OrderSequence,
    P: Partition,
) -> tuple[ModuleElement, list[WeylElement]]:
    """Remainder of f modulo G under seq, with quotients.

    Deterministic: each step removes the greatest eligible term under the
    head order, using the reducer with the greatest head leader (smallest
    list position on ties).  The identity f = sum Q_i g_i + remainder
    holds exactly.
    """
    seq.check(P.p)
    if any(g.is_zero() for g in G):
        raise ZeroElementError("zero element among the reducers")
    n, m = f.n, f.m
    for g in G:
        f._check_compat(g)
    quotients = [WeylElement.zero(n) for _ in G]
    work = f
    while not work.is_zero():
        caps = [
            block_orders(leader_term(work, i, P).theta, P)[i - 1] for i in seq.tail
        ]
        chosen = None
        for w in sorted(
            work.terms, key=lambda t: term_key(seq.head, t, P), reverse=True
        ):
            cands = []
            for idx, g in enumerate(G):
                q = _eligible(w, g, seq, caps, P)
                if q is not None:
                    lk = term_key(seq.head, leader_term(g, seq.head, P), P)
                    cands.append((lk, -idx, idx, q))
            if cands:
                _, _, idx, q = max(cands)
                chosen = (w, idx, q)
                break
        if chosen is None:
            break
        w, idx, q = chosen
        g = G[idx]
        factor = work.terms[w] / leader(g, seq.head, P)[1]
        step = WeylElement.monomial(n, q.alpha, q.beta, factor)
        quotients[idx] = quotients[idx] + step
        work = work - act(step, g)
    return work, quotients


def s_element(
    f: ModuleElement, g: ModuleElement, r: int, P: Partition
) -> ModuleElement:
    """The critical difference of f and g with respect to the r-th order.

    Zero when the r-th leaders sit on different generators.
    """
    if f.is_zero() or g.is_zero():
        raise ZeroElementError("critical pair with a zero element")
    f._check_compat(g)
    uf, cf = leader(f, r, P)
    ug, cg = leader(g, r, P)
    lcm = term_lcm(uf, ug)
    if lcm is None:
        return ModuleElement.zero(f.n, f.m)
    qf = term_divides(uf, lcm)
    qg = term_divides(ug, lcm)
    left = act(WeylElement.monomial(f.n, qf.alpha, qf.beta, 1 / cf), f)
    right = act(WeylElement.monomial(g.n, qg.alpha, qg.beta, 1 / cg), g)
    return left - right


class GroebnerBasis:
    """A completed basis with cached leader data and certification marks."""

    def __init__(
        self,
        elements: Sequence[ModuleElement],
        P: Partition,
        m: int,
        certified: Sequence[int],
        provenance: Sequence[Sequence[WeylElement]] | None = None,
    ):
        self.P = P
        self.m = m
        self.n = P.n
        self.elements = tuple(elements)
        self.certified = tuple(sorted(certified))
        # element t as a combination of the input family: sum_i prov[t][i] * gen_i
        self.provenance = (
            tuple(tuple(row) for row in provenance) if provenance is not None else None
        )
        for g in self.elements:
            if g.is_zero():
                raise ZeroElementError("zero element in a basis")
            if (g.n, g.m) != (self.n, m):
                raise InputError("basis element shape mismatch")
        self.leaders = tuple(
            tuple(leader(g, i, P) for i in range(1, P.p + 1)) for g in self.elements
        )
        self.rho = tuple(rho(g, P) for g in self.elements)
        # order shifts: b[i][j] for the first leader, c[i][j] for the i-th
        self.b = tuple(
            tuple(block_orders(ld[0][0].theta, P)[i] for ld in self.leaders)
            for i in range(P.p)
        )
        self.c = tuple(
            tuple(block_orders(ld[i][0].theta, P)[i] for ld in self.leaders)
            for i in range(P.p)
        )

    def fully_certified(self) -> bool:
        return self.certified == tuple(range(1, self.P.p + 1))


def is_groebner(G: GroebnerBasis, r: int) -> bool:
    """Check the stage-r criterion: pairwise S-elements reduce to zero.

    Meaningful once the later stages r+1..p already hold.
    """
    if not 1 <= r <= G.P.p:
        raise InputError(f"stage {r} out of range 1..{G.P.p}")
    seq = suffix_sequence(r, G.P.p)
    els = G.elements
    for a in range(len(els)):
        for b in range(a + 1, len(els)):
            s = s_element(els[a], els[b], r, G.P)
            if s.is_zero():
                continue
            rem, _ = multi_reduce(s, els, seq, G.P)
            if not rem.is_zero():
                return False
    return True


def complete_basis(
    generators: Sequence[ModuleElement],
    P: Partition,
    m: int | None = None,
    max_elements: int = 500,
) -> GroebnerBasis:
    """Complete the given relations to a basis certified for every stage.

    Inserted elements are fully reduced remainders, made monic under the
    first order.  Raises if the basis grows past max_elements.
    """
    gens = [g for g in generators if not g.is_zero()]
    if m is None:
        if not gens:
            raise InputError("cannot infer module rank from an empty family")
        m = gens[0].m
    for g in gens:
        if (g.n, g.m) != (P.n, m):
            raise InputError("generator shape mismatch")
    p = P.p
    n = P.n
    G: list[ModuleElement] = []
    prov: list[list[WeylElement]] = []
    for i, g in enumerate(gens):
        c = leader(g, 1, P)[1]
        G.append(g.scale(1 / c))
        row = [WeylElement.zero(n) for _ in gens]
        row[i] = WeylElement.one(n).scale(1 / c)
        prov.append(row)
    pending: dict[int, list] = {
        r: [(a, b) for a in range(len(G)) for b in range(a + 1, len(G))]
        for r in range(1, p + 1)
    }
    while True:
        stage = 0
        for r in range(p, 0, -1):
            if pending[r]:
                stage = r
                break
        if stage == 0:
            break
        a, b = pending[stage].pop(0)
        s = s_element(G[a], G[b], stage, P)
        if s.is_zero():
            continue
        rem, quots = multi_reduce(s, G, suffix_sequence(stage, p), P)
        if rem.is_zero():
            continue
        ua, ca = leader(G[a], stage, P)
        ub, cb = leader(G[b], stage, P)
        lcm = term_lcm(ua, ub)
        qa = term_divides(ua, lcm)
        qb = term_divides(ub, lcm)
        ta = WeylElement.monomial(n, qa.alpha, qa.beta, 1 / ca)
        tb = WeylElement.monomial(n, qb.alpha, qb.beta, 1 / cb)
        row = [ta * x - tb * y for x, y in zip(prov[a], prov[b])]
        for Q, pr in zip(quots, prov):
            if Q.is_zero():
                continue
            row = [x - Q * y for x, y in zip(row, pr)]
        c = leader(rem, 1, P)[1]
        G.append(rem.scale(1 / c))
        prov.append([x.scale(1 / c) for x in row])
        if len(G) > max_elements:
            raise WeylDimError(
                f"basis exceeded {max_elements} elements; presentation too large"
            )
        t = len(G) - 1
        for r in range(1, p + 1):
            pending[r].extend((k, t) for k in range(t))
    basis = GroebnerBasis(G, P, m, certified=[], provenance=prov)
    certified = []
    for r in range(p, 0, -1):
        if not is_groebner(basis, r):
            raise WeylDimError(f"completion failed certification at stage {r}")
        certified.append(r)
    return GroebnerBasis(G, P, m, certified=certified, provenance=prov)


def provenance_orders(G: GroebnerBasis) -> tuple[int, ...]:
    """Componentwise order bound over all provenance coefficients.

    Any kernel element supported inside the box r is a combination of
    relation multiples theta * gen_i with ord_j(theta) <= r_j + bound_j,
    because reduction by a certified basis keeps quotients inside the box
    and each basis element sits within the bound of the input family.
    """
    if G.provenance is None:
        raise InputError("basis carries no provenance data")
    out = [0] * G.P.p
    for row in G.provenance:
        for D in row:
            for theta in D.terms:
                for j, v in enumerate(block_orders(theta, G.P)):
                    if v > out[j]:
                        out[j] = v
    return tuple(out)


def membership(f: ModuleElement, G: GroebnerBasis) -> bool:
    """Whether f lies in the submodule generated by the basis."""
    if not G.fully_certified():
        raise InputError("membership needs a basis certified for all stages")
    if f.is_zero():
        return True
    if not G.elements:
        return False
    rem, _ = multi_reduce(f, G.elements, full_sequence(G.P.p), G.P)
    return rem.is_zero()
