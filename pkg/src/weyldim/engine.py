"""Dimension polynomials of finitely presented modules over A_n.

Pipeline: complete the relations to a multi-order Groebner basis, count
the box terms that survive reduction (split into staircase-complement
and overshoot parts), and pin the unique numerical polynomial matching
those counts for all large bounds.  Every computed polynomial is
re-verified against explicit enumeration before it is returned.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

import numpy as np

from .errors import ConvergenceError, InputError, VerificationError
from .groebner import GroebnerBasis, complete_basis
from .kernels import block_sum_matrix, box_vectors, classify_box
from .numpoly import (
    IndexSet,
    InvariantReport,
    MonoPoly,
    NumericalPolynomial,
    canonicalize,
    interpolate,
    invariant_set,
    mp_add,
    mp_mul,
    mp_scale,
    omega,
    shifted_binomial,
)
from .terms import ModuleElement, term_lcm
from .weyl import ExponentPair, Partition, weyl_dimension


@dataclass(frozen=True)
class Presentation:
    """A free module A_n^m with a finite family of relations."""

    P: Partition
    m: int
    relations: tuple[ModuleElement, ...]

    def __post_init__(self):
        if self.m < 1:
            raise InputError(f"module rank must be >= 1, got {self.m}")
        for f in self.relations:
            if (f.n, f.m) != (self.P.n, self.m):
                raise InputError("relation shape does not match the presentation")


def pack_exponents(theta: ExponentPair, P: Partition) -> tuple[int, ...]:
    """Exponents rearranged blockwise: block j's x then d entries."""
    alpha, beta = theta
    out: list[int] = []
    for a, b in P.blocks:
        out.extend(alpha[a:b])
        out.extend(beta[a:b])
    return tuple(out)


def _doubled_sizes(P: Partition) -> tuple[int, ...]:
    return tuple(2 * s for s in P.sizes)


def _leader_arrays(G: GroebnerBasis):
    """Per generator: packed first-leader rows and their order slacks."""
    cached = getattr(G, "_leader_arrays_cache", None)
    if cached is not None:
        return cached
    P = G.P
    by_gen: dict[int, list[int]] = {}
    for j, ld in enumerate(G.leaders):
        by_gen.setdefault(ld[0][0].gen, []).append(j)
    q = 2 * P.n
    out = {}
    for gen, idxs in by_gen.items():
        L = np.array(
            [pack_exponents(G.leaders[j][0][0].theta, P) for j in idxs],
            dtype=np.int64,
        ).reshape(len(idxs), q)
        SL = np.array(
            [[G.c[i][j] - G.b[i][j] for i in range(P.p)] for j in idxs],
            dtype=np.int64,
        ).reshape(len(idxs), P.p)
        out[gen] = (L, SL)
    G._leader_arrays_cache = out
    return out


def count_UVW(G: GroebnerBasis, m: int, r: Sequence[int]) -> tuple[int, int, int]:
    """Exact counts (cardV, cardV', cardU) of surviving box terms.

    V collects box terms divisible by no first leader; V' collects first
    leader multiples whose every dividing leader overshoots some later
    order bound.  U is their disjoint union and spans M_r.
    """
    P = G.P
    r = tuple(r)
    if len(r) != P.p:
        raise InputError(f"r has length {len(r)}, expected {P.p}")
    if any(v < 0 for v in r):
        return 0, 0, 0
    sizes2 = _doubled_sizes(P)
    V = box_vectors(sizes2, r)
    BS = block_sum_matrix(V, sizes2)
    arrays = _leader_arrays(G)
    empty_L = np.empty((0, 2 * P.n), dtype=np.int64)
    empty_SL = np.empty((0, P.p), dtype=np.int64)
    card_v = 0
    card_vp = 0
    for gen in range(1, m + 1):
        L, SL = arrays.get(gen, (empty_L, empty_SL))
        v, vp = classify_box(V, BS, L, SL, r)
        card_v += v
        card_vp += vp
    return card_v, card_vp, card_v + card_vp


def _omega_part(G: GroebnerBasis, m: int) -> NumericalPolynomial:
    P = G.P
    sizes2 = _doubled_sizes(P)
    by_gen: dict[int, list[tuple[int, ...]]] = {k: [] for k in range(1, m + 1)}
    for ld in G.leaders:
        head = ld[0][0]
        by_gen[head.gen].append(pack_exponents(head.theta, P))
    total = NumericalPolynomial.zero(P.p)
    for gen in range(1, m + 1):
        total = total + omega(IndexSet(tuple(sorted(by_gen[gen])), sizes2))
    return total


def _psi_symbolic(G: GroebnerBasis) -> NumericalPolynomial:
    """Closed-form overshoot count when first leaders never overlap."""
    P = G.P
    p = P.p
    sizes2 = _doubled_sizes(P)
    acc: MonoPoly = {}
    later = list(range(1, p))  # order positions 2..p, 0-based
    for j in range(len(G.elements)):
        for size in range(1, p):
            for K in itertools.combinations(later, size):
                term: MonoPoly = {(0,) * p: Fraction(1)}
                for i in range(p):
                    c_f = shifted_binomial(p, i, sizes2[i] - G.c[i][j], sizes2[i])
                    if i in K:
                        b_f = shifted_binomial(
                            p, i, sizes2[i] - G.b[i][j], sizes2[i]
                        )
                        factor = mp_add(b_f, mp_scale(c_f, -1))
                    else:
                        factor = c_f
                    term = mp_mul(term, factor)
                acc = mp_add(acc, term)
    return canonicalize(acc, p)


def _symbolic_applicable(G: GroebnerBasis) -> bool:
    heads = [ld[0][0] for ld in G.leaders]
    for a in range(len(heads)):
        for b in range(a + 1, len(heads)):
            if term_lcm(heads[a], heads[b]) is not None:
                return False
    return True


def _base_threshold(G: GroebnerBasis) -> tuple[int, ...]:
    """Starting bounds past which all closed-form counts are exact."""
    P = G.P
    sizes2 = _doubled_sizes(P)
    by_gen: dict[int, list[tuple[int, ...]]] = {}
    for ld in G.leaders:
        head = ld[0][0]
        by_gen.setdefault(head.gen, []).append(pack_exponents(head.theta, P))
    out = []
    cum = [0]
    for s in sizes2:
        cum.append(cum[-1] + s)
    for j in range(P.p):
        c_max = max(G.c[j], default=0)
        stair = 0
        for packs in by_gen.values():
            width = range(cum[j], cum[j + 1])
            stair = max(
                stair, sum(max(a[h] for a in packs) for h in width) - sizes2[j]
            )
        out.append(1 + max(c_max, stair, 0))
    return tuple(out)


@dataclass(frozen=True)
class DimensionReport:
    """Everything the engine certifies about one presentation."""

    presentation: Presentation
    basis: GroebnerBasis
    phi: NumericalPolynomial
    omega_part: NumericalPolynomial
    psi_part: NumericalPolynomial
    psi_path: str
    holonomic: bool
    module_is_zero: bool
    invariants: InvariantReport
    verified_points: tuple[tuple[tuple[int, ...], int], ...]
    threshold: tuple[int, ...]


def dimension_polynomial(
    pres: Presentation,
    psi_path: str = "auto",
    max_enlarge: int = 8,
) -> DimensionReport:
    """Compute and verify the dimension polynomial of a presentation.

    psi_path picks how the overshoot part is obtained: "symbolic" needs
    pairwise non-overlapping first leaders, "interpolation" samples
    counts on a grid, "auto" prefers symbolic when applicable.  The
    result is accepted only after the full polynomial reproduces the
    enumerated counts on the sample grid plus two extra points per axis.
    """
    P = pres.P
    p = P.p
    G = complete_basis(pres.relations, P, m=pres.m)
    omega_p = _omega_part(G, pres.m)
    symbolic_ok = _symbolic_applicable(G)
    if psi_path == "auto":
        path = "symbolic" if symbolic_ok else "interpolation"
    elif psi_path == "symbolic":
        if not symbolic_ok:
            raise InputError("symbolic path needs non-overlapping first leaders")
        path = "symbolic"
    elif psi_path == "interpolation":
        path = "interpolation"
    else:
        raise InputError(f"unknown psi_path {psi_path!r}")
    sizes2 = _doubled_sizes(P)
    base = _base_threshold(G)
    psi_sym = _psi_symbolic(G) if path == "symbolic" else None
    counts_cache: dict[tuple[int, ...], tuple[int, int, int]] = {}

    def counts_at(r: tuple[int, ...]) -> tuple[int, int, int]:
        if r not in counts_cache:
            counts_cache[r] = count_UVW(G, pres.m, r)
        return counts_cache[r]

    for attempt in range(max_enlarge + 1):
        R0 = tuple(b + attempt for b in base)
        axes = [range(R0[j], R0[j] + sizes2[j] + 1) for j in range(p)]
        grid = [tuple(pt) for pt in itertools.product(*axes)]
        corner = tuple(R0[j] + sizes2[j] for j in range(p))
        extras = []
        for j in range(p):
            for bump in (1, 2):
                pt = list(corner)
                pt[j] += bump
                extras.append(tuple(pt))
        if path == "symbolic":
            psi = psi_sym
        else:
            mono = interpolate(R0, sizes2, lambda r: counts_at(r)[1])
            psi = canonicalize(mono, p)
        phi = omega_p + psi
        sample = grid + extras
        if all(phi.eval(r) == counts_at(r)[2] for r in sample):
            verified = tuple((r, counts_at(r)[2]) for r in sample)
            break
    else:
        raise ConvergenceError(
            "stabilization threshold not found within the enlargement budget"
        )
    zero = phi.is_zero()
    if not zero:
        d, per, _ = phi.degree_data()
        n = P.n
        if not (n <= d <= 2 * n) or any(
            not (s <= e <= 2 * s) for s, e in zip(P.sizes, per)
        ):
            raise VerificationError(
                f"degree bounds violated: total {d}, per-variable {per}"
            )
        holonomic = d == n
    else:
        holonomic = False
    return DimensionReport(
        presentation=pres,
        basis=G,
        phi=phi,
        omega_part=omega_p,
        psi_part=psi,
        psi_path=path,
        holonomic=holonomic,
        module_is_zero=zero,
        invariants=invariant_set(phi),
        verified_points=verified,
        threshold=R0,
    )


@dataclass(frozen=True)
class BernsteinReport:
    """Univariate dimension data under the trivial variable grouping."""

    psi: NumericalPolynomial
    dimension: int
    multiplicity: int
    report: DimensionReport


def bernstein_polynomial(pres: Presentation, **kwargs) -> BernsteinReport:
    """Bernstein dimension and multiplicity via the collapsed partition."""
    flat = Presentation(pres.P.collapse(), pres.m, pres.relations)
    rep = dimension_polynomial(flat, **kwargs)
    psi = rep.phi
    if rep.module_is_zero:
        return BernsteinReport(psi, -1, 0, rep)
    d, _, top = psi.degree_data()
    lead = top[(d,)]
    e = lead * factorial(d)
    if e.denominator != 1:
        raise VerificationError(f"multiplicity {e} is not an integer")
    return BernsteinReport(psi, d, int(e), rep)


def is_holonomic(report: DimensionReport, n: int | None = None) -> bool:
    """Degree criterion: the total degree equals the number of variables."""
    if n is None:
        n = report.presentation.P.n
    if report.module_is_zero:
        return False
    return report.phi.degree_data()[0] == n


def bernstein_inequality_check(report: DimensionReport, r: Sequence[int]) -> bool:
    """Filtration inequality dim W_r <= phi(r) * phi(2r) at a verified r."""
    P = report.presentation.P
    r = tuple(r)
    card_u = count_UVW(report.basis, report.presentation.m, r)[2]
    if report.phi.eval(r) != card_u:
        raise InputError(
            f"r={r} is below the polynomial threshold; enumeration disagrees"
        )
    lhs = weyl_dimension(P, r)
    rhs = report.phi.eval(r) * report.phi.eval(tuple(2 * v for v in r))
    return lhs <= rhs
