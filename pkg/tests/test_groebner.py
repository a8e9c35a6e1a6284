"""Multi-order reduction, S-elements, completion, and provenance."""
import random
from fractions import Fraction

import pytest

from weyldim import (
    GroebnerBasis,
    InputError,
    ModuleElement,
    OrderSequence,
    Partition,
    WeylDimError,
    WeylElement,
    ZeroElementError,
    act,
    complete_basis,
    full_sequence,
    is_groebner,
    is_reduced,
    leader,
    membership,
    multi_reduce,
    provenance_orders,
    rho,
    s_element,
    suffix_sequence,
)
from weyldim.terms import gamma_divides

from conftest import derivative_presentation, random_module_element, worked_pair


class TestSequences:
    def test_suffix(self):
        assert suffix_sequence(2, 3) == OrderSequence(2, (3,))
        assert suffix_sequence(3, 3) == OrderSequence(3, ())
        assert full_sequence(3) == OrderSequence(1, (2, 3))

    def test_check_rejects(self):
        with pytest.raises(InputError):
            OrderSequence(1, (1,)).check(2)
        with pytest.raises(InputError):
            OrderSequence(3, ()).check(2)


class TestReduction:
    def test_identity_random(self):
        rng = random.Random(7)
        P = Partition((1, 1))
        seq = full_sequence(2)
        for _ in range(25):
            f = random_module_element(rng, 2, 2)
            G = [random_module_element(rng, 2, 2) for _ in range(2)]
            rem, quots = multi_reduce(f, G, seq, P)
            recombined = rem
            for Q, g in zip(quots, G):
                if not Q.is_zero():
                    recombined = recombined + act(Q, g)
            assert recombined == f
            for g in G:
                assert is_reduced(rem, g, seq, P)

    def test_deterministic(self):
        P, h1, h2, h3 = worked_pair()
        seq = full_sequence(2)
        out1 = multi_reduce(h3, [h1, h2], seq, P)
        out2 = multi_reduce(h3, [h1, h2], seq, P)
        assert out1 == out2

    def test_zero_reducer_rejected(self):
        P = Partition((1,))
        f = ModuleElement.basis_vector(1, 1, 1)
        with pytest.raises(ZeroElementError):
            multi_reduce(f, [ModuleElement.zero(1, 1)], full_sequence(1), P)

    def test_reduces_by_itself(self):
        P, h1, _, _ = worked_pair()
        rem, quots = multi_reduce(h1, [h1], full_sequence(2), P)
        assert rem.is_zero()
        assert quots[0] == WeylElement.one(2)


class TestSElement:
    def test_worked_pair_stage2(self):
        P, h1, h2, h3 = worked_pair()
        assert s_element(h1, h2, 2, P) == h3

    def test_worked_pair_stage1(self):
        P, h1, h2, h3 = worked_pair()
        assert s_element(h1, h2, 1, P) == h3

    def test_cross_generator_zero(self):
        P = Partition((1,))
        f = ModuleElement.basis_vector(1, 2, 1)
        g = ModuleElement.basis_vector(1, 2, 2)
        assert s_element(f, g, 1, P).is_zero()

    def test_zero_input(self):
        P = Partition((1,))
        f = ModuleElement.basis_vector(1, 1, 1)
        with pytest.raises(ZeroElementError):
            s_element(f, ModuleElement.zero(1, 1), 1, P)


class TestCompletion:
    def test_worked_pair(self):
        P, h1, h2, h3 = worked_pair()
        G = complete_basis([h1, h2], P)
        assert G.certified == (1, 2)
        assert G.fully_certified()
        for r in (1, 2):
            assert is_groebner(G, r)
        shapes = [rho(g, P) for g in G.elements]
        for f in (h1, h2, h3):
            assert any(gamma_divides(s, rho(f, P)) for s in shapes)

    def test_keeps_scaled_generators(self):
        P, h1, h2, _ = worked_pair()
        G = complete_basis([h1.scale(3), h2], P)
        assert G.elements[0] == h1
        assert G.elements[1] == h2

    def test_zero_generators_dropped(self):
        P, h1, h2, _ = worked_pair()
        G = complete_basis([ModuleElement.zero(2, 2), h1, h2], P)
        assert G.elements[0] == h1
        assert len(G.provenance[0]) == 2

    def test_empty_family_needs_rank(self):
        P = Partition((1,))
        with pytest.raises(InputError):
            complete_basis([], P)
        G = complete_basis([], P, m=2)
        assert G.elements == ()
        assert G.fully_certified()

    def test_element_cap(self):
        P, h1, h2, _ = worked_pair()
        with pytest.raises(WeylDimError):
            complete_basis([h1, h2], P, max_elements=2)

    def test_shape_mismatch(self):
        P = Partition((1, 1))
        with pytest.raises(InputError):
            complete_basis([ModuleElement.basis_vector(1, 1, 1)], P)


class TestProvenance:
    def check_identity(self, gens, G):
        live = [g for g in gens if not g.is_zero()]
        assert len(G.provenance) == len(G.elements)
        for row, el in zip(G.provenance, G.elements):
            assert len(row) == len(live)
            acc = ModuleElement.zero(el.n, el.m)
            for D, g in zip(row, live):
                if not D.is_zero():
                    acc = acc + act(D, g)
            assert acc == el

    def test_worked_pair(self):
        P, h1, h2, _ = worked_pair()
        gens = [h1.scale(-2), h2]
        self.check_identity(gens, complete_basis(gens, P))

    def test_random(self):
        rng = random.Random(23)
        P = Partition((1, 1))
        for _ in range(10):
            gens = [random_module_element(rng, 2, 2) for _ in range(2)]
            self.check_identity(gens, complete_basis(gens, P, m=2))

    def test_orders_on_plain_family(self):
        pres = derivative_presentation()
        G = complete_basis(pres.relations, pres.P, m=1)
        assert len(G.elements) == 2
        assert provenance_orders(G) == (0, 0)

    def test_orders_require_provenance(self):
        P, h1, h2, _ = worked_pair()
        G = GroebnerBasis([h1, h2], P, 2, certified=[])
        with pytest.raises(InputError):
            provenance_orders(G)

    def test_orders_catch_long_combinations(self):
        # e1 lies in the span only through degree-4 multipliers
        P = Partition((1,))
        r1 = ModuleElement(
            1, 2, {(1, ((0,), (0,))): Fraction(-2), (1, ((2,), (0,))): Fraction(-2)}
        )
        r2 = ModuleElement(
            1, 2, {(1, ((0,), (1,))): Fraction(-3), (1, ((2,), (1,))): Fraction(1)}
        )
        G = complete_basis([r1, r2], P, m=2)
        assert ModuleElement.basis_vector(1, 2, 1) in G.elements
        assert provenance_orders(G) == (4,)


class TestMembership:
    def test_combination_is_member(self):
        P, h1, h2, _ = worked_pair()
        G = complete_basis([h1, h2], P)
        D = WeylElement.monomial(2, (1, 0), (0, 2), Fraction(2, 3))
        f = act(D, h1) - act(WeylElement.x(1, 2), h2)
        assert membership(f, G)

    def test_basis_vector_not_member(self):
        P, h1, h2, _ = worked_pair()
        G = complete_basis([h1, h2], P)
        assert not membership(ModuleElement.basis_vector(2, 2, 1), G)

    def test_needs_certification(self):
        P, h1, h2, _ = worked_pair()
        G = GroebnerBasis([h1, h2], P, 2, certified=[2])
        with pytest.raises(InputError):
            membership(h1, G)
