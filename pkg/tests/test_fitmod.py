import pytest

from fitt.fitmod import (
    PresentedAlgebra,
    PresentedModule,
    base_change,
    direct_sum_free,
    fitting_ideal,
    free_module,
    minors,
)
from fitt.groebner import Ideal, ideal_contains, ideal_equal
from fitt.polyring import CoefficientField, PolyRing

QQ = CoefficientField(0)


@pytest.fixture
def rab():
    return PolyRing(QQ, ("a", "b"))


@pytest.fixture
def diag_ab(rab):
    algebra = PresentedAlgebra(rab, Ideal(rab))
    matrix = (
        (rab.variable("a"), rab.zero()),
        (rab.zero(), rab.variable("b")),
    )
    return PresentedModule(algebra, matrix, ("g1", "g2"))


class TestMinors:
    def test_diagonal_entries(self, diag_ab, rab):
        assert minors(diag_ab.matrix, 1) == [
            rab.variable("a"), rab.zero(), rab.zero(), rab.variable("b"),
        ]

    def test_diagonal_determinant(self, diag_ab, rab):
        assert minors(diag_ab.matrix, 2) == [rab.variable("a") * rab.variable("b")]

    def test_generic_two_by_two(self):
        ring = PolyRing(QQ, ("x", "y", "z", "w"))
        matrix = (
            (ring.variable("x"), ring.variable("y")),
            (ring.variable("z"), ring.variable("w")),
        )
        assert minors(matrix, 2) == [ring.parse("x*w - y*z")]

    def test_size_zero_gives_one(self, diag_ab, rab):
        assert minors(diag_ab.matrix, 0) == [rab.one()]

    def test_oversized_gives_nothing(self, diag_ab):
        assert minors(diag_ab.matrix, 3) == []

    def test_three_by_three_against_cofactor_oracle(self):
        # oracle: cofactor expansion of a fully generic 3x3 matrix
        names = [f"m{i}{j}" for i in range(3) for j in range(3)]
        ring = PolyRing(QQ, names)
        matrix = tuple(
            tuple(ring.variable(f"m{i}{j}") for j in range(3)) for i in range(3)
        )
        expected = ring.parse(
            "m00*m11*m22 - m00*m12*m21 - m01*m10*m22 + m01*m12*m20"
            " + m02*m10*m21 - m02*m11*m20"
        )
        assert minors(matrix, 3) == [expected]


class TestFittingIdeal:
    def test_free_module_of_rank_three(self, rab):
        M = free_module(PresentedAlgebra(rab, Ideal(rab)), 3)
        assert fitting_ideal(M, 2).is_zero()
        assert fitting_ideal(M, 3).is_unit()

    def test_diagonal_ladder(self, diag_ab, rab):
        assert ideal_equal(fitting_ideal(diag_ab, 0), Ideal(rab, [rab.parse("a*b")]))
        assert ideal_equal(
            fitting_ideal(diag_ab, 1), Ideal(rab, [rab.variable("a"), rab.variable("b")])
        )
        assert fitting_ideal(diag_ab, 2).is_unit()

    def test_shift_law_instance(self, diag_ab):
        Ms = direct_sum_free(diag_ab, 1)
        for i in range(0, 3):
            assert ideal_equal(fitting_ideal(Ms, i + 1), fitting_ideal(diag_ab, i))

    def test_beyond_generator_count_is_unit(self, diag_ab):
        assert fitting_ideal(diag_ab, 5).is_unit()

    def test_negative_index_total(self, diag_ab):
        # minors of size > both dimensions are impossible: falls back to J = (0)
        assert fitting_ideal(diag_ab, -1).is_zero()

    def test_relations_always_included(self, rab):
        J = Ideal(rab, [rab.parse("a^2")])
        M = PresentedModule(
            PresentedAlgebra(rab, J), ((rab.variable("b"),),), ("g1",)
        )
        f1 = fitting_ideal(M, 1)
        assert f1.is_unit()
        f0 = fitting_ideal(M, 0)
        assert ideal_equal(f0, Ideal(rab, [rab.parse("a^2"), rab.variable("b")]))

    def test_chain_containment(self, diag_ab):
        for i in range(0, 2):
            assert ideal_contains(fitting_ideal(diag_ab, i + 1), fitting_ideal(diag_ab, i))


class TestDirectSumFree:
    def test_rank_zero_unchanged(self, diag_ab):
        assert direct_sum_free(diag_ab, 0) is diag_ab

    def test_two_frees_make_rank_two(self, rab):
        algebra = PresentedAlgebra(rab, Ideal(rab))
        M = direct_sum_free(free_module(algebra, 1), 1)
        assert fitting_ideal(M, 1).is_zero()
        assert fitting_ideal(M, 2).is_unit()

    def test_diag_plus_free(self, rab):
        algebra = PresentedAlgebra(rab, Ideal(rab))
        M = PresentedModule(algebra, ((rab.variable("a"),),), ("g1",))
        Ms = direct_sum_free(M, 1)
        assert fitting_ideal(Ms, 2).is_unit()
        assert ideal_equal(fitting_ideal(Ms, 1), Ideal(rab, [rab.variable("a")]))
        assert Ms.matrix == ((rab.variable("a"),), (rab.zero(),))


class TestBaseChange:
    def test_identity_substitution(self, diag_ab, rab):
        M2 = base_change(diag_ab, {}, rab)
        assert M2.matrix == diag_ab.matrix
        assert ideal_equal(M2.algebra.relations, diag_ab.algebra.relations)

    def test_killing_a_variable_commutes(self):
        ring = PolyRing(QQ, ("xn", "y"))
        algebra = PresentedAlgebra(ring, Ideal(ring))
        M = PresentedModule(
            algebra,
            ((ring.variable("xn"), ring.zero()), (ring.zero(), ring.variable("y"))),
            ("g1", "g2"),
        )
        sigma = {"xn": ring.zero()}
        M2 = base_change(M, sigma, ring)
        # both sides computed independently: Fitt_1 of the substituted module,
        # and the substitution applied to Fitt_1 = (xn, y)
        left = fitting_ideal(M2, 1)
        right = Ideal(ring, [g.substitute(ring, sigma) for g in fitting_ideal(M, 1).generators])
        assert ideal_equal(left, right)
        assert ideal_equal(left, Ideal(ring, [ring.variable("y")]))

    def test_constant_matrix_unaffected(self, rab):
        algebra = PresentedAlgebra(rab, Ideal(rab))
        M = PresentedModule(algebra, ((rab.constant(3), rab.constant(2)),), ("g1",))
        M2 = base_change(M, {"a": rab.parse("a + 1")}, rab)
        assert M2.matrix == M.matrix

    def test_into_smaller_ring(self, rab):
        target = PolyRing(QQ, ("b",))
        algebra = PresentedAlgebra(rab, Ideal(rab))
        M = PresentedModule(algebra, ((rab.variable("a"),),), ("g1",))
        M2 = base_change(M, {"a": target.variable("b")}, target)
        assert M2.algebra.ring == target
        assert M2.matrix == ((target.variable("b"),),)


def test_ragged_matrix_rejected(rab):
    algebra = PresentedAlgebra(rab, Ideal(rab))
    with pytest.raises(ValueError):
        PresentedModule(algebra, ((rab.zero(),), (rab.zero(), rab.zero())), ("g1", "g2"))
