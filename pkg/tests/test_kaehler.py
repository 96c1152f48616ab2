import pytest

from fitt.fitmod import PresentedAlgebra
from fitt.groebner import Ideal, ideal_equal
from fitt.kaehler import kaehler_fitting, kaehler_presentation
from fitt.polyring import CoefficientField, PolyRing
from fitt.rees import ReesParams, rees_presentation

QQ = CoefficientField(0)
F2 = CoefficientField(2)
F3 = CoefficientField(3)


def algebra(ring, *relation_texts):
    return PresentedAlgebra(ring, Ideal(ring, [ring.parse(t) for t in relation_texts]))


class TestPresentation:
    def test_smooth_line_is_free(self):
        ring = PolyRing(QQ, ("x",))
        A = algebra(ring)
        pres = kaehler_presentation(A)
        assert pres.generator_count == 1 and pres.relation_count == 0
        assert kaehler_fitting(A, 0).is_zero()
        assert kaehler_fitting(A, 1).is_unit()

    def test_frobenius_kernel_gives_zero_column(self):
        ring = PolyRing(F2, ("x",))
        A = algebra(ring, "x^2")
        pres = kaehler_presentation(A)
        assert pres.matrix == ((ring.zero(),),)
        assert pres.row_labels == ("dx",)

    @pytest.mark.parametrize("p,field", [(2, F2), (3, F3)])
    def test_rees_binomial_column(self, p, field):
        # differentiate x1^p*T2 - x2*T1 termwise: (0, -T1, -x2, x1^p)
        ring = PolyRing(field, ("x1", "x2", "T1", "T2"))
        A = algebra(ring, f"x1^{p}*T2 - x2*T1")
        pres = kaehler_presentation(A)
        col = tuple(row[0] for row in pres.matrix)
        assert col == (
            ring.zero(),
            ring.parse("-T1"),
            ring.parse("-x2"),
            ring.parse(f"x1^{p}"),
        )
        assert pres.row_labels == ("dx1", "dx2", "dT1", "dT2")


class TestFitting:
    def test_free_plane(self):
        ring = PolyRing(QQ, ("x", "y"))
        A = algebra(ring)
        assert kaehler_fitting(A, 1).is_zero()
        assert kaehler_fitting(A, 2).is_unit()

    def test_rees_binomial_fitt3(self):
        ring = PolyRing(F2, ("x1", "x2", "T1", "T2"))
        A = algebra(ring, "x1^2*T2 - x2*T1")
        got = kaehler_fitting(A, 3)
        expected = Ideal(
            ring,
            [ring.parse("T1"), ring.parse("x2"), ring.parse("x1^2"), ring.parse("x1^2*T2 - x2*T1")],
        )
        assert ideal_equal(got, expected)

    def test_cusp_jacobian_ideal(self):
        ring = PolyRing(QQ, ("x", "y"))
        A = algebra(ring, "y^2 - x^3")
        got = kaehler_fitting(A, 1)
        expected = Ideal(ring, [ring.parse("2*y"), ring.parse("3*x^2"), ring.parse("y^2 - x^3")])
        assert ideal_equal(got, expected)

    def test_polynomial_ring_ladder(self):
        ring = PolyRing(QQ, ("x", "y", "z"))
        A = algebra(ring)
        for i in range(3):
            assert kaehler_fitting(A, i).is_zero()
        for i in (3, 4):
            assert kaehler_fitting(A, i).is_unit()

    def test_characteristic_sensitivity(self):
        m = 4
        ring0 = PolyRing(QQ, ("x",))
        A0 = algebra(ring0, f"x^{m}")
        assert ideal_equal(
            kaehler_fitting(A0, 0),
            Ideal(ring0, [ring0.parse(f"x^{m - 1}"), ring0.parse(f"x^{m}")]),
        )
        ring2 = PolyRing(F2, ("x",))
        A2 = algebra(ring2, f"x^{m}")
        assert ideal_equal(kaehler_fitting(A2, 0), Ideal(ring2, [ring2.parse(f"x^{m}")]))

    def test_redundant_relation_generator_changes_nothing(self):
        ring = PolyRing(QQ, ("x", "y"))
        A = algebra(ring, "y^2 - x^3")
        B = algebra(ring, "y^2 - x^3", "x*y^2 - x^4")
        for i in range(0, 3):
            assert ideal_equal(kaehler_fitting(A, i), kaehler_fitting(B, i))


def test_rees_generator_count():
    # the differentials presentation has 2n - s + 1 rows and C(n-s+1, 2) columns
    for params in (ReesParams(2, 3, 1, 2, (2, 2, 1)), ReesParams(3, 4, 2, 3, (3, 3, 1))):
        pres = kaehler_presentation(rees_presentation(params))
        n, s = params.n, params.s
        assert pres.generator_count == 2 * n - s + 1
        k = n - s + 1
        assert pres.relation_count == k * (k - 1) // 2
