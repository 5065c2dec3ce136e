import math
from fractions import Fraction

import pytest
import yangbax


def test_eight_vertex_exact():
    t = yangbax.build_8v(2, 3, 5, 7)
    assert t.exact
    assert t.residual() == 0
    assert t.a[1][2] == Fraction(5, 3)
    assert t.a[3][0] == Fraction(8, 15)


def test_invariants():
    assert yangbax.eight_vertex_invariants(2, 3, 5, 7) == (Fraction(-91, 15), Fraction(-46, 45))
    t = yangbax.build_6v_rational(1, 2, 3, 4, 5, 6)
    for inv in t.invariants():
        assert inv["Delta"] == Fraction(32, 27)


def test_generators():
    t = yangbax.build_8v(2, 3, 5, 11)
    for g in "abc":
        k = yangbax.apply_K(g, t)
        assert k.residual() == 0
        assert yangbax.apply_K(g, k).projectively_equal(t)
    p = yangbax.k_map_8v("a", 2, 3, 5, 7)
    assert p["x"] == Fraction(2, 25) and p["v"] == 1 and p["a"] == Fraction(-8, 15)


def test_float_families():
    assert yangbax.build_8v_baxter(0.3, 0.5, 1.1, 0.6).residual() < 1e-9
    t = yangbax.build_6v_trig(math.pi / 4, 0.3, 0.2)
    assert not t.exact
    assert yangbax.orbit_period(t, "a,b,a,b") == 4


def test_gauge_and_triplet_constructor():
    swap = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
    t = yangbax.Triplet(swap, swap, swap)
    assert t.solves()
    g = yangbax.apply_diagonal_gauge(yangbax.build_8v(2, 3, 5, 7), 2, 3, Fraction(1, 5))
    assert g.residual() == 0


def test_elliptic():
    sn, cn, dn = yangbax.jacobi(0.4, 0.0)
    assert abs(sn - math.sin(0.4)) < 1e-14 and dn == pytest.approx(1.0)
    assert yangbax.complete_K(0.0) == pytest.approx(math.pi / 2)


def test_errors():
    with pytest.raises(yangbax.ConstraintViolation):
        yangbax.build_8v(2, 0, 5, 7)
    with pytest.raises(yangbax.SingularMatrix):
        yangbax.apply_K("b", yangbax.build_8v(2, 3, 5, 7))
    assert issubclass(yangbax.ConstraintViolation, yangbax.Error)
