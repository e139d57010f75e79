import mpmath
import pytest

from fibdir.dirichlet import zeta_ref, zeta_relation_check, zeta_relation_sides
from fibdir.errors import DomainError


def test_known_values():
    with mpmath.workprec(128):
        assert abs(zeta_ref(2) - mpmath.pi ** 2 / 6) < mpmath.mpf(10) ** -30
        assert abs(zeta_ref(4) - mpmath.pi ** 4 / 90) < mpmath.mpf(10) ** -30


def test_brute_force_with_tail_integral():
    s = mpmath.mpf("2.5")
    N = 10**5
    head = mpmath.fsum(mpmath.power(n, -s) for n in range(1, N))
    # Euler-Maclaurin to second order after the head
    tail = mpmath.power(N, 1 - s) / (s - 1) + mpmath.power(N, -s) / 2 + s * mpmath.power(N, -s - 1) / 12
    assert abs(zeta_ref(s) - head - tail) < 1e-8


def test_domain():
    with pytest.raises(DomainError):
        zeta_ref(1)


def test_relation_small():
    entry = zeta_relation_check(mpmath.mpf("2.5"), M=40, N=10**5, tol=1e-6)
    assert entry.status == "pass"


def test_truncation_order_shrinks_gap():
    s = mpmath.mpf(3)
    g1 = zeta_relation_sides(s, M=1, N=10**5)
    g2 = zeta_relation_sides(s, M=2, N=10**5)
    assert abs(g2.difference) < abs(g1.difference)
