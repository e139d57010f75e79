import mpmath
import pytest

from fibdir.dirichlet import DENSITY, SeriesId, direct_sum
from fibdir.errors import DomainError, PrecisionError
from fibdir.golden import BETA, SQRT5
from fibdir.sequences import delta_exact
from fibdir.zeckendorf import classify_d, zeck_encode


def brute(sid, s, n_max):
    """Plain mpmath sum of the series over n <= n_max (no tail)."""
    total = mpmath.mpf(0)
    for n in range(1, n_max + 1):
        dl = delta_exact(n).delta
        d = classify_d(zeck_encode(n))
        if sid == "F":
            x = dl
        elif sid == "G" and d == 0:
            x = dl
        elif sid == "I" and d == 1:
            x = dl
        elif sid == "J" and d == 2:
            x = dl
        elif sid == "H":
            x = BETA * (dl + BETA / SQRT5)
        else:
            continue
        total += mpmath.power(x.to_mpf(), -s)
    return total


def test_densities_sum_to_one():
    assert DENSITY[SeriesId.G] + DENSITY[SeriesId.I] + DENSITY[SeriesId.J] == 1


@pytest.mark.parametrize("sid", list("FGHIJ"))
def test_brute_force_agreement_at_s4(sid):
    # the series tail after 4000 terms is below 4000**-3 / 3 < 1e-11
    res = direct_sum(sid, 4, N=10**5, tol=1e-12)
    ref = brute(sid, mpmath.mpf(4), 4000)
    assert abs(res.value - ref) < 1e-11 + res.error_bound
    assert res.method == "direct"


def test_self_consistency_between_cutoffs():
    a = direct_sum("F", 3, N=10**4)
    b = direct_sum("F", 3, N=10**5)
    assert abs(a.value - b.value) <= a.error_bound + b.error_bound


def test_complex_point_consistency():
    s = mpmath.mpc(2, 5)
    a = direct_sum("G", s, N=2 * 10**4)
    b = direct_sum("G", s, N=2 * 10**5)
    assert abs(a.value - b.value) <= a.error_bound + b.error_bound
    assert b.error_bound < 1e-6


def test_decomposition_f_equals_g_i_j():
    s = mpmath.mpf("2.5")
    parts = [direct_sum(k, s, N=10**5, tol=1e-12) for k in "FGIJ"]
    resid = parts[0].value - sum(p.value for p in parts[1:])
    assert abs(resid) <= sum(p.error_bound for p in parts)


def test_tolerance_is_met():
    res = direct_sum("F", mpmath.mpf("1.5"), tol=1e-8)
    assert res.error_bound <= 1e-8


def test_domain_errors():
    with pytest.raises(DomainError):
        direct_sum("F", 1)
    with pytest.raises(DomainError):
        direct_sum("F", mpmath.mpc("0.5", 3))
    with pytest.raises(DomainError):
        direct_sum("F", 2, N=5)
    with pytest.raises(PrecisionError):
        direct_sum("F", 2, tol=1e-40, prec=64)


def test_thread_count_does_not_change_the_value():
    s = mpmath.mpc("1.5", 3)
    one = direct_sum("F", s, N=3 * 10**5, threads=1)
    many = direct_sum("F", s, N=3 * 10**5, threads=4)
    assert one.value == many.value
