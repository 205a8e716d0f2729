import pytest

from ntcert.coverings import (
    RamificationData,
    covering_report,
    fermat_search,
    m_for_prime,
    model_from_n,
    nontrivial_solutions,
    psi_identities,
    quotient_genus,
    rh_genus,
    solve_eq5,
    superelliptic_genus,
    superelliptic_model,
    triangle_checks,
    triangle_nonsingular,
)
from ntcert.errors import (
    InconsistentRamificationError,
    InvalidExponentError,
    InvalidInputError,
    NoAutomorphismError,
)
from ntcert.exact import primes_up_to


# -- the congruence ---------------------------------------------------------------


def test_solve_eq5_examples():
    assert solve_eq5(7) == [2, 4]
    assert solve_eq5(5) == []
    assert solve_eq5(3) == [1]
    with pytest.raises(InvalidInputError):
        solve_eq5(6)


def test_solve_eq5_characterization_below_1000():
    for p in primes_up_to(999):
        solutions = [n for n in range(1, p) if (1 + n + n * n) % p == 0]
        assert solve_eq5(p) == solutions
        assert bool(solutions) == (p == 3 or p % 6 == 1)
        if p % 6 == 1:
            assert len(solutions) == 2
            n1, n2 = solutions
            assert n1 * n2 % p == 1


def test_model_examples():
    m = model_from_n(7, 2)
    assert (m.r, m.s) == (2, 1)
    assert (m.w0, m.w1, m.w_inf) == (2, 1, 4)
    assert (m.w0 + m.w1 + m.w_inf) % 7 == 0
    with pytest.raises(InvalidExponentError):
        model_from_n(7, 3)
    with pytest.raises(InvalidInputError):
        superelliptic_model(7, 7, 1)


def test_model_relates_to_triangle_curve():
    # n = m - 1 links the two presentations; for p = 7, m = 3 and n = 2
    assert m_for_prime(7) == 3
    assert 3 - 1 in solve_eq5(7)
    assert m_for_prime(13) == 4
    assert m_for_prime(19) is None
    assert m_for_prime(3) == 2


# -- triangle curve -----------------------------------------------------------------


def test_triangle_m3_fixed_points_on_curve():
    report = triangle_checks(3)
    assert report["p"] == 7
    assert report["shift_preserves_curve"]
    assert report["shift_permutes_coordinate_points"]
    assert report["fixed_points_projectively_fixed"]
    assert report["fixed_points_on_curve"] is True


def test_triangle_m2_fixed_points_off_curve():
    report = triangle_checks(2)
    assert report["p"] == 3
    assert report["fixed_points_on_curve"] is False
    assert report["fixed_points_projectively_fixed"]


def test_triangle_on_curve_rule_two_routes():
    for m in range(2, 21):
        report = triangle_checks(m)
        p = m * m - m + 1
        # route 1: m mod 3; route 2: p mod 3, computed independently
        assert report["fixed_points_on_curve"] == (m % 3 != 2)
        assert report["fixed_points_on_curve"] == (p % 3 != 0)
        assert report["on_curve_matches_m_mod_3"] and report["on_curve_matches_p_mod_3"]


def test_triangle_nonsingular_small_m():
    for m in range(2, 7):
        assert triangle_nonsingular(m) is True


def test_psi_identity_reports():
    for m in range(2, 13):
        report = psi_identities(m)
        assert report["monomial_identity"]
        assert report["line_substitution_identity"]
        assert report["mobius_three_cycle"]
        assert report["extension_values_on_line"]


def test_psi_m3_matches_superelliptic_model():
    # v^7 = u^2 (u - 1) is y^7 = x^n (x-1) with n = m - 1 = 2
    m = 3
    n = m - 1
    assert n in solve_eq5(7)
    assert model_from_n(7, n).r == m - 1


def test_psi_exponent_arithmetic_directly():
    # a b^(m-1) / c^m for a=(m,1,0), b=(0,m,1), c=(1,0,m) in (X,Y,Z) exponents
    for m in (2, 3, 5, 8):
        N = m * m - m + 1
        a, b, c = (m, 1, 0), (0, m, 1), (1, 0, m)
        combo = tuple(a[i] + (m - 1) * b[i] - m * c[i] for i in range(3))
        assert combo == (0, N, -N)


# -- Riemann-Hurwitz -------------------------------------------------------------------


def test_rh_genus_examples():
    assert rh_genus(RamificationData(7, 0, ((7,), (7,), (7,)))) == 3
    assert rh_genus(RamificationData(2, 0, ((2,), (2,)))) == 0
    # degree 3, two totally ramified points: 2g - 2 = -6 + 4, so genus 0
    assert rh_genus(RamificationData(3, 0, ((3,), (3,)))) == 0


def test_rh_genus_validation():
    with pytest.raises(InvalidInputError):
        rh_genus(RamificationData(3, 0, ((2,),)))
    with pytest.raises(InvalidInputError):
        rh_genus(RamificationData(3, 0, ((3, 0),)))
    with pytest.raises(InconsistentRamificationError):
        rh_genus(RamificationData(2, 0, ((2,),)))  # odd total


def test_superelliptic_genus_formula():
    for p in primes_up_to(99):
        if p < 5:
            continue
        assert superelliptic_genus(p) == (p - 1) // 2


def test_quotient_genus():
    assert quotient_genus(7) == 1
    assert quotient_genus(13) == 2
    assert quotient_genus(3) == 1
    with pytest.raises(NoAutomorphismError):
        quotient_genus(5)
    for p in primes_up_to(200):
        if p % 6 == 1:
            g = quotient_genus(p)
            assert g == (p - 1) // 6
            # consistency through the degree-3 quotient map
            assert rh_genus(RamificationData(3, g, ((3,), (3,)))) == superelliptic_genus(p)


# -- Fermat search -----------------------------------------------------------------------


def brute_force_fermat(p, bound):
    sols = []
    for A in range(-bound, bound + 1):
        for B in range(-bound, bound + 1):
            for C in range(-bound, bound + 1):
                if A**p == B**p + C**p:
                    sols.append((A, B, C))
    return sorted(sols)


def test_fermat_matches_exhaustive_small():
    for p in (3, 5, 7):
        assert fermat_search(p, 8) == brute_force_fermat(p, 8)


def test_fermat_trivial_only():
    s3 = fermat_search(3, 100)
    assert nontrivial_solutions(s3) == []
    assert (1, 1, 0) in set(s3)
    assert (5, 0, 5) in set(s3) and (0, 4, -4) in set(s3)
    s7 = fermat_search(7, 50)
    assert nontrivial_solutions(s7) == []


def test_fermat_trivial_count():
    # (a,a,0), (a,0,a), (0,a,-a) for nonzero |a| <= H, plus the origin
    for p, H in ((3, 30), (5, 12)):
        assert len(fermat_search(p, H)) == 6 * H + 1


def test_fermat_validation():
    with pytest.raises(InvalidInputError):
        fermat_search(11, 10)
    with pytest.raises(InvalidInputError):
        fermat_search(3, 0)


def test_float_screen_margin_on_perfect_powers():
    """The root screen must see every exact p-th power within tolerance."""
    for p in (3, 5, 7):
        for z in range(1, 20001, 7):
            zf = float(z**p) ** (1.0 / p)
            assert abs(zf - round(zf)) < 1e-6


# -- aggregate report ----------------------------------------------------------------------


def test_covering_report_p7():
    report = covering_report(7)
    assert report["n_solutions"] == [2, 4]
    assert report["quotient_genus"] == 1
    assert report["genus"] == 3
    assert report["m"] == 3
    triangle = report["triangle"]
    assert triangle["fixed_points_on_curve"] is True
    assert all(triangle["identities"].values())


def test_covering_report_p19_has_no_triangle():
    report = covering_report(19)
    assert report["m"] is None and report["triangle"] is None
    assert report["quotient_genus"] == 3


def test_covering_report_invalid_prime():
    with pytest.raises(NoAutomorphismError):
        covering_report(5)
