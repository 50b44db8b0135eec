from fractions import Fraction

import pytest

from toricjac.cox import CoxPolynomial, poly_from_text
from toricjac.divisors import canonical_divisor, divisor_from_labels
from toricjac.errors import InputError
from toricjac.fan import builtin_surface
from toricjac.jacobian import JacobianSystem
from toricjac import linalg

from conftest import H2_TRIGONAL, j1_dim_brute, lambda_section


def subspace_leq(small, big):
    assert small.ambient == big.ambient
    return all(big.contains_vector(list(row)) for row in small.rows)


def test_constructor_validation(h1):
    with pytest.raises(InputError):
        JacobianSystem(h1, CoxPolynomial.zero(h1))
    with pytest.raises(InputError):
        JacobianSystem(h1, poly_from_text(h1, "x1 + x2"))
    with pytest.raises(InputError):
        JacobianSystem(h1, "x1")


def test_trigonal_d5_dimensions(s5, h1):
    beta = s5.beta_divisor
    K = canonical_divisor(h1)
    assert s5.section_dim(beta) == 18
    assert s5.j0_piece(beta).dim == 3
    assert s5.j_piece(beta).dim == 7
    assert s5.j1_piece(beta).dim == 7
    assert s5.r1_dim(beta) == 11
    assert s5.j1_piece(beta + K).dim == 0
    assert s5.r1_dim(beta + K) == 5
    assert s5.r1_dim(2 * beta + K) == 5
    assert s5.section_dim(2 * beta + 2 * K) == 12
    assert s5.j1_piece(2 * beta + 2 * K).dim == 1
    assert s5.r1_dim(2 * beta + 2 * K) == 11
    assert s5.r1_dim(3 * beta + 2 * K) == 1


def test_beta_divisor_inferred_from_first_monomial(s5, h1):
    assert s5.beta_divisor.coeffs == tuple(sorted(s5.f.terms)[0])
    assert s5.beta_class.vec == (2, 3)


def test_j0_contains_euler_terms(s5):
    piece = s5.j0_piece(s5.beta_divisor)
    for term in s5.euler_terms:
        assert piece.contains(term)
    assert piece.ambient_dim == 18
    assert len(piece.coset_monomials()) == 15


def test_reduce_unit_matches_reduce(s5):
    piece = s5.j1_piece(s5.beta_divisor)
    for k in (0, 3, 11):
        vec = [Fraction(0)] * piece.ambient_dim
        vec[k] = Fraction(1)
        assert list(piece.reduce_unit(k)) == list(piece.reduce(vec))


def test_containments_j0_j_j1(s5, h1):
    beta = s5.beta_divisor
    K = canonical_divisor(h1)
    for D in (beta, 2 * beta + K, 2 * beta + 2 * K):
        j0 = s5.j0_piece(D)
        j = s5.j_piece(D)
        j1 = s5.j1_piece(D)
        assert subspace_leq(j0, j1)
        assert subspace_leq(j, j1)
        assert subspace_leq(j0, j)
        assert j0.dim <= j.dim <= j1.dim


def test_f_lies_in_its_own_ideals(s5):
    assert s5.j0_piece(s5.beta_divisor).contains(s5.f)
    assert s5.j1_piece(s5.beta_divisor).contains(s5.f)


def test_nondegeneracy_lambda_family(p1xp1):
    for lam, expect in ((0, "degenerate"), (4, "degenerate"),
                        (-4, "degenerate"), (1, "nondegenerate"),
                        (2, "nondegenerate")):
        sys_ = JacobianSystem(p1xp1, lambda_section(p1xp1, lam))
        verdict = sys_.nondegenerate_decide()
        assert verdict.status == expect, lam
        if expect == "degenerate":
            assert "cone" in verdict.witness
        else:
            assert verdict.is_positive()


def test_trigonal_sections_nondegenerate(trigonal_systems):
    for d, (_, _, sys_) in trigonal_systems.items():
        assert sys_.nondegenerate_decide().status == "nondegenerate", d


def test_saturation_certificate_trigonal_d5(s5):
    # the certificate first succeeds at k = 9; the default budget misses it
    assert s5.saturation_certificate().label == "undetermined(k_max=8)"
    cert = s5.saturation_certificate(k_max=9)
    assert cert.status == "certified" and cert.k == 9
    assert cert.label == "certified(9)"
    assert cert.is_positive()
    assert s5.nondegenerate_decide().is_positive()


def test_saturation_certificate_never_certifies_degenerate(p1xp1):
    sys_ = JacobianSystem(p1xp1, lambda_section(p1xp1, 0))
    for k_max in (1, 2, 4):
        assert sys_.saturation_certificate(k_max).status == "undetermined"


def test_saturation_certificate_rejects_zero_budget(s5):
    with pytest.raises(InputError):
        s5.saturation_certificate(0)


def test_certificate_agrees_with_chart_decision(battery):
    for entry in battery:
        cert = entry["sys"].saturation_certificate(k_max=2)
        if cert.status == "certified":
            assert entry["sys"].nondegenerate_decide().status == "nondegenerate"


def test_pairing_matrix_d5(s5, h1):
    beta = s5.beta_divisor
    K = canonical_divisor(h1)
    M = s5.pairing_matrix(beta + K, 2 * beta + K)
    assert len(M) == 5 and len(M[0]) == 5
    assert linalg.rank([list(r) for r in M], 5) == 5
    N = s5.pairing_matrix(beta, 2 * beta + 2 * K)
    assert len(N) == 11 and len(N[0]) == 11
    assert linalg.rank([list(r) for r in N], 11) == 11
    Mt = s5.pairing_matrix(2 * beta + K, beta + K)
    assert all(M[i][j] == Mt[j][i] for i in range(5) for j in range(5))


def test_pairing_matrix_rejects_wrong_classes(s5, h1):
    beta = s5.beta_divisor
    K = canonical_divisor(h1)
    with pytest.raises(InputError):
        s5.pairing_matrix(beta, beta)


def test_pairing_matrix_rejects_degenerate_top(h2):
    # without the interior monomial the section is degenerate and the top
    # graded piece is 3-dimensional, so no pairing into a line exists
    f = poly_from_text(h2, "x1^7*x2^3 + x3*x4^3 + x3^7*x2^3 + x1*x4^3")
    sys_ = JacobianSystem(h2, f)
    beta = divisor_from_labels(h2, {"x1": 7, "x2": 3})
    K = canonical_divisor(h2)
    assert sys_.r1_dim(3 * beta + 2 * K) == 3
    with pytest.raises(InputError):
        sys_.pairing_matrix(beta + K, 2 * beta + K)


def test_multiplication_rank_by_f_is_zero(s5, h1):
    beta = s5.beta_divisor
    K = canonical_divisor(h1)
    assert s5.multiplication_rank(s5.f, beta + K, 2 * beta + K) == 0
    zero = CoxPolynomial.zero(h1)
    assert s5.multiplication_rank(zero, beta + K, 2 * beta + K) == 0
    with pytest.raises(InputError):
        s5.multiplication_rank(s5.f, beta, beta)


def test_multiplication_rank_duality_lemma(s5, h1):
    # rank of alpha: R1_beta -> R1_{2beta+K} equals
    # rank of alpha: R1_{beta+K} -> R1_{2beta+2K}
    beta = s5.beta_divisor
    K = canonical_divisor(h1)
    piece = s5.j1_piece(beta + K)
    for mono in piece.coset_monomials()[:3]:
        alpha = CoxPolynomial.monomial(h1, mono)
        r_from_beta = s5.multiplication_rank(alpha, beta, 2 * beta + K)
        r_from_bk = s5.multiplication_rank(alpha, beta + K, 2 * beta + 2 * K)
        assert r_from_beta == r_from_bk == 5


def test_h2_trigonal_dimensions(h2):
    sys_ = JacobianSystem(h2, poly_from_text(h2, H2_TRIGONAL))
    beta = divisor_from_labels(h2, {"x1": 7, "x2": 3})
    assert sys_.section_dim(beta) == 20
    assert sys_.j_piece(beta).dim == 8
    assert sys_.j1_piece(beta).dim == 8
    assert sys_.r1_dim(beta) == 12


def test_j1_brute_force_spot_check(s5, h1):
    beta = s5.beta_divisor
    K = canonical_divisor(h1)
    for D in (beta, beta + K, 2 * beta + 2 * K):
        assert j1_dim_brute(s5, D) == s5.j1_piece(D).dim


def test_subspace_dump_shape(s5):
    piece = s5.j1_piece(s5.beta_divisor)
    dump = piece.to_dict()
    assert len(dump["ambient"]) == 18
    assert len(dump["rows"]) == 7
    assert len(dump["pivots"]) == 7
    assert all(isinstance(x, str) for row in dump["rows"] for x in row)
