from fractions import Fraction

import pytest

from sigmabraid.characters import character, evaluate, sphere_point, torus_character
from sigmabraid.criterion import (
    CertificateCase,
    CertificateEntry,
    CertificateError,
    PathCertificate,
    case_character,
    explore_ball,
    generate_braid_certificate,
    generate_lemma_certificates,
    verify_certificate,
)
from sigmabraid.models import ModelId, parse_model_word
from sigmabraid.sigma import IN_SIGMA1, decide_sigma
from sigmabraid.words import DomainError, GroupContext, Word, model_sym


def mword(text, model=ModelId.G3T):
    return parse_model_word(text, model)


def test_case_a_certificate_shape_and_margins():
    cert = generate_lemma_certificates(CertificateCase.G3T_A, 1, 1)
    assert str(cert.t) == "x"
    assert len(cert.entries) == 14
    chi, _ = case_character(CertificateCase.G3T_A, 1, 1)
    report = verify_certificate(cert, chi)
    assert report.passed and report.endpoints_checked
    margins = {line.z: line.margin for line in report.lines}
    assert margins["a"] == 1  # commuting letter: margin equals chi(t)
    assert margins["v"] == 1 and margins["y"] == 1
    assert all(m > 0 for m in margins.values())


def test_case_margins_scale_with_parameters():
    cert = generate_lemma_certificates(CertificateCase.G3T_A, 2, 5)
    chi, _ = case_character(CertificateCase.G3T_A, 2, 5)
    margins = {line.z: line.margin for line in verify_certificate(cert, chi).lines}
    assert margins["v"] == 2  # min(p, q) over the banked path word
    assert margins["x"] == 2 and margins["x^-1"] == 2


def test_all_cases_verify_and_land_in_the_invariant():
    for case in CertificateCase:
        for p in (1, 3):
            for q in (2, 5):
                cert = generate_lemma_certificates(case, p, q)
                chi_model, chi_braid = case_character(case, p, q)
                report = verify_certificate(cert, chi_model)
                assert report.passed and report.endpoints_checked, (case, p, q)
                group = chi_braid.spec.group
                verdict = decide_sigma(group, sphere_point(chi_braid))
                assert verdict.membership == IN_SIGMA1


def test_case_parameters_must_be_positive():
    with pytest.raises(DomainError):
        case_character(CertificateCase.G3T_A, 0, 1)
    with pytest.raises(DomainError):
        case_character(CertificateCase.G3T_A, 1, -2)


def test_g4t_certificate_covers_both_layers():
    cert = generate_lemma_certificates(CertificateCase.G4T_B, 1, 5)
    assert str(cert.t) == "v^-1"
    assert len(cert.entries) == 22
    chi, _ = case_character(CertificateCase.G4T_B, 1, 5)
    report = verify_certificate(cert, chi)
    assert report.passed
    margins = {line.z: line.margin for line in report.lines}
    assert margins["ub"] > 0 and margins["w2"] > 0


def test_verify_rejects_nonpositive_base():
    cert = generate_lemma_certificates(CertificateCase.G3T_A, 1, 1)
    chi = character(ModelId.G3T, {"x": -1})
    with pytest.raises(CertificateError, match="chi\\(t\\) > 0"):
        verify_certificate(cert, chi)


def test_verify_rejects_broken_endpoint():
    cert = generate_lemma_certificates(CertificateCase.G3T_A, 1, 1)
    doctored = tuple(
        CertificateEntry(e.z, Word((e.z,)), e.cite) if str(e.z) == "y" else e
        for e in cert.entries)
    bad = PathCertificate(cert.context, cert.t, doctored)
    chi, _ = case_character(CertificateCase.G3T_A, 1, 1)
    with pytest.raises(CertificateError, match="z = y"):
        verify_certificate(bad, chi)


def test_verify_rejects_missing_entries():
    cert = generate_lemma_certificates(CertificateCase.G3T_A, 1, 1)
    truncated = PathCertificate(cert.context, cert.t, cert.entries[:-2])
    chi, _ = case_character(CertificateCase.G3T_A, 1, 1)
    with pytest.raises(CertificateError, match="misses entries"):
        verify_certificate(truncated, chi)


def test_failing_margin_is_reported_not_raised():
    # a valid torus-model certificate against a character that kills its
    # paths: endpoints hold, some margin is nonpositive
    cert = generate_lemma_certificates(CertificateCase.G3T_C, 1, 1)
    chi = character(ModelId.G3T, {"v": 1, "y": -5})
    report = verify_certificate(cert, chi)
    assert not report.passed
    assert any(not line.positive for line in report.lines)


# ---------------------------------------------------------------------------
# Braid-generator certificates

def test_braid_certificate_top_strand():
    group = GroupContext("P", "T", 3)
    chi = torus_character(3, [0, 0, 0], [-1, -1, 2])
    cert = generate_braid_certificate(group, chi)
    assert str(cert.t) == "b3"
    report = verify_certificate(cert, chi)
    assert report.passed and report.endpoints_checked


def test_braid_certificate_bottom_strand():
    group = GroupContext("P", "T", 4)
    chi = torus_character(4, [1, 0, 0, -1], [-3, 1, 1, 1])
    cert = generate_braid_certificate(group, chi)
    assert str(cert.t) == "b1^-1"
    report = verify_certificate(cert, chi)
    assert report.passed and report.endpoints_checked


def test_braid_certificate_klein():
    from sigmabraid.characters import klein_character
    group = GroupContext("P", "K", 2)
    chi = klein_character(2, [-1, 2])
    report = verify_certificate(generate_braid_certificate(group, chi), chi)
    assert report.passed and report.endpoints_checked


def test_braid_certificate_beyond_model_range():
    from sigmabraid.characters import klein_character
    for group, chi in (
            (GroupContext("P", "T", 6), torus_character(6, [0] * 6, [-1, 0, 0, 0, 0, 3])),
            (GroupContext("P", "K", 5), klein_character(5, [-2, 0, 0, 1, 3]))):
        cert = generate_braid_certificate(group, chi)
        report = verify_certificate(cert, chi)
        assert report.passed
        assert not report.endpoints_checked  # delegated to the relation tables


def test_braid_certificate_needs_dominant_extreme():
    group = GroupContext("P", "T", 3)
    chi = torus_character(3, [1, -1, 0], [0, 0, 0])
    with pytest.raises(DomainError, match="act_permutation"):
        generate_braid_certificate(group, chi)


# ---------------------------------------------------------------------------
# Bounded ball exploration

def test_ball_direct_edge():
    chi = character(ModelId.G2T, {"a": 1})
    report = explore_ball(ModelId.G2T, chi, radius=3,
                          targets=[mword("a", ModelId.G2T)])
    assert report.base == "a"
    assert report.targets[0].reachable


def test_ball_monotone_in_radius():
    chi = character(ModelId.G2K, {"b": 1})
    small = explore_ball(ModelId.G2K, chi, radius=2)
    big = explore_ball(ModelId.G2K, chi, radius=3)
    assert small.reachable_count <= big.reachable_count
    assert small.vertex_count <= big.vertex_count


def test_ball_negative_control_small_radius():
    chi = character(ModelId.G2K, {"y": -1})
    report = explore_ball(ModelId.G2K, chi, radius=4,
                          targets=[mword("y x y^-1", ModelId.G2K)])
    assert report.base == "y^-1"
    target = report.targets[0]
    assert target.in_ball and target.nonnegative and not target.reachable
    assert "disconnection" in report.note


def test_ball_budget_truncation():
    chi = character(ModelId.G2K, {"b": 1})
    report = explore_ball(ModelId.G2K, chi, radius=6, budget=50)
    assert report.truncated
    assert report.vertex_count <= 51


def test_ball_rejects_bad_inputs():
    chi = character(ModelId.G2K, {"b": 1})
    with pytest.raises(DomainError):
        explore_ball(ModelId.G2K, chi, radius=0)
    with pytest.raises(DomainError):
        explore_ball(ModelId.G2T, chi, radius=2)


def test_ball_negative_control_torus_model():
    # complement point of the two-strand torus group, pulled through the
    # dictionary: only y carries weight, and conjugates of x across y
    # stay separated from the base inside the ball (bounded check only)
    from sigmabraid.models import dictionary
    from sigmabraid.characters import model_character
    braid_chi = torus_character(2, [0, 0], [-1, 1])
    chi = model_character(dictionary(ModelId.G2T), braid_chi)
    assert evaluate(chi, mword("y", ModelId.G2T)) == 1
    report = explore_ball(ModelId.G2T, chi, radius=6,
                          targets=[mword("y^-1 x y", ModelId.G2T)])
    target = report.targets[0]
    assert target.in_ball and target.nonnegative and not target.reachable


def test_ball_zero_character_uses_identity_base():
    chi = character(ModelId.G2T, {})
    report = explore_ball(ModelId.G2T, chi, radius=2,
                          targets=[mword("x y", ModelId.G2T)])
    assert report.base == "1"
    assert report.targets[0].reachable
    assert report.nonnegative_count == report.vertex_count == report.reachable_count
