import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from qalink.core.domain.dtos.continued_fraction_dto import ContinuedFraction
from qalink.core.domain.dtos.rational_tangle_spec_dto import RationalTangleSpec
from qalink.core.domain.entities.certificate_entity import CertificateNode
from qalink.core.domain.exceptions import BadParameters, NoSuchCrossing, NotExtending
from qalink.core.services.canonical_code_service import canonical_code
from qalink.core.services.family_service import pretzel, two_bridge
from qalink.core.services.tait_service import determinant
from qalink.core.usecases.certify_link_use_case import CertifyLinkUseCase
from qalink.core.usecases.extend_tangle_use_case import ExtendTangleUseCase
from qalink.core.usecases.verify_certificate_use_case import VerifyCertificateUseCase


def _spec(*coefficients: int, crossing: int = 0, epsilon=None) -> RationalTangleSpec:
    return RationalTangleSpec(coefficients=list(coefficients), crossing=crossing, epsilon=epsilon)


def test_single_crossing_tangle_is_the_identity(trefoil):
    eps = trefoil.crossings[0].epsilon
    out = ExtendTangleUseCase().execute(trefoil, _spec(eps))
    assert out.diagram.n == 3
    assert canonical_code(out.diagram) == canonical_code(trefoil)
    assert out.tangle_crossings == (2,)


def test_two_twists_give_a_certified_four_crossing_diagram(trefoil):
    eps = trefoil.crossings[1].epsilon
    out = ExtendTangleUseCase().execute(trefoil, _spec(2 * eps, crossing=1))
    assert out.diagram.n == 4
    assert out.tangle_crossings == (2, 3)
    assert CertifyLinkUseCase().execute(out.diagram).certified


def test_wrong_sign_does_not_extend(trefoil):
    eps = trefoil.crossings[0].epsilon
    with pytest.raises(NotExtending) as exc:
        ExtendTangleUseCase().execute(trefoil, _spec(2 * eps, -eps))
    assert exc.value.coefficient == -eps


def test_epsilon_mismatch(trefoil):
    eps = trefoil.crossings[0].epsilon
    with pytest.raises(BadParameters):
        ExtendTangleUseCase().execute(trefoil, _spec(-eps, epsilon=-eps))


def test_missing_crossing(trefoil):
    with pytest.raises(NoSuchCrossing):
        ExtendTangleUseCase().execute(trefoil, _spec(-1, crossing=3))


def test_spec_validation():
    with pytest.raises(ValidationError):
        RationalTangleSpec(coefficients=[], crossing=0)
    with pytest.raises(ValidationError):
        RationalTangleSpec(coefficients=[1, 0], crossing=0)
    with pytest.raises(ValidationError):
        RationalTangleSpec(coefficients=[1], crossing=0, epsilon=2)


def test_flag_follows_the_certificate(trefoil):
    cert = CertifyLinkUseCase().execute(trefoil).certificate
    c = cert.root.crossing
    eps = trefoil.crossings[c].epsilon
    at_root = ExtendTangleUseCase().execute(trefoil, _spec(3 * eps, crossing=c), certificate=cert)
    assert at_root.qa_at_tangle
    elsewhere = ExtendTangleUseCase().execute(trefoil, _spec(3 * eps, crossing=(c + 1) % 3), certificate=cert)
    assert not elsewhere.qa_at_tangle
    assert not ExtendTangleUseCase().execute(trefoil, _spec(3 * eps, crossing=c)).qa_at_tangle


@pytest.mark.parametrize("coefficients", [[1], [2], [3], [1, 1], [1, 2], [2, 3], [3, 3], [3, 1]])
def test_extensions_of_a_certified_crossing_stay_certified(figure_eight, coefficients):
    cert = CertifyLinkUseCase().execute(figure_eight).certificate
    c = cert.root.crossing
    eps = figure_eight.crossings[c].epsilon
    out = ExtendTangleUseCase().execute(figure_eight, _spec(*(eps * a for a in coefficients), crossing=c),
                                        certificate=cert)
    assert out.qa_at_tangle
    res = CertifyLinkUseCase().execute(out.diagram)
    assert res.certified
    assert determinant(out.diagram) == res.det


_hosts = st.one_of(
    st.lists(st.integers(min_value=1, max_value=3), min_size=2, max_size=3).map(lambda ts: pretzel(*ts)),
    st.lists(st.integers(min_value=1, max_value=3), min_size=2, max_size=3).map(
        lambda ts: two_bridge(ContinuedFraction(terms=ts))),
)


@given(_hosts, st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=2))
@settings(max_examples=20)
def test_random_extensions_certify_and_verify(host, coefficients):
    cert = CertifyLinkUseCase().execute(host).certificate
    assume(isinstance(cert.root, CertificateNode))
    c = cert.root.crossing
    eps = host.crossings[c].epsilon
    out = ExtendTangleUseCase().execute(host, _spec(*(eps * a for a in coefficients), crossing=c),
                                        certificate=cert)
    assert out.qa_at_tangle
    assert len(out.tangle_crossings) == sum(coefficients)
    res = CertifyLinkUseCase().execute(out.diagram)
    assert res.certified
    assert VerifyCertificateUseCase().execute(res.certificate)
