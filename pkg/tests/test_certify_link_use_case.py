from concurrent.futures import ThreadPoolExecutor

import pytest

from qalink.core.domain.dtos.continued_fraction_dto import ContinuedFraction
from qalink.core.domain.entities.certificate_entity import CertificateLeaf, CertificateNode, QACertificate
from qalink.core.domain.enums.certificate_enums import CertifyStatus, UnknownReason
from qalink.core.domain.exceptions import Disconnected, ZeroDeterminant
from qalink.core.services.diagram_service import disjoint_union
from qalink.core.services.family_service import braid_closure, pretzel, torus_2_2k, two_bridge
from qalink.core.usecases.certify_link_use_case import CertifyLinkUseCase
from qalink.core.usecases.verify_certificate_use_case import VerifyCertificateUseCase


def _certify(d, **kw):
    res = CertifyLinkUseCase(**kw).execute(d)
    if res.certified:
        assert VerifyCertificateUseCase().execute(res.certificate)
    return res


def _walk(t):
    yield t
    if isinstance(t, CertificateNode):
        yield from _walk(t.zero)
        yield from _walk(t.infinity)


def test_unknot_is_a_single_leaf(unknot):
    res = _certify(unknot)
    assert res.certified
    assert res.det == 1
    assert isinstance(res.certificate.root, CertificateLeaf)
    assert res.certificate.node_count() == 1


def test_kink_leaf_carries_its_trace(kink):
    res = _certify(kink)
    leaf = res.certificate.root
    assert isinstance(leaf, CertificateLeaf)
    assert [m.kind.value for m in leaf.trace] == ["R1"]


def test_trefoil(trefoil):
    res = _certify(trefoil)
    assert res.status is CertifyStatus.CERTIFIED
    root = res.certificate.root
    assert isinstance(root, CertificateNode)
    assert root.det == 3
    assert sorted([root.zero.det, root.infinity.det]) == [1, 2]
    assert res.certificate.depth() == 2


def test_figure_eight(figure_eight):
    res = _certify(figure_eight)
    assert res.certified
    assert res.det == 5


def test_additivity_holds_at_every_node(figure_eight):
    res = _certify(figure_eight)
    for t in _walk(res.certificate.root):
        if isinstance(t, CertificateNode):
            assert t.det == t.zero.det + t.infinity.det
        else:
            assert t.det == 1


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_alternating_pretzels(k, n):
    res = _certify(pretzel(*([k] * n)))
    assert res.certified
    assert res.det == n * k ** (n - 1)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_torus_links(k):
    assert _certify(torus_2_2k(k)).certified


@pytest.mark.parametrize("terms", [[2, 2], [2, 3, 4], [3, 3, 3], [1, 2, 1, 2], [4, 5]])
def test_alternating_two_bridge(terms):
    res = _certify(two_bridge(ContinuedFraction(terms=terms)))
    assert res.certified


def test_pretzel_8_19_is_not_certified():
    # P(-2,3,3) is the torus knot T(3,4), which has thick Khovanov homology
    res = _certify(pretzel(-2, 3, 3), budget=20000)
    assert res.det == 3
    assert res.status is CertifyStatus.UNKNOWN
    assert res.certificate is None


def test_t33_is_never_certified():
    res = _certify(braid_closure([1, 2, 1, 2, 1, 2]), budget=5000)
    assert res.status is CertifyStatus.UNKNOWN
    assert res.det == 4
    assert res.certificate is None
    assert res.reason in (UnknownReason.NO_CERTIFICATE, UnknownReason.BUDGET_EXHAUSTED)


def test_budget_exhaustion_is_reported(trefoil):
    res = CertifyLinkUseCase(budget=1).execute(trefoil)
    assert res.status is CertifyStatus.UNKNOWN
    assert res.reason is UnknownReason.BUDGET_EXHAUSTED


def test_memoization_is_transparent():
    d = pretzel(2, 2, 2)
    with_memo = _certify(d)
    without = _certify(d, memoize=False)
    assert with_memo.certified and without.certified
    assert with_memo.memo_hits > 0
    assert without.memo_hits == 0
    assert without.nodes >= with_memo.nodes


@pytest.mark.parametrize("jobs", [2, 4])
def test_parallel_search(jobs):
    d = pretzel(3, 3, 3)
    res = _certify(d, jobs=jobs)
    assert res.certified
    assert res.det == 27


def test_certificate_json_round_trip(trefoil):
    cert = _certify(trefoil).certificate
    again = QACertificate.model_validate_json(cert.model_dump_json())
    assert again == cert
    assert VerifyCertificateUseCase().execute(again)


def test_rejects_split_and_zero_determinant(trefoil):
    with pytest.raises(Disconnected):
        CertifyLinkUseCase().execute(disjoint_union([trefoil, trefoil]))
    with pytest.raises(ZeroDeterminant):
        CertifyLinkUseCase().execute(braid_closure([1, -1]))


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_even_two_bridge_grid_certifies_and_verifies(k, m):
    d = two_bridge(ContinuedFraction(terms=[2 * k, 2 * m]))
    res = CertifyLinkUseCase(budget=10**6).execute(d)
    assert res.certified
    assert res.det == 4 * k * m + 1
    assert VerifyCertificateUseCase().execute(res.certificate)


def test_one_instance_shared_across_threads():
    corpus = [pretzel(2, 2, 2), pretzel(3, 3, 3), pretzel(1, 2, 3),
              two_bridge(ContinuedFraction(terms=[2, 4])), two_bridge(ContinuedFraction(terms=[2, 3, 4]))]
    expected = [(r.status, r.det) for r in (CertifyLinkUseCase(budget=10**6).execute(d) for d in corpus)]

    uc = CertifyLinkUseCase(jobs=3, budget=10**6)

    def run_all():
        return [(r.status, r.det) for r in (uc.execute(d) for d in corpus)]

    with ThreadPoolExecutor(max_workers=4) as ex:
        futures = [ex.submit(run_all) for _ in range(4)]
        results = [f.result() for f in futures]

    assert all(r == expected for r in results)
    assert all(status is CertifyStatus.CERTIFIED for status, _ in expected)
