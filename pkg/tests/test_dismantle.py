import json

import pytest
from hypothesis import given

from hypercops import (
    DismantlingCertificate,
    Hypergraph,
    HypergraphError,
    dismantling_order,
    is_dismantlable,
    is_k_cop_win,
    two_section,
    verify_certificate,
)
from hypercops.dismantle import CertificateError, find_corner
from hypercops.suites import small_connected_graphs

from oracles import brute_dismantlable, connected_hypergraphs

TRI = Hypergraph.from_edges([(1, 2, 3)])
C4 = Hypergraph([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (4, 1)])


def test_find_corner_examples():
    assert find_corner(TRI) == (1, 2)
    assert find_corner(C4) is None
    pendant = Hypergraph([1, 2, 3, 4, 5], [*C4.edges, (5, 1)])
    assert find_corner(pendant) == (5, 1)


def test_find_corner_needs_two_vertices():
    with pytest.raises(HypergraphError):
        find_corner(Hypergraph(["x"]))


def test_order_on_single_edge():
    cert = dismantling_order(TRI)
    assert cert.ordering == (1, 2, 3)
    assert cert.covers == (2, 3)


def test_c4_not_dismantlable():
    assert dismantling_order(C4) is None


def test_two_triangles_dismantlable():
    h = Hypergraph.from_edges([(1, 2, 3), (3, 4, 5)])
    cert = dismantling_order(h)
    assert cert is not None and verify_certificate(h, cert)


def test_disconnected_rejected():
    with pytest.raises(HypergraphError):
        dismantling_order(Hypergraph([1, 2]))


def test_verify_accepts_alternative_cover():
    assert verify_certificate(TRI, DismantlingCertificate((1, 2, 3), (3, 3)))


def test_verify_rejects_every_c4_ordering():
    from itertools import permutations, product
    for order in permutations(C4.vertices):
        for covers in product(C4.vertices, repeat=3):
            try:
                cert = DismantlingCertificate(order, covers)
            except CertificateError:
                continue
            assert not verify_certificate(C4, cert)


@pytest.mark.parametrize("ordering, covers", [
    ((1, 2, 3), (2,)),          # wrong cover count
    ((1, 1, 3), (2, 3)),        # not a permutation
    ((1, 2, 3), (1, 3)),        # cover equals the vertex
    ((2, 1, 3), (3, 2)),        # cover appears earlier
])
def test_malformed_certificates(ordering, covers):
    with pytest.raises(CertificateError):
        DismantlingCertificate(ordering, covers)


def test_certificate_for_other_vertex_set_rejected():
    with pytest.raises(CertificateError):
        verify_certificate(TRI, DismantlingCertificate((1, 2, 4), (2, 4)))


def test_certificate_json_round_trip():
    cert = dismantling_order(TRI)
    rows = json.loads(json.dumps(cert.to_json()))
    assert rows[-1]["cover"] is None
    assert DismantlingCertificate.from_json(rows) == cert


@given(connected_hypergraphs(max_n=6))
def test_greedy_matches_exhaustive_search(h):
    assert is_dismantlable(h) == brute_dismantlable(h)


@given(connected_hypergraphs(max_n=6))
def test_round_trip_and_characterisation(h):
    cert = dismantling_order(h)
    if cert is not None:
        assert verify_certificate(h, cert)
    assert (cert is not None) == is_dismantlable(two_section(h)) == is_k_cop_win(h, 1)


def test_all_graphs_up_to_six_against_exhaustive_search():
    for g in small_connected_graphs(6):
        assert is_dismantlable(g) == brute_dismantlable(g)
