import pytest
from hypothesis import given, strategies as st

from parityfactor import (
    DomainError,
    InputError,
    adjacency_spectrum,
    complement,
    complete_graph,
    components,
    cycle_graph,
    disjoint_copies,
    edge_connectivity,
    empty_graph,
    extremal_H,
    extremal_H_partition,
    family_F,
    quotient_matrix,
    remark_condition_holds,
    remark_examples,
    rho,
    sequential_join,
    splice,
    standard,
)


def test_standard_examples():
    H = standard("join", complete_graph(1), complement(disjoint_copies(complete_graph(2), 2)), complete_graph(2))
    assert H == extremal_H(5, 1)
    assert H.neighbors(0) == (1, 2, 3, 4)
    assert set(H.neighbors(5)) == {1, 2, 3, 4, 6}
    assert complement(cycle_graph(3)) == empty_graph(3)
    three = standard("copies", complete_graph(2), 3)
    assert (three.n, three.edge_total) == (6, 3)


def test_standard_rejects_bad_input():
    with pytest.raises(InputError):
        standard("hypercube", 3)
    with pytest.raises(InputError):
        cycle_graph(2)
    with pytest.raises(InputError):
        sequential_join(complete_graph(3))


def test_join_is_sequential_not_complete():
    G = sequential_join(complete_graph(1), complete_graph(1), complete_graph(1))
    assert G.edge_list() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("r, eta, n", [(4, 2, 5), (5, 3, 7), (5, 1, 7), (6, 1, 7), (4, 3, 5)])
def test_H_sizes(r, eta, n):
    assert extremal_H(r, eta).n == n


@given(st.integers(2, 12), st.data())
def test_H_degrees_and_edges(r, data):
    eta = data.draw(st.integers(1, r - 1))
    H = extremal_H(r, eta)
    assert H.is_simple and H.is_connected()
    assert H.n >= r + 1
    # degree deficit: sum over v of (r - d(v)) equals eta, or eta - 1 when r even and eta odd
    deficit = sum(r - d for d in H.degrees)
    expect = eta - 1 if (r % 2 == 0 and eta % 2 == 1) else eta
    assert deficit == expect
    if r % 2 and eta == 1:
        assert sorted(H.degrees)[1] >= r  # only one vertex below r
    else:
        assert H.min_degree >= r - 2


@given(st.integers(2, 12), st.data())
def test_H_partition_is_equitable(r, data):
    eta = data.draw(st.integers(1, r - 1))
    q = quotient_matrix(extremal_H(r, eta), extremal_H_partition(r, eta))
    assert q.equitable
    assert q.spectral_radius == pytest.approx(rho(r, eta).value, abs=1e-9)


@pytest.mark.parametrize("r, eta", [(3, 3), (2, 0), (1, 1)])
def test_H_domain(r, eta):
    with pytest.raises(DomainError):
        extremal_H(r, eta)


def test_splice_with_surplus_edge():
    # K_5 = H(4, 1) has no deficit (b = 0); splicing it into a degree-1 vertex
    # sends the single edge to B's lowest vertex, which ends at degree 5
    host = complete_graph(2)
    G = splice(host, 1, extremal_H(4, 1), 4)
    assert G.n == 6
    assert sorted(G.degrees) == [1, 4, 4, 4, 4, 5]
    assert G.neighbors(0) == (1,)


def test_splice_errors():
    host = cycle_graph(4)
    with pytest.raises(InputError):
        splice(host, 0, extremal_H(4, 2), 3)  # max degree of B is 4
    with pytest.raises(InputError):
        splice(host, 0, extremal_H(4, 1), 4)  # deg 2 not in {0, 1}


@pytest.mark.parametrize("r, h, l", [(4, 2, 4), (4, 2, 6), (5, 3, 5), (6, 4, 6), (5, 1, 5), (6, 3, 6)])
def test_F_structure(r, h, l):
    inst = family_F(r, h, l)
    F = inst.graph
    B = extremal_H(r, h)
    assert F.n == h + l * B.n
    assert inst.U == tuple(range(h))
    assert components(F, inst.U) == list(inst.copies)
    for C in inst.copies:
        sub = F.induced_subgraph(C)
        assert sorted(sub.degrees) == sorted(B.degrees)
        assert adjacency_spectrum(sub).eigenvalue(1) == pytest.approx(rho(r, h).value, abs=1e-9)
    assert all(F.degrees[u] == l for u in inst.U)
    assert F.min_degree == r
    assert edge_connectivity(F) == h
    if r == l and (r % 2 or h % 2 == 0):
        assert set(F.degrees) == {r}


def test_F_sidecar():
    data = family_F(5, 3, 5).to_json()
    assert data["U"] == [0, 1, 2]
    assert len(data["copies"]) == 5
    assert data["params"] == {"r": 5, "h": 3, "l": 5}


@pytest.mark.parametrize("r, h, l", [(3, 4, 5), (4, 2, 3), (4, 0, 4)])
def test_F_domain(r, h, l):
    with pytest.raises(DomainError):
        family_F(r, h, l)


def test_remark_examples():
    assert remark_examples(3) == [(12, 2, 5), (8, 6, 3), (17, 3, 5), (17, 5, 3)]
    with pytest.raises(DomainError):
        remark_examples(2)


@given(st.integers(3, 40))
def test_remark_side_conditions(k):
    triples = remark_examples(k)
    for r, h, b in triples:
        assert r > h >= 2 and b % 2 == 1 and (r - h) % 2 == 0
    # the ceiling condition holds for three of the four families; (2k+2, 2k, 3)
    # has b h = 6k > r so it cannot hold
    assert [remark_condition_holds(*t) for t in triples] == [True, False, True, True]
