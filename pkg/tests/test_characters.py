from fractions import Fraction

import numpy as np
import pytest

from graphlimits.characters import (
    SymmetricFunctional,
    check_character,
    check_dissociated,
    default_basis,
    gexp_mass,
    laplace_transform,
    mixture,
    reflection_matrix,
    reflection_positivity,
    rho_from_graph,
)
from graphlimits.errors import CapacityError, DegenerateFamilyError, DomainError
from graphlimits.graphons import random_step_graphon, w_random_distribution, w_random_mobius
from graphlimits.graphs import EMPTY, LabeledGraph, UnlabeledGraph, classes_up_to, disjoint_union, enumerate_labeled
from graphlimits.linalg import is_psd, jacobi_eigenvalues
from graphlimits.mobius import GraphDistribution, is_exchangeable, mixture as mix_dists, z_from_p

from oracles import naive_hom, numpy_min_eig

L = LabeledGraph.parse
K1, K2, K3 = L("1:"), L("2:1"), L("3:111")
U = UnlabeledGraph.of


def test_jacobi_matches_numpy():
    rng = np.random.default_rng(0)
    for n in [1, 2, 3, 5, 8, 9, 15]:
        X = rng.normal(size=(n, n))
        M = X + X.T
        assert np.abs(jacobi_eigenvalues(M) - np.linalg.eigvalsh(M)).max() < 1e-12
    assert jacobi_eigenvalues(np.zeros((3, 3))).tolist() == [0, 0, 0]
    assert jacobi_eigenvalues(np.diag([3.0, -1.0, 2.0])).tolist() == [-1, 2, 3]


def test_is_psd_examples():
    r = is_psd(np.eye(4))
    assert r.psd and r.min_eigenvalue == pytest.approx(1.0)
    r = is_psd([[1, 2], [2, 1]])
    assert not r.psd and r.min_eigenvalue == pytest.approx(-1.0)
    assert is_psd([[1, 0.3], [0.3, 0.3]]).psd
    with pytest.raises(DomainError):
        is_psd([[1, 2], [0, 1]])


def test_rho_examples():
    assert rho_from_graph(K3, K2) == Fraction(2, 3)
    for G in [K1, K3, L("4:110011")]:
        assert rho_from_graph(G, EMPTY) == 1
    matching = disjoint_union(U(K2), U(K2))
    assert rho_from_graph(U(K3), matching) == Fraction(4, 9)
    assert Fraction(naive_hom(matching.canon, K3), 81) == Fraction(4, 9)


def test_functional_construction():
    phi = SymmetricFunctional.from_graph(K3, 4)
    assert phi.source == "from-graph-character"
    assert phi(L("4:000001")) == phi(L("4:100000"))
    with pytest.raises(CapacityError):
        phi(LabeledGraph(5))
    with pytest.raises(DomainError):
        SymmetricFunctional(2, {LabeledGraph(0): 1})
    with pytest.raises(DomainError):
        SymmetricFunctional.from_distribution(GraphDistribution.point_mass(L("3:100")))
    assert SymmetricFunctional.from_distribution(GraphDistribution.erdos_renyi(3, 0.4)).source == "from-distribution"


@pytest.mark.parametrize("G", ["1:", "3:111", "4:110011", "5:1100100001"])
def test_graph_characters_are_characters(G):
    res = check_character(SymmetricFunctional.from_graph(L(G), 6))
    assert res.passed and res.violation == 0


def test_edge_power_is_character():
    assert check_character(SymmetricFunctional.edge_power(Fraction(3, 10), 6)).violation == 0
    assert check_character(SymmetricFunctional.edge_power(0.3, 6))


def test_mixture_of_characters_is_not_a_character():
    a = SymmetricFunctional.from_graph(K2, 4)
    b = SymmetricFunctional.from_graph(K3, 4)
    phi = mixture([a, b], [Fraction(1, 2), Fraction(1, 2)])
    res = check_character(phi)
    assert not res
    # at F1 = F2 = K2: (1/4 + 4/9)/2 - ((1/2 + 2/3)/2)^2 = 1/144
    assert res.violation >= 1 / 144
    k2 = U(K2)
    assert phi(disjoint_union(k2, k2)) - phi(k2) ** 2 == Fraction(1, 144)


def test_reflection_matrix_examples():
    p = 0.3
    phi = SymmetricFunctional.edge_power(p, 4)
    M = reflection_matrix(phi, [EMPTY, U(K2)])
    assert np.allclose(M, [[1, p], [p, p**2]], atol=1e-15)
    assert reflection_matrix(phi, [EMPTY]).tolist() == [[1.0]]
    with pytest.raises(CapacityError):
        reflection_matrix(phi, [U(K3), U(K2)])
    assert [V.n for V in default_basis(6)] == [0, 1, 2, 2, 3, 3, 3, 3]


def test_reflection_positivity_for_extendable_laws():
    rng = np.random.default_rng(7)
    for n in (4, 5, 6):
        for _ in range(5):
            comps = [w_random_distribution(random_step_graphon(int(rng.integers(1, 4)), rng), n)
                     for _ in range(3)]
            P = mix_dists(comps, rng.dirichlet(np.ones(3)))
            assert is_exchangeable(P)
            M = reflection_matrix(SymmetricFunctional.from_distribution(P))
            res = is_psd(M)
            assert res.psd, res.min_eigenvalue
            assert res.min_eigenvalue == pytest.approx(numpy_min_eig(M), abs=1e-12)


def test_finite_exchangeability_alone_is_not_enough():
    # uniform law on the six single-edge graphs: exchangeable on 4 nodes, but
    # Z(K2 + K2) = 0 < Z(K2)^2, so it is not the marginal of an infinite exchangeable graph
    P = GraphDistribution.from_dict(4, {G: 1 / 6 for G in enumerate_labeled(4) if G.num_edges == 1})
    assert is_exchangeable(P)
    assert not reflection_positivity(SymmetricFunctional.from_distribution(P))


def test_psd_closed_under_mixtures():
    rng = np.random.default_rng(11)
    for _ in range(10):
        parts = [SymmetricFunctional.from_graphon(random_step_graphon(int(rng.integers(1, 4)), rng), 6)
                 for _ in range(3)]
        assert all(reflection_positivity(f) for f in parts)
        assert reflection_positivity(mixture(parts, rng.dirichlet(np.ones(3))))


def test_dissociation_examples():
    assert check_dissociated(SymmetricFunctional.edge_power(0.4, 6))
    assert check_dissociated(SymmetricFunctional.from_graph(L("4:110100"), 6)).violation == 0
    mix = mixture([SymmetricFunctional.edge_power(0.2, 4), SymmetricFunctional.edge_power(0.8, 4)], [0.5, 0.5])
    res = check_dissociated(mix)
    assert not res
    assert res.violation == pytest.approx(0.09)


def test_dissociation_on_labelled_mobius_parameters():
    assert check_dissociated(z_from_p(GraphDistribution.erdos_renyi(5, 0.35)))
    W = random_step_graphon(3, np.random.default_rng(2))
    assert check_dissociated(w_random_mobius(W, 5), tol=1e-12)
    mix = mix_dists([GraphDistribution.erdos_renyi(4, 0.2), GraphDistribution.erdos_renyi(4, 0.8)], [0.5, 0.5])
    res = check_dissociated(z_from_p(mix))
    assert not res and res.violation == pytest.approx(0.09)


def test_character_iff_dissociated():
    rng = np.random.default_rng(4)
    functionals = [SymmetricFunctional.from_graph(L(g), 6) for g in ["2:1", "3:110", "4:111000"]]
    functionals += [SymmetricFunctional.from_graphon(random_step_graphon(2, rng), 6) for _ in range(3)]
    functionals += [mixture(functionals[:2], [0.5, 0.5]), mixture(functionals[3:5], [0.3, 0.7])]
    for phi in functionals:
        assert bool(check_character(phi)) == bool(check_dissociated(phi))
    assert not check_character(functionals[-1])


def test_gexp_examples():
    uniform = gexp_mass(lambda V: 1, 3)
    assert np.allclose(uniform.mass, 1 / 8)
    P = gexp_mass(SymmetricFunctional.edge_power(1.0, 2), 2)
    assert P[K2] == pytest.approx(0.5)
    assert laplace_transform(SymmetricFunctional.edge_power(1.0, 2), 2) == 2
    lam = 3.0
    P = gexp_mass(SymmetricFunctional.edge_power(lam, 3), 3)
    er = GraphDistribution.erdos_renyi(3, lam / (1 + lam))
    assert np.abs(P.mass - er.mass).max() < 1e-15
    Z = z_from_p(P)
    for F in enumerate_labeled(3):
        assert Z[F] == pytest.approx((lam / (1 + lam)) ** F.num_edges)


@pytest.mark.parametrize("n", [2, 4, 5])
def test_gexp_edge_weight_is_erdos_renyi(n):
    for lam in (0.25, 1.0, 4.0):
        P = gexp_mass(SymmetricFunctional.edge_power(lam, n), n)
        assert np.abs(P.mass - GraphDistribution.erdos_renyi(n, lam / (1 + lam)).mass).max() < 1e-14


def test_gexp_base_measure_and_errors():
    base = np.arange(8, dtype=float)
    P = gexp_mass(lambda V: 1, 3, base)
    assert P.mass.tolist() == pytest.approx((base / base.sum()).tolist())
    assert not is_exchangeable(P)
    with pytest.raises(DegenerateFamilyError):
        gexp_mass(lambda V: 0, 3)
    with pytest.raises(DomainError):
        gexp_mass(lambda V: -1, 3)
    theta = SymmetricFunctional.from_function(lambda V: 1 + V.num_edges, 4)
    assert is_exchangeable(gexp_mass(theta, 4))


def test_functionals_from_distribution_lie_in_unit_interval():
    P = w_random_distribution(random_step_graphon(2, np.random.default_rng(9)), 5)
    phi = SymmetricFunctional.from_distribution(P)
    assert phi(EMPTY) == pytest.approx(1.0)
    assert all(-1e-12 <= phi(V) <= 1 + 1e-12 for V in classes_up_to(5))
