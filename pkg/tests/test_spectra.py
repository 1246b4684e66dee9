"""Normalized Laplacian assembly and closed-form vs direct spectra."""

import numpy as np
import pytest

from centraljoins.errors import (
    IsolatedVertexError,
    NegativeMultiplicityError,
    TrivialDenominatorError,
    ZeroRegularityError,
)
from centraljoins.graphs import (
    as_regular,
    central_edge_join,
    central_graph,
    central_vertex_join,
    complement,
    complete,
    complete_bipartite,
    component_count,
    cycle,
    has_bipartite_component,
    make_graph,
    petersen,
)
from centraljoins.numeric import SymmetricMatrix, eigenvalues_sym, spectra_equal
from centraljoins.spectra import (
    cej_spectrum_closed,
    central_spectrum_closed,
    cvj_spectrum_closed,
    direct_spectrum,
    normalized_laplacian,
    regular_nl_spectrum,
)

TOL = 1e-8


def two_triangles():
    return complement(complete_bipartite(3, 3))


class TestNormalizedLaplacian:
    def test_k2_matrix(self):
        nl = normalized_laplacian(complete(2))
        assert np.allclose(nl.matrix.values, [[1.0, -1.0], [-1.0, 1.0]])

    def test_k33_entries(self):
        g = complete_bipartite(3, 3)
        nl = normalized_laplacian(g).matrix.values
        assert np.allclose(np.diag(nl), 1.0)
        for u, v in g.edges:
            assert nl[u, v] == pytest.approx(-1.0 / 3.0)
        assert nl[0, 1] == 0.0  # non-edge within a part

    def test_isolated_vertex_rejected(self):
        with pytest.raises(IsolatedVertexError):
            normalized_laplacian(make_graph(3, [(0, 1)]))


class TestDirectSpectrum:
    def test_c4(self):
        s = direct_spectrum(cycle(4))
        assert s.expand() == pytest.approx([0.0, 1.0, 1.0, 2.0], abs=1e-12)

    def test_k2(self):
        s = direct_spectrum(complete(2))
        assert s.expand() == pytest.approx([0.0, 2.0], abs=1e-12)


class TestRegularRelation:
    def test_k2(self):
        s = regular_nl_spectrum(as_regular(complete(2)))
        assert s.expand() == pytest.approx([0.0, 2.0], abs=1e-12)

    def test_k33(self):
        s = regular_nl_spectrum(as_regular(complete_bipartite(3, 3)))
        assert s.items == (
            (pytest.approx(0.0, abs=1e-12), 1),
            (pytest.approx(1.0), 4),
            (pytest.approx(2.0), 1),
        )

    def test_petersen(self):
        # adjacency spectrum {3, 1 x5, -2 x4} confirmed numerically, then mapped
        rg = as_regular(petersen())
        adjacency = eigenvalues_sym(SymmetricMatrix(rg.graph.adjacency()))
        assert adjacency.multiplicity_near(3.0, 1e-9) == 1
        assert adjacency.multiplicity_near(1.0, 1e-9) == 5
        assert adjacency.multiplicity_near(-2.0, 1e-9) == 4
        s = regular_nl_spectrum(rg)
        assert s.multiplicity_near(0.0) == 1
        assert s.multiplicity_near(2.0 / 3.0) == 5
        assert s.multiplicity_near(5.0 / 3.0) == 4

    def test_matches_direct_route(self):
        for g in (complete(5), cycle(7), petersen()):
            equal, dev = spectra_equal(
                regular_nl_spectrum(as_regular(g)), direct_spectrum(g), TOL
            )
            assert equal, dev

    def test_zero_regularity_rejected(self):
        with pytest.raises(ZeroRegularityError):
            regular_nl_spectrum(as_regular(make_graph(2, [])))


class TestCentralClosed:
    def test_matches_direct_for_c4(self):
        base = as_regular(cycle(4))
        closed = central_spectrum_closed(base)
        direct = direct_spectrum(central_graph(base.graph)[0])
        equal, dev = spectra_equal(closed.assembled, direct, TOL)
        assert equal, dev

    def test_total_multiplicity(self):
        base = as_regular(complete_bipartite(3, 3))
        closed = central_spectrum_closed(base)
        assert closed.assembled.order == base.n + base.m
        assert sum(len(p.values) * p.multiplicity for p in closed.pieces) == 15

    def test_k2_boundary_guarded(self):
        with pytest.raises(NegativeMultiplicityError):
            central_spectrum_closed(as_regular(complete(2)))

    def test_single_vertex_guarded(self):
        with pytest.raises(TrivialDenominatorError):
            central_spectrum_closed(as_regular(make_graph(1, [])))

    def test_zero_regularity_guarded(self):
        with pytest.raises(ZeroRegularityError):
            central_spectrum_closed(as_regular(make_graph(3, [])))

    def test_disconnected_base_flagged_but_correct(self):
        base = as_regular(two_triangles())
        closed = central_spectrum_closed(base)
        assert any("unvalidated-disconnected" in w for w in closed.warnings)
        direct = direct_spectrum(central_graph(base.graph)[0])
        equal, dev = spectra_equal(closed.assembled, direct, TOL)
        assert equal, dev


class TestVertexJoinClosed:
    def test_partner_shift_piece(self):
        # partner eigenvalue 2 of K2 lands at (n1 + r2*2)/(r2 + n1) = 8/7
        closed = cvj_spectrum_closed(
            as_regular(complete_bipartite(3, 3)), as_regular(complete(2))
        )
        shifts = [p for p in closed.pieces if p.description.startswith("shift")]
        assert len(shifts) == 1
        assert shifts[0].values[0] == pytest.approx(8.0 / 7.0, abs=1e-12)

    def test_matches_direct_for_c4_k2(self):
        g1, g2 = cycle(4), complete(2)
        closed = cvj_spectrum_closed(as_regular(g1), as_regular(g2))
        direct = direct_spectrum(central_vertex_join(g1, g2)[0])
        equal, dev = spectra_equal(closed.assembled, direct, TOL)
        assert equal, dev

    def test_empty_partner_guarded(self):
        with pytest.raises(ZeroRegularityError):
            cvj_spectrum_closed(as_regular(cycle(4)), as_regular(make_graph(2, [])))

    def test_tree_base_guarded(self):
        with pytest.raises(NegativeMultiplicityError):
            cvj_spectrum_closed(as_regular(complete(2)), as_regular(complete(2)))


class TestEdgeJoinClosed:
    def test_matches_direct_for_k4_k2(self):
        g1, g2 = complete(4), complete(2)  # m1 = 6 > n1 + 1 = 5
        closed = cej_spectrum_closed(as_regular(g1), as_regular(g2))
        direct = direct_spectrum(central_edge_join(g1, g2)[0])
        equal, dev = spectra_equal(closed.assembled, direct, TOL)
        assert equal, dev

    def test_cycle_base_guarded(self):
        # cycles have m1 = n1, so m1 - n1 - 1 = -1
        with pytest.raises(NegativeMultiplicityError):
            cej_spectrum_closed(as_regular(cycle(5)), as_regular(complete(2)))

    def test_coupling_quartic_carries_zero(self):
        closed = cej_spectrum_closed(
            as_regular(complete_bipartite(3, 3)), as_regular(complete(2))
        )
        quartic = [p for p in closed.pieces if "quartic" in p.description]
        assert len(quartic) == 1
        assert min(abs(v) for v in quartic[0].values) < 1e-9

    def test_disconnected_base_flagged_but_correct(self):
        edges = [(u, v) for u in range(4) for v in range(u + 1, 4)]
        edges += [(4 + u, 4 + v) for u in range(4) for v in range(u + 1, 4)]
        base = as_regular(make_graph(8, edges))  # two K4 components
        partner = as_regular(complete(2))
        closed = cej_spectrum_closed(base, partner)
        assert any("unvalidated-disconnected" in w for w in closed.warnings)
        direct = direct_spectrum(central_edge_join(base.graph, partner.graph)[0])
        equal, dev = spectra_equal(closed.assembled, direct, TOL)
        assert equal, dev


class TestSpectralSanity:
    def sweep(self, bases, partners):
        graphs = [("two_triangles", two_triangles())]
        for name, base in bases:
            graphs.append((name, base.graph))
            graphs.append((f"central({name})", central_graph(base.graph)[0]))
        for pname, partner in partners:
            graphs.append(
                (f"K4 vj {pname}", central_vertex_join(complete(4), partner.graph)[0])
            )
            graphs.append(
                (f"K4 ej {pname}", central_edge_join(complete(4), partner.graph)[0])
            )
        return graphs

    def test_range_trace_zero_and_bipartite_witness(self, bases, partners):
        for name, g in self.sweep(bases, partners):
            s = direct_spectrum(g)
            flat = s.expand()
            assert flat[0] >= -1e-9 and flat[-1] <= 2.0 + 1e-9, name
            assert abs(s.sum() - g.n) <= 1e-8 * g.n, name
            assert s.multiplicity_near(0.0, 1e-7) == component_count(g), name
            has_two = s.multiplicity_near(2.0, 1e-7) > 0
            assert has_two == has_bipartite_component(g), name
