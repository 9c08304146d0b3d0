import json
from fractions import Fraction

import numpy as np
import pytest

import connlab


K3_EDGES = [(1, 2), (1, 3), (2, 3)]
C4_EDGES = [(1, 2), (2, 3), (3, 4), (1, 4)]


def test_complex_construction():
    g = connlab.Complex.closure([[1, 2]])
    assert len(g) == 3
    assert g.simplices() == [[1], [2], [1, 2]]
    k3 = connlab.Complex.whitney(3, K3_EDGES)
    assert len(k3) == 7
    assert k3.euler_characteristic() == 1
    assert k3.fermi_characteristic() == -1
    r = connlab.Complex.random(6, 9, seed=42)
    assert r.simplices() == connlab.Complex.random(6, 9, seed=42).simplices()


def test_green_inverse_and_unimodularity():
    g = connlab.Complex.random(7, 12, seed=5)
    L = connlab.connection_matrix(g)
    G = connlab.green_matrix(g)
    n = len(g)
    assert (L @ G == np.eye(n, dtype=np.int64)).all()
    assert int(connlab.det_connection(g)) == g.fermi_characteristic()
    assert G.sum() == g.euler_characteristic()


def test_spectra_against_numpy():
    g = connlab.Complex.whitney(4, C4_EDGES)
    L = connlab.connection_matrix(g).astype(float)
    ours = connlab.eigh(L)["values"]
    theirs = sorted(np.linalg.eigvalsh(L), reverse=True)
    assert np.allclose(ours, theirs, atol=1e-9)
    sig = connlab.signature(ours)
    assert sig[0] - sig[1] == g.euler_characteristic()


def test_betti_and_torsion():
    c4 = connlab.Complex.whitney(4, C4_EDGES)
    assert connlab.betti(c4) == [1, 1]
    octa = connlab.Complex.whitney(
        6, [(a, b) for a in range(1, 7) for b in range(a + 1, 7)
            if {a, b} not in ({1, 2}, {3, 4}, {5, 6})])
    assert connlab.betti(octa) == [1, 0, 1]
    assert connlab.analytic_torsion(octa) == Fraction(6, 8)
    assert connlab.mckean_singer_check(c4, 5)["pass"]


def test_lefschetz():
    c4 = connlab.Complex.whitney(4, C4_EDGES)
    rotation = connlab.SimplicialMap(c4, [2, 3, 4, 1])
    assert connlab.lefschetz_number(c4, rotation) == 0
    assert connlab.fixed_points(c4, rotation)["fixed"] == []
    assert connlab.verify_lefschetz(c4, rotation)["pass"]
    autos = connlab.find_automorphisms(c4)
    assert len(autos) == 8
    assert all(connlab.verify_lefschetz(c4, t)["pass"] for t in autos)
    zeta = connlab.dynamical_zeta(c4, rotation, 6)
    assert zeta["series_matches_closed_form"]


def test_waves():
    g = connlab.Complex.whitney(4, C4_EDGES)
    D = connlab.dirac(g).astype(float)
    u0 = np.zeros(len(g))
    u0[0] = 1.0
    v0 = np.zeros(len(g))
    u, v = connlab.wave_solve(D, u0, v0, 0.0)
    assert np.allclose(u, u0) and np.allclose(v, v0)
    A = 0.4 * D / max(abs(np.linalg.eigvalsh(D)))
    assert connlab.causality_check(A, 0, 4)["pass"]
    assert connlab.chebyshev_series_check(A, 6)["pass"]
    vel = connlab.boundary_solve(D, 0.2, u0, v0)
    end_u, _ = connlab.wave_solve(0.2 * D, u0, np.asarray(vel), 1.0)
    assert np.allclose(end_u, v0, atol=1e-8)


def test_verify_and_scan_reports():
    rep = json.loads(connlab.verify_all(trials=2, seed=7))
    assert rep["result"]["clean"]
    scan = json.loads(connlab.scan_loewner(trials=3, seed=7))
    assert scan["result"]["checks"]["loewner_LD"]["evaluated"] == 3


def test_invalid_map_rejected():
    g = connlab.Complex.closure([[1, 2], [3]])
    with pytest.raises(ValueError):
        connlab.SimplicialMap(g, [3, 2, 1])


def test_attractor_and_dynamical_matrices():
    k3 = connlab.Complex.whitney(3, K3_EDGES)
    constant = connlab.SimplicialMap(k3, [2, 2, 2])
    rep = connlab.attractor(k3, constant)
    assert rep["pass"] and len(rep["attractor"]) == 1
    rotation = connlab.SimplicialMap(k3, [2, 3, 1])
    dm = connlab.dynamical_matrices(k3, rotation)
    n = len(k3)
    assert (dm["L_T"] @ dm["g_T"].T == np.eye(n, dtype=np.int64)).all()
    assert (dm["D_T"] @ dm["D_T"] == connlab.hodge(k3)).all()
    heat = connlab.heat_deformation_check(k3, rotation, [0.1, 1.0, 10.0])
    assert heat["pass"]


def test_figures(tmp_path):
    g = connlab.Complex.random(6, 9, seed=12)
    paths = connlab.emit_figures(g, str(tmp_path / "fig_"))
    assert len(paths) == 3
    csv = (tmp_path / "fig_spectra.csv").read_text()
    assert csv.startswith("j,lambda_L")
    assert len(csv.strip().splitlines()) == len(g) + 1
