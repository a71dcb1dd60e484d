import math

import pytest

import clusternl as cn


def test_version():
    assert cn.__version__ == "0.1.0"


def test_pauli_algebra():
    x = cn.PauliString.parse("X")
    y = cn.PauliString.parse("Y")
    assert str(x * y) == "+iZ"
    assert not x.commutes(y)
    with pytest.raises(ValueError):
        cn.PauliString.parse("Q")


def test_group_census():
    chain = cn.build_lattice([4])
    group = cn.full_group(chain)
    assert len(group) == 16
    signs = sorted(e.sign for e in group)
    assert signs.count(-1) == 2
    assert any(str(e) == "-ZYXY" for e in group)


def test_cluster_state_eigenvalues():
    chain = cn.build_lattice([4])
    psi = cn.make_cluster_state(chain)
    assert math.isclose(psi.norm(), 1.0, abs_tol=1e-12)
    for e in cn.full_group(chain):
        assert math.isclose(cn.expectation(psi, str(e)), 1.0, abs_tol=1e-10)


def test_ghz_paradox_search():
    args = cn.find_ghz_arguments(cn.build_lattice([4]), max_size=4)
    assert args
    assert all(a.valid() and a.sound() for a in args)
    canonical = {frozenset(a.elements) for a in args}
    assert frozenset({"+XIXZ", "+XIYY", "+ZYYZ", "-ZYXY"}) in canonical


def test_window_argument():
    arg = cn.window_argument_1d(8, 3)
    assert arg.valid() and arg.sound()
    assert len(arg.window) == 5
    with pytest.raises(ValueError):
        cn.path_triple_argument(cn.build_lattice([5]), 0, 2, 4)


def test_bounds():
    phi4 = cn.make_cluster_state(cn.build_lattice([4]))
    r = cn.bounds("cluster4", phi4, restarts=16)
    assert math.isclose(r.classical_bound, 2.0, abs_tol=1e-12)
    assert math.isclose(r.quantum_value, 4.0, abs_tol=1e-7)
    assert math.isclose(r.algebraic_bound, 4.0, abs_tol=1e-12)
    assert r.certified
    assert '"classical_bound": "2"' in r.to_json()


def test_reduced_window_bounds():
    psi = cn.make_cluster_state(cn.build_lattice([8]))
    rho = cn.partial_trace(psi, [1, 2, 3, 4, 5])
    assert cn.purity(rho) < 1.0
    # the canonical settings (identity on the window edges) reach the
    # algebraic maximum; the Bloch-sphere optimizer cannot express the
    # identity factor and honestly stays at the classical bound
    assert math.isclose(cn.reference_value_mixed("window5", rho), 4.0, abs_tol=1e-10)
    r = cn.bounds_mixed("window5", rho, restarts=16)
    assert math.isclose(r.classical_bound, 2.0, abs_tol=1e-12)
    assert r.quantum_value <= 4.0 + 1e-9


def test_mixed_expectation():
    rho = cn.partial_trace(cn.make_ghz(4), [0, 1])
    assert math.isclose(cn.expectation_mixed(rho, "ZZ"), 1.0, abs_tol=1e-12)
    assert math.isclose(cn.expectation_mixed(rho, "XX"), 0.0, abs_tol=1e-12)
