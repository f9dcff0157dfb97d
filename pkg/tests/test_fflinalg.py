import itertools

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from fprlab.errors import SingularMatrix
from fprlab.fflinalg import (act_on, build_classical, charpoly, det, eigenspace_dim,
                             eigenspace_dim_via_kernel, field, fixed_space_dim,
                             gaussian_binomial, kernel_dim, mat_inv, mat_mul, matrix_of, nu, rank)
from fprlab.fflinalg import poly as P
from fprlab.fflinalg.classical import (order_gl, order_psl, order_psp, order_sl, order_sp,
                                       preserves_form, symplectic_gram)
from fprlab.fflinalg.matrix import identity
from fprlab.permcore import ActionSpec

QS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


@st.composite
def matrices(draw, qs=(2, 3, 4, 5, 7, 9), nmax=4, invertible=True):
    q = draw(st.sampled_from(qs))
    n = draw(st.integers(1, nmax))
    F = field(q)
    A = np.array(draw(st.lists(st.integers(0, q - 1), min_size=n * n, max_size=n * n)),
                 dtype=np.int64).reshape(n, n)
    if invertible:
        assume(rank(F, A) == n)
    return F, A


# fields --------------------------------------------------------------------------

@pytest.mark.parametrize("q", QS)
def test_field_axioms(q):
    F = field(q)
    e = np.arange(q)
    assert (F.add[0] == e).all() and (F.mul[1] == e).all()
    assert (F.add == F.add.T).all() and (F.mul == F.mul.T).all()
    for a, b, c in itertools.product(range(q), repeat=3):
        assert F.mul[a, F.add[b, c]] == F.add[F.mul[a, b], F.mul[a, c]]
        assert F.add[F.add[a, b], c] == F.add[a, F.add[b, c]]
        assert F.mul[F.mul[a, b], c] == F.mul[a, F.mul[b, c]]
    for a in range(1, q):
        assert F.mul[a, F.inv[a]] == 1
        assert F.add[a, F.neg[a]] == 0
    assert F.mult_order(F.primitive) == q - 1


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27])
def test_modulus_is_irreducible(q):
    F = field(q)
    Fp = field(F.p)
    assert P.is_irreducible(Fp, list(F.modulus))


def test_non_prime_power_rejected():
    with pytest.raises(Exception):
        field(6)


# polynomials -----------------------------------------------------------------------

@given(st.sampled_from([2, 3, 4, 5, 9]), st.data())
def test_factors_divide_and_are_irreducible(q, data):
    F = field(q)
    f = data.draw(st.lists(st.integers(0, q - 1), min_size=2, max_size=7))
    f = P.trim(f + [1])
    for h in P.irreducible_factors(F, f):
        assert P.is_irreducible(F, h)
        assert P.mod(F, f, h) == []


# linear algebra ---------------------------------------------------------------------

def test_rank_and_kernel_examples():
    F = field(3)
    A = np.array([[1, 2, 0], [2, 1, 0], [0, 0, 1]])
    assert rank(F, A) == 2 and kernel_dim(F, A) == 1
    assert rank(F, identity(F, 4)) == 4
    assert rank(F, np.zeros((3, 3), dtype=np.int64)) == 0


@given(matrices())
def test_inverse(FA):
    F, A = FA
    n = A.shape[0]
    assert (mat_mul(F, A, mat_inv(F, A)) == identity(F, n)).all()
    assert det(F, A) != 0


@given(matrices(invertible=False))
def test_rank_nullity(FA):
    F, A = FA
    assert rank(F, A) + kernel_dim(F, A) == A.shape[0]


@given(matrices())
def test_charpoly_constant_term_is_signed_det(FA):
    F, A = FA
    n = A.shape[0]
    f = charpoly(F, A)
    assert len(f) == n + 1 and f[-1] == 1
    sign_det = det(F, A) if n % 2 == 0 else int(F.neg[det(F, A)])
    assert f[0] == sign_det


@given(matrices())
def test_eigenspace_routes_agree(FA):
    F, A = FA
    for f in P.irreducible_factors(F, charpoly(F, A)):
        assert eigenspace_dim(F, A, f) == eigenspace_dim_via_kernel(F, A, f)


@given(matrices())
def test_nu_is_invariant_under_scalars(FA):
    F, A = FA
    v = nu(F, A, projective=False)
    assert all(nu(F, F.mul[c, A], projective=False) == v for c in range(1, F.q))
    assert nu(F, A) == v
    assert 0 <= v < A.shape[0] or A.shape[0] == 1


def test_nu_examples():
    F = field(5)
    assert nu(F, identity(F, 3)) == 0
    refl = identity(F, 3)
    refl[0, 0] = 4
    assert nu(F, refl) == 1
    assert nu(F, np.array([[2, 0, 0], [0, 2, 0], [0, 0, 2]])) == 0
    # companion matrix of the irreducible x^3 + x + 1 over GF(5)
    f = [1, 1, 0, 1]
    assert P.is_irreducible(F, f)
    C = np.array([[0, 1, 0], [0, 0, 1], [4, 4, 0]])
    assert charpoly(F, C) == f
    assert nu(F, C) == 2
    with pytest.raises(SingularMatrix):
        nu(F, np.zeros((2, 2), dtype=np.int64))


# classical groups and actions ----------------------------------------------------------

@pytest.mark.parametrize("kind,n,q,order", [
    ("gl", 2, 3, 48), ("sl", 2, 3, 24), ("gl", 3, 2, 168), ("sl", 2, 5, 120),
    ("sp", 4, 2, 720), ("sp", 6, 2, 1451520), ("gl", 4, 2, 20160),
])
def test_classical_orders(kind, n, q, order):
    assert build_classical(kind, n, q).order == order
    assert {"gl": order_gl, "sl": order_sl, "sp": order_sp}[kind](n, q) == order


def test_projective_orders():
    assert order_psl(2, 23) == 6072
    assert order_psl(3, 4) == 20160
    assert order_psp(4, 3) == 25920


@pytest.mark.parametrize("kind,n,q,spec,degree", [
    ("gl", 2, 3, ActionSpec("vectors"), 9),
    ("pgl", 3, 3, ActionSpec("projective"), 13),
    ("psl", 3, 4, ActionSpec("projective"), 21),
    ("gl", 4, 2, ActionSpec("subspaces", k=2), 35),
    ("sp", 4, 3, ActionSpec("projective"), 40),
    ("sp", 6, 2, ActionSpec("forms", sign="minus"), 28),
    ("sp", 6, 2, ActionSpec("forms", sign="plus"), 36),
])
def test_action_degrees_and_orders(kind, n, q, spec, degree):
    G = build_classical(kind, n, q)
    act = act_on(G, spec)
    assert act.degree == degree
    if spec.kind == "subspaces":
        assert degree == gaussian_binomial(n, spec.k, q)
    if spec.kind == "projective":
        assert degree == (q**n - 1) // (q - 1)
        assert act.group.order() == G.projective_order()
    if spec.kind == "vectors":
        assert act.group.order() == G.order


def test_symplectic_generators_preserve_form():
    for q in (2, 3, 4):
        G = build_classical("sp", 4, q)
        J = symplectic_gram(G.field, 4)
        assert all(preserves_form(G.field, g, J) for g in G.generators)


def test_vectors_action_recovers_matrices():
    G = build_classical("gl", 2, 3)
    act = act_on(G, ActionSpec("vectors"))
    for g in G.generators:
        assert (matrix_of(act, act.induce(g)) == g).all()
        assert act.induce(g).num_fixed() == 3 ** fixed_space_dim(G.field, g)
