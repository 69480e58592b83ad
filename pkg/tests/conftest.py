import random
import sys
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from symlie import GF, QQ, Matrix, validate_seed, verify_hom
from symlie.linalg import is_invertible, kernel

settings.register_profile("default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

F5 = GF(5)


def random_scalar(rng, F, bound=3):
    if F is QQ and rng.random() < 0.25:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    return F(rng.randint(-bound, bound))


def random_matrix(rng, F, n, m=None, bound=3):
    m = n if m is None else m
    return Matrix([[random_scalar(rng, F, bound) for _ in range(m)] for _ in range(n)], F)


def random_invertible(rng, F, n, bound=3):
    while True:
        T = random_matrix(rng, F, n, bound=bound)
        if is_invertible(T):
            return T


def seed_from(F, lam, M, w):
    """Force ``w`` to be an eigenvector: ``A = lam I + M - (M w) e_k^T / w_k``."""
    n = M.nrows
    w = [F(x) for x in w]
    k = next(i for i, x in enumerate(w) if x)
    Mw = M.apply(w)
    rows = [[M[i, j] - (Mw[i] / w[k] if j == k else F.zero) for j in range(n)] for i in range(n)]
    A = Matrix(rows, F) + Matrix.identity(n, F) * F(lam)
    return validate_seed(A, w)


def random_seed(rng, F, n, bound=3):
    while True:
        w = [random_scalar(rng, F, bound) for _ in range(n)]
        if any(w):
            break
    return seed_from(F, random_scalar(rng, F, bound), random_matrix(rng, F, n, bound=bound), w)


def random_lower_nilpotent_seed(rng, F, n, bound=3):
    A = Matrix([[random_scalar(rng, F, bound) if j < i else F.zero for j in range(n)] for i in range(n)], F)
    basis = kernel(A).vectors
    while True:
        coeffs = [random_scalar(rng, F, bound) for _ in basis]
        w = [sum((c * v[i] for c, v in zip(coeffs, basis)), F.zero) for i in range(n)]
        if any(w):
            return validate_seed(A, w)


@pytest.fixture
def rng():
    return random.Random(20240611)


small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def seeds(draw, F=QQ, n=None):
    n = draw(st.integers(1, 3)) if n is None else n
    M = Matrix([[draw(small_ints) for _ in range(n)] for _ in range(n)], F)
    w = draw(st.lists(small_ints, min_size=n, max_size=n).filter(lambda v: any(F(x) for x in v)))
    return seed_from(F, draw(small_ints), M, w)


@st.composite
def matrices(draw, F=QQ, n=None, m=None):
    n = draw(st.integers(1, 3)) if n is None else n
    m = n if m is None else m
    return Matrix([[draw(small_ints) for _ in range(m)] for _ in range(n)], F)


def all_isos(t1, t2):
    """Slow reference search: every invertible N x N matrix over F_p, checked one at a time."""
    F, N = t1.field, t1.dim
    for flat in product(range(F.p), repeat=N * N):
        P = Matrix([flat[i * N : (i + 1) * N] for i in range(N)], F)
        if is_invertible(P) and verify_hom(t1, t2, P).verified:
            yield P


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
