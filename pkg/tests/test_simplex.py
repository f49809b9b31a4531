import itertools
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from wlogcert.curvature.simplex import check_farkas, farkas_certificate, feasible_point


def solve(M, r):
    """Exact Gauss-Jordan; None if singular."""
    n = len(M)
    T = [[Fraction(v) for v in row] + [Fraction(rv)] for row, rv in zip(M, r)]
    for c in range(n):
        p = next((i for i in range(c, n) if T[i][c] != 0), None)
        if p is None:
            return None
        T[c], T[p] = T[p], T[c]
        for i in range(n):
            if i != c and T[i][c] != 0:
                f = T[i][c] / T[c][c]
                T[i] = [a - f * b for a, b in zip(T[i], T[c])]
    return [T[i][n] / T[i][i] for i in range(n)]


def vertex_oracle(A, b, n):
    rows = [list(map(Fraction, a)) for a in A] + [[-1 if j == k else 0 for j in range(n)] for k in range(n)]
    rhs = list(map(Fraction, b)) + [0] * n

    def ok(x):
        return all(sum(a * v for a, v in zip(row, x)) <= r for row, r in zip(rows, rhs))

    for sub in itertools.combinations(range(len(rows)), n):
        x = solve([rows[i] for i in sub], [rhs[i] for i in sub])
        if x is not None and ok(x):
            return True
    return False


def test_trivial_cases():
    assert feasible_point([[1, 1]], [2]) is not None
    assert feasible_point([[1, 1]], [-1]) is None
    assert feasible_point([[-1, 0]], [-3]) == [3, 0]


def test_farkas_for_infeasible():
    A, b = [[1, 1], [-1, -1]], [1, -2]
    assert feasible_point(A, b) is None
    y = farkas_certificate(A, b)
    assert check_farkas(A, b, y)
    assert farkas_certificate([[1, 1]], [2]) is None


matrices = st.integers(1, 3).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=1, max_size=5),
    )
)


@settings(max_examples=300)
@given(matrices, st.data())
def test_matches_vertex_oracle(nA, data):
    n, A = nA
    b = data.draw(st.lists(st.integers(-4, 4), min_size=len(A), max_size=len(A)))
    x = feasible_point(A, b, nvars=n)
    assert (x is not None) == vertex_oracle(A, b, n)
    if x is None:
        assert check_farkas(A, b, farkas_certificate(A, b))
    else:
        assert all(v >= 0 for v in x)
        assert all(sum(a * v for a, v in zip(row, x)) <= r for row, r in zip(A, b))
