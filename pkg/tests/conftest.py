import random

import pytest

from deltamod.matrix import IntMatrix


def random_matrix(rng: random.Random, max_rows: int = 4, max_cols: int = 7,
                  lo: int = -2, hi: int = 2) -> IntMatrix:
    rows = rng.randint(1, max_rows)
    cols = rng.randint(1, max_cols)
    return IntMatrix.from_rows(
        [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]
    )


def random_nonzero_matrix(rng: random.Random, **kw) -> IntMatrix:
    while True:
        a = random_matrix(rng, **kw)
        if any(a.entries):
            return a


def random_full_row_rank(rng: random.Random, max_rows: int = 3, max_cols: int = 7,
                         lo: int = -3, hi: int = 3) -> IntMatrix:
    import oracles

    while True:
        rows = rng.randint(1, max_rows)
        cols = rng.randint(rows, max_cols)
        a = IntMatrix.from_rows(
            [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]
        )
        if oracles.rank_frac(a.row_lists()) == rows:
            return a


def random_unimodular(rng: random.Random, n: int, ops: int = 8) -> list[list[int]]:
    """Product of elementary integer row operations: det stays +-1."""
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(ops):
        kind = rng.randrange(3)
        i, j = rng.randrange(n), rng.randrange(n)
        if kind == 0 and i != j:
            u[i], u[j] = u[j], u[i]
        elif kind == 1:
            u[i] = [-x for x in u[i]]
        elif kind == 2 and i != j:
            c = rng.choice((-2, -1, 1, 2))
            u[i] = [x + c * y for x, y in zip(u[i], u[j])]
    return u


def mat_mul(u: list[list[int]], a: IntMatrix) -> IntMatrix:
    rows = [
        [sum(u[i][k] * a.at(k, j) for k in range(a.rows)) for j in range(a.cols)]
        for i in range(len(u))
    ]
    return IntMatrix.from_rows(rows)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0x5EED)
