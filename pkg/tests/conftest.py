import numpy as np
import pytest

from ttp2.schedule import Schedule

# The 8-team reference schedule (signed 1-based opponents, teams x days).
GOLDEN_N8 = np.array(
    [
        [-3, -4, 3, 4, -5, 6, 5, -6, 2, -7, -8, 7, 8, -2],
        [-4, -3, 4, 3, -6, -5, 6, 5, -1, -8, 7, 8, -7, 1],
        [1, 2, -1, -2, 7, 8, -7, -8, 4, -5, -6, 5, 6, -4],
        [2, 1, -2, -1, 8, -7, -8, 7, -3, -6, 5, 6, -5, 3],
        [7, 8, -7, -8, 1, 2, -1, -2, 6, 3, -4, -3, 4, -6],
        [8, 7, -8, -7, 2, -1, -2, 1, -5, 4, 3, -4, -3, 5],
        [-5, -6, 5, 6, -3, 4, 3, -4, 8, 1, -2, -1, 2, -8],
        [-6, -5, 6, 5, -4, -3, 4, 3, -7, 2, 1, -2, -1, 7],
    ],
    dtype=np.int64,
)


@pytest.fixture
def golden_n8() -> Schedule:
    return Schedule(n=8, table=GOLDEN_N8)


def enumerate_perfect_matchings(teams):
    """All perfect matchings of a team list, as tuples of sorted pairs."""
    teams = tuple(teams)
    if not teams:
        yield ()
        return
    first = teams[0]
    for idx in range(1, len(teams)):
        rest = teams[1:idx] + teams[idx + 1 :]
        for sub in enumerate_perfect_matchings(rest):
            yield ((first, teams[idx]),) + sub
