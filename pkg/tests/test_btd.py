from collections import deque
from math import factorial

import numpy as np
import pytest

from cyclekit.btd import (
    apply_block_transposition,
    block_moves,
    btd_bfs,
    btd_distribution,
    check_table,
    rank_rows,
    unrank_rows,
    verify_lower_bound,
)
from cyclekit.oracle import EnumerationGuardError
from cyclekit.permcore import Permutation, lehmer_rank


def naive_distances(n):
    """Plain BFS over tuples with a dict, independent of the ranked table."""
    ident = tuple(range(1, n + 1))
    dist = {ident: 0}
    queue = deque([ident])
    while queue:
        u = queue.popleft()
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                for k in range(j + 1, n + 1):
                    v = u[:i] + u[j:k] + u[i:j] + u[k:]
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        queue.append(v)
    return dist


def test_apply_examples():
    assert apply_block_transposition(Permutation((1, 2, 3)), 0, 1, 2) == Permutation((2, 1, 3))
    assert apply_block_transposition((1, 2, 3, 4), 0, 2, 4) == Permutation((3, 4, 1, 2))
    assert apply_block_transposition((2, 1, 3), 0, 1, 2) == Permutation((1, 2, 3))
    with pytest.raises(ValueError):
        apply_block_transposition((1, 2, 3), 1, 1, 2)


@pytest.mark.parametrize("n", range(1, 8))
def test_table_matches_naive_bfs(n):
    table = btd_bfs(n)
    for u, d in naive_distances(n).items():
        assert table.distance(u) == d


def test_small_distributions():
    assert btd_distribution(btd_bfs(1)) == {0: 1}
    assert btd_distribution(btd_bfs(3)) == {0: 1, 1: 4, 2: 1}
    d5 = btd_distribution(btd_bfs(5))
    assert sum(d5.values()) == 120 and max(d5) <= 3


@pytest.mark.parametrize("n", range(2, 9))
def test_moves_and_shell(n):
    moves = block_moves(n)
    assert len(moves) == (n + 1) * n * (n - 1) // 6
    images = {tuple(np.arange(1, n + 1)[m]) for m in moves}
    assert tuple(range(1, n + 1)) not in images
    assert btd_distribution(btd_bfs(n))[1] == len(images)


def test_distance_one_shell_n3():
    assert btd_distribution(btd_bfs(3))[1] == 4 == len(block_moves(3))


@pytest.mark.parametrize("n", range(3, 10))
def test_reverse_distance_from_three(n):
    assert btd_bfs(n).distance(tuple(range(n, 0, -1))) == (n + 2) // 2


def test_reverse_of_two_is_one_move():
    assert btd_bfs(2).distance((2, 1)) == 1


def test_diameters():
    # frozen from the independent dict BFS for n <= 7 and the ranked BFS beyond
    assert [btd_bfs(n).max_distance for n in range(1, 10)] == [0, 1, 2, 3, 3, 4, 4, 5, 5]
    assert [max(naive_distances(n).values()) for n in range(1, 8)] == [0, 1, 2, 3, 3, 4, 4]


@pytest.mark.parametrize("n", range(1, 9))
def test_metric_sanity(n):
    assert check_table(btd_bfs(n))


def test_rank_roundtrip():
    n = 6
    perms = unrank_rows(np.arange(factorial(n)), n)
    assert (rank_rows(perms) == np.arange(factorial(n))).all()
    for r in (0, 17, 719):
        assert lehmer_rank(list(perms[r])) == r


def test_lower_bound_examples():
    r3 = verify_lower_bound(3)
    assert (r3.count_hard, r3.bound, r3.holds, r3.tight) == (1, 1, True, True)
    r4 = verify_lower_bound(4)
    assert r4.bound == 0 and r4.vacuous and r4.holds
    r5 = verify_lower_bound(5)
    assert r5.bound == 24 and r5.count_hard >= 24


@pytest.mark.parametrize("n", range(2, 10))
def test_lower_bound_holds(n):
    assert verify_lower_bound(n).holds


def test_guards():
    with pytest.raises(EnumerationGuardError):
        btd_bfs(11)
    with pytest.raises(EnumerationGuardError):
        verify_lower_bound(10)
