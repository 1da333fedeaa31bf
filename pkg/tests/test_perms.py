from __future__ import annotations

from math import factorial

from gclose.perms import (
    adjacent_word,
    all_perms,
    centralizer_order,
    compose,
    cycle_representative,
    cycle_type,
    from_word,
    inverse,
    partitions,
    sign,
)


def test_words_reconstruct_permutations():
    for n in range(1, 5):
        for s in all_perms(n):
            w = adjacent_word(s)
            assert from_word(n, w) == s
            # bubble sort gives a reduced word: length = number of inversions
            inv = sum(1 for i in range(n) for j in range(i + 1, n) if s[i] > s[j])
            assert len(w) == inv


def test_sign_multiplicative():
    perms = list(all_perms(4))
    for s in perms[::5]:
        for t in perms[::7]:
            assert sign(compose(s, t)) == sign(s) * sign(t)
        assert compose(s, inverse(s)) == (1, 2, 3, 4)


def test_class_sizes_sum():
    for n in range(1, 6):
        assert sum(factorial(n) // centralizer_order(p) for p in partitions(n)) == factorial(n)


def test_representatives():
    assert cycle_representative((2, 1)) == (2, 1, 3)
    for p in partitions(5):
        assert cycle_type(cycle_representative(p)) == p
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
