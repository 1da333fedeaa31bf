"""Symmetric-group helpers.

A permutation of ``{1..n}`` is a tuple ``s`` in one-line notation:
``s[i - 1]`` is the image of ``i``.  Composition is right-to-left,
``compose(s, t)(i) == s(t(i))``.
"""

from __future__ import annotations

from itertools import permutations
from math import factorial
from typing import Iterator, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_permutation(s: Sequence[int], n: int | None = None) -> bool:
    n = len(s) if n is None else n
    return len(s) == n and sorted(s) == list(range(1, n + 1))


def compose(s: Perm, t: Perm) -> Perm:
    return tuple(s[t[i] - 1] for i in range(len(t)))


def inverse(s: Perm) -> Perm:
    out = [0] * len(s)
    for i, si in enumerate(s, start=1):
        out[si - 1] = i
    return tuple(out)


def transposition(n: int, a: int, b: int) -> Perm:
    s = list(range(1, n + 1))
    s[a - 1], s[b - 1] = b, a
    return tuple(s)


def adjacent(n: int, t: int) -> Perm:
    """The transposition ``(t, t+1)``."""
    return transposition(n, t, t + 1)


def cycles(s: Perm) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(1, len(s) + 1):
        if start in seen:
            continue
        cyc = []
        i = start
        while i not in seen:
            seen.add(i)
            cyc.append(i)
            i = s[i - 1]
        out.append(tuple(cyc))
    return out


def cycle_type(s: Perm) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(s)), reverse=True))


def sign(s: Perm) -> int:
    return -1 if (len(s) - len(cycles(s))) % 2 else 1


def all_perms(n: int) -> Iterator[Perm]:
    return (tuple(p) for p in permutations(range(1, n + 1)))


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in decreasing lexicographic order."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def centralizer_order(shape: Sequence[int]) -> int:
    out = 1
    for k in set(shape):
        mult = list(shape).count(k)
        out *= k**mult * factorial(mult)
    return out


def adjacent_word(s: Perm) -> list[int]:
    """Indices ``t`` with ``s == adjacent(t1) o adjacent(t2) o ...``.

    Built by bubble sort, so the word has minimal length.
    """
    a = list(s)
    n = len(a)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if a[i] > a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                swaps.append(i + 1)
                changed = True
    # swapping positions i, i+1 is right multiplication by adjacent(i)
    return list(reversed(swaps))


def from_word(n: int, word: Sequence[int]) -> Perm:
    out = identity(n)
    for t in word:
        out = compose(out, adjacent(n, t))
    return out


def cycle_representative(shape: Sequence[int]) -> Perm:
    """Standard permutation of the given cycle type: consecutive blocks
    ``(1 2 .. l1)(l1+1 .. l1+l2)...``."""
    n = sum(shape)
    s = list(range(1, n + 1))
    start = 1
    for length in shape:
        block = list(range(start, start + length))
        for a, b in zip(block, block[1:] + block[:1]):
            s[a - 1] = b
        start += length
    return tuple(s)


def shape_key(shape: Sequence[int]) -> str:
    return ",".join(str(k) for k in shape)
