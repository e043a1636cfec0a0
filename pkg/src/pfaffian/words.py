"""Words of letters, the extended sign function, and canonical matchings.

A word is a tuple of non-negative integer letters.  The extended sign
``sign(alpha, beta)`` is zero when either word repeats a letter or when some
letter of beta is missing from alpha; otherwise it is the parity of the
permutation rearranging alpha into beta followed by the remaining letters of
alpha in their original order.

A perfect matching of an even word is enumerated canonically: always pair the
smallest remaining letter, in turn, with each of the other remaining letters.
The running sign picks up a factor (-1)^(i+j), where i is the index of the
smallest letter in the current subword and j the index of its partner in what
is left after removing it.  The resulting sign equals the extended sign of
the flattened pair word relative to the original word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

Word = Tuple[int, ...]


def _has_repeat(word: Word) -> bool:
    return len(set(word)) != len(word)


def sign(alpha: Iterable[int], beta: Iterable[int]) -> int:
    """Extended sign of beta inside alpha; one of -1, 0, +1."""
    alpha = tuple(alpha)
    beta = tuple(beta)
    if _has_repeat(alpha) or _has_repeat(beta):
        return 0
    position = {letter: index for index, letter in enumerate(alpha)}
    if any(letter not in position for letter in beta):
        return 0
    lead = set(beta)
    target = list(beta) + [letter for letter in alpha if letter not in lead]
    sequence = [position[letter] for letter in target]
    inversions = 0
    for i in range(len(sequence)):
        for j in range(i + 1, len(sequence)):
            if sequence[i] > sequence[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def word_diff(alpha: Iterable[int], beta: Iterable[int]) -> Word:
    """Alpha with the letters of beta deleted, original order preserved."""
    alpha = tuple(alpha)
    beta = tuple(beta)
    if _has_repeat(beta):
        raise ValueError(f"cannot delete word with repeated letters: {beta}")
    remaining = list(alpha)
    for letter in beta:
        if letter not in remaining:
            raise ValueError(f"letter {letter} does not occur in {alpha}")
        remaining.remove(letter)
    return tuple(remaining)


def reverse_complement(beta: Iterable[int]) -> Word:
    """Reverse a word of unbarred (even) letters and bar each one.

    Letters use the convention that even ids are plain and odd ids are their
    barred partners, ``bar(x) = x + 1``.
    """
    out = []
    for letter in reversed(tuple(beta)):
        if letter % 2:
            raise ValueError(f"letter {letter} is already barred")
        out.append(letter + 1)
    return tuple(out)


@dataclass(frozen=True)
class Matching:
    """A perfect matching in canonical pair order, with its sign."""

    pairs: Tuple[Tuple[int, int], ...]
    sign: int

    def word(self) -> Word:
        """The flattened word x1 y1 x2 y2 ... of the canonical pairs."""
        return tuple(letter for pair in self.pairs for letter in pair)


def enumerate_matchings(alpha: Iterable[int]) -> Iterator[Matching]:
    """Yield every perfect matching of an even word with repeats disallowed."""
    word = tuple(alpha)
    if len(word) % 2:
        raise ValueError(f"cannot match a word of odd length {len(word)}")
    if _has_repeat(word):
        raise ValueError(f"cannot match a word with repeated letters: {word}")
    return _matchings(word, (), 1)


def _matchings(word, pairs, running_sign):
    if not word:
        yield Matching(pairs, running_sign)
        return
    i = min(range(len(word)), key=word.__getitem__)
    x = word[i]
    rest = word[:i] + word[i + 1:]
    for j, y in enumerate(rest):
        flipped = -running_sign if (i + j) % 2 else running_sign
        yield from _matchings(rest[:j] + rest[j + 1:], pairs + ((x, y),), flipped)


def matching_count(length: int) -> int:
    """(2n-1)!! perfect matchings of 2n = length letters."""
    if length % 2:
        raise ValueError(f"no perfect matchings of odd length {length}")
    count = 1
    for k in range(1, length, 2):
        count *= k
    return count
