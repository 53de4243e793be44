"""Freely reduced words in numbered generators.

A letter is a nonzero int: ``+k`` is generator ``k-1``, ``-k`` its inverse
(1-based so that negation is well defined).  Words are reduced on
construction and immutable afterwards.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Tuple


def reduce_letters(letters: Iterable[int]) -> Tuple[int, ...]:
    """Free reduction: cancel adjacent inverse pairs."""
    stack: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("letter 0 is not a generator")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


class Word:
    """A freely reduced word. Immutable; hashable; compared by letters."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        object.__setattr__(self, "letters", reduce_letters(letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def _raw(cls, reduced: Tuple[int, ...]) -> "Word":
        w = cls.__new__(cls)
        object.__setattr__(w, "letters", reduced)
        return w

    @classmethod
    def gen(cls, index: int, sign: int = 1) -> "Word":
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return cls._raw((sign * (index + 1),))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "Word":
        """Build from (generator-index, exponent-sign) pairs."""
        return cls(s * (g + 1) for g, s in pairs)

    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((abs(x) - 1, 1 if x > 0 else -1) for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word._raw(concat(self.letters, other.letters))

    def __invert__(self) -> "Word":
        return Word._raw(invert(self.letters))

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word._raw(())
        base = self.letters if n > 0 else invert(self.letters)
        out: Tuple[int, ...] = ()
        for _ in range(abs(n)):
            out = concat(out, base)
        return Word._raw(out)

    def conjugate(self, by: "Word") -> "Word":
        """by * self * by^-1"""
        return by * self * ~by

    def max_generator(self) -> int:
        """Largest 0-based generator index used, or -1 for the empty word."""
        return max((abs(x) for x in self.letters), default=0) - 1

    def exponent_sums(self, n_gens: int) -> list[int]:
        sums = [0] * n_gens
        for x in self.letters:
            sums[abs(x) - 1] += 1 if x > 0 else -1
        return sums

    def __repr__(self) -> str:
        return f"Word({list(self.letters)})"


EMPTY = Word._raw(())


def free_reduce(w: Word) -> Word:
    """The unique freely reduced representative (identity on Word values)."""
    return Word(w.letters)


def concat(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    """Concatenate two reduced letter tuples, cancelling at the seam."""
    if not a:
        return b
    if not b:
        return a
    la = list(a)
    i = 0
    while la and i < len(b) and la[-1] == -b[i]:
        la.pop()
        i += 1
    return tuple(la) + b[i:]

def invert(letters: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(-x for x in reversed(letters))


def splice(letters: Tuple[int, ...], pos: int, ins: Tuple[int, ...]) -> Tuple[int, ...]:
    """Insert ``ins`` into reduced ``letters`` at ``pos`` and reduce."""
    return reduce_letters(letters[:pos] + ins + letters[pos:])


def rotate(letters: Tuple[int, ...], k: int) -> Tuple[int, ...]:
    """Cyclic permutation: move the first k letters to the end, then reduce."""
    if not letters:
        return letters
    k %= len(letters)
    return reduce_letters(letters[k:] + letters[:k])


def cyclic_reduce(letters: Tuple[int, ...]) -> Tuple[int, ...]:
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i] == -letters[j - 1]:
        i += 1
        j -= 1
    return letters[i:j]


def cyclic_reduce_word(w: Word) -> Word:
    return Word._raw(cyclic_reduce(w.letters))


def least_rotation(letters: Tuple[int, ...]) -> int:
    """Index of the lexicographically least rotation (Booth's algorithm)."""
    n = len(letters)
    if n <= 1:
        return 0
    s = letters + letters
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def canonical_cyclic(letters: Tuple[int, ...]) -> Tuple[int, ...]:
    """Canonical form under cyclic permutation: reduce cyclically, then
    pick the lexicographically least rotation."""
    core = cyclic_reduce(reduce_letters(letters))
    if len(core) <= 1:
        return core
    k = least_rotation(core)
    return core[k:] + core[:k]
