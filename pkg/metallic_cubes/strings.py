"""
Words of the metallic alphabet
Vertices of Π^a_n are words over {0, ..., a} in which letter a only occurs
inside the block 0a. Letters are small integers, never characters.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from metallic_cubes.config import CAPS, DIGIT_ALPHABET_MAX, EMPTY_WORD_TEXT
from metallic_cubes.counting import vertex_count
from metallic_cubes.errors import (
    CapExceededError,
    InvalidAlphabetError,
    InvalidLetterError,
    LengthMismatchError,
    RankOutOfRangeError,
)

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


def check_alphabet(a: int) -> None:
    if not isinstance(a, int) or a < 1:
        raise InvalidAlphabetError(f"alphabet size must be >= 1, got {a!r}")


def _check_letters(letters: Sequence[int], a: int) -> None:
    for letter in letters:
        if letter < 0 or letter > a:
            raise InvalidLetterError(f"letter {letter} outside 0..{a}")


def is_valid(letters: Sequence[int], a: int) -> bool:
    """True iff every letter a is immediately preceded by a 0"""
    check_alphabet(a)
    _check_letters(letters, a)
    for i, letter in enumerate(letters):
        if letter == a and (i == 0 or letters[i - 1] != 0):
            return False
    return True


@dataclass(frozen=True, order=True)
class MetallicString:
    """A vertex of Π^a_n"""
    letters: Word
    a: int

    def __post_init__(self):
        object.__setattr__(self, 'letters', tuple(self.letters))
        if not is_valid(self.letters, self.a):
            raise InvalidLetterError(
                f"{self.letters} violates the 0{self.a}-block rule"
            )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class PrimitiveBlockSeq:
    """Unique split of a word into single letters 0..a-1 and blocks (0, a)"""
    blocks: Tuple[Word, ...]
    a: int

    def concat(self) -> Word:
        return tuple(letter for block in self.blocks for letter in block)

    def block_positions(self) -> Tuple[int, ...]:
        """0-indexed start positions of the 0a blocks"""
        positions = []
        offset = 0
        for block in self.blocks:
            if len(block) == 2:
                positions.append(offset)
            offset += len(block)
        return tuple(positions)


def to_text(w: MetallicString) -> str:
    if not w.letters:
        return EMPTY_WORD_TEXT
    if w.a <= DIGIT_ALPHABET_MAX:
        return ''.join(str(letter) for letter in w.letters)
    return '.'.join(str(letter) for letter in w.letters)


def parse_text(text: str, a: int) -> MetallicString:
    check_alphabet(a)
    text = text.strip()
    if text == EMPTY_WORD_TEXT:
        return MetallicString((), a)
    try:
        if a <= DIGIT_ALPHABET_MAX:
            letters = tuple(int(ch) for ch in text)
        else:
            letters = tuple(int(part) for part in text.split('.'))
    except ValueError:
        raise InvalidLetterError(f"cannot parse {text!r} as a word over 0..{a}")
    return MetallicString(letters, a)


def iter_words(a: int, n: int) -> Iterator[Word]:
    """Valid words of length n as plain tuples, in lexicographic order"""
    check_alphabet(a)
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")

    word = [0] * n

    def extend(i: int) -> Iterator[Word]:
        if i == n:
            yield tuple(word)
            return
        top = a if i > 0 and word[i - 1] == 0 else a - 1
        for letter in range(top + 1):
            word[i] = letter
            yield from extend(i + 1)

    yield from extend(0)


def iter_strings(a: int, n: int) -> Iterator[MetallicString]:
    for letters in iter_words(a, n):
        yield MetallicString(letters, a)


def enumerate_strings(a: int, n: int, cap: int = None) -> List[MetallicString]:
    """All of S^a_n in lexicographic order"""
    check_alphabet(a)
    cap = CAPS['vertices'] if cap is None else cap
    size = vertex_count(a, n)
    if size > cap:
        raise CapExceededError(f"S^{a}_{n}", size, cap)
    logger.debug(f"Enumerating {size} words of S^{a}_{n}")
    return list(iter_strings(a, n))


@lru_cache(maxsize=None)
def _completions(a: int, m: int, after_zero: bool) -> int:
    """Valid continuations of length m; letter a may lead only after a 0"""
    if m == 0:
        return 1
    total = vertex_count(a, m)
    if after_zero:
        total += vertex_count(a, m - 1)
    return total


def rank(w: MetallicString) -> int:
    """Position of w in the lexicographic enumeration of its S^a_n"""
    a, n = w.a, len(w.letters)
    index = 0
    for i, letter in enumerate(w.letters):
        rest = n - i - 1
        if letter >= 1:
            index += _completions(a, rest, True)
            index += (letter - 1) * _completions(a, rest, False)
    return index


def unrank(a: int, n: int, i: int) -> MetallicString:
    check_alphabet(a)
    size = vertex_count(a, n)
    if not 0 <= i < size:
        raise RankOutOfRangeError(f"index {i} outside 0..{size - 1} for S^{a}_{n}")
    letters: List[int] = []
    for pos in range(n):
        rest = n - pos - 1
        top = a if pos > 0 and letters[-1] == 0 else a - 1
        for letter in range(top + 1):
            block = _completions(a, rest, letter == 0)
            if i < block:
                letters.append(letter)
                break
            i -= block
    return MetallicString(tuple(letters), a)


def primitive_blocks(w: MetallicString) -> PrimitiveBlockSeq:
    letters, a = w.letters, w.a
    blocks: List[Word] = []
    i = 0
    while i < len(letters):
        if letters[i] == 0 and i + 1 < len(letters) and letters[i + 1] == a:
            blocks.append((0, a))
            i += 2
        else:
            blocks.append((letters[i],))
            i += 1
    return PrimitiveBlockSeq(tuple(blocks), a)


def check_same_shape(u: MetallicString, v: MetallicString) -> None:
    if u.a != v.a or len(u.letters) != len(v.letters):
        raise LengthMismatchError(
            f"words {to_text(u)} (a={u.a}) and {to_text(v)} (a={v.a}) differ in shape"
        )
