"""Alphabet bipartitions, words over Z_q, and word-level predicates.

A word is a tuple of integer symbols drawn from {0, ..., q-1}. Proper
prefixes and suffixes (lengths 1 to n-1) are what all the overlap
predicates in this package are built on.
"""

from collections.abc import Iterable

from .errors import InvalidInputError

Word = tuple[int, ...]

MAX_Q = 64


class Bipartition:
    """A split of the alphabet {0, ..., q-1} into non-empty classes I and J.

    J is always the complement of I. Membership queries go through a
    q-entry lookup table so in_I / in_J cost O(1).
    """

    __slots__ = ("q", "I", "J", "i_mask", "_is_i")

    def __init__(self, q: int, i_symbols: Iterable[int]):
        if not isinstance(q, int) or q < 2:
            raise InvalidInputError(f"alphabet size must be an integer >= 2, got {q!r}")
        if q > MAX_Q:
            raise InvalidInputError(f"alphabet size {q} exceeds the supported maximum {MAX_Q}")
        i_set = frozenset(i_symbols)
        if not i_set:
            raise InvalidInputError("class I must be non-empty")
        if not all(isinstance(s, int) and 0 <= s < q for s in i_set):
            raise InvalidInputError(f"class I must be a subset of 0..{q - 1}, got {sorted(i_set)}")
        if len(i_set) == q:
            raise InvalidInputError("class J must be non-empty (I covers the whole alphabet)")
        self.q = q
        self.I = i_set
        self.J = frozenset(range(q)) - i_set
        mask = 0
        for s in i_set:
            mask |= 1 << s
        self.i_mask = mask
        self._is_i = tuple(s in i_set for s in range(q))

    def in_I(self, symbol: int) -> bool:
        return self._is_i[symbol]

    def in_J(self, symbol: int) -> bool:
        return not self._is_i[symbol]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Bipartition)
            and self.q == other.q
            and self.i_mask == other.i_mask
        )

    def __hash__(self) -> int:
        return hash((self.q, self.i_mask))

    def __repr__(self) -> str:
        return f"Bipartition(q={self.q}, I={{{', '.join(map(str, sorted(self.I)))}}})"


def validate_word(word: Word, q: int | None = None) -> None:
    """Raise InvalidInputError unless word is a tuple of symbols (below q if given)."""
    if not isinstance(word, tuple) or not word:
        raise InvalidInputError(f"word must be a non-empty tuple of symbols, got {word!r}")
    for s in word:
        if not isinstance(s, int) or s < 0:
            raise InvalidInputError(f"bad symbol {s!r} in word")
        if q is not None and s >= q:
            raise InvalidInputError(f"symbol {s} out of range for alphabet size {q}")


def format_word(word: Word, q: int) -> str:
    """Render a word as a digit string (q <= 10) or comma-separated symbols."""
    if q <= 10:
        return "".join(str(s) for s in word)
    return ",".join(str(s) for s in word)


def parse_word(text: str) -> Word:
    """Parse either word syntax: contiguous digits, or comma-separated symbols."""
    text = text.strip()
    if not text:
        raise InvalidInputError("empty word")
    try:
        if "," in text:
            return tuple(int(part) for part in text.split(","))
        return tuple(int(ch) for ch in text)
    except ValueError:
        raise InvalidInputError(f"cannot parse word {text!r}") from None


def _require_len2(word: Word) -> None:
    if len(word) < 2:
        raise InvalidInputError(f"need a word of length >= 2, got length {len(word)}")


def prefixes(word: Word) -> list[Word]:
    """All proper prefixes, shortest first (lengths 1 to n-1)."""
    _require_len2(word)
    return [word[:j] for j in range(1, len(word))]


def suffixes(word: Word) -> list[Word]:
    """All proper suffixes, shortest first (lengths 1 to n-1)."""
    _require_len2(word)
    n = len(word)
    return [word[n - j:] for j in range(1, n)]


def is_bifix_free(word: Word) -> bool:
    """True when no proper prefix of the word equals a proper suffix."""
    _require_len2(word)
    n = len(word)
    return all(word[:j] != word[n - j:] for j in range(1, n))


def is_code_free(word: Word, forbidden) -> bool:
    """True when no factor (contiguous window) of the word lies in `forbidden`.

    `forbidden` is any collection of equal-length words; a word shorter than
    that common length is trivially free.
    """
    members = list(forbidden)
    if not members:
        raise InvalidInputError("forbidden code is empty")
    n_c = len(members[0])
    if n_c < 1:
        raise InvalidInputError("forbidden code has zero-length words")
    if any(len(w) != n_c for w in members):
        raise InvalidInputError("forbidden code mixes word lengths")
    if len(word) < n_c:
        return True
    bad = set(members)
    return all(word[i:i + n_c] not in bad for i in range(len(word) - n_c + 1))


def is_block_free(word: Word, bip: Bipartition, k: int) -> bool:
    """True when the word contains no run of k consecutive symbols from I.

    Equivalent to is_code_free against the code I^k, without materializing it.
    """
    if k < 1:
        raise InvalidInputError(f"block length must be >= 1, got {k}")
    run = 0
    for s in word:
        if bip.in_I(s):
            run += 1
            if run >= k:
                return False
        else:
            run = 0
    return True
