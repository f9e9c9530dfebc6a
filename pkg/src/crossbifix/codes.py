"""Code container, overlap witnesses, verification engines and file formats.

A code here is a set of equal-length words. The central predicate is
cross-bifix-freeness: no proper prefix of any member equals a proper suffix
of any member (the two members may coincide). Expandability questions are
answered by exhaustively scanning Z_q^n with the compiled kernel.
"""

import json
from dataclasses import dataclass
from enum import Enum

from . import kernel
from .errors import GuardExceededError, InvalidInputError
from .words import Bipartition, Word, format_word, is_bifix_free, parse_word, validate_word

DEFAULT_GUARD = 2 ** 28


def check_guard(q: int, n: int, guard: int | None) -> None:
    """Refuse exhaustive work when q**n exceeds the guard (default 2**28)."""
    cap = DEFAULT_GUARD if guard is None else guard
    if q ** n > cap:
        raise GuardExceededError(
            f"q**n = {q ** n} exceeds the scan guard {cap}; raise --guard or CBF_GUARD to allow"
        )


@dataclass(frozen=True)
class Code:
    """A set of words of uniform length n over Z_q.

    q and bip are optional: plain word files do not always carry the
    alphabet, and the overlap predicates below do not need it. Operations
    that scan Z_q^n require q (directly or through bip).
    """

    n: int
    words: frozenset[Word]
    q: int | None = None
    bip: Bipartition | None = None

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError(f"word length must be >= 1, got {self.n}")
        object.__setattr__(self, "words", frozenset(tuple(w) for w in self.words))
        if self.bip is not None:
            if self.q is None:
                object.__setattr__(self, "q", self.bip.q)
            elif self.q != self.bip.q:
                raise InvalidInputError(f"q={self.q} disagrees with bipartition q={self.bip.q}")
        for w in self.words:
            validate_word(w, self.q)
            if len(w) != self.n:
                raise InvalidInputError(f"word {w} has length {len(w)}, expected {self.n}")

    def __iter__(self):
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word) -> bool:
        return word in self.words

    def sorted_words(self) -> list[Word]:
        return sorted(self.words)

    def alphabet_size(self) -> int:
        if self.q is None:
            raise InvalidInputError("alphabet size unknown; supply q or a bipartition")
        return self.q


class OverlapDirection(str, Enum):
    PREFIX_OF_X = "prefix-of-x-is-suffix-of-v"
    PREFIX_OF_V = "prefix-of-v-is-suffix-of-x"


@dataclass(frozen=True)
class OverlapWitness:
    """One concrete prefix/suffix collision between words x and v (possibly x = v)."""

    direction: OverlapDirection
    length: int
    x: Word
    v: Word

    def __post_init__(self):
        n = len(self.x)
        if not 1 <= self.length <= n - 1:
            raise InvalidInputError(f"witness length {self.length} out of range for n={n}")
        if self.shared() != self._other_side():
            raise InvalidInputError("witness strings disagree; refusing to build it")

    def shared(self) -> Word:
        if self.direction is OverlapDirection.PREFIX_OF_X:
            return self.x[: self.length]
        return self.x[len(self.x) - self.length:]

    def _other_side(self) -> Word:
        if self.direction is OverlapDirection.PREFIX_OF_X:
            return self.v[len(self.v) - self.length:]
        return self.v[: self.length]

    def describe(self, q: int = 10) -> str:
        return (
            f"{self.direction.value} length={self.length} "
            f"shared={format_word(self.shared(), q)} "
            f"x={format_word(self.x, q)} v={format_word(self.v, q)}"
        )


@dataclass(frozen=True)
class ExpandabilityVerdict:
    """Outcome of an exhaustive expandability scan."""

    non_expandable: bool
    witness: Word | None
    candidates_examined: int

    def __post_init__(self):
        if not self.non_expandable and self.witness is None:
            raise InvalidInputError("expandable verdict needs a witness word")


def _require_nonempty(code: Code) -> None:
    if not code.words:
        raise InvalidInputError("code is empty")
    if code.n < 2:
        raise InvalidInputError("overlap predicates need word length >= 2")


def _suffix_owner_index(words_sorted: list[Word], n: int) -> list[dict]:
    """index[j] maps each length-j suffix to its lexicographically smallest owner."""
    index: list[dict] = [{} for _ in range(n)]
    for w in words_sorted:
        for j in range(1, n):
            index[j].setdefault(w[n - j:], w)
    return index


def _prefix_owner_index(words_sorted: list[Word], n: int) -> list[dict]:
    index: list[dict] = [{} for _ in range(n)]
    for w in words_sorted:
        for j in range(1, n):
            index[j].setdefault(w[:j], w)
    return index


def is_cross_bifix_free(code: Code) -> tuple[bool, OverlapWitness | None]:
    """Decide cross-bifix-freeness; on failure return the first witness.

    Witness order: members in lexicographic order, then overlap length
    ascending, prefix side first. This makes failures reproducible.
    """
    _require_nonempty(code)
    n = code.n
    words_sorted = code.sorted_words()
    suffix_owner = _suffix_owner_index(words_sorted, n)
    for u in words_sorted:
        for j in range(1, n):
            owner = suffix_owner[j].get(u[:j])
            if owner is not None:
                return False, OverlapWitness(OverlapDirection.PREFIX_OF_X, j, u, owner)
    return True, None


def overlap_witness(x: Word, code: Code) -> OverlapWitness | None:
    """First overlap between x and the code (or None).

    Members of the code return None by convention: adjoining a member
    changes nothing. Checked per length ascending: x against itself, then
    x's prefix against code suffixes, then x's suffix against code prefixes.
    """
    _require_nonempty(code)
    n = code.n
    validate_word(x, code.q)
    if len(x) != n:
        raise InvalidInputError(f"word length {len(x)} does not match code length {n}")
    if x in code.words:
        return None
    words_sorted = code.sorted_words()
    suffix_owner = _suffix_owner_index(words_sorted, n)
    prefix_owner = _prefix_owner_index(words_sorted, n)
    for j in range(1, n):
        p = x[:j]
        s = x[n - j:]
        if p == s:
            return OverlapWitness(OverlapDirection.PREFIX_OF_X, j, x, x)
        owner = suffix_owner[j].get(p)
        if owner is not None:
            return OverlapWitness(OverlapDirection.PREFIX_OF_X, j, x, owner)
        owner = prefix_owner[j].get(s)
        if owner is not None:
            return OverlapWitness(OverlapDirection.PREFIX_OF_V, j, x, owner)
    return None


def _scan_tables(code: Code):
    """Encoded member list plus per-length prefix/suffix value sets for the kernel."""
    n = code.n
    q = code.alphabet_size()
    pre: list[set[int]] = [set() for _ in range(n)]
    suf: list[set[int]] = [set() for _ in range(n)]
    members = []
    for w in code.words:
        pv = 0
        sv = 0
        pw = 1
        for j in range(1, n):
            pv = pv * q + w[j - 1]
            pre[j].add(pv)
            sv = w[n - j] * pw + sv
            pw *= q
            suf[j].add(sv)
        members.append(kernel.encode_word(w, q))
    return members, pre, suf


def _require_cross_bifix_free(code: Code) -> None:
    ok, witness = is_cross_bifix_free(code)
    if not ok:
        raise InvalidInputError(
            f"code is not cross-bifix-free ({witness.describe(code.q or 10)})"
        )


def is_non_expandable(code: Code, guard: int | None = None) -> ExpandabilityVerdict:
    """Exhaustively decide whether any word of Z_q^n can join the code.

    candidates_examined counts the words outside the code that were checked;
    for a non-expandable code it equals q**n - |code|.
    """
    _require_cross_bifix_free(code)
    q = code.alphabet_size()
    check_guard(q, code.n, guard)
    members, pre, suf = _scan_tables(code)
    found, examined = kernel.find_candidates(q, code.n, members, pre, suf, limit=1)
    if found:
        return ExpandabilityVerdict(False, kernel.decode_word(found[0], q, code.n), examined)
    return ExpandabilityVerdict(True, None, examined)


def expansion_candidates(code: Code, guard: int | None = None) -> set[Word]:
    """All words that could individually join the code, by exhaustive scan."""
    _require_cross_bifix_free(code)
    q = code.alphabet_size()
    check_guard(q, code.n, guard)
    members, pre, suf = _scan_tables(code)
    found, _ = kernel.find_candidates(q, code.n, members, pre, suf)
    return {kernel.decode_word(v, q, code.n) for v in found}


def greedy_saturate(code: Code, guard: int | None = None) -> Code:
    """Repeatedly adjoin the lexicographically smallest candidate until none remain.

    The result is non-expandable but carries no optimality claim. Each added
    word can only shrink the candidate set, so the scan resumes just past the
    last addition instead of restarting.
    """
    _require_cross_bifix_free(code)
    q = code.alphabet_size()
    check_guard(q, code.n, guard)
    words = set(code.words)
    start = 0
    while True:
        grown = Code(n=code.n, words=frozenset(words), q=q, bip=code.bip)
        members, pre, suf = _scan_tables(grown)
        found, _ = kernel.find_candidates(q, code.n, members, pre, suf, limit=1, start=start)
        if not found:
            return grown
        words.add(kernel.decode_word(found[0], q, code.n))
        start = found[0] + 1


def suffix_class_union_equality(
    bip: Bipartition, n: int, k: int, guard: int | None = None
) -> tuple[bool, frozenset[Word], frozenset[Word]]:
    """Compare two ways of classifying full-length shell members by suffix.

    For every eligible suffix length m, a shell member is collected either
    when its m-suffix lies in the length-m shell, or when it lies in the
    filtered code of that length. Returns (equal, union_by_shell,
    union_by_filtered) with both unions materialized.
    """
    from . import constructions

    check_guard(bip.q, n, guard)
    params = constructions.ExpansionParams(n, k)
    union_shell: set[Word] = set()
    union_filtered: set[Word] = set()
    for m in params.member_lengths(n - params.t - 1):
        union_shell |= constructions.v_suffix_class(params, bip, m)
        union_filtered |= constructions.u_suffix_class(params, bip, m)
    return union_shell == union_filtered, frozenset(union_shell), frozenset(union_filtered)


# ---------- file format ----------
#
# One word per line; blank lines and '#' comments ignored. The first
# non-comment line may be a header  q=<int> n=<int> I=<comma-list>  (any of
# the three fields may be omitted). Words use digit strings for q <= 10 and
# comma-separated symbols otherwise.


def parse_code(text: str) -> Code:
    """Parse the code file format into a Code (q/bip present iff a header was)."""
    q: int | None = None
    n: int | None = None
    i_symbols: list[int] | None = None
    words: list[Word] = []
    saw_header = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not words and not saw_header and ("=" in line):
            saw_header = True
            for token in line.split():
                key, _, value = token.partition("=")
                try:
                    if key == "q":
                        q = int(value)
                    elif key == "n":
                        n = int(value)
                    elif key == "I":
                        i_symbols = [int(p) for p in value.split(",")]
                    else:
                        raise InvalidInputError(f"unknown header field {key!r}")
                except ValueError:
                    raise InvalidInputError(f"bad header token {token!r}") from None
            continue
        words.append(parse_word(line))
    if not words:
        raise InvalidInputError("no words in code file")
    length = len(words[0])
    if any(len(w) != length for w in words):
        raise InvalidInputError("code file mixes word lengths")
    if n is not None and n != length:
        raise InvalidInputError(f"header says n={n} but words have length {length}")
    bip = Bipartition(q, i_symbols) if (q is not None and i_symbols is not None) else None
    return Code(n=length, words=frozenset(words), q=q, bip=bip)


def render_code_text(code: Code) -> str:
    """Render a code in the file format, header first when the alphabet is known."""
    q = code.q if code.q is not None else (max((s for w in code.words for s in w), default=0) + 1)
    lines = []
    if code.q is not None:
        header = f"q={code.q} n={code.n}"
        if code.bip is not None:
            header += " I=" + ",".join(str(s) for s in sorted(code.bip.I))
        lines.append(header)
    lines.extend(format_word(w, q) for w in code.sorted_words())
    return "\n".join(lines) + "\n"


def code_json_dict(code: Code, verified: bool, non_expandable: bool | None = None) -> dict:
    """JSON-ready record for a code; word strings use the text word syntax."""
    q = code.q if code.q is not None else (max((s for w in code.words for s in w), default=0) + 1)
    return {
        "q": code.q,
        "n": code.n,
        "I": sorted(code.bip.I) if code.bip is not None else None,
        "J": sorted(code.bip.J) if code.bip is not None else None,
        "words": [format_word(w, q) for w in code.sorted_words()],
        "verified": verified,
        "non_expandable": non_expandable,
    }


def render_code_json(code: Code, verified: bool, non_expandable: bool | None = None) -> str:
    return json.dumps(code_json_dict(code, verified, non_expandable), indent=2) + "\n"
