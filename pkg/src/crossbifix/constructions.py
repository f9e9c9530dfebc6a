"""Generators for the code families.

Construction `s` (the leading-run code): k symbols from I, a J delimiter, an
interior window free of I-runs of length k, and a J tail. It is always
cross-bifix-free; it is non-expandable exactly when k = n-1 or 2k < n (plus
the isolated case n = 4, k = 2).

In the expandable regime the package grows `s` to a non-expandable code by
adjoining a companion set: for n >= 7 the suffix-filtered code `u`, drawn
from the shell family `v`; for n in {5, 6} small fixed product sets.
"""

from dataclasses import dataclass, field
from itertools import product

from .codes import Code, check_guard
from .errors import InvalidInputError
from .words import Bipartition, Word


@dataclass(frozen=True)
class ExpansionParams:
    """Validated (n, k) pair for the v/u constructions, with derived indices.

    t = max(2, n-k-1) is the leading-run length of every member;
    forced_i_position = n-k+t is the 1-based coordinate that long members
    must draw from I, and is also excluded from the member-length range.
    """

    n: int
    k: int
    t: int = field(init=False)
    forced_i_position: int = field(init=False)

    def __post_init__(self):
        if self.n < 7:
            raise InvalidInputError(f"shell constructions need n >= 7, got n={self.n}")
        if not (2 * self.k >= self.n and self.k <= self.n - 2):
            raise InvalidInputError(
                f"k={self.k} outside the expandable range [n/2, n-2] for n={self.n}"
            )
        object.__setattr__(self, "t", max(2, self.n - self.k - 1))
        object.__setattr__(self, "forced_i_position", self.n - self.k + self.t)

    def member_lengths(self, upper: int | None = None):
        """Valid shell lengths m in [t+1, upper], skipping forced_i_position."""
        top = self.n if upper is None else upper
        return (m for m in range(self.t + 1, top + 1) if m != self.forced_i_position)

    def exclusion_lengths(self, m: int):
        """Suffix lengths tested by the u-filter for a length-m member."""
        return (
            l for l in range(self.t + 1, m - self.t) if l != self.forced_i_position
        )


def _i_run_free(bip: Bipartition, k: int, length: int):
    """All words of the given length with every I-run shorter than k, in lex order."""
    if length == 0:
        yield ()
        return
    symbols = range(bip.q)
    word = [0] * length

    def rec(pos: int, run: int):
        if pos == length:
            yield tuple(word)
            return
        for s in symbols:
            nrun = run + 1 if bip.in_I(s) else 0
            if nrun == k:
                continue
            word[pos] = s
            yield from rec(pos + 1, nrun)

    yield from rec(0, 0)


def build_s(bip: Bipartition, n: int, k: int, guard: int | None = None) -> Code:
    """The leading-run code for (n, k): I^k, J, an I^k-free window, J.

    For k = n-1 the delimiter and the tail coincide, giving I^(n-1) x J.
    """
    if n < 2 or not 1 <= k <= n - 1:
        raise InvalidInputError(f"need n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")
    check_guard(bip.q, n, guard)
    i_pool = tuple(sorted(bip.I))
    j_pool = tuple(sorted(bip.J))
    words = []
    if k == n - 1:
        for head in product(i_pool, repeat=k):
            for tail in j_pool:
                words.append(head + (tail,))
    else:
        for head in product(i_pool, repeat=k):
            for d1 in j_pool:
                base = head + (d1,)
                for middle in _i_run_free(bip, k, n - k - 2):
                    for d2 in j_pool:
                        words.append(base + middle + (d2,))
    return Code(n=n, words=frozenset(words), q=bip.q, bip=bip)


def build_s_classic(q: int, n: int, k: int, guard: int | None = None) -> Code:
    """build_s with the one-symbol class I = {0}."""
    return build_s(Bipartition(q, {0}), n, k, guard=guard)


def _v_pools(params: ExpansionParams, bip: Bipartition, m: int) -> list[tuple[int, ...]]:
    t = params.t
    fp = params.forced_i_position
    if not (t + 1 <= m <= params.n) or m == fp:
        raise InvalidInputError(
            f"member length m={m} invalid for n={params.n}, k={params.k} "
            f"(need {t + 1} <= m <= {params.n}, m != {fp})"
        )
    i_pool = tuple(sorted(bip.I))
    j_pool = tuple(sorted(bip.J))
    free = tuple(range(bip.q))
    pools = [i_pool] * t + [j_pool]
    if m == t + 1:
        return pools
    for pos in range(t + 2, m):
        pools.append(i_pool if pos == fp else free)
    pools.append(j_pool)
    return pools


def build_v(params: ExpansionParams, bip: Bipartition, m: int) -> Code:
    """One shell of candidate members of length m.

    Coordinates 1..t come from I and coordinate t+1 from J; the last
    coordinate comes from J; coordinate forced_i_position, when m reaches
    past it, comes from I; everything else is free.
    """
    return Code(n=m, words=frozenset(product(*_v_pools(params, bip, m))), q=bip.q, bip=bip)


_u_cache: dict[tuple, frozenset] = {}


def clear_u_cache() -> None:
    """Drop memoized u-sets (keyed by (q, I, n, k, m))."""
    _u_cache.clear()


def _u_words(params: ExpansionParams, bip: Bipartition, m: int) -> frozenset[Word]:
    key = (bip.q, bip.i_mask, params.n, params.k, m)
    hit = _u_cache.get(key)
    if hit is not None:
        return hit
    shell = build_v(params, bip, m).words
    excluded = {l: _u_words(params, bip, l) for l in params.exclusion_lengths(m)}
    kept = frozenset(
        w for w in shell if all(w[m - l:] not in excluded[l] for l in excluded)
    )
    _u_cache[key] = kept
    return kept


def build_u(params: ExpansionParams, bip: Bipartition, m: int) -> Code:
    """Suffix-filtered shell: members of build_v(m) whose eligible suffixes
    avoid every shorter filtered set. Recursive and memoized."""
    return Code(n=m, words=_u_words(params, bip, m), q=bip.q, bip=bip)


def build_u_via_v_rule(params: ExpansionParams, bip: Bipartition, m: int) -> Code:
    """Variant filter that excludes against the raw shells instead.

    Agrees with build_u set-for-set; the tests check that, nothing here
    assumes it.
    """
    shell = build_v(params, bip, m).words
    excluded = {l: build_v(params, bip, l).words for l in params.exclusion_lengths(m)}
    kept = frozenset(
        w for w in shell if all(w[m - l:] not in excluded[l] for l in excluded)
    )
    return Code(n=m, words=kept, q=bip.q, bip=bip)


def v_suffix_class(params: ExpansionParams, bip: Bipartition, m: int) -> frozenset[Word]:
    """Full-length shell members whose m-suffix lies in the length-m shell."""
    if m > params.n - params.t - 1:
        raise InvalidInputError(f"suffix class needs m <= n-t-1 = {params.n - params.t - 1}")
    full = build_v(params, bip, params.n).words
    short = build_v(params, bip, m).words
    return frozenset(w for w in full if w[params.n - m:] in short)


def u_suffix_class(params: ExpansionParams, bip: Bipartition, m: int) -> frozenset[Word]:
    """Full-length shell members whose m-suffix lies in the filtered code."""
    if m > params.n - params.t - 1:
        raise InvalidInputError(f"suffix class needs m <= n-t-1 = {params.n - params.t - 1}")
    full = build_v(params, bip, params.n).words
    short = _u_words(params, bip, m)
    return frozenset(w for w in full if w[params.n - m:] in short)


def expansion_witness(bip: Bipartition, n: int, k: int, ell: int | None = None) -> Word:
    """A word, outside the leading-run code, that can always join it.

    For k = n-2 (n >= 5) the shape is I, I, J, I, then J repeated. Otherwise
    (n >= 6, n/2 <= k < n-2) pick ell in [n-k-1, k-1]: the shape is ell
    symbols from I, J, J, free zeros, one I, then J repeated. The
    lexicographically smallest word of the shape is returned.
    """
    i0 = min(bip.I)
    j0 = min(bip.J)
    if k == n - 2:
        if n < 5:
            raise InvalidInputError(f"witness for k = n-2 needs n >= 5, got n={n}")
        return (i0, i0, j0, i0) + (j0,) * (n - 4)
    if n < 6 or not (2 * k >= n and k < n - 2):
        raise InvalidInputError(f"witness needs n >= 6 and n/2 <= k < n-2, got n={n}, k={k}")
    if ell is None:
        raise InvalidInputError("this (n, k) range needs an explicit ell")
    if not n - k - 1 <= ell < k:
        raise InvalidInputError(f"ell={ell} outside [n-k-1, k-1] = [{n - k - 1}, {k - 1}]")
    return (i0,) * ell + (j0, j0) + (0,) * (n - k - 3) + (i0,) + (j0,) * (k - ell)


def build_expanded(bip: Bipartition, n: int, k: int, guard: int | None = None) -> Code:
    """The leading-run code together with its saturating companion set.

    Where the leading-run code is already non-expandable (k = n-1, 2k < n,
    or n = 4) it is returned unchanged. For n in {5, 6} the companion is a
    fixed product set; for n >= 7 it is the filtered code of full length.
    """
    if n < 4 or not 1 <= k <= n - 1:
        raise InvalidInputError(f"expansion needs n >= 4 and 1 <= k <= n-1, got n={n}, k={k}")
    check_guard(bip.q, n, guard)
    base = build_s(bip, n, k, guard=guard)
    if k == n - 1 or 2 * k < n or n == 4:
        return base
    i_pool = tuple(sorted(bip.I))
    j_pool = tuple(sorted(bip.J))
    free = tuple(range(bip.q))
    if n == 5:
        extra = frozenset(product(i_pool, i_pool, j_pool, i_pool, j_pool))
    elif n == 6 and k == 3:
        extra = frozenset(product(i_pool, i_pool, j_pool, j_pool, i_pool, j_pool))
    elif n == 6 and k == 4:
        extra = frozenset(product(i_pool, j_pool, i_pool, free, j_pool, j_pool))
    else:
        extra = _u_words(ExpansionParams(n, k), bip, n)
    return Code(n=n, words=base.words | extra, q=bip.q, bip=bip)
