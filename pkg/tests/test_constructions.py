"""Construction outputs against paper-style hand expansions and brute filters."""

import pytest

import oracles
from crossbifix.codes import is_non_expandable
from crossbifix.constructions import (
    ExpansionParams,
    _u_words,
    build_expanded,
    build_s,
    build_s_classic,
    build_u,
    build_u_via_v_rule,
    build_v,
    clear_u_cache,
    expansion_witness,
    u_suffix_class,
    v_suffix_class,
)
from crossbifix.errors import InvalidInputError
from crossbifix.words import Bipartition

B2 = Bipartition(2, {0})


def W(*texts):
    return frozenset(tuple(int(c) for c in t) for t in texts)


# the two worked examples: (9, 6) and (9, 7) with I = {0}
V96 = W(
    "001000001", "001001001", "001000011", "001000101",
    "001000111", "001001011", "001001101", "001001111",
    "001100001", "001100011", "001100101", "001100111",
    "001101001", "001101011", "001101101", "001101111",
)
U96 = W(
    "001000101", "001000111", "001001011", "001001111", "001100101",
    "001100111", "001101011", "001101101", "001101111",
)
V97 = W(
    "001000001", "001000011", "001000101", "001000111",
    "001001001", "001001011", "001001101", "001001111",
    "001010001", "001010011", "001010101", "001010111",
    "001011001", "001011011", "001011101", "001011111",
)
U97 = W(
    "001000011", "001000111", "001001101", "001001111", "001010011",
    "001010101", "001010111", "001011011", "001011101", "001011111",
)


@pytest.mark.parametrize("n,k,t,fp", [
    (9, 6, 2, 5),
    (9, 7, 2, 4),
    (10, 5, 4, 9),
    (17, 9, 7, 15),
    (7, 4, 2, 5),
    (12, 10, 2, 4),
])
def test_params_derived_indices(n, k, t, fp):
    params = ExpansionParams(n, k)
    assert params.t == t and params.forced_i_position == fp


@pytest.mark.parametrize("n,k", [(6, 4), (7, 3), (7, 6), (9, 4), (9, 8)])
def test_params_rejects_out_of_range(n, k):
    with pytest.raises(InvalidInputError):
        ExpansionParams(n, k)


def test_member_and_exclusion_lengths():
    params = ExpansionParams(9, 6)  # t=2, forced position 5
    assert list(params.member_lengths()) == [3, 4, 6, 7, 8, 9]
    assert list(params.member_lengths(6)) == [3, 4, 6]
    assert list(params.exclusion_lengths(9)) == [3, 4, 6]
    assert list(params.exclusion_lengths(6)) == [3]
    assert list(params.exclusion_lengths(3)) == []


def test_leading_run_code_small_cases():
    assert build_s(B2, 5, 3).words == W("00011")
    assert build_s(B2, 4, 2).words == W("0011")
    assert build_s(B2, 6, 2).words == W("001011", "001101", "001111")
    assert build_s(B2, 7, 4).words == W("0000101", "0000111")
    assert build_s(B2, 5, 4).words == W("00001")  # k = n-1 shape
    assert build_s(Bipartition(3, {0, 2}), 4, 3).words == {
        (a, b, c, 1) for a in (0, 2) for b in (0, 2) for c in (0, 2)
    }


def test_leading_run_code_rejects():
    with pytest.raises(InvalidInputError):
        build_s(B2, 4, 0)
    with pytest.raises(InvalidInputError):
        build_s(B2, 4, 4)
    with pytest.raises(InvalidInputError):
        build_s(B2, 1, 1)


def test_s_classic_is_the_zero_class():
    assert build_s_classic(2, 5, 3).words == build_s(B2, 5, 3).words
    assert build_s_classic(3, 5, 3).bip == Bipartition(3, {0})


@pytest.mark.parametrize("q,i_set", [(2, {0}), (2, {1}), (3, {0}), (3, {0, 2})])
def test_leading_run_code_matches_brute_filter(q, i_set):
    bip = Bipartition(q, i_set)
    top = 9 if q == 2 else 8
    for n in range(2, top):
        for k in range(1, n):
            assert build_s(bip, n, k).words == oracles.s_code(q, i_set, n, k), (n, k)


def test_shells_match_worked_examples():
    assert build_v(ExpansionParams(9, 6), B2, 9).words == V96
    assert build_v(ExpansionParams(9, 7), B2, 9).words == V97
    assert build_v(ExpansionParams(9, 6), B2, 3).words == W("001")
    assert build_v(ExpansionParams(9, 6), B2, 4).words == W("0011")


def test_shell_rejects_bad_lengths():
    params = ExpansionParams(9, 6)
    for m in (2, 5, 10):  # below range, the forced position, above range
        with pytest.raises(InvalidInputError):
            build_v(params, B2, m)


def test_filtered_sets_match_worked_examples():
    p96 = ExpansionParams(9, 6)
    assert build_u(p96, B2, 3).words == W("001")
    assert build_u(p96, B2, 4).words == W("0011")
    assert build_u(p96, B2, 6).words == W("001101")
    assert build_u(p96, B2, 9).words == U96
    p97 = ExpansionParams(9, 7)
    assert build_u(p97, B2, 3).words == W("001")
    assert build_u(p97, B2, 5).words == W("00101")
    assert build_u(p97, B2, 6).words == W("001011")
    assert build_u(p97, B2, 9).words == U97


@pytest.mark.parametrize("q,i_set,n,k", [
    (2, {0}, 9, 6),
    (2, {0}, 9, 7),
    (2, {1}, 9, 6),
    (3, {0, 2}, 8, 5),
])
def test_shells_and_filters_match_brute_force(q, i_set, n, k):
    bip = Bipartition(q, i_set)
    params = ExpansionParams(n, k)
    for m in params.member_lengths():
        assert build_v(params, bip, m).words == oracles.v_code(q, i_set, n, k, m)
        assert build_u(params, bip, m).words == oracles.u_code(q, i_set, n, k, m)
        assert build_u(params, bip, m).words <= build_v(params, bip, m).words


@pytest.mark.parametrize("n,k", [(9, 6), (9, 7), (10, 6), (10, 8), (11, 7)])
def test_both_filter_rules_agree(n, k):
    params = ExpansionParams(n, k)
    for m in params.member_lengths():
        assert build_u(params, B2, m).words == build_u_via_v_rule(params, B2, m).words


@pytest.mark.parametrize("n,k", [(9, 6), (9, 7), (10, 7), (11, 8)])
def test_filtered_shells_are_codes_at_every_length(n, k):
    # each fixed-length filtered set is itself cross-bifix-free, not just
    # its full-length union with the leading-run code
    params = ExpansionParams(n, k)
    for m in params.member_lengths():
        words = build_u(params, B2, m).words
        assert words, m
        assert oracles.is_cross_bifix_free(words), m


def test_filter_cache_reuse_and_keying():
    clear_u_cache()
    params = ExpansionParams(9, 6)
    a = _u_words(params, B2, 9)
    assert _u_words(params, B2, 9) is a  # memoized object comes back
    flipped = Bipartition(2, {1})
    assert _u_words(params, flipped, 9) != a  # keyed by the class split
    clear_u_cache()
    again = _u_words(params, B2, 9)
    assert again == a and again is not a


def test_suffix_classes_nest():
    params = ExpansionParams(9, 6)
    full = build_v(params, B2, 9).words
    for m in params.member_lengths(9 - params.t - 1):
        v_cls = v_suffix_class(params, B2, m)
        u_cls = u_suffix_class(params, B2, m)
        assert u_cls <= v_cls <= full
        assert v_cls == {w for w in full if w[9 - m:] in build_v(params, B2, m).words}
    with pytest.raises(InvalidInputError):
        v_suffix_class(params, B2, 7)
    with pytest.raises(InvalidInputError):
        u_suffix_class(params, B2, 7)


def test_expansion_witness_values():
    assert expansion_witness(B2, 7, 5) == (0, 0, 1, 0, 1, 1, 1)
    assert expansion_witness(B2, 7, 4, ell=2) == (0, 0, 1, 1, 0, 1, 1)
    b3 = Bipartition(3, {0, 1})
    assert expansion_witness(b3, 7, 5) == (0, 0, 2, 0, 2, 2, 2)


def test_expansion_witness_rejects():
    with pytest.raises(InvalidInputError):
        expansion_witness(B2, 4, 2)  # k = n-2 needs n >= 5
    with pytest.raises(InvalidInputError):
        expansion_witness(B2, 7, 4)  # needs an explicit ell
    with pytest.raises(InvalidInputError):
        expansion_witness(B2, 7, 4, ell=1)
    with pytest.raises(InvalidInputError):
        expansion_witness(B2, 7, 4, ell=4)
    with pytest.raises(InvalidInputError):
        expansion_witness(B2, 5, 2)  # below n/2


@pytest.mark.parametrize("q,i_set", [(2, {0}), (3, {0, 1}), (3, {2})])
def test_expansion_witness_joins_the_code(q, i_set):
    bip = Bipartition(q, i_set)
    for n in range(5, 8):
        for k in range((n + 1) // 2, n - 1):
            code = build_s(bip, n, k)
            if k == n - 2:
                witnesses = [expansion_witness(bip, n, k)]
            else:
                witnesses = [expansion_witness(bip, n, k, ell=e)
                             for e in range(n - k - 1, k)]
            for w in witnesses:
                assert w not in code.words, (n, k, w)
                assert oracles.compatible(w, code.words), (n, k, w)


def test_expanded_small_cases():
    assert build_expanded(B2, 5, 3).words == W("00011", "00101")
    assert build_expanded(B2, 6, 3).words == W("000101", "000111", "001101")
    assert build_expanded(B2, 6, 4).words == W("000011", "010011", "010111")


def test_expanded_left_alone_when_already_saturated():
    for n, k in [(9, 4), (9, 8), (4, 2), (4, 3), (5, 4)]:
        assert build_expanded(B2, n, k).words == build_s(B2, n, k).words


def test_expanded_is_a_disjoint_union():
    params = ExpansionParams(9, 6)
    s = build_s(B2, 9, 6).words
    u = build_u(params, B2, 9).words
    e = build_expanded(B2, 9, 6).words
    assert e == s | u
    assert not (s & u)


@pytest.mark.parametrize("n,k", [(5, 3), (6, 3), (6, 4), (7, 4), (7, 5)])
def test_expanded_is_saturated_by_brute_force(n, k):
    e = build_expanded(B2, n, k)
    assert oracles.is_cross_bifix_free(e.words)
    assert not oracles.expansion_candidates(e.words, 2, n)


def test_expanded_saturated_ternary_spot():
    bip = Bipartition(3, {0, 1})
    assert is_non_expandable(build_expanded(bip, 7, 4)).non_expandable


def test_expanded_rejects():
    with pytest.raises(InvalidInputError):
        build_expanded(B2, 3, 1)
    with pytest.raises(InvalidInputError):
        build_expanded(B2, 5, 0)
