import itertools

import pytest
from hypothesis import given, settings, strategies as st

from classical_schubert import poly, weyl
from classical_schubert.weyl import HAT, GroupElement, GroupType

GROUPS = [GroupType("A", 3), GroupType("A", 4), GroupType("B", 2), GroupType("B", 3), GroupType("C", 3), GroupType("D", 3), GroupType("D", 4)]


def elements_of(group):
    return st.sampled_from(weyl.weyl_group(group).elements)


@st.composite
def group_and_elements(draw, count=2):
    group = draw(st.sampled_from(GROUPS))
    return group, [draw(elements_of(group)) for _ in range(count)]


def test_identity_windows():
    assert weyl.identity(GroupType("B", 2)).window == (1, 2)
    assert weyl.identity(GroupType("A", 3)).window == (1, 2, 3)
    assert weyl.identity(GroupType("D", 3)).window == (1, 2, 3)


def test_apply_generator_examples():
    b2, d3 = GroupType("B", 2), GroupType("D", 3)
    assert weyl.apply_generator(weyl.identity(b2), 0, "right").window == (-1, 2)
    assert weyl.apply_generator(weyl.identity(d3), HAT, "right").window == (-2, -1, 3)
    s = GroupElement(GroupType("A", 2), (2, 1))
    assert weyl.apply_generator(s, 1, "right").window == (1, 2)


def test_length_examples():
    b2 = GroupType("B", 2)
    assert weyl.identity(b2).bar().length == 4
    assert weyl.identity(b2).length == 0
    assert GroupElement(b2, (-1, 2)).length == 1


def test_reduced_word_examples():
    b2 = GroupType("B", 2)
    assert weyl.reduced_word(weyl.identity(b2)) == ()
    assert weyl.reduced_word(GroupElement(b2, (-1, 2))) == (0,)
    assert weyl.reduced_word(weyl.longest_element(b2)) == (0, 1, 0, 1)


@pytest.mark.parametrize("tag,n,order", [("B", 2, 8), ("A", 3, 6), ("D", 3, 24), ("C", 3, 48), ("D", 4, 192), ("A", 5, 120)])
def test_orders(tag, n, order):
    group = GroupType(tag, n)
    assert len(weyl.all_elements(group)) == order == group.order


def test_demazure_examples():
    b2 = GroupType("B", 2)
    s0, s1 = weyl.generator(b2, 0), weyl.generator(b2, 1)
    assert weyl.demazure_product(s1, s1) == s1
    for w in weyl.all_elements(b2):
        assert weyl.demazure_product(weyl.identity(b2), w) == w
    assert weyl.reduced_word(weyl.demazure_product(s0, s1)) == (0, 1)


def test_bruhat_matrix_b2_by_subwords():
    # oracle: v <= w iff some subword of one reduced word of w is a reduced word of v
    b2 = GroupType("B", 2)
    elements = weyl.all_elements(b2)
    for w in elements:
        word = weyl.reduced_word(w)
        below = set()
        for mask in itertools.product((0, 1), repeat=len(word)):
            sub = [a for a, keep in zip(word, mask) if keep]
            u = weyl.from_word(b2, sub)
            if u.length == len(sub):
                below.add(u)
        for v in elements:
            assert weyl.bruhat_leq(v, w) == (v in below)


def test_bruhat_b2_is_dihedral():
    # in a dihedral group v <= w iff v == w or l(v) < l(w): 1 + 4 + 8 + 12 + 8 pairs
    b2 = GroupType("B", 2)
    elements = weyl.all_elements(b2)
    for v in elements:
        for w in elements:
            assert weyl.bruhat_leq(v, w) == (v == w or v.length < w.length)
    assert sum(weyl.bruhat_leq(v, w) for v in elements for w in elements) == 33


def test_act_on_poly_examples():
    b2, d3 = GroupType("B", 2), GroupType("D", 3)
    x1, x2 = poly.var("x", 1), poly.var("x", 2)
    assert weyl.act_on_poly(weyl.generator(b2, 0), x1) == -x1
    assert weyl.act_on_poly(weyl.generator(b2, 1), x1 + x2) == x1 + x2
    assert weyl.act_on_poly(weyl.generator(d3, HAT), x1) == -x2


@pytest.mark.parametrize("group", GROUPS, ids=str)
def test_length_matches_bfs(group):
    bfs = weyl.bfs_lengths(group)
    assert len(bfs) == group.order
    for window, d in bfs.items():
        assert weyl.length(GroupElement(group, window)) == d


@pytest.mark.parametrize("group", [g for g in GROUPS if g.tag in "BC"], ids=str)
def test_bar_complements_length(group):
    n = group.rank
    for w in weyl.all_elements(group):
        assert w.length + w.bar().length == n * n


@pytest.mark.parametrize(
    "group,count", [(GroupType("B", 2), 2), (GroupType("B", 3), 42), (GroupType("A", 4), 16), (GroupType("D", 4), 2316)], ids=str
)
def test_reduced_word_count_of_longest(group, count):
    words = weyl.reduced_words(weyl.longest_element(group))
    assert len(words) == count
    assert words == sorted(words)
    assert weyl.reduced_words(weyl.longest_element(group), limit=1) == words[:1]


@settings(max_examples=60, deadline=None)
@given(group_and_elements(3))
def test_product_is_associative(ge):
    _, (a, b, c) = ge
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60, deadline=None)
@given(group_and_elements(2))
def test_inverse_and_length(ge):
    group, (a, b) = ge
    e = weyl.identity(group)
    assert a * a.inverse() == e == a.inverse() * a
    assert a.inverse().length == a.length
    assert (a * b).length <= a.length + b.length


@settings(max_examples=60, deadline=None)
@given(group_and_elements(1))
def test_reduced_words_evaluate_back(ge):
    group, (w,) = ge
    for word in weyl.reduced_words(w, limit=10):
        assert len(word) == w.length
        assert weyl.from_word(group, word) == w


@settings(max_examples=40, deadline=None)
@given(group_and_elements(3))
def test_demazure_is_associative_and_monotone(ge):
    _, (a, b, c) = ge
    dp = weyl.demazure_product
    assert dp(dp(a, b), c) == dp(a, dp(b, c))
    assert weyl.bruhat_leq(a, dp(a, b)) and weyl.bruhat_leq(b, dp(a, b))


@settings(max_examples=40, deadline=None)
@given(group_and_elements(2))
def test_bruhat_is_compatible_with_length_and_inverse(ge):
    _, (v, w) = ge
    if weyl.bruhat_leq(v, w):
        assert v.length <= w.length
        assert weyl.bruhat_leq(v.inverse(), w.inverse())
        if v.length == w.length:
            assert v == w


@settings(max_examples=40, deadline=None)
@given(group_and_elements(1))
def test_window_and_word_round_trip(ge):
    group, (w,) = ge
    assert weyl.parse_window(group, weyl.format_window(w.window)) == w
    word = weyl.reduced_word(w)
    assert weyl.parse_word(weyl.format_word(word)) == word


def test_invalid_elements_rejected():
    with pytest.raises(weyl.WeylError):
        GroupElement(GroupType("D", 3), (-1, 2, 3))
    with pytest.raises(weyl.WeylError):
        GroupElement(GroupType("A", 2), (-1, 2))
    with pytest.raises(weyl.WeylError):
        GroupElement(GroupType("B", 2), (1, 1))
    with pytest.raises(weyl.WeylError):
        weyl.generator(GroupType("A", 3), 0)
    with pytest.raises(weyl.WeylError):
        weyl.parse_window(GroupType("B", 2), "1,x")


def test_embedding_preserves_length():
    for w in weyl.all_elements(GroupType("B", 3)):
        assert w.embed().length == w.length
        assert w.embed().group == GroupType("B", 4)
