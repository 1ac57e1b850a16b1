import random

import pytest
from hypothesis import given, settings, strategies as st

from polebracket.polewords import (
    L,
    MARK,
    R,
    canonical_key,
    confluence_oracle,
    equivalent,
    index,
    make_word,
    parse_word,
    random_equivalent,
    reduce,
    render,
    reverse_swap,
    rotate,
    slide_mark,
)


def test_parse_render_round_trip():
    w = parse_word("(I:L)(O:R)|f|(I:R)(O:R)")
    assert w == (L, R, MARK, R, R)
    assert render(w) == "(I:L)(O:R)|f|(I:R)(O:R)"


def test_parse_rejects_nonalternating():
    with pytest.raises(ValueError):
        parse_word("(I:L)(I:R)")
    with pytest.raises(ValueError):
        parse_word("(I:L)(O:R)(I:L)")
    with pytest.raises(ValueError):
        parse_word("(X:L)")


def test_reduce_equal_sides_cancel():
    # adjacent pair with equal sides and no marks between cancels
    assert reduce((L, L)) == ()
    assert reduce((R, R)) == ()
    assert index((L, L)) == 0


def test_reduce_opposite_sides_block():
    assert reduce((L, R)) == (L, R)
    assert index((L, R)) == 1


def test_mark_parity_flips_cancellation():
    # a mark between opposite sides enables the cancellation...
    assert reduce((L, MARK, R)) == (MARK,)
    # ...and between equal sides disables the direct arc, but the wrap
    # arc has no mark, so the pair still cancels the other way around
    assert reduce((L, L, MARK)) == (MARK,)
    # marks on both arcs block both routes
    assert reduce((MARK, L, MARK, L)) == (MARK, L, MARK, L)
    assert index((MARK, L, MARK, L)) == 1


def test_fully_reducible_chain():
    # nested cancellations: poles vanish two at a time
    w = (L, R, R, L)
    assert reduce(w) == ()
    assert index(w) == 0


def test_alternating_word_irreducible():
    w = (L, R, L, R)
    assert reduce(w) == w
    assert index(w) == 2
    assert index((L, R)) == 1


def test_canonical_key_invariances():
    w = (L, MARK, R, L, R)
    assert canonical_key(w) == canonical_key(rotate(w, 2))
    assert canonical_key(w) == canonical_key(reverse_swap(w))
    marks = [i for i, x in enumerate(w) if x == MARK]
    assert canonical_key(w) == canonical_key(slide_mark(w, marks[0]))


def test_equivalent_distinguishes():
    assert equivalent((L, R), (R, L))          # rotation
    assert equivalent((L, L), (R, R))          # reversal swaps sides
    assert not equivalent((L, R), (L, L))
    assert not equivalent((L, R, L, R), (L, R))


def test_slide_mark_toggles_side():
    w = (MARK, L, R)
    assert slide_mark(w, 0) == (R, MARK, R)


_items = st.lists(st.sampled_from([L, R, MARK]), max_size=12)


@given(_items)
@settings(max_examples=120, deadline=None)
def test_reduce_idempotent(items):
    w = make_word(items)
    assert reduce(reduce(w)) == reduce(w)


@given(_items, st.integers(min_value=0, max_value=10**6))
@settings(max_examples=120, deadline=None)
def test_index_is_class_invariant(items, seed):
    w = make_word(items)
    rng = random.Random(seed)
    w2 = random_equivalent(w, rng)
    assert equivalent(w, w2)
    assert index(w) == index(w2)


@given(_items)
@settings(max_examples=100, deadline=None)
def test_confluence_on_small_words(items):
    assert confluence_oracle(make_word(items))


def test_confluence_guard():
    with pytest.raises(ValueError):
        confluence_oracle((L,) * 20, max_poles=12)
