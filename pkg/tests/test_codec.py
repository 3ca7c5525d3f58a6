import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as hst

from lrm.codec import (
    BaseWord,
    Codeword,
    decode3,
    decode_general,
    demodulate,
    encode,
    is_legal,
    realizable,
    window_consistent,
)

profiles = hst.integers(min_value=4, max_value=8).flatmap(
    lambda n: hst.permutations(list(range(n)))
)


def test_demodulate_reference_profiles():
    assert demodulate((3, 5, 2, 7, 10), 3).symbols == (3, 4, 6, 3, 2)
    assert demodulate((0, 1, 2, 3, 4), 3).symbols == (6, 6, 6, 3, 2)


def test_demodulate_t2_is_the_ascent_indicator():
    # symbol 2 marks an ascent; the digit word is symbols minus one
    base = demodulate((3, 5, 2, 7, 10), 2)
    assert base.symbols == (2, 1, 2, 2, 1)
    assert encode(base).digits == (1, 0, 1, 1, 0)


def test_demodulate_rejects_short_or_clashing_profiles():
    with pytest.raises(ValueError):
        demodulate((1, 2), 3)
    with pytest.raises(ValueError):
        demodulate((1, 1, 2), 2)


def test_encode_reference_words():
    assert encode(BaseWord(3, (3, 4, 6, 3, 2))).to_text() == "02201"
    assert encode(BaseWord(3, (6, 6, 6, 3, 2))).to_text() == "22201"
    for n in (3, 5, 8):
        assert encode(BaseWord(3, (1,) * n)).digits == (0,) * n


def test_encode_rejects_inconsistent_words():
    # after an odd symbol only {1, 2, 4} may follow
    bad = BaseWord(3, (1, 6, 6, 3, 2))
    assert not window_consistent(bad)
    with pytest.raises(ValueError):
        encode(bad)


def test_realizable_verdicts():
    assert realizable(BaseWord(3, (1,) * 5)) == (False, None)
    assert realizable(BaseWord(3, (2, 5, 2, 5)))[0] is False
    ok, witness = realizable(BaseWord(3, (3, 4, 6, 3, 2)))
    assert ok
    assert demodulate(witness, 3).symbols == (3, 4, 6, 3, 2)


def test_realizable_witness_starts_at_zero():
    ok, witness = realizable(BaseWord(3, (6, 6, 6, 3, 2)))
    assert ok and min(witness) == 0


@given(profiles)
@settings(max_examples=60)
def test_realizable_witness_round_trips(profile):
    base = demodulate(profile, 3)
    ok, witness = realizable(base)
    assert ok
    assert demodulate(witness, 3) == base


def test_decode3_reference_words():
    assert decode3(Codeword.from_text("22201", 3)).symbols == (6, 6, 6, 3, 2)
    assert decode3(Codeword.from_text("02201", 3)).symbols == (3, 4, 6, 3, 2)
    for n in (3, 5, 8):
        assert decode3(Codeword(3, (0,) * n)) is None
        assert decode3(Codeword(3, (1,) * n)) is None


@given(profiles)
@settings(max_examples=60)
def test_decode3_inverts_encode(profile):
    base = demodulate(profile, 3)
    assert decode3(encode(base)) == base


@pytest.mark.parametrize("n", [4, 5])
def test_decode_general_matches_decode3(n):
    for digits in itertools.product(range(3), repeat=n):
        word = Codeword(3, digits)
        expected = {b for b in [decode3(word)] if b is not None}
        assert decode_general(word) == expected


def test_decode_general_round_trip_containment_t4():
    for profile in [(0, 1, 2, 3, 4, 5), (3, 1, 4, 0, 5, 2), (9, 2, 7, 1, 8, 0, 4, 6)]:
        base = demodulate(profile, 4)
        assert base in decode_general(encode(base))


@given(hst.integers(min_value=6, max_value=9).flatmap(lambda n: hst.permutations(list(range(n)))))
@settings(max_examples=40, deadline=None)
def test_decode_general_round_trip_containment_property(profile):
    for t in (2, 3, 4):
        base = demodulate(profile, t)
        assert base in decode_general(encode(base))


def test_decode_general_empty_on_all_ones():
    for n in (5, 6, 7):
        assert decode_general(Codeword(3, (1,) * n)) == set()


def test_is_legal_verdicts():
    assert not is_legal(Codeword(3, (1,) * 5))
    assert is_legal(Codeword.from_text("02201", 3))
    assert is_legal(Codeword.from_text("22201", 3))


def test_is_legal_t2_exhaustive():
    # exactly the binary words other than all-zeros and all-ones are legal
    for n in range(3, 11):
        legal = {
            digits
            for digits in itertools.product(range(2), repeat=n)
            if is_legal(Codeword(2, digits))
        }
        everything = set(itertools.product(range(2), repeat=n))
        assert legal == everything - {(0,) * n, (1,) * n}


def test_is_legal_small_n_falls_back_to_rankings():
    # n = t = 3 sits below the state-chain floor of 2t-2
    assert is_legal(Codeword(3, (2, 0, 1)))
    assert not is_legal(Codeword(3, (0, 0, 0)))


def test_word_text_round_trip():
    word = Codeword.from_text("02201", 3)
    assert word.to_text() == "02201"
    base = BaseWord.from_text("3,4,6,3,2", 3)
    assert base.to_text() == "3,4,6,3,2"
    with pytest.raises(ValueError):
        Codeword.from_text("03", 3)
    with pytest.raises(ValueError):
        BaseWord.from_text("0,1", 3)
