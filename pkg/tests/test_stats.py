import math

import pytest
from hypothesis import given

import oracles
from conftest import balanced_texts
from dyckmaps import (
    NotBilateralError,
    PathWord,
    contacts,
    crossings,
    downs_at_even_height,
    downs_at_odd_height,
    narayana,
    parse_word,
    peaks,
    semilength,
    stat_record,
    ups_at_even_height,
    ups_at_odd_height,
    valleys,
)

GOLDEN_TOP = "UUUUDDDUUUUDDUDDDD"
GOLDEN_BOTTOM = "UUUDDUUUDUUDDDUDDD"


def test_semilength():
    assert semilength(parse_word("UUDD")) == 2
    assert semilength(parse_word("")) == 0
    assert semilength(parse_word(GOLDEN_TOP)) == 9


def test_semilength_rejects_open_words():
    with pytest.raises(NotBilateralError):
        semilength(parse_word("UDU"))


def test_peaks_examples():
    assert peaks(parse_word(GOLDEN_BOTTOM)) == 4
    assert peaks(parse_word("DDUU")) == 0
    assert peaks(parse_word("DUDU")) == 1  # peak at height 0 counts


def test_valleys_examples():
    assert valleys(parse_word("UDUD")) == 1
    assert valleys(parse_word("UUDD")) == 0
    assert valleys(parse_word("DDUU")) == 1


def test_contacts_examples():
    assert contacts(parse_word(GOLDEN_TOP)) == 1
    assert contacts(parse_word("UDUD")) == 2
    assert contacts(parse_word("DU")) == 1


def test_crossings_examples():
    assert crossings(parse_word("UDDU")) == 1
    assert crossings(parse_word("UUDD")) == 0
    assert crossings(parse_word("UDDUUD")) == 2


def test_parity_counts_examples():
    assert ups_at_odd_height(parse_word(GOLDEN_TOP)) == 4
    assert ups_at_odd_height(parse_word("DUDU")) == 0
    assert ups_at_odd_height(parse_word("DDUU")) == 1  # the up-step at height -1


def test_all_stats_match_oracle_exhaustively():
    for n in range(6):
        for text in oracles.all_balanced(n):
            w = PathWord(text)
            assert peaks(w) == oracles.peaks(text)
            assert valleys(w) == oracles.valleys(text)
            assert contacts(w) == oracles.contacts(text)
            assert crossings(w) == oracles.crossings(text)
            assert ups_at_odd_height(w) == oracles.ups_odd(text)
            assert ups_at_even_height(w) == oracles.ups_even(text)
            assert downs_at_odd_height(w) == oracles.downs_odd(text)
            assert downs_at_even_height(w) == oracles.downs_even(text)


def test_stat_record_examples():
    rec = stat_record(parse_word("UD"))
    assert rec.n == 1
    assert rec.peaks == 1
    assert rec.contacts == 1
    assert rec.ups_odd == 1
    assert rec.crossings == 0
    assert rec.is_prime is True

    empty = stat_record(parse_word(""))
    assert empty == type(empty)(0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, False)

    bottom = stat_record(parse_word(GOLDEN_BOTTOM))
    assert (bottom.n, bottom.peaks, bottom.contacts) == (9, 4, 1)


def test_stat_record_rejects_open_words():
    with pytest.raises(NotBilateralError):
        stat_record(parse_word("UUD"))


def test_stat_record_consistent_with_parts():
    for n in range(6):
        for text in oracles.all_balanced(n):
            w = PathWord(text)
            rec = stat_record(w)
            assert rec.n == n
            assert rec.peaks == peaks(w)
            assert rec.valleys == valleys(w)
            assert rec.contacts == contacts(w)
            assert rec.crossings == crossings(w)
            assert rec.ups_odd == ups_at_odd_height(w)
            assert rec.ups_even == ups_at_even_height(w)
            assert rec.downs_odd == downs_at_odd_height(w)
            assert rec.downs_even == downs_at_even_height(w)
            assert rec.max_height == w.max_height
            assert rec.min_height == w.min_height
            assert rec.is_prime == (
                oracles.classify(text) == "dyck" and rec.contacts == 1
            )


def test_stat_record_serialization():
    rec = stat_record(parse_word("UD"))
    assert rec.to_text() == (
        "n:1 peaks:1 valleys:0 contacts:1 crossings:0 ups_odd:1 ups_even:0 "
        "downs_odd:1 downs_even:0 max_height:1 min_height:0 is_prime:true"
    )
    assert rec.to_dict()["is_prime"] is True


@given(balanced_texts(max_n=10))
def test_stat_invariants(text):
    w = PathWord(text)
    rec = stat_record(w)
    n = len(text) // 2
    assert rec.ups_odd + rec.ups_even == n
    assert rec.downs_odd + rec.downs_even == n
    assert rec.peaks - rec.valleys in (-1, 0, 1)
    assert rec.contacts >= rec.crossings
    if oracles.classify(text) == "dyck":
        assert rec.peaks == rec.valleys + 1
        assert rec.contacts >= 1


def test_long_words_use_same_definitions():
    base = "UUDDUDDUUDUDDDUU"  # balanced, dips below axis
    text = base * 512  # above the vectorised-scan threshold
    w = PathWord(text)
    assert peaks(w) == oracles.peaks(text)
    assert valleys(w) == oracles.valleys(text)
    assert contacts(w) == oracles.contacts(text)
    assert crossings(w) == oracles.crossings(text)
    assert ups_at_odd_height(w) == oracles.ups_odd(text)
    assert downs_at_odd_height(w) == oracles.downs_odd(text)


def test_narayana_values():
    assert narayana(1, 1) == 1
    assert narayana(3, 2) == 3
    assert narayana(5, 3) == 20
    assert [narayana(5, k) for k in range(1, 6)] == [1, 10, 20, 10, 1]
    assert narayana(4, 0) == 0
    assert narayana(4, 5) == 0


def test_narayana_requires_positive_n():
    with pytest.raises(ValueError):
        narayana(0, 1)


def test_narayana_matches_brute_force_peak_counts():
    for n in range(1, 7):
        by_peaks = {}
        for text in oracles.all_dyck(n):
            by_peaks[oracles.peaks(text)] = by_peaks.get(oracles.peaks(text), 0) + 1
        assert by_peaks == {k: narayana(n, k) for k in range(1, n + 1) if narayana(n, k)}


def test_narayana_rows_sum_to_catalan():
    for n in range(1, 13):
        assert sum(narayana(n, k) for k in range(1, n + 1)) == oracles.catalan(n)


def test_narayana_exact_at_large_n():
    # stays exact well past any fixed-width integer
    assert narayana(40, 20) == (
        math.comb(40, 20) * math.comb(40, 19) // 40
    )
