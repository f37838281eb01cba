import pytest

from pcfa_workbench.configs.config import UnitTestConfig
from pcfa_workbench.errors import BadParamError
from pcfa_workbench.gallery import (
    EXPO,
    EXPO_WBW,
    POLY,
    POLY_WBW,
    WBW,
    LanguageId,
    LanguageKind,
    generate_member,
    language_alphabet,
    oracle,
    parse_language,
)
from pcfa_workbench.gallery.generators import alternating_bits
from pcfa_workbench.oca import encode_valc
from pcfa_workbench.oca.valc import ValcString

pytestmark = pytest.mark.unit


@pytest.mark.parametrize("lang,m,payload,expected", [
    (EXPO, 1, None, "$abaa&"),
    (EXPO, 2, None, "$abaabaaaa&"),
    (POLY, 0, None, "$a&"),
    (POLY, 2, None, "$abaaabaaaaa&"),
    (WBW, 3, None, "010b010"),
    (WBW, 3, "110", "110b110"),
    (EXPO_WBW, 1, None, "$0ba00&"),
    (EXPO_WBW, 2, None, "$01ba00aa11&"),
    (POLY_WBW, 2, None, "$01ba00aaa11&"),
    (POLY_WBW, 2, ["1", "1"], "$11ba11aaa11&"),
])
def test_generated_members(lang, m, payload, expected):
    assert generate_member(lang, m, payload) == expected
    assert oracle(lang, expected)


@pytest.mark.parametrize("lang,lowest", [(EXPO, 1), (POLY, 0), (WBW, 1), (EXPO_WBW, 1), (POLY_WBW, 1)])
def test_generated_words_satisfy_their_oracle(lang, lowest):
    for m in range(lowest, lowest + 8):
        word = generate_member(lang, m)
        assert oracle(lang, word)
        assert set(word) <= language_alphabet(lang)


@pytest.mark.parametrize("lang,word", [
    (EXPO, "$a&"),
    (EXPO, "$abaaa&"),
    (EXPO, "$aba&"),
    (EXPO, "abaa"),
    (POLY, "$aa&"),
    (POLY, "$abaa&"),
    (POLY, "$&"),
    (WBW, "b"),
    (WBW, "01b10"),
    (WBW, "0b0b0"),
    (EXPO_WBW, "$0ba01&"),
    (EXPO_WBW, "$01ba00aa00&"),
    (EXPO_WBW, "$01ba00a11&"),
    (EXPO_WBW, "$0b&"),
    (POLY_WBW, "$01ba00aa11&"),
    (POLY_WBW, "$0baa00&"),
])
def test_oracle_rejects(lang, word):
    assert not oracle(lang, word)


def test_oracle_takes_token_sequences():
    assert oracle(EXPO, ["$", "a", "b", "a", "a", "&"])
    assert not oracle(EXPO, ["$", "ab", "a", "a", "&"])


@pytest.mark.parametrize("call", [
    lambda: generate_member(EXPO, 0),
    lambda: generate_member(POLY, -1),
    lambda: generate_member(WBW, 2, "0"),
    lambda: generate_member(WBW, 2, "02"),
    lambda: generate_member(EXPO_WBW, 0),
])
def test_bad_parameters(call):
    with pytest.raises(BadParamError):
        call()


def test_generated_length_is_capped():
    config = UnitTestConfig(MAX_GENERATED_LENGTH=100)
    assert len(generate_member(EXPO, 5, config=config)) == 70
    with pytest.raises(BadParamError):
        generate_member(EXPO, 6, config=config)


def test_alternating_bits():
    assert alternating_bits(5) == "01010"
    assert alternating_bits(0) == ""


def test_parse_language(delay_oca):
    assert parse_language("expo") == EXPO
    assert parse_language(" Poly-WBW ") == POLY_WBW
    assert parse_language("l-r", delay_oca) == LanguageId.L_R(delay_oca)
    assert parse_language("wbw", delay_oca).oca is None
    with pytest.raises(BadParamError):
        parse_language("valc-prime")
    with pytest.raises(BadParamError):
        parse_language("anbn")
    with pytest.raises(BadParamError):
        LanguageId(kind=LanguageKind.EXPO, oca=delay_oca)
    assert LanguageKind.INVALC_PRIME.needs_oca
    assert not LanguageKind.WBW.needs_oca


def test_valc_prime_member(delay_oca):
    lang = LanguageId.VALC_PRIME(delay_oca)
    word = generate_member(lang, 1)
    tokens = word.split()
    assert len(tokens) == 151
    assert tokens[0] == "$1"
    assert tokens[8] == "$2"
    assert tokens[-1] == "&"
    assert oracle(lang, word)
    assert not oracle(LanguageId.INVALC_PRIME(delay_oca), word)


def test_valc_prime_takes_an_input_word(delay_oca):
    lang = LanguageId.VALC_PRIME(delay_oca)
    assert generate_member(lang, 1, "a") == generate_member(lang, 1)
    with pytest.raises(BadParamError):
        generate_member(lang, 1, "aa")


def test_invalc_prime_member(delay_oca):
    invalc = LanguageId.INVALC_PRIME(delay_oca)
    word = generate_member(invalc, 1)
    assert not word.endswith("&")
    assert oracle(invalc, word)
    assert not oracle(LanguageId.VALC_PRIME(delay_oca), word)


def test_valc_prime_needs_a_valid_block(delay_oca):
    valc = LanguageId.VALC_PRIME(delay_oca)
    invalc = LanguageId.INVALC_PRIME(delay_oca)
    tokens = generate_member(valc, 1).split()
    tokens[3] = tokens[2]
    broken = " ".join(tokens)
    assert not oracle(valc, broken)
    assert oracle(invalc, broken)
    # a foreign symbol puts a word outside both languages
    assert not oracle(invalc, broken + " x")
    # the unary suffix must match the block length
    short = generate_member(valc, 1).split()
    del short[-2]
    assert not oracle(valc, " ".join(short))


def test_computation_languages_reject_unusable_automata(sample_oca, signal_oca):
    # 39 pairs would need a suffix of 2^39 symbols
    with pytest.raises(BadParamError):
        generate_member(LanguageId.VALC_PRIME(sample_oca), 3, "cdd")
    # accepted at t = 1
    with pytest.raises(BadParamError):
        generate_member(LanguageId.VALC_PRIME(signal_oca), 1)
    with pytest.raises(BadParamError):
        generate_member(LanguageId.VALC_PRIME(sample_oca), 2, "cd")


def test_l_r_member(delay_oca):
    lang = LanguageId.L_R(delay_oca)
    word = generate_member(lang, 1)
    tokens = word.split()
    assert len(tokens) == 29
    assert tokens[9:16] == ["0'", "1", "0", "1", "0", "1", "0"]
    assert oracle(lang, word)


def test_l_r_rejects(delay_oca):
    lang = LanguageId.L_R(delay_oca)
    tokens = generate_member(lang, 1).split()
    unequal = list(tokens)
    unequal[18] = "1" if unequal[18] == "0" else "0"
    assert not oracle(lang, " ".join(unequal))
    unprimed = [token.rstrip("'") if token in ("0'", "1'") else token for token in tokens]
    assert not oracle(lang, " ".join(unprimed))
    assert not oracle(lang, " ".join(tokens[:-1]))


def test_l_r_needs_the_first_acceptance(delay_oca):
    # one extra step past the acceptance at t = 3 is still a valid computation
    symbols = encode_valc(delay_oca, "a").unpaired() + ["#", "(d3,d3)"]
    x = ValcString.from_symbols(symbols).tokens()
    u = ["0'"] + ["0"] * (len(x) - 1)
    word = ["$1", *x, "$2", *u, "$3", *u, "$4", "a", "b", "b", "&"]
    assert not oracle(LanguageId.L_R(delay_oca), word)
    first = ValcString.from_symbols(encode_valc(delay_oca, "a").unpaired()).tokens()
    u = ["0'"] + ["0"] * (len(first) - 1)
    word = ["$1", *first, "$2", *u, "$3", *u, "$4", "a", "b", "b", "&"]
    assert oracle(LanguageId.L_R(delay_oca), word)
