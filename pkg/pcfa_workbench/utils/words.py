"""Word tokenisation shared by the engine, the oracles and the CLI."""
from typing import Iterable, Sequence, Tuple, Union

Word = Tuple[str, ...]
WordLike = Union[str, Sequence[str]]


def single_char(alphabet: Iterable[str]) -> bool:
    """True when every symbol of the alphabet is one character long."""
    return all(len(symbol) == 1 for symbol in alphabet)


def tokenize(text: WordLike, alphabet: Iterable[str] = ()) -> Word:
    """Turn user input into a word.

    Strings are split into characters when the alphabet only has
    one-character symbols, otherwise on whitespace. Sequences are kept.
    """
    if not isinstance(text, str):
        return tuple(text)
    if single_char(alphabet):
        return tuple(text)
    return tuple(text.split())


def render(word: Sequence[str]) -> str:
    """Inverse of tokenize for reports."""
    if single_char(word):
        return "".join(word)
    return " ".join(word)
