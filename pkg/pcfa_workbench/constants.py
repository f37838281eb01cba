class Label():
    """Reserved transition labels of the system file format."""

    # move without consuming input
    LAMBDA = "LAMBDA"

    # right endmarker appended to every input word
    END = "END"


RESERVED_LABELS = frozenset({Label.LAMBDA, Label.END})

# OCA boundary symbol seen by the leftmost cell
OCA_BOUNDARY = "#"

# characters a state or symbol name may not contain inside VALC tokens
OCA_FORBIDDEN_CHARS = frozenset(" \t\n,()[]'")


class LanguageToken():
    """Stable CLI tokens for the witness languages."""

    EXPO = "expo"
    POLY = "poly"
    WBW = "wbw"
    EXPO_WBW = "expo-wbw"
    POLY_WBW = "poly-wbw"
    VALC_PRIME = "valc-prime"
    INVALC_PRIME = "invalc-prime"
    L_R = "l-r"


CSV_HEADER = ("m", "len", "verdict", "steps", "comms", "bound", "ratio")
