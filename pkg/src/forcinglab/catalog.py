"""Named tournaments and the reference classification of 6-vertex tournaments."""

from __future__ import annotations

import re
from functools import lru_cache

from .tournament import Tournament, canonical_code, format_code, is_isomorphic, parse_code

# Upper-triangle codes, row i listing A[i][i+1..k].
NAMED_CODES: dict[str, str] = {
    "C_3": "10,1",
    # the only strongly connected 4-vertex tournament (a 4-cycle plus two chords)
    "C_4": "001,00,0",
    # the unique strongly connected, rigid, twin-free 5-vertex class other than H_5
    "F_5": "0001,000,01,0",
    "H_5": "0010,001,00,0",
    "H_6^1": "00010,0000,001,00,0",
    "H_6^2": "00110,0001,000,01,0",
    "H_6^3": "00101,0010,000,00,0",
    "H_6^4": "00100,0010,001,00,0",
    "H_6^5": "00100,0010,000,01,0",
    "H_6^6": "00100,0010,000,00,1",
    "H_6^7": "00100,0011,001,00,0",
    "H_6^8": "00100,0011,000,01,0",
    "H_6^9": "00111,0010,000,00,0",
    "H_6^10": "00111,0010,001,00,0",
    "H_6^11": "00010,0101,000,00,0",
    "H_6^12": "01010,0001,000,00,0",
    "H_6^13": "01010,0000,001,00,0",
    "H_6^14": "01010,0000,000,01,0",
    "S_7": "001011,00101,0010,001,00,0",
    "S_11": "1100110001,101001011,11010101,0001101,100011,00110,1000,100,10,0",
    "S_15": (
        "01010100100110,0011110000001,010001001101,10011000010,1011101010,"
        "110110010,11101001,1110001,010110,11110,0101,001,10,0"
    ),
}

H6_NAMES = tuple(f"H_6^{i}" for i in range(1, 15))

# (code, flags, name) for every non-transitive 6-vertex class.
# A: not strongly connected, B: non-trivial automorphism, C: twins,
# D: blow-up witness, E: parametrised step tournamenton.
REFERENCE_TABLE: tuple[tuple[str, str, str], ...] = (
    ("00000,0000,000,01,0", "ABC", ""),
    ("00010,0000,000,00,0", "AC", ""),
    ("00011,0000,000,00,0", "C", ""),
    ("00010,0001,000,00,0", "C", ""),
    ("00010,0000,001,00,0", "E", "H_6^1"),
    ("00010,0000,000,01,0", "C", ""),
    ("00010,0000,000,00,1", "C", ""),
    ("00000,0010,000,00,0", "AC", ""),
    ("00001,0010,000,00,0", "C", ""),
    ("00000,0011,000,00,0", "AC", ""),
    ("00000,0010,001,00,0", "A", ""),
    ("00000,0010,000,01,0", "A", ""),
    ("00000,0010,000,00,1", "AC", ""),
    ("00000,0011,001,00,0", "AB", ""),
    ("00000,0000,010,00,0", "ABC", ""),
    ("00001,0000,010,00,0", "B", ""),
    ("00000,0001,010,00,0", "AB", ""),
    ("00000,0000,011,00,0", "AC", ""),
    ("00100,0000,000,00,0", "AC", ""),
    ("00110,0000,000,00,0", "AC", ""),
    ("00111,0000,000,00,0", "C", ""),
    ("00110,0001,000,00,0", "C", ""),
    ("00110,0000,001,00,0", "C", ""),
    ("00110,0000,000,01,0", "C", ""),
    ("00110,0000,000,00,1", "C", ""),
    ("00111,0000,001,00,0", "C", ""),
    ("00110,0001,001,00,0", "BC", ""),
    ("00111,0000,000,01,0", "BC", ""),
    ("00110,0001,000,01,0", "D", "H_6^2"),
    ("00100,0010,000,00,0", "A", ""),
    ("00101,0010,000,00,0", "D", "H_6^3"),
    ("00100,0011,000,00,0", "C", ""),
    ("00100,0010,001,00,0", "D", "H_6^4"),
    ("00100,0010,000,01,0", "D", "H_6^5"),
    ("00100,0010,000,00,1", "E", "H_6^6"),
    ("00101,0010,001,00,0", "B", ""),
    ("00100,0011,001,00,0", "E", "H_6^7"),
    ("00100,0011,000,01,0", "D", "H_6^8"),
    ("00110,0010,000,00,0", "AB", ""),
    ("00111,0010,000,00,0", "E", "H_6^9"),
    ("00111,0011,000,00,0", "C", ""),
    ("00111,0010,001,00,0", "D", "H_6^10"),
    ("00000,0100,000,00,0", "ABC", ""),
    ("00010,0100,000,00,0", "AB", ""),
    ("00011,0100,000,00,0", "BC", ""),
    ("00010,0101,000,00,0", "D", "H_6^11"),
    ("00010,0100,000,00,1", "B", ""),
    ("01000,0000,000,00,0", "ABC", ""),
    ("01000,0000,000,01,0", "AB", ""),
    ("01010,0000,000,00,0", "A", ""),
    ("01011,0000,000,00,0", "C", ""),
    ("01010,0001,000,00,0", "D", "H_6^12"),
    ("01010,0000,001,00,0", "D", "H_6^13"),
    ("01010,0000,000,01,0", "E", "H_6^14"),
    ("01010,0000,000,00,1", "C", ""),
)


class UnknownTournament(KeyError):
    pass


def normalize_name(name: str) -> str:
    """Accept ``H_6^{14}``, ``H6^14``, ``h_6^14`` and similar spellings."""
    s = name.strip().replace("{", "").replace("}", "")
    m = re.fullmatch(r"([A-Za-z])_?(\d+)(?:\^(\d+))?", s)
    if not m:
        raise UnknownTournament(name)
    letter, n, sup = m.groups()
    return f"{letter.upper()}_{n}" + (f"^{sup}" if sup else "")


def catalog(name: str) -> Tournament:
    key = normalize_name(name)
    if key.startswith("T_") and "^" not in key:
        k = int(key[2:])
        if not 1 <= k <= 16:
            raise UnknownTournament(name)
        return Tournament.transitive(k)
    try:
        return parse_code(NAMED_CODES[key])
    except KeyError:
        raise UnknownTournament(name) from None


def catalog_names() -> list[str]:
    return ["T_4", *NAMED_CODES]


@lru_cache(maxsize=None)
def _name_by_canonical() -> dict[str, str]:
    return {canonical_code(parse_code(code)): name for name, code in NAMED_CODES.items()}


def name_of(t: Tournament) -> str | None:
    """Catalog name of the class of ``t`` (transitive ones are ``T_k``)."""
    if t.k > 8:
        for name, code in NAMED_CODES.items():
            other = parse_code(code)
            if other.k == t.k and is_isomorphic(other, t):
                return name
        return None
    code = canonical_code(t)
    if code == canonical_code(Tournament.transitive(t.k)):
        return f"T_{t.k}"
    return _name_by_canonical().get(code)


@lru_cache(maxsize=None)
def reference_rows() -> dict[str, tuple[str, str, str]]:
    """Reference table keyed by canonical code."""
    return {canonical_code(parse_code(code)): (code, flags, name) for code, flags, name in REFERENCE_TABLE}


def display_code(t: Tournament) -> str:
    """The customary code for the class of ``t``: reference/catalog labeling if known."""
    if t.k <= 8:
        canon = canonical_code(t)
        ref = reference_rows().get(canon)
        if ref is not None:
            return ref[0]
        name = _name_by_canonical().get(canon)
        if name is not None:
            return NAMED_CODES[name]
        return canon
    return format_code(t)
