"""Literal values transcribed from the source document, used as fixed targets."""

from fractions import Fraction as F

from forcinglab.polynomial import RationalPolynomial

POLY_H14_A = RationalPolynomial(
    [F(1, 32768), 0, F(1, 8192), 0, F(-5, 16384), 0, F(-9, 4096), 0, F(-7, 4096)]
)
POLY_H9_B = RationalPolynomial(
    [F(1, 32768), 0, 0, 0, F(1, 3072), 0, F(-1, 216), 0, F(-5, 5184), 0, F(13, 486), 0, F(-1, 324)]
)
POLY_H6_C = RationalPolynomial(
    [F(1, 32768), 0, 0, F(3, 32768), F(-81, 131072), F(-3, 8192), F(27, 65536), 0, F(-63, 131072), 0, 0, 0, F(15, 1024)]
)

# (pattern, matrix, x, lower bound) for the three evaluations
EVALUATIONS = [
    ("H_6^14", "A_x", F(30721, 100000), F(37337, 10**9)),
    ("H_6^9", "B_x", F(21740, 100000), F(30757, 10**9)),
    ("H_6^6", "C_x", F(10418, 100000), F(30544, 10**9)),
]

CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 4, 5: 12, 6: 56, 7: 456}

BLOWUP_COUNTS = (
    [("H_5", "S_7", 21, F(16807, 1024))]
    + [(f"H_6^{i}", "S_11", 55, F(1771561, 32768)) for i in (2, 3, 4, 8, 10, 11, 13)]
    + [(f"H_6^{i}", "S_15", 357, F(11390625, 32768)) for i in (5, 12)]
)

D_NAMES = {f"H_6^{i}" for i in (2, 3, 4, 5, 8, 10, 11, 12, 13)}
E_NAMES = {f"H_6^{i}" for i in (1, 6, 7, 9, 14)}

# classification table rows: (code, flags, name)
TABLE_ROWS = [
    ('00000,0000,000,01,0', 'ABC', ''),
    ('00110,0001,000,01,0', 'D', 'H_6^2'),
    ('00010,0000,000,00,0', 'AC', ''),
    ('00100,0010,000,00,0', 'A', ''),
    ('00011,0000,000,00,0', 'C', ''),
    ('00101,0010,000,00,0', 'D', 'H_6^3'),
    ('00010,0001,000,00,0', 'C', ''),
    ('00100,0011,000,00,0', 'C', ''),
    ('00010,0000,001,00,0', 'E', 'H_6^1'),
    ('00100,0010,001,00,0', 'D', 'H_6^4'),
    ('00010,0000,000,01,0', 'C', ''),
    ('00100,0010,000,01,0', 'D', 'H_6^5'),
    ('00010,0000,000,00,1', 'C', ''),
    ('00100,0010,000,00,1', 'E', 'H_6^6'),
    ('00000,0010,000,00,0', 'AC', ''),
    ('00101,0010,001,00,0', 'B', ''),
    ('00001,0010,000,00,0', 'C', ''),
    ('00100,0011,001,00,0', 'E', 'H_6^7'),
    ('00000,0011,000,00,0', 'AC', ''),
    ('00100,0011,000,01,0', 'D', 'H_6^8'),
    ('00000,0010,001,00,0', 'A', ''),
    ('00110,0010,000,00,0', 'AB', ''),
    ('00000,0010,000,01,0', 'A', ''),
    ('00111,0010,000,00,0', 'E', 'H_6^9'),
    ('00000,0010,000,00,1', 'AC', ''),
    ('00111,0011,000,00,0', 'C', ''),
    ('00000,0011,001,00,0', 'AB', ''),
    ('00111,0010,001,00,0', 'D', 'H_6^10'),
    ('00000,0000,010,00,0', 'ABC', ''),
    ('00000,0100,000,00,0', 'ABC', ''),
    ('00001,0000,010,00,0', 'B', ''),
    ('00010,0100,000,00,0', 'AB', ''),
    ('00000,0001,010,00,0', 'AB', ''),
    ('00011,0100,000,00,0', 'BC', ''),
    ('00000,0000,011,00,0', 'AC', ''),
    ('00010,0101,000,00,0', 'D', 'H_6^11'),
    ('00100,0000,000,00,0', 'AC', ''),
    ('00010,0100,000,00,1', 'B', ''),
    ('00110,0000,000,00,0', 'AC', ''),
    ('01000,0000,000,00,0', 'ABC', ''),
    ('00111,0000,000,00,0', 'C', ''),
    ('01000,0000,000,01,0', 'AB', ''),
    ('00110,0001,000,00,0', 'C', ''),
    ('01010,0000,000,00,0', 'A', ''),
    ('00110,0000,001,00,0', 'C', ''),
    ('01011,0000,000,00,0', 'C', ''),
    ('00110,0000,000,01,0', 'C', ''),
    ('01010,0001,000,00,0', 'D', 'H_6^12'),
    ('00110,0000,000,00,1', 'C', ''),
    ('01010,0000,001,00,0', 'D', 'H_6^13'),
    ('00111,0000,001,00,0', 'C', ''),
    ('01010,0000,000,01,0', 'E', 'H_6^14'),
    ('00110,0001,001,00,0', 'BC', ''),
    ('01010,0000,000,00,1', 'C', ''),
    ('00111,0000,000,01,0', 'BC', ''),
]
