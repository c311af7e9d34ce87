"""Fixed 50-system test corpus (every system contains the digit 0).

Standard digit sets, the composite-base families, hand-picked collisions,
systems with fewer or more digits than the base, and seeded random picks.
"""

from .digitset import DigitSystem

_RAW = [
    (2, [0, 1]),
    (3, [0, 1, 2]),
    (4, [0, 1, 2, 3]),
    (5, [0, 1, 2, 3, 4]),
    (6, [0, 1, 2, 3, 4, 5]),
    (4, [0, 1, 8, 9]),
    (6, [0, 1, 12, 13, 24, 25]),
    (6, [0, 1, 2, 18, 19, 20]),
    (8, [0, 1, 16, 17, 32, 33, 48, 49]),
    (8, [0, 1, 2, 3, 32, 33, 34, 35]),
    (9, [0, 1, 2, 27, 28, 29, 54, 55, 56]),
    (3, [0, 1, 4]),
    (3, [0, 1, 5]),
    (2, [0, 3]),
    (2, [0, 1, 2]),
    (3, [0, 4]),
    (4, [0, 1, 3]),
    (5, [0, 1, 2, 3, 9]),
    (3, [0, 2, 4]),
    (4, [0, 2, 5, 7]),
    (3, [0, 1, 3]),
    (2, [0, 2, 3]),
    (4, [0, 1, 2, 3, 4]),
    (3, [0, 8, 15]),
    (6, [0, 7, 9, 10, 13, 14]),
    (5, [0, 1, 8, 11, 13]),
    (3, [0, 1, 3, 11]),
    (4, [0, 4, 6, 11]),
    (4, [0, 1, 3, 7, 13]),
    (2, [0, 7, 8]),
    (3, [0, 10, 11]),
    (5, [0, 1, 2, 12]),
    (2, [0, 9]),
    (2, [0]),
    (6, [0, 1, 3, 8, 9, 15]),
    (6, [0, 3, 4, 7, 12, 14]),
    (6, [0, 4, 7, 8, 10, 14]),
    (5, [0, 1, 4, 5, 12]),
    (6, [0, 3, 4, 8, 11, 13]),
    (6, [0, 4, 5, 13, 14]),
    (6, [0, 1, 7, 11, 14, 15]),
    (6, [0, 7, 8, 9, 13, 15]),
    (2, [0, 2]),
    (5, [0, 1, 6, 11, 13]),
    (2, [0, 10]),
    (6, [0, 2, 3, 5, 6, 11, 13]),
    (3, [0, 11, 14]),
    (6, [0, 5, 7, 10, 12, 14]),
    (6, [0, 1, 4, 8, 10, 14]),
    (4, [0, 5, 11, 14]),
]

CORPUS = tuple(DigitSystem(base, tuple(digits)) for base, digits in _RAW)
