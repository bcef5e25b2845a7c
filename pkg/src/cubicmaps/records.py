"""Stored annihilating polynomials and exact singular-expansion constants.

Every polynomial here is transcribed data, not a computed object: the
elimination that produced them is out of scope.  Root-degree data lives
in Q(sqrt(3)); factored forms are multiplied out programmatically to
avoid hand-expansion slips.
"""

from __future__ import annotations

from fractions import Fraction

from .minpoly import MinimalPolynomialRecord
from .scalars import Quad3


def _polymul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if not b:
                continue
            out[i + j] = out[i + j] + a * b
    return out


def _polyscale(p, s):
    return [s * a for a in p]


def _polyadd(p, q):
    n = max(len(p), len(q))
    return [
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    ]


def _shift(p, k):
    return [0] * k + list(p)


# ---------------------------------------------------------------------------
# univariate-in-y records, integer coefficients, z the size variable
# ---------------------------------------------------------------------------

M_QUARTIC = MinimalPolynomialRecord(
    "three_connected",
    (
        (0, 0, -1, 11, 1),            # z^4 + 11 z^3 - z^2
        (1, -14, 25, 4),              # 4 z^3 + 25 z^2 - 14 z + 1
        (3, 17, 6),                   # 6 z^2 + 17 z + 3
        (3, 4),                       # 4 z + 3
        (1,),
    ),
    source="quartic annihilating the 3-connected series",
)

C_CUBIC = MinimalPolynomialRecord(
    "cubic",
    (
        (0, 4, -96, 64),
        (-1, 32, -192, 192),
        (0, 1, -96, 192),
        (0, 0, 0, 64),
    ),
    source="cubic annihilating the all-maps series",
)

B_CUBIC = MinimalPolynomialRecord(
    "two_connected",
    (
        (0, -1, 16),
        (1, -20, 48),
        (0, 8, 48),
        (0, 0, 16),
    ),
    source="cubic annihilating the 2-connected series",
)

# quadratic factor 1 - 11z - z^2: the printed source has z^2 - 11z + 1,
# whose sign on z^2 leaves a residual 2 z^4 * (degree-8 factor); the
# corrected sign matches the z^2 (z^2 + 11z - 1) constant term of the
# 3-connected quartic and annihilates the solved series to any order
_CSTAR_P0 = _polymul(
    _polymul((0, 0, 1), (1, -11, -1)),
    (41, -330, 130, 2672, -27, -8458, -7456, 476, 1568),
)
_CSTAR_P1 = (-41, 904, -5652, 4030, 43746, -5454, -166400, -194686, -51033,
             29478, 13524, 784)
_CSTAR_P2 = _polyscale(
    _shift((-41, 3768, -4064, -71248, -116934, -52888, 13344, 13968, 1743), 1), -1
)
_CSTAR_P3 = _polyscale(_shift((179, 208, 24, 40, 57), 3), 16)

CSTAR_QUARTIC = MinimalPolynomialRecord(
    "simple",
    (
        tuple(_CSTAR_P0),
        tuple(_CSTAR_P1),
        tuple(_CSTAR_P2),
        tuple(_CSTAR_P3),
        (0, 0, 0, 0, 0, 64),
    ),
    source="quartic annihilating the simple-maps series",
)

BSTAR_CUBIC = MinimalPolynomialRecord(
    "two_connected_simple",
    (
        (0, 0, -1, 17, -77, 134, -76, -8),
        (1, -20, 118, -244, 121, 76, 4),
        (0, 8, 48, -120, -16),
        (0, 0, 16),
    ),
    source="cubic annihilating the 2-connected simple series",
)

# singular polynomial of the simple-maps growth rate (smallest positive root)
RHO_STAR_POLY = (1, 24, -339, -208, 171, 216, 27)

# degree-29 singular polynomials (triangle-free, and triangle-free simple),
# ascending powers of z
PHI_POLY = tuple(reversed((
    22161087866383368192, -110805439331916840960, 128349633892803674112,
    306063926988657131520, -1017316468360256421888, 731390086938712080384,
    1412989605840194371584, -3904918887380696432640, 3286085170959772286976,
    3062041896395210752000, -13636190761420628951040, 22452065614202935443456,
    -24015782846601940172800, 18890731381294758887424, -12618646835081595715584,
    9454042977513918959616, -8938299800000420075520, 8330326495570886895360,
    -6335783442775792180480, 3739491505211342742768, -1707114753190595308440,
    606877106680714207393, -169460055073349524800, 37432243036560849408,
    -6518789166080065536, 864781240587780096, -79062401625882624,
    3851046019399680, -14872398004224, -3131031158784,
)))

PHISTAR_POLY = tuple(reversed((
    22161087866383368192, -72023535565745946624, -217455674688886800384,
    1366192402856046231552, -1408884772502960603136, -5273526725499791867904,
    18711657605588519485440, -20661513660592621092864, -15535239133496397004800,
    90959874721137062576128, -166070979940102503923712, 193400402328142378696704,
    -162268637001045608759296, 102897252166421987721216, -51989933333416282030080,
    24221605189030571544576, -13520809952153729316864, 9265021383768406435584,
    -6064247347538996966656, 3267142329643563126000, -1396980037043271835032,
    473034839943808953505, -127347508539288938304, 27332424367753886208,
    -4657078534989938688, 614598596098523136, -58444903901822976,
    3329729331462144, -52444771909632, -3131031158784,
)))

# ---------------------------------------------------------------------------
# root-degree pgf: cubic in p over Q(sqrt(3))[u]
# ---------------------------------------------------------------------------

_A0_INNER = (
    Quad3(36, -24), Quad3(-90, 60), Quad3(36, -24), 0, 0,
    Quad3(12, -6), Quad3(-9, 4), Quad3(1, 0),
)
_A1_INNER = (
    Quad3(-216), Quad3(864), Quad3(-2160), Quad3(1944), Quad3(-648),
    Quad3(0, -60), Quad3(54, -6), Quad3(-27, 126), Quad3(-81, -126),
    Quad3(54, 36), Quad3(-2),
)
_A3_F1 = (
    Quad3(108, 24), Quad3(90, 66), Quad3(108, 24), Quad3(81, 18),
    Quad3(54, 12), Quad3(23),
)
_A3_F2 = (Quad3(-60, 24), Quad3(78, -26), Quad3(-36, 4), Quad3(13))

PGF_A0 = tuple(_polyscale(_shift(_A0_INNER, 4), Quad3(-1068, 422)))
PGF_A1 = tuple(_polyscale(_shift(_A1_INNER, 2), Quad3(-3402, 1912)))
PGF_A3 = tuple(
    _polyscale(_polymul(_A3_F1, _polymul(_A3_F2, _polymul(_A3_F2, _A3_F2))),
               Quad3(9))
)

PGF_CUBIC = MinimalPolynomialRecord(
    "root_degree_pgf",
    (PGF_A0, PGF_A1, (Quad3(0),), PGF_A3),
    source="cubic annihilating the limiting root-degree pgf (u as size variable)",
)

# tail base 1/q: unique positive root of the cubed factor of a3
Q_TAIL_CUBIC = _A3_F2
Q_TAIL_RATIONALIZED = (144, -432, 600, -504, 252, -72, 13)

# exact first probabilities of the limiting root-degree law
PGF_PREFIX = (
    Quad3(0),
    Quad3(0, Fraction(1, 36)),
    Quad3(0, Fraction(1, 36)),
    Quad3(0, Fraction(1, 36)),
)
PGF_TABLE = {
    1: Quad3(0, Fraction(1, 36)),
    2: Quad3(0, Fraction(1, 36)),
    3: Quad3(0, Fraction(1, 36)),
    4: Quad3(Fraction(-1, 216), Fraction(6, 216)),
    5: Quad3(0, Fraction(25, 864)),
    6: Quad3(0, Fraction(1, 36)),
    7: Quad3(0, Fraction(35, 1296)),
}

ALL_RECORDS = {
    r.name: r
    for r in (M_QUARTIC, C_CUBIC, B_CUBIC, CSTAR_QUARTIC, BSTAR_CUBIC, PGF_CUBIC)
}
