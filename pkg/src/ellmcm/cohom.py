"""Cohomology dimensions of bundles on an elliptic curve from degree alone.

A twist of nonzero degree has cohomology only in one degree, with dimension
|deg|.  In degree zero the answer depends on whether the twist is the
Atiyah bundle, which the charge cannot see; callers pass that as a flag.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidSpeciality


@dataclass(frozen=True)
class BundleCohomology:
    h0: int
    h1: int


def cohomology_dims(degree: int, special: bool = False) -> BundleCohomology:
    if special and degree != 0:
        raise InvalidSpeciality(f"only a degree-zero twist can be an Atiyah bundle (degree={degree})")
    if degree > 0:
        return BundleCohomology(degree, 0)
    if degree < 0:
        return BundleCohomology(0, -degree)
    return BundleCohomology(1, 1) if special else BundleCohomology(0, 0)


class SpecialityOracle(frozenset):
    """Positions j at which F^vee (x) K_j is declared to be an Atiyah bundle.

    Anything not listed is generic.  Validation against the s-sequence
    happens where the governing charge is known (see ``betti``).
    """

    def __new__(cls, positions: Iterable[int] = ()):
        return super().__new__(cls, (int(j) for j in positions))

    def is_special(self, j: int) -> bool:
        return j in self

    def __repr__(self):
        return f"SpecialityOracle({sorted(self)})"


GENERIC = SpecialityOracle()
