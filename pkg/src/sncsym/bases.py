#!/usr/bin/env python3
"""Basis families of the noncommutative and commutative sides."""

from enum import Enum

from .errors import BasisError


class Basis(Enum):
    """Families indexed by set superpartitions (Schur ones by superpartitions)"""

    M = "m"
    P = "p"
    E = "e"
    H = "h"
    SCHUR = "S"
    SCHUR2 = "Sbar"

    @classmethod
    def parse(cls, tag) -> "Basis":
        if isinstance(tag, cls):
            return tag
        for basis in cls:
            if tag in (basis.value, basis.name, basis.name.lower()):
                return basis
        raise BasisError(f"unknown basis {tag!r}; expected one of m, p, e, h, S, Sbar")

    @property
    def classical(self) -> bool:
        return self in CLASSICAL


CLASSICAL = (Basis.M, Basis.P, Basis.E, Basis.H)


class SymBasis(Enum):
    """Bases of the commuting superspace algebra"""

    M = "m"
    P = "p"
    E = "e"
    H = "h"
    S = "s"
    SBAR = "sbar"

    @classmethod
    def parse(cls, tag) -> "SymBasis":
        if isinstance(tag, cls):
            return tag
        for basis in cls:
            if tag in (basis.value, basis.name, basis.name.lower()):
                return basis
        raise BasisError(f"unknown basis {tag!r}; expected one of m, p, e, h, s, sbar")

    @property
    def multiplicative(self) -> bool:
        return self in (SymBasis.P, SymBasis.E, SymBasis.H)
