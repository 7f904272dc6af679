"""Derivative atoms g(n, l, L) = 1/[x^n (log x)^l (log log x)^L] and their linear combinations."""

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction

from app.core.exceptions import DomainError


@dataclass(frozen=True, order=True, slots=True)
class Atom:
    """The atom g(power, log_power, loglog_power)."""

    power: int
    log_power: int
    loglog_power: int

    def __post_init__(self) -> None:
        if min(self.power, self.log_power, self.loglog_power) < 0:
            raise DomainError(f"Atom exponents must be non-negative: {self}")

    def __str__(self) -> str:
        return f"g({self.power},{self.log_power},{self.loglog_power})"


@dataclass(frozen=True, slots=True)
class AtomExpression:
    """Finite linear combination of atoms with exact rational coefficients.

    Terms are kept sorted by atom with zero coefficients dropped, so two equal
    expressions compare and hash equal.
    """

    terms: tuple[tuple[Atom, Fraction], ...]

    @classmethod
    def from_mapping(cls, mapping: Mapping[Atom, Fraction | int]) -> "AtomExpression":
        """Build a canonical expression from an atom -> coefficient mapping."""
        return cls(
            tuple(
                (atom, Fraction(coefficient))
                for atom, coefficient in sorted(mapping.items())
                if coefficient != 0
            )
        )

    @classmethod
    def of(cls, atom: Atom) -> "AtomExpression":
        """Expression consisting of a single atom with coefficient one."""
        return cls(((atom, Fraction(1)),))

    def as_dict(self) -> dict[Atom, Fraction]:
        return dict(self.terms)

    def coefficient(self, atom: Atom) -> Fraction:
        """Coefficient of ``atom``, zero when absent."""
        return self.as_dict().get(atom, Fraction(0))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Atom, Fraction]]:
        return iter(self.terms)
