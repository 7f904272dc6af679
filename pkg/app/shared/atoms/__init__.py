"""Symbolic algebra over the derivative atoms g(n, l, L)."""

from app.shared.atoms.atoms import (
    differentiate,
    differentiate_atom,
    evaluate,
    evaluate_many,
    render,
)
from app.shared.atoms.atoms_models import Atom, AtomExpression

__all__ = [
    "Atom",
    "AtomExpression",
    "differentiate",
    "differentiate_atom",
    "evaluate",
    "evaluate_many",
    "render",
]
