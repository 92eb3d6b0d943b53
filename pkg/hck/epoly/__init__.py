"""Exact ring of E-polynomials and its specializations."""

from hck.epoly.atoms import Atom, AtomKind, atom_epoly, gaussian_binomial
from hck.epoly.epoly import EPoly, UniPoly, format_terms
from hck.epoly.localization import hodge_vanishing_violations, odd_betti_violations

__all__ = [
    "Atom",
    "AtomKind",
    "EPoly",
    "UniPoly",
    "atom_epoly",
    "format_terms",
    "gaussian_binomial",
    "hodge_vanishing_violations",
    "odd_betti_violations",
]
