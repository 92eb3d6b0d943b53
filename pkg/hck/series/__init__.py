"""Truncated power series and symmetric-power generating functions."""

from hck.series.sym_powers import SymSeries, sym_powers
from hck.series.trunc_series import (
    SeriesBound,
    TruncSeries,
    binomial_series_coefficient,
    geom_factor_expand,
    product_expand,
    series_mul,
)

__all__ = [
    "SeriesBound",
    "SymSeries",
    "TruncSeries",
    "binomial_series_coefficient",
    "geom_factor_expand",
    "product_expand",
    "series_mul",
    "sym_powers",
]
