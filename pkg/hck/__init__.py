"""Hodge-Chow Kit: virtual Hodge polynomials and Chow variety invariants."""
