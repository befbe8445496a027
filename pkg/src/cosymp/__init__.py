"""Exact tools for co-symplectic Lie algebras, CDGA cohomology, Massey products
and the formality of mapping tori."""

__version__ = "0.1.0"
