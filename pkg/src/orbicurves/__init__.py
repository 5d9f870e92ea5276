"""Orbifold types of hyperplane arrangements on P^n and the rational curves they carry."""

__version__ = "0.1.0"
