"""Schubert and Grothendieck expressions of classical type in nil- and
Id-Coxeter algebras."""

__version__ = "0.1.0"
