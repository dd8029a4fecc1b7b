"""Exact invariants of finite categories and finite groups.

Subpackages compute Euler characteristics (nerve, functorial, L2, weighting-based),
Moebius inversion matrices over the iso-class poset, orbit categories, tables of
marks and Burnside congruences. All arithmetic is exact rational.
"""

__version__ = "0.1.0"
