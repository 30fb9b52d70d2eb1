"""templex: an exact workbench for templicial objects.

Simplicial objects enriched in a finite monoidal category, their nerves,
necklace calculus, rigidification, and quasi-category checks — all over
exactly representable base categories (finite sets, matrices over a prime
field, finitely generated abelian groups).
"""

__version__ = "0.1.0"
