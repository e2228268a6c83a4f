"""
Closed-form homology criteria for the chain complex instance.

These are claims about this particular instance. The test suite compares
each of them with the corresponding diagrammatic computation of the engine.
"""

from chains import ChainMap, Complex, homology_dims, is_homology_surjective


def weak_section_oracle(g: ChainMap) -> bool:
    """True iff ``H_n(g)`` is onto in every degree."""
    return is_homology_surjective(g)


def domination_oracle(x: Complex, y: Complex) -> bool:
    """True iff ``dim H_n(x) >= dim H_n(y)`` in every degree."""
    hx = homology_dims(x)
    return all(hx.get(n, 0) >= k for n, k in homology_dims(y).items())


def cat_oracle(x: Complex) -> int:
    """0 for an acyclic complex, 1 otherwise."""
    return 0 if not homology_dims(x) else 1
