"""A small gallery of named diagrams used in docs and tests.

Element labels are chosen so that 0 is always the bottom and n-1 the top;
interior elements are listed left to right in the comments.
"""

from .diagram import validate


def chain(n):
    """The n-element chain 0 < 1 < ... < n-1."""
    return validate(n, [(i, i + 1) for i in range(n - 1)])


def diamond():
    """Four elements: bottom, two incomparable atoms a=1 left of b=2, top."""
    return validate(4, [(0, 1), (0, 2), (1, 3), (2, 3)], [(1, 2)])


def capped_diamond():
    """A diamond whose former top grew a new top above it.

    Elements 0 < {1, 2} < 3 < 4 with 1 left of 2.  This is the smallest
    diagram whose canonical form, (2, 1, 3), is not its own reverse.
    """
    return validate(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)], [(1, 2)])


def three_atom_diamond():
    """Bottom, atoms 1, 2, 3 drawn left to right, top: a modular non-slim lattice."""
    return validate(
        5,
        [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        [(1, 2), (2, 3), (1, 3)],
    )


def pentagon():
    """The five-element non-modular lattice: 0 < 1 < 3 < 4 and 0 < 2 < 4, 2 drawn leftmost."""
    return validate(5, [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)], [(2, 1), (2, 3)])


def hexagon():
    """A bounded poset that is not a lattice: 0 < {1, 2} < {3, 4} < 5.

    Elements 1 and 2 have the two minimal upper bounds 3 and 4, which is the
    stock witness for :class:`~quasiplanar.errors.NotALattice`.
    """
    return validate(
        6,
        [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)],
        [(1, 2), (3, 4)],
    )


def boolean_cube_covers():
    """Cover pairs of the eight-element Boolean cube, a poset of order dimension three."""
    return 8, [
        (x, x | (1 << i))
        for x in range(8)
        for i in range(3)
        if not x & (1 << i)
    ]


__all__ = [
    "chain",
    "diamond",
    "capped_diamond",
    "three_atom_diamond",
    "pentagon",
    "hexagon",
    "boolean_cube_covers",
]
