#!/usr/bin/env python3
"""Embedding finite monoids via shape-induced d-fold product structures.

A binary tree shape with d leaves gives the quotient monoid a d-fold
pairing: the i-th projection is the path word of the i-th leaf.  Self-maps
of {1..d} then map (contravariantly) into the monoid, permutations map
multiplicatively, and composing with the right regular representation
embeds any finite monoid given by its multiplication table.
"""

from itertools import permutations

from cpmonoid import (
    FiniteMonoid,
    embed_finite_monoid,
    left_comb,
    mul_U,
    perm_hom,
    shape_taus,
    unit_order,
    validate_finite_monoid,
)
from cpmonoid.cli import render

shape = left_comb(3)
print("left-comb shape with 3 leaves: projections",
      [str(t) for t in shape_taus(shape)])
print()

print("images of all permutations of {1,2,3}:")
for perm in permutations((1, 2, 3)):
    image = perm_hom(shape, perm)
    print(f"  {perm} -> {render(image.tree):24} order {unit_order(image, 6)}")
print()

klein = FiniteMonoid(
    labels=("e", "a", "b", "c"),
    identity=0,
    table=(
        (0, 1, 2, 3),
        (1, 0, 3, 2),
        (2, 3, 0, 1),
        (3, 2, 1, 0),
    ),
)
assert validate_finite_monoid(klein) is None
images = embed_finite_monoid(klein)
print("the Klein four-group, embedded:")
for label in klein.labels:
    print(f"  {label} -> {render(images[label].tree)}")
print()

print("the embedding is a homomorphism, e.g. a·b = c:")
ab = mul_U(images["a"], images["b"])
print(f"  image(a)·image(b) = {render(ab.tree)}")
print(f"  image(c)          = {render(images['c'].tree)}")
