#!/usr/bin/env python3
"""Invertibility: one-sided inverses, units, and element orders.

An element of the quotient monoid has a left inverse exactly when its
leaf colors form a left cofinite family (all but finitely many words end
in one of them), and a right inverse exactly when no color is a left
multiple of another.  Elements satisfying both are the units.  The unit
group contains torsion (images of permutations) as well as elements of
unbounded order.
"""

from cpmonoid import (
    Word,
    family_classify,
    from_word,
    has_left_inverse,
    has_right_inverse,
    is_unit,
    leaf_colors,
    left_inverse,
    mul_U,
    right_inverse,
    unit_inverse,
    unit_order,
)
from cpmonoid.cli import parse, eval_u, render

w = Word.from_str
u = lambda text: eval_u(parse(text))


def show(element, label):
    colors = [str(c) for c in leaf_colors(element.tree)]
    flags = family_classify(leaf_colors(element.tree))
    print(f"{label} = {render(element.tree)}   colors {colors}")
    print(f"  left invertible: {has_left_inverse(element)}"
          f"   right invertible: {has_right_inverse(element)}"
          f"   unit: {is_unit(element)}")


p1 = from_word(w("p1"))
show(p1, "p1")
print("  right inverse:", render(right_inverse(p1).tree))
print()

ones = u("S(1,1)")
show(ones, "S(1,1)")
print("  left inverse:", render(left_inverse(ones).tree))
print()

swap = u("S(p2,p1)")
show(swap, "swap")
print("  unit inverse:", render(unit_inverse(swap).tree))
print("  order:", unit_order(swap, 10))
print()

cycle = u("S(S(p2,p1p1),p2p1)")
show(cycle, "three-cycle image")
print("  order:", unit_order(cycle, 10))
print()

growing = mul_U(cycle, swap)
show(growing, "their product")
print("  order bound 50:", unit_order(growing, 50) or "exceeds 50")
degrees = []
power = growing
for _ in range(8):
    degrees.append(power.degree)
    power = mul_U(power, growing)
print("  degrees of its first powers:", degrees, "(strictly increasing)")
