#!/usr/bin/env python3
"""Colored binary trees: the word action and the leaf-substitution product.

Every element is a finite binary tree whose leaves carry words over the
two generators p1 and p2.  A word acts on a tree by walking from the root
(p1 = left, p2 = right, read right to left); the product A·B replaces each
leaf of A, colored w, by the tree w·B.
"""

from cpmonoid import Leaf, Word, act, degree, leaf_listing, mul, sigma
from cpmonoid.cli import render

w = Word.from_str

A = sigma(
    sigma(Leaf(w("p2")), Leaf(w("p2p2"))),
    sigma(Leaf(w("p2p2p2")), Leaf(w("p1p2p2"))),
)
print("A, a tree of degree", degree(A))
print(render(A, "ascii"))
print()

for text in ("p2", "p1p1p1", "p2p1"):
    print(f"{text} . A  =  {render(act(w(text), A))}")
print()

B = sigma(Leaf(w("p2")), sigma(Leaf(w("p1p1p1")), Leaf(w("p2p1"))))
print("B =", render(B))
print("B*A =", render(mul(B, A)))
print()

print("each leaf of a tree is selected by its path word:")
for entry in leaf_listing(A):
    print(f"  path {str(entry.path):6}  color {entry.color}")
print()

print("graphviz rendering of B*A:")
print(render(mul(B, A), "dot"))
