#!/usr/bin/env python3
"""Normal forms: expansion, retraction, and the quotient monoid.

A leaf colored w may be expanded into the pair (p1·w, p2·w), and the
inverse retraction merges such a pair back.  Every tree retracts to a
unique reduced form, so reduced trees are canonical representatives of
the quotient monoid, where the pairing of p1 and p2 equals 1.  The branch
set of a tree (one starred term per leaf) detects when a tree collapses
to a single word.
"""

from cpmonoid import (
    Leaf,
    ONE,
    Word,
    beta,
    equivalent,
    expand,
    mul,
    recognize_word,
    reduce,
    sigma,
)
from cpmonoid.cli import render

w = Word.from_str

start = Leaf(w("p2"))
print("start:", render(start))
once = expand(start, ())
print("after expanding the root leaf:      ", render(once))
twice = expand(once, (1,))
print("after expanding its left leaf too:  ", render(twice))
print("reduce recovers the original:       ", render(reduce(twice).tree))
print("equivalent(start, twice):", equivalent(start, twice))
print()

pair = sigma(Leaf(w("p1")), Leaf(w("p2")))
print("the pairing of p1 and p2 is the identity in the quotient:")
print(f"  reduce({render(pair)}) = {render(reduce(pair).tree)}")
print()

a = sigma(sigma(Leaf(w("p2")), Leaf(w("p2p2"))), sigma(Leaf(w("p2p2p2")), Leaf(w("p1p2p2"))))
b = sigma(Leaf(w("p2")), sigma(Leaf(w("p1p1p1")), Leaf(w("p2p1"))))
product = mul(b, a)
print("a product computed without reduction:", render(product))
print("the same product in the quotient:    ", render(reduce(product).tree))
print()

print("branch sets separate trees and recognize collapsed words:")
for tree in (pair, sigma(Leaf(w("p1p2")), Leaf(w("p2p2"))), a):
    image = beta(tree)
    word = recognize_word(image)
    verdict = "1" if word == ONE else (str(word) if word else "no single word")
    print(f"  beta({render(tree)}) = {image}")
    print(f"    collapses to: {verdict}")
