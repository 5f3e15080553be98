"""Shared test utilities: generators, enumerators, and independent oracles.

The inverse-search oracles here decide existence of an inverse by searching
the full candidate space of trees with bounded degree and color length.
They depend only on mul/act/reduce semantics, never on the leaf-color
family analysis they are used to cross-check.
"""

from __future__ import annotations

import random
from itertools import product

from cpmonoid.words import Word, words_up_to
from cpmonoid.tmagma import (
    LEFT,
    Leaf,
    Node,
    RIGHT,
    Tree,
    act,
    leaf_listing,
    mul,
)
from cpmonoid.ucp import ONE_U, UElem, is_reduced, reduce
from cpmonoid.dcp import Shape, ShapeLeaf, all_shapes, shape_taus


def w(text: str) -> Word:
    return Word.from_str(text)


def lf(text: str) -> Leaf:
    return Leaf(w(text))


def t(nested) -> Tree:
    """Build a tree from nested pairs of strings: ("p1", ("1", "p2"))."""
    if isinstance(nested, str):
        return lf(nested)
    left, right = nested
    return Node(t(left), t(right))


# Degree-3 units from the closing worked computations: the first is the
# image of a 3-cycle (order 3); the second is the product of that image
# with the degree-2 swap and has no period up to any tested bound.
ORDER3_UNIT: Tree = t((("p2", "p1p1"), "p2p1"))
GROWING_UNIT: Tree = t((("p1", "p1p2"), "p2p2"))


# ---------------------------------------------------------------------------
# Random generators

def random_word(rng: random.Random, max_len: int) -> Word:
    return Word(tuple(rng.choices((1, 2), k=rng.randint(0, max_len))))


def random_tree(rng: random.Random, max_degree: int, max_color_len: int = 3) -> Tree:
    return random_tree_of_degree(
        rng, rng.randint(1, max_degree), max_color_len
    )


def random_tree_of_degree(
    rng: random.Random, degree: int, max_color_len: int = 3
) -> Tree:
    if degree == 1:
        return Leaf(random_word(rng, max_color_len))
    split = rng.randint(1, degree - 1)
    return Node(
        random_tree_of_degree(rng, split, max_color_len),
        random_tree_of_degree(rng, degree - split, max_color_len),
    )


def random_uelem(rng: random.Random, max_degree: int, max_color_len: int = 3) -> UElem:
    return reduce(random_tree(rng, max_degree, max_color_len))


# ---------------------------------------------------------------------------
# Exhaustive enumerators

def shape_to_tree(shape: Shape, colors) -> Tree:
    it = iter(colors)

    def build(sh: Shape) -> Tree:
        if isinstance(sh, ShapeLeaf):
            return Leaf(next(it))
        return Node(build(sh.left), build(sh.right))

    return build(shape)


def enumerate_trees(max_degree: int, max_color_len: int):
    """All trees with degree and color lengths within the bounds."""
    colors = list(words_up_to(max_color_len))
    for d in range(1, max_degree + 1):
        for shape in all_shapes(d):
            for assignment in product(colors, repeat=d):
                yield shape_to_tree(shape, assignment)


def enumerate_reduced_trees(max_degree: int, max_color_len: int):
    for tree in enumerate_trees(max_degree, max_color_len):
        if is_reduced(tree):
            yield tree


# ---------------------------------------------------------------------------
# Randomized rewriting

def retractable_addresses(tree: Tree) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def walk(node: Tree, addr: tuple[int, ...]) -> None:
        if isinstance(node, Leaf):
            return
        left, right = node.left, node.right
        if isinstance(left, Leaf) and isinstance(right, Leaf):
            l, r = left.color.syms, right.color.syms
            if l and r and l[0] == 1 and r[0] == 2 and l[1:] == r[1:]:
                out.append(addr)
        walk(left, addr + (LEFT,))
        walk(right, addr + (RIGHT,))

    walk(tree, ())
    return out


def retract_at(tree: Tree, addr: tuple[int, ...]) -> Tree:
    if not addr:
        assert isinstance(tree, Node)
        left, right = tree.left, tree.right
        assert isinstance(left, Leaf) and isinstance(right, Leaf)
        return Leaf(Word(left.color.syms[1:]))
    assert isinstance(tree, Node)
    if addr[0] == LEFT:
        return Node(retract_at(tree.left, addr[1:]), tree.right)
    return Node(tree.left, retract_at(tree.right, addr[1:]))


def reduce_randomized(tree: Tree, rng: random.Random) -> Tree:
    """Apply retractions in random order until none applies."""
    while True:
        candidates = retractable_addresses(tree)
        if not candidates:
            return tree
        tree = retract_at(tree, rng.choice(candidates))


# ---------------------------------------------------------------------------
# Brute-force inverse-search oracles
#
# A product X with tree shape s and subtrees t_i (one per leaf of s, where
# leaf i has path word p_i) reduces to the single identity leaf if and only
# if every t_i reduces to the leaf colored p_i: a non-leaf reduced subtree
# blocks every retraction above it, and retracting leaves down to the root
# forces exactly the path-word coloring at each position.  Both searches
# below exploit only that reduction fact; small-bound literal searches in
# the test suite confirm they match candidate-by-candidate enumeration.

def shape_path_words(shape: Shape) -> list[Word]:
    return shape_taus(shape)


def oracle_left_invertible(b: Tree, max_degree: int = 4, max_color_len: int = 3) -> bool:
    """Whether some tree A with deg <= max_degree and colors of length
    <= max_color_len satisfies A·b = 1 after reduction.

    In the product A·b, the subtree replacing a leaf of A colored c is
    act(c, b), independently of the other leaves, so A exists iff some
    shape has every leaf path word realizable as reduce(act(c, b)).
    """
    realizable: set[Word] = set()
    for c in words_up_to(max_color_len):
        r = reduce(act(c, b)).tree
        if isinstance(r, Leaf):
            realizable.add(r.color)
    for d in range(1, max_degree + 1):
        for shape in all_shapes(d):
            if all(p in realizable for p in shape_path_words(shape)):
                return True
    return False


def oracle_left_invertible_literal(
    b: Tree, max_degree: int, max_color_len: int
) -> bool:
    return any(
        reduce(mul(a, b)) == ONE_U
        for a in enumerate_trees(max_degree, max_color_len)
    )


def oracle_right_invertible(a: Tree, max_degree: int = 4, max_color_len: int = 3) -> bool:
    """Whether some tree B with deg <= max_degree and colors of length
    <= max_color_len satisfies a·B = 1 after reduction.

    For a fixed candidate shape of B, the requirement that act(c_i, B)
    reduce to the leaf colored p_i (for every leaf of a, color c_i at path
    word p_i) determines the colors of the B-leaves it touches: walking
    c_i down the shape either exits at a leaf slot with an unconsumed
    prefix y (slot color must be p_i with prefix y removed), or stops at a
    vertex whose whole subshape must reduce to Leaf(p_i) (each slot below
    gets its subshape path word times p_i).  B exists iff some shape
    admits a conflict-free assignment within the length bound; untouched
    slots are free (the identity color always works).
    """
    constraints = [(entry.path, entry.color) for entry in leaf_listing(a)]
    for d in range(1, max_degree + 1):
        for shape in all_shapes(d):
            slots = _solve_slots(shape, constraints, max_color_len)
            if slots is not None:
                return True
    return False


def _solve_slots(shape, constraints, max_color_len):
    # slot index = position in left-to-right leaf order of the shape
    addresses = _shape_addresses(shape)
    assignment: dict[int, Word] = {}

    def merge(idx: int, color: Word) -> bool:
        if len(color) > max_color_len:
            return False
        if idx in assignment:
            return assignment[idx] == color
        assignment[idx] = color
        return True

    for path_word, c in constraints:
        cur = shape
        addr: tuple[int, ...] = ()
        i = len(c.syms) - 1
        while i >= 0 and not isinstance(cur, ShapeLeaf):
            step = c.syms[i]
            addr = addr + (step,)
            cur = cur.left if step == LEFT else cur.right
            i -= 1
        if isinstance(cur, ShapeLeaf) and i >= 0:
            # exited at a slot with prefix c[:i+1] unconsumed
            y = c.syms[: i + 1]
            p = path_word.syms
            if len(p) < len(y) or p[: len(y)] != y:
                return None
            if not merge(addresses.index(addr), Word(p[len(y):])):
                return None
        else:
            # word consumed at the vertex addr: the whole subshape there
            # must reduce to the leaf colored path_word
            for idx, slot_addr in enumerate(addresses):
                if _is_prefix(addr, slot_addr):
                    rel = tuple(reversed(slot_addr[len(addr):]))
                    if not merge(idx, Word(rel + path_word.syms)):
                        return None
    return assignment


def _shape_addresses(shape) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def walk(sh, addr):
        if isinstance(sh, ShapeLeaf):
            out.append(addr)
        else:
            walk(sh.left, addr + (LEFT,))
            walk(sh.right, addr + (RIGHT,))

    walk(shape, ())
    return out


def _is_prefix(prefix, seq) -> bool:
    return len(prefix) <= len(seq) and seq[: len(prefix)] == prefix


def oracle_right_invertible_literal(
    a: Tree, max_degree: int, max_color_len: int
) -> bool:
    return any(
        reduce(mul(a, b)) == ONE_U
        for b in enumerate_trees(max_degree, max_color_len)
    )


def oracle_unit(a: Tree, max_degree: int = 4, max_color_len: int = 3) -> bool:
    # A one-sided inverse on each side forces a two-sided inverse: if
    # x·a = 1 and a·y = 1 then x = x·(a·y) = (x·a)·y = y.
    return oracle_left_invertible(a, max_degree, max_color_len) and (
        oracle_right_invertible(a, max_degree, max_color_len)
    )
