"""Built-in example diagrams and a seeded generator of random planar diagrams."""
from __future__ import annotations

import random

from .braids import closure
from .diagram import Diagram, canonical, counts, disjoint_union, parse
from .moves import arc_tokens, insert_r1, insert_v1

# A figure-eight shadow with one negative classical crossing (1), one singular
# crossing (2) and two virtual crossings (3, 4).  Among all one-component
# diagrams with that census whose four states give a, b, alpha, beta, ||S|| and
# parity as tabulated for the worked example, it is the first one without a
# kink that can be drawn in the plane.
EXAMPLE1 = """\
# figure-eight: N classical, singular, two virtual
crossing 1 N 8 1 3 4
crossing 2 S 1 2 6 7
crossing 3 V 2 3 5 6
crossing 4 V 4 5 7 8
"""


def _unknot() -> Diagram:
    return Diagram(free_loops=1)


def _builtin() -> dict[str, Diagram]:
    u = _unknot()
    return {
        "unknot": u,
        "kink-positive": canonical(insert_r1(u, "@loop0", 1)),
        "kink-negative": canonical(insert_r1(u, "@loop0", -1)),
        "kink-virtual": canonical(insert_v1(u, "@loop0")),
        "hopf": closure("p1 p1"),
        "trefoil": closure("p1 p1 p1"),
        "singular-hopf": closure("t1 p1"),
        "virtual-trefoil": closure("p1 p1 v1"),
        "example1": parse(EXAMPLE1),
    }


BUILTIN = _builtin()


def fixture(name: str) -> Diagram:
    try:
        return BUILTIN[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(BUILTIN)}") from None


def fixture_text(name: str) -> str:
    if name == "example1":
        return EXAMPLE1
    return f"# built-in fixture: {name}\n" + str(fixture(name))


def random_braid_word(rng: random.Random, strands: int, max_cs: int, max_v: int) -> str:
    if strands < 2:
        return ""
    n_cs = rng.randint(0, max_cs)
    n_v = rng.randint(0, max_v)
    letters = [rng.choice("pnt") for _ in range(n_cs)] + ["v"] * n_v
    rng.shuffle(letters)
    return " ".join(f"{c}{rng.randint(1, strands - 1)}" for c in letters)


def random_diagram(seed: int, max_cs: int = 6, max_v: int = 4) -> Diagram:
    """A random planar diagram with ``c + s <= max_cs`` and ``v <= max_v``.

    Built as a closed braid, optionally decorated with kinks and a split
    second piece; every step keeps the diagram drawable in the plane.
    """
    rng = random.Random(seed)
    strands = rng.randint(1, 4)
    cs_budget = rng.randint(0, max_cs)
    v_budget = rng.randint(0, max_v)
    d = closure(random_braid_word(rng, strands, cs_budget, v_budget), strands)

    def room():
        c, s, v, _ = counts(d)
        return max_cs - c - s, max_v - v

    if rng.random() < 0.3:
        cs_left, v_left = room()
        width = rng.randint(1, 3)
        piece = closure(random_braid_word(rng, width, min(cs_left, 3), min(v_left, 2)), width)
        d = disjoint_union(d, piece)
    for _ in range(rng.randint(0, 2)):
        cs_left, v_left = room()
        tokens = arc_tokens(d)
        if not tokens:
            break
        arc = rng.choice(tokens)
        if cs_left > 0 and rng.random() < 0.5:
            d = insert_r1(d, arc, rng.choice((1, -1)))
        elif v_left > 0:
            d = insert_v1(d, arc)
    return canonical(d)
