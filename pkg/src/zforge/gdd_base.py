"""Embedded base 3-GDDs of type 4^u 2^v for the recursion's small cases.

Each design was generated once by the triangle engine on the complete
multipartite graph, verified, and frozen here.  Groups are consecutive
vertex ranges: u groups of four, then v groups of two."""

from typing import Optional

_BASE = {
    (3, 6): (
        (
            (0,4,17),(0,5,20),(0,6,19),(0,7,12),(0,8,18),(0,9,14),(0,10,22),(0,11,16),
            (0,13,21),(0,15,23),(1,4,9),(1,5,12),(1,6,18),(1,7,21),(1,8,19),(1,10,16),
            (1,11,14),(1,13,23),(1,15,20),(1,17,22),(2,4,16),(2,5,23),(2,6,11),(2,7,18),
            (2,8,14),(2,9,17),(2,10,13),(2,12,20),(2,15,21),(2,19,22),(3,4,15),(3,5,19),
            (3,6,21),(3,7,14),(3,8,20),(3,9,13),(3,10,17),(3,11,23),(3,12,22),(3,16,18),
            (4,8,13),(4,10,12),(4,11,21),(4,14,22),(4,18,20),(4,19,23),(5,8,16),(5,9,22),
            (5,10,15),(5,11,17),(5,13,18),(5,14,21),(6,8,17),(6,9,23),(6,10,20),(6,12,14),
            (6,13,22),(6,15,16),(7,8,22),(7,9,20),(7,10,23),(7,11,13),(7,15,17),(7,16,19),
            (8,12,15),(8,21,23),(9,12,19),(9,15,18),(9,16,21),(10,14,18),(10,19,21),(11,12,18),
            (11,15,22),(11,19,20),(12,16,23),(12,17,21),(13,14,16),(13,15,19),(13,17,20),(14,17,19),
            (14,20,23),(16,20,22),(17,18,23),(18,21,22),
        ),
    ),
    (4, 3): (
        (
            (0,4,15),(0,5,11),(0,6,8),(0,7,20),(0,9,16),(0,10,17),(0,12,19),(0,13,18),
            (0,14,21),(1,4,19),(1,5,18),(1,6,16),(1,7,12),(1,8,21),(1,9,14),(1,10,13),
            (1,11,17),(1,15,20),(2,4,10),(2,5,21),(2,6,14),(2,7,18),(2,8,12),(2,9,20),
            (2,11,16),(2,13,19),(2,15,17),(3,4,14),(3,5,9),(3,6,10),(3,7,16),(3,8,18),
            (3,11,12),(3,13,17),(3,15,21),(3,19,20),(4,8,13),(4,9,12),(4,11,21),(4,16,20),
            (4,17,18),(5,8,19),(5,10,15),(5,12,17),(5,13,16),(5,14,20),(6,9,17),(6,11,19),
            (6,12,20),(6,13,21),(6,15,18),(7,8,14),(7,9,13),(7,10,19),(7,11,15),(7,17,21),
            (8,15,16),(8,17,20),(9,15,19),(9,18,21),(10,12,21),(10,14,16),(10,18,20),(11,13,20),
            (11,14,18),(12,16,18),(14,17,19),(16,19,21),
        ),
    ),
    (4, 6): (
        (
            (0,4,21),(0,5,26),(0,6,16),(0,7,13),(0,8,12),(0,9,17),(0,10,15),(0,11,24),
            (0,14,27),(0,18,25),(0,19,23),(0,20,22),(1,4,16),(1,5,19),(1,6,24),(1,7,10),
            (1,8,14),(1,9,26),(1,11,15),(1,12,23),(1,13,27),(1,17,20),(1,18,21),(1,22,25),
            (2,4,27),(2,5,22),(2,6,12),(2,7,8),(2,9,14),(2,10,19),(2,11,16),(2,13,18),
            (2,15,17),(2,20,25),(2,21,24),(2,23,26),(3,4,20),(3,5,12),(3,6,25),(3,7,11),
            (3,8,13),(3,9,24),(3,10,21),(3,14,23),(3,15,16),(3,17,19),(3,18,27),(3,22,26),
            (4,8,18),(4,9,19),(4,10,22),(4,11,14),(4,12,25),(4,13,17),(4,15,26),(4,23,24),
            (5,8,16),(5,9,23),(5,10,20),(5,11,17),(5,13,25),(5,14,21),(5,15,27),(5,18,24),
            (6,8,27),(6,9,21),(6,10,26),(6,11,20),(6,13,23),(6,14,17),(6,15,18),(6,19,22),
            (7,9,25),(7,12,21),(7,14,22),(7,15,24),(7,16,23),(7,17,26),(7,18,20),(7,19,27),
            (8,15,25),(8,17,22),(8,19,20),(8,21,23),(8,24,26),(9,12,18),(9,13,16),(9,15,22),
            (9,20,27),(10,12,17),(10,13,24),(10,14,25),(10,16,18),(10,23,27),(11,12,26),(11,13,19),
            (11,18,22),(11,21,27),(11,23,25),(12,16,19),(12,20,24),(12,22,27),(13,20,26),(13,21,22),
            (14,16,20),(14,18,26),(14,19,24),(15,19,21),(15,20,23),(16,21,26),(16,22,24),(16,25,27),
            (17,18,23),(17,21,25),(17,24,27),(19,25,26),
        ),
    ),
    (4, 9): (
        (
            (0,4,14),(0,5,30),(0,6,12),(0,7,19),(0,8,17),(0,9,18),(0,10,25),(0,11,15),
            (0,13,31),(0,16,24),(0,20,33),(0,21,22),(0,23,27),(0,26,28),(0,29,32),(1,4,21),
            (1,5,23),(1,6,25),(1,7,32),(1,8,30),(1,9,28),(1,10,14),(1,11,20),(1,12,18),
            (1,13,27),(1,15,19),(1,16,29),(1,17,26),(1,22,24),(1,31,33),(2,4,12),(2,5,28),
            (2,6,32),(2,7,15),(2,8,31),(2,9,30),(2,10,17),(2,11,22),(2,13,24),(2,14,23),
            (2,16,20),(2,18,21),(2,19,27),(2,25,26),(2,29,33),(3,4,33),(3,5,17),(3,6,15),
            (3,7,11),(3,8,20),(3,9,13),(3,10,22),(3,12,29),(3,14,19),(3,16,23),(3,18,26),
            (3,21,25),(3,24,30),(3,27,31),(3,28,32),(4,8,32),(4,9,24),(4,10,16),(4,11,18),
            (4,13,19),(4,15,20),(4,17,30),(4,22,29),(4,23,26),(4,25,27),(4,28,31),(5,8,18),
            (5,9,32),(5,10,27),(5,11,25),(5,12,24),(5,13,33),(5,14,20),(5,15,29),(5,16,19),
            (5,21,31),(5,22,26),(6,8,23),(6,9,29),(6,10,26),(6,11,19),(6,13,28),(6,14,31),
            (6,16,27),(6,17,24),(6,18,20),(6,21,30),(6,22,33),(7,8,14),(7,9,21),(7,10,29),
            (7,12,17),(7,13,26),(7,16,31),(7,18,22),(7,20,24),(7,23,33),(7,25,28),(7,27,30),
            (8,12,19),(8,13,16),(8,15,25),(8,21,29),(8,22,27),(8,24,28),(8,26,33),(9,12,26),
            (9,14,27),(9,15,16),(9,17,33),(9,19,20),(9,22,31),(9,23,25),(10,12,28),(10,13,21),
            (10,15,33),(10,18,23),(10,19,30),(10,20,31),(10,24,32),(11,12,23),(11,13,29),(11,14,24),
            (11,16,32),(11,17,21),(11,26,31),(11,27,28),(11,30,33),(12,16,22),(12,20,30),(12,21,33),
            (12,25,31),(12,27,32),(13,17,32),(13,18,25),(13,20,22),(13,23,30),(14,16,25),(14,17,18),
            (14,21,26),(14,22,32),(14,28,33),(14,29,30),(15,17,28),(15,18,32),(15,21,27),(15,22,30),
            (15,23,31),(15,24,26),(16,18,33),(16,21,28),(16,26,30),(17,19,23),(17,20,27),(17,22,25),
            (17,29,31),(18,24,31),(18,27,29),(18,28,30),(19,21,24),(19,22,28),(19,25,33),(19,26,29),
            (19,31,32),(20,23,28),(20,25,29),(20,26,32),(21,23,32),(23,24,29),(24,27,33),(25,30,32),
        ),
    ),
    (7, 3): (
        (
            (0,4,8),(0,5,22),(0,6,33),(0,7,10),(0,9,12),(0,11,16),(0,13,30),(0,14,17),
            (0,15,24),(0,18,27),(0,19,23),(0,20,28),(0,21,29),(0,25,31),(0,26,32),(1,4,27),
            (1,5,14),(1,6,31),(1,7,20),(1,8,19),(1,9,18),(1,10,12),(1,11,26),(1,13,21),
            (1,15,16),(1,17,30),(1,22,24),(1,23,28),(1,25,32),(1,29,33),(2,4,21),(2,5,31),
            (2,6,17),(2,7,13),(2,8,33),(2,9,14),(2,10,25),(2,11,12),(2,15,27),(2,16,24),
            (2,18,22),(2,19,20),(2,23,26),(2,28,32),(2,29,30),(3,4,24),(3,5,18),(3,6,8),
            (3,7,22),(3,9,16),(3,10,31),(3,11,33),(3,12,32),(3,13,20),(3,14,23),(3,15,25),
            (3,17,29),(3,19,26),(3,21,27),(3,28,30),(4,9,19),(4,10,33),(4,11,13),(4,12,22),
            (4,14,26),(4,15,30),(4,16,32),(4,17,28),(4,18,23),(4,20,31),(4,25,29),(5,8,30),
            (5,9,15),(5,10,28),(5,11,24),(5,12,25),(5,13,17),(5,16,33),(5,19,29),(5,20,26),
            (5,21,32),(5,23,27),(6,9,24),(6,10,19),(6,11,20),(6,12,18),(6,13,32),(6,14,27),
            (6,15,29),(6,16,28),(6,21,30),(6,22,26),(6,23,25),(7,8,15),(7,9,28),(7,11,27),
            (7,12,33),(7,14,31),(7,16,25),(7,17,21),(7,18,24),(7,19,32),(7,23,29),(7,26,30),
            (8,12,27),(8,13,31),(8,14,21),(8,16,26),(8,17,22),(8,18,29),(8,20,24),(8,23,32),
            (8,25,28),(9,13,27),(9,17,25),(9,20,29),(9,21,26),(9,22,32),(9,23,30),(9,31,33),
            (10,13,22),(10,14,32),(10,15,23),(10,16,30),(10,17,20),(10,18,26),(10,21,24),(10,27,29),
            (11,14,28),(11,15,17),(11,18,32),(11,19,30),(11,21,25),(11,22,29),(11,23,31),(12,16,21),
            (12,17,23),(12,19,31),(12,20,30),(12,24,29),(12,26,28),(13,16,23),(13,18,33),(13,19,25),
            (13,24,28),(13,26,29),(14,16,29),(14,18,30),(14,19,24),(14,20,33),(14,22,25),(15,18,28),
            (15,19,22),(15,20,32),(15,21,33),(15,26,31),(16,20,27),(16,22,31),(17,24,31),(17,26,33),
            (17,27,32),(18,20,25),(18,21,31),(19,21,28),(19,27,33),(22,27,30),(22,28,33),(23,24,33),
            (24,30,32),(25,30,33),(27,28,31),(29,31,32),
        ),
    ),
}



def lookup(u: int, v: int) -> Optional["object"]:
    """Embedded design for (u, v), or None when not a stored base case."""
    from zforge.gdd import Gdd

    entry = _BASE.get((u, v))
    if entry is None:
        return None
    (triples,) = entry
    groups = []
    x = 0
    for s in [4] * u + [2] * v:
        groups.append(tuple(range(x, x + s)))
        x += s
    return Gdd(4 * u + 2 * v, tuple(groups), triples)
