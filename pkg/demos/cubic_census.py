"""Count cubic graphs by order and sort the matching covered ones into
bricks and braces, keeping the bricks that are essentially 4-edge-connected."""

from collections import Counter

from mcgraph import generate_cubic, is_essentially_4ec_cubic, is_matching_covered
from mcgraph.tightcuts import is_brace, is_brick

for n in (4, 6, 8, 10, 12):
    tally = Counter()
    for g in generate_cubic(n):
        tally["cubic"] += 1
        if not is_matching_covered(g):
            continue
        tally["matching covered"] += 1
        if is_brace(g):
            tally["brace"] += 1
        elif is_brick(g):
            tally["brick"] += 1
            tally["efec brick"] += is_essentially_4ec_cubic(g)
    print(f"n={n:<3}", dict(tally))
