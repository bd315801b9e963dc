"""Coloured Jones polynomials by cabling with Jones-Wenzl projectors."""

from linkhom.braid import parse_braid
from linkhom.webrt import colored_jones


def show(r):
    return str(r.to_laurent()) if r.is_laurent() else str(r)


for text, name in [("1:", "unknot"), ("2: 1 1 1", "trefoil"), ("3: 1 -2 1 -2", "figure eight")]:
    b = parse_braid(text)
    print(name)
    for m in (1, 2, 3):
        if m == 3 and b.strands > 2:
            continue  # the 3-cable of a 3-braid is slow in pure Python
        print(f"  colour {m}: {show(colored_jones(b, [m]))}")
