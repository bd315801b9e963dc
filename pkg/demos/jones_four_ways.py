"""The Jones polynomial of a few closed braids, computed by four independent routes.

1. the Kauffman bracket state sum,
2. the Markov trace on the Hecke algebra (HOMFLY-PT at a = v^2),
3. webs evaluated in exterior powers of the quantum gl_2 representation,
4. the graded Euler characteristic of Khovanov homology.
"""

from linkhom.braid import parse_braid
from linkhom.hecke import homfly_specialized
from linkhom.kauffman import jones
from linkhom.khovanov import euler_characteristic, kh_poincare, poincare_to_text
from linkhom.webrt import wrt_eval

for text, name in [("2: 1 1", "Hopf link"), ("2: 1 1 1", "trefoil"), ("3: 1 -2 1 -2", "figure eight")]:
    b = parse_braid(text)
    routes = {
        "state sum": jones(b),
        "Hecke trace": homfly_specialized(b, 2).to_laurent(),
        "webs, k = 2": wrt_eval(b, 2).to_laurent(),
        "Khovanov chi": euler_characteristic(kh_poincare(b)),
    }
    print(f"{name} ({text})")
    for route, value in routes.items():
        print(f"  {route:13s} {value}")
    print(f"  Khovanov homology: {poincare_to_text(kh_poincare(b))}")
    assert len(set(map(str, routes.values()))) == 1
    print()
