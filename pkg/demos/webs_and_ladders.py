"""Webs as intertwiners: the braiding, the digon, and ladder commutators.

Ladder webs with one-labelled rungs act as E and F between weight spaces of
a tensor product of exterior powers; their commutator is a quantum integer.
"""

from linkhom.algebra import quantum_int
from linkhom.qrep import LinearMap, RepContext, TensorSpace, hecke_local
from linkhom.webrt import Slice, WebWord, braiding_map, ladder_action, phi_eval

for eta in (-1, 1):
    ctx = RepContext(3, eta)
    print(f"k = 3, eta = {eta:+d}")
    print("  braiding of two natural strands equals H:", braiding_map(1, 1, ctx) == hecke_local(ctx, 1))
    for a in (1, 2, 3):
        digon = WebWord((a,), (Slice("split", 0, 1, a - 1), Slice("merge", 0, 1, a - 1)))
        print(f"  digon on wedge^{a}: {phi_eval(digon, ctx).scalar()}")
    for w in [(3, 0), (2, 1), (1, 2), (0, 3)]:
        ef = ladder_action("E", (w[0] - 1, w[1] + 1), ctx) @ ladder_action("F", w, ctx)
        fe = ladder_action("F", (w[0] + 1, w[1] - 1), ctx) @ ladder_action("E", w, ctx)
        comm = (ef - fe).scalar()
        ok = ef - fe == LinearMap.identity(TensorSpace(w, 3)).scale(quantum_int(w[0] - w[1]))
        print(f"  [E, F] on weight {w}: {comm}  (= [{w[0] - w[1]}]: {ok})")
    print()
