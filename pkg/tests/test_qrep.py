import pytest

from linkhom.algebra import LaurentPoly, MultiRational, quantum_int
from linkhom.qrep import (
    LinearMap,
    RepContext,
    TensorSpace,
    coproduct_action,
    cupcap,
    embed,
    exterior_power_basis,
    factor_action,
    generator_action,
    hecke_local,
    jones_wenzl,
    shuffle_map,
    wedge_basis,
    wedge_map,
)

CONTEXTS = [RepContext(k, eta) for k in (2, 3, 4) for eta in (1, -1)]
ids = [f"k{c.k}{'+' if c.eta > 0 else '-'}" for c in CONTEXTS]


def ident(labels, k):
    return LinearMap.identity(TensorSpace(tuple(labels), k))


def test_wedge_basis_sizes():
    assert len(wedge_basis(4, 2)) == 6
    assert wedge_basis(3, 4) == ()
    assert wedge_basis(3, 0) == ((),)


@pytest.mark.parametrize("ctx", CONTEXTS, ids=ids)
def test_hecke_quadratic_and_inverse(ctx):
    I = ident((1, 1), ctx.k)
    H, Hinv = hecke_local(ctx, 1), hecke_local(ctx, -1)
    assert H @ Hinv == I
    assert ((H - I.scale(ctx.gamma)) @ (H + I.scale(ctx.gamma ** -1))).is_zero()


@pytest.mark.parametrize("ctx", CONTEXTS, ids=ids)
def test_smoothing_relation(ctx):
    assert cupcap(ctx) + ident((1, 1), ctx.k).scale(ctx.gamma) == hecke_local(ctx, 1)


@pytest.mark.parametrize("ctx", CONTEXTS, ids=ids)
def test_r_matrix_is_an_intertwiner(ctx):
    H = hecke_local(ctx, 1)
    for gen in ("E", "F", "K"):
        for i in range(1, ctx.k):
            act = coproduct_action(ctx, gen, i, (1, 1))
            assert act @ H == H @ act


@pytest.mark.parametrize("ctx", CONTEXTS, ids=ids)
def test_wedge_and_shuffle_are_intertwiners(ctx):
    k = ctx.k
    for a in range(0, k + 1):
        for b in range(0, k + 1 - a):
            W, S = wedge_map(ctx, a, b), shuffle_map(ctx, a, b)
            for gen in ("E", "F", "K"):
                for i in range(1, k):
                    big = coproduct_action(ctx, gen, i, (a + b,))
                    pair = coproduct_action(ctx, gen, i, (a, b))
                    assert big @ W == W @ pair
                    assert pair @ S == S @ big


@pytest.mark.parametrize("ctx", CONTEXTS, ids=ids)
def test_digon(ctx):
    for a in range(1, ctx.k + 1):
        m = wedge_map(ctx, 1, a - 1) @ shuffle_map(ctx, 1, a - 1)
        assert m.scalar() == quantum_int(a) * (-ctx.eta) ** (a - 1)


@pytest.mark.parametrize("ctx", CONTEXTS, ids=ids)
def test_associativity_and_coassociativity(ctx):
    k = ctx.k
    for a in range(4):
        for b in range(4):
            for c in range(4):
                if a + b + c > k:
                    continue
                left = wedge_map(ctx, a + b, c) @ wedge_map(ctx, a, b).tensor(ident((c,), k))
                right = wedge_map(ctx, a, b + c) @ ident((a,), k).tensor(wedge_map(ctx, b, c))
                assert left == right
                left = shuffle_map(ctx, a, b).tensor(ident((c,), k)) @ shuffle_map(ctx, a + b, c)
                right = ident((a,), k).tensor(shuffle_map(ctx, b, c)) @ shuffle_map(ctx, a, b + c)
                assert left == right


def test_exterior_power_is_an_invariant_subspace():
    ctx = RepContext(3, -1)
    iota = exterior_power_basis(ctx, 2)
    for gen in ("E", "F"):
        for i in (1, 2):
            # the coproduct preserves the image of the embedding
            image = coproduct_action(ctx, gen, i, (1, 1)) @ iota
            assert image == iota @ factor_action(ctx, gen, i, 2)


def test_generator_ranges():
    ctx = RepContext(3, 1)
    with pytest.raises(ValueError):
        generator_action(ctx, "E", 3)
    with pytest.raises(ValueError):
        RepContext(0, 1)
    with pytest.raises(ValueError):
        RepContext(2, 0)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_jones_wenzl(m):
    P = jones_wenzl(m)
    assert P @ P == P
    ctx = RepContext(2, 1)
    for j in range(m - 1):
        U = embed(cupcap(ctx), (1,) * m, j)
        assert (U @ P).is_zero()
        assert (P @ U).is_zero()


def test_jones_wenzl_trace_is_quantum_dimension():
    # the rank of JW_m is m + 1 (the top irreducible summand)
    for m in (1, 2, 3):
        P = jones_wenzl(m)
        tr = MultiRational.const(0)
        for b in P.dom.basis():
            tr = tr + MultiRational.coerce(P.cols.get(b, {}).get(b, LaurentPoly()))
        assert tr == m + 1
