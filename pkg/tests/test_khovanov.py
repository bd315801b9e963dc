from itertools import product

from hypothesis import given, settings

from linkhom.algebra import V
from linkhom.braid import enumerate_moves, mirror, parse_braid
from linkhom.kauffman import jones
from linkhom.khovanov import (
    cube_complex,
    euler_characteristic,
    frobenius_ops,
    kh_poincare,
    poincare_to_text,
)
from tests.strategies import braids

A = frobenius_ops()
BASIS = (0, 1)  # 1 and x


def _mult_vec(vec):
    out = {}
    for (a, b), c in vec.items():
        for r, d in A.mult(a, b).items():
            out[r] = out.get(r, 0) + c * d
    return {k: v for k, v in out.items() if v}


def test_frobenius_relations():
    for a, b, c in product(BASIS, repeat=3):
        # associativity and commutativity of the product
        ab = A.mult(a, b)
        left = {}
        for r, d in ab.items():
            for s, e in A.mult(r, c).items():
                left[s] = left.get(s, 0) + d * e
        bc = A.mult(b, c)
        right = {}
        for r, d in bc.items():
            for s, e in A.mult(a, r).items():
                right[s] = right.get(s, 0) + d * e
        assert left == right
        assert A.mult(a, b) == A.mult(b, a)
    for a, b in product(BASIS, repeat=2):
        # Delta(m(a, b)) = (m (x) id)(a (x) Delta(b))
        lhs = {}
        for r, d in A.mult(a, b).items():
            for pair, e in A.comult(r).items():
                lhs[pair] = lhs.get(pair, 0) + d * e
        rhs = {}
        for (p, q), e in A.comult(b).items():
            for r, d in A.mult(a, p).items():
                rhs[(r, q)] = rhs.get((r, q), 0) + d * e
        assert {k: v for k, v in lhs.items() if v} == {k: v for k, v in rhs.items() if v}
    # counit is a left inverse of the unit direction along x
    assert A.counit(1) == 1 and A.counit(0) == 0


def test_unknot_and_hopf():
    assert kh_poincare(parse_braid("1:")) == {(0, 1): 1, (0, -1): 1}
    assert kh_poincare(parse_braid("2: 1 1")) == {(0, 0): 1, (0, 2): 1, (2, 4): 1, (2, 6): 1}


def test_trefoil_has_torsion_free_part_with_four_generators():
    kh = kh_poincare(parse_braid("2: 1 1 1"))
    assert kh == {(0, 1): 1, (0, 3): 1, (2, 5): 1, (3, 9): 1}
    assert poincare_to_text(kh) == "v + v^3 + t^2*v^5 + t^3*v^9"


def test_two_component_unlink():
    assert kh_poincare(parse_braid("2:")) == {(0, -2): 1, (0, 0): 2, (0, 2): 1}


def test_euler_characteristic_is_jones(corpus):
    for b in corpus:
        assert euler_characteristic(kh_poincare(b)) == jones(b)


def test_move_invariance_on_corpus(corpus):
    for b in corpus:
        kh = kh_poincare(b)
        for m in enumerate_moves(b):
            assert kh_poincare(m) == kh, (str(b), str(m))


@settings(max_examples=40)
@given(braids(max_strands=3, max_len=5))
def test_differential_squares_to_zero(b):
    assert cube_complex(b).d_squared_zero()


@settings(max_examples=25)
@given(braids(max_strands=3, max_len=4))
def test_mirror_flips_both_gradings(b):
    kh = kh_poincare(b)
    assert kh_poincare(mirror(b)) == {(-h, -q): c for (h, q), c in kh.items()}


def test_unknot_euler_characteristic():
    assert euler_characteristic(kh_poincare(parse_braid("2: 1"))) == V + V.bar()
