from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsym.errors import InvalidInputError
from qsym.partitions import (
    IdentityReport,
    Partition,
    PartLin,
    antisym2,
    antisymmetrize,
    compose,
    compose_partitions,
    make_partition,
    two_point_swap,
    verify_identity,
)
from qsym.polyq import N_POLY


def test_make_partition_examples():
    cap = make_partition(2, 0, [[1, 2]])
    assert cap == Partition.cap()
    strand = make_partition(1, 1, [[1, "1'"]])
    assert strand == Partition.identity(1)
    b22 = make_partition(2, 2, [[1, 2, "1'", "2'"]])
    assert b22 == Partition.block(2, 2)


def test_make_partition_rejects_bad_blocks():
    with pytest.raises(InvalidInputError):
        make_partition(2, 0, [[1], [1, 2]])  # overlapping
    with pytest.raises(InvalidInputError):
        make_partition(2, 1, [[1, 2]])  # missing lower point
    with pytest.raises(InvalidInputError):
        make_partition(1, 0, [[1, "1'"]])  # out of range


def test_parse_print_roundtrip():
    text = "P(2,2){1 2' | 2 1'}"
    p = Partition.parse(text)
    assert p == Partition.crossing()
    assert Partition.parse(str(p)) == p
    assert Partition.parse("P(0,0){}") == Partition.identity(0)


def test_compose_cap_cup_loop():
    r, loops = compose_partitions(Partition.cap(), Partition.cup())
    assert r == Partition.identity(0)
    assert loops == 1


def test_compose_identity_neutral():
    p = Partition.parse("P(2,3){1 2' | 2 1' 3'}")
    r, loops = compose_partitions(Partition.identity(3), p)
    assert (r, loops) == (p, 0)
    r, loops = compose_partitions(p, Partition.identity(2))
    assert (r, loops) == (p, 0)


def test_compose_block_idempotent():
    b = Partition.block(2, 2)
    r, loops = compose_partitions(b, b)
    assert r == b and loops == 0


def test_compose_arity_mismatch():
    with pytest.raises(InvalidInputError):
        compose_partitions(Partition.cap(), Partition.cap())


def test_tensor_adjoint_rotate():
    idp = Partition.identity(1)
    assert idp.tensor(idp) == Partition.identity(2)
    assert Partition.cap().adjoint() == Partition.cup()
    # rotating the one-block P(2,1) down on the right gives P(1,2)
    b21 = Partition.block(2, 1)
    assert b21.rotate("right", "down") == Partition.block(1, 2)
    with pytest.raises(InvalidInputError):
        Partition.cup().rotate("left", "down")


def test_cycle_partition():
    p2 = Partition.cycle(2)
    assert p2 == Partition.parse("P(0,4){1' 4' | 2' 3'}")
    p3 = Partition.cycle(3)
    assert p3 == Partition.parse("P(0,6){1' 6' | 2' 3' | 4' 5'}")


def test_partlin_compose_loop_factor():
    out = compose(Partition.cap(), Partition.cup())
    assert out == PartLin.of(Partition.identity(0), N_POLY)


def test_partlin_scale_cancellation():
    p = PartLin.of(Partition.identity(2))
    combo = p.scale(N_POLY - 4) + p.scale(4 - N_POLY)
    assert combo.is_zero()


def test_compose_distributes():
    a = PartLin.of(Partition.identity(2)) + PartLin.of(Partition.crossing())
    b = PartLin.of(Partition.block(2, 2), 3)
    lhs = compose(b, a)
    rhs = compose(b, Partition.identity(2)) + compose(b, Partition.crossing())
    assert lhs == rhs


def test_antisym2_form():
    a = antisym2()
    expected = PartLin(
        2,
        2,
        {
            Partition.identity(2): Fraction(1, 2),
            Partition.crossing(): Fraction(-1, 2),
        },
    )
    assert a == expected


def test_antisym2_idempotent_selfadjoint():
    a = antisym2()
    assert compose(a, a) == a
    assert a.adjoint() == a


def test_antisymmetrize_identity_and_crossing():
    assert antisymmetrize(Partition.identity(2)) == antisym2()
    assert antisymmetrize(Partition.crossing()) == -antisym2()


def test_antisymmetrize_idempotent():
    p = Partition.parse("P(2,2){1 1' | 2 2'}")
    once = antisymmetrize(p)
    again_terms = PartLin.zero(2, 2)
    for part, c in once.terms.items():
        again_terms = again_terms + antisymmetrize(part).scale(c)
    assert again_terms == once


def test_antisymmetrize_rejects_odd():
    with pytest.raises(InvalidInputError):
        antisymmetrize(Partition.block(1, 2))


def test_two_point_swap_on_pair_cycle():
    # p2 with its two two-points swapped is p2 read backwards = p2 itself
    e = antisymmetrize(Partition.cycle(2))
    swapped = two_point_swap(e, 1)
    assert swapped == e or swapped == -e


def test_two_point_swap_involution():
    e = antisymmetrize(Partition.cycle(3))
    assert two_point_swap(two_point_swap(e, 1), 1) == e


def test_two_point_swap_exchanges_tensor_factors():
    a = antisymmetrize(Partition.cycle(2))  # on two-points 1,2
    b = antisymmetrize(PartLin.of(Partition.cup()).tensor(Partition.cup()).terms.popitem()[0])
    # a ox b vs swap of b ox a across the middle boundary needs 4 two-points;
    # here check the simplest factor exchange on a ox a
    e = a.tensor(a)
    assert two_point_swap(two_point_swap(e, 2), 2) == e


def test_verify_identity_reports_difference():
    half = Fraction(1, 2)
    lhs = PartLin.of(Partition.identity(2), half) - PartLin.of(Partition.crossing(), half)
    rhs = PartLin.of(Partition.identity(2), half) + PartLin.of(Partition.crossing(), half)
    rep = verify_identity(lhs, rhs)
    assert not rep.equal
    assert rep.difference == PartLin.of(Partition.crossing(), -1)
    ok = verify_identity(lhs, lhs)
    assert ok.equal and isinstance(ok, IdentityReport)


def test_partlin_json():
    e = PartLin.of(Partition.cup(), N_POLY)
    data = e.to_json()
    assert data == {
        "k": 0,
        "l": 2,
        "terms": [{"partition": "P(0,2){1' 2'}", "coeff": "n"}],
    }


# -- property tests ------------------------------------------------------------

def random_partition(draw, k, l):
    npts = k + l
    assign = [0]
    for _ in range(npts - 1):
        assign.append(draw(st.integers(0, max(assign) + 1)))
    return Partition(k, l, assign)


@st.composite
def partitions_kl(draw, k, l):
    return random_partition(draw, k, l)


@given(partitions_kl(3, 1), partitions_kl(2, 3), partitions_kl(2, 2))
@settings(max_examples=80, deadline=None)
def test_compose_associative_with_loops(r, q, p):
    lhs = compose(compose(r, q), p)
    rhs = compose(r, compose(q, p))
    assert lhs == rhs


@given(partitions_kl(3, 2))
@settings(max_examples=60, deadline=None)
def test_adjoint_involution(p):
    assert p.adjoint().adjoint() == p


@given(partitions_kl(2, 2), partitions_kl(1, 3))
@settings(max_examples=60, deadline=None)
def test_tensor_associative(p, q):
    assert p.tensor(q).tensor(p) == p.tensor(q.tensor(p))
