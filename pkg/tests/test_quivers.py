import pytest

from diagquiver.branching import so_matrix, sp_matrix, type1, type2
from diagquiver.partitions import Partition, PartitionPair, EMPTY
from diagquiver.quivers import (
    Quiver,
    Verdict,
    cycle_gcd,
    is_primitive,
    is_strongly_connected,
    is_symmetric,
    one_vertex_quiver,
    quiver_of,
    simplicity_certificate,
    to_dot,
)

P = Partition


def test_examples_from_tables():
    q1 = quiver_of(type1(2, 1))
    assert q1.vertices == (P((1,)),) and q1.arrows == ((2,),)
    q2 = quiver_of(type1(2, 2))
    assert q2.arrow_count(P((2,)), P((2,))) == 3
    assert q2.arrow_count(P((2,)), P((1, 1))) == 1
    c = quiver_of(type2(2, 1, 1))
    a, z = PartitionPair(P((1,)), P((1,))), PartitionPair(EMPTY, EMPTY)
    assert (c.arrow_count(a, a), c.arrow_count(z, z)) == (4, 1)
    assert (c.arrow_count(z, a), c.arrow_count(a, z)) == (3, 0)


def test_predicates():
    q = quiver_of(type1(2, 2))
    assert is_strongly_connected(q) and is_primitive(q) and is_symmetric(q)
    c = quiver_of(type2(2, 1, 1))
    assert not is_symmetric(c)
    single = one_vertex_quiver(1)
    assert is_strongly_connected(single) and is_primitive(single) and is_symmetric(single)


def test_periodic_quiver_is_not_primitive():
    cyc = Quiver(("a", "b", "c"), ((0, 1, 0), (0, 0, 1), (1, 0, 0)))
    assert is_strongly_connected(cyc)
    assert cycle_gcd(cyc) == 3 and not is_primitive(cyc)
    two = Quiver(("a", "b"), ((0, 2), (1, 0)))
    assert cycle_gcd(two) == 2 and not is_primitive(two)
    mixed = Quiver(("a", "b", "c"), ((0, 1, 1), (0, 0, 1), (1, 0, 0)))
    assert cycle_gcd(mixed) == 1 and is_primitive(mixed)


def test_disconnected():
    q = Quiver(("a", "b"), ((1, 0), (0, 1)))
    assert not is_strongly_connected(q) and not is_primitive(q)
    assert simplicity_certificate(q).verdict is Verdict.INCONCLUSIVE


@pytest.mark.parametrize("n,d", [(n, d) for n in (2, 3) for d in range(5)])
def test_type1_simple(n, d):
    cert = simplicity_certificate(quiver_of(type1(n, d)))
    assert cert.verdict is Verdict.SIMPLE


@pytest.mark.parametrize("m", [type2(2, 1, 1), type2(2, 2, 2), sp_matrix(2, 2), so_matrix(2, 2)])
def test_asymmetric_inconclusive(m):
    cert = simplicity_certificate(quiver_of(m))
    assert cert.verdict is Verdict.INCONCLUSIVE and not cert.symmetric


@pytest.mark.parametrize("m", [type2(2, 1, 1), type2(3, 2, 1), sp_matrix(2, 1), so_matrix(2, 3), sp_matrix(4, 2)])
def test_never_identity(m):
    q = quiver_of(m)
    assert q.has_loops_everywhere()
    assert any(q.arrows[i][j] for i in range(q.size) for j in range(q.size) if i != j) or \
        any(q.arrows[i][i] >= 2 for i in range(q.size))


def test_dot():
    one = to_dot(one_vertex_quiver(2))
    assert one == 'digraph Q {\n  v0 [label="(1)"];\n  v0 -> v0 [label="2"];\n}\n'
    two = to_dot(quiver_of(type1(2, 2)))
    assert two.count("->") == 4 and '[label="(1,1)"]' in two
    empty = to_dot(quiver_of(type1(2, 0)))
    assert '[label="()"]' in empty
    assert to_dot(quiver_of(type1(2, 3))) == to_dot(quiver_of(type1(2, 3)))


def test_json():
    q = quiver_of(type2(2, 1, 1))
    assert q.to_dict() == {"vertices": ["((1),(1))", "((),())"], "arrows": [[4, 0], [3, 1]]}


def test_validation():
    with pytest.raises(ValueError):
        Quiver(("a",), ((1, 0),))
    with pytest.raises(ValueError):
        Quiver(("a",), ((-1,),))
