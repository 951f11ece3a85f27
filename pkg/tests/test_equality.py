from itertools import product

from conftest import v_elements
from nwfsets import (
    Reason,
    SetSystem,
    bisimilar,
    canonical_base,
    eq_distinguish,
    ezf_equal,
    infiniton,
    semi_infiniton,
    sublimits,
)
from nwfsets.equality import bisim_classes
from oracles import naive_bisim


def corpus(sys):
    """V3 elements plus every IGS over V2 generators, plus a few mixed sets."""
    v2, v3 = v_elements(sys, 2), v_elements(sys, 3)
    nodes = list(v3)
    nodes += [infiniton(sys, b) for b in v2]
    nodes += [semi_infiniton(sys, g, b) for g in v2 for b in v2]
    nodes += [q for b in v2 for q in sublimits(sys, v2, b)]
    igs_nodes = [x for x in nodes if sys.tag(x) is not None]
    nodes += [sys.mk_set([x, y]) for x in igs_nodes[:3] for y in v2]
    return nodes


def test_ezf_examples(sys):
    n = sys.mk_numeral
    r = ezf_equal(sys, infiniton(sys, n(0)), infiniton(sys, sys.mk_set([n(0)])))
    assert r.equal and r.reason is Reason.GENERATOR_MATCH
    r = ezf_equal(sys, infiniton(sys, n(0)), infiniton(sys, n(2)))
    assert not r.equal and r.reason is Reason.GENERATOR_MISMATCH and r.witness is None
    r = ezf_equal(sys, sys.mk_set([n(0), n(1)]), sys.mk_set([n(1), n(0)]))
    assert r.equal and r.reason is Reason.EXTENSIONAL
    r = ezf_equal(sys, sys.mk_set([n(0)]), sys.mk_set([n(1)]))
    assert r.reason is Reason.MEMBER_MISMATCH and r.witness == "member 0 vs member 1"


def test_bisimilar_examples(sys):
    n = sys.mk_numeral
    i0, i2 = infiniton(sys, n(0)), infiniton(sys, n(2))
    assert (i0, i2) in naive_bisim(sys, [i0, i2])
    assert bisimilar(sys, i0, i2)
    z = semi_infiniton(sys, sys.mk_set([n(2)]), n(0))
    assert not bisimilar(sys, z, i0)
    assert bisimilar(sys, z, z)


def test_canonical_base_examples(sys):
    n = sys.mk_numeral
    assert canonical_base(sys, sys.mk_set([sys.mk_set([n(0)])])) == n(0)
    assert canonical_base(sys, n(2)) == n(2)
    assert canonical_base(sys, sys.mk_set([n(2)])) == n(2)
    for b in v_elements(sys, 4):
        c = canonical_base(sys, b)
        assert canonical_base(sys, c) == c


def test_eq_distinguish_examples(sys):
    n = sys.mk_numeral
    assert eq_distinguish(sys, sys.mk_set([n(0)]), sys.mk_set([n(1)])) == "member 0 vs member 1"
    assert eq_distinguish(sys, infiniton(sys, n(0)), infiniton(sys, n(2))) == "base generator 0 vs 2"
    x = n(3)
    assert eq_distinguish(sys, x, x) is None
    q0, q1 = sublimits(sys, [n(1), n(2)], n(0))
    assert eq_distinguish(sys, q0, q1) == "phase 0 vs 1"
    assert eq_distinguish(sys, n(2), n(3)) == "member 2 only on the right"


def test_equivalence_and_coherence_over_corpus():
    sys = SetSystem()
    nodes = corpus(sys)
    eq = {(a, b): ezf_equal(sys, a, b).equal for a, b in product(nodes, repeat=2)}
    for a in nodes:
        assert eq[a, a]
    for a, b in product(nodes, repeat=2):
        assert eq[a, b] == eq[b, a]
        # canonical sharing: equal exactly when the nodes coincide
        assert eq[a, b] == (a == b)
        if eq[a, b]:
            assert bisimilar(sys, a, b)
    for a, b, c in product(nodes, repeat=3):
        if eq[a, b] and eq[b, c]:
            assert eq[a, c]


def test_bisim_kernel_matches_fixpoint_oracle():
    sys = SetSystem()
    corpus(sys)
    rel = naive_bisim(sys)
    blocks = bisim_classes(sys)
    for a in sys.nodes():
        for b in sys.nodes():
            assert ((a, b) in rel) == (blocks[a] == blocks[b])


def test_known_bisimilar_but_unequal_pair(sys):
    i0, i2 = infiniton(sys, sys.empty), infiniton(sys, sys.mk_numeral(2))
    assert bisimilar(sys, i0, i2)
    assert not ezf_equal(sys, i0, i2).equal


def test_substitutivity_over_v2(sys):
    v2 = v_elements(sys, 2)
    pool = v2 + [infiniton(sys, sys.empty), infiniton(sys, sys.mk_set([sys.empty]))]
    sets = [sys.mk_set(c) for c in ([], [v2[0]], [v2[1]], v2)]
    for a, b in product(pool, repeat=2):
        if not ezf_equal(sys, a, b).equal:
            continue
        for s in sets:
            assert ezf_equal(sys, sys.union(sys.mk_set([a]), s), sys.union(sys.mk_set([b]), s)).equal
