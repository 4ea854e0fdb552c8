import random
from itertools import combinations

import pytest

from avnproofs import (
    AvnWitness,
    Bitvec,
    Graph,
    ResourceLimitError,
    assignment_consistent,
    complete_graph,
    find_witness,
    format_witness,
    is_critical,
    parse_distribution,
    path_graph,
    ring_graph,
    sign_of,
    stabilizer_element,
    underrepresented_qubits,
    verify_witness,
)
from oracles import all_sign_assignments_consistent

FC3 = complete_graph(3)
FC4 = complete_graph(4)
LC4 = path_graph(4)


def witness_from(n, subsets):
    return AvnWitness(tuple(Bitvec.from_indices(n, [i - 1 for i in s]) for s in subsets))


GHZ4_WITNESS = witness_from(4, [(1,), (2,), (3,), (1, 2, 3)])
LC4_WITNESS = witness_from(4, [(1, 2), (2,), (2, 3), (1, 2, 3)])


def test_ghz4_witness_verifies_and_is_critical():
    assert verify_witness(GHZ4_WITNESS, FC4)
    assert is_critical(GHZ4_WITNESS, FC4)
    assert format_witness(GHZ4_WITNESS, FC4) == [
        "X1 Z2 Z3 Z4 = 1",
        "Z1 X2 Z3 Z4 = 1",
        "Z1 Z2 X3 Z4 = 1",
        "-X1 X2 X3 Z4 = 1",
    ]


def test_lc4_witness_verifies_and_is_critical():
    # subsets recomputed by matching the four correlation strings against
    # all 16 stabilizer elements: {1,2}, {2}, {2,3}, {1,2,3}
    wanted = {"Y1 Y2 Z3", "Z1 X2 Z3", "Z1 Y2 Y3 Z4", "-Y1 X2 Y3 Z4"}
    found = {
        mask
        for mask in range(16)
        if str(stabilizer_element(LC4, mask)) in wanted
    }
    assert found == {0b0011, 0b0010, 0b0110, 0b0111}
    assert verify_witness(LC4_WITNESS, LC4)
    assert is_critical(LC4_WITNESS, LC4)


def test_witness_with_member_removed_fails_parity():
    broken = AvnWitness(GHZ4_WITNESS.subsets[:-1])
    assert not verify_witness(broken, FC4)


def test_padded_witness_verifies_but_is_not_critical():
    padded = AvnWitness(GHZ4_WITNESS.subsets + GHZ4_WITNESS.subsets[:1] * 2)
    assert verify_witness(padded, FC4)
    assert not is_critical(padded, FC4)


def test_fc3_four_correlations_are_contradictory():
    ops = [stabilizer_element(FC3, m) for m in (0b001, 0b010, 0b100, 0b111)]
    check = assignment_consistent(ops)
    assert not check.consistent
    assert check.certificate == (0, 1, 2, 3)


def test_fc4_and_lc4_correlation_quadruples_are_contradictory():
    fc4_ops = [stabilizer_element(FC4, m) for m in (0b0001, 0b0010, 0b0100, 0b0111)]
    assert not assignment_consistent(fc4_ops).consistent
    lc4_ops = [stabilizer_element(LC4, m) for m in (0b0011, 0b0010, 0b0110, 0b0111)]
    assert not assignment_consistent(lc4_ops).consistent


def test_single_operator_always_consistent():
    for mask in range(1, 16):
        check = assignment_consistent([stabilizer_element(FC4, mask)])
        assert check.consistent
        assert check.model is not None


def test_assignment_model_satisfies_all_operators():
    ops = [stabilizer_element(LC4, m) for m in (0b0011, 0b0010, 0b0110)]
    check = assignment_consistent(ops)
    assert check.consistent
    for op in ops:
        prod = 1
        for q in op.support():
            prod *= check.model[(q, op.letter(q))]
        assert prod == sign_of(op)


def test_assignment_consistency_matches_exhaustive_search():
    rng = random.Random(42)
    graphs = [FC3, path_graph(3), ring_graph(3)]
    for _ in range(60):
        g = rng.choice(graphs)
        size = rng.randint(1, 5)
        masks = rng.sample(range(1, 1 << g.n), min(size, (1 << g.n) - 1))
        ops = [stabilizer_element(g, m) for m in masks]
        assert assignment_consistent(ops).consistent == all_sign_assignments_consistent(ops)


def _has_even_negative_submultiset(chosen):
    for k in range(1, len(chosen) + 1):
        for sub in combinations(chosen, k):
            px = py = pz = 0
            sign = 1
            for op in sub:
                x, z = op.x.bits, op.z.bits
                px ^= x & ~z
                py ^= x & z
                pz ^= z & ~x
                sign *= sign_of(op)
            if px == py == pz == 0 and sign == -1:
                return True
    return False


def test_parity_sign_duality_exhaustive():
    """Inconsistent iff some subset has all-even letter counts and sign -1."""
    g3 = path_graph(3)
    elems3 = [stabilizer_element(g3, m) for m in range(1, 8)]
    sets = [c for size in (2, 3, 4) for c in combinations(elems3, size)]
    elems4 = [stabilizer_element(LC4, m) for m in range(1, 16)]
    sets += [c for size in (2, 3, 4, 5) for c in combinations(elems4, size)]
    for chosen in sets:
        inconsistent = not assignment_consistent(list(chosen)).consistent
        assert inconsistent == _has_even_negative_submultiset(chosen)


def test_verified_witness_defeats_exhaustive_assignment_search_n5():
    g = ring_graph(5)
    w = find_witness(g, parse_distribution("1|2|3|4|5", 5), max_size=4)
    assert w is not None and verify_witness(w, g)
    assert not all_sign_assignments_consistent(w.operators(g))


def test_find_witness_fc3_matches_canonical_structure():
    w = find_witness(FC3, parse_distribution("1|2|3", 3), max_size=4)
    assert w is not None and len(w) == 4
    signs = [sign_of(stabilizer_element(FC3, s)) for s in w.subsets]
    assert signs.count(-1) % 2 == 1
    assert verify_witness(w, FC3)
    # deterministic
    again = find_witness(FC3, parse_distribution("1|2|3", 3), max_size=4)
    assert again.subsets == w.subsets


def test_find_witness_needs_size_four_on_fc3():
    assert find_witness(FC3, parse_distribution("1|2|3", 3), max_size=3) is None


def test_find_witness_lc4_alice_bob():
    w = find_witness(LC4, parse_distribution("1,4|2,3", 4), max_size=4)
    assert w is not None and len(w) <= 4
    assert verify_witness(w, LC4)


def test_find_witness_none_for_two_qubits():
    edge = Graph.from_edges(2, [(1, 2)])
    assert find_witness(edge, parse_distribution("1|2", 2), max_size=8, exhaustive=True) is None


def test_find_witness_exhaustive_guards():
    with pytest.raises(ResourceLimitError):
        find_witness(path_graph(6), parse_distribution("1,2|3,4|5,6", 6), exhaustive=True)


def test_underrepresented_qubits_flags_fixed_observer():
    w = find_witness(FC4, parse_distribution("1|2|3|4", 4), max_size=4)
    assert underrepresented_qubits(w, FC4) == (4,)
    # the four-correlation set shows qubit 4 only as Z4
    assert underrepresented_qubits(LC4_WITNESS, LC4) == (4,)
    # every qubit of the three-qubit witness shows two observables
    w3 = find_witness(FC3, parse_distribution("1|2|3", 3), max_size=4)
    assert underrepresented_qubits(w3, FC3) == ()
