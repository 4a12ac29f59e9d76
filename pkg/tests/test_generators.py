import pytest

from voltage_tower import (
    ConstantVoltage,
    CraterSpec,
    DirectedMultigraph,
    InvalidSpecError,
    NotConnectedError,
    VolcanoSpec,
    bouquet,
    check_theorem_hypotheses,
    cycle_weight_profile,
    degree_profile,
    derive,
    directed_cycle,
    doubled,
    invariants,
    is_augmented_volcano,
    is_balanced,
    is_double_crater,
    kirchhoff_count,
    recognize_augmented_volcano,
    recognize_volcano,
    stabilization_level,
    total_degree,
    tower_component,
    volcano,
    volcano_total_degree,
)

ALL_CRATERS = [
    CraterSpec.cycle(1),
    CraterSpec.cycle(2),
    CraterSpec.cycle(3),
    CraterSpec.cycle(4),
    CraterSpec.two_loops(),
    CraterSpec.bare(),
]


def test_basic_constructors():
    assert directed_cycle(3).edges == ((0, 1), (1, 2), (2, 0))
    assert bouquet(2).edges == ((0, 0), (0, 0))
    assert doubled(DirectedMultigraph(2, ((0, 1),))).edges == ((0, 1), (1, 0))
    loops = doubled(bouquet(1))
    assert loops.edges == ((0, 0),)


def test_crater_spec_validation():
    with pytest.raises(InvalidSpecError):
        CraterSpec.cycle(0)
    with pytest.raises(InvalidSpecError):
        CraterSpec("pyramid")
    with pytest.raises(InvalidSpecError):
        VolcanoSpec(1, 1, CraterSpec.cycle(3))
    with pytest.raises(InvalidSpecError):
        VolcanoSpec(2, -1, CraterSpec.cycle(3))
    assert CraterSpec.one_loop() == CraterSpec.cycle(1)


def test_volcano_vertex_counts():
    v = volcano(VolcanoSpec(2, 2, CraterSpec.cycle(4)))
    assert v.vertex_count == 16
    assert len(v.edges) == 16
    prof = degree_profile(v)
    # crater 4, level one 4, level two 8
    assert v.name == "volcano(l=2,d=2,crater=cycle:4)"
    assert sum(prof.loop_count) == 0

    v = volcano(VolcanoSpec(3, 0, CraterSpec.two_loops()))
    assert v.vertex_count == 1
    assert v.edges == ((0, 0), (0, 0))


def test_total_degree_formulas():
    v = volcano(VolcanoSpec(2, 1, CraterSpec.cycle(1)))
    assert total_degree(v) == 5  # (2*l^(d+1) - l - 1) / (l - 1)
    for l in (2, 3, 5):
        for d in range(4):
            for crater in ALL_CRATERS:
                spec = VolcanoSpec(l, d, crater)
                v = volcano(spec)
                assert total_degree(v) == volcano_total_degree(spec), (
                    l,
                    d,
                    crater.token,
                )


def test_volcano_round_trip():
    for l in (2, 3, 5):
        for d in range(4):
            for crater in ALL_CRATERS:
                v = volcano(VolcanoSpec(l, d, crater))
                shape = recognize_volcano(v)
                assert shape is not None, (l, d, crater.token)
                assert shape.depth == d
                assert shape.crater_kind == crater.kind
                assert shape.crater_length == crater.vertex_count
                if d >= 1:
                    assert shape.l == l
                else:
                    assert shape.l is None


def test_recognize_volcano_rejects_non_volcanoes():
    path4 = DirectedMultigraph(4, ((0, 1), (1, 2), (2, 3)))
    assert recognize_volcano(path4) is None
    pendant = DirectedMultigraph(4, ((0, 1), (1, 2), (2, 0), (0, 3)))
    assert recognize_volcano(pendant) is None
    with pytest.raises(NotConnectedError):
        recognize_volcano(DirectedMultigraph(2, ()))


def test_recognize_depth_zero_craters():
    assert recognize_volcano(directed_cycle(5)).crater_length == 5
    assert recognize_volcano(bouquet(2)).crater_kind == "two-loops"
    assert recognize_volcano(bouquet(1)).crater_length == 1
    assert recognize_volcano(DirectedMultigraph(1, ())).crater_kind == "bare"


def test_double_crater_recognition():
    d1 = derive(bouquet(2), ConstantVoltage(3), 1)
    assert is_double_crater(d1.graph) == 3
    d2 = derive(bouquet(2), ConstantVoltage(2), 1)
    assert is_double_crater(d2.graph) == 2
    assert is_double_crater(bouquet(2)) is None
    assert is_double_crater(directed_cycle(4)) is None
    assert is_double_crater(doubled(directed_cycle(4))) == 4


def test_tower_components_of_cycle_crater_volcanoes():
    # towers keep the depth and stretch the crater to length p^n * a
    cases = [
        (VolcanoSpec(2, 2, CraterSpec.cycle(4)), 3),
        (VolcanoSpec(2, 1, CraterSpec.cycle(3)), 2),
        (VolcanoSpec(3, 1, CraterSpec.cycle(1)), 5),
    ]
    for spec, p in cases:
        base = volcano(spec)
        a = spec.crater.length
        for n in range(0, 3):
            comp = tower_component(base, ConstantVoltage(p), n)
            assert comp.vertex_count == base.vertex_count * p**n
            shape = recognize_volcano(comp)
            assert shape is not None, (spec, p, n)
            assert shape.depth == spec.depth
            assert shape.crater_kind == "cycle"
            assert shape.crater_length == p**n * a
            if spec.depth >= 1:
                # a loop crater (a = 1, counted once in the degree) unrolls
                # into a true cycle, raising each crater degree by one
                expected_l = spec.l if a >= 2 or n == 0 else spec.l + 1
                assert shape.l == expected_l
            assert kirchhoff_count(comp) == p**n * a


def test_derived_two_loop_volcanoes_are_augmented():
    for l, p in ((2, 2), (2, 3), (3, 2)):
        for d in (0, 1, 2):
            base = volcano(VolcanoSpec(l, d, CraterSpec.two_loops()))
            for n in (1, 2):
                g = derive(base, ConstantVoltage(p), n).graph
                shape = recognize_augmented_volcano(g)
                assert shape is not None, (l, p, d, n)
                assert is_augmented_volcano(g)
                assert shape.depth == d
                assert shape.crater_length == p**n
                if d >= 1:
                    assert shape.l == l
            assert not is_augmented_volcano(base)


def test_two_loop_volcano_kirchhoff():
    # kappa at level n is 2^(p^n - 1) * p^n, all of it from the crater
    for l, d, p in ((2, 1, 2), (2, 2, 2), (3, 1, 3)):
        base = volcano(VolcanoSpec(l, d, CraterSpec.two_loops()))
        for n in range(0, 3):
            comp = tower_component(base, ConstantVoltage(p), n)
            assert kirchhoff_count(comp) == 2 ** (p**n - 1) * p**n


def test_doubled_volcano_balanced_and_minimal():
    # doubling a cycle-crater or two-loop volcano balances it; away from
    # 2kl the tower invariants collapse to mu=0, lambda=1
    cases = [
        (VolcanoSpec(2, 1, CraterSpec.cycle(3)), 5),
        (VolcanoSpec(2, 0, CraterSpec.cycle(3)), 5),
        (VolcanoSpec(2, 1, CraterSpec.two_loops()), 3),
        (VolcanoSpec(3, 1, CraterSpec.cycle(2)), 5),
    ]
    for spec, p in cases:
        g = doubled(volcano(spec))
        assert is_balanced(g)
        hyp = check_theorem_hypotheses(g, p)
        assert hyp.balanced_hyp, (spec, p)
        inv = invariants(g, p)
        assert (inv.mu, inv.lam) == (0, 1), (spec, p)


def test_doubled_volcano_spanning_trees():
    # every spanning tree picks one of the k crater edges to drop and one
    # of two parallel copies of each remaining edge
    for spec in (
        VolcanoSpec(2, 0, CraterSpec.cycle(3)),
        VolcanoSpec(2, 1, CraterSpec.cycle(3)),
        VolcanoSpec(2, 0, CraterSpec.cycle(4)),
    ):
        g = doubled(volcano(spec))
        k = spec.crater.length
        expected = k * 2 ** (g.vertex_count - 1)
        assert kirchhoff_count(g) == expected
    for spec in (
        VolcanoSpec(2, 0, CraterSpec.two_loops()),
        VolcanoSpec(2, 1, CraterSpec.two_loops()),
    ):
        g = doubled(volcano(spec))
        assert kirchhoff_count(g) == 2 ** (g.vertex_count - 1)


def test_bare_crater_volcano_is_a_tree():
    v = volcano(VolcanoSpec(2, 2, CraterSpec.bare()))
    assert cycle_weight_profile(v).is_acyclic
    assert stabilization_level(cycle_weight_profile(v), 2) is None
