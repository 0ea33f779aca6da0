import pytest

import rcakit as rk


def test_reversible_elementary_rules():
    found = [c for c in range(256) if rk.is_injective(rk.LocalRule.elementary(c))]
    assert found == [15, 51, 85, 170, 204, 240]


def test_invert_shift():
    inv = rk.invert(rk.LocalRule.elementary(170))
    assert inv.neighborhood.offsets == [-1]
    assert rk.equal(inv, rk.LocalRule.elementary(240))
    with pytest.raises(rk.NotInjective):
        rk.invert(rk.LocalRule.elementary(90))


def test_apply_cyclic_and_parse():
    shift = rk.parse_rule("alphabet 2\nneighborhood 1\ntable 0 1\n")
    assert rk.apply_cyclic(shift, [0, 1, 1, 0]) == [1, 1, 0, 0]
    assert rk.parse_rule(rk.format_rule(shift)) == shift
    with pytest.raises(rk.RcaError):
        rk.parse_rule("alphabet 2\nneighborhood 0\ntable 0 1 1\n")


def test_block_neighborhood_and_k0():
    g = rk.ReversibleCA.from_rule(rk.LocalRule.elementary(170))
    assert rk.block_neighborhood(g).offsets == [1]
    assert rk.bn_upper_bound(g).offsets == [1]
    assert rk.localization(rk.reversible_update(g, 0)) == [(0, 1), (1, 0)]


def test_verify_circuit():
    g = rk.ReversibleCA.from_rule(rk.LocalRule.elementary(170))
    report = rk.verify_block_representation(g, 6, mode="exhaustive")
    assert (report.mode, report.tested, report.mismatches, report.passed) == ("exhaustive", 4096, 0, True)
    circuit = rk.assemble_circuit(g, 6)
    assert [name for name, _ in circuit.layers] == ["reversible-updates", "swaps"]
    # (c, d) packed as 2c + d: the first track shifts left, the second right.
    assert rk.apply_circuit(circuit, [0, 2, 0, 0, 0, 0]) == [2, 0, 0, 0, 0, 0]
    assert rk.apply_circuit(circuit, [0, 1, 0, 0, 0, 0]) == [0, 0, 1, 0, 0, 0]


def test_time_symmetry():
    f = rk.ReversibleCA.from_rule(rk.LocalRule.elementary(170))
    g, h = rk.time_symmetrize(f)
    assert h == rk.Involution.pair_swap(2)
    assert rk.is_ltsca(g, h)
    assert not rk.is_ltsca(f, rk.Involution.identity(2))
    assert rk.find_time_symmetries(f) == []
    result = rk.ebr_of_square(g, h, 6)
    assert result["report"].passed and result["report"].tested == 4096
    assert result["l0_localization"] == [(0, -1), (0, 1)]
    assert result["l0_within_bn"]
