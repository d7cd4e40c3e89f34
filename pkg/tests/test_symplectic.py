"""sl2-triples, chain data, the sigma/tau factors, and full reversal."""

import pytest

from adjreal.certificates import verify_certificate
from adjreal.errors import NotInCentralizer, NotNilpotent, ZeroElement
from adjreal.gaussian import I, ONE, gr
from adjreal.liecore import LieContext, algebra_member, jn_matrix
from adjreal.matrix import ExactMatrix, det, inverse
from adjreal.symplectic import (
    build_sigma,
    build_tau,
    chain_decomposition,
    mixed_from_partition,
    nilpotent_from_partition,
    restrict_semisimple,
    reverse_full,
    sl2_triple,
    sp_basis,
    symplectic_partitions,
)


def test_sp_basis_dimension():
    assert len(sp_basis(2)) == 2 * (2 * 2 + 1)
    ctx = LieContext("sp", "Sp", 2)
    for b in sp_basis(2):
        assert algebra_member(b, ctx)


def test_triple_for_single_chain():
    x = nilpotent_from_partition([2])
    t = sl2_triple(x)
    t.validate()
    ctx = LieContext("sp", "Sp", 1)
    for m in (t.x, t.h, t.y):
        assert algebra_member(m, ctx)
    # the weight matrix of a length-2 chain is diag(+-1) in some basis
    assert sorted(str(v) for v in (t.h[0, 0], t.h[1, 1])) == ["-1", "1"]


def test_triple_for_two_two_partition():
    x = nilpotent_from_partition([2, 2])
    t = sl2_triple(x)
    t.validate()


def test_triple_rejects_zero_and_non_nilpotent():
    with pytest.raises(ZeroElement):
        sl2_triple(ExactMatrix.zeros(2))
    with pytest.raises(NotNilpotent):
        sl2_triple(ExactMatrix.diagonal([gr(1), gr(-1)]))


def test_chain_data_single_even_chain():
    x = nilpotent_from_partition([2])
    cd = chain_decomposition(sl2_triple(x))
    assert cd.parts == (2,)
    assert cd.counts[2] == 1
    g = cd.gram[2]
    assert g.rows == 1 and not g[0, 0].is_zero()
    assert g.transpose() == g


def test_chain_data_odd_pair():
    x = nilpotent_from_partition([3, 3])
    cd = chain_decomposition(sl2_triple(x))
    assert cd.counts[3] == 2
    g = cd.gram[3]
    assert g.transpose() == g.scale(-ONE)
    assert not det(g).is_zero()


def test_chain_data_partition_sum():
    x = nilpotent_from_partition([4])
    cd = chain_decomposition(sl2_triple(x))
    assert cd.counts[4] == 1
    assert sum(d * cd.counts[d] for d in cd.parts) == 4


def test_chain_heads_have_expected_weight_and_vanishing():
    x = nilpotent_from_partition([4, 2, 2])
    t = sl2_triple(x)
    cd = chain_decomposition(t)
    for d in cd.parts:
        w = 1 - d
        for v in cd.heads[d]:
            assert t.h.mul_vector(v) == [GaussRat_scale(c, w) for c in v]
            powered = v
            for _ in range(d):
                powered = x.mul_vector(powered)
            assert all(c.is_zero() for c in powered)
            # X^{d-1} v is nonzero
            prev = v
            for _ in range(d - 1):
                prev = x.mul_vector(prev)
            assert any(not c.is_zero() for c in prev)


def GaussRat_scale(c, k: int):
    from adjreal.gaussian import GaussRat

    return c * GaussRat.from_int(k)


def test_sigma_single_chain_diagonal():
    x = nilpotent_from_partition([2])
    cd = chain_decomposition(sl2_triple(x))
    sigma = build_sigma(cd)
    # in the chain basis sigma is diag(i, -i)
    d = inverse(cd.basis) * sigma * cd.basis
    assert d == ExactMatrix.diagonal([I, -I])


def test_sigma_odd_chain_signs():
    x = nilpotent_from_partition([3, 3])
    cd = chain_decomposition(sl2_triple(x))
    sigma = build_sigma(cd)
    d = inverse(cd.basis) * sigma * cd.basis
    assert d == ExactMatrix.diagonal([1, 1, -1, -1, 1, 1])


def test_sigma_preserves_symplectic_form_on_all_partitions():
    for total in (2, 4, 6):
        for parts in symplectic_partitions(total):
            if max(parts) == 1:
                continue
            x = nilpotent_from_partition(parts)
            cd = chain_decomposition(sl2_triple(x))
            sigma = build_sigma(cd)
            j = jn_matrix(total // 2)
            assert sigma.transpose() * j * sigma == j
            assert (sigma * x + x * sigma).is_zero()


def test_restrict_semisimple_blocks():
    x, xs, xn = mixed_from_partition([2, 2], {2: [gr(3)]})
    triple = sl2_triple(xn, commute_with=(xs,))
    cd = chain_decomposition(triple)
    blocks = restrict_semisimple(xs, cd)
    assert set(blocks) == {2}
    b = blocks[2]
    assert not b.is_zero()
    # infinitesimal invariance for the head form
    g = cd.gram[2]
    assert (b.transpose() * g + g * b).is_zero()


def test_restrict_zero_semisimple():
    x = nilpotent_from_partition([2, 2])
    cd = chain_decomposition(sl2_triple(x))
    blocks = restrict_semisimple(ExactMatrix.zeros(4), cd)
    assert all(b.is_zero() for b in blocks.values())


def test_restrict_rejects_non_commuting():
    x = nilpotent_from_partition([2, 2])
    cd = chain_decomposition(sl2_triple(x))
    bad = ExactMatrix.diagonal([gr(1), gr(2), gr(-1), gr(-2)])
    with pytest.raises(NotInCentralizer):
        restrict_semisimple(bad, cd)


def test_tau_reverses_semisimple_and_fixes_nilpotent():
    x, xs, xn = mixed_from_partition([3, 3], {3: [gr(2)]})
    triple = sl2_triple(xn, commute_with=(xs,))
    cd = chain_decomposition(triple)
    tau = build_tau(restrict_semisimple(xs, cd), cd)
    assert (tau * xs + xs * tau).is_zero()
    assert tau * xn == xn * tau
    j = jn_matrix(3)
    assert tau.transpose() * j * tau == j


def test_tau_block_preserves_head_form_characterization():
    """The centralizer characterization on chain bases: tau acts by the
    same block on every level and preserves (., .)_d exactly."""
    x, xs, xn = mixed_from_partition([2, 2, 1, 1], {2: [gr(4)], 1: [gr(1)]})
    triple = sl2_triple(xn, commute_with=(xs,))
    cd = chain_decomposition(triple)
    tau = build_tau(restrict_semisimple(xs, cd), cd)
    m = inverse(cd.basis) * tau * cd.basis
    for d in cd.parts:
        t = cd.counts[d]
        base = cd.level_offset(d, 0)
        block0 = ExactMatrix.from_rows(
            [[m[base + a, base + b] for b in range(t)] for a in range(t)]
        )
        for level in range(1, d):
            off = cd.level_offset(d, level)
            block = ExactMatrix.from_rows(
                [[m[off + a, off + b] for b in range(t)] for a in range(t)]
            )
            assert block == block0
        g = cd.gram[d]
        assert block0.transpose() * g * block0 == g


def test_sigma_is_scalar_on_head_blocks():
    x, xs, xn = mixed_from_partition([2, 2], {2: [gr(3)]})
    triple = sl2_triple(xn, commute_with=(xs,))
    cd = chain_decomposition(triple)
    sigma = build_sigma(cd)
    m = inverse(cd.basis) * sigma * cd.basis
    base = cd.level_offset(2, 0)
    t = cd.counts[2]
    block = ExactMatrix.from_rows(
        [[m[base + a, base + b] for b in range(t)] for a in range(t)]
    )
    assert block == ExactMatrix.identity(t).scale(I)
    assert (sigma * xs - xs * sigma).is_zero()


def test_reverse_full_nilpotent():
    x = nilpotent_from_partition([2])
    cert = reverse_full(x)
    assert verify_certificate(cert).ok
    assert not cert.claims_involution


def test_reverse_full_semisimple_rank_one():
    x = ExactMatrix.diagonal([gr(6), gr(-6)])
    cert = reverse_full(x)
    assert verify_certificate(cert).ok
    assert cert.reverser == jn_matrix(1)


def test_reverse_full_mixed():
    x, xs, xn = mixed_from_partition([2, 2], {2: [gr(3)]})
    cert = reverse_full(x)
    assert verify_certificate(cert).ok


def test_reverse_full_zero():
    cert = reverse_full(ExactMatrix.zeros(2))
    assert verify_certificate(cert).ok


def test_reverse_full_random_mixed(rng):
    pool = [gr(1), gr(-1), gr(2), I, gr("1/2")]
    configs = [([2, 2], {2: 1}), ([3, 3], {3: 1}), ([1, 1, 2], {1: 1}),
               ([2, 2, 2], {2: 1}), ([1, 1, 1, 1], {1: 2})]
    for _ in range(12):
        parts, pair_counts = configs[rng.randrange(len(configs))]
        params = {d: [rng.choice(pool) for _ in range(k)] for d, k in pair_counts.items()}
        x, xs, xn = mixed_from_partition(parts, params)
        cert = reverse_full(x)
        assert verify_certificate(cert).ok


def _irrational_mixed_element():
    """X = X_s + X_n in sp(2) with X_s eigenvalues +-sqrt(2) (outside
    Q(i)) and a commuting nonzero nilpotent part."""
    a = ExactMatrix.from_rows([[0, 1], [2, 0]])
    xs = ExactMatrix.block_diagonal([a, -a.transpose()])
    xn = ExactMatrix.from_rows(
        [[0, 0, 1, 0], [0, 0, 0, -2], [0, 0, 0, 0], [0, 0, 0, 0]]
    )
    assert algebra_member(xs + xn, LieContext("sp", "Sp", 2))
    assert (xs * xn - xn * xs).is_zero()
    return xs + xn


def test_reverse_full_irrational_semisimple_part():
    from adjreal.errors import SpectrumNotSplit

    x = _irrational_mixed_element()
    with pytest.raises(SpectrumNotSplit):
        reverse_full(x)


def test_sigma_still_available_for_irrational_mixed():
    # the nilpotent-negating factor never needs eigenvalues of X_s
    from adjreal.jordan import jordan_chevalley

    x = _irrational_mixed_element()
    pair = jordan_chevalley(x)
    triple = sl2_triple(pair.nilpotent_part, commute_with=(pair.semisimple_part,))
    cd = chain_decomposition(triple)
    sigma = build_sigma(cd)
    assert (sigma * pair.nilpotent_part + pair.nilpotent_part * sigma).is_zero()
    assert (sigma * pair.semisimple_part - pair.semisimple_part * sigma).is_zero()


def test_chain_data_json():
    x = nilpotent_from_partition([2, 2])
    cd = chain_decomposition(sl2_triple(x))
    blob = cd.to_json()
    assert blob["parts"] == [2]
    assert blob["counts"] == {"2": 2}
    assert len(blob["basis"]["entries"]) == 4
