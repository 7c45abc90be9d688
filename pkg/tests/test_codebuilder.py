import random

import pytest

from tritcodes import codebuilder as cb
from tritcodes import make_field, polyring
from tritcodes.exceptions import LengthMismatch

from conftest import GEN_M5, GEN_M7


def test_build_code_m5(code5):
    assert (code5.n, code5.k) == (242, 232)
    assert (code5.u, code5.v) == (122, 19)
    assert code5.gen == GEN_M5


def test_build_code_m7(code7):
    assert (code7.n, code7.k) == (2186, 2172)
    assert code7.gen == GEN_M7


def test_build_code_m3(code3):
    assert (code3.n, code3.k) == (26, 20)
    assert (code3.u, code3.v) == (14, 7)


def test_generator_degree_is_2m(code3, code5, code7):
    for code in (code3, code5, code7):
        assert polyring.degree(code.gen) == 2 * code.m


def test_generator_roots(code5):
    ctx = code5.ctx
    for e in (code5.u, code5.v):
        root = ctx.exp_of(e)
        acc = 0
        for c in reversed(code5.gen):
            acc = ctx.add(ctx.mul(acc, root), c)
        assert acc == 0


def test_is_codeword_trivia(code5):
    assert cb.is_codeword((0,) * code5.n, code5)
    padded = tuple(code5.gen) + (0,) * (code5.n - len(code5.gen))
    assert cb.is_codeword(padded, code5)
    with pytest.raises(LengthMismatch):
        cb.is_codeword((0,) * 10, code5)


def test_is_codeword_against_syndrome_oracle(code3):
    """Random weight-3 words vs. brute-force power-sum syndrome membership."""
    ctx = code3.ctx
    n = code3.n
    rng = random.Random(42)
    for _ in range(50):
        support = rng.sample(range(n), 3)
        coeffs = [rng.choice((1, 2)) for _ in support]
        word = [0] * n
        for t, c in zip(support, coeffs):
            word[t] = c
        syn_u = 0
        syn_v = 0
        for t, c in zip(support, coeffs):
            syn_u = ctx.add(syn_u, ctx.smul(c, ctx.exp_of(code3.u * t)))
            syn_v = ctx.add(syn_v, ctx.smul(c, ctx.exp_of(code3.v * t)))
        assert cb.is_codeword(word, code3) == (syn_u == 0 and syn_v == 0)


@pytest.mark.parametrize("m", [3, 5])
def test_cyclic_shift_closure(m):
    ctx = make_field(m)
    code = cb.build_code(ctx)
    rng = random.Random(m)
    for _ in range(50):
        deg = rng.randrange(0, code.k)
        msg = [0] * (deg + 1)
        msg[deg] = rng.choice((1, 2))
        for i in range(deg):
            if rng.random() < 0.05:
                msg[i] = rng.choice((1, 2))
        word = cb.encode(msg, code)
        assert cb.is_codeword(word, code)
        assert cb.is_codeword(cb.cyclic_shift(word, rng.randrange(1, code.n)), code)


def test_sphere_packing_examples():
    assert cb.sphere_packing_max_d(242, 232, 3) == 4
    assert cb.sphere_packing_max_d(26, 20, 3) == 4
    assert cb.sphere_packing_max_d(100, 100, 3) == 1


def test_sphere_packing_ball_volumes():
    # radius-1 and radius-2 volumes behind the m=5 result
    assert cb.hamming_ball_volume(242, 1, 3) == 485
    assert cb.hamming_ball_volume(242, 2, 3) == 117129
    assert cb.hamming_ball_volume(26, 1, 3) == 53
    assert cb.hamming_ball_volume(26, 2, 3) == 1353


def test_sphere_packing_all_supported_m():
    for m in (3, 5, 7, 9, 11, 13):
        assert cb.sphere_packing_max_d(3**m - 1, 3**m - 1 - 2 * m, 3) == 4
