import pytest

from tritcodes import (
    WeightEnumerator,
    brute_force_min_weight,
    conclude_distance,
    macwilliams,
    weight2_search,
    weight3_search,
)
from tritcodes.distance import u_power_solutions, weight4_witness
from tritcodes.exceptions import BudgetExceeded, NonIntegerOutput
from tritcodes.codebuilder import is_codeword

from conftest import ENUM_M5


class TestWeight2:
    def test_no_witness(self, code3, code5, code7):
        for code in (code3, code5, code7):
            assert weight2_search(code) is None

    def test_relaxed_system_has_witnesses(self, code3):
        wit = weight2_search(code3, u_only=True)
        assert wit is not None
        # delta is a nonsquare with c = 1: delta^u = -delta = -1 means delta = 1,
        # so the c=1 witnesses are exactly delta with delta^u = -1
        ctx = code3.ctx
        t2 = wit["support"][1]
        c2 = wit["coefficients"][1]
        delta_u = ctx.pow(ctx.exp_of(t2), code3.u)
        assert ctx.smul(c2, delta_u) == ctx.neg(1)


class TestWeight3:
    def test_no_witness(self, code3, code5, code7):
        for code in (code3, code5, code7):
            assert weight3_search(code) is None

    def test_relaxed_system_has_witnesses(self, code3, code5):
        for code in (code3, code5):
            wit = weight3_search(code, u_only=True)
            assert wit is not None
            ctx = code.ctx
            y1, y2 = wit["y1"], wit["y2"]
            c1, c2, c3 = wit["coefficients"]
            lhs = ctx.add(
                ctx.add(
                    ctx.smul(c1, ctx.pow(y1, code.u)),
                    ctx.smul(c2, ctx.pow(y2, code.u)),
                ),
                c3,
            )
            assert lhs == 0

    def test_candidate_logic_exhaustive(self, ctx3):
        """Solutions of y^u = s are exactly {s, -s} for squares, else empty."""
        for s in range(1, ctx3.size):
            brute = set(u_power_solutions(s, ctx3))
            if ctx3.is_square(s):
                assert brute == {s, ctx3.neg(s)}
            else:
                assert brute == set()


class TestOracle:
    def test_m3_wmax3_empty(self, code3):
        assert brute_force_min_weight(code3, 3) is None

    def test_m5_wmax3_empty(self, code5):
        assert brute_force_min_weight(code5, 3) is None

    def test_m3_wmax4_finds_witness(self, code3):
        hit = brute_force_min_weight(code3, 4)
        assert hit is not None
        w, support, coeffs = hit
        assert w == 4
        word = [0] * code3.n
        for t, c in zip(support, coeffs):
            word[t] = c
        assert is_codeword(word, code3)

    def test_budget_rejected(self, code7):
        with pytest.raises(BudgetExceeded):
            brute_force_min_weight(code7, 3, budget=10**6)

    def test_relaxed_agreement(self, code3):
        """Weakened u-only systems: structured and direct scans agree on existence."""
        ctx = code3.ctx
        wit = weight2_search(code3, u_only=True)
        assert wit is not None
        # direct scan of the u-syndrome over weight-2 patterns
        found = False
        for t2 in range(1, code3.n):
            for c2 in (1, 2):
                s = ctx.add(ctx.exp_of(0), ctx.smul(c2, ctx.exp_of(code3.u * t2)))
                if s == 0:
                    found = True
        assert found


class TestWeight4Witness:
    def test_found_and_verified(self, code3, code5, code7):
        for code in (code3, code5, code7):
            wit = weight4_witness(code)
            assert wit is not None
            word = [0] * code.n
            for t, c in zip(wit["support"], wit["coefficients"]):
                word[t] = c
            assert is_codeword(word, code)

    def test_matches_oracle_weight_m3(self, code3):
        wit = weight4_witness(code3)
        oracle = brute_force_min_weight(code3, 4)
        assert oracle[0] == len(wit["support"]) == 4


class TestMacWilliams:
    def test_zero_code_gives_full_space(self):
        from math import comb

        n, q = 8, 3
        enum = WeightEnumerator(n=n, counts={0: 1})
        dual = macwilliams(enum, n, q)
        assert dual.counts == {w: comb(n, w) * (q - 1) ** w for w in range(n + 1)}

    def test_involution(self, ctx3):
        from tritcodes import direct_enumerator

        enum = direct_enumerator(ctx3)
        dual = macwilliams(enum, enum.n, 3)
        back = macwilliams(dual, enum.n, 3)
        assert back == enum

    def test_example1_dual_transform(self):
        enum = WeightEnumerator(n=242, counts=dict(ENUM_M5))
        code_side = macwilliams(enum, 242, 3, max_weight=4)
        assert code_side.counts.get(0) == 1
        for j in (1, 2, 3):
            assert code_side.counts.get(j, 0) == 0
        assert code_side.counts[4] > 0

    def test_invalid_enumerator_rejected(self):
        bad = WeightEnumerator(n=8, counts={0: 1, 3: 5})
        with pytest.raises(NonIntegerOutput):
            macwilliams(bad, 8, 3)

    def test_low_weight_transform_of_computed_enums(self, enum5, enum7, enum9):
        for enum in (enum5, enum7, enum9):
            mw = macwilliams(enum, enum.n, 3, max_weight=4)
            assert all(mw.counts.get(j, 0) == 0 for j in (1, 2, 3))
            assert mw.counts[4] > 0


class TestConcludeDistance:
    def test_m3(self, code3):
        report = conclude_distance(code3)
        assert report.concluded_d == 4
        assert report.oracle_checked

    def test_m5(self, code5, enum5):
        report = conclude_distance(code5, dual_enum=enum5)
        assert report.concluded_d == 4
        assert (report.n, report.k) == (242, 232)
        assert report.macwilliams_low_weights[4] > 0

    def test_m7(self, code7, enum7):
        report = conclude_distance(code7, dual_enum=enum7)
        assert report.concluded_d == 4
        assert (report.n, report.k) == (2186, 2172)
        assert not report.oracle_checked  # weight-3 enumeration over budget

    def test_json_shape(self, code3):
        doc = conclude_distance(code3).to_json_dict()
        assert set(doc) == {
            "d",
            "sphere_packing_ceiling",
            "weight_le3_witness",
            "weight4_support",
        }
        assert doc["d"] == 4
        assert doc["weight_le3_witness"] is None
        assert len(doc["weight4_support"]) == 4
