import pytest
from hypothesis import given, strategies as st

from speedcops.game import (
    IllegalMove,
    SearchState,
    VariantSpec,
    initial_state,
    robber_options,
    simulate_script,
    spread,
    step,
    violates,
)
from speedcops.generators import gen_ia_gap, gen_recontamination
from speedcops.graph import INF, bounded_reach
from speedcops.scripts import ia_gap_script, recontamination_expected, recontamination_script
from strategies import graphs

a, b, c = 1, 2, 4  # vertex masks on P3


def V(code):
    return VariantSpec.parse(code)


class TestVariantSpec:
    @pytest.mark.parametrize("code", ["va_1", "il_inf", "rm-vl_2", "cm-ia_3", "rm-il_inf+lenient"])
    def test_round_trip(self, code):
        assert VariantSpec.parse(code).code == code

    def test_speed_argument(self):
        assert VariantSpec.parse("cm-vl", 4).speed == 4

    @pytest.mark.parametrize("code", ["xa_1", "va_0", "va_-1", "la"])
    def test_rejects(self, code):
        with pytest.raises(ValueError):
            VariantSpec.parse(code)


class TestRobberOptions:
    def test_lazy_not_attacked(self, P3):
        assert robber_options(P3, V("vl_inf"), 0, a, 2) == (c, 0)

    def test_persistent_cop_blocks(self, P3):
        assert robber_options(P3, V("vl_inf"), b, b | c, 2) == (c, c)

    def test_active_speed_one(self, P3):
        assert robber_options(P3, V("va_1"), 0, b, 0) == (a | b, b)


class TestSpread:
    def test_active(self, P3):
        assert spread(P3, V("ia_1"), 0, b, a | b | c) == a | c

    def test_lazy_spill(self, P3):
        assert spread(P3, V("il_inf"), 0, b, a | b | c) == a | c

    def test_lazy_blocked(self, P3):
        assert spread(P3, V("il_inf"), a, a | b, b | c) == c

    @given(graphs(max_n=6), st.data())
    def test_lazy_within_active(self, G, data):
        # a lazy robber can only be where an active one could be
        S_old = data.draw(st.integers(0, G.full))
        S_new = data.draw(st.integers(0, G.full))
        R = data.draw(st.integers(0, G.full)) & ~S_old
        for s in (1, 2, INF):
            lazy = spread(G, V(f"il_{s}"), S_old, S_new, R)
            active = spread(G, V(f"ia_{s}"), S_old, S_new, R)
            assert lazy & ~active == 0
            assert active == bounded_reach(G, S_old & S_new, R, s) & ~S_new


class TestStep:
    def test_invisible_lazy_sweep(self, P3):
        v = V("il_inf")
        st1 = step(P3, v, initial_state(P3, v), b)
        assert st1.contamination == a | c
        st2 = step(P3, v, st1, a | b)
        assert st2.contamination == c
        assert step(P3, v, st2, b | c).kind == "cleared"

    def test_cop_monotone_revisit(self, P3):
        v = V("cm-vl_inf")
        state = SearchState(cops=b, robber=2, cleared=a | b)
        with pytest.raises(IllegalMove):
            step(P3, v, state, a)

    def test_visible_capture(self, P3):
        v = V("va_inf")
        state = step(P3, v, initial_state(P3, v, robber=0), b, robber_choice=0)
        assert state.robber == 0
        assert step(P3, v, state, a | b).kind == "caught"

    def test_needs_choice(self, P3):
        v = V("va_inf")
        with pytest.raises(IllegalMove):
            step(P3, v, initial_state(P3, v, robber=0), c)

    def test_too_many_cops(self, P3):
        v = V("il_inf")
        with pytest.raises(IllegalMove):
            step(P3, v, initial_state(P3, v), a | b, k=1)

    def test_robber_monotone_violation(self, P3):
        v = V("rm-il_inf")
        st1 = step(P3, v, initial_state(P3, v), a)
        # lifting the cop from a lets contamination flow back into it
        assert step(P3, v, st1, c).kind == "violated"

    def test_lenient_capture(self):
        strict, lenient = V("rm-vl_inf"), V("rm-vl_inf+lenient")
        assert violates(strict, a, a, a)
        assert not violates(lenient, a, a, a)
        assert violates(lenient, a, a, 0)


class TestSimulate:
    def test_lazy_sweep(self, P3):
        trace = simulate_script(P3, V("il_inf"), [b, a | b, b | c])
        assert trace.describe() == "cleared@3"
        assert trace.width == 2
        assert trace.recontamination_rounds == []

    def test_active_sweep_fails(self, P3):
        trace = simulate_script(P3, V("ia_inf"), [a, b, c])
        assert trace.outcome is None
        assert trace.describe() == "evaded"
        assert trace.recontamination_rounds

    def test_visible_rejected(self, P3):
        with pytest.raises(ValueError):
            simulate_script(P3, V("vl_inf"), [a])

    def test_ia_gap_script(self):
        G = gen_ia_gap(1, 1, 4)
        trace = simulate_script(G, V("ia_1"), ia_gap_script(G))
        assert trace.outcome.kind == "cleared"
        assert trace.width == 4


class TestRecontaminationScript:
    @pytest.fixture(scope="class")
    @staticmethod
    def run():
        G = gen_recontamination(4, 8, 8, 2, 4)
        script = recontamination_script(G)
        return G, script, simulate_script(G, V("il_4"), script, settle_first=True)

    def test_shape(self, run):
        G, script, trace = run
        assert G.n == 52
        # 24 snapshots: the empty start plus one per announcement
        assert len(script) == 23

    def test_outcome(self, run):
        _, _, trace = run
        assert trace.describe() == "cleared@23"
        assert trace.width == 10
        assert trace.recontamination_rounds == [20]

    def test_contamination_column(self, run):
        G, _, trace = run
        expected = recontamination_expected(G)
        assert [row.contamination for row in trace.rows] == expected[: len(trace.rows)]

    def test_needs_settling(self, run):
        # without settling, the cops placed on clean vertices arrive too late
        G, script, _ = run
        assert simulate_script(G, V("il_4"), script).describe() != "cleared@23"
