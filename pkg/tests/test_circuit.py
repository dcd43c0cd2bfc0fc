import pytest

from bhqc.builders import (bell_chain, class_change_circuit, ghz_circuit,
                           teleport_circuit)
from bhqc.circuit import (MATCH, MATCH_UP_TO_SCALAR, MISMATCH, ApplyGate,
                          Circuit, Expect, Project, compare_kets,
                          instruction_text, run)
from bhqc.scalars import GaussianRational, amp
from bhqc.states import Ket


class TestCompareKets:
    def test_match(self):
        k = Ket(2, {"01": 1, "10": 1})
        assert compare_kets(k, Ket(2, {"01": 1, "10": 1})) == (MATCH, None)

    def test_zero_matches_zero(self):
        assert compare_kets(Ket.zero(1), Ket.zero(1)) == (MATCH, None)

    def test_scalar_match(self):
        expected = Ket(2, {"00": 1, "11": 1})
        computed = Ket(2, {"00": -1, "11": -1})
        verdict, scalar = compare_kets(expected, computed)
        assert verdict == MATCH_UP_TO_SCALAR
        assert scalar == GaussianRational(-1)

    def test_scalar_match_with_symbolic_amplitudes(self):
        expected = Ket(1, {"0": amp("alpha")})
        computed = Ket(1, {"0": 2 * amp("alpha")})
        verdict, scalar = compare_kets(expected, computed)
        assert verdict == MATCH_UP_TO_SCALAR
        assert scalar == GaussianRational(2)

    def test_mismatch_cases(self):
        one = Ket.basis("0")
        assert compare_kets(one, Ket.zero(1))[0] == MISMATCH
        assert compare_kets(Ket.zero(1), one)[0] == MISMATCH
        assert compare_kets(one, Ket.basis("1"))[0] == MISMATCH
        # a symbolic ratio is not a scalar match
        assert compare_kets(Ket(1, {"0": amp("alpha")}),
                            Ket(1, {"0": amp("beta")}))[0] == MISMATCH
        assert compare_kets(Ket(1, {"0": 1}),
                            Ket(1, {"0": amp("alpha")}))[0] == MISMATCH

    def test_partial_proportionality_is_a_mismatch(self):
        expected = Ket(2, {"00": 1, "11": 1})
        computed = Ket(2, {"00": 2, "11": 3})
        assert compare_kets(expected, computed)[0] == MISMATCH


class TestExecutor:
    def test_empty_instruction_list(self):
        result = run(Circuit(2, Ket.basis("00")))
        assert len(result.steps) == 1
        assert result.final_state == Ket.basis("00")

    def test_bell_b1_sequence(self):
        circuit = Circuit(2, Ket.basis("00"), (
            ApplyGate("LL1", (0, 1)), ApplyGate("STAR", (0,)), ApplyGate("STAR", (1,))))
        assert run(circuit).final_state == Ket(2, {"01": 1, "10": 1})

    def test_expect_records_without_advancing(self):
        circuit = Circuit(1, Ket.basis("0"), (
            Expect(Ket.basis("0")),
            ApplyGate("L4", (0,)),
            Expect(Ket.basis("0")),
        ))
        result = run(circuit)
        assert len(result.steps) == 2  # init plus one gate
        assert [c.verdict for c in result.claims] == [MATCH, MISMATCH]
        assert result.claims[0].claim_id == "expect-1"

    def test_projection_is_post_selection_without_renormalization(self):
        circuit = Circuit(2, Ket(2, {"00": 2, "11": 2}), (Project("0", (0,)),))
        assert run(circuit).final_state == Ket(2, {"00": 2})

    def test_ghz_controls_agree(self):
        final1 = run(ghz_circuit(1)).final_state
        final2 = run(ghz_circuit(2)).final_state
        assert final1 == final2 == Ket(3, {"000": 1, "111": 1})

    def test_teleport_factors_exactly(self):
        result = run(teleport_circuit())
        expected = Ket.basis("00").tensor(Ket(1, {"0": amp("alpha"),
                                                  "1": amp("beta")}))
        assert result.final_state == expected
        assert all(c.verdict == MATCH for c in result.claims)

    def test_class_change_verdicts(self):
        result = run(class_change_circuit())
        assert [c.verdict for c in result.claims] == [MATCH, MISMATCH]
        assert result.final_state == Ket(3, {"000": 1, "011": 1})

    def test_bell_chain_exposes_the_divergent_stages(self):
        result = run(bell_chain())
        assert [c.verdict for c in result.claims] == [MATCH, MATCH, MISMATCH, MISMATCH]
        assert result.final_state == Ket.basis("11")

    def test_linearity_over_formal_combinations(self):
        gates = (ApplyGate("LL1", (0, 1)), ApplyGate("HPLUS", (0,)),
                 ApplyGate("STAR", (1,)), ApplyGate("CNOT", (1, 0)))
        x, y = Ket.basis("00"), Ket.basis("11")
        combo = amp("alpha") * x + amp("beta") * y
        run_x = run(Circuit(2, x, gates)).final_state
        run_y = run(Circuit(2, y, gates)).final_state
        run_combo = run(Circuit(2, combo, gates)).final_state
        assert run_combo == amp("alpha") * run_x + amp("beta") * run_y

    def test_deterministic_traces(self):
        def render_once():
            result = run(bell_chain())
            return "\n".join(f"{s.index} {instruction_text(s.instruction)} {s.state}"
                             for s in result.steps)
        assert render_once() == render_once()

    def test_validation_errors(self):
        with pytest.raises(ValueError, match="needs 2 targets"):
            run(Circuit(1, Ket.basis("0"), (ApplyGate("CNOT", (0,)),)))
        with pytest.raises(ValueError, match="out of range"):
            run(Circuit(2, Ket.basis("00"), (ApplyGate("STAR", (5,)),)))
        with pytest.raises(ValueError, match="unknown gate"):
            run(Circuit(1, Ket.basis("0"), (ApplyGate("LX", (0,)),)))
        with pytest.raises(ValueError, match="wrong qubit count"):
            run(Circuit(2, Ket.basis("0")))
