"""Unit tests for the engines, interreduction and verification."""

import pytest

from src.bench.generators import gen_cyclic
from src.engines.base import compute_basis, create_engine
from src.engines.buchberger import BuchbergerSugarEngine, buchberger_sugar, complete_basis
from src.engines.f5 import F5PresortEngine
from src.engines.interreduce import interreduce
from src.engines.normal_form import normal_form, plain_spoly, reduces_to_zero
from src.engines.sba import SBAEngine
from src.engines.verify import verify_groebner
from src.errors import EngineTimeoutError, RingMismatchError
from src.models.algebra import SigOrderKind
from src.models.engine import Algorithm, CriteriaPreset, EngineConfig, RewriteFlavor

SIGNATURE_CONFIGS = [
    EngineConfig.with_criteria(preset, algorithm=algorithm, sig_order=order, rewrite_flavor=flavor)
    for algorithm in (Algorithm.SBA, Algorithm.F5_PRESORT)
    for order in SigOrderKind
    for preset in CriteriaPreset
    for flavor in RewriteFlavor
]


class TestFactory:
    """Tests for engine selection."""

    def test_create_engine(self):
        assert isinstance(create_engine(EngineConfig()), SBAEngine)
        assert isinstance(create_engine(EngineConfig(algorithm=Algorithm.F5_PRESORT)), F5PresortEngine)
        engine = create_engine(EngineConfig(algorithm=Algorithm.BUCHBERGER_SUGAR))
        assert isinstance(engine, BuchbergerSugarEngine)

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            compute_basis([])

    def test_mixed_rings_rejected(self, ring_xy, ring_xy_big):
        with pytest.raises(RingMismatchError):
            compute_basis([ring_xy.gen(0), ring_xy_big.gen(0)])


class TestWorkedExample:
    """The two-generator example {x^2 - y, x*y - 1}."""

    @pytest.mark.parametrize("config", SIGNATURE_CONFIGS, ids=lambda c: c.label)
    def test_signature_engines(self, worked_system, worked_basis, config):
        assert compute_basis(worked_system, config).basis == worked_basis

    def test_oracle(self, worked_system, worked_basis):
        result = buchberger_sugar(worked_system)
        assert result.basis == worked_basis
        assert result.stats.zero_reductions == 1

    def test_sba_counters_and_trace(self, worked_system, ring_xy_big):
        result = compute_basis(worked_system, EngineConfig())
        stats = result.stats
        assert stats.spoly_reductions == 1
        assert stats.zero_reductions == 0
        assert stats.discarded_syzygy_criterion == 2
        assert stats.basis_size_final == 3
        assert stats.max_basis_size == 3
        assert not stats.homogeneous_input

        (entry,) = result.trace
        assert entry.sig_mono == ring_xy_big.variable(0)
        assert entry.sig_idx == 2
        assert (entry.sig_deg, entry.pair_deg, entry.spoly_deg, entry.sugar) == (3, 3, 2, 3)
        assert stats.strict_relation_events == 1
        assert stats.relation_violations == 0
        assert stats.sugar_sigdeg_violations == 0

    def test_without_criteria_pairs_reduce_to_zero(self, worked_system, worked_basis):
        config = EngineConfig.with_criteria(CriteriaPreset.NONE)
        result = compute_basis(worked_system, config)
        assert result.basis == worked_basis
        assert result.stats.spoly_reductions == 3
        assert result.stats.zero_reductions == 2


class TestEdgeCases:
    """Degenerate inputs."""

    @pytest.mark.parametrize("algorithm", list(Algorithm))
    def test_single_variable(self, ring_xy_big, algorithm):
        x, _ = ring_xy_big.gens
        assert compute_basis([x], EngineConfig(algorithm=algorithm)).basis == [x]

    def test_duplicate_generator(self, ring_xy_big):
        x, _ = ring_xy_big.gens
        result = compute_basis([x, x * 5], EngineConfig())
        assert result.basis == [x]
        assert result.stats.zero_reductions == 1

    def test_zero_generators_dropped(self, ring_xy_big):
        x, _ = ring_xy_big.gens
        assert compute_basis([ring_xy_big.zero(), x]).basis == [x]

    def test_unit_ideal(self, ring_xy_big):
        x, y = ring_xy_big.gens
        one = ring_xy_big.constant(1)
        for algorithm in Algorithm:
            result = compute_basis([x * x - y, x * y - one, x], EngineConfig(algorithm=algorithm))
            assert result.basis == [one]

    def test_product_criterion(self, ring_xy_big):
        x, y = ring_xy_big.gens
        result = buchberger_sugar([x, y])
        assert result.basis == [y, x]
        assert result.stats.discarded_product_criterion == 1
        assert result.stats.spoly_reductions == 0

    def test_lex_ordering(self, worked_system):
        result = buchberger_sugar(worked_system, ord="lex")
        lex = worked_system[0].ring.with_ordering("lex")
        x, y = lex.gens
        one = lex.constant(1)
        assert result.basis == [y * y * y - one, x - y * y]
        assert compute_basis([f.set_ring(lex) for f in worked_system]).basis == result.basis

    def test_timeout(self):
        config = EngineConfig(timeout_seconds=1e-9)
        with pytest.raises(EngineTimeoutError) as excinfo:
            compute_basis(gen_cyclic(5), config)
        assert excinfo.value.limit_seconds == 1e-9


class TestDeterminism:
    """Repeated runs must agree on everything except wall time."""

    @pytest.mark.parametrize("algorithm", list(Algorithm))
    def test_repeatable(self, algorithm):
        F = gen_cyclic(4)
        config = EngineConfig(algorithm=algorithm, sig_order=SigOrderKind.SCHREYER)
        first = compute_basis(F, config)
        second = compute_basis(F, config)
        assert first.basis == second.basis
        assert first.trace == second.trace
        assert first.stats.deterministic_view() == second.stats.deterministic_view()


class TestCheckedRuns:
    """Runs with invariant checks enabled."""

    @pytest.mark.parametrize("order", list(SigOrderKind))
    def test_sba_cyclic4_passes_checks(self, order, cyclic4_golden):
        config = EngineConfig(sig_order=order, check_invariants=True)
        result = compute_basis(gen_cyclic(4), config)
        assert result.basis == cyclic4_golden
        assert result.stats.signature_order_violations == 0
        assert result.stats.relation_violations == 0

    def test_schreyer_grevlex_sugar_equals_sigdeg(self):
        result = compute_basis(gen_cyclic(4), EngineConfig(sig_order=SigOrderKind.SCHREYER))
        assert result.stats.sugar_sigdeg_violations == 0
        for entry in result.trace:
            assert entry.sugar == entry.sig_deg


class TestNormalForm:
    """Tests for plain reduction helpers."""

    def test_plain_spoly(self, worked_system, ring_xy_big):
        x, y = ring_xy_big.gens
        assert plain_spoly(*worked_system) == x - y * y
        assert plain_spoly(worked_system[0], ring_xy_big.zero()) is None

    def test_normal_form(self, worked_basis, ring_xy_big):
        x, y = ring_xy_big.gens
        assert normal_form(x * x * x, worked_basis) == ring_xy_big.constant(1)
        assert reduces_to_zero(x * x * y - x, worked_basis)
        assert not reduces_to_zero(x + y, worked_basis)


class TestInterreduce:
    """Tests for the reduced-basis normalization."""

    def test_minimalize_and_tail_reduce(self, ring_xy_big):
        x, y = ring_xy_big.gens
        one = ring_xy_big.constant(1)
        G = [(x * x + x * y) * 3, x * y - one, x * x * y]
        assert interreduce(G) == [x * y - one, x * x + one]

    def test_empty(self):
        assert interreduce([]) == []


class TestCompletion:
    """Tests for Buchberger completion of a candidate basis."""

    def test_complete_basis_adds_missing_elements(self, worked_system, worked_basis):
        basis, added = complete_basis(worked_system)
        assert basis == worked_basis
        assert added == 1

    def test_complete_basis_of_a_basis(self, worked_basis):
        assert complete_basis(worked_basis) == (worked_basis, 0)


class TestVerify:
    """Tests for the independent Groebner basis check."""

    def test_accepts_reduced_basis(self, worked_system, worked_basis):
        assert verify_groebner(worked_basis, worked_system)

    def test_rejects_non_basis(self, worked_system):
        assert not verify_groebner(worked_system, worked_system)

    def test_rejects_too_small_ideal(self, ring_xy_big):
        x, y = ring_xy_big.gens
        assert not verify_groebner([x], [x, y])

    def test_rejects_too_large_ideal(self, ring_xy_big):
        x, y = ring_xy_big.gens
        assert not verify_groebner([y, x], [x])

    def test_empty_system(self, ring_xy_big):
        assert verify_groebner([], [])
        assert not verify_groebner([ring_xy_big.gen(0)], [])

    def test_other_ordering(self, worked_system):
        lex_basis = buchberger_sugar(worked_system, ord="lex").basis
        assert verify_groebner(lex_basis, worked_system, ord="lex")
