import pytest

from dscodes.code import CheckSet, Fault, iter_error_syndromes, observed_syndrome
from dscodes.decode import (
    NoiseModel,
    UncorrectableBudgetError,
    build_table,
    decode,
    ml_decode,
    run_trials,
    sample_fault,
)
from dscodes.symplectic import BitVector, parse_pauli
from dscodes.verify import FaultBudget, equivalent_data


@pytest.fixture(scope="module")
def table_ii(augmented_five):
    return build_table(augmented_five, FaultBudget.symmetric(1))


@pytest.fixture(scope="module")
def data_only_table(bare_five):
    return build_table(bare_five, FaultBudget.asymmetric(1, 0))


class TestBuildTable:
    def test_augmented_five_has_21_entries(self, table_ii):
        assert len(table_ii) == 21

    def test_bare_five_refused_with_witness(self, bare_five):
        with pytest.raises(UncorrectableBudgetError) as err:
            build_table(bare_five, FaultBudget.symmetric(1))
        a, b = err.value.report.witness
        assert str(a.data_pauli()) == "XIIII"
        assert b.flips.support() == (3,)

    def test_alternative_steane_has_28_entries(self, steane_alt):
        table = build_table(CheckSet.from_code(steane_alt), FaultBudget.symmetric(1))
        assert len(table) == 28

    def test_entries_are_minimal_weight(self, table_ii):
        for observed, fault in table_ii.entries.items():
            assert fault.combined_weight <= 1
            got = observed_syndrome(table_ii.checkset, fault)
            assert got.bits == observed

    def test_data_only_table_covers_all_syndromes(self, data_only_table):
        assert len(data_only_table) == 16


class TestDecode:
    def test_table_lookup(self, table_ii):
        fault = decode(table_ii, BitVector.from01("00011"))
        assert str(fault.data_pauli()) == "XIIII" and fault.flip_weight == 0

    def test_zero_syndrome_is_no_error(self, table_ii):
        fault = decode(table_ii, BitVector.zeros(5))
        assert fault.combined_weight == 0

    def test_out_of_table(self, table_ii):
        assert decode(table_ii, BitVector.from01("11010")) is None

    def test_every_single_fault_corrects(self, augmented_five, table_ii, five):
        # all 15 single data errors
        for e, s, _ in iter_error_syndromes(augmented_five, 1, 1):
            got = decode(table_ii, BitVector(s, 5))
            assert got is not None
            assert equivalent_data(five, got.data, BitVector(e, 10))
        # all 5 single flips
        for i in range(5):
            got = decode(table_ii, BitVector.unit(i, 5))
            assert got is not None
            assert equivalent_data(five, got.data, BitVector.zeros(10))


class TestMlDecode:
    def test_prefers_data_when_flips_rare(self, augmented_five):
        model = NoiseModel(p=1e-2, q=1e-3, seed=0)
        fault = ml_decode(augmented_five, BitVector.from01("00011"), model, 2)
        assert str(fault.data_pauli()) == "XIIII" and fault.flip_weight == 0

    def test_prefers_flips_when_data_rare(self, augmented_five):
        model = NoiseModel(p=1e-4, q=1e-1, seed=0)
        fault = ml_decode(augmented_five, BitVector.from01("00011"), model, 2)
        assert fault.data_weight == 0 and fault.flips.support() == (3, 4)

    def test_zero_syndrome_decodes_to_identity(self, augmented_five):
        model = NoiseModel(p=0.3, q=0.3, seed=0)
        fault = ml_decode(augmented_five, BitVector.zeros(5), model, 2)
        assert fault.combined_weight == 0

    def test_matches_table_on_in_table_syndromes(self, augmented_five, table_ii, five):
        model = NoiseModel(p=1e-6, q=1e-6, seed=0)
        for observed, entry in table_ii.entries.items():
            got = ml_decode(augmented_five, BitVector(observed, 5), model, 1)
            assert equivalent_data(five, got.data, entry.data)

    def test_no_explanation_within_cap(self, augmented_five):
        model = NoiseModel(p=1e-2, q=1e-3, seed=0)
        # weight-3 observations are unreachable with combined weight <= 1
        # only when no single fault hits them; pick one not in the table.
        assert ml_decode(augmented_five, BitVector.from01("11010"), model, 0) is None


class TestSampling:
    def test_zero_rates_sample_nothing(self):
        model = NoiseModel(p=0.0, q=0.0, seed=3)
        fault = sample_fault(model, 5, 4)
        assert fault.combined_weight == 0

    def test_deterministic_given_seed(self):
        model = NoiseModel(p=0.3, q=0.3, seed=11)
        assert sample_fault(model, 6, 3) == sample_fault(model, 6, 3)

    def test_rates_roughly_respected(self):
        model = NoiseModel(p=0.5, q=0.25, seed=1)
        rng = model.rng()
        data = 0
        flips = 0
        trials = 4000
        for _ in range(trials):
            f = sample_fault(model, 4, 4, rng)
            data += f.data_weight
            flips += f.flip_weight
        assert data / (4 * trials) == pytest.approx(0.5, abs=0.03)
        assert flips / (4 * trials) == pytest.approx(0.25, abs=0.03)


class TestRunTrials:
    def test_noiseless_runs_clean(self, augmented_five, table_ii):
        model = NoiseModel(p=0.0, q=0.0, seed=5)
        stats = run_trials(augmented_five, lambda s: decode(table_ii, s), model, 500)
        assert stats.logical_errors == 0 and stats.flagged_uncorrectable == 0

    def test_bit_reproducible(self, augmented_five, table_ii):
        model = NoiseModel(p=0.01, q=0.005, seed=42)
        decoder = lambda s: decode(table_ii, s)
        assert run_trials(augmented_five, decoder, model, 3000) == run_trials(
            augmented_five, decoder, model, 3000
        )

    def test_flips_break_data_only_decoding(self, bare_five, data_only_table):
        model = NoiseModel(p=0.01, q=0.05, seed=8)
        decoder = lambda s: decode(data_only_table, s)
        stats = run_trials(bare_five, decoder, model, 20000)
        assert stats.logical_errors > 0
        assert stats.flagged_uncorrectable == 0  # every syndrome is in the table

    def test_monotone_in_noise_with_common_randomness(self, augmented_five, table_ii):
        decoder = lambda s: decode(table_ii, s)
        low = run_trials(augmented_five, decoder, NoiseModel(p=0.002, q=0.001, seed=77), 20000)
        high = run_trials(augmented_five, decoder, NoiseModel(p=0.02, q=0.01, seed=77), 20000)
        assert low.logical_errors <= high.logical_errors

    def test_counts_partition(self, augmented_five, table_ii):
        model = NoiseModel(p=0.05, q=0.05, seed=2)
        stats = run_trials(augmented_five, lambda s: decode(table_ii, s), model, 5000)
        assert stats.successes + stats.logical_errors + stats.flagged_uncorrectable == 5000

    def test_vectorized_stream_matches_per_trial_sampling(self, augmented_five, table_ii):
        # run_trials must consume the same uniforms as a manual loop of
        # sample_fault calls over one shared generator.
        model = NoiseModel(p=0.08, q=0.04, seed=13)
        decoder = lambda s: decode(table_ii, s)
        stats = run_trials(augmented_five, decoder, model, 400)
        rng = model.rng()
        logical = 0
        flagged = 0
        for _ in range(400):
            fault = sample_fault(model, 5, 5, rng)
            observed = observed_syndrome(augmented_five, fault)
            got = decoder(observed)
            if got is None:
                flagged += 1
            elif not equivalent_data(augmented_five.code, got.data, fault.data):
                logical += 1
        assert (stats.logical_errors, stats.flagged_uncorrectable) == (logical, flagged)
