#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qbdq/statevec.hpp"
#include "support/dense_reference.hpp"
#include "support/test_util.hpp"

using namespace qbdq;
using testutil::kSampleKeys;

namespace {

// (1/4) sum_i |i>|K_i> over the 16-row sample keys, written directly.
StateVector sample_key_state() {
    StateVector s = StateVector::zeros(RegisterShape::for_items(16, 4));
    for (std::uint64_t i = 0; i < 16; ++i) {
        s.amplitudes[s.basis_index(i, kSampleKeys[i])] = 0.25;
    }
    return s;
}

}  // namespace

TEST_SUITE("statevec") {

TEST_CASE("shape derives the index register from the item count") {
    const RegisterShape shape = RegisterShape::for_items(16, 4);
    CHECK(shape.index_qubits == 4);
    CHECK(shape.total_qubits() == 8);
    CHECK(shape.dimension() == 256);

    CHECK(RegisterShape::for_items(1, 1).index_qubits == 0);
    CHECK(RegisterShape::for_items(3, 1).index_qubits == 2);
    CHECK_THROWS_AS(RegisterShape::for_items(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(RegisterShape::for_items(4, 0), std::invalid_argument);
}

TEST_CASE("prepare_uniform_index writes 1/sqrt(N) on every |i>|0>") {
    SUBCASE("16 items over 4 data qubits") {
        const StateVector s = prepare_uniform_index(RegisterShape::for_items(16, 4));
        for (std::size_t b = 0; b < s.amplitudes.size(); ++b) {
            const double expected = (b % 16 == 0) ? 0.25 : 0.0;
            CHECK(std::abs(s.amplitudes[b] - Complex{expected, 0.0}) < 1e-15);
        }
    }
    SUBCASE("single item degenerates to a basis state") {
        const StateVector s = prepare_uniform_index(RegisterShape::for_items(1, 1));
        CHECK(std::abs(s.amplitudes[0] - Complex{1.0, 0.0}) < 1e-15);
        CHECK(std::abs(s.amplitudes[1]) == 0.0);
    }
    SUBCASE("item count that is not a power of two") {
        const StateVector s = prepare_uniform_index(RegisterShape::for_items(3, 1));
        const double amp = 1.0 / std::sqrt(3.0);
        for (std::size_t b = 0; b < 8; ++b) {
            const double expected = (b == 0 || b == 2 || b == 4) ? amp : 0.0;
            CHECK(std::abs(s.amplitudes[b] - Complex{expected, 0.0}) < 1e-15);
        }
        CHECK(std::abs(s.norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("hadamard_all on the all-zeros state gives uniform amplitudes") {
    StateVector s = StateVector::zeros(RegisterShape::for_items(2, 1));
    s.amplitudes[0] = 1.0;
    const StateVector h = hadamard_all(s);
    for (const Complex& a : h.amplitudes) CHECK(std::abs(a - Complex{0.5, 0.0}) < 1e-15);
}

TEST_CASE("hadamard_all on basis state 3 of a 2-qubit register") {
    StateVector s = StateVector::zeros(RegisterShape::for_items(2, 1));
    s.amplitudes[3] = 1.0;
    const StateVector h = hadamard_all(s);
    const std::vector<double> expected = {0.5, -0.5, -0.5, 0.5};
    for (std::size_t b = 0; b < 4; ++b) {
        CHECK(std::abs(h.amplitudes[b] - Complex{expected[b], 0.0}) < 1e-15);
    }
}

TEST_CASE("hadamard_all is an involution and preserves norm") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const StateVector s = testutil::random_state(RegisterShape::for_items(8, 3), seed);
        const StateVector twice = hadamard_all(hadamard_all(s));
        CHECK(testutil::max_amplitude_diff(s, twice) < 1e-10);
        CHECK(std::abs(hadamard_all(s).norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("hadamard_all matches the dense tensor-product matrix up to 4 qubits") {
    for (const auto& [items, data_qubits] : std::vector<std::pair<std::uint64_t, int>>{
             {1, 1}, {2, 1}, {2, 2}, {4, 2}, {8, 1}, {4, 1}}) {
        const RegisterShape shape = RegisterShape::for_items(items, data_qubits);
        const dense::Mat h = dense::hadamard(shape.total_qubits());
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const StateVector s = testutil::random_state(shape, seed * 977);
            const dense::Vec expected = dense::matvec(h, s.amplitudes);
            const StateVector actual = hadamard_all(s);
            CHECK(dense::max_abs_diff(expected, actual.amplitudes) < 1e-12);
        }
    }
}

TEST_CASE("measuring a basis state is deterministic") {
    StateVector s = StateVector::zeros(RegisterShape::for_items(16, 4));
    s.amplitudes[s.basis_index(5, 1)] = 1.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const MeasurementOutcome outcome = measure_subregister(s, Subregister::Index, seed);
        CHECK(outcome.observed == 5);
        CHECK(std::abs(outcome.post_state.amplitudes[s.basis_index(5, 1)] - Complex{1.0, 0.0}) <
              1e-12);
    }
}

TEST_CASE("collapse onto a pinned index outcome projects and renormalizes") {
    const StateVector s = sample_key_state();
    const MeasurementOutcome outcome = collapse_subregister(s, Subregister::Index, 12);
    CHECK(outcome.observed == 12);
    // Row 12 holds key 0, so the post state is the basis state |12>|0>.
    for (std::size_t b = 0; b < outcome.post_state.amplitudes.size(); ++b) {
        const double expected = (b == s.basis_index(12, 0)) ? 1.0 : 0.0;
        CHECK(std::abs(outcome.post_state.amplitudes[b] - Complex{expected, 0.0}) < 1e-12);
    }
    CHECK_THROWS_AS(collapse_subregister(s, Subregister::All, 1), std::invalid_argument);
    CHECK_THROWS_AS(collapse_subregister(s, Subregister::Index, 16), std::out_of_range);
}

TEST_CASE("index measurement over the sample state is uniform across 1e5 trials") {
    const StateVector s = sample_key_state();
    std::vector<std::uint64_t> counts(16, 0);
    Rng rng(20240917);
    const std::uint64_t trials = 100000;
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++counts[measure_subregister(s, Subregister::Index, rng).observed];
    }
    for (std::uint64_t c : counts) {
        CHECK(std::abs(static_cast<double>(c) / trials - 1.0 / 16.0) <= 0.01);
    }
    CHECK(testutil::chi_square_uniform(counts, trials) < testutil::kChiSq999Dof15);
}

TEST_CASE("identical seeds reproduce identical measurements") {
    const StateVector s = sample_key_state();
    for (std::uint64_t seed : {1ull, 77ull, 123456789ull}) {
        const MeasurementOutcome a = measure_subregister(s, Subregister::All, seed);
        const MeasurementOutcome b = measure_subregister(s, Subregister::All, seed);
        CHECK(a.observed == b.observed);
        CHECK(testutil::max_amplitude_diff(a.post_state, b.post_state) == 0.0);
    }
}

TEST_CASE("degenerate states are rejected by measurement") {
    const StateVector zeros = StateVector::zeros(RegisterShape::for_items(4, 2));
    Rng rng(1);
    CHECK_THROWS_AS(measure_subregister(zeros, Subregister::Index, rng), std::runtime_error);
}

TEST_CASE("probability_of reads the addressed squared amplitude") {
    const StateVector s = sample_key_state();
    CHECK(probability_of(s, 0, 14) == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
    CHECK(probability_of(s, 0, 0) == 0.0);
    CHECK_THROWS_AS(probability_of(s, 16, 0), std::out_of_range);
    CHECK_THROWS_AS(probability_of(s, 0, 16), std::out_of_range);

    const StateVector r = testutil::random_state(RegisterShape::for_items(8, 2), 5);
    double total = 0.0;
    for (std::uint64_t i = 0; i < 8; ++i) {
        for (std::uint64_t x = 0; x < 4; ++x) total += probability_of(r, i, x);
    }
    CHECK(std::abs(total - 1.0) < 1e-10);
}

TEST_CASE("every operation maps unit norm to unit norm") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const RegisterShape shape = RegisterShape::for_items(5, 2);
        const StateVector s = testutil::random_state(shape, seed);
        CHECK(std::abs(hadamard_all(s).norm() - 1.0) < 1e-10);
        Rng rng(seed);
        CHECK(std::abs(measure_subregister(s, Subregister::Index, rng).post_state.norm() - 1.0) <
              1e-10);
        CHECK(std::abs(prepare_uniform_index(shape).norm() - 1.0) < 1e-10);
    }
}

}  // TEST_SUITE
