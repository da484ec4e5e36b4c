#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "lts/cochain.hpp"
#include "lts/linalg.hpp"

namespace lts {

/// Deterministic source of small integer test data.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [-bound, bound].
    Scalar integer(int bound = 3) {
        std::uniform_int_distribution<int> dist(-bound, bound);
        return Scalar(dist(engine_));
    }

    /// Matrix with entries in [-bound, bound]. Each entry is forced to zero with
    /// probability `zero_rate`, so that sparse maps (which are far more likely
    /// to satisfy quadratic identities) show up regularly.
    Matrix matrix(std::size_t rows, std::size_t cols, int bound = 3, double zero_rate = 0.0) {
        std::bernoulli_distribution blank(zero_rate);
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                if (blank(engine_)) continue;
                m(r, c) = integer(bound);
            }
        return m;
    }

    /// Sparsity drawn from a fixed ladder; used by the equivalence suites.
    Matrix mixed_sparsity_matrix(std::size_t rows, std::size_t cols, int bound = 3) {
        static constexpr double kLadder[] = {0.0, 0.5, 0.75, 0.9};
        std::uniform_int_distribution<int> pick(0, 3);
        return matrix(rows, cols, bound, kLadder[pick(engine_)]);
    }

    Vector vector(std::size_t n, int bound = 3) {
        Vector v(n);
        for (auto& x : v) x = integer(bound);
        return v;
    }

    Cochain cochain(int degree, std::size_t s, std::size_t t, int bound = 3) {
        return Cochain{degree, s, t, vector(cochain_size(degree, s, t), bound)};
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace lts
