#pragma once

#include <cstdint>
#include <vector>

namespace tabforge {

/// Deterministic RNG built on xoshiro-style splitmix seeding plus hand-rolled
/// distributions. The standard <random> distribution objects are
/// implementation-defined, so every draw here is specified bit-by-bit and
/// reproduces across compilers and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform();

    /// Uniform in (0, 1]; safe for log().
    double uniform_open();

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t uniform_index(std::uint64_t n);

    /// Standard normal via Box-Muller (two draws per call, no cached spare).
    double normal();

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        if (values.size() < 2) return;
        for (std::size_t i = values.size() - 1; i > 0; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_index(i + 1));
            std::swap(values[i], values[j]);
        }
    }

private:
    std::uint64_t state_;
};

/// Stateless hash-combine of a master seed with stream labels. Used to give
/// every grid cell / fold / tree its own independent, documented seed:
/// seed(cell) = derive_seed(master, cell_index, fold_index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

} // namespace tabforge
