#pragma once

#include <cstdint>

#include "grassalpha/cmatrix.hpp"

namespace grassalpha {

using Seed = std::uint64_t;

/// xoshiro256++ stream seeded through SplitMix64. Self-contained so that
/// sampled values are a pure function of the seed on every platform.
class Rng {
public:
    explicit Rng(Seed seed);

    std::uint64_t next_u64();

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double();

    /// Standard complex Gaussian with E|z|^2 = 1 (Re, Im iid N(0, 1/2)).
    Complex next_complex_gaussian();

private:
    std::uint64_t s_[4];
};

/// Stable per-shard / per-stream seed derivation.
Seed derive_seed(Seed root, std::uint64_t index);

/// Matrix with iid standard complex Gaussian entries.
CMatrix sample_ginibre(int rows, int cols, Rng& rng);
CMatrix sample_ginibre(int rows, int cols, Seed seed);

/// Haar-distributed unitary: QR of a Ginibre matrix with the R diagonal
/// rephased to be real positive (raw QR is not Haar without this fix).
CMatrix sample_haar_unitary(int n, Rng& rng);
CMatrix sample_haar_unitary(int n, Seed seed);

}  // namespace grassalpha
