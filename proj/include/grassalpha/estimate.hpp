#pragma once

#include <cstdint>
#include <optional>

#include "grassalpha/rng.hpp"

namespace grassalpha {

struct MCConfig {
    Seed seed = 1;
    std::uint64_t samples = 100000;
    std::uint32_t shards = 1;
    std::optional<double> truncation;  // optional integrand cap
};

struct IntegralEstimate {
    double mean = 0.0;
    double se = 0.0;
    std::uint64_t samples = 0;
    Seed seed = 0;
    bool divergent = false;
    bool saturated = false;  // set when the exp clip at 700 fired
};

}  // namespace grassalpha
