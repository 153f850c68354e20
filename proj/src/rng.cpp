#include "grassalpha/rng.hpp"

#include <cmath>
#include <numbers>

namespace grassalpha {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(Seed seed) {
    std::uint64_t sm = seed;
    for (auto& s : s_) s = splitmix64(sm);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

Complex Rng::next_complex_gaussian() {
    // |z|^2 ~ Exp(1), phase uniform
    const double u = next_double();
    const double radius = std::sqrt(-std::log1p(-u));
    const double theta = 2.0 * std::numbers::pi * next_double();
    return {radius * std::cos(theta), radius * std::sin(theta)};
}

Seed derive_seed(Seed root, std::uint64_t index) {
    std::uint64_t state = root ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    const std::uint64_t a = splitmix64(state);
    return splitmix64(state) ^ rotl(a, 32);
}

CMatrix sample_ginibre(int rows, int cols, Rng& rng) {
    CMatrix m(rows, cols);
    for (auto& v : m.data()) v = rng.next_complex_gaussian();
    return m;
}

CMatrix sample_ginibre(int rows, int cols, Seed seed) {
    Rng rng(seed);
    return sample_ginibre(rows, cols, rng);
}

CMatrix sample_haar_unitary(int n, Rng& rng) {
    const CMatrix g = sample_ginibre(n, n, rng);
    auto [q, r] = householder_qr(g);
    for (int j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        const double a = std::abs(d);
        const Complex phase = (a > 0.0) ? d / a : Complex{1.0};
        for (int i = 0; i < n; ++i) q(i, j) *= phase;
    }
    return q;
}

CMatrix sample_haar_unitary(int n, Seed seed) {
    Rng rng(seed);
    return sample_haar_unitary(n, rng);
}

}  // namespace grassalpha
