#include "grassalpha/index_set.hpp"

#include <algorithm>
#include <cmath>

namespace grassalpha {

IndexSet::IndexSet(int ambient, std::vector<int> elems) : n(ambient), members(std::move(elems)) {
    if (n < 1) throw DimensionError("index set ambient size must be >= 1");
    if (members.empty() || static_cast<int>(members.size()) > n) {
        throw DimensionError("index set size must be in [1, n]");
    }
    for (std::size_t k = 0; k < members.size(); ++k) {
        if (members[k] < 1 || members[k] > n) throw DimensionError("index set member out of range");
        if (k > 0 && members[k] <= members[k - 1]) {
            throw DimensionError("index set members must be strictly increasing");
        }
    }
}

IndexSet IndexSet::complement() const {
    std::vector<int> rest;
    rest.reserve(n - size());
    for (int i = 1; i <= n; ++i) {
        if (!contains(i)) rest.push_back(i);
    }
    return IndexSet(n, std::move(rest));
}

bool IndexSet::contains(int i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

std::string IndexSet::to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < members.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(members[k]);
    }
    return s + "}";
}

std::vector<IndexSet> enumerate_index_sets(int p, int q) {
    if (p < 1 || q < 1) throw DimensionError("p and q must be >= 1");
    const int n = p + q;
    std::vector<IndexSet> out;
    out.reserve(binomial(n, p));
    std::vector<int> cur(p);
    for (int i = 0; i < p; ++i) cur[i] = i + 1;
    while (true) {
        out.emplace_back(n, cur);
        int k = p - 1;
        while (k >= 0 && cur[k] == n - (p - 1 - k)) --k;
        if (k < 0) break;
        ++cur[k];
        for (int j = k + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

CMatrix minor_rows(const CMatrix& p, const IndexSet& i) {
    if (i.n != p.rows()) throw DimensionError("index set ambient size must match row count");
    CMatrix m(i.size(), p.cols());
    for (int r = 0; r < i.size(); ++r) {
        const int src = i.members[r] - 1;
        for (int c = 0; c < p.cols(); ++c) m(r, c) = p(src, c);
    }
    return m;
}

double cauchy_binet_residual(const CMatrix& p) {
    if (p.rows() < p.cols()) throw DimensionError("need at least as many rows as columns");
    const int cols = p.cols();
    const int q = p.rows() - cols;
    const double lhs = det(gram(p)).real();
    double rhs = 0.0;
    if (q == 0) {
        rhs = std::norm(det(p));
    } else {
        for (const auto& i : enumerate_index_sets(cols, q)) {
            rhs += std::norm(det(minor_rows(p, i)));
        }
    }
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

}  // namespace grassalpha
