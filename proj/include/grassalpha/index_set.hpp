#pragma once

#include <string>
#include <vector>

#include "grassalpha/cmatrix.hpp"

namespace grassalpha {

/// A strictly increasing subset of {1,...,n}, identifying rows of a point
/// representative. For charts on G_{p,q} the ambient size is n = p+q and the
/// subset has p members. Members are 1-based throughout the public API.
struct IndexSet {
    int n = 0;
    std::vector<int> members;

    IndexSet() = default;
    IndexSet(int ambient, std::vector<int> elems);

    int size() const { return static_cast<int>(members.size()); }
    IndexSet complement() const;
    bool contains(int i) const;
    std::string to_string() const;

    bool operator==(const IndexSet&) const = default;
};

/// All C(p+q, p) index sets of size p in {1,...,p+q}, lexicographic order.
std::vector<IndexSet> enumerate_index_sets(int p, int q);

/// Rows of P selected by I (all columns, order preserved).
CMatrix minor_rows(const CMatrix& p, const IndexSet& i);

/// |det(Gram(P)) - sum_I |det m_I(P)|^2| / (1 + |det Gram(P)|).
double cauchy_binet_residual(const CMatrix& p);

std::uint64_t binomial(int n, int k);

}  // namespace grassalpha
