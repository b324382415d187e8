#pragma once

#include <cstdint>

#include "qspace/echelon.hpp"
#include "qspace/field.hpp"
#include "qspace/sample.hpp"

namespace qspace {

// Sequential selection: a bijection between ranks [0, qbinomial(n,k,q))
// and canonical echelon matrices, consistent with for_each_echelon's
// order. Ranks below qbinomial(n-1,k-1,q) are exactly the bordered kind;
// the remainder splits into q^k blocks indexed by the prefixed column,
// top entry least significant.
EchelonMatrix unrank_subspace(const Field& f, std::int64_t n, std::int64_t k,
                              const BigNat& rank);
BigNat rank_subspace(const EchelonMatrix& m);

// Same scheme for k-subsets of {1..n}: ranks below C(n-1,k-1) are the
// subsets containing n.
Subset unrank_subset(std::int64_t n, std::int64_t k, const BigNat& rank);
BigNat rank_subset(const Subset& s);

}  // namespace qspace
