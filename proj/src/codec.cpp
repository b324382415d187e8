#include "qspace/codec.hpp"

#include <algorithm>

namespace qspace {

namespace {

// Branch counts derived incrementally from the current total T = [n' k']_q:
// bordered count t = T (q^{k'}-1)/(q^{n'}-1) and per-column block size
// Q = (T - t)/q^{k'}; both divisions are exact.
struct SubspaceWalk {
  std::uint64_t q;
  BigNat total;  // count at the current (n', k') block
  BigNat pn;     // q^{n'}
  BigNat pk;     // q^{k'}

  BigNat bordered_count() const { return exact_div(total * (pk - 1), pn - 1); }

  void descend_bordered(const BigNat& t) {
    total = t;
    pn /= q;
    pk /= q;
  }

  BigNat descend_prefixed(const BigNat& t) {
    const BigNat block = exact_div(total - t, pk);
    total = block;
    pn /= q;
    return block;
  }
};

}  // namespace

EchelonMatrix unrank_subspace(const Field& f, std::int64_t n, std::int64_t k,
                              const BigNat& rank) {
  const std::uint64_t q = f.q();
  const BigNat count = n < 0 ? BigNat(0) : qbinomial(n, k, q);
  if (rank < 0 || rank >= count)
    throw RankOutOfRangeError("rank " + rank.str() + " outside [0, " + count.str() +
                              ") for the (n=" + std::to_string(n) +
                              ", k=" + std::to_string(k) + ") family");
  BigNat r = rank;
  Mat m = Mat::Zero(k, n);
  SubspaceWalk w{q, count, qpow(q, n), qpow(q, k)};
  Eigen::Index rt = 0, cl = 0;
  const auto kk = static_cast<Eigen::Index>(k);
  while (rt < kk) {
    const BigNat t = w.bordered_count();
    if (r < t) {
      m(rt, cl) = 1;
      w.descend_bordered(t);
      ++rt;
      ++cl;
    } else {
      r -= t;
      const BigNat block = w.descend_prefixed(t);
      BigNat col = r / block;
      r %= block;
      for (Eigen::Index j = rt; j < kk; ++j) {
        m(j, cl) = (col % q).convert_to<Entry>();
        col /= q;
      }
      ++cl;
    }
  }
  return EchelonMatrix(f, std::move(m));
}

BigNat rank_subspace(const EchelonMatrix& e) {
  const std::uint64_t q = e.q();
  const Eigen::Index kk = e.dim();
  SubspaceWalk w{q, qbinomial(e.ambient(), e.dim(), q), qpow(q, e.ambient()),
                 qpow(q, e.dim())};
  BigNat r = 0;
  Eigen::Index rt = 0, cl = 0;
  while (rt < kk) {
    const BigNat t = w.bordered_count();
    if (e.pivots()[static_cast<std::size_t>(rt)] == cl) {
      w.descend_bordered(t);
      ++rt;
      ++cl;
    } else {
      const BigNat block = w.descend_prefixed(t);
      BigNat col = 0;
      for (Eigen::Index j = kk; j-- > rt;) {
        col *= q;
        col += e.matrix()(j, cl);
      }
      r += t + col * block;
      ++cl;
    }
  }
  return r;
}

Subset unrank_subset(std::int64_t n, std::int64_t k, const BigNat& rank) {
  const BigNat count = n < 0 ? BigNat(0) : binomial(n, k);
  if (rank < 0 || rank >= count)
    throw RankOutOfRangeError("rank " + rank.str() + " outside [0, " + count.str() +
                              ") for k-subsets of an n-set");
  BigNat r = rank;
  BigNat total = count;
  Subset s;
  s.n = n;
  s.members.reserve(static_cast<std::size_t>(k));
  std::int64_t need = k;
  for (std::int64_t i = n; i >= 1 && need > 0; --i) {
    const BigNat t = exact_div(total * need, i);  // C(i-1, need-1)
    if (r < t) {
      s.members.push_back(i);
      total = t;
      --need;
    } else {
      r -= t;
      total = exact_div(total * (i - need), i);  // C(i-1, need)
    }
  }
  std::reverse(s.members.begin(), s.members.end());
  return s;
}

BigNat rank_subset(const Subset& s) {
  validate_subset(s);
  BigNat total = binomial(s.n, s.k());
  BigNat r = 0;
  std::int64_t need = s.k();
  auto next = s.members.rbegin();
  for (std::int64_t i = s.n; i >= 1 && need > 0; --i) {
    const BigNat t = exact_div(total * need, i);
    if (next != s.members.rend() && *next == i) {
      total = t;
      --need;
      ++next;
    } else {
      r += t;
      total = exact_div(total * (i - need), i);
    }
  }
  return r;
}

}  // namespace qspace
