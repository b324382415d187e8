#include "qspace/sample.hpp"

#include <algorithm>

namespace qspace {

void validate_subset(const Subset& s) {
  if (s.n < 0) throw InvalidSubsetError("subset has negative universe size");
  std::int64_t prev = 0;
  for (std::int64_t v : s.members) {
    if (v <= prev || v > s.n)
      throw InvalidSubsetError("subset members must be strictly increasing in [1, n]");
    prev = v;
  }
}

bool bernoulli_exact(const Coin& coin, RngStream& rng) {
  if (coin.num == 0) return false;
  if (coin.num == coin.den) return true;
  return rng.uniform_below(coin.den) < coin.num;
}

Subset random_subset(std::int64_t n, std::int64_t k, RngStream& rng) {
  if (n < 0 || k < 0 || k > n)
    throw OutOfRangeError("random_subset requires 0 <= k <= n");
  Subset s;
  s.n = n;
  s.members.reserve(static_cast<std::size_t>(k));
  std::int64_t need = k;
  for (std::int64_t i = n; i >= 1 && need > 0; --i) {
    // P(take i) = need / i, exactly.
    if (rng.uniform_below(static_cast<std::uint64_t>(i)) <
        static_cast<std::uint64_t>(need)) {
      s.members.push_back(i);
      --need;
    }
  }
  std::reverse(s.members.begin(), s.members.end());
  return s;
}

Vec random_vector(const Field& f, std::int64_t len, RngStream& rng) {
  if (len < 0) throw OutOfRangeError("random_vector requires len >= 0");
  Vec v(len);
  for (Eigen::Index i = 0; i < len; ++i) v(i) = rng.uniform_below(f.q());
  return v;
}

EchelonMatrix random_subspace(const Field& f, std::int64_t n, std::int64_t k,
                              RngStream& rng) {
  if (n < 0 || k < 0 || k > n)
    throw OutOfRangeError("random_subspace requires 0 <= k <= n");
  const std::uint64_t q = f.q();
  Mat m = Mat::Zero(k, n);
  BigNat pn = qpow(q, n);  // q^{n'}
  BigNat pk = qpow(q, k);  // q^{k'}
  Eigen::Index rt = 0, cl = 0;
  const auto kk = static_cast<Eigen::Index>(k);
  while (rt < kk) {
    // Bordered with probability (q^{k'}-1)/(q^{n'}-1); forced when k' = n'.
    const bool bordered = pk == pn || rng.uniform_below(BigNat(pn - 1)) < pk - 1;
    if (bordered) {
      m(rt, cl) = 1;
      ++rt;
      ++cl;
      pn /= q;
      pk /= q;
    } else {
      for (Eigen::Index j = rt; j < kk; ++j) m(j, cl) = rng.uniform_below(q);
      ++cl;
      pn /= q;
    }
  }
  return EchelonMatrix(f, std::move(m));
}

}  // namespace qspace
