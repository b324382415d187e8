#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qspace/common.hpp"
#include "qspace/exact.hpp"
#include "qspace/field.hpp"

namespace qspace {

using Mat = Eigen::Matrix<Entry, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::Matrix<Entry, Eigen::Dynamic, 1>;

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

// Pivot columns of a matrix in canonical row-echelon form, or nullopt if
// any invariant fails. The convention has trailing pivots: each row is
// zero to the RIGHT of its pivot, the pivot entry is 1, pivot columns are
// unit columns, and pivots strictly increase from top to bottom. (In the
// k = n case this makes the canonical basis the identity; for n > k the
// identity block drifts right as arbitrary columns are prefixed.)
template <typename Derived>
std::optional<std::vector<Eigen::Index>> echelon_pivots(
    std::uint64_t q, const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index k = m.rows(), n = m.cols();
  std::vector<Eigen::Index> pivots;
  pivots.reserve(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) {
    Eigen::Index p = -1;
    for (Eigen::Index j = n; j-- > 0;) {
      if (m(i, j) != 0) {
        p = j;
        break;
      }
    }
    if (p < 0 || m(i, p) != 1) return std::nullopt;  // zero row or pivot != 1
    if (!pivots.empty() && pivots.back() >= p) return std::nullopt;
    pivots.push_back(p);
  }
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index r = 0; r < k; ++r)
      if (r != i && m(r, pivots[static_cast<std::size_t>(i)]) != 0)
        return std::nullopt;  // pivot columns must be unit columns
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (m(i, j) >= q) return std::nullopt;  // canonical residues only
  return pivots;
}

template <typename Derived>
bool is_echelon(const Field& f, const Eigen::MatrixBase<Derived>& m) {
  return echelon_pivots(f.q(), m).has_value();
}

// The unique canonical basis of a k-dimensional subspace of GF(q)^n.
// Validated on construction and immutable afterwards, so every value of
// this type satisfies the echelon invariants. Pivot columns are 0-based
// here; textual interfaces present them 1-based.
class EchelonMatrix {
 public:
  EchelonMatrix(const Field& field, Mat entries);

  const Field& field() const noexcept { return field_; }
  std::uint64_t q() const noexcept { return field_.q(); }
  Eigen::Index dim() const noexcept { return mat_.rows(); }      // k
  Eigen::Index ambient() const noexcept { return mat_.cols(); }  // n
  const Mat& matrix() const noexcept { return mat_; }
  const std::vector<Eigen::Index>& pivots() const noexcept { return pivots_; }

  friend bool operator==(const EchelonMatrix& a, const EchelonMatrix& b) {
    return a.q() == b.q() && a.mat_.rows() == b.mat_.rows() &&
           a.mat_.cols() == b.mat_.cols() && (a.mat_.array() == b.mat_.array()).all();
  }

 private:
  Field field_;
  Mat mat_;
  std::vector<Eigen::Index> pivots_;
};

// Canonical basis of the row space of m (rows must be independent).
// Gaussian elimination scans columns right-to-left, assigning pivots to
// rows bottom-up, which produces the trailing-pivot form directly.
EchelonMatrix canonical_form(const Field& f, Mat m);

namespace detail {

template <typename Visitor>
struct EchelonDfs {
  const Field& f;
  Eigen::Index k;
  Eigen::Index n;
  Visitor& visit;
  Mat m;
  bool stop = false;

  void run(Eigen::Index rt, Eigen::Index cl) {
    if (stop) return;
    if (rt == k) {
      if (!visit(EchelonMatrix(f, m))) stop = true;
      return;
    }
    // Bordered kind: unit row on top of the remaining block, unit column in
    // front. Everything outside the 1 stays zero.
    m(rt, cl) = 1;
    run(rt + 1, cl + 1);
    m(rt, cl) = 0;
    if (stop) return;
    // Prefixed kind: every column vector, ordered by its base-q value with
    // the top entry least significant. Requires the block to stay wide
    // enough for k - rt pivots.
    if (n - cl > k - rt) {
      const Entry q = static_cast<Entry>(f.q());
      while (true) {
        run(rt, cl + 1);
        if (stop) break;
        Eigen::Index j = rt;
        for (; j < k; ++j) {
          if (++m(j, cl) == q)
            m(j, cl) = 0;
          else
            break;
        }
        if (j == k) break;  // odometer wrapped; column is all zero again
      }
      if (stop)
        for (Eigen::Index j = rt; j < k; ++j) m(j, cl) = 0;
    }
  }
};

}  // namespace detail

// Depth-first enumeration of every canonical k x n echelon matrix over
// GF(q), in the same order the rank/unrank codec uses: bordered branch
// first, then prefixed columns in increasing digit value. The visitor
// returns false to stop early. Guarded by qbinomial(n,k,q) <= cap.
template <typename Visitor>
void for_each_echelon(const Field& f, std::int64_t n, std::int64_t k, Visitor&& visit,
                      std::uint64_t cap = kDefaultEnumerationCap) {
  if (n < 0) throw OutOfRangeError("enumeration requires n >= 0");
  const BigNat total = qbinomial(n, k, f.q());
  if (total > cap)
    throw TooLargeError("enumeration of " + total.str() + " matrices exceeds cap " +
                        std::to_string(cap));
  if (total == 0) return;
  detail::EchelonDfs<std::remove_reference_t<Visitor>> dfs{
      f, static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(n), visit,
      Mat::Zero(k, n)};
  dfs.run(0, 0);
}

std::vector<EchelonMatrix> enumerate_all(const Field& f, std::int64_t n, std::int64_t k,
                                         std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace qspace
