#include "qspace/echelon.hpp"

namespace qspace {

EchelonMatrix::EchelonMatrix(const Field& field, Mat entries)
    : field_(field), mat_(std::move(entries)) {
  auto piv = echelon_pivots(field_.q(), mat_);
  if (!piv)
    throw InvalidMatrixError("matrix is not in canonical row-echelon form over GF(" +
                             std::to_string(field_.q()) + ")");
  pivots_ = std::move(*piv);
}

EchelonMatrix canonical_form(const Field& f, Mat m) {
  const std::uint64_t q = f.q();
  const Eigen::Index k = m.rows(), n = m.cols();
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (m(i, j) >= q)
        throw OutOfRangeError("matrix entry is not a canonical residue mod q");

  Eigen::Index next = k - 1;  // row receiving the next pivot, bottom-up
  for (Eigen::Index col = n; col-- > 0 && next >= 0;) {
    Eigen::Index src = -1;
    for (Eigen::Index r = 0; r <= next; ++r) {
      if (m(r, col) != 0) {
        src = r;
        break;
      }
    }
    if (src < 0) continue;
    m.row(src).swap(m.row(next));
    if (const Entry piv = m(next, col); piv != 1) {
      const Entry s = f.inv(piv);
      for (Eigen::Index j = 0; j <= col; ++j) m(next, j) = f.mul(m(next, j), s);
    }
    for (Eigen::Index r = 0; r < k; ++r) {
      if (r == next) continue;
      const Entry c = m(r, col);
      if (c == 0) continue;
      // The pivot row is zero right of col, so only columns <= col change.
      for (Eigen::Index j = 0; j <= col; ++j)
        m(r, j) = f.sub(m(r, j), f.mul(c, m(next, j)));
    }
    --next;
  }
  if (next >= 0) throw RankDeficientError();
  return EchelonMatrix(f, std::move(m));
}

std::vector<EchelonMatrix> enumerate_all(const Field& f, std::int64_t n, std::int64_t k,
                                         std::uint64_t cap) {
  std::vector<EchelonMatrix> out;
  for_each_echelon(
      f, n, k,
      [&](const EchelonMatrix& m) {
        out.push_back(m);
        return true;
      },
      cap);
  return out;
}

}  // namespace qspace
