#include "btk/stp.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace btk {

LogicalMatrix::LogicalMatrix(int rows, std::vector<int> col_indices)
    : rows_(rows), idx_(std::move(col_indices)) {
  if (rows_ < 1) throw std::invalid_argument("LogicalMatrix: rows must be >= 1");
  for (int v : idx_) {
    if (v < 1 || v > rows_)
      throw std::invalid_argument("LogicalMatrix: index " + std::to_string(v) +
                                  " out of range [1," + std::to_string(rows_) + "]");
  }
}

LogicalMatrix LogicalMatrix::identity(int n) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 1);
  return LogicalMatrix(n, std::move(idx));
}

LogicalMatrix LogicalMatrix::basis(int n, int i) {
  return LogicalMatrix(n, {i});
}

Mat LogicalMatrix::dense() const {
  Mat m = Mat::Zero(rows_, cols());
  for (int j = 0; j < cols(); ++j) m(idx_[static_cast<std::size_t>(j)] - 1, j) = 1;
  return m;
}

std::optional<LogicalMatrix> LogicalMatrix::from_dense(const Mat& m) {
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    int hit = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) == 1) {
        hit = static_cast<int>(i) + 1;
      } else if (m(i, j) != 0) {
        return std::nullopt;
      }
    }
    if (hit == 0 || m.col(j).sum() != 1) return std::nullopt;
    idx.push_back(hit);
  }
  if (m.rows() < 1) return std::nullopt;
  return LogicalMatrix(static_cast<int>(m.rows()), std::move(idx));
}

bool LogicalMatrix::is_permutation() const {
  if (rows_ != cols()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(rows_), false);
  for (int v : idx_) {
    if (seen[static_cast<std::size_t>(v - 1)]) return false;
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return true;
}

LogicalMatrix LogicalMatrix::transposed_permutation() const {
  if (!is_permutation())
    throw std::invalid_argument("transposed_permutation: not a permutation matrix");
  std::vector<int> inv(idx_.size());
  for (int j = 1; j <= cols(); ++j) inv[static_cast<std::size_t>(col(j) - 1)] = j;
  return LogicalMatrix(rows_, std::move(inv));
}

std::string LogicalMatrix::to_delta_string() const {
  std::ostringstream os;
  os << 'd' << rows_ << '[';
  for (int j = 1; j <= cols(); ++j) {
    if (j > 1) os << ',';
    os << col(j);
  }
  os << ']';
  return os.str();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

LogicalMatrix kron(const LogicalMatrix& a, const LogicalMatrix& b) {
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(a.cols()) * static_cast<std::size_t>(b.cols()));
  for (int ca = 1; ca <= a.cols(); ++ca)
    for (int cb = 1; cb <= b.cols(); ++cb)
      idx.push_back((a.col(ca) - 1) * b.rows() + b.col(cb));
  return LogicalMatrix(a.rows() * b.rows(), std::move(idx));
}

Mat stp(const Mat& a, const Mat& b) {
  if (a.size() == 0 || b.size() == 0) throw std::invalid_argument("stp: empty operand");
  const Eigen::Index n = a.cols(), p = b.rows();
  const Eigen::Index t = std::lcm(n, p);
  if (t == n && t == p) return a * b;
  Mat ia = Mat::Identity(t / n, t / n);
  Mat ib = Mat::Identity(t / p, t / p);
  return kron(a, ia) * kron(b, ib);
}

LogicalMatrix stp(const LogicalMatrix& a, const LogicalMatrix& b) {
  // (A ox I_sa)(B ox I_sb) by index composition:
  // column (c-1)s+u of L ox I_s maps to row (L[c]-1)s+u.
  const int n = a.cols(), p = b.rows();
  const int t = std::lcm(n, p);
  const int sa = t / n, sb = t / p;
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(b.cols()) * static_cast<std::size_t>(sb));
  for (int j0 = 0; j0 < b.cols() * sb; ++j0) {
    const int c = j0 / sb, u = j0 % sb;
    const int r0 = (b.col(c + 1) - 1) * sb + u;  // 0-based row into B ox I_sb
    const int c2 = r0 / sa, u2 = r0 % sa;
    idx.push_back((a.col(c2 + 1) - 1) * sa + u2 + 1);
  }
  return LogicalMatrix(a.rows() * sa, std::move(idx));
}

Mat khatri_rao(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("khatri_rao: column-count mismatch");
  Mat out(a.rows() * b.rows(), a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    out.col(j) = stp(Mat(a.col(j)), Mat(b.col(j)));
  return out;
}

LogicalMatrix khatri_rao(const LogicalMatrix& a, const LogicalMatrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("khatri_rao: column-count mismatch");
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(a.cols()));
  for (int j = 1; j <= a.cols(); ++j)
    idx.push_back((a.col(j) - 1) * b.rows() + b.col(j));
  return LogicalMatrix(a.rows() * b.rows(), std::move(idx));
}

LogicalMatrix swap_matrix(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("swap_matrix: m,n must be >= 1");
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  // block i (of n columns) is I_n ox d_m^i; its column j is d_n^j ox d_m^i.
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) idx.push_back((j - 1) * m + i);
  return LogicalMatrix(m * n, std::move(idx));
}

LogicalMatrix power_reducing(int k) {
  if (k < 2) throw std::invalid_argument("power_reducing: k must be >= 2");
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) idx.push_back((j - 1) * k + j);
  return LogicalMatrix(k * k, std::move(idx));
}

LogicalMatrix first_factor_projector(int p, int q) {
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(p) * static_cast<std::size_t>(q));
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j) {
      (void)j;
      idx.push_back(i);
    }
  return LogicalMatrix(p, std::move(idx));
}

LogicalMatrix second_factor_projector(int p, int q) {
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(p) * static_cast<std::size_t>(q));
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j) {
      (void)i;
      idx.push_back(j);
    }
  return LogicalMatrix(q, std::move(idx));
}

}  // namespace btk
