#ifndef BTK_STP_HPP
#define BTK_STP_HPP

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <string>
#include <optional>
#include <vector>

namespace btk {

using Int = std::int64_t;

template <typename Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact integer dense matrix. Everything in this kernel is integral;
/// no floating point is used anywhere.
using Mat = Dense<Int>;

/// Zero/one matrix with exactly one 1 per column, stored as the 1-based row
/// index of that 1 per column (condensed delta notation: d_n[i1,...,ir]
/// is the matrix whose j-th column is column i_j of I_n).
class LogicalMatrix {
 public:
  LogicalMatrix() = default;

  /// rows >= 1, every index in [1, rows].
  LogicalMatrix(int rows, std::vector<int> col_indices);

  static LogicalMatrix identity(int n);
  /// The basis column vector d_n^i as an n-by-1 logical matrix.
  static LogicalMatrix basis(int n, int i);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(idx_.size()); }

  /// 1-based column -> 1-based row index of its 1.
  int col(int j) const { return idx_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& col_indices() const { return idx_; }

  Mat dense() const;
  /// Recognizes a 0/1 matrix with exactly one 1 per column.
  static std::optional<LogicalMatrix> from_dense(const Mat& m);

  bool is_permutation() const;
  /// Transpose of a permutation matrix (= its inverse). Requires is_permutation().
  LogicalMatrix transposed_permutation() const;

  /// "d4[1,3,2,4]"
  std::string to_delta_string() const;

  friend bool operator==(const LogicalMatrix&, const LogicalMatrix&) = default;
  friend auto operator<=>(const LogicalMatrix& a, const LogicalMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    return a.idx_ <=> b.idx_;
  }

 private:
  int rows_ = 0;
  std::vector<int> idx_;  // 1-based
};

/// Semi-tensor product (A ox I_{t/n})(B ox I_{t/p}), t = lcm(cols A, rows B).
/// Coincides with the ordinary product when cols(A) == rows(B).
Mat stp(const Mat& a, const Mat& b);
/// Logical fast path: composes column indices, never materializing a grid.
LogicalMatrix stp(const LogicalMatrix& a, const LogicalMatrix& b);

Mat kron(const Mat& a, const Mat& b);
LogicalMatrix kron(const LogicalMatrix& a, const LogicalMatrix& b);

/// Column-wise STP of two matrices with equal column counts.
Mat khatri_rao(const Mat& a, const Mat& b);
LogicalMatrix khatri_rao(const LogicalMatrix& a, const LogicalMatrix& b);

/// Swap matrix W_[m,n] = [I_n ox d_m^1, ..., I_n ox d_m^m], an mn-by-mn
/// permutation matrix with W_[m,n] x y = y x for x in R^m, y in R^n.
LogicalMatrix swap_matrix(int m, int n);

/// Power-reducing matrix PR_k = diag-stack of (d_k^1, ..., d_k^k), k^2-by-k,
/// with PR_k x = x ox x for basis vectors x. Requires k >= 2.
LogicalMatrix power_reducing(int k);

/// I_p ox 1_q^T, the p-by-pq logical matrix projecting a stacked pair onto
/// its first factor.
LogicalMatrix first_factor_projector(int p, int q);
/// 1_p^T ox I_q, projecting onto the second factor.
LogicalMatrix second_factor_projector(int p, int q);

}  // namespace btk

#endif  // BTK_STP_HPP
