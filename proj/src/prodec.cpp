#include "btk/prodec.hpp"

#include "btk/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace btk {

namespace {

int pair_index(int i, int j, int q) { return (i - 1) * q + j; }

StructureTriple product_componentwise(const StructureTriple& a, const StructureTriple& b) {
  const int p = a.k, q = b.k, k = p * q;
  std::vector<int> meet(static_cast<std::size_t>(k) * k), join(meet.size());
  for (int i1 = 1; i1 <= p; ++i1)
    for (int i2 = 1; i2 <= q; ++i2)
      for (int j1 = 1; j1 <= p; ++j1)
        for (int j2 = 1; j2 <= q; ++j2) {
          const int x = pair_index(i1, i2, q), y = pair_index(j1, j2, q);
          const std::size_t at = static_cast<std::size_t>((x - 1) * k + y - 1);
          meet[at] = pair_index(apply_binary(a.meet, i1, j1),
                                apply_binary(b.meet, i2, j2), q);
          join[at] = pair_index(apply_binary(a.join, i1, j1),
                                apply_binary(b.join, i2, j2), q);
        }
  StructureTriple out{k, LogicalMatrix(k, std::move(meet)),
                      LogicalMatrix(k, std::move(join)), std::nullopt};
  if (a.comp && b.comp) {
    std::vector<int> comp(static_cast<std::size_t>(k));
    for (int i1 = 1; i1 <= p; ++i1)
      for (int i2 = 1; i2 <= q; ++i2)
        comp[static_cast<std::size_t>(pair_index(i1, i2, q) - 1)] =
            pair_index(apply_unary(*a.comp, i1), apply_unary(*b.comp, i2), q);
    out.comp = LogicalMatrix(k, std::move(comp));
  }
  return out;
}

// Column c of a k x k^2 table, decoded as the four factor coordinates of the
// stacked argument pair (x1 x2, y1 y2).
struct PairCoords {
  int i1, i2, j1, j2;
};

PairCoords coords(int c0, int p, int q) {  // c0 is 0-based
  const int k = p * q;
  const int x = c0 / k, y = c0 % k;  // 0-based stacked x, y
  return {x / q + 1, x % q + 1, y / q + 1, y % q + 1};
}

// Integer column sums of proj * table * gather, with exact divisibility.
// Returns nullopt when a sum fails to be divisible or to form a basis column.
std::optional<LogicalMatrix> average_binary(const LogicalMatrix& table,
                                            const LogicalMatrix& proj, int r, int p,
                                            int q, bool first_factor) {
  const int divisor = first_factor ? q * q : p * p;
  std::vector<std::vector<Int>> sums(
      static_cast<std::size_t>(r) * static_cast<std::size_t>(r),
      std::vector<Int>(static_cast<std::size_t>(r), 0));
  for (int c0 = 0; c0 < table.cols(); ++c0) {
    const PairCoords pc = coords(c0, p, q);
    const int u = first_factor ? pc.i1 : pc.i2;
    const int v = first_factor ? pc.j1 : pc.j2;
    const int value = proj.col(table.col(c0 + 1));
    sums[static_cast<std::size_t>((u - 1) * r + v - 1)]
        [static_cast<std::size_t>(value - 1)] += 1;
  }
  std::vector<int> idx(sums.size());
  for (std::size_t cell = 0; cell < sums.size(); ++cell) {
    int hit = 0;
    for (int v = 1; v <= r; ++v) {
      const Int s = sums[cell][static_cast<std::size_t>(v - 1)];
      if (s % divisor != 0)
        throw std::logic_error("decompose: averaging sum not divisible");
      const Int averaged = s / divisor;
      if (averaged == 1 && hit == 0) hit = v;
      else if (averaged != 0) return std::nullopt;
    }
    if (hit == 0) return std::nullopt;
    idx[cell] = hit;
  }
  return LogicalMatrix(r, std::move(idx));
}

std::optional<LogicalMatrix> average_unary(const LogicalMatrix& table,
                                           const LogicalMatrix& proj, int r, int p,
                                           int q, bool first_factor) {
  const int divisor = first_factor ? q : p;
  std::vector<std::vector<Int>> sums(static_cast<std::size_t>(r),
                                     std::vector<Int>(static_cast<std::size_t>(r), 0));
  for (int c0 = 0; c0 < table.cols(); ++c0) {
    const int u = first_factor ? c0 / q + 1 : c0 % q + 1;
    const int value = proj.col(table.col(c0 + 1));
    sums[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(value - 1)] += 1;
  }
  std::vector<int> idx(sums.size());
  for (std::size_t cell = 0; cell < sums.size(); ++cell) {
    int hit = 0;
    for (int v = 1; v <= r; ++v) {
      const Int s = sums[cell][static_cast<std::size_t>(v - 1)];
      if (s % divisor != 0)
        throw std::logic_error("decompose: averaging sum not divisible");
      const Int averaged = s / divisor;
      if (averaged == 1 && hit == 0) hit = v;
      else if (averaged != 0) return std::nullopt;
    }
    if (hit == 0) return std::nullopt;
    idx[cell] = hit;
  }
  return LogicalMatrix(r, std::move(idx));
}

void check_decomposition_shapes(const StructureTriple& a, int p, int q) {
  validate(a);
  if (p < 2 || q < 2)
    throw std::invalid_argument("decompose: factors must have size >= 2");
  if (p * q != a.k) throw std::invalid_argument("decompose: p*q != |A|");
}

}  // namespace

StructureTriple product(const StructureTriple& a, const StructureTriple& b) {
  validate(a);
  validate(b);
  if (a.comp.has_value() != b.comp.has_value())
    throw std::invalid_argument("product: comp present on exactly one factor");
  const int p = a.k, q = b.k;

  const LogicalMatrix ip2 = LogicalMatrix::identity(p * p);
  const LogicalMatrix tail = kron(LogicalMatrix::identity(p), swap_matrix(q, p));
  StructureTriple out;
  out.k = p * q;
  out.meet = stp(stp(a.meet, kron(ip2, b.meet)), tail);
  out.join = stp(stp(a.join, kron(ip2, b.join)), tail);
  if (a.comp) out.comp = stp(*a.comp, kron(LogicalMatrix::identity(p), *b.comp));

  if (cross_checking() && !(out == product_componentwise(a, b)))
    throw std::logic_error("product: matrix and componentwise constructions disagree");
  return out;
}

bool is_decomposable(const StructureTriple& a, int p, int q) {
  check_decomposition_shapes(a, p, q);
  const LogicalMatrix proj1 = first_factor_projector(p, q);
  const LogicalMatrix proj2 = second_factor_projector(p, q);

  // Factor projections of the composed tables must not depend on the other
  // factor's coordinates.
  auto binary_constant = [&](const LogicalMatrix& table, const LogicalMatrix& proj,
                             bool first_factor) {
    const int n = first_factor ? p : q;
    std::vector<int> seen(static_cast<std::size_t>(n) * n, 0);
    for (int c0 = 0; c0 < table.cols(); ++c0) {
      const PairCoords pc = coords(c0, p, q);
      const int u = first_factor ? pc.i1 : pc.i2;
      const int v = first_factor ? pc.j1 : pc.j2;
      const int value = proj.col(table.col(c0 + 1));
      int& slot = seen[static_cast<std::size_t>((u - 1) * n + v - 1)];
      if (slot == 0) slot = value;
      else if (slot != value) return false;
    }
    return true;
  };
  auto unary_constant = [&](const LogicalMatrix& table, const LogicalMatrix& proj,
                            bool first_factor) {
    const int n = first_factor ? p : q;
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int c0 = 0; c0 < table.cols(); ++c0) {
      const int u = first_factor ? c0 / q + 1 : c0 % q + 1;
      const int value = proj.col(table.col(c0 + 1));
      int& slot = seen[static_cast<std::size_t>(u - 1)];
      if (slot == 0) slot = value;
      else if (slot != value) return false;
    }
    return true;
  };

  bool ok = binary_constant(a.meet, proj1, true) && binary_constant(a.meet, proj2, false) &&
            binary_constant(a.join, proj1, true) && binary_constant(a.join, proj2, false);
  if (a.comp)
    ok = ok && unary_constant(*a.comp, proj1, true) && unary_constant(*a.comp, proj2, false);

  if (cross_checking()) {
    // Independent route: the annihilation identities evaluated dense, with
    // the fractional idempotents cleared to integer form.
    auto annihilates = [&](const LogicalMatrix& table, const LogicalMatrix& proj,
                           bool first_factor, bool unary) {
      const Mat f = stp(proj, table).dense();
      const int d = first_factor ? q : p;
      const Mat ones = Mat::Ones(d, d);
      const Mat block = first_factor ? kron(Mat(Mat::Identity(p, p)), ones)
                                     : kron(ones, Mat(Mat::Identity(q, q)));
      const Mat e = unary ? block : kron(block, block);
      const Int scale = unary ? d : static_cast<Int>(d) * d;
      return ((scale * f - f * e).array() == 0).all();
    };
    bool dense_ok = annihilates(a.meet, proj1, true, false) &&
                    annihilates(a.meet, proj2, false, false) &&
                    annihilates(a.join, proj1, true, false) &&
                    annihilates(a.join, proj2, false, false);
    if (a.comp)
      dense_ok = dense_ok && annihilates(*a.comp, proj1, true, true) &&
                 annihilates(*a.comp, proj2, false, true);
    if (ok != dense_ok)
      throw std::logic_error(
          "is_decomposable: block-constancy and annihilation verdicts disagree");
  }
  return ok;
}

std::optional<std::pair<StructureTriple, StructureTriple>> decompose(
    const StructureTriple& a, int p, int q) {
  if (!is_decomposable(a, p, q)) return std::nullopt;
  const LogicalMatrix proj1 = first_factor_projector(p, q);
  const LogicalMatrix proj2 = second_factor_projector(p, q);

  const auto mc1 = average_binary(a.meet, proj1, p, p, q, true);
  const auto mc2 = average_binary(a.meet, proj2, q, p, q, false);
  const auto md1 = average_binary(a.join, proj1, p, p, q, true);
  const auto md2 = average_binary(a.join, proj2, q, p, q, false);
  if (!mc1 || !mc2 || !md1 || !md2)
    throw std::logic_error("decompose: averaging produced a non-logical factor");

  StructureTriple f1{p, *mc1, *md1, std::nullopt};
  StructureTriple f2{q, *mc2, *md2, std::nullopt};
  if (a.comp) {
    const auto mn1 = average_unary(*a.comp, proj1, p, p, q, true);
    const auto mn2 = average_unary(*a.comp, proj2, q, p, q, false);
    if (!mn1 || !mn2)
      throw std::logic_error("decompose: averaging produced a non-logical factor");
    f1.comp = *mn1;
    f2.comp = *mn2;
  }
  if (!(product(f1, f2) == a))
    throw std::logic_error("decompose: extracted factors do not reproduce the input");
  return std::make_pair(std::move(f1), std::move(f2));
}

StructureTriple relabel(const StructureTriple& a, const LogicalMatrix& sigma) {
  validate(a);
  if (sigma.rows() != a.k || !sigma.is_permutation())
    throw std::invalid_argument("relabel: sigma must be a k x k permutation");
  const int k = a.k;
  const LogicalMatrix inv = sigma.transposed_permutation();
  std::vector<int> meet(static_cast<std::size_t>(k) * k), join(meet.size());
  for (int u = 1; u <= k; ++u)
    for (int v = 1; v <= k; ++v) {
      const std::size_t at = static_cast<std::size_t>((u - 1) * k + v - 1);
      meet[at] = sigma.col(apply_binary(a.meet, inv.col(u), inv.col(v)));
      join[at] = sigma.col(apply_binary(a.join, inv.col(u), inv.col(v)));
    }
  StructureTriple out{k, LogicalMatrix(k, std::move(meet)),
                      LogicalMatrix(k, std::move(join)), std::nullopt};
  if (a.comp) {
    std::vector<int> comp(static_cast<std::size_t>(k));
    for (int u = 1; u <= k; ++u)
      comp[static_cast<std::size_t>(u - 1)] = sigma.col(apply_unary(*a.comp, inv.col(u)));
    out.comp = LogicalMatrix(k, std::move(comp));
  }
  return out;
}

std::optional<RelabeledDecomposition> decompose_up_to_iso(const StructureTriple& a) {
  validate(a);
  const int k = a.k;
  std::vector<std::pair<int, int>> divisor_pairs;
  for (int p = 2; p <= k / 2; ++p)
    if (k % p == 0 && k / p >= 2) divisor_pairs.emplace_back(p, k / p);

  for (const auto& [p, q] : divisor_pairs) {
    std::vector<int> middle(static_cast<std::size_t>(std::max(0, k - 2)));
    std::iota(middle.begin(), middle.end(), 2);
    std::vector<int> sigma(static_cast<std::size_t>(k));
    do {
      sigma[0] = 1;
      std::copy(middle.begin(), middle.end(), sigma.begin() + 1);
      sigma[static_cast<std::size_t>(k - 1)] = k;
      const LogicalMatrix perm(k, sigma);
      const StructureTriple relabeled = relabel(a, perm);
      if (auto factors = decompose(relabeled, p, q))
        return RelabeledDecomposition{perm, p, q, std::move(factors->first),
                                      std::move(factors->second)};
    } while (std::next_permutation(middle.begin(), middle.end()));
  }
  return std::nullopt;
}

}  // namespace btk
