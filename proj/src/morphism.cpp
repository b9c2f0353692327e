#include "btk/morphism.hpp"

#include "btk/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace btk {

std::string_view to_string(MorphismKind k) {
  switch (k) {
    case MorphismKind::lattice_hom: return "lattice_hom";
    case MorphismKind::bta_hom: return "bta_hom";
    case MorphismKind::lattice_iso: return "lattice_iso";
    case MorphismKind::bta_iso: return "bta_iso";
  }
  return "?";
}

namespace {

void check_shapes(const StructureTriple& a, const StructureTriple& b,
                  const LogicalMatrix& map) {
  validate(a);
  validate(b);
  if (map.rows() != b.k || map.cols() != a.k)
    throw std::invalid_argument("morphism: map must be target_k x source_k");
}

bool lattice_hom_matrix(const StructureTriple& a, const StructureTriple& b,
                        const LogicalMatrix& m) {
  const int p = a.k, q = b.k;
  if (m.col(1) != 1 || m.col(p) != q) return false;
  const LogicalMatrix ip = LogicalMatrix::identity(p);
  const LogicalMatrix rhs_tail = kron(ip, m);
  return stp(m, a.meet) == stp(stp(b.meet, m), rhs_tail) &&
         stp(m, a.join) == stp(stp(b.join, m), rhs_tail);
}

bool lattice_hom_pointwise(const StructureTriple& a, const StructureTriple& b,
                           const LogicalMatrix& m) {
  const int p = a.k;
  auto pi = [&](int x) { return m.col(x); };
  if (pi(1) != 1 || pi(p) != b.k) return false;
  for (int x = 1; x <= p; ++x)
    for (int y = 1; y <= p; ++y) {
      if (pi(apply_binary(a.meet, x, y)) != apply_binary(b.meet, pi(x), pi(y)))
        return false;
      if (pi(apply_binary(a.join, x, y)) != apply_binary(b.join, pi(x), pi(y)))
        return false;
    }
  return true;
}

bool comp_line_matrix(const StructureTriple& a, const StructureTriple& b,
                      const LogicalMatrix& m) {
  return stp(m, *a.comp) == stp(*b.comp, m);
}

bool comp_line_pointwise(const StructureTriple& a, const StructureTriple& b,
                         const LogicalMatrix& m) {
  for (int x = 1; x <= a.k; ++x)
    if (m.col(apply_unary(*a.comp, x)) != apply_unary(*b.comp, m.col(x))) return false;
  return true;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
  std::vector<std::size_t> parent;
};

}  // namespace

bool is_lattice_hom(const StructureTriple& a, const StructureTriple& b,
                    const LogicalMatrix& map) {
  check_shapes(a, b, map);
  const bool v = lattice_hom_matrix(a, b, map);
  if (cross_checking() && v != lattice_hom_pointwise(a, b, map))
    throw std::logic_error("is_lattice_hom: matrix and pointwise verdicts disagree");
  return v;
}

bool is_bta_hom(const StructureTriple& a, const StructureTriple& b,
                const LogicalMatrix& map) {
  check_shapes(a, b, map);
  if (!a.comp || !b.comp)
    throw std::invalid_argument("is_bta_hom: both algebras must carry comp");
  const bool v = lattice_hom_matrix(a, b, map) && comp_line_matrix(a, b, map);
  if (cross_checking()) {
    const bool w = lattice_hom_pointwise(a, b, map) && comp_line_pointwise(a, b, map);
    if (v != w)
      throw std::logic_error("is_bta_hom: matrix and pointwise verdicts disagree");
  }
  return v;
}

std::vector<Morphism> find_isomorphisms(const StructureTriple& a,
                                        const StructureTriple& b, bool fix_bounds) {
  validate(a);
  validate(b);
  if (a.k != b.k) throw std::invalid_argument("find_isomorphisms: size mismatch");
  const int k = a.k;
  const bool with_comp = a.comp.has_value() && b.comp.has_value();

  std::vector<Morphism> out;
  auto consider = [&](const std::vector<int>& sigma) {
    const LogicalMatrix t(k, sigma);
    const LogicalMatrix conj = kron(t, t);
    // a = T^T b (T ox T), evaluated as T a == b (T ox T).
    bool ok = stp(t, a.meet) == stp(b.meet, conj) && stp(t, a.join) == stp(b.join, conj);
    if (ok && with_comp) ok = stp(t, *a.comp) == stp(*b.comp, t);
    if (cross_checking()) {
      bool pw = true;
      for (int x = 1; x <= k && pw; ++x)
        for (int y = 1; y <= k && pw; ++y) {
          pw = sigma[static_cast<std::size_t>(apply_binary(a.meet, x, y) - 1)] ==
                   apply_binary(b.meet, sigma[static_cast<std::size_t>(x - 1)],
                                sigma[static_cast<std::size_t>(y - 1)]) &&
               sigma[static_cast<std::size_t>(apply_binary(a.join, x, y) - 1)] ==
                   apply_binary(b.join, sigma[static_cast<std::size_t>(x - 1)],
                                sigma[static_cast<std::size_t>(y - 1)]);
        }
      if (pw && with_comp)
        for (int x = 1; x <= k && pw; ++x)
          pw = sigma[static_cast<std::size_t>(apply_unary(*a.comp, x) - 1)] ==
               apply_unary(*b.comp, sigma[static_cast<std::size_t>(x - 1)]);
      if (ok != pw)
        throw std::logic_error(
            "find_isomorphisms: matrix and pointwise verdicts disagree");
    }
    if (ok)
      out.push_back(Morphism{k, k, t,
                             with_comp ? MorphismKind::bta_iso : MorphismKind::lattice_iso});
  };

  if (fix_bounds) {
    std::vector<int> middle(static_cast<std::size_t>(std::max(0, k - 2)));
    std::iota(middle.begin(), middle.end(), 2);
    std::vector<int> sigma(static_cast<std::size_t>(k));
    do {
      sigma[0] = 1;
      std::copy(middle.begin(), middle.end(), sigma.begin() + 1);
      sigma[static_cast<std::size_t>(k - 1)] = k;
      consider(sigma);
    } while (std::next_permutation(middle.begin(), middle.end()));
  } else {
    std::vector<int> sigma(static_cast<std::size_t>(k));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      consider(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return out;
}

std::vector<std::vector<std::size_t>> iso_classes(
    const std::vector<StructureTriple>& algebras, bool fix_bounds) {
  if (algebras.empty()) return {};
  const int k = algebras.front().k;
  for (const auto& a : algebras)
    if (a.k != k) throw std::invalid_argument("iso_classes: mixed carrier sizes");

  UnionFind uf(algebras.size());
  for (std::size_t i = 0; i < algebras.size(); ++i)
    for (std::size_t j = i + 1; j < algebras.size(); ++j) {
      if (uf.find(i) == uf.find(j)) continue;
      if (!find_isomorphisms(algebras[i], algebras[j], fix_bounds).empty())
        uf.unite(i, j);
    }

  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> where(algebras.size(), -1);
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    const std::size_t root = uf.find(i);
    if (where[root] < 0) {
      where[root] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(where[root])].push_back(i);
  }
  return groups;
}

}  // namespace btk
