#include "btk/enumeration.hpp"

#include "btk/axioms.hpp"

#include <algorithm>
#include <stdexcept>

namespace btk {

std::optional<ComplementClass> complement_class_from_name(std::string_view name) {
  if (name == "free") return ComplementClass::free;
  if (name == "dic") return ComplementClass::dic;
  if (name == "de-morgan" || name == "de_morgan") return ComplementClass::de_morgan;
  if (name == "kleene") return ComplementClass::kleene;
  if (name == "pseudo") return ComplementClass::pseudo;
  if (name == "stone") return ComplementClass::stone;
  if (name == "boolean") return ComplementClass::boolean_;
  return std::nullopt;
}

std::string_view to_string(ComplementClass c) {
  switch (c) {
    case ComplementClass::free: return "free";
    case ComplementClass::dic: return "dic";
    case ComplementClass::de_morgan: return "de-morgan";
    case ComplementClass::kleene: return "kleene";
    case ComplementClass::pseudo: return "pseudo";
    case ComplementClass::stone: return "stone";
    case ComplementClass::boolean_: return "boolean";
  }
  return "?";
}

namespace {

// Meet-table backtracking. Fixed cells: idempotence, the top row/column
// (1 meet y = y), the bottom (k meet y = k), and symmetry. Free cells are the
// pairs 2 <= i < j <= k-1.
class LatticeSearch {
 public:
  LatticeSearch(int k, bool distributive) : k_(k), distributive_(distributive) {
    meet_.assign(static_cast<std::size_t>(k * k), 0);
    for (int x = 1; x <= k; ++x)
      for (int y = 1; y <= k; ++y) {
        int v = 0;
        if (x == y) v = x;
        else if (x == 1) v = y;
        else if (y == 1) v = x;
        else if (x == k || y == k) v = k;
        set(x, y, v);
      }
    for (int i = 2; i < k; ++i)
      for (int j = i + 1; j < k; ++j) cells_.emplace_back(i, j);
  }

  std::vector<StructureTriple> run() {
    out_.clear();
    descend(0);
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  int at(int x, int y) const { return meet_[static_cast<std::size_t>((x - 1) * k_ + y - 1)]; }
  void set(int x, int y, int v) { meet_[static_cast<std::size_t>((x - 1) * k_ + y - 1)] = v; }

  bool consistent_so_far() const {
    // v = x meet y must itself lie below x and y wherever those cells are
    // known, and every fully assigned triple must associate.
    for (int x = 1; x <= k_; ++x)
      for (int y = 1; y <= k_; ++y) {
        const int v = at(x, y);
        if (v == 0) continue;
        if (at(v, x) != 0 && at(v, x) != v) return false;
        if (at(v, y) != 0 && at(v, y) != v) return false;
        for (int z = 1; z <= k_; ++z) {
          const int yz = at(y, z);
          if (yz == 0) continue;
          const int l = at(v, z), r = at(x, yz);
          if (l != 0 && r != 0 && l != r) return false;
        }
      }
    return true;
  }

  void descend(std::size_t cell) {
    if (!consistent_so_far()) return;
    if (cell == cells_.size()) {
      finish();
      return;
    }
    const auto [i, j] = cells_[cell];
    for (int v = 1; v <= k_; ++v) {
      set(i, j, v);
      set(j, i, v);
      descend(cell + 1);
    }
    set(i, j, 0);
    set(j, i, 0);
  }

  void finish() {
    // Meet table complete; a finite meet-semilattice with a top element is a
    // lattice, with x join y the meet of the common upper bounds. Derive the
    // join and verify it really is the least upper bound.
    auto leq = [&](int x, int y) { return at(x, y) == x; };
    std::vector<int> join(static_cast<std::size_t>(k_ * k_));
    for (int x = 1; x <= k_; ++x)
      for (int y = 1; y <= k_; ++y) {
        int g = 0;
        for (int z = 1; z <= k_; ++z) {
          if (!leq(x, z) || !leq(y, z)) continue;
          g = (g == 0) ? z : at(g, z);
        }
        if (g == 0 || !leq(x, g) || !leq(y, g)) return;
        join[static_cast<std::size_t>((x - 1) * k_ + y - 1)] = g;
      }
    StructureTriple a{k_, LogicalMatrix(k_, meet_), LogicalMatrix(k_, join), std::nullopt};
    const AxiomChecks c = check(a);
    if (!c.lattice() || !c.bounded) return;
    if (distributive_ && !c.distributive) return;
    out_.push_back(std::move(a));
  }

  int k_;
  bool distributive_;
  std::vector<int> meet_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<StructureTriple> out_;
};

bool class_flag(const AxiomChecks& c, ComplementClass cls) {
  switch (cls) {
    case ComplementClass::free: return true;
    case ComplementClass::dic: return c.dic;
    case ComplementClass::de_morgan: return c.de_morgan;
    case ComplementClass::kleene: return c.kleene;
    case ComplementClass::pseudo: return c.pseudo;
    case ComplementClass::stone: return c.stone;
    case ComplementClass::boolean_: return c.boolean_;
  }
  return false;
}

}  // namespace

std::vector<StructureTriple> enumerate_lattices(int k, bool require_distributive,
                                                int max_k) {
  if (k < 2 || k > max_k)
    throw std::invalid_argument("enumerate_lattices: k must be in [2," +
                                std::to_string(max_k) + "]");
  return LatticeSearch(k, require_distributive).run();
}

void for_each_complement(const StructureTriple& lattice, ComplementClass cls,
                         const std::function<void(const LogicalMatrix&)>& fn) {
  if (!is_lattice(lattice))
    throw std::invalid_argument("for_each_complement: input is not a lattice");
  const int k = lattice.k;
  std::vector<int> idx(static_cast<std::size_t>(k), 1);
  StructureTriple probe = lattice;
  for (;;) {
    probe.comp = LogicalMatrix(k, idx);
    if (cls == ComplementClass::free || class_flag(check(probe), cls))
      fn(*probe.comp);
    // lexicographic odometer
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k) {
      idx[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
  }
}

std::vector<LogicalMatrix> enumerate_complements(const StructureTriple& lattice,
                                                 ComplementClass cls) {
  if (cls == ComplementClass::free && lattice.k > 4)
    throw std::invalid_argument(
        "enumerate_complements: the free class is materialized only for k <= 4; "
        "use for_each_complement");
  std::vector<LogicalMatrix> out;
  for_each_complement(lattice, cls, [&](const LogicalMatrix& m) { out.push_back(m); });
  return out;
}

std::vector<StructureTriple> enumerate_btas(int k,
                                            const std::vector<ComplementClass>& required,
                                            int max_k) {
  for (ComplementClass cls : required)
    if (cls == ComplementClass::free && k > 4)
      throw std::invalid_argument("enumerate_btas: free class is unbounded for k > 4");
  std::vector<StructureTriple> out;
  for (const StructureTriple& lattice : enumerate_lattices(k, true, max_k)) {
    const int n = k;
    std::vector<int> idx(static_cast<std::size_t>(n), 1);
    StructureTriple probe = lattice;
    for (;;) {
      probe.comp = LogicalMatrix(n, idx);
      bool all = true;
      if (!required.empty()) {
        const AxiomChecks c = check(probe);
        for (ComplementClass cls : required) all = all && class_flag(c, cls);
      }
      if (all) out.push_back(probe);
      int pos = n - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n) {
        idx[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

}  // namespace btk
