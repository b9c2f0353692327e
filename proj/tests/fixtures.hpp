#ifndef BTK_TESTS_FIXTURES_HPP
#define BTK_TESTS_FIXTURES_HPP

#include "btk/algebra.hpp"

#include <array>
#include <vector>

namespace btk::testing {

inline StructureTriple make_algebra(int k, std::vector<int> meet, std::vector<int> join,
                                    std::optional<std::vector<int>> comp = std::nullopt) {
  StructureTriple a;
  a.k = k;
  a.meet = LogicalMatrix(k, std::move(meet));
  a.join = LogicalMatrix(k, std::move(join));
  if (comp) a.comp = LogicalMatrix(k, std::move(*comp));
  return a;
}

/// The two-element bounded lattice with its boolean complement.
inline StructureTriple ba2() {
  return make_algebra(2, {1, 2, 2, 2}, {1, 1, 1, 2}, {{2, 1}});
}

/// Three-element chain with the order-reversing (Kleene) complement.
inline StructureTriple chain3() {
  return make_algebra(3, {1, 2, 3, 2, 2, 3, 3, 3, 3}, {1, 1, 1, 1, 2, 2, 1, 2, 3},
                      {{3, 2, 1}});
}

/// The three bounded distributive lattices on four labeled elements, in
/// catalog order (two chains, then the diamond).
inline std::vector<StructureTriple> catalog4() {
  return {
      make_algebra(4, {1, 2, 3, 4, 2, 2, 2, 4, 3, 2, 3, 4, 4, 4, 4, 4},
                   {1, 1, 1, 1, 1, 2, 3, 2, 1, 3, 3, 3, 1, 2, 3, 4}),
      make_algebra(4, {1, 2, 3, 4, 2, 2, 3, 4, 3, 3, 3, 4, 4, 4, 4, 4},
                   {1, 1, 1, 1, 1, 2, 2, 2, 1, 2, 3, 3, 1, 2, 3, 4}),
      make_algebra(4, {1, 2, 3, 4, 2, 2, 4, 4, 3, 4, 3, 4, 4, 4, 4, 4},
                   {1, 1, 1, 1, 1, 2, 1, 2, 1, 1, 3, 3, 1, 2, 3, 4}),
  };
}

/// Variable cells (a,b,c,d,e,f) of the twelve five-element bounded
/// distributive lattices, in catalog order.
inline const std::array<std::array<int, 6>, 12>& catalog5_cells() {
  static const std::array<std::array<int, 6>, 12> cells = {{
      {2, 2, 2, 3, 4, 1}, {2, 2, 3, 3, 4, 4}, {2, 2, 4, 3, 4, 3}, {2, 4, 4, 3, 2, 3},
      {2, 5, 4, 3, 3, 3}, {3, 2, 3, 2, 4, 4}, {3, 3, 3, 2, 1, 4}, {3, 4, 3, 2, 2, 4},
      {3, 4, 4, 2, 2, 3}, {3, 4, 5, 2, 2, 2}, {4, 4, 4, 1, 2, 3}, {5, 2, 3, 4, 4, 4},
  }};
  return cells;
}

inline StructureTriple catalog5_lattice(const std::array<int, 6>& v) {
  const auto [a, b, c, d, e, f] = v;
  return make_algebra(5,
                      {1, 2, 3, 4, 5, 2, 2, a, b, 5, 3, a, 3, c, 5, 4, b, c, 4, 5,
                       5, 5, 5, 5, 5},
                      {1, 1, 1, 1, 1, 1, 2, d, e, 2, 1, d, 3, f, 3, 1, e, f, 4, 4,
                       1, 2, 3, 4, 5});
}

inline std::vector<StructureTriple> catalog5() {
  std::vector<StructureTriple> out;
  for (const auto& v : catalog5_cells()) out.push_back(catalog5_lattice(v));
  return out;
}

/// The four five-element double-idempotent complements, C1..C4.
inline std::vector<std::vector<int>> dic5() {
  return {{5, 2, 3, 4, 1}, {5, 3, 2, 4, 1}, {5, 4, 3, 2, 1}, {5, 2, 4, 3, 1}};
}

/// The five nontrivial bounds-fixing permutations of five elements, T1..T5.
inline std::vector<std::vector<int>> perms5() {
  return {{1, 2, 4, 3, 5}, {1, 3, 2, 4, 5}, {1, 3, 4, 2, 5}, {1, 4, 2, 3, 5},
          {1, 4, 3, 2, 5}};
}

/// Five-element modular non-distributive diamond: three pairwise
/// incomparable middles.
inline StructureTriple m3() {
  return make_algebra(5,
                      {1, 2, 3, 4, 5, 2, 2, 5, 5, 5, 3, 5, 3, 5, 5, 4, 5, 5, 4, 5,
                       5, 5, 5, 5, 5},
                      {1, 1, 1, 1, 1, 1, 2, 1, 1, 2, 1, 1, 3, 1, 3, 1, 1, 1, 4, 4,
                       1, 2, 3, 4, 5});
}

/// One-element algebra (meet, join and comp all forced).
inline StructureTriple trivial1() { return make_algebra(1, {1}, {1}, {{1}}); }

}  // namespace btk::testing

#endif  // BTK_TESTS_FIXTURES_HPP
