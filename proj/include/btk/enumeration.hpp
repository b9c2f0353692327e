#ifndef BTK_ENUMERATION_HPP
#define BTK_ENUMERATION_HPP

#include "btk/algebra.hpp"

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace btk {

enum class ComplementClass { free, dic, de_morgan, kleene, pseudo, stone, boolean_ };

std::optional<ComplementClass> complement_class_from_name(std::string_view name);
std::string_view to_string(ComplementClass c);

inline constexpr int default_max_k = 6;

/// All labeled bounded lattices on {1..k} with 1 the top and k the bottom
/// (all bounded distributive ones when requested), complete and duplicate
/// free, sorted lexicographically on (meet indices, join indices).
///
/// Generation backtracks over the free meet-table cells with constraint
/// propagation, then derives each join entry as the least upper bound of the
/// induced order; every output re-passes the full axiom checks.
std::vector<StructureTriple> enumerate_lattices(int k, bool require_distributive,
                                                int max_k = default_max_k);

/// Streams every k x k logical matrix whose classification flag for cls is
/// true over the given lattice, in lexicographic order.
void for_each_complement(const StructureTriple& lattice, ComplementClass cls,
                         const std::function<void(const LogicalMatrix&)>& fn);

/// Collects for_each_complement into a sorted vector. The free class is
/// materialized only for k <= 4; stream it for larger carriers.
std::vector<LogicalMatrix> enumerate_complements(const StructureTriple& lattice,
                                                 ComplementClass cls);

/// Cross product of the bounded distributive lattice catalog with every
/// complement satisfying all of the required classes, ordered by (lattice,
/// complement).
std::vector<StructureTriple> enumerate_btas(int k,
                                            const std::vector<ComplementClass>& required,
                                            int max_k = default_max_k);

}  // namespace btk

#endif  // BTK_ENUMERATION_HPP
