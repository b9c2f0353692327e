#ifndef BTK_MORPHISM_HPP
#define BTK_MORPHISM_HPP

#include "btk/algebra.hpp"

#include <vector>

namespace btk {

enum class MorphismKind { lattice_hom, bta_hom, lattice_iso, bta_iso };

std::string_view to_string(MorphismKind k);

/// A carrier map B1 -> B2 in structure-matrix form: map is target_k x
/// source_k with one column per source element. Isomorphism kinds require a
/// permutation matrix.
struct Morphism {
  int source_k = 0;
  int target_k = 0;
  LogicalMatrix map;
  MorphismKind kind = MorphismKind::lattice_hom;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// Bounds-preserving lattice homomorphism test: both intertwining identities
/// plus column conditions Col_1 = top, Col_p = bottom. Cross-checked
/// pointwise when cross-checking is on.
bool is_lattice_hom(const StructureTriple& a, const StructureTriple& b,
                    const LogicalMatrix& map);

/// is_lattice_hom plus the complement intertwining identity; both algebras
/// must carry comp.
bool is_bta_hom(const StructureTriple& a, const StructureTriple& b,
                const LogicalMatrix& map);

/// All permutation matrices T with a = T^T b (T ox T) on every operation
/// (complement line included iff both algebras carry comp). fix_bounds
/// restricts to permutations fixing 1 and k.
std::vector<Morphism> find_isomorphisms(const StructureTriple& a,
                                        const StructureTriple& b,
                                        bool fix_bounds = true);

/// Partition of the input (groups of 0-based input positions) under
/// existence of a bounds-fixing isomorphism; pairwise search + union-find.
std::vector<std::vector<std::size_t>> iso_classes(
    const std::vector<StructureTriple>& algebras, bool fix_bounds = true);

}  // namespace btk

#endif  // BTK_MORPHISM_HPP
