#ifndef BTK_PRODEC_HPP
#define BTK_PRODEC_HPP

#include "btk/algebra.hpp"

#include <optional>
#include <utility>

namespace btk {

/// Product algebra on the carrier indexed by (i-1)q + j. comp must be
/// present on both factors or neither. Cross-checked against the
/// componentwise construction when cross-checking is on.
StructureTriple product(const StructureTriple& a, const StructureTriple& b);

/// Necessary-and-sufficient factorization test for |A| = p*q, p,q >= 2:
/// each factor projection of every operation table must be constant on the
/// blocks where only the other factor's coordinates vary.
bool is_decomposable(const StructureTriple& a, int p, int q);

/// Extracts both factors by the exact averaging formulas (every sum is
/// asserted divisible); product(first, second) == a holds on success.
std::optional<std::pair<StructureTriple, StructureTriple>> decompose(
    const StructureTriple& a, int p, int q);

struct RelabeledDecomposition {
  LogicalMatrix relabeling;  // permutation applied to a before decomposing
  int p = 0;
  int q = 0;
  StructureTriple first;
  StructureTriple second;
};

/// Scans divisor pairs (smallest p first) and bounds-fixing relabelings in
/// lexicographic order; returns the first relabeling under which decompose
/// succeeds. Absence means indecomposable up to relabeling.
std::optional<RelabeledDecomposition> decompose_up_to_iso(const StructureTriple& a);

/// The relabeled algebra sigma(a): op'(u,v) = sigma(op(sigma^-1 u, sigma^-1 v)).
StructureTriple relabel(const StructureTriple& a, const LogicalMatrix& sigma);

}  // namespace btk

#endif  // BTK_PRODEC_HPP
