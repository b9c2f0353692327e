#ifndef BTK_AXIOMS_HPP
#define BTK_AXIOMS_HPP

#include "btk/algebra.hpp"

#include <optional>

namespace btk {

/// Verdicts for the axiom and complement-class checks. Every field is decided
/// two independent ways: check_matrix evaluates the structure-matrix
/// identities through the STP kernel, check_pointwise loops over element
/// tuples with direct table lookups. Both are total on arbitrary logical
/// triples; complement fields are false when comp is absent.
struct AxiomChecks {
  bool meet_associative = false;
  bool join_associative = false;
  bool meet_commutative = false;
  bool join_commutative = false;
  bool absorption = false;
  bool distributive = false;
  bool bounded = false;
  bool dic = false;
  bool de_morgan = false;
  bool kleene = false;
  bool pseudo = false;
  bool stone = false;
  bool boolean_ = false;

  bool associative() const { return meet_associative && join_associative; }
  bool commutative() const { return meet_commutative && join_commutative; }
  bool lattice() const { return associative() && commutative() && absorption; }

  friend bool operator==(const AxiomChecks&, const AxiomChecks&) = default;
};

AxiomChecks check_matrix(const StructureTriple& a);
AxiomChecks check_pointwise(const StructureTriple& a);

/// When cross-checking is on (the default), every verdict below is computed
/// by both routes and a disagreement throws std::logic_error. The dual
/// verdict is this project's correctness argument; turn it off only for
/// release-mode throughput.
void set_cross_checking(bool on);
bool cross_checking();

/// Runs check_matrix, cross-checks against check_pointwise when enabled.
AxiomChecks check(const StructureTriple& a);

bool is_lattice(const StructureTriple& a);
bool is_distributive(const StructureTriple& a);
bool is_bounded(const StructureTriple& a);

/// Candidate complement from the annihilator construction: for each i, joins
/// every basis vector whose meet with d_k^i is the bottom (empty set folds to
/// the bottom), then validates the result pointwise (x meet x' = bottom, and
/// x meet y = bottom implies y <= x'). Absence means no pseudo complement
/// exists.
std::optional<LogicalMatrix> pseudo_complement(const StructureTriple& a);

/// Full classification; requires comp (throws std::invalid_argument if
/// missing). Lattice flags are reported for any triple; complement class
/// flags are the raw criteria.
AlgebraReport classify_complement(const StructureTriple& a);

/// Like classify_complement but comp is optional.
AlgebraReport build_report(const StructureTriple& a);

}  // namespace btk

#endif  // BTK_AXIOMS_HPP
