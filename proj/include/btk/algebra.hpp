#ifndef BTK_ALGEBRA_HPP
#define BTK_ALGEBRA_HPP

#include "btk/stp.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace btk {

/// Structure matrices of a finite algebra on carrier {1,...,k}.
/// Convention: index 1 is the top element and index k the bottom element;
/// column (i-1)*k + j of a binary table holds op(element i, element j).
struct StructureTriple {
  int k = 0;
  LogicalMatrix meet;                 // k x k^2
  LogicalMatrix join;                 // k x k^2
  std::optional<LogicalMatrix> comp;  // k x k

  friend bool operator==(const StructureTriple&, const StructureTriple&) = default;
  friend auto operator<=>(const StructureTriple& a, const StructureTriple& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    if (auto c = a.meet <=> b.meet; c != 0) return c;
    if (auto c = a.join <=> b.join; c != 0) return c;
    return a.comp <=> b.comp;
  }
};

/// Shape-checks a triple (throws std::invalid_argument on violation).
void validate(const StructureTriple& a);

/// Classification flags; the kleene/stone flags imply de_morgan/pseudo by
/// construction.
struct AlgebraReport {
  int k = 0;
  bool meet_commutative = false;
  bool meet_associative = false;
  bool join_commutative = false;
  bool join_associative = false;
  bool absorption = false;
  bool lattice = false;
  bool distributive = false;
  bool bounded = false;
  bool has_complement = false;
  bool free_complement = false;
  bool dic = false;
  bool de_morgan = false;
  bool kleene = false;
  bool pseudo = false;
  bool stone = false;
  bool boolean_algebra = false;
};

/// Value of op(x, y) for a k x k^2 structure matrix: column (x-1)k + y.
int apply_binary(const LogicalMatrix& op, int x, int y);
/// Value of op(x) for a k x k structure matrix.
int apply_unary(const LogicalMatrix& op, int x);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the algebra file format:
///   {"k": 2, "ops": {"meet": [1,2,2,2], "join": [1,1,1,2], "comp": [2,1]}}
/// All entries 1-based in [1,k]; meet/join have k^2 entries, comp (optional)
/// has k. Errors carry the offending JSON path.
StructureTriple parse_algebra(std::string_view text);

/// Canonical serialization (key order k, ops.meet, ops.join, ops.comp;
/// compact, byte-stable). parse_algebra(emit_algebra(a)) == a.
std::string emit_algebra(const StructureTriple& a);

std::string report_to_json(const AlgebraReport& r);

}  // namespace btk

#endif  // BTK_ALGEBRA_HPP
