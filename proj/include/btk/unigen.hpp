#ifndef BTK_UNIGEN_HPP
#define BTK_UNIGEN_HPP

#include "btk/stp.hpp"

#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace btk {

/// The three unary generators: the transposition (1 2), the full cycle
/// (1 2 ... k), and the rank-(k-1) collapse d_k[1,1,2,...,k-1].
enum class Gen : std::uint8_t { sigma1, sigma2, theta };

/// A composition word; its matrix is the left-to-right product of the
/// generator matrices (so the last letter acts first).
using Word = std::vector<Gen>;

std::string_view to_string(Gen g);
LogicalMatrix gen_matrix(int k, Gen g);
LogicalMatrix word_matrix(int k, const Word& w);

/// Generator package for carrier size k >= 2: the three unary maps plus the
/// canonical bounded chain (meet = larger index, join = smaller index, top at
/// index 1, bottom at index k).
struct GeneratorSet {
  int k = 0;
  LogicalMatrix sigma1;
  LogicalMatrix sigma2;
  LogicalMatrix theta;
  LogicalMatrix meet;  // k x k^2
  LogicalMatrix join;  // k x k^2
};

GeneratorSet generator_set(int k);

/// Breadth-first closure of {sigma1, sigma2, theta} under composition, with
/// a shortest word per reachable map. Exhaustive mode is k <= 4 (the closure
/// is all k^k unary maps).
std::map<LogicalMatrix, Word> unary_closure(int k);

/// A word over the generators whose product equals target: closure lookup
/// for k <= 4, otherwise the constructive factorization (permutation part
/// into transposition+cycle, singular part by collapse conjugates). The
/// returned word is verified by composition.
Word unary_word(const LogicalMatrix& target);

// ---- expression trees ----------------------------------------------------

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Either a generator word or an explicit k x k logical matrix.
struct UnaryMap {
  std::optional<Word> word;
  std::optional<LogicalMatrix> matrix;
};

class Expr {
 public:
  struct Meet {
    ExprPtr lhs, rhs;
  };
  struct Join {
    ExprPtr lhs, rhs;
  };
  struct Unary {
    UnaryMap map;
    ExprPtr child;
  };
  struct Var {
    int position;  // 1-based
  };
  struct Const {
    int value;  // element index
  };
  using Node = std::variant<Meet, Join, Unary, Var, Const>;

  explicit Expr(Node n) : node_(std::move(n)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

ExprPtr make_meet(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_join(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_unary(UnaryMap map, ExprPtr child);
ExprPtr make_var(int position);
ExprPtr make_const(int value);

/// Recursive evaluation over the canonical chain on k elements (meet = max
/// index, join = min index). Throws std::out_of_range on an unbound
/// variable.
int eval_expr(const Expr& e, std::span<const int> inputs, int k);

/// Builds the nested join-of-meets expression realizing the k x k^s
/// structure matrix f: indicator maps on the first s-1 arguments select the
/// k x k block applied to the last. The tree is verified against f on every
/// input tuple before returning.
ExprPtr synthesize(const LogicalMatrix& f, int arity);

/// Replaces every explicit unary matrix by its generator word.
ExprPtr expand_words(const ExprPtr& e);

/// S-expression rendering with tags MEET / JOIN / U:<word> / VAR:<n> /
/// CONST:<i>; explicit matrices are resolved to words.
std::string to_sexpr(const Expr& e);

}  // namespace btk

#endif  // BTK_UNIGEN_HPP
