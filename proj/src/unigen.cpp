#include "btk/unigen.hpp"

#include "btk/algebra.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace btk {

std::string_view to_string(Gen g) {
  switch (g) {
    case Gen::sigma1: return "s1";
    case Gen::sigma2: return "s2";
    case Gen::theta: return "t";
  }
  return "?";
}

LogicalMatrix gen_matrix(int k, Gen g) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  switch (g) {
    case Gen::sigma1:
      std::iota(idx.begin(), idx.end(), 1);
      if (k >= 2) std::swap(idx[0], idx[1]);
      break;
    case Gen::sigma2:
      for (int i = 0; i < k - 1; ++i) idx[static_cast<std::size_t>(i)] = i + 2;
      idx[static_cast<std::size_t>(k - 1)] = 1;
      break;
    case Gen::theta:
      idx[0] = 1;
      for (int i = 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
      break;
  }
  return LogicalMatrix(k, std::move(idx));
}

LogicalMatrix word_matrix(int k, const Word& w) {
  LogicalMatrix out = LogicalMatrix::identity(k);
  for (Gen g : w) out = stp(out, gen_matrix(k, g));
  return out;
}

GeneratorSet generator_set(int k) {
  if (k < 2) throw std::invalid_argument("generator_set: k must be >= 2");
  std::vector<int> meet(static_cast<std::size_t>(k) * k), join(meet.size());
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      const std::size_t at = static_cast<std::size_t>((i - 1) * k + j - 1);
      meet[at] = std::max(i, j);
      join[at] = std::min(i, j);
    }
  return GeneratorSet{k, gen_matrix(k, Gen::sigma1), gen_matrix(k, Gen::sigma2),
                      gen_matrix(k, Gen::theta), LogicalMatrix(k, std::move(meet)),
                      LogicalMatrix(k, std::move(join))};
}

std::map<LogicalMatrix, Word> unary_closure(int k) {
  if (k < 2 || k > 4)
    throw std::invalid_argument("unary_closure: exhaustive closure supports 2 <= k <= 4");
  constexpr Gen kGens[] = {Gen::sigma1, Gen::sigma2, Gen::theta};
  std::map<LogicalMatrix, Word> seen;
  std::deque<LogicalMatrix> frontier;
  for (Gen g : kGens) {
    LogicalMatrix m = gen_matrix(k, g);
    if (seen.emplace(m, Word{g}).second) frontier.push_back(std::move(m));
  }
  while (!frontier.empty()) {
    const LogicalMatrix cur = std::move(frontier.front());
    frontier.pop_front();
    const Word& cur_word = seen.at(cur);
    for (Gen g : kGens) {
      LogicalMatrix next = stp(cur, gen_matrix(k, g));
      if (seen.contains(next)) continue;
      Word w = cur_word;
      w.push_back(g);
      seen.emplace(next, std::move(w));
      frontier.push_back(std::move(next));
    }
  }
  return seen;
}

namespace {

// Word for the adjacent transposition (t, t+1) = c^(t-1) (1 2) c^-(t-1).
Word adjacent_swap_word(int k, int t) {
  Word w;
  for (int i = 0; i < t - 1; ++i) w.push_back(Gen::sigma2);
  w.push_back(Gen::sigma1);
  for (int i = 0; i < (k - (t - 1)) % k; ++i) w.push_back(Gen::sigma2);
  return w;
}

Word permutation_word(int k, const std::vector<int>& sigma) {
  // Bubble the one-line notation to the identity; each recorded swap is an
  // adjacent transposition applied on the right, so the word is emitted in
  // reverse order of recording.
  std::vector<int> line = sigma;
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int t = 1; t < k; ++t) {
      if (line[static_cast<std::size_t>(t - 1)] > line[static_cast<std::size_t>(t)]) {
        std::swap(line[static_cast<std::size_t>(t - 1)], line[static_cast<std::size_t>(t)]);
        swaps.push_back(t);
        moved = true;
      }
    }
  }
  Word out;
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
    const Word sw = adjacent_swap_word(k, *it);
    out.insert(out.end(), sw.begin(), sw.end());
  }
  return out;
}

// Word for the map sending j to i and fixing everything else (i < j),
// realized as p2 . theta . p1 with permutations p1, p2.
Word merge_word(int k, int i, int j) {
  std::vector<int> p1(static_cast<std::size_t>(k));
  p1[static_cast<std::size_t>(i - 1)] = 1;
  p1[static_cast<std::size_t>(j - 1)] = 2;
  int next = 3;
  for (int x = 1; x <= k; ++x)
    if (x != i && x != j) p1[static_cast<std::size_t>(x - 1)] = next++;

  // theta maps p1(i)=1 and p1(j)=2 to 1, and p1(x) to p1(x)-1 otherwise.
  std::vector<int> p2(static_cast<std::size_t>(k), 0);
  p2[0] = i;
  for (int x = 1; x <= k; ++x)
    if (x != i && x != j)
      p2[static_cast<std::size_t>(p1[static_cast<std::size_t>(x - 1)] - 2)] = x;
  p2[static_cast<std::size_t>(k - 1)] = j;

  Word out = permutation_word(k, p2);
  out.push_back(Gen::theta);
  const Word w1 = permutation_word(k, p1);
  out.insert(out.end(), w1.begin(), w1.end());
  return out;
}

Word constructive_word(const LogicalMatrix& target) {
  const int k = target.rows();
  std::vector<int> work = target.col_indices();
  Word tail;
  for (;;) {
    int ci = 0, cj = 0;
    for (int i = 1; i <= k && ci == 0; ++i)
      for (int j = i + 1; j <= k; ++j)
        if (work[static_cast<std::size_t>(i - 1)] == work[static_cast<std::size_t>(j - 1)]) {
          ci = i;
          cj = j;
          break;
        }
    if (ci == 0) break;  // injective now
    const Word mw = merge_word(k, ci, cj);
    tail.insert(tail.begin(), mw.begin(), mw.end());
    std::vector<bool> used(static_cast<std::size_t>(k + 1), false);
    for (int v : work) used[static_cast<std::size_t>(v)] = true;
    for (int v = 1; v <= k; ++v)
      if (!used[static_cast<std::size_t>(v)]) {
        work[static_cast<std::size_t>(cj - 1)] = v;
        break;
      }
  }
  Word out = permutation_word(k, work);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace

Word unary_word(const LogicalMatrix& target) {
  const int k = target.rows();
  if (target.cols() != k) throw std::invalid_argument("unary_word: target must be k x k");
  Word out;
  if (k <= 4 && k >= 2) {
    out = unary_closure(k).at(target);
  } else if (k == 1) {
    out = {};
  } else {
    out = constructive_word(target);
  }
  if (out.empty()) out = {Gen::sigma1, Gen::sigma1};
  if (!(word_matrix(k, out) == target))
    throw std::logic_error("unary_word: composed word does not reproduce the target");
  return out;
}

ExprPtr make_meet(ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr::Meet{std::move(lhs), std::move(rhs)});
}
ExprPtr make_join(ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr::Join{std::move(lhs), std::move(rhs)});
}
ExprPtr make_unary(UnaryMap map, ExprPtr child) {
  return std::make_shared<const Expr>(Expr::Unary{std::move(map), std::move(child)});
}
ExprPtr make_var(int position) { return std::make_shared<const Expr>(Expr::Var{position}); }
ExprPtr make_const(int value) { return std::make_shared<const Expr>(Expr::Const{value}); }

int eval_expr(const Expr& e, std::span<const int> inputs, int k) {
  struct Visitor {
    std::span<const int> inputs;
    int k;
    int operator()(const Expr::Meet& n) const {
      return std::max(eval_expr(*n.lhs, inputs, k), eval_expr(*n.rhs, inputs, k));
    }
    int operator()(const Expr::Join& n) const {
      return std::min(eval_expr(*n.lhs, inputs, k), eval_expr(*n.rhs, inputs, k));
    }
    int operator()(const Expr::Unary& n) const {
      const int v = eval_expr(*n.child, inputs, k);
      const LogicalMatrix m =
          n.map.matrix ? *n.map.matrix : word_matrix(k, n.map.word.value_or(Word{}));
      return apply_unary(m, v);
    }
    int operator()(const Expr::Var& n) const {
      if (n.position < 1 || static_cast<std::size_t>(n.position) > inputs.size())
        throw std::out_of_range("eval_expr: unbound variable " + std::to_string(n.position));
      return inputs[static_cast<std::size_t>(n.position - 1)];
    }
    int operator()(const Expr::Const& n) const {
      if (n.value < 1 || n.value > k)
        throw std::out_of_range("eval_expr: constant out of carrier range");
      return n.value;
    }
  };
  return std::visit(Visitor{inputs, k}, e.node());
}

namespace {

LogicalMatrix indicator(int k, int i) {
  std::vector<int> idx(static_cast<std::size_t>(k), k);
  idx[static_cast<std::size_t>(i - 1)] = 1;
  return LogicalMatrix(k, std::move(idx));
}

LogicalMatrix block(const LogicalMatrix& f, int k, int mu) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j)
    idx[static_cast<std::size_t>(j - 1)] = f.col((mu - 1) * k + j);
  return LogicalMatrix(k, std::move(idx));
}

}  // namespace

ExprPtr synthesize(const LogicalMatrix& f, int arity) {
  const int k = f.rows();
  if (arity < 1) throw std::invalid_argument("synthesize: arity must be >= 1");
  long long want = 1;
  for (int i = 0; i < arity; ++i) want *= k;
  if (f.cols() != want)
    throw std::invalid_argument("synthesize: table must have k^arity columns");

  ExprPtr tree;
  if (arity == 1) {
    tree = make_unary(UnaryMap{std::nullopt, f}, make_var(1));
  } else {
    std::vector<int> idx(static_cast<std::size_t>(arity - 1), 1);
    ExprPtr joined;
    for (;;) {
      int mu = 0;
      for (int t = 0; t < arity - 1; ++t) mu = mu * k + idx[static_cast<std::size_t>(t)] - 1;
      mu += 1;
      ExprPtr term;
      for (int t = 0; t < arity - 1; ++t) {
        ExprPtr leaf = make_unary(
            UnaryMap{std::nullopt, indicator(k, idx[static_cast<std::size_t>(t)])},
            make_var(t + 1));
        term = term ? make_meet(std::move(term), std::move(leaf)) : std::move(leaf);
      }
      ExprPtr last =
          make_unary(UnaryMap{std::nullopt, block(f, k, mu)}, make_var(arity));
      term = make_meet(std::move(term), std::move(last));
      joined = joined ? make_join(std::move(joined), std::move(term)) : std::move(term);

      int pos = arity - 2;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k) {
        idx[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
    }
    tree = std::move(joined);
  }

  // The construction is only accepted if it reproduces f on every tuple.
  std::vector<int> xs(static_cast<std::size_t>(arity), 1);
  for (;;) {
    int stacked = 0;
    for (int t = 0; t < arity; ++t) stacked = stacked * k + xs[static_cast<std::size_t>(t)] - 1;
    if (eval_expr(*tree, xs, k) != f.col(stacked + 1))
      throw std::logic_error("synthesize: expression does not reproduce the table");
    int pos = arity - 1;
    while (pos >= 0 && xs[static_cast<std::size_t>(pos)] == k) {
      xs[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++xs[static_cast<std::size_t>(pos)];
  }
  return tree;
}

ExprPtr expand_words(const ExprPtr& e) {
  struct Visitor {
    ExprPtr operator()(const Expr::Meet& n) const {
      return make_meet(expand_words(n.lhs), expand_words(n.rhs));
    }
    ExprPtr operator()(const Expr::Join& n) const {
      return make_join(expand_words(n.lhs), expand_words(n.rhs));
    }
    ExprPtr operator()(const Expr::Unary& n) const {
      UnaryMap m = n.map;
      if (m.matrix) {
        m.word = unary_word(*m.matrix);
        m.matrix.reset();
      }
      return make_unary(std::move(m), expand_words(n.child));
    }
    ExprPtr operator()(const Expr::Var& n) const { return make_var(n.position); }
    ExprPtr operator()(const Expr::Const& n) const { return make_const(n.value); }
  };
  return std::visit(Visitor{}, e->node());
}

namespace {

std::string word_to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += '.';
    out += to_string(w[i]);
  }
  return out;
}

}  // namespace

std::string to_sexpr(const Expr& e) {
  struct Visitor {
    std::string operator()(const Expr::Meet& n) const {
      return "(MEET " + to_sexpr(*n.lhs) + " " + to_sexpr(*n.rhs) + ")";
    }
    std::string operator()(const Expr::Join& n) const {
      return "(JOIN " + to_sexpr(*n.lhs) + " " + to_sexpr(*n.rhs) + ")";
    }
    std::string operator()(const Expr::Unary& n) const {
      const Word w = n.map.word ? *n.map.word : unary_word(*n.map.matrix);
      return "(U:" + word_to_string(w) + " " + to_sexpr(*n.child) + ")";
    }
    std::string operator()(const Expr::Var& n) const {
      return "VAR:" + std::to_string(n.position);
    }
    std::string operator()(const Expr::Const& n) const {
      return "CONST:" + std::to_string(n.value);
    }
  };
  return std::visit(Visitor{}, e.node());
}

}  // namespace btk
