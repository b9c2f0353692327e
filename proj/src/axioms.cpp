#include "btk/axioms.hpp"

#include <atomic>
#include <stdexcept>

namespace btk {

namespace {

std::atomic<bool> g_cross_checking{true};

// ---- matrix route -------------------------------------------------------
// Each check builds both sides of the corresponding structure-matrix
// identity through the STP kernel and compares. All factors are logical, so
// the products stay in index form.

std::optional<LogicalMatrix> pseudo_candidate_matrix(const StructureTriple& a) {
  const int k = a.k;
  const LogicalMatrix& mc = a.meet;
  const LogicalMatrix& md = a.join;
  std::vector<int> cand;
  cand.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    const LogicalMatrix block = stp(mc, LogicalMatrix::basis(k, i));
    LogicalMatrix acc = LogicalMatrix::basis(k, k);
    bool first = true;
    for (int j = 1; j <= k; ++j) {
      if (block.col(j) != k) continue;
      const LogicalMatrix ej = LogicalMatrix::basis(k, j);
      acc = first ? ej : stp(md, stp(acc, ej));
      first = false;
    }
    cand.push_back(acc.col(1));
  }
  LogicalMatrix mn(k, std::move(cand));
  // x meet x' must be the bottom, and every annihilator of x must sit below x'.
  for (int x = 1; x <= k; ++x) {
    const LogicalMatrix xv = LogicalMatrix::basis(k, x);
    const LogicalMatrix cx = stp(mn, xv);
    if (stp(mc, stp(xv, cx)).col(1) != k) return std::nullopt;
    for (int y = 1; y <= k; ++y) {
      const LogicalMatrix yv = LogicalMatrix::basis(k, y);
      if (stp(mc, stp(xv, yv)).col(1) == k && stp(mc, stp(yv, cx)).col(1) != y)
        return std::nullopt;
    }
  }
  return mn;
}

AxiomChecks matrix_route(const StructureTriple& a) {
  AxiomChecks out;
  const int k = a.k;
  if (k == 1) {
    // Forced one-element algebra; every axiom degenerates to 1 = 1.
    out = AxiomChecks{true, true, true, true, true, true, true,
                      false, false, false, false, false, false};
    if (a.comp) {
      out.dic = out.de_morgan = out.kleene = out.pseudo = out.stone = out.boolean_ = true;
    }
    return out;
  }
  const LogicalMatrix& mc = a.meet;
  const LogicalMatrix& md = a.join;
  const LogicalMatrix ik = LogicalMatrix::identity(k);
  const LogicalMatrix ikk = LogicalMatrix::identity(k * k);
  const LogicalMatrix w = swap_matrix(k, k);
  const LogicalMatrix pr = power_reducing(k);
  const LogicalMatrix top = LogicalMatrix::basis(k, 1);
  const LogicalMatrix bot = LogicalMatrix::basis(k, k);

  out.meet_associative = stp(mc, mc) == stp(mc, kron(ik, mc));
  out.join_associative = stp(md, md) == stp(md, kron(ik, md));
  out.meet_commutative = mc == stp(mc, w);
  out.join_commutative = md == stp(md, w);

  const LogicalMatrix absorb = first_factor_projector(k, k);
  out.absorption = stp(stp(mc, kron(ik, md)), pr) == absorb &&
                   stp(stp(md, kron(ik, mc)), pr) == absorb;

  auto distributes = [&](const LogicalMatrix& f, const LogicalMatrix& g) {
    const LogicalMatrix lhs = stp(f, kron(ik, g));
    const LogicalMatrix rhs =
        stp(stp(stp(stp(g, f), kron(ikk, f)), kron(ik, w)), pr);
    return lhs == rhs;
  };
  out.distributive = distributes(mc, md) && distributes(md, mc);

  out.bounded = stp(mc, top) == ik && stp(md, bot) == ik;

  if (a.comp) {
    const LogicalMatrix& mn = *a.comp;
    out.dic = mn.col(1) == k && mn.col(k) == 1 && stp(mn, mn) == ik;
    out.de_morgan = stp(mn, md) == stp(mc, kron(mn, mn)) &&
                    stp(mn, mc) == stp(md, kron(mn, mn));
    const LogicalMatrix p = stp(stp(mc, kron(ik, mn)), pr);  // x -> x meet x'
    const LogicalMatrix q = stp(stp(md, kron(ik, mn)), pr);  // x -> x join x'
    out.kleene = out.de_morgan &&
                 stp(stp(mc, p), kron(ik, q)) == stp(p, first_factor_projector(k, k));
    const auto cand = pseudo_candidate_matrix(a);
    out.pseudo = cand && *cand == mn;
    const LogicalMatrix all_top(k, std::vector<int>(static_cast<std::size_t>(k), 1));
    const LogicalMatrix all_bot(k, std::vector<int>(static_cast<std::size_t>(k), k));
    out.stone = out.pseudo && stp(stp(md, kron(mn, stp(mn, mn))), pr) == all_top;
    out.boolean_ = q == all_top && p == all_bot;
  }
  return out;
}

// ---- pointwise route ----------------------------------------------------
// Direct table lookups over all element tuples; never touches the STP kernel.

std::optional<std::vector<int>> pseudo_candidate_pointwise(const StructureTriple& a) {
  const int k = a.k;
  auto m = [&](int x, int y) { return a.meet.col((x - 1) * k + y); };
  auto d = [&](int x, int y) { return a.join.col((x - 1) * k + y); };
  std::vector<int> cand;
  cand.reserve(static_cast<std::size_t>(k));
  for (int x = 1; x <= k; ++x) {
    int acc = k;
    bool first = true;
    for (int j = 1; j <= k; ++j) {
      if (m(x, j) != k) continue;
      acc = first ? j : d(acc, j);
      first = false;
    }
    cand.push_back(acc);
  }
  for (int x = 1; x <= k; ++x) {
    const int cx = cand[static_cast<std::size_t>(x - 1)];
    if (m(x, cx) != k) return std::nullopt;
    for (int y = 1; y <= k; ++y)
      if (m(x, y) == k && m(y, cx) != y) return std::nullopt;
  }
  return cand;
}

AxiomChecks pointwise_route(const StructureTriple& a) {
  AxiomChecks out;
  const int k = a.k;
  auto m = [&](int x, int y) { return a.meet.col((x - 1) * k + y); };
  auto d = [&](int x, int y) { return a.join.col((x - 1) * k + y); };

  out.meet_associative = out.join_associative = true;
  out.meet_commutative = out.join_commutative = true;
  out.absorption = out.distributive = out.bounded = true;
  for (int x = 1; x <= k; ++x) {
    // first block of meet and last block of join are identities
    out.bounded = out.bounded && m(1, x) == x && d(k, x) == x;
    for (int y = 1; y <= k; ++y) {
      out.meet_commutative = out.meet_commutative && m(x, y) == m(y, x);
      out.join_commutative = out.join_commutative && d(x, y) == d(y, x);
      out.absorption = out.absorption && m(x, d(x, y)) == x && d(x, m(x, y)) == x;
      for (int z = 1; z <= k; ++z) {
        out.meet_associative = out.meet_associative && m(m(x, y), z) == m(x, m(y, z));
        out.join_associative = out.join_associative && d(d(x, y), z) == d(x, d(y, z));
        out.distributive = out.distributive &&
                           m(x, d(y, z)) == d(m(x, y), m(x, z)) &&
                           d(x, m(y, z)) == m(d(x, y), d(x, z));
      }
    }
  }

  if (a.comp) {
    auto n = [&](int x) { return a.comp->col(x); };
    out.dic = n(1) == k && n(k) == 1;
    out.de_morgan = true;
    bool kleene_order = true;
    out.boolean_ = true;
    bool stone_eq = true;
    for (int x = 1; x <= k; ++x) {
      out.dic = out.dic && n(n(x)) == x;
      out.boolean_ = out.boolean_ && d(x, n(x)) == 1 && m(x, n(x)) == k;
      stone_eq = stone_eq && d(n(x), n(n(x))) == 1;
      for (int y = 1; y <= k; ++y) {
        out.de_morgan = out.de_morgan && n(d(x, y)) == m(n(x), n(y)) &&
                        n(m(x, y)) == d(n(x), n(y));
        kleene_order = kleene_order && m(m(x, n(x)), d(y, n(y))) == m(x, n(x));
      }
    }
    out.kleene = out.de_morgan && kleene_order;
    const auto cand = pseudo_candidate_pointwise(a);
    out.pseudo = cand && *cand == a.comp->col_indices();
    out.stone = out.pseudo && stone_eq;
  }
  return out;
}

}  // namespace

AxiomChecks check_matrix(const StructureTriple& a) {
  validate(a);
  return matrix_route(a);
}

AxiomChecks check_pointwise(const StructureTriple& a) {
  validate(a);
  return pointwise_route(a);
}

void set_cross_checking(bool on) { g_cross_checking.store(on); }
bool cross_checking() { return g_cross_checking.load(); }

AxiomChecks check(const StructureTriple& a) {
  const AxiomChecks m = check_matrix(a);
  if (cross_checking()) {
    const AxiomChecks p = check_pointwise(a);
    if (!(m == p))
      throw std::logic_error(
          "axiom check: matrix-identity and pointwise verdicts disagree");
  }
  return m;
}

bool is_lattice(const StructureTriple& a) { return check(a).lattice(); }
bool is_distributive(const StructureTriple& a) { return check(a).distributive; }
bool is_bounded(const StructureTriple& a) { return check(a).bounded; }

std::optional<LogicalMatrix> pseudo_complement(const StructureTriple& a) {
  validate(a);
  if (a.k == 1) return LogicalMatrix::identity(1);
  const auto mat = pseudo_candidate_matrix(a);
  if (cross_checking()) {
    const auto pw = pseudo_candidate_pointwise(a);
    const bool same = mat.has_value() == pw.has_value() &&
                      (!mat || mat->col_indices() == *pw);
    if (!same)
      throw std::logic_error(
          "pseudo_complement: matrix and pointwise constructions disagree");
  }
  return mat;
}

AlgebraReport build_report(const StructureTriple& a) {
  const AxiomChecks c = check(a);
  AlgebraReport r;
  r.k = a.k;
  r.meet_commutative = c.meet_commutative;
  r.meet_associative = c.meet_associative;
  r.join_commutative = c.join_commutative;
  r.join_associative = c.join_associative;
  r.absorption = c.absorption;
  r.lattice = c.lattice();
  r.distributive = c.distributive;
  r.bounded = c.bounded;
  r.has_complement = a.comp.has_value();
  if (a.comp) {
    r.free_complement = true;
    r.dic = c.dic;
    r.de_morgan = c.de_morgan;
    r.kleene = c.kleene;
    r.pseudo = c.pseudo;
    r.stone = c.stone;
    r.boolean_algebra = c.boolean_;
  }
  return r;
}

AlgebraReport classify_complement(const StructureTriple& a) {
  if (!a.comp) throw std::invalid_argument("classify_complement: comp missing");
  return build_report(a);
}

}  // namespace btk
