// btk - exact-arithmetic toolkit for finite bounded lattices and their
// complement algebras: catalog generation, axiom checking, isomorphism
// search, product/decomposition, and operation synthesis from the unary
// generator set.

#include "btk/algebra.hpp"
#include "btk/axioms.hpp"
#include "btk/enumeration.hpp"
#include "btk/morphism.hpp"
#include "btk/prodec.hpp"
#include "btk/unigen.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::ordered_json;

// Exit codes: 0 success, 1 negative mathematical result, 2 input error,
// 3 usage error.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kUsageError = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

btk::StructureTriple load_algebra(const std::string& path) {
  try {
    return btk::parse_algebra(read_file(path));
  } catch (const btk::ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot open for writing");
  out << content;
}

ordered_json algebra_json(const btk::StructureTriple& a) {
  return ordered_json::parse(btk::emit_algebra(a));
}

ordered_json report_json(const btk::AlgebraReport& r) {
  return ordered_json::parse(btk::report_to_json(r));
}

void print_json(const ordered_json& doc, bool pretty) {
  if (pretty) std::cout << doc.dump(2) << "\n";
  else std::cout << doc.dump() << "\n";
}

int effective_max_k() {
  if (const char* env = std::getenv("BTK_KMAX")) {
    const int v = std::atoi(env);
    if (v >= 2) return v;
  }
  return btk::default_max_k;
}

std::vector<btk::ComplementClass> parse_classes(const std::vector<std::string>& names) {
  std::vector<btk::ComplementClass> out;
  for (const std::string& joined : names) {
    std::stringstream ss(joined);
    std::string part;
    while (std::getline(ss, part, '+')) {
      const auto cls = btk::complement_class_from_name(part);
      if (!cls) throw UsageError("unknown complement class \"" + part + "\"");
      out.push_back(*cls);
    }
  }
  return out;
}

std::string csv_summary(const std::vector<btk::StructureTriple>& algebras) {
  std::ostringstream os;
  os << "id,k,lattice,distributive,bounded,comp,free,dic,de_morgan,kleene,pseudo,stone,"
        "boolean\n";
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    const btk::AlgebraReport r = btk::build_report(algebras[i]);
    os << (i + 1) << ',' << r.k << ',' << r.lattice << ',' << r.distributive << ','
       << r.bounded << ',' << r.has_complement << ',' << r.free_complement << ',' << r.dic
       << ',' << r.de_morgan << ',' << r.kleene << ',' << r.pseudo << ',' << r.stone << ','
       << r.boolean_algebra << '\n';
  }
  return os.str();
}

std::vector<btk::StructureTriple> load_catalog(const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<btk::StructureTriple> out;
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back(load_algebra(f.string()));
    return out;
  }
  const std::string text = read_file(path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
  if (doc.is_array()) {
    for (const auto& item : doc) {
      try {
        out.push_back(btk::parse_algebra(item.dump()));
      } catch (const btk::ParseError& e) {
        throw InputError(path + ": " + e.what());
      }
    }
    return out;
  }
  out.push_back(load_algebra(path));
  return out;
}

// ---- subcommands ---------------------------------------------------------

int cmd_check(const std::string& path, bool pretty) {
  const btk::StructureTriple a = load_algebra(path);
  print_json(report_json(btk::build_report(a)), pretty);
  return kOk;
}

int cmd_enumerate(int k, const std::string& lattice_class,
                  const std::vector<std::string>& complement_classes, int lattice_id,
                  const std::string& out_path, const std::string& csv_path, bool pretty) {
  if (lattice_class != "bounded-distributive" && lattice_class != "bounded")
    throw UsageError("unsupported --lattice value \"" + lattice_class + "\"");
  const bool distributive = lattice_class == "bounded-distributive";
  const int max_k = effective_max_k();
  std::vector<btk::StructureTriple> items;

  try {
    if (!complement_classes.empty()) {
      const auto classes = parse_classes(complement_classes);
      if (lattice_id > 0) {
        const auto lattices = btk::enumerate_lattices(k, distributive, max_k);
        if (static_cast<std::size_t>(lattice_id) > lattices.size())
          throw UsageError("--lattice-id out of range; catalog has " +
                           std::to_string(lattices.size()) + " lattices");
        btk::StructureTriple lattice = lattices[static_cast<std::size_t>(lattice_id - 1)];
        // complements of the first class, filtered by the rest
        std::vector<btk::LogicalMatrix> comps;
        btk::for_each_complement(lattice, classes.front(),
                                 [&](const btk::LogicalMatrix& m) { comps.push_back(m); });
        for (const auto& m : comps) {
          btk::StructureTriple bta = lattice;
          bta.comp = m;
          bool all = true;
          if (classes.size() > 1) {
            const auto c = btk::check(bta);
            for (std::size_t i = 1; i < classes.size(); ++i) {
              switch (classes[i]) {
                case btk::ComplementClass::free: break;
                case btk::ComplementClass::dic: all = all && c.dic; break;
                case btk::ComplementClass::de_morgan: all = all && c.de_morgan; break;
                case btk::ComplementClass::kleene: all = all && c.kleene; break;
                case btk::ComplementClass::pseudo: all = all && c.pseudo; break;
                case btk::ComplementClass::stone: all = all && c.stone; break;
                case btk::ComplementClass::boolean_: all = all && c.boolean_; break;
              }
            }
          }
          if (all) items.push_back(std::move(bta));
        }
      } else {
        if (!distributive)
          throw UsageError(
              "--complement without --lattice-id pairs complements with the "
              "bounded-distributive catalog; --lattice bounded needs --lattice-id");
        items = btk::enumerate_btas(k, classes, max_k);
      }
    } else {
      items = btk::enumerate_lattices(k, distributive, max_k);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  ordered_json arr = ordered_json::array();
  for (const auto& a : items) arr.push_back(algebra_json(a));
  if (!out_path.empty()) write_file(out_path, arr.dump() + "\n");
  if (!csv_path.empty()) write_file(csv_path, csv_summary(items));
  if (pretty && out_path.empty()) print_json(arr, true);
  std::cout << items.size() << "\n";
  return kOk;
}

int cmd_iso(const std::string& path_a, const std::string& path_b, bool fix_bounds,
            bool pretty) {
  const btk::StructureTriple a = load_algebra(path_a);
  const btk::StructureTriple b = load_algebra(path_b);
  std::vector<btk::Morphism> isos;
  try {
    isos = btk::find_isomorphisms(a, b, fix_bounds);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  ordered_json doc;
  doc["count"] = isos.size();
  ordered_json arr = ordered_json::array();
  for (const auto& m : isos) {
    ordered_json entry;
    entry["source_k"] = m.source_k;
    entry["target_k"] = m.target_k;
    entry["map"] = m.map.col_indices();
    entry["kind"] = std::string(btk::to_string(m.kind));
    arr.push_back(entry);
  }
  doc["isomorphisms"] = arr;
  print_json(doc, pretty);
  return isos.empty() ? kNegative : kOk;
}

int cmd_classify(const std::string& path, bool fix_bounds, bool pretty) {
  const auto algebras = load_catalog(path);
  std::vector<std::vector<std::size_t>> classes;
  try {
    classes = btk::iso_classes(algebras, fix_bounds);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  ordered_json doc;
  doc["count"] = algebras.size();
  ordered_json arr = ordered_json::array();
  for (const auto& group : classes) {
    ordered_json ids = ordered_json::array();
    for (std::size_t i : group) ids.push_back(i + 1);  // 1-based ids
    arr.push_back(ids);
  }
  doc["classes"] = arr;
  print_json(doc, pretty);
  return kOk;
}

int cmd_product(const std::string& path_a, const std::string& path_b,
                const std::string& out_path, bool pretty) {
  const btk::StructureTriple a = load_algebra(path_a);
  const btk::StructureTriple b = load_algebra(path_b);
  btk::StructureTriple p;
  try {
    p = btk::product(a, b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string text = btk::emit_algebra(p);
  if (!out_path.empty()) write_file(out_path, text + "\n");
  else print_json(ordered_json::parse(text), pretty);
  return kOk;
}

int cmd_decompose(const std::string& path, int p, int q, bool auto_scan, bool up_to_iso,
                  const std::string& out_path, bool pretty) {
  const btk::StructureTriple a = load_algebra(path);
  ordered_json doc;
  bool found = false;

  auto fill = [&](int fp, int fq, const btk::StructureTriple& f1,
                  const btk::StructureTriple& f2,
                  const std::optional<btk::LogicalMatrix>& relabeling) {
    doc["decomposable"] = true;
    doc["p"] = fp;
    doc["q"] = fq;
    doc["factors"] = ordered_json::array({algebra_json(f1), algebra_json(f2)});
    if (relabeling) doc["relabeling"] = relabeling->col_indices();
    found = true;
  };

  try {
    if (up_to_iso) {
      if (const auto r = btk::decompose_up_to_iso(a))
        fill(r->p, r->q, r->first, r->second, r->relabeling);
    } else if (auto_scan) {
      for (int dp = 2; dp <= a.k / 2 && !found; ++dp) {
        if (a.k % dp != 0 || a.k / dp < 2) continue;
        if (const auto r = btk::decompose(a, dp, a.k / dp))
          fill(dp, a.k / dp, r->first, r->second, std::nullopt);
      }
    } else {
      if (p < 2 || q < 2 || p * q != a.k)
        throw UsageError("decompose: need --p and --q with p*q = k and p,q >= 2 "
                         "(or --auto / --up-to-iso)");
      if (const auto r = btk::decompose(a, p, q)) fill(p, q, r->first, r->second, std::nullopt);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (!found) doc["decomposable"] = false;
  if (!out_path.empty()) write_file(out_path, doc.dump() + "\n");
  else print_json(doc, pretty);
  return found ? kOk : kNegative;
}

int cmd_synthesize(const std::string& path, bool expand, bool pretty) {
  const std::string text = read_file(path);
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("k") || !doc.contains("arity") ||
      !doc.contains("table"))
    throw InputError(path + ": expected an object with k, arity, table");
  const int k = doc["k"].get<int>();
  const int arity = doc["arity"].get<int>();
  if (k < 1 || arity < 1) throw InputError(path + ": k and arity must be >= 1");
  std::vector<int> table;
  for (const auto& e : doc["table"]) {
    if (!e.is_number_integer()) throw InputError(path + ": table entries must be integers");
    table.push_back(e.get<int>());
  }
  btk::ExprPtr tree;
  try {
    btk::LogicalMatrix f(k, table);
    tree = btk::synthesize(f, arity);
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
  if (expand) tree = btk::expand_words(tree);
  (void)pretty;
  std::cout << btk::to_sexpr(*tree) << "\n";
  return kOk;
}

btk::LogicalMatrix parse_delta(const std::string& text) {
  // d<rows>[i1,i2,...]
  if (text.size() < 4 || (text[0] != 'd' && text[0] != 'D'))
    throw InputError("delta notation must look like d4[1,3,2,4]");
  const auto open = text.find('[');
  const auto close = text.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw InputError("delta notation must look like d4[1,3,2,4]");
  const int rows = std::atoi(text.substr(1, open - 1).c_str());
  std::vector<int> idx;
  std::stringstream ss(text.substr(open + 1, close - open - 1));
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) idx.push_back(std::atoi(part.c_str()));
  }
  try {
    return btk::LogicalMatrix(rows, idx);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad delta notation: ") + e.what());
  }
}

ordered_json logical_json(const btk::LogicalMatrix& m) {
  ordered_json doc;
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  doc["delta"] = m.col_indices();
  return doc;
}

int cmd_stp(const std::string& op, const std::vector<std::string>& args, bool pretty) {
  btk::LogicalMatrix result;
  if (op == "stp" || op == "kron" || op == "khatri-rao") {
    if (args.size() != 2) throw UsageError(op + " takes two delta-notation operands");
    const auto a = parse_delta(args[0]);
    const auto b = parse_delta(args[1]);
    try {
      if (op == "stp") result = btk::stp(a, b);
      else if (op == "kron") result = btk::kron(a, b);
      else result = btk::khatri_rao(a, b);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (op == "swap" || op == "pr") {
    try {
      if (op == "swap") {
        if (args.size() != 2) throw UsageError("swap takes m and n");
        result = btk::swap_matrix(std::atoi(args[0].c_str()), std::atoi(args[1].c_str()));
      } else {
        if (args.size() != 1) throw UsageError("pr takes k");
        result = btk::power_reducing(std::atoi(args[0].c_str()));
      }
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    throw UsageError("unknown operation \"" + op + "\" (use stp, kron, khatri-rao, swap, pr)");
  }
  if (pretty) std::cout << result.to_delta_string() << "\n";
  else print_json(logical_json(result), false);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact semi-tensor-product toolkit for finite bounded lattices "
               "and Boolean-type algebras"};
  app.require_subcommand(1);
  bool pretty = false;
  bool oracle = true;
  app.add_flag("--pretty,!--compact", pretty, "human-readable output");
  app.add_flag("--oracle,!--no-oracle", oracle,
               "cross-check every verdict with the brute-force route (default on)");

  auto* check = app.add_subcommand("check", "classify an algebra file");
  std::string check_path;
  check->add_option("path", check_path)->required();

  auto* enumerate = app.add_subcommand("enumerate", "generate catalogs");
  int en_k = 0;
  std::string en_lattice = "bounded-distributive";
  std::vector<std::string> en_comp;
  int en_lattice_id = 0;
  std::string en_out, en_csv;
  enumerate->add_option("--k", en_k, "carrier size")->required();
  enumerate->add_option("--lattice", en_lattice,
                        "lattice class: bounded-distributive (default) or bounded");
  enumerate->add_option("--complement", en_comp,
                        "complement class(es); join with + for a conjunction");
  enumerate->add_option("--lattice-id", en_lattice_id,
                        "restrict complements to one catalog lattice (1-based)");
  enumerate->add_option("--out", en_out, "write the catalog JSON here");
  enumerate->add_option("--csv", en_csv, "write a CSV summary here");

  auto* iso = app.add_subcommand("iso", "isomorphisms between two algebra files");
  std::string iso_a, iso_b;
  bool iso_fix_bounds = true;
  iso->add_option("pathA", iso_a)->required();
  iso->add_option("pathB", iso_b)->required();
  iso->add_flag("--fix-bounds,!--no-fix-bounds", iso_fix_bounds,
                "only permutations fixing top and bottom (default on)");

  auto* classify = app.add_subcommand("classify", "isomorphism classes of a catalog");
  std::string classify_path;
  bool classify_fix_bounds = true;
  classify->add_option("path", classify_path, "catalog JSON array or directory of files")
      ->required();
  classify->add_flag("--fix-bounds,!--no-fix-bounds", classify_fix_bounds);

  auto* prod = app.add_subcommand("product", "product of two algebra files");
  std::string prod_a, prod_b, prod_out;
  prod->add_option("pathA", prod_a)->required();
  prod->add_option("pathB", prod_b)->required();
  prod->add_option("--out", prod_out);

  auto* dec = app.add_subcommand("decompose", "factor an algebra file");
  std::string dec_path, dec_out;
  int dec_p = 0, dec_q = 0;
  bool dec_auto = false, dec_up_to_iso = false;
  dec->add_option("path", dec_path)->required();
  dec->add_option("--p", dec_p);
  dec->add_option("--q", dec_q);
  dec->add_flag("--auto", dec_auto, "scan divisor pairs");
  dec->add_flag("--up-to-iso", dec_up_to_iso, "also search bounds-fixing relabelings");
  dec->add_option("--out", dec_out);

  auto* synth = app.add_subcommand("synthesize", "expression for a finite operation");
  std::string synth_path;
  bool synth_expand = false;
  synth->add_option("path", synth_path, "JSON with k, arity, table")->required();
  synth->add_flag("--expand", synth_expand, "expand unary maps into generator words");

  auto* stp_cmd = app.add_subcommand("stp", "matrix calculator on delta notation");
  std::string stp_op;
  std::vector<std::string> stp_args;
  stp_cmd->add_option("op", stp_op, "stp | kron | khatri-rao | swap | pr")->required();
  stp_cmd->add_option("args", stp_args, "operands");

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsageError;
  }

  btk::set_cross_checking(oracle);
  try {
    if (*check) return cmd_check(check_path, pretty);
    if (*enumerate)
      return cmd_enumerate(en_k, en_lattice, en_comp, en_lattice_id, en_out, en_csv, pretty);
    if (*iso) return cmd_iso(iso_a, iso_b, iso_fix_bounds, pretty);
    if (*classify) return cmd_classify(classify_path, classify_fix_bounds, pretty);
    if (*prod) return cmd_product(prod_a, prod_b, prod_out, pretty);
    if (*dec)
      return cmd_decompose(dec_path, dec_p, dec_q, dec_auto, dec_up_to_iso, dec_out, pretty);
    if (*synth) return cmd_synthesize(synth_path, synth_expand, pretty);
    if (*stp_cmd) return cmd_stp(stp_op, stp_args, pretty);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
