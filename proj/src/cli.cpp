#include "cyclohecke/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "cyclohecke/canon.hpp"
#include "cyclohecke/fock.hpp"
#include "cyclohecke/heckealg.hpp"
#include "cyclohecke/multiseg.hpp"
#include "cyclohecke/specht.hpp"
#include "cyclohecke/suites.hpp"

namespace cyclohecke::cli {

namespace {

using Json = nlohmann::ordered_json;

class ResourceCap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> m;
  std::optional<int> n;
  std::optional<std::string> r;
  std::optional<std::string> gamma;
  std::optional<std::string> q;
  std::optional<std::string> v;
  std::optional<std::string> lambda;
  std::optional<std::string> word;
  std::optional<int> enumerate;
  std::optional<int> window;
  int labels = 1;
  bool matrix = false;
  bool list = false;
  std::string format = "json";
  std::optional<std::string> out;
  int threads = 1;
  std::uint64_t seed = 1;
  std::optional<int> max_n;
  long max_dim = 2000;
};

// ---------------------------------------------------------------------------
// Argument decoding

std::vector<std::string> split_list(const std::string& text) {
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }),
             body.end());
  std::vector<std::string> items;
  std::stringstream ss(body);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) throw std::invalid_argument("empty entry in list \"" + text + "\"");
    items.push_back(item);
  }
  return items;
}

long parse_long(const std::string& text) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: \"" + text + "\"");
  }
  if (used != text.size()) throw std::invalid_argument("not an integer: \"" + text + "\"");
  return value;
}

Modulus modulus(const Options& o) {
  if (!o.r) throw std::invalid_argument("this subcommand needs -r");
  const Modulus r = parse_modulus(*o.r);
  if (r.is_finite() && r.value() < 2) throw std::invalid_argument("r must be at least 2 or inf");
  return r;
}

int finite_r(const Options& o) {
  const Modulus r = modulus(o);
  if (!r.is_finite()) throw std::invalid_argument("this subcommand needs a finite r");
  return r.value();
}

std::vector<long> gamma(const Options& o, int m) {
  if (!o.gamma) return std::vector<long>(static_cast<std::size_t>(m), 0);
  std::vector<long> g;
  for (const auto& item : split_list(*o.gamma)) g.push_back(parse_long(item));
  if (static_cast<int>(g.size()) != m) throw std::invalid_argument("--gamma must have exactly m entries");
  return g;
}

int level(const Options& o) {
  if (o.m) {
    if (*o.m < 1) throw std::invalid_argument("m must be at least 1");
    return *o.m;
  }
  if (o.gamma) return static_cast<int>(split_list(*o.gamma).size());
  if (o.v) return static_cast<int>(split_list(*o.v).size());
  if (o.lambda && o.lambda->rfind("[[", 0) == 0) return parse_multipartition(*o.lambda).level();
  return 1;
}

ResidueConfig residue_config(const Options& o) {
  const int m = level(o);
  return ResidueConfig::make(modulus(o), gamma(o, m));
}

// "[[2],[1]]" for any level, or "[2,1]" as a level-one shorthand.
Multipartition lambda_arg(const std::string& text) {
  if (text.rfind("[[", 0) == 0) return parse_multipartition(text);
  return parse_multipartition("[" + text + "]");
}

std::optional<Multipartition> lambda(const Options& o, int m) {
  if (!o.lambda) return std::nullopt;
  Multipartition lam = lambda_arg(*o.lambda);
  if (lam.level() != m) throw std::invalid_argument("--lambda has the wrong number of components");
  return lam;
}

int size_n(const Options& o, int m) {
  if (o.n) {
    if (*o.n < 0) throw std::invalid_argument("n must be nonnegative");
    return *o.n;
  }
  if (auto lam = lambda(o, m)) return lam->size();
  throw std::invalid_argument("this subcommand needs -n");
}

void cap_n(const Options& o, int n, int fallback, const std::string& what) {
  const int limit = o.max_n.value_or(fallback);
  if (n > limit) {
    throw ResourceCap(what + " with n = " + std::to_string(n) + " exceeds the cap " + std::to_string(limit) +
                      " (raise with --max-n)");
  }
}

// q from --q, otherwise ζ_r; v from --v, otherwise v_i = q^{γ_i}.
HeckeParams hecke_params(const Options& o) {
  const int m = level(o);
  HeckeParams p;
  p.m = m;
  p.n = size_n(o, m);
  if (o.q) {
    p.q = parse_scalar(*o.q);
  } else if (o.r) {
    const Modulus r = modulus(o);
    if (!r.is_finite()) throw std::invalid_argument("r = inf needs an explicit --q");
    p.q = root_of_unity(r.value(), 1);
  } else {
    throw std::invalid_argument("give --q or -r");
  }
  if (o.v) {
    for (const auto& item : split_list(*o.v)) p.v.push_back(parse_scalar(item));
  } else {
    for (long g : gamma(o, m)) p.v.push_back(p.q.pow(g));
  }
  p = p.validated();
  long dim = static_cast<long>(factorial(std::min(p.n, 12)));
  for (int k = 0; k < p.n && dim <= o.max_dim; ++k) dim *= m;
  if (p.n > 12 || dim > o.max_dim) {
    throw ResourceCap("algebra dimension m^n n! exceeds the cap " + std::to_string(o.max_dim) + " (raise with --max-dim)");
  }
  return p;
}

// ---------------------------------------------------------------------------
// JSON helpers

Json number(const mpz_class& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json params_json(const HeckeParams& p) {
  Json v = Json::array();
  for (const auto& x : p.v) v.push_back(x.to_string());
  return Json{{"m", p.m}, {"n", p.n}, {"q", p.q.to_string()}, {"v", v}};
}

Json config_json(const ResidueConfig& c) {
  Json g = Json::array();
  for (const auto& x : c.gamma) g.push_back(x.value);
  return Json{{"r", c.modulus.to_string()}, {"gamma", g}};
}

Json matrix_json(const ScalarMatrix& g) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < g.cols(); ++j) row.push_back(g(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json fock_json(const FockVector& x) {
  Json terms = Json::array();
  for (const auto& [mu, c] : x.terms()) terms.push_back(Json{{"lambda", mu.to_string()}, {"coefficient", c.to_string()}});
  return terms;
}

Json suite_json(const SuiteResult& s) {
  return Json{{"suite", s.name}, {"checks", s.checks}, {"failures", s.failures}, {"first_failure", s.first_failure}};
}

// ---------------------------------------------------------------------------
// Rendering

bool is_matrix(const Json& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& row) {
           return row.is_array() && std::none_of(row.begin(), row.end(), [](const Json& x) { return x.is_structured(); });
         });
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render_table(const Json& j, const std::string& indent, std::ostream& os) {
  for (const auto& [key, value] : j.items()) {
    if (!value.is_structured()) {
      os << indent << key << ": " << scalar_text(value) << "\n";
    } else if (is_matrix(value)) {
      std::size_t width = 0;
      for (const auto& row : value) {
        for (const auto& x : row) width = std::max(width, scalar_text(x).size());
      }
      os << indent << key << ":\n";
      for (const auto& row : value) {
        os << indent << " ";
        for (const auto& x : row) {
          const std::string s = scalar_text(x);
          os << " " << std::string(width - s.size(), ' ') << s;
        }
        os << "\n";
      }
    } else if (value.is_array() && std::none_of(value.begin(), value.end(), [](const Json& x) { return x.is_structured(); })) {
      os << indent << key << ":";
      for (const auto& x : value) os << " " << scalar_text(x);
      os << "\n";
    } else if (value.is_array()) {
      os << indent << key << ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          render_table(item, indent + "  ", os);
        } else {
          os << indent << "  " << item.dump() << "\n";
        }
        os << "\n";
      }
    } else {
      os << indent << key << ":\n";
      render_table(value, indent + "  ", os);
    }
  }
}

std::string tex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '_': out += "\\_"; break;
      case '^': out += "\\^{}"; break;
      case '&': out += "\\&"; break;
      case '#': out += "\\#"; break;
      case '%': out += "\\%"; break;
      case '{': out += "\\{"; break;
      case '}': out += "\\}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += c;
    }
  }
  return out;
}

void render_tex(const Json& j, std::ostream& os) {
  os << "\\begin{description}\n";
  for (const auto& [key, value] : j.items()) {
    os << "\\item[" << tex_escape(key) << "] ";
    if (!value.is_structured()) {
      os << "\\texttt{" << tex_escape(scalar_text(value)) << "}\n";
    } else if (is_matrix(value)) {
      os << "$\\begin{pmatrix}\n";
      for (const auto& row : value) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " & " : "") << "\\texttt{" << tex_escape(scalar_text(row[k])) << "}";
        os << " \\\\\n";
      }
      os << "\\end{pmatrix}$\n";
    } else if (value.is_array() && std::none_of(value.begin(), value.end(), [](const Json& x) { return x.is_structured(); })) {
      for (std::size_t k = 0; k < value.size(); ++k) os << (k ? ", " : "") << "\\texttt{" << tex_escape(scalar_text(value[k])) << "}";
      os << "\n";
    } else if (value.is_array()) {
      os << "\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          render_tex(item, os);
        } else {
          os << "\\texttt{" << tex_escape(item.dump()) << "}\n";
        }
      }
    } else {
      os << "\n";
      render_tex(value, os);
    }
  }
  os << "\\end{description}\n";
}

std::string render(const Json& j, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << j.dump(2) << "\n";
  } else if (format == "table") {
    render_table(j, "", os);
  } else {
    render_tex(j, os);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Subcommands. Each returns its output text and an exit code.

struct Outcome {
  std::string text;
  int code = ok;
};

Outcome with_format(const Json& j, const Options& o, bool passed = true) {
  return {render(j, o.format), passed ? ok : invariant_violation};
}

Outcome cmd_semisimple(const Options& o) {
  const HeckeParams p = hecke_params(o);
  const auto report = is_semisimple(p);
  Json j = params_json(p);
  j["semisimple"] = report.semisimple;
  j["witness"] = report.witness ? Json(*report.witness) : Json(nullptr);
  return with_format(j, o);
}

Outcome cmd_gram(const Options& o) {
  const HeckeParams p = hecke_params(o);
  const CellularTable table(make_algebra(p));
  std::vector<Multipartition> shapes = table.shapes();
  if (auto lam = lambda(o, p.m)) shapes = {*lam};
  std::vector<ScalarMatrix> grams(shapes.size());
  std::vector<int> ranks(shapes.size(), 0);
  parallel_for(shapes.size(), o.threads, [&](std::size_t k) {
    grams[k] = gram(table, shapes[k]);
    ranks[k] = rank<Scalar>(grams[k]);
  });
  Json j = params_json(p);
  Json list = Json::array();
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    list.push_back(Json{{"lambda", shapes[k].to_string()},
                        {"dimension", grams[k].rows()},
                        {"rank", ranks[k]},
                        {"matrix", matrix_json(grams[k])}});
  }
  j["gram"] = list;
  return with_format(j, o);
}

Outcome cmd_simples(const Options& o) {
  const HeckeParams p = hecke_params(o);
  const CellularTable table(make_algebra(p));
  const auto& shapes = table.shapes();
  std::vector<int> dims(shapes.size(), 0);
  parallel_for(shapes.size(), o.threads, [&](std::size_t k) { dims[k] = dim_simple(table, shapes[k]); });
  Json j = params_json(p);
  Json list = Json::array();
  for (std::size_t k = 0; k < shapes.size(); ++k) {
    if (dims[k] > 0) list.push_back(Json{{"lambda", shapes[k].to_string()}, {"dimension", dims[k]}});
  }
  j["count"] = list.size();
  j["simples"] = list;
  return with_format(j, o);
}

Outcome cmd_kleshchev(const Options& o) {
  const ResidueConfig c = residue_config(o);
  Json j = config_json(c);
  if (auto lam = lambda(o, c.level())) {
    cap_n(o, lam->size(), 12, "kleshchev");
    j["lambda"] = lam->to_string();
    j["kleshchev"] = is_kleshchev(*lam, c);
    return with_format(j, o);
  }
  const int n = o.enumerate ? *o.enumerate : size_n(o, c.level());
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  cap_n(o, n, 14, "kleshchev enumeration");
  const auto list = enumerate_kleshchev(c, n);
  j["n"] = n;
  j["count"] = list.size();
  Json items = Json::array();
  for (const auto& lam : list) items.push_back(lam.to_string());
  j["multipartitions"] = items;
  return with_format(j, o);
}

Outcome cmd_crystal(const Options& o) {
  const ResidueConfig c = residue_config(o);
  const int n = size_n(o, c.level());
  cap_n(o, n, 10, "crystal");
  return {crystal_dot(c, n), ok};
}

Outcome cmd_fock_apply(const Options& o) {
  const ResidueConfig c = residue_config(o);
  const Multipartition start = lambda(o, c.level()).value_or(Multipartition::empty(c.level()));
  std::vector<std::string> tokens;
  if (o.word) {
    std::string text = *o.word;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::stringstream ss(text);
    for (std::string t; ss >> t;) tokens.push_back(t);
  }
  cap_n(o, start.size() + static_cast<int>(tokens.size()), 40, "fock-apply");
  FockVector x = FockVector::basis(start);
  Json word = Json::array();
  for (const auto& t : tokens) {
    if (t.size() < 2 || (t[0] != 'e' && t[0] != 'f')) throw std::invalid_argument("word letters look like f0 or e1, got " + t);
    const Residue i = c.reduce(parse_long(t.substr(1)));
    x = t[0] == 'f' ? f_op(x, i, c) : e_op(x, i, c);
    word.push_back(t);
  }
  Json j = config_json(c);
  j["start"] = start.to_string();
  j["word"] = word;
  j["result"] = fock_json(x);
  return with_format(j, o);
}

Json partition_list(const std::vector<Partition>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Outcome cmd_llt(const Options& o) {
  const int r = finite_r(o);
  const int n = size_n(o, 1);
  cap_n(o, n, 14, "llt");
  const auto basis = canonical_basis(n, r);
  Json j{{"n", n}, {"r", r}};
  if (o.matrix) {
    const auto d = decomposition_matrix(basis);
    j["rows"] = partition_list(d.rows);
    j["columns"] = partition_list(d.columns);
    j["entries"] = d.entries;
  } else {
    Json list = Json::array();
    std::vector<Partition> labels(basis.labels.rbegin(), basis.labels.rend());
    for (const auto& lam : labels) list.push_back(Json{{"lambda", lam.to_string()}, {"terms", fock_json(basis.g.at(lam))}});
    j["canonical_basis"] = list;
  }
  return with_format(j, o);
}

Outcome cmd_decomp_check(const Options& o) {
  const int r = finite_r(o);
  const int n = size_n(o, 1);
  cap_n(o, n, 6, "decomp-check");
  const auto rows = dimension_identity(n, r, o.threads);
  bool passed = true;
  Json list = Json::array();
  for (const auto& row : rows) {
    passed = passed && row.lhs == row.rhs;
    list.push_back(Json{{"lambda", row.lambda.to_string()}, {"sum", row.lhs}, {"standard_tableaux", row.rhs}});
  }
  Json j{{"n", n}, {"r", r}, {"rows", list}, {"passed", passed}};
  return with_format(j, o, passed);
}

Outcome cmd_multiseg(const Options& o) {
  const Modulus r = modulus(o);
  const int n = size_n(o, 1);
  cap_n(o, n, o.list ? 10 : 200, o.list ? "multiseg enumeration" : "multiseg");
  const int window = o.window.value_or(0);
  if (!r.is_finite() && window < 1) throw std::invalid_argument("r = inf needs --window W (starts in [0, W))");
  if (o.labels < 1) throw std::invalid_argument("--labels must be positive");
  Json j{{"n", n}, {"r", r.to_string()}};
  if (!r.is_finite()) j["window"] = window;
  j["labels"] = o.labels;
  Json total = Json::array(), ap = Json::array(), family = Json::array();
  for (const auto& x : multisegment_series(n, r, window)) total.push_back(number(x));
  for (const auto& x : aperiodic_series(n, r, window)) ap.push_back(number(x));
  for (int k = 0; k <= n; ++k) family.push_back(number(count_family(k, r, o.labels, window)));
  j["total"] = total;
  j["aperiodic"] = ap;
  j["family"] = family;
  if (o.list) {
    Json list = Json::array();
    for (const auto& ms : enumerate_multisegments(n, r, window)) {
      list.push_back(Json{{"multisegment", ms.to_string()}, {"aperiodic", is_aperiodic(ms, r)}});
    }
    j["multisegments"] = list;
  }
  return with_format(j, o);
}

Outcome cmd_selftest(const Options& o) {
  const int t = o.threads;
  std::vector<SuiteResult> results;
  results.push_back(relation_suite(3, 3, {1, 4, 6}, o.seed));
  results.push_back(basis_suite(2, 3, o.seed));
  results.push_back(trace_suite(2, 3, o.seed));
  results.push_back(semisimplicity_suite(semisimplicity_grid(), t));
  results.push_back(simple_heads_suite(kleshchev_grid(), 3, t));
  results.push_back(llt_suite({2, 3}, 5, 3, t));
  results.push_back(crystal_suite(kleshchev_grid(), 4, {2, 3, 4}, 6));
  results.push_back(multiseg_suite(6, 4, 4));
  bool passed = true;
  Json list = Json::array();
  for (const auto& s : results) {
    passed = passed && s.passed();
    list.push_back(suite_json(s));
  }
  Json j{{"seed", o.seed}, {"suites", list}, {"passed", passed}};
  return with_format(j, o, passed);
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("-m", o.m, "Level m");
  sub->add_option("-n", o.n, "Rank n or size");
  sub->add_option("-r", o.r, "Residue modulus (integer >= 2 or inf)");
  sub->add_option("--gamma", o.gamma, "Charge, e.g. \"[0,1]\"");
  sub->add_option("--q", o.q, "Parameter q, e.g. \"z3^1\" or \"-1\"");
  sub->add_option("--v", o.v, "Parameters v_1..v_m, e.g. \"[1,z4^1]\"");
  sub->add_option("--lambda", o.lambda, "Multipartition \"[[2],[1]]\" (or \"[2,1]\" at level one)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with cyclotomic Hecke algebras, Fock spaces and multisegments", "cyclohecke"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tex", "table"}));
  app.add_option("--out", o.out, "Write output to PATH");
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for sampled parameters");
  app.add_option("--max-n", o.max_n, "Override the size cap of the subcommand");
  app.add_option("--max-dim", o.max_dim, "Cap on the algebra dimension m^n n!");

  struct Entry {
    CLI::App* app;
    Outcome (*handler)(const Options&);
  };
  std::vector<Entry> entries;
  auto sub = [&](const char* name, const char* help, Outcome (*handler)(const Options&)) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, o);
    entries.push_back({s, handler});
    return s;
  };
  sub("semisimple", "Semisimplicity criterion with a witness term", cmd_semisimple);
  sub("gram", "Gram matrices and ranks", cmd_gram);
  sub("simples", "Labels of nonzero simple heads", cmd_simples);
  sub("kleshchev", "Test or enumerate Kleshchev multipartitions", cmd_kleshchev)
      ->add_option("--enumerate", o.enumerate, "Enumerate all of size N");
  sub("crystal", "Crystal graph to depth n as DOT", cmd_crystal);
  sub("fock-apply", "Apply a word of e_i/f_i to a basis vector", cmd_fock_apply)
      ->add_option("--word", o.word, "Letters such as \"f0 f1 e0\", applied left to right");
  sub("llt", "Canonical basis or decomposition matrix at level one", cmd_llt)
      ->add_flag("--matrix", o.matrix, "Print the decomposition matrix");
  sub("decomp-check", "Decomposition numbers against simple dimensions", cmd_decomp_check);
  auto* ms = sub("multiseg", "Multisegment counts", cmd_multiseg);
  ms->add_option("--window", o.window, "Start window [0, W) when r = inf");
  ms->add_option("--labels", o.labels, "Number of labels for family counts");
  ms->add_flag("--list", o.list, "Enumerate multisegments of size n");
  sub("selftest", "Invariant suites at desk scale", cmd_selftest);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return bad_arguments;
  }

  Outcome result;
  try {
    for (const auto& e : entries) {
      if (e.app->parsed()) result = e.handler(o);
    }
  } catch (const ResourceCap& e) {
    err << "resource cap: " << e.what() << "\n";
    return resource_cap;
  } catch (const CellularViolation& e) {
    err << "invariant violated (cellular filtration): " << e.what() << "\n";
    return invariant_violation;
  } catch (const LltViolation& e) {
    err << "invariant violated (canonical basis): " << e.what() << "\n";
    return invariant_violation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return bad_arguments;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return bad_arguments;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return bad_arguments;
  } catch (const std::logic_error& e) {
    err << "invariant violated: " << e.what() << "\n";
    return invariant_violation;
  } catch (const std::bad_alloc&) {
    err << "resource cap: out of memory\n";
    return resource_cap;
  }

  if (o.out) {
    std::ofstream file(*o.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *o.out << "\n";
      return bad_arguments;
    }
    file << result.text;
  } else {
    out << result.text;
  }
  if (result.code == invariant_violation) err << "invariant violated: see the failing entries above\n";
  return result.code;
}

}  // namespace cyclohecke::cli
