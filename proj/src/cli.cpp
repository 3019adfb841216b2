#include "bargmann/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "bargmann/fock.hpp"
#include "bargmann/fqhe.hpp"
#include "bargmann/multiplets.hpp"
#include "bargmann/rmcm.hpp"
#include "bargmann/shapes.hpp"
#include "bargmann/text_format.hpp"

namespace bargmann::cli {

namespace {

using nlohmann::json;

constexpr int kDefaultShellLimit = 12;

struct RunConfig {
  int particles = 2;
  int dims = 3;
  int shell = 0;
  std::optional<int> max_shell;
  std::string format = "json";
  std::string golden;
  std::string input;
  std::string state;
  long long cap = 10000;

  void validate() const {
    ShellSpec{particles, dims, shell}.validate();
    if (max_shell && *max_shell < 0) throw std::invalid_argument("--max-shell must be >= 0");
    if (cap < 1) throw std::invalid_argument("--cap must be positive");
  }
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_cap(long long states, const RunConfig& cfg) {
  if (states > cfg.cap) {
    throw CapExceeded("refusing job: " + std::to_string(states) + " basis states exceed the cap of " +
                      std::to_string(cfg.cap) + " (raise with --cap)");
  }
}

std::string text(const Polynomial& p, int dims) { return format_polynomial(p, dims); }
std::string fraction(const Rational& r) { return r.to_fraction_string(); }

std::string read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read input file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string s = buf.str();
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Polynomial read_polynomial(const RunConfig& cfg) {
  if (cfg.input.empty()) throw std::invalid_argument("--input is required");
  const Polynomial p = parse_polynomial(read_input(cfg.input));
  if (p.max_particle() > cfg.particles || p.max_axis() >= cfg.dims) {
    throw std::invalid_argument("input mentions variables outside N = " + std::to_string(cfg.particles) +
                                ", d = " + std::to_string(cfg.dims));
  }
  return p;
}

// Shells 0.. until the basis is complete (or through --max-shell), guarded by the cap.
ShapeBasis build_shape_basis(const RunConfig& cfg) {
  const int limit = cfg.max_shell.value_or(kDefaultShellLimit);
  ShapeBasis basis{cfg.particles, cfg.dims, 0, {}};
  long long states = 0;
  for (int s = 0; s <= limit; ++s) {
    states += shell_dimension({cfg.particles, cfg.dims, s});
    check_cap(states, cfg);
    for (auto& shape : shape_subspace({cfg.particles, cfg.dims, s})) basis.shapes.push_back(std::move(shape));
    basis.max_shell = s;
    if (!cfg.max_shell && basis.complete()) break;
  }
  return basis;
}

json polynomial_list(const std::vector<Polynomial>& polys, int dims) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(text(p, dims));
  return out;
}

json cmd_shells(const RunConfig& cfg) {
  const ShellSpec spec{cfg.particles, cfg.dims, cfg.shell};
  const long long dim = shell_dimension(spec);
  check_cap(dim, cfg);
  json basis = json::array();
  for (const auto& s : slater_basis(spec)) basis.push_back(text(s.polynomial, cfg.dims));
  return {{"particles", cfg.particles}, {"dims", cfg.dims},       {"shell", cfg.shell},
          {"total_degree", spec.total_degree()}, {"dimension", dim}, {"basis", basis}};
}

json cmd_shapes(const RunConfig& cfg) {
  const ShapeBasis basis = build_shape_basis(cfg);
  json shapes = json::array();
  for (std::size_t i = 0; i < basis.shapes.size(); ++i) {
    const Shape& s = basis.shapes[i];
    shapes.push_back({{"index", i + 1},
                      {"shell", s.shell},
                      {"degree", s.degree},
                      {"polynomial", text(s.polynomial, cfg.dims)},
                      {"norm_sq", fraction(s.norm_sq)}});
  }
  return {{"particles", cfg.particles},
          {"dims", cfg.dims},
          {"max_shell", basis.max_shell},
          {"expected_count", basis.expected_count()},
          {"count", basis.shapes.size()},
          {"complete", basis.complete()},
          {"shapes", shapes}};
}

json cmd_multiplets(const RunConfig& cfg) {
  if (cfg.dims != 3) throw std::invalid_argument("multiplets requires d = 3");
  const ShellSpec spec{cfg.particles, cfg.dims, cfg.shell};
  check_cap(shell_dimension(spec), cfg);
  const ShellResolution res = resolve_shell(spec);
  json multiplets = json::array();
  for (const auto& mp : res.multiplets) {
    json states = json::array();
    for (int m = mp.l; m >= -mp.l; --m) {
      json st = {{"name", mp.state_name(m)},
                 {"m", m},
                 {"polynomial", text(mp.state(m), 3)},
                 {"norm_sq", fraction(mp.norm_sq(m))}};
      if (cfg.particles == 2) st["alphabet"] = format_polynomial(to_alphabet(mp.state(m)), alphabet_names());
      states.push_back(std::move(st));
    }
    multiplets.push_back({{"label", mp.label()}, {"l", mp.l}, {"family", mp.family}, {"states", states}});
  }
  return {{"particles", cfg.particles},
          {"shell", cfg.shell},
          {"dimension", res.dimension},
          {"l_content", res.l_content()},
          {"multiplets", multiplets}};
}

json cmd_table1() {
  json out = json::object();
  for (const auto& e : table1_report()) {
    out[e.key] = {{"polynomial", text(e.computed, 3)},
                  {"alphabet", format_polynomial(e.computed_alphabet, alphabet_names())},
                  {"norm_sq", fraction(e.computed_norm_sq)},
                  {"matches_paper", e.matches()}};
  }
  return out;
}

json cmd_decompose(const RunConfig& cfg) {
  const Polynomial p = read_polynomial(cfg);
  const ShapeBasis basis = build_shape_basis(cfg);
  if (!basis.complete()) {
    throw IncompleteBasisError("shape basis incomplete through shell " + std::to_string(basis.max_shell));
  }
  const ModuleDecomposition dec = decompose(p, basis);
  std::vector<Polynomial> shapes;
  for (const auto& s : basis.shapes) shapes.push_back(s.polynomial);
  return {{"particles", cfg.particles},
          {"dims", cfg.dims},
          {"input", text(p, cfg.dims)},
          {"phi", polynomial_list(dec.coefficients, cfg.dims)},
          {"support", dec.support()},
          {"shapes", polynomial_list(shapes, cfg.dims)},
          {"reconstructs", reconstruct(dec, basis) == p}};
}

json rm_form_json(const Polynomial& p) {
  const RmForm form = rm_form(p);
  const auto names = cm_rm_names();
  return {{"P", format_polynomial(form.linear[0], names)},
          {"Q", format_polynomial(form.linear[1], names)},
          {"R", format_polynomial(form.linear[2], names)},
          {"S", format_polynomial(form.triple, names)}};
}

json cmd_rm(const RunConfig& cfg) {
  if (cfg.particles != 2 || cfg.dims != 3) throw std::invalid_argument("rm requires N = 2, d = 3");
  if (cfg.state.empty() == cfg.input.empty()) throw std::invalid_argument("rm takes exactly one of --state, --input");
  RunConfig basis_cfg = cfg;
  basis_cfg.max_shell.reset();
  const ShapeBasis basis = build_shape_basis(basis_cfg);

  json out;
  if (!cfg.state.empty()) {
    const char lead = cfg.state.front();
    if (lead < '0' || lead > '9') throw std::invalid_argument("state name must start with its shell: " + cfg.state);
    const ShellSpec spec{2, 3, lead - '0'};
    check_cap(shell_dimension(spec), cfg);
    const ShellResolution res = resolve_shell(spec);
    std::pair<const Multiplet*, int> found;
    try {
      found = res.find_state(cfg.state);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("unknown state " + cfg.state);
    }
    const auto& [mp, m] = found;
    const Polynomial& p = mp->state(m);
    const bool pure = std::all_of(mp->states.begin(), mp->states.end(), [](const Polynomial& s) { return is_pure_rm(s); });
    const BandAssignment band = band_assign(*mp, basis);
    out = {{"state", cfg.state},
           {"polynomial", text(p, 3)},
           {"l", mp->l},
           {"m", m},
           {"pure_rm", pure},
           {"band", to_string(band.band)},
           {"phi_support", decompose(p, basis).support()},
           {"multiplet_phi_support", band.phi_support}};
    if (pure) {
      out["n_r"] = rm_quanta(*mp).n_r;
      out["rm_form"] = rm_form_json(p);
    }
  } else {
    const Polynomial p = read_polynomial(cfg);
    const bool pure = is_pure_rm(p);
    const BandAssignment band = band_assign(p, basis);
    out = {{"polynomial", text(p, 3)},
           {"pure_rm", pure},
           {"band", to_string(band.band)},
           {"phi_support", band.phi_support}};
    if (pure) out["rm_form"] = rm_form_json(p);
  }
  return out;
}

json cmd_laughlin() {
  const LaughlinReport r = laughlin_report();
  const ShapeBasis basis = full_shape_basis(3, 2, 2);
  json shapes = json::array();
  for (std::size_t i = 0; i < r.shapes.size(); ++i) {
    const auto& s = r.shapes[i];
    shapes.push_back({{"index", s.index},
                      {"shell", s.shell},
                      {"degree", s.degree},
                      {"holomorphic", s.holomorphic},
                      {"polynomial", text(basis.shapes[i].polynomial, 2)}});
  }
  json out = {{"shape_count", r.shape_count},
              {"expected_shape_count", r.expected_shape_count},
              {"shape_degrees", r.shape_degrees},
              {"shapes", shapes},
              {"holomorphic_dimension", r.holomorphic_dimension},
              {"vandermonde", text(r.vandermonde, 2)},
              {"vandermonde_match", r.vandermonde_match},
              {"determinant_match", r.determinant_match}};
  out["holomorphic_generator"] = r.holomorphic_dimension == 1 ? json(text(r.holomorphic_generator, 2)) : json(nullptr);
  return out;
}

// ---- output -----------------------------------------------------------

void flatten(const json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    if (j.empty()) out << path << " = []\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out << path << " = " << j.get<std::string>() << "\n";
  } else {
    out << path << " = " << j.dump() << "\n";
  }
}

std::optional<Polynomial> try_parse(const std::string& s) {
  try {
    return parse_polynomial(s);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

void diff_strings(const std::string& path, const std::string& expected, const std::string& actual,
                  std::vector<std::string>& lines) {
  const auto pe = try_parse(expected);
  const auto pa = try_parse(actual);
  if (!pe || !pa || (pe->degree() <= 0 && pa->degree() <= 0)) {
    lines.push_back(path + ": expected \"" + expected + "\", got \"" + actual + "\"");
    return;
  }
  lines.push_back(path + ": polynomials differ");
  std::set<Monomial, LeadingFirst> monomials;
  for (const auto& [m, c] : pe->terms()) monomials.insert(m);
  for (const auto& [m, c] : pa->terms()) monomials.insert(m);
  for (const auto& m : monomials) {
    const GaussianRational ce = pe->coefficient(m);
    const GaussianRational ca = pa->coefficient(m);
    if (ce == ca) continue;
    if (!ce.is_zero()) lines.push_back("  - " + format_polynomial(Polynomial(m, ce), std::max(3, pe->max_axis() + 1)));
    if (!ca.is_zero()) lines.push_back("  + " + format_polynomial(Polynomial(m, ca), std::max(3, pa->max_axis() + 1)));
  }
}

void diff_json(const json& expected, const json& actual, const std::string& path,
               std::vector<std::string>& lines) {
  const std::string where = path.empty() ? "<root>" : path;
  const bool numbers = expected.is_number() && actual.is_number();
  if (expected.type() != actual.type() && !numbers) {
    lines.push_back(where + ": expected " + expected.dump() + ", got " + actual.dump());
    return;
  }
  if (expected.is_object()) {
    std::set<std::string> keys;
    for (const auto& [k, v] : expected.items()) keys.insert(k);
    for (const auto& [k, v] : actual.items()) keys.insert(k);
    for (const auto& k : keys) {
      const std::string sub = path.empty() ? k : path + "." + k;
      if (!expected.contains(k)) {
        lines.push_back(sub + ": unexpected key");
      } else if (!actual.contains(k)) {
        lines.push_back(sub + ": missing key");
      } else {
        diff_json(expected[k], actual[k], sub, lines);
      }
    }
  } else if (expected.is_array()) {
    if (expected.size() != actual.size()) {
      lines.push_back(where + ": expected " + std::to_string(expected.size()) + " entries, got " +
                      std::to_string(actual.size()));
    }
    for (std::size_t i = 0; i < std::min(expected.size(), actual.size()); ++i) {
      diff_json(expected[i], actual[i], path + "[" + std::to_string(i) + "]", lines);
    }
  } else if (expected != actual) {
    if (expected.is_string()) {
      diff_strings(where, expected.get<std::string>(), actual.get<std::string>(), lines);
    } else {
      lines.push_back(where + ": expected " + expected.dump() + ", got " + actual.dump());
    }
  }
}

int emit(const json& doc, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format == "text") {
    flatten(doc, "", out);
  } else {
    out << doc.dump(2) << "\n";
  }
  if (cfg.golden.empty()) return kExitOk;

  std::ifstream in(cfg.golden);
  if (!in) throw std::invalid_argument("cannot read golden file " + cfg.golden);
  json expected;
  try {
    expected = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("golden file " + cfg.golden + " is not valid JSON: " + e.what());
  }
  std::vector<std::string> lines;
  diff_json(expected, doc, "", lines);
  if (lines.empty()) return kExitOk;
  err << "mismatch against " << cfg.golden << ":\n";
  for (const auto& l : lines) err << l << "\n";
  return kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact shell, shape and multiplet calculator for fermions in a harmonic trap", "bargmann"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_system = [&](CLI::App* sub) {
    sub->add_option("-N,--particles", cfg.particles, "Number of particles")->capture_default_str();
    sub->add_option("-d,--dims", cfg.dims, "Number of dimensions")->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--golden", cfg.golden, "Compare against a golden JSON file");
    sub->add_option("--cap", cfg.cap, "Largest basis a job may build")->capture_default_str();
  };
  auto add_shell = [&](CLI::App* sub) {
    sub->add_option("-s,--shell", cfg.shell, "Shell index above the minimal degree")->capture_default_str();
  };
  auto add_max_shell = [&](CLI::App* sub) {
    sub->add_option("--max-shell", cfg.max_shell, "Last shell to include (default: until complete)");
  };

  CLI::App* shells = app.add_subcommand("shells", "Antisymmetric basis of one shell");
  add_system(shells);
  add_shell(shells);
  add_output(shells);

  CLI::App* shapes = app.add_subcommand("shapes", "Shape basis");
  add_system(shapes);
  add_max_shell(shapes);
  add_output(shapes);

  CLI::App* multiplets = app.add_subcommand("multiplets", "Angular-momentum multiplets of one shell (d = 3)");
  add_system(multiplets);
  add_shell(multiplets);
  add_output(multiplets);

  CLI::App* table1 = app.add_subcommand("table1", "m >= 1 states of the second shell, N = 2, d = 3");
  add_output(table1);

  CLI::App* decomp = app.add_subcommand("decompose", "Expand a state over the shape basis");
  add_system(decomp);
  add_max_shell(decomp);
  add_output(decomp);
  decomp->add_option("--input", cfg.input, "File holding a polynomial in text format")->required();

  CLI::App* rm = app.add_subcommand("rm", "Relative-motion and band classification (N = 2, d = 3)");
  add_system(rm);
  add_output(rm);
  rm->add_option("--state", cfg.state, "Named shell state, e.g. 233-II");
  rm->add_option("--input", cfg.input, "File holding a polynomial in text format");

  CLI::App* laughlin = app.add_subcommand("laughlin", "Holomorphic shape of N = 3, d = 2");
  add_output(laughlin);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    cfg.validate();
    json doc;
    if (shells->parsed()) {
      doc = cmd_shells(cfg);
    } else if (shapes->parsed()) {
      doc = cmd_shapes(cfg);
    } else if (multiplets->parsed()) {
      doc = cmd_multiplets(cfg);
    } else if (table1->parsed()) {
      doc = cmd_table1();
    } else if (decomp->parsed()) {
      doc = cmd_decompose(cfg);
    } else if (rm->parsed()) {
      doc = cmd_rm(cfg);
    } else {
      doc = cmd_laughlin();
    }
    return emit(doc, cfg, out, err);
  } catch (const CapExceeded& e) {
    err << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const IncompleteBasisError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace bargmann::cli
