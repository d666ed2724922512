// kv — exact commutative-algebra engine over GF(p)[x,y,z]:
// Gröbner bases, syzygies, saturation, Hilbert data, and the
// Koszul-versus-vanishing syzygy comparison for codimension-2 ideals.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kv/error.hpp"
#include "kv/parse.hpp"
#include "kv/report_json.hpp"
#include "kv/suites.hpp"

namespace {

struct SessionConfig {
  std::uint32_t p = 32003;
  std::uint64_t seed = 0;
  int degree_cap = 64;
  bool json = false;
};

std::vector<kv::Polynomial> read_generators(const std::string& inline_text,
                                            const std::string& file) {
  if (!inline_text.empty() && !file.empty())
    throw kv::InputError("give generators inline or via --file, not both");
  if (!inline_text.empty()) return kv::parse_generator_list(inline_text);
  if (file.empty()) throw kv::InputError("no generators given");
  std::ifstream in(file);
  if (!in) throw kv::InputError("cannot open file '" + file + "'");
  std::vector<kv::Polynomial> gens;
  std::string line;
  while (std::getline(in, line)) {
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) gens.push_back(kv::parse_polynomial(line));
  }
  if (gens.empty()) throw kv::InputError("file contains no generators");
  return gens;
}

void emit(const kv::Json& j) { std::cout << j.dump(2) << "\n"; }

std::string hilbert_poly_string(const kv::HilbertData& h) {
  std::string s;
  const char* names[3] = {"", "n", "n^2"};
  for (int i = 2; i >= 0; --i) {
    const kv::HalfInt& c = h.coeff[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string mag = kv::to_string(c.num < 0 ? kv::HalfInt{-c.num, c.den}
                                              : c);
    if (s.empty())
      s += c.num < 0 ? "-" : "";
    else
      s += c.num < 0 ? " - " : " + ";
    if (i == 0 || mag != "1")
      s += mag + (i > 0 ? "*" : "");
    s += names[i];
  }
  return s.empty() ? "0" : s;
}

void print_hilbert(const std::string& who, const kv::HilbertData& h) {
  std::cout << who << " = " << hilbert_poly_string(h)
            << "   (exact from degree " << h.stable_from << ")\n";
  std::cout << "  sampled dimensions:";
  int shown = 0;
  for (const auto& [n, v] : h.values) {
    if (shown++ > 14) {
      std::cout << " ...";
      break;
    }
    std::cout << " " << n << ":" << v;
  }
  std::cout << "\n";
}

int cmd_gb(const SessionConfig& cfg, const std::string& text,
           const std::string& file) {
  auto gens = read_generators(text, file);
  kv::GroebnerBasis gb = kv::buchberger(kv::Submodule::ideal(gens));
  (void)cfg;
  if (cfg.json) {
    kv::Json j;
    j["schema"] = "kv-gb/1";
    j["field_char"] = kv::field_characteristic();
    kv::Json elems = kv::Json::array();
    for (const auto& e : gb.elements()) elems.push_back(kv::to_string(e[0]));
    j["basis"] = elems;
    j["stats"] = kv::Json{{"spairs_considered", gb.stats().spairs_considered},
                          {"spairs_reduced", gb.stats().spairs_reduced},
                          {"reductions_to_zero", gb.stats().reductions_to_zero},
                          {"skipped_by_criteria",
                           gb.stats().skipped_by_criteria}};
    emit(j);
  } else {
    for (const auto& e : gb.elements())
      std::cout << kv::to_string(e[0]) << "\n";
  }
  return 0;
}

int cmd_syz(const SessionConfig& cfg, const std::string& text,
            const std::string& file) {
  auto gens = read_generators(text, file);
  kv::Submodule s = kv::syzygies(kv::Submodule::ideal(gens));
  std::vector<kv::ModuleElement> min = kv::minimal_generators(s);
  if (cfg.json) {
    kv::Json j;
    j["schema"] = "kv-syz/1";
    j["field_char"] = kv::field_characteristic();
    j["twists"] = s.ambient.twists;
    kv::Json elems = kv::Json::array();
    for (const auto& e : min) elems.push_back(kv::to_string(e));
    j["generators"] = elems;
    emit(j);
  } else {
    for (const auto& e : min) std::cout << kv::to_string(e) << "\n";
  }
  return 0;
}

int cmd_saturate(const SessionConfig& cfg, const std::string& text,
                 const std::string& file) {
  auto gens = read_generators(text, file);
  kv::Submodule sat = kv::saturate(kv::Submodule::ideal(gens));
  std::vector<kv::ModuleElement> min = kv::minimal_generators(sat);
  if (cfg.json) {
    kv::Json j;
    j["schema"] = "kv-saturate/1";
    j["field_char"] = kv::field_characteristic();
    kv::Json elems = kv::Json::array();
    for (const auto& e : min) elems.push_back(kv::to_string(e[0]));
    j["generators"] = elems;
    emit(j);
  } else {
    for (const auto& e : min) std::cout << kv::to_string(e[0]) << "\n";
  }
  return 0;
}

int cmd_hilbert(const SessionConfig& cfg, const std::string& text,
                const std::string& file, bool quotient) {
  auto gens = read_generators(text, file);
  kv::GradedModule m =
      quotient
          ? kv::GradedModule::of_quotient(kv::Submodule::ideal(gens))
          : kv::GradedModule::of_submodule(kv::Submodule::ideal(gens));
  kv::HilbertData h = kv::hilbert_polynomial(m, cfg.degree_cap);
  if (cfg.json) {
    kv::Json j;
    j["schema"] = "kv-hilbert/1";
    j["field_char"] = kv::field_characteristic();
    j["quotient"] = quotient;
    j["hilbert"] = kv::hilbert_to_json(h);
    emit(j);
  } else {
    print_hilbert(quotient ? "H(R/I)" : "H(I)", h);
  }
  return 0;
}

int cmd_check(const SessionConfig& cfg, const std::string& text,
              const std::string& file) {
  auto gens = read_generators(text, file);
  kv::KVReport r = kv::kv_verdict(gens, cfg.degree_cap);
  if (cfg.json) {
    emit(kv::report_to_json(r));
    return 0;
  }
  std::cout << "characteristic: " << r.field_char << "\n";
  std::cout << "generators:";
  for (const auto& s : r.input) std::cout << "  " << s;
  std::cout << "\ndegrees:";
  for (int d : r.degrees) std::cout << " " << d;
  std::cout << "\ndeg Z = " << r.deg_Z << "\n";
  print_hilbert("H(K)", r.h_koszul);
  print_hilbert("H(V)", r.h_vanishing);
  std::cout << "H(I/I^2) = " << hilbert_poly_string(r.h_i_mod_i2) << "\n";
  std::cout << "herzog slack = " << r.herzog_slack << "\n";
  std::cout << "K = V: " << (r.k_eq_v ? "true" : "false") << "\n";
  std::cout << "local complete intersection: " << (r.lci ? "true" : "false")
            << "\n";
  std::cout << "consistent: " << (r.consistent ? "true" : "false") << "\n";
  if (r.witness)
    std::cout << "witness (vanishing, non-Koszul): "
              << kv::to_string(*r.witness) << "\n";
  return 0;
}

int cmd_verify(const SessionConfig& cfg, const std::string& suite,
               int trials) {
  kv::SuiteResult res = kv::run_suite(suite, trials, cfg.seed);
  if (cfg.json) {
    kv::Json j;
    j["schema"] = "kv-verify/1";
    j["suite"] = res.name;
    j["seed"] = cfg.seed;
    kv::Json cases = kv::Json::array();
    for (const auto& c : res.cases)
      cases.push_back(kv::Json{
          {"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
    j["cases"] = cases;
    j["passed"] = res.passed();
    j["total"] = res.total();
    emit(j);
  } else {
    for (const auto& c : res.cases) {
      std::cout << (c.pass ? "[ok]  " : "[FAIL] ") << c.label;
      if (!c.detail.empty()) std::cout << " — " << c.detail;
      std::cout << "\n";
    }
    std::cout << res.name << ": " << res.passed() << "/" << res.total()
              << " passed\n";
  }
  return res.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  SessionConfig cfg;
  CLI::App app{
      "exact syzygy and Hilbert computations for homogeneous ideals in "
      "GF(p)[x,y,z]"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global options after the subcommand name
  app.add_option("--p", cfg.p, "field characteristic (prime)")
      ->envname("KV_DEFAULT_P")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized commands")
      ->capture_default_str();
  app.add_option("--degree-cap", cfg.degree_cap,
                 "largest degree Hilbert sampling may reach")
      ->check(CLI::Range(12, 1 << 20))
      ->capture_default_str();
  app.add_flag("--json", cfg.json, "emit machine-readable JSON");

  std::string text, file, suite;
  bool quotient = false;
  int trials = 0;

  auto add_gens = [&](CLI::App* sub) {
    sub->add_option("generators", text,
                    "comma-separated homogeneous polynomials");
    sub->add_option("--file", file, "read generators from a file, one per "
                                    "line");
  };

  CLI::App* gb = app.add_subcommand("gb", "reduced Gröbner basis of an ideal");
  add_gens(gb);
  CLI::App* syz =
      app.add_subcommand("syz", "minimal syzygies of the generator list");
  add_gens(syz);
  CLI::App* sat = app.add_subcommand(
      "saturate", "saturation of an ideal by the irrelevant ideal");
  add_gens(sat);
  CLI::App* hil =
      app.add_subcommand("hilbert", "Hilbert function and polynomial");
  add_gens(hil);
  hil->add_flag("--quotient", quotient,
                "use the quotient R/I instead of the ideal");
  CLI::App* chk = app.add_subcommand(
      "check", "compare Koszul syzygies with basepoint-vanishing syzygies");
  add_gens(chk);
  CLI::App* ver =
      app.add_subcommand("verify", "run a named verification suite");
  ver->add_option("suite", suite, "one of: main-theorem, herzog, "
                                  "arrangements, five-points, sym2, "
                                  "saturation-lemma, oracle")
      ->required();
  ver->add_option("--trials", trials, "randomized case count (0 = default)");

  CLI11_PARSE(app, argc, argv);

  try {
    kv::set_field_characteristic(cfg.p);
    if (gb->parsed()) return cmd_gb(cfg, text, file);
    if (syz->parsed()) return cmd_syz(cfg, text, file);
    if (sat->parsed()) return cmd_saturate(cfg, text, file);
    if (hil->parsed()) return cmd_hilbert(cfg, text, file, quotient);
    if (chk->parsed()) return cmd_check(cfg, text, file);
    if (ver->parsed()) return cmd_verify(cfg, suite, trials);
  } catch (const kv::EngineError& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return 2;
  } catch (const kv::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
