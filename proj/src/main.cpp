#include "chromod/json_io.hpp"
#include "chromod/qhit.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>
#include <vector>

using namespace chromod;

namespace {

struct Config {
  std::string hess;
  std::string word;
  std::string basis;
  std::string format;
  std::string cache;
  std::string check = "all";
  std::string suite = "all";
  std::string lambda;
  int n = 0;
  int m = 0;
  int hit_j = -1;
  int max_n = 6;
  int threads = 1;
  int colors = 0;
  long step_guard = 0;
  bool unsafe = false;
  bool expect_all_pass = false;
};

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    const size_t comma = std::min(csv.find(',', pos), csv.size());
    const std::string tok = csv.substr(pos, comma - pos);
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != tok.size() || tok.empty())
      throw std::invalid_argument("cannot parse integer list entry '" + tok +
                                  "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

Hess hess_from(const Config& cfg) {
  if (!cfg.word.empty()) return Hess::from_word(cfg.word);
  if (!cfg.hess.empty()) return Hess(parse_ints(cfg.hess));
  throw std::invalid_argument("provide the function via --hess or --word");
}

void add_hess_options(CLI::App* cmd, Config& cfg) {
  auto* values =
      cmd->add_option("--hess", cfg.hess, "values h(1),...,h(n), comma separated");
  auto* word = cmd->add_option("--word", cfg.word, "Dyck word over n and e");
  values->excludes(word);
  word->excludes(values);
}

void add_engine_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--cache", cfg.cache,
                  "JSON-lines file persisting engine expansions")
      ->envname("CHROMOD_CACHE");
  cmd->add_option("--step-guard", cfg.step_guard,
                  "override the engine step guard (needs --unsafe)");
  cmd->add_flag("--unsafe", cfg.unsafe, "allow guard overrides");
}

// guard overrides require an explicit opt-in
void apply_engine_options(const Config& cfg) {
  if (cfg.step_guard != 0) {
    if (!cfg.unsafe)
      throw std::invalid_argument("--step-guard requires --unsafe");
    Engine::shared().set_step_guard(cfg.step_guard);
  }
  if (!cfg.cache.empty()) {
    try {
      Engine::shared().absorb(load_cache(cfg.cache));
    } catch (const std::runtime_error& e) {
      throw std::invalid_argument(e.what());
    }
  }
}

void persist_engine_cache(const Config& cfg) {
  if (!cfg.cache.empty()) save_cache(cfg.cache, Engine::shared().snapshot());
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_csf(const Config& cfg, const std::string& name, bool abelian_route) {
  apply_engine_options(cfg);
  const Hess h = hess_from(cfg);
  const SymFunc f =
      abelian_route
          ? csf_abelian_qhit(h, cfg.unsafe)
          : csf_e(h).converted(basis_from_string(cfg.basis.empty() ? "e"
                                                                   : cfg.basis));
  Json j = json_envelope(name);
  j["h"] = h.values();
  Json body = json_symfunc(f);
  j["degree"] = body["degree"];
  j["basis"] = body["basis"];
  j["coefficients"] = std::move(body["coefficients"]);
  emit(j);
  persist_engine_cache(cfg);
  return 0;
}

int cmd_expand(const Config& cfg) {
  apply_engine_options(cfg);
  const Hess h = hess_from(cfg);
  Json j = json_envelope("expand");
  j["h"] = h.values();
  j["terms"] = json_expansion(Engine::shared().expand(h));
  emit(j);
  persist_engine_cache(cfg);
  return 0;
}

int cmd_oracle(const Config& cfg) {
  const Hess h = hess_from(cfg);
  const SymFunc f =
      csf_oracle(h, cfg.colors, cfg.unsafe)
          .converted(basis_from_string(cfg.basis.empty() ? "m" : cfg.basis));
  Json j = json_envelope("oracle");
  j["h"] = h.values();
  Json body = json_symfunc(f);
  j["degree"] = body["degree"];
  j["basis"] = body["basis"];
  j["coefficients"] = std::move(body["coefficients"]);
  emit(j);
  return 0;
}

int cmd_chi_q(const Config& cfg) {
  const Hess h = hess_from(cfg);
  Json j = json_envelope("chi-q");
  j["h"] = h.values();
  j["xcoeffs"] = json_xpoly(chromatic_poly_q(h))["xcoeffs"];
  emit(j);
  return 0;
}

int cmd_qhit(const Config& cfg) {
  const Partition lambda(parse_ints(cfg.lambda));
  Json j = json_envelope("qhit");
  j["lambda"] = json_partition(lambda);
  j["m"] = cfg.m;
  Json hits = Json::array();
  const int lo = cfg.hit_j < 0 ? 0 : cfg.hit_j;
  const int hi = cfg.hit_j < 0 ? cfg.m : cfg.hit_j;
  for (int jj = lo; jj <= hi; ++jj) {
    Json t;
    t["j"] = jj;
    t["coeff"] = json_poly(q_hit_number(jj, cfg.m, lambda, cfg.unsafe));
    hits.push_back(std::move(t));
  }
  j["hit"] = std::move(hits);
  emit(j);
  return 0;
}

int cmd_network(const Config& cfg) {
  const Hess h = hess_from(cfg);
  const PlanarNetwork net = build_network(h);
  if (cfg.format == "dot") {
    std::cout << network_dot(net);
    return 0;
  }
  Json j = json_envelope("network");
  j["h"] = h.values();
  Json body = json_network(net);
  j["n"] = body["n"];
  j["start"] = body["start"];
  j["edges"] = std::move(body["edges"]);
  j["endpoints"] = std::move(body["endpoints"]);
  emit(j);
  return 0;
}

int cmd_scan(const Config& cfg) {
  apply_engine_options(cfg);
  const Basis basis = basis_from_string(cfg.basis.empty() ? "e" : cfg.basis);
  const bool jsonl = cfg.format != "json";
  const auto reports = scan_shapes(cfg.n, basis, cfg.threads);
  long failures = 0;
  Json lines = Json::array();
  for (const auto& rep : reports) {
    Json line = json_shape_report(rep, cfg.check);
    failures += line["failures"].size();
    if (jsonl)
      std::cout << line.dump() << "\n";
    else
      lines.push_back(std::move(line));
  }
  Json summary;
  summary["functions"] = reports.size();
  summary["failures"] = failures;
  if (jsonl) {
    Json tail;
    tail["summary"] = std::move(summary);
    std::cout << tail.dump() << "\n";
  } else {
    Json j = json_envelope("scan");
    j["n"] = cfg.n;
    j["basis"] = basis_name(basis);
    j["check"] = cfg.check;
    j["reports"] = std::move(lines);
    j["summary"] = std::move(summary);
    emit(j);
  }
  persist_engine_cache(cfg);
  if (cfg.expect_all_pass && failures > 0) {
    std::cerr << "scan: " << failures << " failing coefficients\n";
    return 1;
  }
  return 0;
}

std::string pad(std::string s, size_t width) {
  if (s.size() < width) s.resize(width, ' ');
  return s;
}

int cmd_verify(const Config& cfg) {
  apply_engine_options(cfg);
  std::vector<SuiteResult> results;
  if (cfg.suite == "all")
    results = run_all_verify_suites(cfg.max_n);
  else
    results.push_back(run_verify_suite(cfg.suite, cfg.max_n));
  bool all_pass = true;
  for (const auto& r : results) {
    std::cout << pad(r.name, 14) << (r.passed() ? "pass" : "FAIL")
              << "  checked=" << r.checked;
    if (!r.passed())
      std::cout << "  failed=" << r.failed << "  first=" << r.detail;
    std::cout << "\n";
    all_pass = all_pass && r.passed();
  }
  persist_engine_cache(cfg);
  if (!all_pass) {
    std::cerr << "verify: identity failure\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chromatic quasisymmetric functions of indifference graphs"};
  app.require_subcommand(1);
  Config cfg;

  const std::vector<std::string> bases = {"m", "e", "s", "p"};

  auto* csf = app.add_subcommand("csf", "csf_q(h) in a chosen basis");
  add_hess_options(csf, cfg);
  add_engine_options(csf, cfg);
  csf->add_option("--basis", cfg.basis)->check(CLI::IsMember(bases));

  auto* expand = app.add_subcommand("expand", "f(h) over complete products");
  add_hess_options(expand, cfg);
  add_engine_options(expand, cfg);

  auto* oracle =
      app.add_subcommand("oracle", "csf_q(h) by direct coloring enumeration");
  add_hess_options(oracle, cfg);
  oracle->add_option("--basis", cfg.basis)->check(CLI::IsMember(bases));
  oracle->add_option("--colors", cfg.colors, "colors to sum over (0 = enough)")
      ->check(CLI::Range(0, 16));
  oracle->add_flag("--unsafe", cfg.unsafe, "lift the size guard");

  auto* chiq = app.add_subcommand("chi-q", "q-chromatic polynomial of h");
  add_hess_options(chiq, cfg);

  auto* qhit = app.add_subcommand("qhit", "q-hit numbers of a board diagram");
  qhit->add_option("--lambda", cfg.lambda, "diagram partition, comma separated")
      ->required();
  qhit->add_option("--m", cfg.m, "board size")->required()->check(CLI::Range(1, 12));
  qhit->add_option("--j", cfg.hit_j, "single hit count (default: all)")
      ->check(CLI::Range(0, 12));
  qhit->add_flag("--unsafe", cfg.unsafe, "lift the enumeration guard");

  auto* abelian =
      app.add_subcommand("csf-abelian", "csf_q(h) through the q-hit expansion");
  add_hess_options(abelian, cfg);
  abelian->add_flag("--unsafe", cfg.unsafe, "lift the enumeration guard");

  auto* network = app.add_subcommand("network", "planar network of an abelian h");
  add_hess_options(network, cfg);
  network->add_option("--format", cfg.format)
      ->check(CLI::IsMember({"json", "dot"}));

  auto* scan = app.add_subcommand("scan", "coefficient shapes for a whole size");
  add_engine_options(scan, cfg);
  scan->add_option("--n", cfg.n, "size to scan")->required()->check(CLI::Range(1, 12));
  scan->add_option("--basis", cfg.basis)->check(CLI::IsMember(bases));
  scan->add_option("--check", cfg.check)
      ->check(CLI::IsMember({"all", "palindromic", "unimodal", "log-concave"}));
  scan->add_option("--format", cfg.format)->check(CLI::IsMember({"jsonl", "json"}));
  scan->add_option("--threads", cfg.threads)->check(CLI::Range(1, 64));
  scan->add_flag("--expect-all-pass", cfg.expect_all_pass,
                 "exit 1 when any checked coefficient fails");

  auto* verify = app.add_subcommand("verify", "replay the identity suites");
  add_engine_options(verify, cfg);
  std::vector<std::string> suites = verify_suite_names();
  suites.insert(suites.begin(), "all");
  verify->add_option("--suite", cfg.suite)->check(CLI::IsMember(suites));
  verify->add_option("--max-n", cfg.max_n)->check(CLI::Range(1, 14));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (csf->parsed()) return cmd_csf(cfg, "csf", false);
    if (expand->parsed()) return cmd_expand(cfg);
    if (oracle->parsed()) return cmd_oracle(cfg);
    if (chiq->parsed()) return cmd_chi_q(cfg);
    if (qhit->parsed()) return cmd_qhit(cfg);
    if (abelian->parsed()) return cmd_csf(cfg, "csf-abelian", true);
    if (network->parsed()) return cmd_network(cfg);
    if (scan->parsed()) return cmd_scan(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
