#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "hypertour/hypertour.hpp"

namespace ht = hypertour;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) ht::fail(ht::ErrorKind::kConfigError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) ht::fail(ht::ErrorKind::kConfigError, "cannot write '" + path + "'");
  out << text;
}

std::string join(const std::vector<ht::VertexId>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s;
}

std::string arc_list(const std::vector<ht::HyperArc>& arcs) {
  std::string s;
  for (std::size_t i = 0; i < arcs.size(); ++i) s += (i ? ";" : "") + join(arcs[i].seq());
  return s;
}

unsigned thread_count(unsigned flag) {
  if (flag != 0) return flag;
  if (const char* env = std::getenv("HYPERTOUR_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void print_elapsed(std::chrono::steady_clock::time_point start) {
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "elapsed_ms=" << ms << "\n";
}

int cmd_check(const std::string& what, const std::string& path) {
  const ht::HyperDigraph h = ht::parse_hypergraph(read_input(path));
  const ht::HopIndex index(h);
  if (what == "strong") {
    const bool strong = ht::is_strong(index);
    std::cout << "strong=" << strong << "\n";
    return strong ? kExitOk : kExitFail;
  }
  if (what == "ham-path") {
    const auto p = ht::find_hamiltonian_path(h);
    std::cout << "ham_path=" << (p ? 1 : 0) << "\n";
    if (!p) return kExitFail;
    std::cout << "vertices=" << join(p->vertices) << "\narcs=" << arc_list(p->arcs) << "\n";
    return kExitOk;
  }
  if (what == "ham-cycle") {
    const auto c = ht::hamiltonian_cycle(index, h);
    std::cout << "ham_cycle=" << (c ? 1 : 0) << "\n";
    if (!c) return kExitFail;
    std::cout << "vertices=" << join(c->vertices) << "\narcs=" << arc_list(c->arcs) << "\n";
    return kExitOk;
  }
  if (what == "pancyclic") {
    const bool vp = ht::is_vertex_pancyclic(h);
    std::cout << "vertex_pancyclic=" << vp << "\n";
    const auto c = ht::hamiltonian_cycle(index, h);
    if (c) {
      const auto arcs = ht::pancyclic_hyperarcs_on_cycle(h, *c);
      std::cout << "cycle=" << join(c->vertices) << "\npancyclic_arcs=" << arcs.size()
                << "\npancyclic_arc_list=" << arc_list(arcs) << "\n";
    }
    return vp ? kExitOk : kExitFail;
  }
  if (what == "kings") {
    const auto kings = ht::two_kings(index);
    std::cout << "kings=" << kings.size() << "\nking_list=" << join(kings) << "\n";
    return kExitOk;
  }
  throw CLI::ValidationError("check", "unknown property '" + what + "'");
}

int cmd_degenerate(const std::string& path, const std::string& trn_out, const std::string& cert_out) {
  const ht::HyperTournament h = ht::parse_kht(read_input(path));
  const ht::Degeneration d = ht::degenerate_tournament(h);
  const std::string trn = ht::serialize_trn(d.tournament);
  const std::string cert = ht::serialize_cert(d.certificate);
  if (trn_out.empty() && cert_out.empty()) {
    std::cout << trn << cert;
  } else {
    write_output(trn_out, trn);
    write_output(cert_out, cert);
  }
  return kExitOk;
}

int cmd_verify_cert(const std::string& kht, const std::string& trn, const std::string& cert) {
  const ht::HyperDigraph h = ht::parse_hypergraph(read_input(kht));
  const ht::Tournament t = ht::parse_trn(read_input(trn));
  const ht::GenerationCertificate c = ht::parse_cert(read_input(cert), h);
  const ht::MembershipVerdict v = ht::verify_membership(t, h, c);
  std::cout << "member=" << v.ok << "\n";
  if (!v.ok) std::cout << "reason=" << v.reason << "\n";
  std::cout << "tournament_strong=" << t.is_strong() << "\n";
  return v.ok ? kExitOk : kExitFail;
}

int cmd_enumerate(const std::string& path, std::uint64_t limit, bool list) {
  const ht::HyperDigraph h = ht::parse_hypergraph(read_input(path));
  std::uint64_t strong = 0;
  std::uint64_t index = 0;
  const std::optional<std::uint64_t> cap = limit == 0 ? std::nullopt : std::optional(limit);
  const std::uint64_t members = ht::enumerate_th(
      h,
      [&](const ht::Tournament& t, const ht::GenerationCertificate&) {
        const bool s = t.is_strong();
        strong += s ? 1 : 0;
        if (list) {
          std::string arcs;
          for (const auto& [u, v] : t.arcs()) arcs += (arcs.empty() ? "" : ";") + std::to_string(u) + ">" + std::to_string(v);
          std::cout << "member=" << index << " strong=" << s << " arcs=" << arcs << "\n";
        }
        ++index;
        return true;
      },
      cap);
  std::cout << "members=" << members << "\nstrong_members=" << strong << "\n";
  return kExitOk;
}

int cmd_cover(const std::string& path, const std::string& rule_name) {
  const ht::HyperDigraph h = ht::parse_hypergraph(read_input(path));
  ht::GeneratedArcRule rule = ht::GeneratedArcRule::kLeadingPair;
  if (rule_name == "closure") {
    rule = ht::GeneratedArcRule::kAllPrecedencePairs;
  } else if (rule_name != "leading") {
    throw CLI::ValidationError("--rule", "expected 'leading' or 'closure'");
  }
  const ht::CoverReport r = ht::gallai_milgram_chain(h, rule);
  std::cout << "rule=" << rule_name << "\npc_h=" << r.pc_h << "\npc_d=" << r.pc_d << "\nalpha_d=" << r.alpha_d
            << "\nalpha_h=" << r.alpha_h << "\nchain_holds=" << r.chain_holds() << "\n";
  for (const auto& p : r.cover_h.paths) std::cout << "cover_h_path=" << join(p.vertices) << "\n";
  for (const auto& p : r.cover_d) std::cout << "cover_d_path=" << join(p) << "\n";
  std::cout << "independent_d=" << join(ht::members(r.independent_d)) << "\n";
  std::cout << "independent_h=" << join(ht::members(r.independent_h)) << "\n";
  std::cout << "lift_fallbacks=" << r.lift_fallbacks << "\nlift_failures=" << r.lift_failures << "\n";
  return r.chain_holds() ? kExitOk : kExitFail;
}

int cmd_lemmas(const std::string& path, const std::string& grid) {
  bool ok = true;
  if (!grid.empty()) {
    for (const auto& [k, n] : ht::detail::parse_grid(grid)) {
      const ht::InequalityCheck c = ht::check_matching_inequality(k, n);
      const bool claimed = ht::matching_inequality_range(k, n);
      std::cout << "record=inequality k=" << k << " n=" << n << " lhs=" << c.lhs << " rhs=" << c.rhs
                << " holds=" << c.holds << " claimed=" << claimed << "\n";
      ok = ok && c.holds == claimed;
    }
  }
  if (!path.empty()) {
    const ht::HyperTournament h = ht::parse_kht(read_input(path));
    const auto c = ht::hamiltonian_cycle(h);
    std::cout << "ham_cycle=" << (c ? 1 : 0) << "\n";
    if (!c) return kExitFail;
    std::cout << "cycle=" << join(c->vertices) << "\n";
    for (const auto& occ : ht::pair_occurrence_profile(*c)) {
      std::cout << "record=pair u=" << occ.pair.u << " v=" << occ.pair.v << " count=" << occ.count
                << " consecutive=" << occ.consecutive << "\n";
    }
    if (ht::cycle_bounds_supported(h.k(), h.n())) {
      const ht::CycleBoundsVerdict v = ht::check_cycle_bounds(*c);
      std::cout << "cycle_bounds=" << v.ok() << "\nmax_count=" << v.max_count << "\n";
      for (const auto& why : v.violations) std::cout << "violation=" << why << "\n";
      ok = ok && v.ok();
    } else {
      std::cout << "cycle_bounds=unsupported\n";
    }
  }
  std::cout << "verdict=" << (ok ? "pass" : "fail") << "\n";
  return ok ? kExitOk : kExitFail;
}

int cmd_experiment(const std::string& path, unsigned threads) {
  const ht::ExperimentConfig cfg = ht::parse_experiment_config(read_input(path));
  const auto start = std::chrono::steady_clock::now();
  const ht::ExperimentReport report = ht::run_experiment(cfg, thread_count(threads));
  std::cout << report.text;
  print_elapsed(start);
  return report.passed ? kExitOk : kExitFail;
}

int cmd_search_witness(int k, int n, std::uint64_t seed, std::uint64_t budget, std::uint64_t time_ms,
                       const std::string& out) {
  ht::WitnessBudget b;
  b.max_candidates = budget;
  if (time_ms != 0) b.time_limit = std::chrono::milliseconds(time_ms);
  const auto start = std::chrono::steady_clock::now();
  const ht::WitnessSearchResult r = ht::search_no_strong_witness(k, n, b, seed);
  print_elapsed(start);
  std::cerr << "candidates=" << r.candidates << " restarts=" << r.restarts << "\n";
  if (!r.witness) {
    std::cerr << "no witness found within budget\n";
    return kExitFail;
  }
  write_output(out, ht::serialize_kht(*r.witness));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypertournament toolkit"};
  app.require_subcommand(1);

  int k = 3;
  int n = 7;
  std::uint64_t seed = 0;
  bool strong = false;
  double density = -1;
  auto* gen = app.add_subcommand("gen", "Generate a seeded random k-tournament (.kht) or k-hyperdigraph (.khd)");
  gen->add_option("-k", k, "Arity")->required();
  gen->add_option("-n", n, "Vertex count")->required();
  gen->add_option("--seed", seed, "Seed");
  gen->add_flag("--strong", strong, "Rejection-sample a strong tournament");
  gen->add_option("--density", density, "Emit a .khd keeping each subset with this probability")
      ->check(CLI::Range(0.0, 1.0));

  std::string what;
  std::string input = "-";
  auto* check = app.add_subcommand("check", "Check a property of H");
  check->add_option("property", what, "strong | ham-path | ham-cycle | pancyclic | kings")
      ->required()
      ->check(CLI::IsMember({"strong", "ham-path", "ham-cycle", "pancyclic", "kings"}));
  check->add_option("input", input, "Input file or '-'");

  std::string trn_out;
  std::string cert_out;
  auto* degen = app.add_subcommand("degenerate", "Degenerate a strong k-tournament into a strong tournament");
  degen->add_option("input", input, "Input .kht or '-'");
  degen->add_option("--trn", trn_out, "Write the tournament here");
  degen->add_option("--cert", cert_out, "Write the certificate here");

  std::string trn_in;
  std::string cert_in;
  auto* verify = app.add_subcommand("verify-cert", "Check that a tournament is generated by H");
  verify->add_option("input", input, "Input .kht/.khd")->required();
  verify->add_option("trn", trn_in, "Tournament .trn")->required();
  verify->add_option("cert", cert_in, "Certificate .cert")->required();

  std::uint64_t limit = 0;
  bool list = false;
  auto* enumerate = app.add_subcommand("enumerate-th", "Enumerate the tournaments generated by H");
  enumerate->add_option("input", input, "Input file or '-'");
  enumerate->add_option("--limit", limit, "Fail if more members exist (0 = unlimited)");
  enumerate->add_flag("--list", list, "Print every member");

  std::string rule = "leading";
  auto* cover = app.add_subcommand("cover", "Path covers and independence numbers of H and its digraph");
  cover->add_option("input", input, "Input file or '-'");
  cover->add_option("--rule", rule, "Generated-arc rule: leading | closure");

  std::string lemma_input;
  std::string grid;
  auto* lemmas = app.add_subcommand("lemmas", "Pair-occurrence bounds on a Hamiltonian cycle and the matching inequality");
  lemmas->add_option("input", lemma_input, "Input .kht (optional)");
  lemmas->add_option("--grid", grid, "Inequality grid, e.g. 3:5-12,4:8");

  std::string config;
  unsigned threads = 0;
  auto* experiment = app.add_subcommand("experiment", "Run a seeded campaign from a config file");
  experiment->add_option("config", config, "Config file or '-'")->required();
  experiment->add_option("--threads", threads, "Worker threads (default HYPERTOUR_THREADS or hardware)");

  std::uint64_t budget = 20000;
  std::uint64_t time_ms = 0;
  std::string out;
  auto* search = app.add_subcommand("search-witness", "Search for a strong H with no strong tournament in T_H");
  search->add_option("-k", k, "Arity")->required();
  search->add_option("-n", n, "Vertex count")->required();
  search->add_option("--seed", seed, "Seed");
  search->add_option("--budget", budget, "Candidate budget");
  search->add_option("--time-limit-ms", time_ms, "Wall-clock limit (0 = none)");
  search->add_option("--out", out, "Write the witness here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      if (density >= 0) {
        std::cout << ht::serialize_khd(ht::random_hyperdigraph(k, n, density, seed));
      } else {
        std::cout << ht::serialize_kht(strong ? ht::random_strong_tournament(k, n, seed) : ht::random_tournament(k, n, seed));
      }
      return kExitOk;
    }
    if (*check) return cmd_check(what, input);
    if (*degen) return cmd_degenerate(input, trn_out, cert_out);
    if (*verify) return cmd_verify_cert(input, trn_in, cert_in);
    if (*enumerate) return cmd_enumerate(input, limit, list);
    if (*cover) return cmd_cover(input, rule);
    if (*lemmas) {
      if (lemma_input.empty() && grid.empty()) throw CLI::ValidationError("lemmas", "give an input file or --grid");
      return cmd_lemmas(lemma_input, grid);
    }
    if (*experiment) return cmd_experiment(config, threads);
    if (*search) return cmd_search_witness(k, n, seed, budget, time_ms, out);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ht::ParseError& e) {
    std::cerr << "error: " << ht::to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const ht::Error& e) {
    std::cerr << "error: " << ht::to_string(e.kind()) << ": " << e.what() << "\n";
    const bool usage = e.kind() == ht::ErrorKind::kConfigError || e.kind() == ht::ErrorKind::kBadTuple ||
                       e.kind() == ht::ErrorKind::kDuplicateSubset || e.kind() == ht::ErrorKind::kMissingSubset ||
                       e.kind() == ht::ErrorKind::kRangeUnsupported;
    return usage ? kExitUsage : kExitFail;
  }
  return kExitUsage;
}
