#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "hypertour/covers.hpp"
#include "hypertour/degenerate.hpp"
#include "hypertour/hamiltonian.hpp"
#include "hypertour/lemmas.hpp"
#include "hypertour/pancyclic.hpp"

// Seeded experiment campaigns.
//
// Config: one `key = value` per line, '#' starts a comment. Keys:
//   campaign  degenerate-sweep | lemma-sweep | pancyclic-sweep | cover-sweep |
//             kings-sweep | witness-search                        (required)
//   grid      comma list of k:n or k:n1-n2                        (required)
//   trials    trials per grid point                               (default 1)
//   seed      master seed                                         (default 0)
//   budget    witness-search candidates / cover-sweep search nodes (default 0 = library default)
//
// Report: one record per line, each a space-separated list of key=value
// fields, closed by `verdict=pass` or `verdict=fail`. Reports contain no
// timings, so a fixed config always yields the same bytes.

namespace hypertour {

enum class Campaign {
  kDegenerateSweep,
  kLemmaSweep,
  kPancyclicSweep,
  kCoverSweep,
  kKingsSweep,
  kWitnessSearch,
};

inline std::string_view to_string(Campaign c) {
  switch (c) {
    case Campaign::kDegenerateSweep: return "degenerate-sweep";
    case Campaign::kLemmaSweep: return "lemma-sweep";
    case Campaign::kPancyclicSweep: return "pancyclic-sweep";
    case Campaign::kCoverSweep: return "cover-sweep";
    case Campaign::kKingsSweep: return "kings-sweep";
    case Campaign::kWitnessSearch: return "witness-search";
  }
  return "unknown";
}

struct ExperimentConfig {
  Campaign campaign = Campaign::kDegenerateSweep;
  std::vector<std::pair<int, int>> grid;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::uint64_t parse_u64(std::string_view s, std::string_view key) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    fail(ErrorKind::kConfigError, "bad value '" + std::string(s) + "' for " + std::string(key));
  }
  return v;
}

inline std::vector<std::pair<int, int>> parse_grid(std::string_view s) {
  std::vector<std::pair<int, int>> grid;
  while (!s.empty()) {
    const std::size_t comma = s.find(',');
    const std::string_view item = trim(s.substr(0, comma));
    s = comma == std::string_view::npos ? std::string_view{} : s.substr(comma + 1);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) fail(ErrorKind::kConfigError, "grid entry '" + std::string(item) + "' lacks ':'");
    const int k = static_cast<int>(parse_u64(item.substr(0, colon), "grid k"));
    const std::string_view ns = item.substr(colon + 1);
    const std::size_t dash = ns.find('-');
    const int lo = static_cast<int>(parse_u64(ns.substr(0, dash), "grid n"));
    const int hi = dash == std::string_view::npos ? lo : static_cast<int>(parse_u64(ns.substr(dash + 1), "grid n"));
    if (k < 2 || lo < k || hi < lo || hi > kMaxVertices) {
      fail(ErrorKind::kConfigError, "grid entry '" + std::string(item) + "' out of range");
    }
    for (int n = lo; n <= hi; ++n) grid.emplace_back(k, n);
  }
  return grid;
}

}  // namespace detail

inline ExperimentConfig parse_experiment_config(std::string_view text) {
  ExperimentConfig cfg;
  bool have_campaign = false;
  bool have_grid = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorKind::kConfigError, "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = detail::trim(line.substr(0, eq));
    const std::string_view value = detail::trim(line.substr(eq + 1));
    if (key == "campaign") {
      bool known = false;
      for (Campaign c : {Campaign::kDegenerateSweep, Campaign::kLemmaSweep, Campaign::kPancyclicSweep,
                         Campaign::kCoverSweep, Campaign::kKingsSweep, Campaign::kWitnessSearch}) {
        if (value == to_string(c)) {
          cfg.campaign = c;
          known = true;
        }
      }
      if (!known) fail(ErrorKind::kConfigError, "unknown campaign '" + std::string(value) + "'");
      have_campaign = true;
    } else if (key == "grid") {
      cfg.grid = detail::parse_grid(value);
      have_grid = true;
    } else if (key == "trials") {
      cfg.trials = detail::parse_u64(value, key);
    } else if (key == "seed") {
      cfg.seed = detail::parse_u64(value, key);
    } else if (key == "budget") {
      cfg.budget = detail::parse_u64(value, key);
    } else {
      fail(ErrorKind::kConfigError, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_campaign) fail(ErrorKind::kConfigError, "missing 'campaign'");
  if (!have_grid || cfg.grid.empty()) fail(ErrorKind::kConfigError, "missing 'grid'");
  return cfg;
}

/// Seed of trial `trial` at grid point (k, n); independent of grid order.
inline std::uint64_t trial_seed(std::uint64_t master, int k, int n, std::uint64_t trial) {
  const std::uint64_t point = (static_cast<std::uint64_t>(k) << 32) | static_cast<std::uint64_t>(n);
  return derive_seed(derive_seed(master, point), trial);
}

struct TrialOutcome {
  bool passed = true;
  std::string reason;
  std::map<std::string, std::int64_t> metrics;

  void require(bool cond, std::string_view why) {
    if (!cond && passed) {
      passed = false;
      reason = std::string(why);
    }
  }
};

/// Runs fn(i) for i in [0, count) on `threads` workers; results keep index order.
template <typename Fn>
std::vector<TrialOutcome> run_indexed(std::uint64_t count, unsigned threads, Fn&& fn) {
  std::vector<TrialOutcome> out(count);
  auto guarded = [&](std::uint64_t i) {
    try {
      out[i] = fn(i);
    } catch (const std::exception& e) {
      out[i].passed = false;
      out[i].reason = e.what();
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) guarded(i);
    return out;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::uint64_t>(threads, count); ++t) {
    pool.emplace_back([&] {
      for (std::uint64_t i = next++; i < count; i = next++) guarded(i);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

namespace detail {

inline std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ' ' || c == '\n' || c == '=') c = '_';
  }
  return s;
}

inline bool cover_is_partition(const std::vector<std::vector<VertexId>>& paths, int n) {
  VertexSet seen = 0;
  for (const auto& p : paths) {
    for (VertexId v : p) {
      if (contains(seen, v)) return false;
      seen |= bit_of(v);
    }
  }
  return seen == full_set(n);
}

inline bool digraph_path_ok(const Digraph& d, const std::vector<VertexId>& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!d.has_arc(p[i], p[i + 1])) return false;
  }
  return true;
}

inline std::vector<std::vector<VertexId>> vertex_lists(const PathCover& c) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& p : c.paths) out.push_back(p.vertices);
  return out;
}

/// Checks every witness of a cover report against its claimed value.
inline void audit_cover_report(const HyperDigraph& h, const CoverReport& r, TrialOutcome& out) {
  out.require(r.chain_holds(), "chain_inequality");
  out.require(cover_is_partition(vertex_lists(r.cover_h), h.n()), "cover_h_not_partition");
  for (const auto& p : r.cover_h.paths) out.require(is_valid_path(p, &h), "cover_h_path_invalid");
  out.require(cover_is_partition(r.cover_d, h.n()), "cover_d_not_partition");
  for (const auto& p : r.cover_d) out.require(digraph_path_ok(r.generated, p), "cover_d_path_invalid");
  out.require(popcount(r.independent_d) == r.alpha_d && is_independent(r.generated, r.independent_d),
              "independent_d_invalid");
  out.require(popcount(r.independent_h) == r.alpha_h && is_independent(h, r.independent_h),
              "independent_h_invalid");
  out.require(is_independent(h, r.independent_d), "independence_transfer");
  out.require(r.lift_failures == 0 && r.lifted_cover.size() == r.pc_d, "lift_failed");
  for (const auto& p : r.lifted_cover.paths) out.require(is_valid_path(p, &h), "lifted_path_invalid");
}

inline TrialOutcome degenerate_trial(int k, int n, std::uint64_t seed) {
  TrialOutcome out;
  const HyperTournament h = random_strong_tournament(k, n, seed);
  const Degeneration d = degenerate_tournament(h);
  const MembershipVerdict verdict = verify_membership(d.tournament, h, d.certificate);
  out.require(verdict.ok, "membership_" + verdict.reason);
  out.require(d.tournament.is_strong(), "tournament_not_strong");
  const BipartiteInstance inst = build_bipartite(h, d.cycle);
  const std::int64_t floor = pair_degree_floor(k, n);
  std::int64_t min_pair = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) min_pair = std::min<std::int64_t>(min_pair, inst.pair_degree(i));
  const auto arc_deg = inst.arc_degrees();
  const std::int64_t max_arc = arc_deg.empty() ? 0 : *std::max_element(arc_deg.begin(), arc_deg.end());
  out.require(min_pair >= floor, "pair_degree_below_floor");
  out.require(max_arc <= static_cast<std::int64_t>(binomial(k, 2)), "arc_degree_above_ck2");
  for (const auto& e : d.certificate.entries) out.require(precedes(e.arc, e.u, e.v), "orientation_mismatch");
  out.metrics["min_pair_degree"] = min_pair;
  out.metrics["max_arc_degree"] = max_arc;
  return out;
}

inline TrialOutcome kings_trial(int k, int n, std::uint64_t seed) {
  TrialOutcome out;
  const HyperTournament h = random_strong_tournament(k, n, seed);
  const auto kings = two_kings(h);
  if (degeneration_in_range(k, n)) out.require(kings.size() >= 3, "fewer_than_three_2_kings");
  out.metrics["kings"] = static_cast<std::int64_t>(kings.size());
  return out;
}

inline TrialOutcome pancyclic_trial(int k, int n, std::uint64_t seed) {
  TrialOutcome out;
  const HyperTournament h = random_strong_tournament(k, n, seed);
  const bool vertex_pancyclic = is_vertex_pancyclic(h);
  if (k >= 3 && n >= k + 2) out.require(vertex_pancyclic, "not_vertex_pancyclic");
  const auto c = hamiltonian_cycle(h);
  std::int64_t arcs = -1;
  if (c) arcs = static_cast<std::int64_t>(pancyclic_hyperarcs_on_cycle(h, *c).size());
  if (degeneration_in_range(k, n)) out.require(arcs >= 3, "fewer_than_three_pancyclic_hyperarcs");
  out.metrics["vertex_pancyclic"] = vertex_pancyclic ? 1 : 0;
  out.metrics["pancyclic_arcs"] = arcs;
  return out;
}

inline TrialOutcome cover_trial(int k, int n, std::uint64_t seed, double density, std::uint64_t budget) {
  TrialOutcome out;
  const HyperDigraph h = random_hyperdigraph(k, n, density, seed);
  ExhaustiveBounds bounds;
  if (budget != 0) bounds.node_budget = budget;
  const CoverReport r = gallai_milgram_chain(h, GeneratedArcRule::kLeadingPair, bounds);
  audit_cover_report(h, r, out);
  const CoverReport closure = gallai_milgram_chain(h, GeneratedArcRule::kAllPrecedencePairs, bounds);
  out.metrics["arcs"] = static_cast<std::int64_t>(h.size());
  out.metrics["pc_h"] = r.pc_h;
  out.metrics["pc_d"] = r.pc_d;
  out.metrics["alpha_d"] = r.alpha_d;
  out.metrics["alpha_h"] = r.alpha_h;
  out.metrics["closure_chain_breaks"] = closure.chain_holds() ? 0 : 1;
  return out;
}

inline TrialOutcome cycle_bounds_trial(int k, int n, std::uint64_t seed) {
  TrialOutcome out;
  const HyperTournament h = random_strong_tournament(k, n, seed);
  const auto c = hamiltonian_cycle(h);
  out.require(c.has_value(), "no_hamiltonian_cycle");
  if (!c) return out;
  const CycleBoundsVerdict v = check_cycle_bounds(*c);
  out.require(v.ok(), v.ok() ? "" : sanitize(v.violations.front()));
  out.metrics["max_pair_count"] = v.max_count;
  out.metrics["pairs_at_four"] = v.pairs_at_four;
  return out;
}

inline TrialOutcome witness_trial(int k, int n, std::uint64_t seed, std::uint64_t budget) {
  TrialOutcome out;
  WitnessBudget b;
  b.max_candidates = budget == 0 ? 2000 : budget;
  const WitnessSearchResult r = search_no_strong_witness(k, n, b, seed);
  if (r.witness) {
    out.require(is_no_strong_witness(*r.witness), "witness_failed_verification");
    if (degeneration_in_range(k, n)) out.require(false, "witness_inside_degeneration_range");
  }
  out.metrics["found"] = r.witness ? 1 : 0;
  out.metrics["candidates"] = static_cast<std::int64_t>(r.candidates);
  return out;
}

}  // namespace detail

struct ExperimentReport {
  std::string text;
  bool passed = true;
};

/// Runs a campaign. Output depends only on the config, never on `threads`.
inline ExperimentReport run_experiment(const ExperimentConfig& cfg, unsigned threads = 1) {
  ExperimentReport report;
  std::string& t = report.text;
  t += "report=hypertour-experiment version=1\n";
  t += "campaign=" + std::string(to_string(cfg.campaign)) + " seed=" + std::to_string(cfg.seed) +
       " trials=" + std::to_string(cfg.trials) + " budget=" + std::to_string(cfg.budget) + "\n";
  std::uint64_t total = 0;
  std::uint64_t failed = 0;

  for (const auto& [k, n] : cfg.grid) {
    bool case_ok = true;
    if (cfg.campaign == Campaign::kLemmaSweep) {
      const InequalityCheck ineq = check_matching_inequality(k, n);
      const bool expected = matching_inequality_range(k, n);
      const bool ok = ineq.holds == expected;
      case_ok = ok;
      t += "record=inequality k=" + std::to_string(k) + " n=" + std::to_string(n) + " lhs=" + std::to_string(ineq.lhs) +
           " rhs=" + std::to_string(ineq.rhs) + " holds=" + (ineq.holds ? "1" : "0") +
           " claimed=" + (expected ? "1" : "0") + " ok=" + (ok ? "1" : "0") + "\n";
      if (!ok) ++failed;
      ++total;
    }
    const bool run_trials =
        cfg.campaign != Campaign::kLemmaSweep || (cycle_bounds_supported(k, n) && n >= k + 2);
    if (!run_trials) {
      if (!case_ok) report.passed = false;
      continue;
    }

    const auto outcomes = run_indexed(cfg.trials, threads, [&](std::uint64_t i) {
      const std::uint64_t seed = trial_seed(cfg.seed, k, n, i);
      switch (cfg.campaign) {
        case Campaign::kDegenerateSweep: return detail::degenerate_trial(k, n, seed);
        case Campaign::kKingsSweep: return detail::kings_trial(k, n, seed);
        case Campaign::kPancyclicSweep: return detail::pancyclic_trial(k, n, seed);
        case Campaign::kCoverSweep: {
          const double density = cfg.trials > 1 ? static_cast<double>(i) / static_cast<double>(cfg.trials - 1) : 1.0;
          return detail::cover_trial(k, n, seed, density, cfg.budget);
        }
        case Campaign::kLemmaSweep: return detail::cycle_bounds_trial(k, n, seed);
        case Campaign::kWitnessSearch: return detail::witness_trial(k, n, seed, cfg.budget);
      }
      return TrialOutcome{};
    });

    std::uint64_t passed = 0;
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> range;  // min, max
    std::map<std::string, std::int64_t> sums;
    for (std::uint64_t i = 0; i < outcomes.size(); ++i) {
      const TrialOutcome& o = outcomes[i];
      if (o.passed) {
        ++passed;
      } else {
        t += "record=failure k=" + std::to_string(k) + " n=" + std::to_string(n) + " trial=" + std::to_string(i) +
             " seed=" + std::to_string(trial_seed(cfg.seed, k, n, i)) + " reason=" + detail::sanitize(o.reason) + "\n";
      }
      for (const auto& [key, value] : o.metrics) {
        auto [it, fresh] = range.try_emplace(key, value, value);
        if (!fresh) {
          it->second.first = std::min(it->second.first, value);
          it->second.second = std::max(it->second.second, value);
        }
        sums[key] += value;
      }
    }
    t += "record=case k=" + std::to_string(k) + " n=" + std::to_string(n) + " trials=" + std::to_string(outcomes.size()) +
         " passed=" + std::to_string(passed) + " failed=" + std::to_string(outcomes.size() - passed);
    for (const auto& [key, mm] : range) {
      t += " " + key + "_min=" + std::to_string(mm.first) + " " + key + "_max=" + std::to_string(mm.second) + " " +
           key + "_sum=" + std::to_string(sums[key]);
    }
    t += "\n";
    total += outcomes.size();
    failed += outcomes.size() - passed;
  }
  report.passed = report.passed && failed == 0;
  t += "record=summary checks=" + std::to_string(total) + " failed=" + std::to_string(failed) + "\n";
  t += std::string("verdict=") + (report.passed ? "pass" : "fail") + "\n";
  return report;
}

}  // namespace hypertour
