#pragma once

// Per-graph theorem checks and seeded campaigns, shared by the CLI and the
// test suites. Reports are JSON objects carrying a "schema" tag; campaigns
// stream one report per line followed by a summary line.

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <cstdio>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "chordwitness/connectivity.hpp"
#include "chordwitness/cycle.hpp"
#include "chordwitness/extractor.hpp"
#include "chordwitness/generators.hpp"
#include "chordwitness/io.hpp"
#include "chordwitness/longest_cycle.hpp"
#include "chordwitness/minors.hpp"

namespace chordwitness {

inline constexpr const char* kReportSchema = "chordwitness.report/1";
inline constexpr const char* kCampaignSchema = "chordwitness.campaign/1";

struct CheckOptions {
  bool assume_minor_free = false;
  int max_n = 18;
  int max_minor_n = 16;
  std::size_t limit = 10000;
  bool timing = false;
};

enum class CheckStatus {
  pass,                 // 3-connected, every longest cycle has a chord
  exempt,               // a chordless longest cycle, but G has a K3,3 minor
  violation,            // a chordless longest cycle in a K3,3-minor-free graph
  not_three_connected,
};

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::exempt: return "exempt";
    case CheckStatus::violation: return "violation";
    case CheckStatus::not_three_connected: return "not_three_connected";
  }
  return "unknown";
}

struct Report {
  std::string input_hash;
  int n = 0;
  std::size_t m = 0;
  bool three_connected = false;
  std::optional<bool> k33_minor_free;  // unset when not 3-connected
  bool minor_free_assumed = false;
  std::size_t longest_length = 0;
  std::size_t longest_count = 0;
  bool truncated = false;
  std::map<std::size_t, std::size_t> chord_histogram;  // chords per longest cycle -> cycles
  std::size_t chordless_count = 0;
  std::vector<nlohmann::json> witnesses;  // certificates for chordless longest cycles
  std::vector<std::string> witness_rules;
  CheckStatus status = CheckStatus::pass;
  double millis = 0.0;
};

/// FNV-1a 64 of the graph6 encoding, as 16 hex digits.
inline std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : emit_graph6(g)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Checks that every longest cycle of g has a chord. Throws guard_exceeded
/// when an exponential search is refused.
inline Report check_graph(const Graph& g, const CheckOptions& options = {}) {
  const auto started = std::chrono::steady_clock::now();
  Report r;
  r.input_hash = graph_hash(g);
  r.n = g.order();
  r.m = g.size();
  r.three_connected = is_three_connected(g);
  if (!r.three_connected) {
    r.status = CheckStatus::not_three_connected;
    return r;
  }

  const LongestCycles longest = longest_cycles(g, {options.limit, options.max_n});
  if (options.assume_minor_free) {
    r.minor_free_assumed = true;
    r.k33_minor_free = true;
  } else {
    r.k33_minor_free = !has_minor(g, Pattern::k33, {options.max_minor_n});
  }

  r.longest_length = longest.length;
  r.longest_count = longest.cycles.size();
  r.truncated = longest.truncated;
  for (const Cycle& c : longest.cycles) {
    const std::size_t count = chords(g, c).size();
    ++r.chord_histogram[count];
    if (count > 0) continue;
    ++r.chordless_count;
    const Witness w = extract_witness(g, c);
    r.witness_rules.emplace_back(to_string(w.rule));
    r.witnesses.push_back(witness_to_json(c, w));
  }
  if (r.chordless_count == 0) r.status = CheckStatus::pass;
  else r.status = *r.k33_minor_free ? CheckStatus::violation : CheckStatus::exempt;
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return r;
}

inline nlohmann::json report_to_json(const Report& r, bool include_timing = false) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["input_hash"] = r.input_hash;
  j["n"] = r.n;
  j["m"] = r.m;
  j["three_connected"] = r.three_connected;
  j["k33_minor_free"] = r.k33_minor_free ? nlohmann::json(*r.k33_minor_free) : nlohmann::json(nullptr);
  j["minor_free_assumed"] = r.minor_free_assumed;
  j["longest_length"] = r.longest_length;
  j["longest_count"] = r.longest_count;
  j["truncated"] = r.truncated;
  nlohmann::json hist = nlohmann::json::object();
  for (auto [chords_per_cycle, cycles] : r.chord_histogram) hist[std::to_string(chords_per_cycle)] = cycles;
  j["chord_histogram"] = hist;
  j["chordless_count"] = r.chordless_count;
  j["witnesses"] = r.witnesses;
  j["status"] = to_string(r.status);
  if (include_timing) j["millis"] = r.millis;
  return j;
}

/// Exit code contract for a single check: 0 holds (or exempt), 1 theorem
/// violation, 4 not 3-connected.
inline int exit_code(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
    case CheckStatus::exempt: return 0;
    case CheckStatus::violation: return 1;
    case CheckStatus::not_three_connected: return 4;
  }
  return 1;
}

struct CampaignOptions {
  GenSpec spec;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  unsigned parallel = 1;
  CheckOptions check;
};

struct CampaignSummary {
  std::size_t instances = 0;
  std::size_t passes = 0;
  std::size_t exempt = 0;
  std::size_t violations = 0;
  std::size_t not_three_connected = 0;
  std::size_t errors = 0;
  std::map<std::string, std::size_t> rule_histogram;
};

inline std::uint64_t instance_seed(std::uint64_t campaign_seed, std::size_t index) {
  return mix_seed(campaign_seed + static_cast<std::uint64_t>(index));
}

/// Generates `count` graphs and checks each. Lines are written in instance
/// order whatever the parallelism, so output depends only on the options
/// (timing excluded).
inline CampaignSummary run_campaign(const CampaignOptions& options, std::ostream& out) {
  struct Outcome {
    std::string line;
    std::optional<CheckStatus> status;
    std::vector<std::string> rules;
  };

  auto work = [&](std::size_t index) {
    Outcome o;
    GenSpec spec = options.spec;
    spec.seed = instance_seed(options.seed, index);
    nlohmann::json j;
    try {
      const Graph g = generate(spec);
      const Report r = check_graph(g, options.check);
      j = report_to_json(r, options.check.timing);
      j["graph6"] = emit_graph6(g);
      o.status = r.status;
      o.rules = r.witness_rules;
    } catch (const Error& e) {
      j["schema"] = kReportSchema;
      j["error"] = to_string(e.kind());
      j["message"] = e.what();
    }
    j["index"] = index;
    j["family"] = to_string(spec.family);
    j["seed"] = spec.seed;
    o.line = j.dump();
    return o;
  };

  CampaignSummary summary;
  auto consume = [&](const Outcome& o) {
    out << o.line << '\n';
    ++summary.instances;
    if (!o.status) {
      ++summary.errors;
    } else {
      switch (*o.status) {
        case CheckStatus::pass: ++summary.passes; break;
        case CheckStatus::exempt: ++summary.exempt; break;
        case CheckStatus::violation: ++summary.violations; break;
        case CheckStatus::not_three_connected: ++summary.not_three_connected; break;
      }
    }
    for (const auto& rule : o.rules) ++summary.rule_histogram[rule];
  };

  const unsigned workers = std::max(1u, options.parallel);
  if (workers == 1) {
    for (std::size_t i = 0; i < options.count; ++i) consume(work(i));
  } else {
    std::vector<std::optional<Outcome>> slots(options.count);
    std::mutex mu;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < options.count; i = next++) {
          Outcome o = work(i);
          std::lock_guard lock(mu);
          slots[i] = std::move(o);
          ready.notify_all();
        }
      });
    for (std::size_t i = 0; i < options.count; ++i) {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[i].has_value(); });
      Outcome o = std::move(*slots[i]);
      slots[i].reset();
      lock.unlock();
      consume(o);
    }
  }

  nlohmann::json s;
  s["schema"] = kCampaignSchema;
  s["family"] = to_string(options.spec.family);
  s["n"] = options.spec.n;
  s["count"] = options.count;
  s["seed"] = options.seed;
  s["summary"] = {{"instances", summary.instances}, {"pass", summary.passes},         {"exempt", summary.exempt},
                  {"violations", summary.violations}, {"not_three_connected", summary.not_three_connected},
                  {"errors", summary.errors}};
  s["rule_histogram"] = summary.rule_histogram;
  out << s.dump() << '\n';
  return summary;
}

}  // namespace chordwitness
