// chordwitness: command-line front end.
//
//   chordwitness check [FILE]                 theorem check on one graph
//   chordwitness extract [FILE] --cycle "..." witness for one cycle
//   chordwitness gen --family F --n N         emit a generated graph
//   chordwitness campaign --family F --n N --count C --seed S
//
// Exit codes: 0 ok, 1 theorem violation, 2 parse/usage error, 3 size guard
// exceeded, 4 precondition failure (e.g. not 3-connected), 5 extractor
// could not certify a witness.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "chordwitness/chordwitness.hpp"

namespace cw = chordwitness;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kGuard = 3, kPrecondition = 4, kIncomplete = 5 };

int exit_for(cw::ErrorKind kind) {
  switch (kind) {
    case cw::ErrorKind::parse:
    case cw::ErrorKind::invalid_input: return kUsage;
    case cw::ErrorKind::guard_exceeded: return kGuard;
    case cw::ErrorKind::precondition: return kPrecondition;
    case cw::ErrorKind::extractor_incomplete: return kIncomplete;
  }
  return kUsage;
}

void setup_logging() {
  auto logger = spdlog::stderr_logger_st("chordwitness");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("CHORDWITNESS_LOG")) spdlog::set_level(spdlog::level::from_str(level));
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw cw::Error(cw::ErrorKind::parse, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Input errors of any kind count as parse failures (exit 2).
cw::Graph load_graph(const std::string& path, const std::string& format) {
  try {
    const std::string text = read_input(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    const bool json = format == "json" || (format == "auto" && first != std::string::npos && text[first] == '{');
    if (json) return cw::parse_graph_json(text);
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) return cw::parse_graph6(line);
    return cw::parse_graph6("");
  } catch (const cw::Error& e) {
    throw cw::Error(cw::ErrorKind::parse, e.what());
  }
}

std::vector<cw::Vertex> parse_cycle(const std::string& text) {
  std::vector<cw::Vertex> out;
  std::string normalized = text;
  for (char& ch : normalized)
    if (ch == ',' || ch == '-') ch = ' ';
  std::istringstream in(normalized);
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw cw::Error(cw::ErrorKind::parse, "bad cycle vertex: " + token);
    }
  }
  return out;
}

cw::Graph generate_named_or_family(const std::string& family, int n, int m, int flips, std::uint64_t seed) {
  for (const char* name : {"cube", "octahedron", "petersen", "k4", "k5", "k33"})
    if (family == name) return cw::named(family);
  cw::GenSpec spec;
  spec.family = cw::family_from_string(family);
  spec.n = n;
  spec.m = m;
  spec.flips = flips;
  spec.seed = seed;
  return cw::generate(spec);
}

struct GuardFlags {
  int max_n = 18;
  int max_minor_n = 16;
  bool assume_minor_free = false;
  bool timing = false;
  std::size_t limit = 10000;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-n", max_n, "Vertex limit for longest-cycle search")->capture_default_str();
    cmd->add_option("--max-minor-n", max_minor_n, "Vertex limit for the K3,3 minor oracle")->capture_default_str();
    cmd->add_flag("--assume-minor-free", assume_minor_free, "Skip the minor oracle; treat input as K3,3-minor-free");
    cmd->add_option("--limit", limit, "Maximum longest cycles enumerated")->capture_default_str();
    cmd->add_flag("--timing", timing, "Include wall-clock timing in reports");
  }

  cw::CheckOptions options() const { return {assume_minor_free, max_n, max_minor_n, limit, timing}; }
};

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Certifying longest-cycle chord checker"};
  app.require_subcommand(1);

  std::string input, format = "auto";
  GuardFlags guards;

  auto* check = app.add_subcommand("check", "Check that every longest cycle has a chord");
  check->add_option("input", input, "graph6 or JSON file (default stdin)");
  check->add_option("--format", format, "Input format")->check(CLI::IsMember({"auto", "g6", "json"}));
  guards.attach(check);

  std::string cycle_text;
  auto* extract = app.add_subcommand("extract", "Certificate for a cycle: chord, longer cycle, or K3,3 minor");
  extract->add_option("input", input, "graph6 or JSON file (default stdin)");
  extract->add_option("--format", format, "Input format")->check(CLI::IsMember({"auto", "g6", "json"}));
  extract->add_option("--cycle", cycle_text, "Cycle as a vertex list, e.g. \"0 1 2 3\"")->required();

  std::string family = "apollonian", out_format = "g6";
  int n = 8, m = -1, flips = -1;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("--family", family, "wheel, prism, apollonian, flip_triangulation, tutte_wheel, or a named graph");
  gen->add_option("--n", n, "Vertex count")->capture_default_str();
  gen->add_option("--m", m, "Edge count (tutte_wheel)");
  gen->add_option("--flips", flips, "Diagonal flips (flip_triangulation)");
  gen->add_option("--seed", seed, "Seed")->capture_default_str();
  gen->add_option("--format", out_format, "Output format")->check(CLI::IsMember({"g6", "json"}));

  std::size_t count = 0;
  unsigned parallel = 1;
  auto* campaign = app.add_subcommand("campaign", "Check a seeded stream of generated graphs (JSON lines)");
  campaign->add_option("--family", family, "Generator family")->capture_default_str();
  campaign->add_option("--n", n, "Vertex count")->capture_default_str();
  campaign->add_option("--m", m, "Edge count (tutte_wheel)");
  campaign->add_option("--flips", flips, "Diagonal flips (flip_triangulation)");
  campaign->add_option("--count", count, "Number of graphs")->required();
  campaign->add_option("--seed", seed, "Campaign seed")->capture_default_str();
  campaign->add_option("--parallel", parallel, "Worker threads")->capture_default_str();
  guards.attach(campaign);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) {
      const cw::Graph g = load_graph(input, format);
      spdlog::info("check: n={} m={}", g.order(), g.size());
      const cw::Report r = cw::check_graph(g, guards.options());
      std::cout << cw::report_to_json(r, guards.timing).dump() << '\n';
      if (r.status == cw::CheckStatus::violation) spdlog::error("chordless longest cycle in a K3,3-minor-free graph");
      return cw::exit_code(r.status);
    }

    if (extract->parsed()) {
      const cw::Graph g = load_graph(input, format);
      const auto seq = parse_cycle(cycle_text);
      const cw::Cycle c = cw::verify_cycle(g, seq);
      const cw::Witness w = cw::extract_witness(g, c);
      spdlog::info("extract: rule {}", cw::to_string(w.rule));
      std::cout << cw::witness_to_json(c, w).dump() << '\n';
      return kOk;
    }

    if (gen->parsed()) {
      const cw::Graph g = generate_named_or_family(family, n, m, flips, seed);
      std::cout << (out_format == "json" ? cw::graph_to_json(g).dump() : cw::emit_graph6(g)) << '\n';
      return kOk;
    }

    if (campaign->parsed()) {
      cw::CampaignOptions options;
      options.spec.family = cw::family_from_string(family);
      options.spec.n = n;
      options.spec.m = m;
      options.spec.flips = flips;
      options.count = count;
      options.seed = seed;
      options.parallel = parallel;
      options.check = guards.options();
      const cw::CampaignSummary s = cw::run_campaign(options, std::cout);
      spdlog::info("campaign: {} instances, {} violations, {} errors", s.instances, s.violations, s.errors);
      return s.violations > 0 ? kViolation : kOk;
    }
  } catch (const cw::Error& e) {
    std::cerr << "error (" << cw::to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_for(e.kind());
  }
  return kUsage;
}
