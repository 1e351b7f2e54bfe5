#include "crossfree/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "crossfree/certification.hpp"
#include "crossfree/extremal.hpp"
#include "crossfree/pipeline.hpp"
#include "crossfree/report_json.hpp"

namespace crossfree::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::string input;
  std::optional<std::string> n;  // integer, or lo..hi for sweep
  int k = 2;
  std::optional<double> a;
  std::optional<double> b;
  std::string mode = "cross";
  std::string universe = "proper";
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> budget_ms;
  std::optional<std::uint64_t> max_nodes;
  std::string format;
  bool schedule = false;
  bool force = false;
  bool lenient = false;
  std::string out_path;
  int pivot = 1;
  std::string kind = "laminar";
  std::string shape = "random";
  std::optional<std::size_t> target;
};

int parse_int(const std::string& text, const char* what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw UsageError(std::string("invalid ") + what + " '" + text + "'");
  return value;
}

int single_n(const RunConfig& c) {
  if (!c.n) throw UsageError(c.command + " requires --n");
  const int n = parse_int(*c.n, "--n");
  if (n < 1 || n > GroundSet::kMaxGround) throw UsageError("--n must lie in 1..64");
  return n;
}

std::pair<int, int> n_range(const RunConfig& c) {
  if (!c.n) throw UsageError(c.command + " requires --n");
  const auto dots = c.n->find("..");
  if (dots == std::string::npos) {
    const int n = single_n(c);
    return {n, n};
  }
  const int lo = parse_int(c.n->substr(0, dots), "--n lower end");
  const int hi = parse_int(c.n->substr(dots + 2), "--n upper end");
  if (lo < 1 || hi < lo || hi > GroundSet::kMaxGround) throw UsageError("--n range must satisfy 1 <= lo <= hi <= 64");
  return {lo, hi};
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw UsageError("--format " + c.format + " is not available for " + c.command);
}

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + c.out_path + "'");
  file << text;
}

std::string dump(const json::Json& j) { return j.dump(2) + "\n"; }

Family load(const RunConfig& c, std::ostream& err) {
  if (c.lenient) {
    std::ifstream file(c.input, std::ios::binary);
    if (!file) throw UsageError("cannot read '" + c.input + "'");
    std::ostringstream text;
    text << file.rdbuf();
    ParseResult parsed = parse_family(text.str(), DuplicatePolicy::lenient);
    for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
    return std::move(parsed.family);
  }
  return read_family_file(c.input);
}

extremal::SearchBudget budget_of(const RunConfig& c) {
  extremal::SearchBudget budget;
  if (c.budget_ms) budget.max_time = std::chrono::milliseconds(*c.budget_ms);
  budget.max_nodes = c.max_nodes;
  return budget;
}

std::string join_sets(std::span<const Subset> sets) {
  std::string out;
  for (const Subset& s : sets) {
    if (!out.empty()) out += ' ';
    out += s.to_string();
  }
  return out;
}

// ---- text renderers ------------------------------------------------------

std::string certify_text(const CertReport& r) {
  std::ostringstream os;
  os << "verdict: " << (r.cross_free() ? "cross-free" : "witness") << '\n';
  os << "k: " << r.k << "  mode: " << to_string(r.mode) << "  members: " << r.members << '\n';
  os << "pairs: crossing=" << r.pairs.crossing << " weakly_crossing=" << r.pairs.weakly_crossing << '\n';
  os << "max_clique_found: " << r.max_clique_found << '\n';
  if (r.witness) os << "witness: " << join_sets(r.witness_sets) << '\n';
  return os.str();
}

void check_text(std::ostream& os, const pipeline::Check& c) {
  os << (!c.applicable ? "N/A  " : c.passed ? "PASS " : "FAIL ") << c.name;
  if (c.block) os << " block=" << *c.block;
  if (c.element) os << " y=" << *c.element;
  os << ": " << c.lhs << ' ' << pipeline::to_string(c.relation) << ' ' << c.rhs;
  if (!c.note.empty()) os << " [" << c.note << ']';
  os << '\n';
}

void bounds_text(std::ostream& os, const pipeline::BoundsReport& r) {
  os << "window (" << r.window.a << ", " << r.window.b << "]: |F_ab|=" << r.window_size << " chains=" << r.gamma_size
     << " N=" << r.nice << " M=" << r.incidences << " failures=" << r.failures() << '\n';
  for (const auto& c : r.checks) {
    os << "  ";
    check_text(os, c);
  }
}

std::string bounds_report_text(const pipeline::BoundsReport& r) {
  std::ostringstream os;
  os << "hypothesis: " << (r.hypothesis_holds ? "holds" : "violated") << '\n';
  os << "k: " << r.k << "  n: " << r.n << "  |F|: " << r.family_size << "  stripped: " << r.stripped_size << '\n';
  bounds_text(os, r);
  os << (r.all_passed() ? "all checks passed\n" : "checks failed\n");
  return os.str();
}

std::string schedule_run_text(const pipeline::ScheduleRun& run) {
  std::ostringstream os;
  os << "hypothesis: " << (run.hypothesis_holds ? "holds" : "violated") << '\n';
  os << "k: " << run.plan.k << "  n: " << run.plan.n << "  s: " << run.plan.s << "  log*n: " << run.plan.log_star_n
     << '\n';
  os << "schedule:";
  for (double a : run.plan.a) os << ' ' << a;
  os << '\n';
  os << "|F|: " << run.family_size << "  stripped: " << run.stripped_size << "  window total: " << run.window_total
     << '\n';
  check_text(os, run.partition);
  check_text(os, run.direct_bound);
  for (const auto& w : run.windows) bounds_text(os, w);
  os << (run.all_passed() ? "all checks passed\n" : "checks failed\n");
  return os.str();
}

std::string search_text(const extremal::ExtremalResult& r, const extremal::SearchSpace& space) {
  std::ostringstream os;
  os << "n: " << space.ground.size() << "  k: " << space.k << "  universe: " << extremal::to_string(space.kind)
     << "  mode: " << to_string(space.mode) << "  universe size: " << space.universe.size() << '\n';
  os << "max_size: " << r.max_size << (r.optimal ? " (optimal)" : " (best found, budget exhausted)") << '\n';
  os << "nodes: " << r.nodes_explored << "  forced: " << r.forced_members << '\n';
  os << "witness: " << join_sets(r.witness.members()) << '\n';
  return os.str();
}

std::string sweep_text(const extremal::SweepTable& t) {
  std::ostringstream os;
  os << "n  k  universe   mode   exact  bound  optimal\n";
  for (const auto& r : t.rows) {
    os << r.n << "  " << r.k << "  " << extremal::to_string(r.universe) << "  " << to_string(r.mode) << "  ";
    if (r.skipped) {
      os << "skipped";
    } else {
      os << r.exact_max;
    }
    os << "  ";
    if (r.paper_bound) {
      os << *r.paper_bound << " (" << r.bound_name << ')';
    } else {
      os << '-';
    }
    os << "  " << (r.optimal ? "yes" : "no") << (r.within_bound ? "" : "  EXCEEDS BOUND") << '\n';
  }
  os << "monotone in n: " << (t.monotone_in_n ? "yes" : "no") << '\n';
  return os.str();
}

json::Json family_json(const char* schema, const Family& f) {
  json::Json j;
  j["schema"] = schema;
  j["n"] = f.n();
  j["size"] = f.size();
  json::Json sets = json::Json::array();
  for (const Subset& s : f) sets.push_back(s.to_string());
  j["members"] = std::move(sets);
  return j;
}

// ---- commands ----------------------------------------------------------

int cmd_certify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_format(c, {"json", "text"});
  const Family family = load(c, err);
  const CertReport report = certify(family, c.k, parse_cross_mode(c.mode));
  emit(c, out, c.format == "text" ? certify_text(report) : dump(json::to_json(report)));
  return report.cross_free() ? kOk : kWitness;
}

int cmd_normalize(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_format(c, {"json", "text"});
  const Family family = load(c, err);
  const Family normalized = pipeline::normalize_weakly(family, c.pivot);
  if (c.format == "json") {
    json::Json j = family_json("normalize/1", normalized);
    j["pivot"] = c.pivot;
    j["input_size"] = family.size();
    emit(c, out, dump(j));
  } else {
    emit(c, out, serialize_family(normalized));
  }
  return kOk;
}

int cmd_pipeline(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_format(c, {"json", "text"});
  const bool windowed = c.a.has_value() || c.b.has_value();
  if (c.schedule == windowed || (windowed && !(c.a && c.b)))
    throw UsageError("pipeline needs either both --a and --b, or --schedule");
  const Family family = load(c, err);

  const auto violation = find_k_pairwise(family, c.k, CrossMode::weakly_crossing);
  if (violation && !c.force) {
    std::vector<Subset> sets;
    for (std::size_t i : violation->indices) sets.push_back(family[i]);
    err << "input is not weakly " << c.k << "-cross-free: " << join_sets(sets) << " (use --force to run anyway)\n";
    return kPrecondition;
  }

  pipeline::PipelineOptions options;
  options.hypothesis = !violation.has_value();
  if (c.seed) options.representatives = {pipeline::RepresentativePolicy::seeded_random, *c.seed};

  if (c.schedule) {
    const pipeline::ScheduleRun run = pipeline::run_schedule(family, c.k, options);
    emit(c, out, c.format == "text" ? schedule_run_text(run) : dump(json::to_json(run)));
    return run.all_passed() ? kOk : kClaimsFailed;
  }
  const pipeline::BoundsReport report = pipeline::verify_claims(family, c.k, pipeline::Window{*c.a, *c.b}, options);
  emit(c, out, c.format == "text" ? bounds_report_text(report) : dump(json::to_json(report)));
  return report.all_passed() ? kOk : kClaimsFailed;
}

int cmd_search(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text"});
  const auto space = extremal::SearchSpace::make(GroundSet(single_n(c)), extremal::parse_universe(c.universe),
                                                 parse_cross_mode(c.mode), c.k);
  const extremal::ExtremalResult result = extremal::max_cross_free(space, budget_of(c));
  emit(c, out, c.format == "text" ? search_text(result, space) : dump(json::to_json(result, space)));
  return result.optimal ? kOk : kBudget;
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
  require_format(c, {"json", "text"});
  const GroundSet ground(single_n(c));
  const std::uint64_t seed = c.seed.value_or(0);
  Family family(ground);
  if (c.kind == "laminar") {
    family = extremal::gen_laminar(ground, seed,
                                   c.shape == "balanced" ? extremal::LaminarShape::balanced
                                                         : extremal::LaminarShape::random);
  } else {
    const std::size_t target = c.target.value_or(4 * static_cast<std::size_t>(ground.size()));
    family = extremal::gen_random_crossfree(ground, c.k, target, parse_cross_mode(c.mode), seed);
  }
  emit(c, out, c.format == "json" ? dump(family_json("family/1", family)) : serialize_family(family));
  return kOk;
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  require_format(c, {"csv", "json", "text"});
  const auto [lo, hi] = n_range(c);
  const extremal::SweepTable table = extremal::bounds_sweep(c.k, lo, hi, extremal::parse_universe(c.universe),
                                                            parse_cross_mode(c.mode), budget_of(c));
  if (c.format == "csv") {
    emit(c, out, extremal::sweep_csv(table));
  } else if (c.format == "json") {
    emit(c, out, dump(json::to_json(table)));
  } else {
    emit(c, out, sweep_text(table));
  }
  if (!table.all_within_bounds()) return kClaimsFailed;
  const bool all_optimal =
      std::all_of(table.rows.begin(), table.rows.end(), [](const auto& r) { return r.skipped || r.optimal; });
  return all_optimal ? kOk : kBudget;
}

// ---- option wiring -----------------------------------------------------

const std::vector<std::string> kModes{"cross", "weak", "crossing", "weakly-crossing"};

void add_k(CLI::App* sub, RunConfig& c) {
  sub->add_option("--k", c.k, "forbidden number of pairwise related members")->check(CLI::Range(2, 64));
}
void add_mode(CLI::App* sub, RunConfig& c) {
  sub->add_option("--mode", c.mode, "relation: cross or weak")->check(CLI::IsMember(kModes));
}
void add_out(CLI::App* sub, RunConfig& c) { sub->add_option("--out", c.out_path, "write the report to this file"); }
void add_format(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}
void add_input(CLI::App* sub, RunConfig& c) {
  sub->add_option("file", c.input, "family file")->required();
  sub->add_flag("--lenient", c.lenient, "warn about duplicate sets instead of rejecting them");
}
void add_budget(CLI::App* sub, RunConfig& c) {
  sub->add_option("--budget-ms", c.budget_ms, "wall-clock budget per search")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-nodes", c.max_nodes, "node budget per search");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact computations on k-cross-free set families", "crossfree"};
  app.require_subcommand(1);

  auto* certify_cmd = app.add_subcommand("certify", "check a family for k pairwise related members");
  add_input(certify_cmd, c);
  add_k(certify_cmd, c);
  add_mode(certify_cmd, c);

  auto* normalize_cmd = app.add_subcommand("normalize", "map a k-cross-free family to a weakly k-cross-free one");
  add_input(normalize_cmd, c);
  normalize_cmd->add_option("--pivot", c.pivot, "element whose holders are complemented")->check(CLI::PositiveNumber);

  auto* pipeline_cmd = app.add_subcommand("pipeline", "evaluate every inequality of the counting argument");
  add_input(pipeline_cmd, c);
  add_k(pipeline_cmd, c);
  pipeline_cmd->add_option("--a", c.a, "window lower end (exclusive)");
  pipeline_cmd->add_option("--b", c.b, "window upper end (inclusive)");
  pipeline_cmd->add_flag("--schedule", c.schedule, "run every window of the schedule");
  pipeline_cmd->add_flag("--force", c.force, "run even if the input is not weakly k-cross-free");
  pipeline_cmd->add_option("--seed", c.seed, "pick representatives at random with this seed");

  auto* search_cmd = app.add_subcommand("search", "largest k-cross-free subfamily of a universe");
  search_cmd->add_option("--n", c.n, "ground set size");
  add_k(search_cmd, c);
  add_mode(search_cmd, c);
  search_cmd->add_option("--universe", c.universe, "all, proper or intervals")
      ->check(CLI::IsMember({"all", "proper", "intervals"}));
  add_budget(search_cmd, c);

  auto* generate_cmd = app.add_subcommand("generate", "write a generated cross-free family");
  generate_cmd->add_option("--n", c.n, "ground set size");
  add_k(generate_cmd, c);
  add_mode(generate_cmd, c);
  generate_cmd->add_option("--kind", c.kind, "laminar or random")->check(CLI::IsMember({"laminar", "random"}));
  generate_cmd->add_option("--shape", c.shape, "laminar split: balanced or random")
      ->check(CLI::IsMember({"balanced", "random"}));
  generate_cmd->add_option("--target", c.target, "target size for random families (default 4n)");
  generate_cmd->add_option("--seed", c.seed, "64-bit generator seed (default 0)");

  auto* sweep_cmd = app.add_subcommand("sweep", "exact maxima against published bounds over a range of n");
  sweep_cmd->add_option("--n", c.n, "ground set size or range lo..hi");
  add_k(sweep_cmd, c);
  add_mode(sweep_cmd, c);
  sweep_cmd->add_option("--universe", c.universe, "all, proper or intervals")
      ->check(CLI::IsMember({"all", "proper", "intervals"}));
  add_budget(sweep_cmd, c);

  for (auto* sub : {certify_cmd, normalize_cmd, pipeline_cmd, search_cmd, generate_cmd, sweep_cmd}) {
    add_format(sub, c);
    add_out(sub, c);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  c.command = app.get_subcommands().front()->get_name();
  if (c.format.empty()) {
    if (c.command == "sweep") {
      c.format = "csv";
    } else if (c.command == "normalize" || c.command == "generate") {
      c.format = "text";
    } else {
      c.format = "json";
    }
  }
  try {
    if (c.command == "certify") return cmd_certify(c, out, err);
    if (c.command == "normalize") return cmd_normalize(c, out, err);
    if (c.command == "pipeline") return cmd_pipeline(c, out, err);
    if (c.command == "search") return cmd_search(c, out);
    if (c.command == "generate") return cmd_generate(c, out);
    return cmd_sweep(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace crossfree::cli
