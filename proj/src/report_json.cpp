#include "crossfree/report_json.hpp"

namespace crossfree::json {

namespace {

Json set_strings(std::span<const Subset> sets) {
  Json out = Json::array();
  for (const Subset& s : sets) out.push_back(s.to_string());
  return out;
}

}  // namespace

Json to_json(const CertReport& report) {
  Json j;
  j["schema"] = "cert-report/1";
  j["verdict"] = report.cross_free() ? "cross-free" : "witness";
  j["k"] = report.k;
  j["mode"] = to_string(report.mode);
  j["members"] = report.members;
  if (report.witness) {
    j["witness"] = set_strings(report.witness_sets);
    j["witness_indices"] = report.witness->indices;
  } else {
    j["witness"] = nullptr;
    j["witness_indices"] = nullptr;
  }
  j["pairs_crossing"] = report.pairs.crossing;
  j["pairs_weakly_crossing"] = report.pairs.weakly_crossing;
  j["max_clique_found"] = report.max_clique_found;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

Json to_json(const pipeline::Check& check) {
  Json j;
  j["name"] = check.name;
  if (check.block) j["block"] = *check.block;
  if (check.element) j["element"] = *check.element;
  j["lhs"] = check.lhs;
  j["relation"] = pipeline::to_string(check.relation);
  j["rhs"] = check.rhs;
  j["slack"] = check.slack;
  j["exact"] = check.exact;
  j["applicable"] = check.applicable;
  j["passed"] = check.passed;
  if (!check.note.empty()) j["note"] = check.note;
  return j;
}

Json to_json(const pipeline::BoundsReport& r) {
  Json j;
  j["schema"] = "bounds-report/1";
  j["k"] = r.k;
  j["n"] = r.n;
  j["a"] = r.window.a;
  j["b"] = r.window.b;
  j["hypothesis"] = r.hypothesis_holds ? "holds" : "violated";
  j["family_size"] = r.family_size;
  j["stripped_size"] = r.stripped_size;
  j["window_size"] = r.window_size;
  j["gamma_size"] = r.gamma_size;
  j["chain_length_total"] = r.chain_length_total;
  j["degree_total"] = r.degree_total;
  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    blocks.push_back(Json{{"index", b.index},
                          {"size", b.size},
                          {"chains", b.chains},
                          {"covered", b.covered},
                          {"maxima_antichain", b.maxima_antichain}});
  }
  j["blocks"] = std::move(blocks);
  j["degree"] = r.degree;
  j["good"] = r.good;
  j["N"] = r.nice;
  j["M"] = r.incidences;
  j["max_elements_per_tuple"] = r.max_elements_per_tuple;
  j["constants"] = Json{{"c1", r.consts.c1},
                        {"c2", r.consts.c2},
                        {"log2_c1", r.consts.log2_c1},
                        {"log2_c2", r.consts.log2_c2},
                        {"log2_c3", r.consts.log2_c3}};
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  j["failures"] = r.failures();
  j["passed"] = r.all_passed();
  return j;
}

Json to_json(const pipeline::Schedule& plan) {
  Json j;
  j["schema"] = "schedule/1";
  j["k"] = plan.k;
  j["n"] = plan.n;
  j["log2_n"] = plan.log2_n;
  j["a"] = plan.a;
  j["s"] = plan.s;
  j["log_star_n"] = plan.log_star_n;
  return j;
}

Json to_json(const pipeline::ScheduleRun& run) {
  Json j;
  j["schema"] = "schedule-run/1";
  j["schedule"] = to_json(run.plan);
  j["hypothesis"] = run.hypothesis_holds ? "holds" : "violated";
  j["family_size"] = run.family_size;
  j["stripped_size"] = run.stripped_size;
  j["window_total"] = run.window_total;
  j["partition"] = to_json(run.partition);
  j["first_window_direct"] = to_json(run.direct_bound);
  Json windows = Json::array();
  for (const auto& w : run.windows) windows.push_back(to_json(w));
  j["windows"] = std::move(windows);
  j["failures"] = run.failures();
  j["passed"] = run.all_passed();
  return j;
}

Json to_json(const pipeline::LomonosovReport& r) {
  Json j;
  j["schema"] = "lomonosov-report/1";
  j["k"] = r.k;
  j["n"] = r.n;
  j["family_size"] = r.family_size;
  j["size_histogram"] = r.size_histogram;
  j["max_point_load"] = r.max_point_load;
  j["size_bound_total"] = r.size_bound_total;
  j["passed"] = r.passed;
  if (r.witness) {
    j["witness"] = Json{{"element", r.witness->first}, {"sets", set_strings(r.witness->second)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const extremal::ExtremalResult& result, const extremal::SearchSpace& space) {
  Json j;
  j["schema"] = "extremal-result/1";
  j["n"] = space.ground.size();
  j["k"] = space.k;
  j["universe"] = extremal::to_string(space.kind);
  j["mode"] = to_string(space.mode);
  j["universe_size"] = space.universe.size();
  j["max_size"] = result.max_size;
  j["optimal"] = result.optimal;
  j["forced_members"] = result.forced_members;
  j["nodes"] = result.nodes_explored;
  j["witness"] = set_strings(result.witness.members());
  j["elapsed_ms"] = result.elapsed_ms;
  return j;
}

Json to_json(const extremal::SweepTable& table) {
  Json j;
  j["schema"] = "sweep-table/1";
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    Json row;
    row["n"] = r.n;
    row["k"] = r.k;
    row["universe"] = extremal::to_string(r.universe);
    row["mode"] = to_string(r.mode);
    row["skipped"] = r.skipped;
    row["exact_max"] = r.exact_max;
    if (r.paper_bound) {
      row["paper_bound"] = *r.paper_bound;
    } else {
      row["paper_bound"] = nullptr;
    }
    row["bound"] = r.bound_name;
    row["within_bound"] = r.within_bound;
    row["optimal"] = r.optimal;
    row["nodes"] = r.nodes;
    row["ms"] = r.ms;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["monotone_in_n"] = table.monotone_in_n;
  j["all_within_bounds"] = table.all_within_bounds();
  return j;
}

Json without_timing(Json value) {
  if (value.is_object()) {
    value.erase("elapsed_ms");
    value.erase("ms");
    for (auto& item : value.items()) item.value() = without_timing(std::move(item.value()));
  } else if (value.is_array()) {
    for (auto& child : value) child = without_timing(std::move(child));
  }
  return value;
}

}  // namespace crossfree::json
