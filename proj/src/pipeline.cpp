#include "crossfree/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "crossfree/certification.hpp"
#include "crossfree/rng.hpp"

namespace crossfree::pipeline {

namespace {

using boost::multiprecision::cpp_int;

Rational factorial(int k) {
  cpp_int f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

Rational ipow(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Rational pow2(long long e) {
  const cpp_int p = cpp_int(1) << static_cast<unsigned>(e < 0 ? -e : e);
  return e >= 0 ? Rational(p) : Rational(cpp_int(1), p);
}

bool is_integral(double v) { return std::isfinite(v) && std::floor(v) == v && std::fabs(v) < 1e6; }

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool holds(Relation rel, int cmp) {
  switch (rel) {
    case Relation::le: return cmp <= 0;
    case Relation::lt: return cmp < 0;
    case Relation::ge: return cmp >= 0;
    case Relation::gt: return cmp > 0;
    case Relation::eq: return cmp == 0;
  }
  return false;
}

template <typename T>
int compare(const T& lhs, const T& rhs) {
  return lhs < rhs ? -1 : (rhs < lhs ? 1 : 0);
}

template <typename T>
double slack_of(Relation rel, const T& lhs, const T& rhs) {
  switch (rel) {
    case Relation::le:
    case Relation::lt: return static_cast<double>(rhs - lhs);
    case Relation::ge:
    case Relation::gt: return static_cast<double>(lhs - rhs);
    case Relation::eq: {
      const T diff = lhs - rhs;
      return -std::fabs(static_cast<double>(diff));
    }
  }
  return 0.0;
}

Check exact_check(std::string name, Relation rel, const Rational& lhs, const Rational& rhs) {
  Check c;
  c.name = std::move(name);
  c.relation = rel;
  c.lhs = to_double(lhs);
  c.rhs = to_double(rhs);
  const Rational diff = (rel == Relation::ge || rel == Relation::gt) ? lhs - rhs : rhs - lhs;
  c.slack = rel == Relation::eq ? -std::fabs(to_double(lhs - rhs)) : to_double(diff);
  c.exact = true;
  c.passed = holds(rel, compare(lhs, rhs));
  return c;
}

Check float_check(std::string name, Relation rel, long double lhs, long double rhs) {
  Check c;
  c.name = std::move(name);
  c.relation = rel;
  c.lhs = static_cast<double>(lhs);
  c.rhs = static_cast<double>(rhs);
  c.slack = slack_of(rel, lhs, rhs);
  c.exact = false;
  c.passed = holds(rel, compare(lhs, rhs));
  return c;
}

Rational from_count(std::uint64_t v) { return Rational(cpp_int(v)); }

long double ext_binom_ld(long double x, int k) {
  if (x < k - 1) return 0.0L;
  long double num = 1.0L;
  long double fact = 1.0L;
  for (int i = 0; i < k; ++i) {
    num *= x - i;
    fact *= i + 1;
  }
  return num / fact;
}

}  // namespace

double ext_binom(double x, int k) {
  if (k < 1) throw Error("ext_binom requires k >= 1");
  if (x < k - 1) return 0.0;
  double num = 1.0;
  double fact = 1.0;
  for (int i = 0; i < k; ++i) {
    num *= x - i;
    fact *= i + 1;
  }
  return num / fact;
}

Rational ext_binom(const Rational& x, int k) {
  if (k < 1) throw Error("ext_binom requires k >= 1");
  if (x < k - 1) return 0;
  Rational num = 1;
  for (int i = 0; i < k; ++i) num *= x - i;
  return num / factorial(k);
}

Family normalize_weakly(const Family& family, int pivot) {
  if (!family.ground().contains(pivot))
    throw Error("pivot " + std::to_string(pivot) + " outside [1, " + std::to_string(family.n()) + "]");
  std::vector<Subset> out;
  out.reserve(family.size());
  for (const Subset& a : family) out.push_back(a.contains(pivot) ? a.complement() : a);
  return Family(family.ground(), std::move(out));
}

Family strip_small(const Family& family) {
  std::vector<Subset> out;
  for (const Subset& a : family)
    if (a.size() >= 2) out.push_back(a);
  return Family(family.ground(), std::move(out));
}

int block_index(int set_size) {
  if (set_size < 2) throw Error("sets of size <= 1 belong to no block");
  return std::bit_width(static_cast<unsigned>(set_size - 1)) - 1;
}

std::vector<Block> blocks(const Family& family) {
  std::map<int, std::vector<Subset>> by_index;
  for (const Subset& a : family) {
    if (a.size() <= 1) throw Error("blocks() needs a family without empty or singleton members; found " + a.to_string());
    by_index[block_index(a.size())].push_back(a);
  }
  std::vector<Block> out;
  for (auto& [index, members] : by_index) out.push_back(Block{index, Family(family.ground(), std::move(members))});
  return out;
}

std::size_t ChainCover::covered() const {
  std::size_t total = 0;
  for (const Chain& c : chains) total += c.size();
  return total;
}

std::vector<Subset> ChainCover::maxima() const {
  std::vector<Subset> out;
  out.reserve(chains.size());
  for (const Chain& c : chains) out.push_back(c.max());
  return out;
}

ChainCover chain_cover(const Block& block) {
  const auto members = block.members.members();
  const std::size_t m = members.size();

  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < m; ++i) {
    bool is_max = true;
    for (std::size_t j = i + 1; j < m && is_max; ++j)
      if (members[i].is_proper_subset_of(members[j])) is_max = false;
    if (is_max) maximal.push_back(i);
  }

  std::vector<std::vector<std::size_t>> parts(maximal.size());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < maximal.size(); ++p) {
      if (members[i].is_subset_of(members[maximal[p]])) {
        parts[p].push_back(i);
        break;
      }
    }
  }

  ChainCover cover;
  cover.block = block.index;
  cover.block_size = m;
  for (std::size_t p = 0; p < maximal.size(); ++p) {
    // Members are in canonical order, so inclusion only points forward and
    // the maximal set is the last entry of its part.
    const auto& part = parts[p];
    std::vector<std::size_t> length(part.size(), 1);
    std::vector<std::size_t> pred(part.size(), part.size());
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (members[part[j]].is_proper_subset_of(members[part[i]]) && length[j] + 1 > length[i]) {
          length[i] = length[j] + 1;
          pred[i] = j;
        }
      }
    }
    Chain chain;
    chain.home_block = block.index;
    for (std::size_t i = part.size() - 1; i != part.size(); i = pred[i]) chain.sets.push_back(members[part[i]]);
    std::reverse(chain.sets.begin(), chain.sets.end());
    cover.chains.push_back(std::move(chain));

    std::vector<Subset> part_sets;
    for (std::size_t i : part) part_sets.push_back(members[i]);
    cover.parts.push_back(std::move(part_sets));
  }
  return cover;
}

std::vector<ChainCover> chain_covers(const Family& stripped) {
  std::vector<ChainCover> out;
  for (const Block& b : blocks(stripped)) out.push_back(chain_cover(b));
  return out;
}

std::optional<Subset> RepresentedChain::minimal_set_containing(int y) const {
  for (const Subset& s : chain.sets)
    if (s.contains(y)) return s;
  return std::nullopt;
}

std::size_t RepresentativeMap::total_chain_length() const {
  std::size_t total = 0;
  for (const auto& c : chains) total += c.chain.size();
  return total;
}

std::size_t RepresentativeMap::total_degree() const {
  std::size_t total = 0;
  for (std::size_t d : degree) total += d;
  return total;
}

RepresentativeMap representatives(GroundSet ground, std::span<const ChainCover> covers, Window window,
                                  RepresentativeOptions options) {
  RepresentativeMap map;
  map.ground = ground;
  Rng rng(options.seed);

  auto pick = [&](std::uint64_t candidates) {
    if (options.policy == RepresentativePolicy::smallest_index) return std::countr_zero(candidates) + 1;
    const auto skip = rng.below(static_cast<std::uint64_t>(std::popcount(candidates)));
    for (std::uint64_t i = 0; i < skip; ++i) candidates &= candidates - 1;
    return std::countr_zero(candidates) + 1;
  };

  for (const ChainCover& cover : covers) {
    if (!window.contains(cover.block)) continue;
    for (const Chain& chain : cover.chains) {
      RepresentedChain rc;
      rc.chain = chain;
      std::uint64_t below = 0;
      for (const Subset& s : chain.sets) {
        const std::uint64_t fresh = s.bits() & ~below;
        if (fresh == 0) throw Error("chain is not strictly increasing");
        const int y = pick(fresh);
        rc.representatives.push_back(y);
        rc.y_mask |= std::uint64_t{1} << (y - 1);
        below = s.bits();
      }
      map.chains.push_back(std::move(rc));
    }
  }
  map.degree.assign(static_cast<std::size_t>(map.ground.size()), 0);
  for (const auto& rc : map.chains)
    for (int y : rc.representatives) ++map.degree[static_cast<std::size_t>(y - 1)];
  return map;
}

std::vector<GoodTuple> enumerate_good_tuples(int y, const RepresentativeMap& reps, int k) {
  if (k < 2) throw Error("k must be at least 2");
  std::vector<GoodTuple> out;
  if (!reps.ground.contains(y)) return out;

  struct Candidate {
    std::size_t chain;
    int block;
    Subset minimal;
  };
  std::vector<Candidate> candidates;
  for (std::size_t c = 0; c < reps.chains.size(); ++c) {
    const auto& rc = reps.chains[c];
    if (!rc.has_representative(y)) continue;
    candidates.push_back(Candidate{c, rc.chain.home_block, *rc.minimal_set_containing(y)});
  }
  if (candidates.size() < static_cast<std::size_t>(k)) return out;

  std::vector<std::size_t> picked;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    if (picked.size() == static_cast<std::size_t>(k)) {
      GoodTuple t;
      t.y = y;
      for (std::size_t p : picked) {
        t.chains.push_back(candidates[p].chain);
        t.minimal_sets.push_back(candidates[p].minimal);
      }
      out.push_back(std::move(t));
      return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      if (!picked.empty()) {
        const Candidate& last = candidates[picked.back()];
        if (candidates[i].block <= last.block) continue;
        if (!last.minimal.is_subset_of(candidates[i].minimal)) continue;
      }
      picked.push_back(i);
      self(self, i + 1);
      picked.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

TupleCensus tuple_census(const RepresentativeMap& reps, int k) {
  TupleCensus census;
  census.good.assign(static_cast<std::size_t>(reps.ground.size()), 0);
  std::map<std::vector<std::size_t>, std::vector<int>> good_for;
  for (int y = 1; y <= reps.ground.size(); ++y) {
    if (reps.d(y) < static_cast<std::size_t>(k)) continue;
    auto tuples = enumerate_good_tuples(y, reps, k);
    census.good[static_cast<std::size_t>(y - 1)] = tuples.size();
    census.incidences += tuples.size();
    for (auto& t : tuples) good_for[std::move(t.chains)].push_back(y);
  }
  census.nice = good_for.size();
  for (auto& [tuple, elements] : good_for) {
    census.max_elements_per_tuple = std::max(census.max_elements_per_tuple, elements.size());
    if (elements.size() >= static_cast<std::size_t>(k) && !census.overloaded)
      census.overloaded = std::make_pair(tuple, elements);
  }
  return census;
}

std::uint64_t count_nice_tuples(const RepresentativeMap& reps, int k) { return tuple_census(reps, k).nice; }

std::string to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::lt: return "<";
    case Relation::ge: return ">=";
    case Relation::gt: return ">";
    case Relation::eq: return "==";
  }
  return "?";
}

Rational c1_exact(int k) { return Rational(2) * ipow(Rational(k - 1), k + 1) / factorial(k - 1); }

Rational c2_exact(int k) {
  return Rational(1) / (pow2(k) * ipow(Rational(k - 1), 3 * k) * factorial(k));
}

Constants constants(int k) {
  Constants c;
  double log2_fact_k = 0.0;
  for (int i = 2; i <= k; ++i) log2_fact_k += std::log2(static_cast<double>(i));
  const double log2_fact_km1 = log2_fact_k - std::log2(static_cast<double>(k));
  const double log2_km1 = std::log2(static_cast<double>(k - 1));
  c.log2_c1 = 1.0 + (k + 1) * log2_km1 - log2_fact_km1;
  c.log2_c2 = -(k + 3.0 * k * log2_km1 + log2_fact_k);
  c.log2_c3 = (c.log2_c1 - c.log2_c2) / k;
  c.c1 = std::exp2(c.log2_c1);
  c.c2 = std::exp2(c.log2_c2);
  return c;
}

std::size_t BoundsReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.applicable && !c.passed; }));
}

namespace {

struct WindowInputs {
  GroundSet ground;
  int k;
  Window window;
  bool hypothesis;
  std::size_t family_size;
  std::size_t stripped_size;
};

BoundsReport evaluate_window(std::span<const ChainCover> covers, const WindowInputs& in,
                             const RepresentativeOptions& rep_options) {
  const int k = in.k;
  const int n = in.ground.size();
  const double a = in.window.a;
  const double b = in.window.b;
  const Rational km1(k - 1);
  const Rational rn(n);

  BoundsReport r;
  r.k = k;
  r.n = n;
  r.window = in.window;
  r.hypothesis_holds = in.hypothesis;
  r.family_size = in.family_size;
  r.stripped_size = in.stripped_size;
  r.consts = constants(k);

  // Per-block claims.
  for (const ChainCover& cover : covers) {
    if (!in.window.contains(cover.block)) continue;
    const int i = cover.block;
    const auto maxima = cover.maxima();
    BlockSummary summary{i, cover.block_size, cover.chains.size(), cover.covered(), is_antichain(maxima)};
    r.blocks.push_back(summary);
    r.window_size += cover.block_size;
    r.gamma_size += cover.chains.size();

    const Rational antichain_cap = km1 * rn / pow2(i);
    Check c1 = exact_check("claim1.antichain", Relation::le, from_count(maxima.size()), antichain_cap);
    c1.block = i;
    r.checks.push_back(c1);
    Check e1 = exact_check("eq1.chain_count", Relation::le, from_count(cover.chains.size()), antichain_cap);
    e1.block = i;
    r.checks.push_back(e1);
    Check c2a = exact_check("claim2.maxima_antichain", Relation::eq, Rational(summary.maxima_antichain ? 1 : 0), 1);
    c2a.block = i;
    r.checks.push_back(c2a);
    Check c2b = exact_check("claim2.coverage", Relation::ge, from_count(cover.covered()),
                            from_count(cover.block_size) / km1);
    c2b.block = i;
    r.checks.push_back(c2b);
  }

  const RepresentativeMap reps = representatives(in.ground, covers, in.window, rep_options);
  r.degree = reps.degree;
  r.chain_length_total = reps.total_chain_length();
  r.degree_total = reps.total_degree();

  r.checks.push_back(exact_check("eq2.identity", Relation::eq, from_count(r.degree_total),
                                 from_count(r.chain_length_total)));
  r.checks.push_back(exact_check("eq2.bound", Relation::ge, from_count(r.degree_total),
                                 from_count(r.window_size) / km1));

  const TupleCensus census = tuple_census(reps, k);
  r.good = census.good;
  r.nice = census.nice;
  r.incidences = census.incidences;
  r.max_elements_per_tuple = census.max_elements_per_tuple;

  const Rational km1_sq = km1 * km1;
  for (int y = 1; y <= n; ++y) {
    const auto idx = static_cast<std::size_t>(y - 1);
    Check c3 = exact_check("claim3.good_tuples", Relation::ge, from_count(census.good[idx]),
                           ext_binom(from_count(reps.degree[idx]) / km1_sq, k));
    c3.element = y;
    r.checks.push_back(c3);
  }

  const bool window_integral = is_integral(a) && is_integral(b);
  const Rational N = from_count(census.nice);
  const Rational M = from_count(census.incidences);

  // Nice-tuple bound. When the binomial vanishes the bound is 0 and only N = 0 can
  // meet it, so the strict form is relaxed to equality there.
  {
    Check c4;
    if (window_integral) {
      const Rational rhs = Rational(2) * ipow(km1, k) * rn / pow2(static_cast<long long>(a)) *
                           ext_binom(Rational(static_cast<long long>(b)), k - 1);
      c4 = exact_check("claim4.nice_tuples", Relation::lt, N, rhs);
      if (!c4.passed && N == 0 && rhs == 0) c4.passed = true;
    } else {
      const long double rhs = 2.0L * std::pow(static_cast<long double>(k - 1), k) * n / std::exp2(static_cast<long double>(a)) *
                              ext_binom_ld(b, k - 1);
      c4 = float_check("claim4.nice_tuples", Relation::lt, static_cast<long double>(census.nice), rhs);
      if (!c4.passed && census.nice == 0 && rhs == 0.0L) c4.passed = true;
    }
    c4.note = "N < 2(k-1)^k n binom(b,k-1) / 2^a";
    r.checks.push_back(c4);
  }

  Check c5 = exact_check("claim5.elements_per_tuple", Relation::le, from_count(census.max_elements_per_tuple), km1);
  if (census.overloaded) {
    c5.note = "tuple good for " + std::to_string(census.overloaded->second.size()) + " elements";
  }
  r.checks.push_back(c5);
  r.checks.push_back(exact_check("claim5.double_count", Relation::le, M, km1 * N));

  // Eq (3): M <= c1 n b^(k-1) / 2^a.
  {
    Check e3;
    if (window_integral) {
      const Rational rhs =
          c1_exact(k) * rn * ipow(Rational(static_cast<long long>(b)), k - 1) / pow2(static_cast<long long>(a));
      e3 = exact_check("eq3.upper", Relation::le, M, rhs);
    } else {
      const long double rhs = static_cast<long double>(to_double(c1_exact(k))) * n *
                              std::pow(static_cast<long double>(b), k - 1) / std::exp2(static_cast<long double>(a));
      e3 = float_check("eq3.upper", Relation::le, static_cast<long double>(census.incidences), rhs);
    }
    r.checks.push_back(e3);
  }

  // Eq (4): M >= n binom(|F_ab| / ((k-1)^3 n), k).
  const Rational fab = from_count(r.window_size);
  r.checks.push_back(exact_check("eq4.lower", Relation::ge, M, rn * ext_binom(fab / (km1 * km1 * km1 * rn), k)));

  // Eq (5), only under its hypothesis |F_ab| > 2k(k-1)^3 n.
  const Rational threshold = Rational(2 * k) * km1 * km1 * km1 * rn;
  {
    Check e5 = exact_check("eq5.lower", Relation::gt, M, c2_exact(k) * ipow(fab, k) / ipow(rn, k - 1));
    e5.applicable = fab > threshold;
    if (!e5.applicable) e5.note = "hypothesis |F_ab| > 2k(k-1)^3 n not met";
    r.checks.push_back(e5);
  }

  // Eq (6): |F_ab| < max{2k(k-1)^3 n, c3 n b^((k-1)/k) / 2^(a/k)}.
  {
    long double second = 0.0L;
    if (b > 0.0) {
      const long double log2_second = r.consts.log2_c3 + std::log2(static_cast<long double>(n)) +
                                      (static_cast<long double>(k - 1) / k) * std::log2(static_cast<long double>(b)) -
                                      static_cast<long double>(a) / k;
      second = std::exp2(log2_second);
    }
    Check e6;
    if (fab < threshold) {
      e6 = exact_check("eq6.window_size", Relation::lt, fab, threshold);
      e6.rhs = std::max(e6.rhs, static_cast<double>(second));
      e6.slack = e6.rhs - e6.lhs;
    } else {
      const long double first = static_cast<long double>(to_double(threshold));
      e6 = float_check("eq6.window_size", Relation::lt, static_cast<long double>(r.window_size), std::max(first, second));
    }
    r.checks.push_back(e6);
  }
  return r;
}

}  // namespace

BoundsReport verify_claims(const Family& family, int k, Window window, PipelineOptions options) {
  if (k < 2) throw Error("k must be at least 2");
  const bool hypothesis =
      options.hypothesis.value_or(!find_k_pairwise(family, k, CrossMode::weakly_crossing).has_value());
  const Family stripped = strip_small(family);
  const auto covers = chain_covers(stripped);
  return evaluate_window(covers,
                         WindowInputs{family.ground(), k, window, hypothesis, family.size(), stripped.size()},
                         options.representatives);
}

int log_star(double x) {
  int count = 0;
  while (x > 1.0) {
    x = std::log2(x);
    ++count;
  }
  return count;
}

Schedule schedule(int k, std::uint64_t n) {
  if (k < 2) throw Error("schedule requires k >= 2");
  if (n < 2) throw Error("schedule requires n >= 2");
  Schedule plan;
  plan.k = k;
  plan.n = n;
  plan.log2_n = std::log2(static_cast<double>(n));
  plan.a = {0.0, static_cast<double>(k) * k};
  // a_{i+1} = 2^(a_i/(k-1)); stops at the first a_i > log2 n, so no overflow.
  while (plan.a.back() <= plan.log2_n) plan.a.push_back(std::exp2(plan.a.back() / (k - 1)));
  plan.s = static_cast<int>(plan.a.size()) - 1;
  plan.log_star_n = log_star(static_cast<double>(n));
  return plan;
}

std::size_t ScheduleRun::failures() const {
  std::size_t total = 0;
  for (const auto& w : windows) total += w.failures();
  if (!partition.passed) ++total;
  if (!direct_bound.passed) ++total;
  return total;
}

ScheduleRun run_schedule(const Family& family, int k, PipelineOptions options) {
  if (k < 2) throw Error("k must be at least 2");
  ScheduleRun run;
  run.plan = schedule(k, static_cast<std::uint64_t>(std::max(2, family.n())));
  run.hypothesis_holds =
      options.hypothesis.value_or(!find_k_pairwise(family, k, CrossMode::weakly_crossing).has_value());
  run.family_size = family.size();
  const Family stripped = strip_small(family);
  run.stripped_size = stripped.size();
  const auto covers = chain_covers(stripped);

  const WindowInputs base{family.ground(), k, Window{}, run.hypothesis_holds, family.size(), stripped.size()};
  for (int i = 0; i < run.plan.s; ++i) {
    WindowInputs in = base;
    in.window = Window{i == 0 ? -1.0 : run.plan.a[static_cast<std::size_t>(i)],
                       run.plan.a[static_cast<std::size_t>(i) + 1]};
    run.windows.push_back(evaluate_window(covers, in, options.representatives));
    run.window_total += run.windows.back().window_size;
  }
  run.partition = exact_check("schedule.partition", Relation::eq, from_count(run.window_total),
                              from_count(run.stripped_size));

  // Members of size l number at most (k-1)n/l, so the first window is
  // bounded by the sum of those caps over its size range.
  const int n = family.n();
  const double a1 = run.plan.a[1];
  const int top_size = a1 + 1 >= 31 ? n : std::min(n, 1 << static_cast<int>(a1 + 1));
  std::uint64_t cap = 0;
  for (int l = 2; l <= top_size; ++l) cap += static_cast<std::uint64_t>((k - 1) * n / l);
  const std::size_t first = run.windows.empty() ? 0 : run.windows.front().window_size;
  run.direct_bound = exact_check("schedule.first_window_direct", Relation::le, from_count(first), from_count(cap));
  return run;
}

LomonosovReport lomonosov_report(const Family& family, int k) {
  if (k < 2) throw Error("k must be at least 2");
  const int n = family.n();
  LomonosovReport r;
  r.k = k;
  r.n = n;
  r.family_size = family.size();
  r.size_histogram.assign(static_cast<std::size_t>(n) + 1, 0);
  r.max_point_load.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Subset& a : family) ++r.size_histogram[static_cast<std::size_t>(a.size())];

  for (int s = 1; s <= n; ++s) {
    if (r.size_histogram[static_cast<std::size_t>(s)] == 0) continue;
    for (int x = 1; x <= n; ++x) {
      std::vector<Subset> holders;
      for (const Subset& a : family)
        if (a.size() == s && a.contains(x)) holders.push_back(a);
      auto& load = r.max_point_load[static_cast<std::size_t>(s)];
      load = std::max(load, holders.size());
      if (holders.size() >= static_cast<std::size_t>(k)) {
        r.passed = false;
        if (!r.witness) {
          holders.erase(holders.begin() + k, holders.end());
          r.witness = std::make_pair(x, std::move(holders));
        }
      }
    }
  }
  r.size_bound_total = 1.0;
  for (int s = 1; s <= n; ++s) r.size_bound_total += static_cast<double>(k - 1) * n / s;
  return r;
}

}  // namespace crossfree::pipeline
