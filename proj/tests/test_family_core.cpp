#include "doctest.h"

#include "crossfree/family.hpp"
#include "crossfree/rng.hpp"
#include "oracles.hpp"

using namespace crossfree;

namespace {

const GroundSet g3(3);
const GroundSet g4(4);

Subset S(GroundSet g, std::initializer_list<int> e) { return Subset::of(g, e); }

}  // namespace

TEST_CASE("ground set limits") {
  CHECK_THROWS_AS(GroundSet(0), Error);
  CHECK_THROWS_AS(GroundSet(65), Error);
  CHECK(GroundSet(64).full_mask() == ~std::uint64_t{0});
  CHECK(GroundSet(4).full_mask() == 0xF);
}

TEST_CASE("subset construction validates elements") {
  CHECK_THROWS_AS(Subset::of(g4, {5}), Error);
  CHECK_THROWS_AS(Subset::of(g4, {0}), Error);
  CHECK_THROWS_AS(Subset(g4, 0x10), Error);
  CHECK(S(g4, {1, 3}).to_string() == "{1,3}");
  CHECK(Subset::empty(g4).to_string() == "{}");
  CHECK(S(g4, {2, 4}).elements() == std::vector<int>{2, 4});
  CHECK(S(g4, {2, 4}).min_element() == 2);
}

TEST_CASE("mixing ground sets is rejected") {
  CHECK_THROWS_AS(regions(S(g3, {1}), S(g4, {1})), GroundMismatch);
  CHECK_THROWS_AS(is_crossing(S(g3, {1}), S(g4, {1})), GroundMismatch);
  CHECK_THROWS_AS((void)(S(g3, {1}) | S(g4, {2})), GroundMismatch);
}

TEST_CASE("regions examples") {
  auto r = regions(S(g4, {1, 2}), S(g4, {2, 3}));
  CHECK(r.a_minus_b == S(g4, {1}));
  CHECK(r.b_minus_a == S(g4, {3}));
  CHECK(r.a_cap_b == S(g4, {2}));
  CHECK(r.outside == S(g4, {4}));

  r = regions(S(g4, {1, 2}), S(g4, {1, 2}));
  CHECK(r.a_minus_b.is_empty());
  CHECK(r.b_minus_a.is_empty());
  CHECK(r.a_cap_b == S(g4, {1, 2}));
  CHECK(r.outside == S(g4, {3, 4}));

  r = regions(S(g3, {1, 2}), S(g3, {2, 3}));
  CHECK(r.a_minus_b == S(g3, {1}));
  CHECK(r.b_minus_a == S(g3, {3}));
  CHECK(r.a_cap_b == S(g3, {2}));
  CHECK(r.outside.is_empty());
}

TEST_CASE("crossing examples") {
  CHECK(is_crossing(S(g4, {1, 2}), S(g4, {2, 3})));
  CHECK_FALSE(is_crossing(S(g4, {1, 2}), S(g4, {1, 2, 3})));
  CHECK(is_weakly_crossing(S(g3, {1, 2}), S(g3, {2, 3})));
  CHECK_FALSE(is_weakly_crossing(S(g4, {1, 2}), S(g4, {3, 4})));
  CHECK(is_weakly_crossing(S(g4, {1, 2}), S(g4, {2, 3})));
  CHECK(related(S(g3, {1, 2}), S(g3, {2, 3}), CrossMode::weakly_crossing));
  CHECK_FALSE(related(S(g3, {1, 2}), S(g3, {2, 3}), CrossMode::crossing));
}

TEST_CASE("complement examples") {
  CHECK(complement(S(g4, {1, 2})) == S(g4, {3, 4}));
  CHECK(complement(Subset::empty(g4)) == Subset::full(g4));
  CHECK(complement(complement(S(g4, {1, 3}))) == S(g4, {1, 3}));
}

TEST_CASE("antichain and chain examples") {
  const std::vector<Subset> anti{S(g4, {1, 2}), S(g4, {2, 3})};
  CHECK(is_antichain(anti));
  CHECK_FALSE(is_chain(anti));
  const std::vector<Subset> chain{S(g4, {1}), S(g4, {1, 2}), S(g4, {1, 2, 3})};
  CHECK(is_chain(chain));
  CHECK_FALSE(is_antichain(chain));
  const Family none(g4);
  CHECK(is_chain(none));
  CHECK(is_antichain(none));
  const Family one(g4, {S(g4, {2})});
  CHECK(is_chain(one));
  CHECK(is_antichain(one));
}

TEST_CASE("family keeps canonical order without duplicates") {
  Family f(g4, {S(g4, {2, 3}), S(g4, {1}), S(g4, {2, 3}), Subset::empty(g4)});
  REQUIRE(f.size() == 3);
  CHECK(f[0] == Subset::empty(g4));
  CHECK(f[1] == S(g4, {1}));
  CHECK(f[2] == S(g4, {2, 3}));
  CHECK(f.index_of(S(g4, {1})) == 1);
  CHECK(f.index_of(S(g4, {4})) == f.size());
  CHECK_FALSE(f.insert(S(g4, {1})));
  CHECK(f.insert(S(g4, {3})));
  CHECK(f[2] == S(g4, {3}));
  CHECK_THROWS_AS(f.insert(S(g3, {1})), GroundMismatch);
}

TEST_CASE("parse examples") {
  const auto parsed = parse_family("n=4\n{1,2}\n{2,3}\n");
  CHECK(parsed.family.size() == 2);
  CHECK(parsed.family.n() == 4);
  CHECK_THROWS_AS(parse_family("n=4\n{5}\n"), ParseError);
  CHECK(serialize_family(Family(g4, {S(g4, {2, 3}), S(g4, {1})})) == "n=4\n{1}\n{2,3}\n");
}

TEST_CASE("parse details") {
  const auto parsed = parse_family("# header comment\n\nn=3\n# sets\n{}\n{1,2,3}\n\n");
  CHECK(parsed.family.size() == 2);
  CHECK_THROWS_AS(parse_family("{1}\n"), ParseError);
  CHECK_THROWS_AS(parse_family(""), ParseError);
  CHECK_THROWS_AS(parse_family("n=4\n{2,1}\n"), ParseError);
  CHECK_THROWS_AS(parse_family("n=4\n{1,}\n"), ParseError);
  CHECK_THROWS_AS(parse_family("n=4\n1,2\n"), ParseError);
  CHECK_THROWS_AS(parse_family("n=65\n"), ParseError);
  CHECK_THROWS_AS(parse_family("n=4\n{x}\n"), ParseError);

  try {
    parse_family("n=4\n{1}\n{1}\n");
    FAIL("strict mode must reject duplicates");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  const auto lenient = parse_family("n=4\n{1}\n{1}\n", DuplicatePolicy::lenient);
  CHECK(lenient.family.size() == 1);
  CHECK(lenient.warnings.size() == 1);
}

TEST_CASE("cross mode names") {
  CHECK(parse_cross_mode("cross") == CrossMode::crossing);
  CHECK(parse_cross_mode("weak") == CrossMode::weakly_crossing);
  CHECK(to_string(CrossMode::weakly_crossing) == "weak");
  CHECK_THROWS_AS(parse_cross_mode("sideways"), Error);
}

// ---- properties ----------------------------------------------------------

TEST_CASE("regions partition the ground set and agree with the element-wise oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const GroundSet g(rng.between(1, 64));
    const Subset a(g, rng.next() & g.full_mask());
    const Subset b(g, rng.next() & g.full_mask());
    const auto r = regions(a, b);
    CHECK((r.a_minus_b | r.b_minus_a | r.a_cap_b | r.outside) == Subset::full(g));
    CHECK(r.a_minus_b.size() + r.b_minus_a.size() + r.a_cap_b.size() + r.outside.size() == g.size());
    const auto sizes = oracle::region_sizes(a, b);
    CHECK(sizes[0] == r.a_minus_b.size());
    CHECK(sizes[3] == r.outside.size());
    CHECK(is_crossing(a, b) == oracle::crossing(a, b));
    CHECK(is_weakly_crossing(a, b) == oracle::weakly_crossing(a, b));
    CHECK(is_crossing(a, b) == is_crossing(b, a));
    CHECK(is_weakly_crossing(a, b) == is_weakly_crossing(b, a));
    CHECK(is_crossing(a, b) == is_crossing(a, complement(b)));
    if (is_crossing(a, b)) CHECK(is_weakly_crossing(a, b));
  }
}

TEST_CASE("no crossing pairs for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const GroundSet g(n);
    for (std::uint64_t a = 0; a <= g.full_mask(); ++a)
      for (std::uint64_t b = 0; b <= g.full_mask(); ++b) CHECK_FALSE(is_crossing(Subset(g, a), Subset(g, b)));
  }
}

TEST_CASE("trivial sets cross nothing for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const GroundSet g(n);
    for (std::uint64_t a = 0; a <= g.full_mask(); ++a) {
      const Subset s(g, a);
      if (!(s.size() <= 1 || s.size() >= n - 1)) continue;
      for (std::uint64_t b = 0; b <= g.full_mask(); ++b) CHECK_FALSE(is_crossing(s, Subset(g, b)));
    }
  }
}

TEST_CASE("parse and serialize round-trip") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const GroundSet g(rng.between(1, 64));
    std::vector<Subset> sets;
    const int m = rng.between(0, 40);
    for (int i = 0; i < m; ++i) sets.emplace_back(g, rng.next() & g.full_mask());
    const Family f(g, sets);
    const std::string text = serialize_family(f);
    const auto back = parse_family(text);
    CHECK(back.family == f);
    CHECK(serialize_family(back.family) == text);
  }
}
