#include "crossfree/subset.hpp"

namespace crossfree {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1) throw Error("ground set size must be at least 1, got " + std::to_string(n));
  if (n > kMaxGround)
    throw Error("ground set size " + std::to_string(n) + " exceeds the supported maximum of " +
                std::to_string(kMaxGround));
}

Subset::Subset(GroundSet ground, std::uint64_t bits) : ground_(ground), bits_(bits) {
  if ((bits & ~ground.full_mask()) != 0)
    throw Error("membership word has bits outside [1, " + std::to_string(ground.size()) + "]");
}

Subset Subset::of(GroundSet ground, std::initializer_list<int> elements) {
  return of(ground, std::span<const int>(elements.begin(), elements.size()));
}

Subset Subset::of(GroundSet ground, std::span<const int> elements) {
  std::uint64_t word = 0;
  for (int e : elements) {
    if (!ground.contains(e))
      throw Error("element " + std::to_string(e) + " outside [1, " + std::to_string(ground.size()) + "]");
    word |= std::uint64_t{1} << (e - 1);
  }
  return Subset(ground, word, Unchecked{});
}

bool Subset::contains(int element) const {
  return ground_.contains(element) && ((bits_ >> (element - 1)) & 1U) != 0;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t w = bits_; w != 0; w &= w - 1) out.push_back(std::countr_zero(w) + 1);
  return out;
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_ground(other);
  return (bits_ & ~other.bits_) == 0;
}

bool Subset::is_proper_subset_of(const Subset& other) const {
  return is_subset_of(other) && bits_ != other.bits_;
}

bool Subset::intersects(const Subset& other) const {
  require_same_ground(other);
  return (bits_ & other.bits_) != 0;
}

Subset Subset::operator&(const Subset& other) const {
  require_same_ground(other);
  return Subset(ground_, bits_ & other.bits_, Unchecked{});
}

Subset Subset::operator|(const Subset& other) const {
  require_same_ground(other);
  return Subset(ground_, bits_ | other.bits_, Unchecked{});
}

Subset Subset::operator-(const Subset& other) const {
  require_same_ground(other);
  return Subset(ground_, bits_ & ~other.bits_, Unchecked{});
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

RegionProfile regions(const Subset& a, const Subset& b) {
  return RegionProfile{a - b, b - a, a & b, (a | b).complement()};
}

bool is_crossing(const Subset& a, const Subset& b) {
  const RegionProfile r = regions(a, b);
  return !r.a_minus_b.is_empty() && !r.b_minus_a.is_empty() && !r.a_cap_b.is_empty() &&
         !r.outside.is_empty();
}

bool is_weakly_crossing(const Subset& a, const Subset& b) {
  const RegionProfile r = regions(a, b);
  return !r.a_minus_b.is_empty() && !r.b_minus_a.is_empty() && !r.a_cap_b.is_empty();
}

bool related(const Subset& a, const Subset& b, CrossMode mode) {
  return mode == CrossMode::crossing ? is_crossing(a, b) : is_weakly_crossing(a, b);
}

std::string to_string(CrossMode mode) { return mode == CrossMode::crossing ? "cross" : "weak"; }

CrossMode parse_cross_mode(const std::string& text) {
  if (text == "cross" || text == "crossing") return CrossMode::crossing;
  if (text == "weak" || text == "weakly" || text == "weakly-crossing") return CrossMode::weakly_crossing;
  throw Error("unknown crossing mode '" + text + "' (expected cross or weak)");
}

}  // namespace crossfree
