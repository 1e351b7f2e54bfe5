#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossfree {

// Raised when a value violates a documented capability boundary or
// precondition (ground size, element range, mismatched grounds).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GroundMismatch : public Error {
 public:
  GroundMismatch() : Error("subsets live on different ground sets") {}
};

/// The ground set [n] = {1, ..., n}. Subsets are stored as one machine word,
/// so n is limited to kMaxGround; larger n is rejected, never truncated.
class GroundSet {
 public:
  static constexpr int kMaxGround = 64;

  explicit GroundSet(int n);

  int size() const { return n_; }
  std::uint64_t full_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }
  bool contains(int element) const { return element >= 1 && element <= n_; }

  friend bool operator==(GroundSet, GroundSet) = default;

 private:
  int n_;
};

/// A subset of [n]. Element e is bit (e - 1) of the membership word.
class Subset {
 public:
  Subset(GroundSet ground, std::uint64_t bits);

  static Subset empty(GroundSet ground) { return Subset(ground, 0); }
  static Subset full(GroundSet ground) { return Subset(ground, ground.full_mask()); }
  static Subset of(GroundSet ground, std::initializer_list<int> elements);
  static Subset of(GroundSet ground, std::span<const int> elements);

  GroundSet ground() const { return ground_; }
  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool contains(int element) const;
  // Smallest element, or 0 for the empty set.
  int min_element() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  std::vector<int> elements() const;

  bool is_subset_of(const Subset& other) const;
  bool is_proper_subset_of(const Subset& other) const;
  bool intersects(const Subset& other) const;

  Subset complement() const { return Subset(ground_, ~bits_ & ground_.full_mask(), Unchecked{}); }
  Subset operator&(const Subset& other) const;
  Subset operator|(const Subset& other) const;
  Subset operator-(const Subset& other) const;

  // "{1,3,4}", elements ascending, no spaces; "{}" for the empty set.
  std::string to_string() const;

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  struct Unchecked {};
  Subset(GroundSet ground, std::uint64_t bits, Unchecked) : ground_(ground), bits_(bits) {}
  void require_same_ground(const Subset& other) const {
    if (!(ground_ == other.ground_)) throw GroundMismatch();
  }

  GroundSet ground_;
  std::uint64_t bits_;
};

/// Canonical order: by size, then by the numeric value of the membership word.
struct CanonicalOrder {
  bool operator()(const Subset& lhs, const Subset& rhs) const {
    if (lhs.ground().size() != rhs.ground().size()) return lhs.ground().size() < rhs.ground().size();
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return lhs.bits() < rhs.bits();
  }
};

struct RegionProfile {
  Subset a_minus_b;
  Subset b_minus_a;
  Subset a_cap_b;
  Subset outside;
};

RegionProfile regions(const Subset& a, const Subset& b);

// All four regions non-empty.
bool is_crossing(const Subset& a, const Subset& b);
// A\B, B\A and A∩B non-empty; the outside region may be empty.
bool is_weakly_crossing(const Subset& a, const Subset& b);

inline Subset complement(const Subset& a) { return a.complement(); }

enum class CrossMode { crossing, weakly_crossing };

bool related(const Subset& a, const Subset& b, CrossMode mode);

// Word-level predicates for hot loops; callers guarantee a shared ground.
namespace bits {
inline bool crossing(std::uint64_t a, std::uint64_t b, std::uint64_t full) {
  return (a & ~b) != 0 && (b & ~a) != 0 && (a & b) != 0 && (full & ~(a | b)) != 0;
}
inline bool weakly_crossing(std::uint64_t a, std::uint64_t b) {
  return (a & ~b) != 0 && (b & ~a) != 0 && (a & b) != 0;
}
inline bool related(std::uint64_t a, std::uint64_t b, std::uint64_t full, CrossMode mode) {
  return mode == CrossMode::crossing ? crossing(a, b, full) : weakly_crossing(a, b);
}
}  // namespace bits

std::string to_string(CrossMode mode);
CrossMode parse_cross_mode(const std::string& text);

}  // namespace crossfree
