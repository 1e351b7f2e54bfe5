#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crossfree/subset.hpp"

namespace crossfree {

/// Duplicate-free collection of subsets of one ground set, kept in canonical
/// order (size, then membership word).
class Family {
 public:
  explicit Family(GroundSet ground) : ground_(ground) {}
  // Sorts into canonical order and drops duplicates.
  Family(GroundSet ground, std::vector<Subset> members);

  GroundSet ground() const { return ground_; }
  int n() const { return ground_.size(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  std::span<const Subset> members() const { return members_; }
  const Subset& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const Subset& s) const;
  std::size_t index_of(const Subset& s) const;  // size() when absent
  // Returns false if s was already present.
  bool insert(const Subset& s);

  friend bool operator==(const Family&, const Family&) = default;

 private:
  GroundSet ground_;
  std::vector<Subset> members_;
};

bool is_antichain(std::span<const Subset> sets);
bool is_chain(std::span<const Subset> sets);
inline bool is_antichain(const Family& f) { return is_antichain(f.members()); }
inline bool is_chain(const Family& f) { return is_chain(f.members()); }

// ---- family file format -------------------------------------------------
//
//   # comment lines start with '#'
//   n=<int>
//   {e1,e2,...}     one set per line, elements ascending in 1..n, {} = empty
//
// Serialization is canonical: sets in canonical order, no spaces.

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class DuplicatePolicy { strict, lenient };

struct ParseResult {
  Family family;
  std::vector<std::string> warnings;
};

ParseResult parse_family(std::string_view text, DuplicatePolicy policy = DuplicatePolicy::strict);
std::string serialize_family(const Family& family);

Family read_family_file(const std::string& path, DuplicatePolicy policy = DuplicatePolicy::strict);

}  // namespace crossfree
