#include "crossfree/family.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace crossfree {

Family::Family(GroundSet ground, std::vector<Subset> members) : ground_(ground), members_(std::move(members)) {
  for (const Subset& s : members_)
    if (!(s.ground() == ground_)) throw GroundMismatch();
  std::sort(members_.begin(), members_.end(), CanonicalOrder{});
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::contains(const Subset& s) const { return index_of(s) != members_.size(); }

std::size_t Family::index_of(const Subset& s) const {
  if (!(s.ground() == ground_)) return members_.size();
  auto it = std::lower_bound(members_.begin(), members_.end(), s, CanonicalOrder{});
  if (it != members_.end() && *it == s) return static_cast<std::size_t>(it - members_.begin());
  return members_.size();
}

bool Family::insert(const Subset& s) {
  if (!(s.ground() == ground_)) throw GroundMismatch();
  auto it = std::lower_bound(members_.begin(), members_.end(), s, CanonicalOrder{});
  if (it != members_.end() && *it == s) return false;
  members_.insert(it, s);
  return true;
}

bool is_antichain(std::span<const Subset> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i].is_subset_of(sets[j]) || sets[j].is_subset_of(sets[i])) return false;
  return true;
}

bool is_chain(std::span<const Subset> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!sets[i].is_subset_of(sets[j]) && !sets[j].is_subset_of(sets[i])) return false;
  return true;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view token, int& out) {
  token = trim(token);
  if (token.empty()) return false;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

Subset parse_set_line(std::string_view line, GroundSet ground, std::size_t line_no) {
  if (line.size() < 2 || line.front() != '{' || line.back() != '}')
    throw ParseError(line_no, "expected a set of the form {e1,e2,...}");
  std::string_view body = trim(line.substr(1, line.size() - 2));
  std::uint64_t word = 0;
  int previous = 0;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view token = body.substr(0, comma);
    int e = 0;
    if (!parse_int(token, e)) throw ParseError(line_no, "malformed element '" + std::string(trim(token)) + "'");
    if (!ground.contains(e))
      throw ParseError(line_no, "element " + std::to_string(e) + " out of range 1.." + std::to_string(ground.size()));
    if (e <= previous) throw ParseError(line_no, "elements must be strictly ascending");
    previous = e;
    word |= std::uint64_t{1} << (e - 1);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (trim(body).empty()) throw ParseError(line_no, "trailing comma");
  }
  return Subset(ground, word);
}

}  // namespace

ParseResult parse_family(std::string_view text, DuplicatePolicy policy) {
  std::optional<GroundSet> ground;
  std::vector<Subset> members;
  std::vector<std::string> warnings;
  std::unordered_set<std::uint64_t> seen;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!ground) {
      if (!line.starts_with("n")) throw ParseError(line_no, "expected header n=<int>");
      std::string_view rest = trim(line.substr(1));
      if (rest.empty() || rest.front() != '=') throw ParseError(line_no, "expected header n=<int>");
      int n = 0;
      if (!parse_int(rest.substr(1), n)) throw ParseError(line_no, "malformed ground size");
      try {
        ground.emplace(n);
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }

    const Subset s = parse_set_line(line, *ground, line_no);
    if (!seen.insert(s.bits()).second) {
      if (policy == DuplicatePolicy::strict) throw ParseError(line_no, "duplicate set " + s.to_string());
      warnings.push_back("line " + std::to_string(line_no) + ": dropped duplicate set " + s.to_string());
      continue;
    }
    members.push_back(s);
  }
  if (!ground) throw ParseError(line_no, "missing header n=<int>");
  return ParseResult{Family(*ground, std::move(members)), std::move(warnings)};
}

std::string serialize_family(const Family& family) {
  std::string out = "n=" + std::to_string(family.n()) + "\n";
  for (const Subset& s : family) {
    out += s.to_string();
    out += '\n';
  }
  return out;
}

Family read_family_file(const std::string& path, DuplicatePolicy policy) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_family(buffer.str(), policy).family;
}

}  // namespace crossfree
