#include "positroid/cyclic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "positroid/error.hpp"

namespace positroid {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw InputError("ground set size " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxGroundSize));
  }
}

void GroundSet::check_label(int x) const {
  if (!valid_label(x)) {
    throw InputError("label " + std::to_string(x) + " outside 1.." + std::to_string(n_));
  }
}

void GroundSet::check_subset(Subset s) const {
  if (!s.is_subset_of(all())) {
    throw InputError("subset {" + to_string(s) + "} not contained in 1.." + std::to_string(n_));
  }
}

void GroundSet::check_interval(CyclicInterval iv) const {
  check_label(iv.first);
  check_label(iv.last);
}

bool GroundSet::cyclic_le(int i, int x, int y) const {
  check_label(i);
  check_label(x);
  check_label(y);
  return offset(i, x) <= offset(i, y);
}

Subset GroundSet::interval_members(CyclicInterval iv) const {
  check_interval(iv);
  const int start = iv.first - 1;
  const int length = interval_length(iv);
  const int head = std::min(length, n_ - start);
  std::uint64_t bits = low_bits(head) << start;
  bits |= low_bits(length - head);
  return Subset(bits);
}

std::vector<int> GroundSet::ordered(Subset s, int i) const {
  std::vector<int> out = s.labels();
  std::ranges::sort(out, [&](int x, int y) { return offset(i, x) < offset(i, y); });
  return out;
}

int GroundSet::least(Subset s, int i) const {
  // Elements >= i come first under <_i, then the wrapped ones.
  const Subset tail = s & interval(i, n_);
  return tail.empty() ? s.min_label() : tail.min_label();
}

int GroundSet::greatest(Subset s, int i) const {
  if (i > 1) {
    const Subset head = s & interval(1, i - 1);
    if (!head.empty()) return head.max_label();
  }
  return s.max_label();
}

Decomposition GroundSet::decompose(Subset s) const {
  check_subset(s);
  Decomposition out;
  if (s.empty()) {
    out.kind = Decomposition::Kind::kEmpty;
    return out;
  }
  if (s == all()) {
    out.kind = Decomposition::Kind::kFull;
    return out;
  }
  out.kind = Decomposition::Kind::kProper;
  // A maximal interval starts at each member whose predecessor is missing;
  // scanning labels in natural order yields them sorted by left endpoint.
  for (int x = 1; x <= n_; ++x) {
    if (!s.contains(x) || s.contains(prev(x))) continue;
    int last = x;
    while (s.contains(next(last))) last = next(last);
    out.intervals.push_back({x, last});
  }
  return out;
}

Subset GroundSet::union_of(const std::vector<CyclicInterval>& intervals) const {
  Subset out;
  for (const auto& iv : intervals) out |= interval_members(iv);
  return out;
}

bool gale_le(const GroundSet& ground, int i, Subset s, Subset t) {
  ground.check_label(i);
  ground.check_subset(s);
  ground.check_subset(t);
  if (s.size() != t.size()) {
    throw InputError("Gale comparison of sets with sizes " + std::to_string(s.size()) +
                     " and " + std::to_string(t.size()));
  }
  // s_j <=_i t_j for all j iff every <_i-prefix holds at least as many
  // elements of S as of T.
  int in_s = 0;
  int in_t = 0;
  for (int x = i, step = 0; step < ground.size(); ++step, x = ground.next(x)) {
    in_s += s.contains(x) ? 1 : 0;
    in_t += t.contains(x) ? 1 : 0;
    if (in_s < in_t) return false;
  }
  return true;
}

namespace {

int parse_set_label(const GroundSet& ground, std::string_view digits, std::string_view token) {
  int value = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc{} || ptr != end) {
    throw InputError("malformed set element '" + std::string(token) + "'");
  }
  ground.check_label(value);
  return value;
}

}  // namespace

Subset parse_subset(const GroundSet& ground, std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  Subset out;
  if (compact.empty()) return out;
  std::string_view rest = compact;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    const auto dots = token.find("..");
    if (dots == std::string_view::npos) {
      out = out.with(parse_set_label(ground, token, token));
    } else {
      const int first = parse_set_label(ground, token.substr(0, dots), token);
      const int last = parse_set_label(ground, token.substr(dots + 2), token);
      out |= ground.interval(first, last);
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace positroid
