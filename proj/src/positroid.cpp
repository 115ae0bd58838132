#include "positroid/positroid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <random>

#include "positroid/error.hpp"

namespace positroid {

namespace {

int parse_label(std::string_view digits, std::string_view token) {
  int value = 0;
  const auto* begin = digits.data();
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (digits.empty() || ec != std::errc{} || ptr != end) {
    throw InputError("malformed token '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_whitespace(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// DecoratedPermutation

DecoratedPermutation::DecoratedPermutation(std::vector<int> images,
                                           std::vector<Decoration> decorations)
    : images_(std::move(images)), decorations_(std::move(decorations)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1 || n > kMaxGroundSize) {
    throw InputError("permutation length " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxGroundSize));
  }
  if (decorations_.empty()) decorations_.assign(images_.size(), Decoration::kNone);
  if (decorations_.size() != images_.size()) {
    throw InputError("decoration list length does not match permutation length");
  }
  inverse_.assign(images_.size(), 0);
  for (int i = 1; i <= n; ++i) {
    const int x = image(i);
    if (x < 1 || x > n) {
      throw InputError("pi(" + std::to_string(i) + ") = " + std::to_string(x) +
                       " outside 1.." + std::to_string(n));
    }
    if (inverse_[static_cast<std::size_t>(x - 1)] != 0) {
      throw InputError("value " + std::to_string(x) + " appears twice; not a bijection");
    }
    inverse_[static_cast<std::size_t>(x - 1)] = i;
    const bool fixed = x == i;
    const Decoration dec = decoration(i);
    if (fixed && dec == Decoration::kNone) {
      throw InputError("fixed point " + std::to_string(i) + " needs a color (w or b)");
    }
    if (!fixed && dec != Decoration::kNone) {
      throw InputError("position " + std::to_string(i) + " is not a fixed point but has a color");
    }
  }
}

DecoratedPermutation DecoratedPermutation::parse(std::string_view text) {
  std::vector<int> images;
  std::vector<Decoration> decorations;
  for (std::string_view token : split_whitespace(text)) {
    Decoration dec = Decoration::kNone;
    std::string_view digits = token;
    if (!token.empty() && (token.back() == 'w' || token.back() == 'b')) {
      dec = token.back() == 'w' ? Decoration::kWhite : Decoration::kBlack;
      digits.remove_suffix(1);
    }
    images.push_back(parse_label(digits, token));
    decorations.push_back(dec);
  }
  if (images.empty()) throw InputError("empty permutation");
  return DecoratedPermutation(std::move(images), std::move(decorations));
}

bool DecoratedPermutation::has_fixed_points() const {
  for (int i = 1; i <= size(); ++i) {
    if (is_fixed_point(i)) return true;
  }
  return false;
}

std::string DecoratedPermutation::to_string() const {
  std::string out;
  for (int i = 1; i <= size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(image(i));
    if (decoration(i) == Decoration::kWhite) out += 'w';
    if (decoration(i) == Decoration::kBlack) out += 'b';
  }
  return out;
}

// ---------------------------------------------------------------------------
// GrassmannNecklace

GrassmannNecklace::GrassmannNecklace(std::vector<Subset> sets) : sets_(std::move(sets)) {
  const int n = static_cast<int>(sets_.size());
  if (n < 1 || n > kMaxGroundSize) {
    throw InputError("necklace length " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxGroundSize));
  }
  const GroundSet ground(n);
  d_ = sets_.front().size();
  for (int k = 1; k <= n; ++k) {
    if (!at(k).is_subset_of(ground.all())) {
      throw NecklaceError(k, "I_" + std::to_string(k) + " has labels outside 1.." + std::to_string(n));
    }
    if (at(k).size() != d_) {
      throw NecklaceError(k, "|I_" + std::to_string(k) + "| = " + std::to_string(at(k).size()) +
                                 ", expected " + std::to_string(d_));
    }
  }
  for (int i = 1; i <= n; ++i) {
    const Subset current = at(i);
    const Subset following = at(ground.next(i));
    if (current.contains(i)) {
      if (!current.without(i).is_subset_of(following)) {
        throw NecklaceError(i, "I_" + std::to_string(ground.next(i)) + " is not I_" +
                                   std::to_string(i) + " - {" + std::to_string(i) +
                                   "} plus one element");
      }
    } else if (following != current) {
      throw NecklaceError(i, std::to_string(i) + " is not in I_" + std::to_string(i) +
                                 " but I_" + std::to_string(ground.next(i)) + " differs from it");
    }
  }
}

GrassmannNecklace GrassmannNecklace::parse(std::string_view text) {
  std::vector<std::vector<int>> groups;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '{') throw InputError("expected '{' at offset " + std::to_string(i));
    const std::size_t close = text.find('}', i);
    if (close == std::string_view::npos) throw InputError("unterminated '{'");
    std::string_view body = text.substr(i + 1, close - i - 1);
    std::vector<int> labels;
    while (!body.empty()) {
      const std::size_t comma = body.find(',');
      std::string_view item = body.substr(0, comma);
      while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
      while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
      labels.push_back(parse_label(item, item));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
      if (body.empty()) throw InputError("trailing ',' in necklace set");
    }
    groups.push_back(std::move(labels));
    i = close + 1;
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw InputError("expected whitespace after '}'");
    }
    skip_space();
  }
  if (groups.empty()) throw InputError("empty necklace");
  const int n = static_cast<int>(groups.size());
  if (n > kMaxGroundSize) throw InputError("necklace too long");
  std::vector<Subset> sets;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    Subset s;
    for (int label : groups[k]) {
      if (label < 1 || label > n) {
        throw NecklaceError(static_cast<int>(k) + 1,
                            "label " + std::to_string(label) + " outside 1.." + std::to_string(n));
      }
      if (s.contains(label)) {
        throw NecklaceError(static_cast<int>(k) + 1, "label " + std::to_string(label) + " repeated");
      }
      s = s.with(label);
    }
    sets.push_back(s);
  }
  return GrassmannNecklace(std::move(sets));
}

std::string GrassmannNecklace::to_string() const {
  const GroundSet ground(size());
  std::string out;
  for (int k = 1; k <= size(); ++k) {
    if (k > 1) out += ' ';
    out += '{';
    bool first = true;
    for (int x : ground.ordered(at(k), k)) {
      if (!first) out += ',';
      out += std::to_string(x);
      first = false;
    }
    out += '}';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bijection

GrassmannNecklace necklace_from_permutation(const DecoratedPermutation& perm) {
  const GroundSet ground(perm.size());
  std::vector<Subset> sets;
  sets.reserve(static_cast<std::size_t>(perm.size()));
  for (int k = 1; k <= perm.size(); ++k) {
    Subset s;
    for (int x = 1; x <= perm.size(); ++x) {
      const bool black = perm.decoration(x) == Decoration::kBlack;
      if (black || ground.cyclic_lt(k, x, perm.preimage(x))) s = s.with(x);
    }
    sets.push_back(s);
  }
  return GrassmannNecklace(std::move(sets));
}

DecoratedPermutation permutation_from_necklace(const GrassmannNecklace& necklace) {
  const int n = necklace.size();
  const GroundSet ground(n);
  std::vector<int> images(static_cast<std::size_t>(n));
  std::vector<Decoration> decorations(static_cast<std::size_t>(n), Decoration::kNone);
  for (int i = 1; i <= n; ++i) {
    const Subset current = necklace.at(i);
    auto& image = images[static_cast<std::size_t>(i - 1)];
    if (!current.contains(i)) {
      image = i;
      decorations[static_cast<std::size_t>(i - 1)] = Decoration::kWhite;
      continue;
    }
    const Subset entering = necklace.at(ground.next(i)) - current.without(i);
    const int j = entering.min_label();
    image = j;
    if (j == i) decorations[static_cast<std::size_t>(i - 1)] = Decoration::kBlack;
  }
  return DecoratedPermutation(std::move(images), std::move(decorations));
}

LoopsAndColoops detect_loops_coloops(const DecoratedPermutation& perm) {
  LoopsAndColoops out;
  for (int i = 1; i <= perm.size(); ++i) {
    if (perm.decoration(i) == Decoration::kWhite) out.loops = out.loops.with(i);
    if (perm.decoration(i) == Decoration::kBlack) out.coloops = out.coloops.with(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Positroid

Positroid::Positroid(DecoratedPermutation perm)
    : perm_(std::move(perm)), necklace_(necklace_from_permutation(perm_)), ground_(perm_.size()) {}

Positroid::Positroid(const GrassmannNecklace& necklace)
    : perm_(permutation_from_necklace(necklace)), necklace_(necklace), ground_(necklace.size()) {}

void Positroid::require_fixed_point_free(std::string_view what) const {
  if (!has_fixed_points()) return;
  const auto fixed = detect_loops_coloops(perm_);
  throw FixedPointError(
      std::string(what) + " requires a decorated permutation without fixed points "
      "(loops {" + to_string(fixed.loops) + "}, coloops {" + to_string(fixed.coloops) +
      "}); delete the loops and coloops and study the remaining positroid instead");
}

bool is_basis(const Positroid& p, Subset b) {
  p.ground().check_subset(b);
  if (b.size() != p.rank()) {
    throw InputError("candidate basis {" + to_string(b) + "} has size " + std::to_string(b.size()) +
                     ", rank is " + std::to_string(p.rank()));
  }
  for (int j = 1; j <= p.size(); ++j) {
    if (!gale_le(p.ground(), j, p.necklace_at(j), b)) return false;
  }
  return true;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const auto factor = static_cast<std::uint64_t>(n - k + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / factor) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    // result * factor is divisible by i here.
    result = result * factor / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::vector<Subset> enumerate_bases(const Positroid& p) {
  const int n = p.size();
  const int d = p.rank();
  const std::uint64_t candidates = binomial(n, d);
  if (candidates > kMaxBasisCandidates) {
    throw CapacityError("C(" + std::to_string(n) + "," + std::to_string(d) + ") = " +
                        std::to_string(candidates) + " candidate bases exceeds the limit of " +
                        std::to_string(kMaxBasisCandidates));
  }
  std::vector<Subset> bases;
  // Combinations as ascending index vectors advance in lexicographic order.
  std::vector<int> combo(static_cast<std::size_t>(d));
  std::iota(combo.begin(), combo.end(), 1);
  while (true) {
    const Subset candidate = Subset::of(combo);
    if (is_basis(p, candidate)) bases.push_back(candidate);
    int pos = d - 1;
    while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == n - d + pos + 1) --pos;
    if (pos < 0) break;
    ++combo[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < d; ++q) {
      combo[static_cast<std::size_t>(q)] = combo[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
  return bases;
}

DecoratedPermutation random_derangement(int n, std::uint64_t seed) {
  if (n < 2) throw InputError("no fixed-point-free permutation of size " + std::to_string(n));
  if (n > kMaxGroundSize) throw InputError("size " + std::to_string(n) + " too large");
  std::mt19937_64 rng(seed);
  std::vector<int> images(static_cast<std::size_t>(n));
  while (true) {
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    bool fixed = false;
    for (int i = 1; i <= n && !fixed; ++i) fixed = images[static_cast<std::size_t>(i - 1)] == i;
    if (!fixed) return DecoratedPermutation(std::move(images));
  }
}

}  // namespace positroid
