#include "positroid/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "positroid/error.hpp"
#include "positroid/positroid.hpp"

namespace positroid {

namespace {

void require_sweep(int n, const char* what) {
  if (n > kMaxSweepSize) {
    throw CapacityError(std::string(what) + " enumerates 2^n sets; n = " + std::to_string(n) +
                        " exceeds the limit of " + std::to_string(kMaxSweepSize));
  }
}

// Membership test over an arbitrary basis list.
class BasisLookup {
 public:
  BasisLookup(int n, std::span<const Subset> bases) {
    if (n <= 24) {
      dense_.assign(std::size_t{1} << n, false);
      for (Subset b : bases) dense_[b.bits()] = true;
    } else {
      sparse_.insert(bases.begin(), bases.end());
    }
  }

  bool contains(Subset s) const {
    return dense_.empty() ? sparse_.contains(s) : static_cast<bool>(dense_[s.bits()]);
  }

 private:
  std::vector<bool> dense_;
  std::unordered_set<Subset> sparse_;
};

bool exchange_holds(const BasisLookup& lookup, std::span<const Subset> bases) {
  for (Subset b1 : bases) {
    for (Subset b2 : bases) {
      const Subset only1 = b1 - b2;
      const Subset only2 = b2 - b1;
      // Exchange: every x in B1 - B2 has a partner y in B2 - B1 with B1 - x + y a basis.
      for (int x : only1.labels()) {
        bool found = false;
        for (int y : only2.labels()) {
          if (lookup.contains(b1.without(x).with(y))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
      // Dual exchange: every y in B2 - B1 has a partner x in B1 - B2.
      for (int y : only2.labels()) {
        bool found = false;
        for (int x : only1.labels()) {
          if (lookup.contains(b1.without(x).with(y))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace

OracleMatroid::OracleMatroid(int n, std::vector<Subset> bases, Unchecked)
    : ground_(n), bases_(std::move(bases)) {
  if (bases_.empty()) throw InputError("a matroid needs at least one basis");
  std::ranges::sort(bases_, {}, &Subset::bits);
  if (std::ranges::adjacent_find(bases_) != bases_.end()) {
    throw InputError("basis list contains duplicates");
  }
  rank_ = bases_.front().size();
  for (Subset b : bases_) {
    ground_.check_subset(b);
    if (b.size() != rank_) {
      throw InputError("bases of different sizes: {" + to_string(bases_.front()) + "} and {" +
                       to_string(b) + "}");
    }
  }
}

OracleMatroid::OracleMatroid(int n, std::vector<Subset> bases)
    : OracleMatroid(n, std::move(bases), Unchecked{}) {
  if (bases_.size() <= kExchangeCheckLimit && !exchange_axioms_hold(n, bases_)) {
    throw InputError("basis list violates the basis exchange axiom");
  }
}

OracleMatroid OracleMatroid::from_positroid(const Positroid& p) {
  return OracleMatroid(p.size(), enumerate_bases(p), Unchecked{});
}

bool OracleMatroid::is_basis(Subset b) const {
  return std::ranges::binary_search(bases_, b.bits(), {}, &Subset::bits);
}

bool OracleMatroid::is_independent(Subset a) const {
  return std::ranges::any_of(bases_, [&](Subset b) { return a.is_subset_of(b); });
}

int oracle_rank(const OracleMatroid& m, Subset a) {
  int best = 0;
  for (Subset b : m.bases()) best = std::max(best, (a & b).size());
  return best;
}

Subset oracle_max_intersection_basis(const OracleMatroid& m, Subset a) {
  Subset best = m.bases().front();
  for (Subset b : m.bases()) {
    if ((a & b).size() > (a & best).size()) best = b;
  }
  return best;
}

Subset oracle_closure(const OracleMatroid& m, Subset a) {
  m.ground().check_subset(a);
  const int base_rank = oracle_rank(m, a);
  Subset out = a;
  for (int e = 1; e <= m.size(); ++e) {
    if (!a.contains(e) && oracle_rank(m, a.with(e)) == base_rank) out = out.with(e);
  }
  return out;
}

bool oracle_is_flat(const OracleMatroid& m, Subset a) { return oracle_closure(m, a) == a; }

std::vector<std::uint8_t> oracle_rank_table(const OracleMatroid& m) {
  const int n = m.size();
  require_sweep(n, "rank table");
  const std::size_t count = std::size_t{1} << n;
  // A set is independent when it is a basis or one element short of an
  // independent set; walking down from the full set settles each set after
  // all of its supersets.
  std::vector<bool> independent(count, false);
  for (Subset b : m.bases()) independent[b.bits()] = true;
  for (std::size_t bits = count; bits-- > 0;) {
    if (independent[bits]) continue;
    for (int e = 0; e < n; ++e) {
      const std::size_t bit = std::size_t{1} << e;
      if ((bits & bit) == 0 && independent[bits | bit]) {
        independent[bits] = true;
        break;
      }
    }
  }
  std::vector<std::uint8_t> ranks(count, 0);
  for (std::size_t bits = 1; bits < count; ++bits) {
    if (independent[bits]) {
      ranks[bits] = static_cast<std::uint8_t>(std::popcount(bits));
      continue;
    }
    std::uint8_t best = 0;
    for (std::size_t rest = bits; rest != 0; rest &= rest - 1) {
      const std::size_t bit = rest & (~rest + 1);
      best = std::max(best, ranks[bits & ~bit]);
    }
    ranks[bits] = best;
  }
  return ranks;
}

std::vector<Subset> oracle_all_flats(const OracleMatroid& m) {
  const int n = m.size();
  require_sweep(n, "flat enumeration");
  const auto ranks = oracle_rank_table(m);
  std::vector<Subset> flats;
  for (std::size_t bits = 0; bits < ranks.size(); ++bits) {
    bool flat = true;
    for (int e = 0; e < n && flat; ++e) {
      const std::size_t bit = std::size_t{1} << e;
      if ((bits & bit) == 0 && ranks[bits | bit] == ranks[bits]) flat = false;
    }
    if (flat) flats.emplace_back(bits);
  }
  std::ranges::sort(flats, LexLess{});
  return flats;
}

namespace {

template <typename RankFn>
bool separable_by(Subset a, RankFn&& rank_of) {
  if (a.size() < 2) return false;
  if (a.size() > kMaxBipartitionSize) {
    throw CapacityError("bipartition search over " + std::to_string(a.size()) +
                        " elements exceeds the limit of " + std::to_string(kMaxBipartitionSize));
  }
  const int total = rank_of(a);
  // Parts containing the smallest element enumerate each bipartition once.
  const Subset anchor = Subset::singleton(a.min_label());
  const Subset rest = a - anchor;
  bool found = false;
  for_each_submask(rest, [&](Subset extra) {
    if (found || extra == rest) return;
    const Subset part = anchor | extra;
    if (rank_of(part) + rank_of(a - part) == total) found = true;
  });
  return found;
}

}  // namespace

bool oracle_is_separable(const OracleMatroid& m, Subset a) {
  m.ground().check_subset(a);
  return separable_by(a, [&](Subset s) { return oracle_rank(m, s); });
}

bool separable_from_table(std::span<const std::uint8_t> ranks, Subset a) {
  return separable_by(a, [&](Subset s) { return static_cast<int>(ranks[s.bits()]); });
}

std::vector<Subset> oracle_inseparable_flats(const OracleMatroid& m) {
  const auto ranks = oracle_rank_table(m);
  std::vector<Subset> out;
  for (Subset f : oracle_all_flats(m)) {
    if (!f.empty() && !separable_from_table(ranks, f)) out.push_back(f);
  }
  return out;
}

OracleMatroid oracle_dual(const OracleMatroid& m) {
  std::vector<Subset> complements;
  complements.reserve(m.bases().size());
  for (Subset b : m.bases()) complements.push_back(m.ground().all() - b);
  return OracleMatroid(m.size(), std::move(complements), OracleMatroid::Unchecked{});
}

bool exchange_axioms_hold(int n, std::span<const Subset> bases) {
  const BasisLookup lookup(n, bases);
  return exchange_holds(lookup, bases);
}

bool check_exchange_axioms(const OracleMatroid& m) {
  return exchange_axioms_hold(m.size(), m.bases());
}

}  // namespace positroid
