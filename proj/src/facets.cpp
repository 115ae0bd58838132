#include "positroid/facets.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "positroid/error.hpp"
#include "positroid/flats.hpp"
#include "positroid/oracle.hpp"
#include "positroid/rank.hpp"

namespace positroid {

namespace {

int group_of(const Inequality& ineq) { return ineq.kind == InequalityKind::kNonnegativity ? 0 : 1; }

void canonicalize(FacetSystem& system) {
  auto order = [](const Inequality& lhs, const Inequality& rhs) {
    if (group_of(lhs) != group_of(rhs)) return group_of(lhs) < group_of(rhs);
    if (lhs.support != rhs.support) return lex_less(lhs.support, rhs.support);
    return lhs.rhs < rhs.rhs;
  };
  std::ranges::sort(system.equalities, order);
  std::ranges::sort(system.inequalities, order);
}

void add_nonnegativity(FacetSystem& system) {
  for (int e = 1; e <= system.n; ++e) {
    system.inequalities.push_back({Subset::singleton(e), 0, Sense::kGe, InequalityKind::kNonnegativity});
  }
}

bool holds(const Inequality& ineq, int lhs) {
  switch (ineq.sense) {
    case Sense::kLe: return lhs <= ineq.rhs;
    case Sense::kGe: return lhs >= ineq.rhs;
    case Sense::kEq: return lhs == ineq.rhs;
  }
  return false;
}

const char* sense_token(Sense sense) {
  switch (sense) {
    case Sense::kLe: return "le";
    case Sense::kGe: return "ge";
    case Sense::kEq: return "eq";
  }
  return "?";
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError("H-representation line " + std::to_string(line) + ": bad integer '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

FacetSystem independent_set_facets(const Positroid& p, IndependentSystem system) {
  p.require_fixed_point_free("independent_set_facets");
  FacetSystem out{p.size(), p.rank(), {}, {}};
  add_nonnegativity(out);
  if (system == IndependentSystem::kInseparableFlats) {
    for (const FlatRecord& flat : enumerate_inseparable_flats(p)) {
      out.inequalities.push_back({flat.members, flat.rank, Sense::kLe, InequalityKind::kRankBound});
    }
  } else {
    for (Subset e : interval_flat_intersections(p)) {
      out.inequalities.push_back({e, rank(p, e), Sense::kLe, InequalityKind::kRankBound});
    }
  }
  canonicalize(out);
  return out;
}

FacetSystem basis_polytope_system(const Positroid& p, bool prune_dominated) {
  const GroundSet& g = p.ground();
  FacetSystem out{p.size(), p.rank(), {}, {}};
  out.equalities.push_back({g.all(), p.rank(), Sense::kEq, InequalityKind::kCardinality});

  // Interval rank |I_a & [a,b]|: the most elements any basis has in [a,b].
  // Each support appears once; every [a, a-1] is the ground set.
  std::map<std::uint64_t, int> bounds;
  for (int a = 1; a <= p.size(); ++a) {
    for (int b = 1; b <= p.size(); ++b) {
      const Subset members = g.interval(a, b);
      bounds.emplace(members.bits(), (p.necklace_at(a) & members).size());
    }
  }
  for (const auto& [bits, rhs] : bounds) {
    const Subset support(bits);
    if (prune_dominated) {
      const bool dominated = std::ranges::any_of(bounds, [&](const auto& other) {
        const Subset wider(other.first);
        return wider != support && support.is_subset_of(wider) && other.second <= rhs;
      });
      if (dominated) continue;
    }
    out.inequalities.push_back({support, rhs, Sense::kLe, InequalityKind::kRankBound});
  }
  if (prune_dominated) add_nonnegativity(out);
  canonicalize(out);
  return out;
}

std::string to_hrep(const FacetSystem& system) {
  std::string out = std::to_string(system.n) + " " + std::to_string(system.d) + "\n";
  auto emit = [&](const Inequality& ineq) {
    out += sense_token(ineq.sense);
    out += ' ';
    out += std::to_string(ineq.rhs);
    for (int label : ineq.support.labels()) {
      out += ' ';
      out += std::to_string(label);
    }
    out += '\n';
  };
  for (const auto& eq : system.equalities) emit(eq);
  for (const auto& ineq : system.inequalities) emit(ineq);
  return out;
}

FacetSystem parse_hrep(std::string_view text) {
  FacetSystem out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string token; fields >> token;) tokens.push_back(token);
    if (tokens.empty()) continue;
    if (!header) {
      if (tokens.size() != 2) throw InputError("H-representation header must be 'n d'");
      out.n = parse_int(tokens[0], line_no);
      out.d = parse_int(tokens[1], line_no);
      const GroundSet ground(out.n);
      header = true;
      continue;
    }
    if (tokens.size() < 2) throw InputError("H-representation line " + std::to_string(line_no) + " is too short");
    Inequality ineq;
    if (tokens[0] == "le") {
      ineq.sense = Sense::kLe;
    } else if (tokens[0] == "ge") {
      ineq.sense = Sense::kGe;
    } else if (tokens[0] == "eq") {
      ineq.sense = Sense::kEq;
    } else {
      throw InputError("H-representation line " + std::to_string(line_no) + ": unknown sense '" +
                       tokens[0] + "'");
    }
    ineq.rhs = parse_int(tokens[1], line_no);
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      const int label = parse_int(tokens[i], line_no);
      if (label < 1 || label > out.n) {
        throw InputError("H-representation line " + std::to_string(line_no) + ": label " +
                         std::to_string(label) + " outside 1.." + std::to_string(out.n));
      }
      ineq.support = ineq.support.with(label);
    }
    if (ineq.sense == Sense::kEq) {
      ineq.kind = InequalityKind::kCardinality;
      out.equalities.push_back(ineq);
      continue;
    }
    const bool nonneg = ineq.sense == Sense::kGe && ineq.rhs == 0 && ineq.support.size() == 1;
    ineq.kind = nonneg ? InequalityKind::kNonnegativity : InequalityKind::kRankBound;
    out.inequalities.push_back(ineq);
  }
  if (!header) throw InputError("empty H-representation");
  return out;
}

bool satisfies(const FacetSystem& system, Subset point) {
  auto ok = [&](const Inequality& ineq) { return holds(ineq, (ineq.support & point).size()); };
  return std::ranges::all_of(system.equalities, ok) && std::ranges::all_of(system.inequalities, ok);
}

PointCheck validate_01_points(const Positroid& p, const FacetSystem& system, PolytopeMode mode) {
  const int n = p.size();
  if (n > kMaxPointSweepSize) {
    throw CapacityError("0/1 point sweep over 2^" + std::to_string(n) + " points exceeds the limit of 2^" +
                        std::to_string(kMaxPointSweepSize));
  }
  if (system.n != n) throw InputError("facet system is for n = " + std::to_string(system.n));
  const OracleMatroid oracle = OracleMatroid::from_positroid(p);
  const auto ranks = oracle_rank_table(oracle);
  PointCheck out;
  const std::uint64_t full = p.ground().all().bits();
  for (std::uint64_t bits = 0;; ++bits) {
    const Subset point(bits);
    const bool member = mode == PolytopeMode::kIndependentSet ? ranks[bits] == point.size()
                                                              : oracle.is_basis(point);
    ++out.points;
    if (satisfies(system, point) != member) {
      out.ok = false;
      out.counterexample = point;
      return out;
    }
    if (bits == full) break;
  }
  return out;
}

namespace {

// Depth-first search over doubled coordinates in {0, ..., max_value} on the
// removed inequality's support.
class HalfIntegralSearch {
 public:
  HalfIntegralSearch(const FacetSystem& system, std::size_t skip_index, int max_value)
      : system_(system), target_(system.inequalities[skip_index]), max_value_(max_value) {
    for (std::size_t i = 0; i < system.inequalities.size(); ++i) {
      if (i != skip_index) others_.push_back(system.inequalities[i]);
    }
    elements_ = target_.support.labels();
    values_.assign(elements_.size(), 0);
    partial_.assign(others_.size(), 0);
  }

  std::optional<std::vector<int>> run() {
    if (!descend(0, 0)) return std::nullopt;
    std::vector<int> point(static_cast<std::size_t>(system_.n), 0);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      point[static_cast<std::size_t>(elements_[i] - 1)] = values_[i];
    }
    return point;
  }

 private:
  bool descend(std::size_t depth, int target_sum) {
    const int remaining = static_cast<int>(elements_.size() - depth);
    if (target_sum + max_value_ * remaining <= 2 * target_.rhs) return false;
    if (depth == elements_.size()) return leaf_ok();
    const int e = elements_[depth];
    for (int v = max_value_; v >= 0; --v) {
      bool feasible = true;
      for (std::size_t i = 0; i < others_.size(); ++i) {
        if (!others_[i].support.contains(e)) continue;
        partial_[i] += v;
        if (others_[i].sense == Sense::kLe && partial_[i] > 2 * others_[i].rhs) feasible = false;
      }
      values_[depth] = v;
      if (feasible && descend(depth + 1, target_sum + v)) return true;
      for (std::size_t i = 0; i < others_.size(); ++i) {
        if (others_[i].support.contains(e)) partial_[i] -= v;
      }
    }
    values_[depth] = 0;
    return false;
  }

  bool leaf_ok() const {
    for (std::size_t i = 0; i < others_.size(); ++i) {
      const int lhs = partial_[i];
      const int rhs = 2 * others_[i].rhs;
      if (others_[i].sense == Sense::kGe && lhs < rhs) return false;
      if (others_[i].sense == Sense::kEq && lhs != rhs) return false;
    }
    for (const auto& eq : system_.equalities) {
      int lhs = 0;
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (eq.support.contains(elements_[i])) lhs += values_[i];
      }
      if (lhs != 2 * eq.rhs) return false;
    }
    return true;
  }

  const FacetSystem& system_;
  const Inequality& target_;
  int max_value_;
  std::vector<Inequality> others_;
  std::vector<int> elements_;
  std::vector<int> values_;
  std::vector<int> partial_;
};

}  // namespace

std::vector<MinimalityWitness> probe_minimality(const FacetSystem& system) {
  std::vector<MinimalityWitness> out;
  for (std::size_t i = 0; i < system.inequalities.size(); ++i) {
    const Inequality& ineq = system.inequalities[i];
    if (ineq.kind != InequalityKind::kRankBound) continue;
    auto point = HalfIntegralSearch(system, i, 2).run();
    // x_e <= 1 style bounds can only be violated above 1.
    if (!point) point = HalfIntegralSearch(system, i, 2 * ineq.rhs + 1).run();
    out.push_back({ineq, std::move(point)});
  }
  return out;
}

}  // namespace positroid
