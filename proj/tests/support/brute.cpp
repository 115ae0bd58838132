#include "support/brute.hpp"

#include <algorithm>
#include <numeric>

namespace brute {

Mask mask_of(const std::vector<int>& labels) {
  Mask out = 0;
  for (int x : labels) out |= bit(x);
  return out;
}

std::vector<int> labels_of(Mask s) {
  std::vector<int> out;
  for (int x = 1; x <= 64; ++x) {
    if (s & bit(x)) out.push_back(x);
  }
  return out;
}

int popcount(Mask s) {
  int count = 0;
  for (; s != 0; s &= s - 1) ++count;
  return count;
}

std::string show(Mask s) {
  std::string out;
  for (int x : labels_of(s)) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

std::vector<int> cyclic_sorted(Mask s, int n, int k) {
  std::vector<int> out = labels_of(s);
  std::sort(out.begin(), out.end(), [&](int x, int y) {
    const int kx = x >= k ? x - k : x - k + n;
    const int ky = y >= k ? y - k : y - k + n;
    return kx < ky;
  });
  return out;
}

bool gale_leq(Mask s, Mask t, int n, int k) {
  const auto a = cyclic_sorted(s, n, k);
  const auto b = cyclic_sorted(t, n, k);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int ka = a[i] >= k ? a[i] - k : a[i] - k + n;
    const int kb = b[i] >= k ? b[i] - k : b[i] - k + n;
    if (ka > kb) return false;
  }
  return true;
}

Mask walk(int a, int b, int n) {
  Mask out = bit(a);
  for (int x = a; x != b;) {
    x = x == n ? 1 : x + 1;
    out |= bit(x);
  }
  return out;
}

std::vector<Mask> necklace_by_steps(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<Mask> out(static_cast<std::size_t>(n));
  Mask current = 0;
  for (int j = 1; j <= n; ++j) {
    if (images[static_cast<std::size_t>(j - 1)] < j) current |= bit(images[static_cast<std::size_t>(j - 1)]);
  }
  for (int k = 1; k <= n; ++k) {
    out[static_cast<std::size_t>(k - 1)] = current;
    current = (current & ~bit(k)) | bit(images[static_cast<std::size_t>(k - 1)]);
  }
  return out;
}

std::vector<Mask> bases_from_necklace(int n, const std::vector<Mask>& necklace) {
  const int d = popcount(necklace.front());
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (popcount(s) != d) continue;
    bool ok = true;
    for (int j = 1; j <= n && ok; ++j) ok = gale_leq(necklace[static_cast<std::size_t>(j - 1)], s, n, j);
    if (ok) out.push_back(s);
  }
  return out;
}

int Matroid::rank(Mask e) const {
  int best = 0;
  for (Mask b : bases) best = std::max(best, popcount(b & e));
  return best;
}

bool Matroid::independent(Mask e) const { return rank(e) == popcount(e); }

Mask Matroid::closure(Mask e) const {
  const int r = rank(e);
  Mask out = e;
  for (int x = 1; x <= n; ++x) {
    if (rank(e | bit(x)) == r) out |= bit(x);
  }
  return out;
}

bool Matroid::flat(Mask e) const { return closure(e) == e; }

bool Matroid::separable(Mask e) const {
  const auto members = labels_of(e);
  const std::size_t m = members.size();
  if (m < 2) return false;
  const int total = rank(e);
  for (Mask pick = 1; pick + 1 < (Mask{1} << m); ++pick) {
    Mask part = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick & (Mask{1} << i)) part |= bit(members[i]);
    }
    if (rank(part) + rank(e & ~part) == total) return true;
  }
  return false;
}

std::vector<Mask> Matroid::inseparable_flats() const {
  std::vector<Mask> out;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (flat(s) && !separable(s)) out.push_back(s);
  }
  return out;
}

namespace {

bool contains(const std::vector<Mask>& sorted, Mask s) { return std::binary_search(sorted.begin(), sorted.end(), s); }

}  // namespace

bool Matroid::exchange_holds() const {
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      for (int x : labels_of(b1 & ~b2)) {
        bool found = false;
        for (int y : labels_of(b2 & ~b1)) found = found || contains(bases, (b1 & ~bit(x)) | bit(y));
        if (!found) return false;
      }
    }
  }
  return true;
}

bool Matroid::dual_exchange_holds() const {
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      for (int y : labels_of(b2 & ~b1)) {
        bool found = false;
        for (int x : labels_of(b1 & ~b2)) found = found || contains(bases, (b1 & ~bit(x)) | bit(y));
        if (!found) return false;
      }
    }
  }
  return true;
}

Matroid matroid_of(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  Matroid m;
  m.n = n;
  m.bases = bases_from_necklace(n, necklace_by_steps(images));
  return m;
}

std::vector<std::vector<std::vector<int>>> set_partitions(int k) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> code(static_cast<std::size_t>(k), 0);
  auto emit = [&] {
    const int blocks = k == 0 ? 0 : *std::max_element(code.begin(), code.end()) + 1;
    std::vector<std::vector<int>> partition(static_cast<std::size_t>(blocks));
    for (int i = 0; i < k; ++i) partition[static_cast<std::size_t>(code[static_cast<std::size_t>(i)])].push_back(i + 1);
    out.push_back(partition);
  };
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == k) {
      emit();
      return;
    }
    for (int c = 0; c <= used; ++c) {
      code[static_cast<std::size_t>(i)] = c;
      self(self, i + 1, std::max(used, c + 1));
    }
  };
  if (k == 0) return out;
  code[0] = 0;
  rec(rec, 1, 1);
  return out;
}

bool noncrossing_by_quadruples(const std::vector<std::vector<int>>& blocks) {
  int k = 0;
  for (const auto& block : blocks) {
    for (int x : block) k = std::max(k, x);
  }
  std::vector<int> owner(static_cast<std::size_t>(k + 1), -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int x : blocks[i]) owner[static_cast<std::size_t>(x)] = static_cast<int>(i);
  }
  for (int a = 1; a <= k; ++a) {
    for (int b = a + 1; b <= k; ++b) {
      for (int c = b + 1; c <= k; ++c) {
        for (int d = c + 1; d <= k; ++d) {
          const auto oa = owner[static_cast<std::size_t>(a)];
          const auto ob = owner[static_cast<std::size_t>(b)];
          if (oa == owner[static_cast<std::size_t>(c)] && ob == owner[static_cast<std::size_t>(d)] && oa != ob) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

namespace {

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<int> random_derangement(int n, std::uint64_t& state) {
  std::vector<int> images(static_cast<std::size_t>(n));
  while (true) {
    std::iota(images.begin(), images.end(), 1);
    for (int i = n - 1; i > 0; --i) {
      const auto j = static_cast<int>(splitmix(state) % static_cast<std::uint64_t>(i + 1));
      std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
    }
    bool fixed = false;
    for (int i = 0; i < n; ++i) fixed = fixed || images[static_cast<std::size_t>(i)] == i + 1;
    if (!fixed) return images;
  }
}

std::string perm_text(const std::vector<int>& images) {
  std::string out;
  for (int x : images) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

}  // namespace brute
