#include "positroid/subset.hpp"

#include "positroid/error.hpp"

namespace positroid {

Subset Subset::of(std::span<const int> labels) {
  Subset s;
  for (int label : labels) {
    if (label < 1 || label > kMaxGroundSize) {
      throw InputError("label " + std::to_string(label) + " outside 1.." +
                       std::to_string(kMaxGroundSize));
    }
    s = s.with(label);
  }
  return s;
}

Subset Subset::of(std::initializer_list<int> labels) {
  return of(std::span<const int>(labels.begin(), labels.size()));
}

std::vector<int> Subset::labels() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string to_string(Subset s) {
  std::string out;
  for (int label : s.labels()) {
    if (!out.empty()) out += ',';
    out += std::to_string(label);
  }
  return out;
}

}  // namespace positroid
