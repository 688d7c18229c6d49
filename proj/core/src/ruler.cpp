#include "tkiss/ruler.hpp"

#include <bit>
#include <cstdint>
#include <string>

namespace tkiss {

namespace {

void require_positive(Int i, const char* what) {
  if (i < 1) {
    throw ParameterError(std::string(what) + ": index must be >= 1, got " + std::to_string(i));
  }
}

} // namespace

Int ruler(Int i) {
  require_positive(i, "ruler");
  return std::countr_zero(static_cast<std::uint64_t>(i)) + 1;
}

Int ruler_by_halving(Int i) {
  require_positive(i, "ruler_by_halving");
  Int depth = 1;
  while (i % 2 == 0) {
    i /= 2;
    ++depth;
  }
  return depth;
}

Int ruler_sum(Int i) {
  if (i < 0) {
    throw ParameterError("ruler_sum: index must be >= 0, got " + std::to_string(i));
  }
  return checked_sub(checked_mul(2, i), std::popcount(static_cast<std::uint64_t>(i)));
}

PrefixTable::PrefixTable(Int limit) : limit_(limit) {
  if (limit < 1) {
    throw ParameterError("PrefixTable: limit must be >= 1, got " + std::to_string(limit));
  }
  sums_.reserve(static_cast<std::size_t>(limit) + 1);
  sums_.push_back(0);
  for (Int i = 1; i <= limit; ++i) {
    sums_.push_back(checked_add(sums_.back(), ruler(i)));
  }
}

Int PrefixTable::sum(Int i) const {
  if (i < 0 || i > limit_) {
    throw RangeError("prefix sum index " + std::to_string(i) + " outside table [0, " +
                     std::to_string(limit_) + "]");
  }
  return sums_[static_cast<std::size_t>(i)];
}

Int PrefixTable::window(Int r, Int k) const {
  if (r < 1 || k < 1 || r > limit_ || k > limit_ - r + 1) {
    throw RangeError("window r=" + std::to_string(r) + " k=" + std::to_string(k) +
                     " not covered by table of limit " + std::to_string(limit_));
  }
  return sum(r + k - 1) - sum(r - 1);
}

bool check_lemma1(Int k, Int r, const PrefixTable& table) {
  return table.sum(k) <= table.window(r, k);
}

std::optional<Lemma1Window> find_lemma1_violation(Int k_max, Int r_max, const PrefixTable& table) {
  if (k_max < 1 || r_max < 1) {
    throw ParameterError("lemma1: k_max and r_max must be >= 1");
  }
  if (r_max > table.limit()) {
    throw RangeError("lemma1: r_max " + std::to_string(r_max) + " exceeds table limit " +
                     std::to_string(table.limit()));
  }
  for (Int k = 1; k <= k_max; ++k) {
    for (Int r = 1; r + k - 1 <= r_max; ++r) {
      if (!check_lemma1(k, r, table)) {
        return Lemma1Window{k, r};
      }
    }
  }
  return std::nullopt;
}

} // namespace tkiss
