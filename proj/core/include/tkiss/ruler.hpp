#pragma once

#include <optional>
#include <vector>

#include "tkiss/checked.hpp"

namespace tkiss {

/// s_i: one plus the number of trailing zero bits of i (OEIS A001511).
/// Throws ParameterError for i < 1.
Int ruler(Int i);

/// Same sequence, computed from its self-similarity: odd terms are 1, and the
/// even terms with one subtracted reproduce the whole sequence. Kept separate
/// from ruler() so the two can be cross-checked.
Int ruler_by_halving(Int i);

/// Sum of s_1..s_i in closed form (2i - popcount(i)). prefix_sum over a
/// PrefixTable is the tabulated counterpart.
Int ruler_sum(Int i);

/// Eagerly tabulated prefix sums of the ruler sequence.
///
/// sums()[i] is s_1 + ... + s_i, with sums()[0] == 0. The table never grows
/// after construction; lookups past limit() throw RangeError.
class PrefixTable {
public:
  explicit PrefixTable(Int limit);

  Int limit() const noexcept { return limit_; }
  const std::vector<Int>& sums() const noexcept { return sums_; }

  /// s_1 + ... + s_i.
  Int sum(Int i) const;

  /// s_r + ... + s_{r+k-1}.
  Int window(Int r, Int k) const;

private:
  Int limit_;
  std::vector<Int> sums_;
};

inline Int prefix_sum(Int i, const PrefixTable& table) { return table.sum(i); }

/// True iff the length-k prefix sum is at most the sum of the length-k window
/// starting at r. Two table lookups; throws RangeError if the window is not
/// covered by the table.
bool check_lemma1(Int k, Int r, const PrefixTable& table);

struct Lemma1Window {
  Int k;
  Int r;
};

/// Checks every window with 1 <= k <= k_max, r >= 1, r + k - 1 <= r_max.
/// Returns the first failing window in (k, r) order, or nothing if all pass.
/// The table must cover r_max.
std::optional<Lemma1Window> find_lemma1_violation(Int k_max, Int r_max, const PrefixTable& table);

} // namespace tkiss
