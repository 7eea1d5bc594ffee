#pragma once

#include <cstdint>
#include <vector>

namespace slowperc {

// Subset of [1, n], strictly increasing. Whether it is 3-AP-free is a separate
// question answered by check_ap_free.
struct ApSet {
  std::int64_t n = 0;
  std::vector<std::int64_t> elements;

  ApSet() = default;
  // Sorts the elements and rejects duplicates or values outside [1, n].
  ApSet(std::int64_t n, std::vector<std::int64_t> elements);

  std::size_t size() const { return elements.size(); }

  // Every element multiplied by `factor`, in the ambient interval [factor * n].
  ApSet scaled(std::int64_t factor) const;

  friend bool operator==(const ApSet&, const ApSet&) = default;
};

// a + 1 for every a in [0, n-1] whose base-3 digits are all 0 or 1. Sums of two
// such numbers never carry, so the set is 3-AP-free.
ApSet ap_digits3(std::int64_t n);

// Behrend sphere construction: vectors with k digits below d, written in base
// 2d-1 and restricted to one squared norm. Sweeps (d, k, norm), keeps the best,
// and never returns fewer elements than ap_digits3. The result is verified.
ApSet ap_behrend(std::int64_t n);

// A maximum 3-AP-free subset of [n] by branch and bound. n <= 25.
ApSet ap_max_exhaustive(std::int64_t n);

}  // namespace slowperc
