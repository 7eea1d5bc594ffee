#include "slowperc/apset.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "slowperc/verify.hpp"

namespace slowperc {

ApSet::ApSet(std::int64_t ambient, std::vector<std::int64_t> elems) : n(ambient), elements(std::move(elems)) {
  if (n < 0) throw std::invalid_argument("ambient interval size must be non-negative");
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw std::invalid_argument("AP set elements must be distinct");
  if (!elements.empty() && (elements.front() < 1 || elements.back() > n))
    throw std::invalid_argument("AP set elements must lie in [1, " + std::to_string(n) + "]");
}

ApSet ApSet::scaled(std::int64_t factor) const {
  if (factor < 1) throw std::invalid_argument("scale factor must be positive");
  std::vector<std::int64_t> out;
  out.reserve(elements.size());
  for (auto e : elements) out.push_back(e * factor);
  return ApSet(n * factor, std::move(out));
}

ApSet ap_digits3(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("ap_digits3 needs n >= 1");
  // Reading the binary digits of `mask` in base 3 is increasing in mask.
  std::vector<std::int64_t> out;
  for (std::uint64_t mask = 0;; ++mask) {
    std::int64_t value = 0;
    std::int64_t power = 1;
    for (std::uint64_t m = mask; m; m >>= 1, power *= 3)
      if (m & 1U) value += power;
    if (value > n - 1) break;
    out.push_back(value + 1);
  }
  return ApSet(n, std::move(out));
}

namespace {

struct SphereParams {
  int digits_below = 0;  // d
  int dims = 0;          // k
  std::int64_t norm = 0;
  std::uint64_t count = 0;
};

// Number of digit vectors in [0, d)^k with each squared norm.
std::vector<std::uint64_t> norm_counts(int d, int k) {
  const auto max_norm = static_cast<std::size_t>(k) * static_cast<std::size_t>((d - 1) * (d - 1));
  std::vector<std::uint64_t> counts(max_norm + 1, 0);
  counts[0] = 1;
  std::size_t reach = 0;
  for (int dim = 0; dim < k; ++dim) {
    std::vector<std::uint64_t> next(max_norm + 1, 0);
    for (std::size_t s = 0; s <= reach; ++s) {
      if (!counts[s]) continue;
      for (int digit = 0; digit < d; ++digit) next[s + static_cast<std::size_t>(digit * digit)] += counts[s];
    }
    reach += static_cast<std::size_t>((d - 1) * (d - 1));
    counts.swap(next);
  }
  return counts;
}

std::vector<std::int64_t> sphere_elements(const SphereParams& p) {
  const std::int64_t base = 2 * p.digits_below - 1;
  std::vector<std::int64_t> out;
  std::function<void(int, std::int64_t, std::int64_t, std::int64_t)> rec = [&](int dim, std::int64_t norm_left,
                                                                             std::int64_t value,
                                                                             std::int64_t power) {
    if (dim == p.dims) {
      if (norm_left == 0) out.push_back(value + 1);
      return;
    }
    for (std::int64_t digit = 0; digit < p.digits_below && digit * digit <= norm_left; ++digit)
      rec(dim + 1, norm_left - digit * digit, value + digit * power, power * base);
  };
  rec(0, p.norm, 0, 1);
  return out;
}

}  // namespace

ApSet ap_behrend(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("ap_behrend needs n >= 1");
  ApSet best = ap_digits3(n);

  // Digits below d in base 2d-1 never carry when two vectors are added, so a
  // 3-term progression of integers is one of vectors; a sphere holds none.
  // The largest value is ((2d-1)^k - 1) / 2, which must not exceed n - 1.
  SphereParams chosen;
  for (int k = 2; k <= 62; ++k) {
    auto fits = [&](int d) {
      const std::int64_t base = 2 * d - 1;
      std::int64_t p = 1;
      for (int i = 0; i < k; ++i) {
        if (p > (2 * n) / base + 1) return false;
        p *= base;
      }
      return (p - 1) / 2 <= n - 1;
    };
    if (!fits(2)) break;
    int d_max = 2;
    while (fits(d_max + 1)) ++d_max;
    // Larger digit ranges dominate for fixed k; a few neighbours are enough.
    for (int d = std::max(2, d_max - 4); d <= d_max; ++d) {
      const auto counts = norm_counts(d, k);
      for (std::size_t s = 0; s < counts.size(); ++s)
        if (counts[s] > chosen.count) chosen = {d, k, static_cast<std::int64_t>(s), counts[s]};
    }
  }
  if (chosen.count > best.size()) best = ApSet(n, sphere_elements(chosen));

  const auto report = check_ap_free(best);
  if (!report.passed) throw std::logic_error("Behrend construction produced a 3-term progression");
  return best;
}

ApSet ap_max_exhaustive(std::int64_t n) {
  if (n < 0 || n > 25) throw std::invalid_argument("ap_max_exhaustive supports 0 <= n <= 25");
  // r3[L] = r_3(L), filled bottom-up and used as the pruning bound: the
  // values x..L can contribute at most r_3(L - x + 1) more elements.
  std::vector<int> r3(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::int64_t> best_set;

  for (std::int64_t len = 1; len <= n; ++len) {
    std::vector<std::int64_t> chosen;
    std::vector<char> in(static_cast<std::size_t>(len) + 1, 0);
    std::vector<std::int64_t> best = best_set;  // r_3 is monotone, previous optimum still valid
    int best_size = static_cast<int>(best.size());

    std::function<void(std::int64_t)> dfs = [&](std::int64_t x) {
      const int cur = static_cast<int>(chosen.size());
      if (x > len) {
        if (cur > best_size) {
          best_size = cur;
          best = chosen;
        }
        return;
      }
      if (cur + r3[static_cast<std::size_t>(len - x + 1)] <= best_size) return;
      bool ok = true;
      for (auto b : chosen) {
        const std::int64_t a = 2 * b - x;
        if (a >= 1 && in[static_cast<std::size_t>(a)]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen.push_back(x);
        in[static_cast<std::size_t>(x)] = 1;
        dfs(x + 1);
        in[static_cast<std::size_t>(x)] = 0;
        chosen.pop_back();
      }
      dfs(x + 1);
    };
    // r_3(len) <= r_3(len - 1) + 1 bounds the root call.
    r3[static_cast<std::size_t>(len)] = best_size + 1;
    dfs(1);
    r3[static_cast<std::size_t>(len)] = best_size;
    best_set = best;
  }
  return ApSet(n, best_set);
}

}  // namespace slowperc
