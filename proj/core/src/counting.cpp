#include "digipath/counting.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace digipath {
namespace {

// Grows on demand. std::deque keeps references to earlier entries valid
// across push_back, so readers may hold them while another thread extends.
class FactorialTable {
 public:
  const Count& get(std::int64_t n) {
    const auto idx = static_cast<std::size_t>(n);
    {
      std::shared_lock lock(mutex_);
      if (idx < values_.size()) return values_[idx];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= idx) {
      const auto next = static_cast<std::int64_t>(values_.size());
      values_.push_back(values_.back() * next);
    }
    return values_[idx];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<Count> values_{Count(1)};
};

FactorialTable& factorials() {
  static FactorialTable table;
  return table;
}

std::string offset_text(const CanonicalOffset& off) {
  std::ostringstream os;
  os << off;
  return os.str();
}

}  // namespace

const Count& factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  return factorials().get(n);
}

Count multinomial(std::int64_t n, std::span<const std::int64_t> parts) {
  if (n < 0) throw std::invalid_argument("multinomial: n must be nonnegative");
  std::int64_t total = 0;
  for (std::int64_t p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: parts must be nonnegative");
    total += p;
  }
  if (total != n) throw std::invalid_argument("multinomial: parts must sum to n");
  Count denom = 1;
  for (std::int64_t p : parts) denom *= factorial(p);
  return factorial(n) / denom;
}

Count multinomial(std::int64_t n, std::initializer_list<std::int64_t> parts) {
  return multinomial(n, std::span<const std::int64_t>(parts.begin(), parts.size()));
}

Count count_n6(const CanonicalOffset& off) {
  return multinomial(off.sum(), {off.i(), off.j(), off.k()});
}

Count count_n8_2d(Coord i, Coord j) {
  i = i < 0 ? -i : i;
  j = j < 0 ? -j : j;
  if (i < j) std::swap(i, j);
  // b right-bottom diagonals, j+b right-top diagonals, the rest straight.
  Count total = 0;
  for (Coord b = 0; 2 * b <= i - j; ++b) {
    total += multinomial(i, {b, j + b, i - j - 2 * b});
  }
  return total;
}

std::string_view to_string(N18Case c) {
  switch (c) {
    case N18Case::MaxCase: return "MaxCase";
    case N18Case::HalfCase: return "HalfCase";
    case N18Case::Overlap: return "Overlap";
  }
  return "?";
}

N18Case classify_n18(const CanonicalOffset& off) {
  const Coord rest = off.j() + off.k();
  if (off.i() > rest + 1) return N18Case::MaxCase;
  if (off.i() < rest) return N18Case::HalfCase;
  return N18Case::Overlap;
}

Count count_n18_maxcase(const CanonicalOffset& off) {
  const Coord i = off.i(), j = off.j(), k = off.k();
  if (i < j + k) {
    throw std::invalid_argument("count_n18_maxcase: needs i >= j+k, got " + offset_text(off));
  }
  const Coord slack = i - j - k;
  Count total = 0;
  for (Coord a = 0; 2 * a <= slack; ++a) {
    for (Coord b = 0; 2 * (a + b) <= slack; ++b) {
      total += multinomial(i, {a, b, k + a, j + b, slack - 2 * (a + b)});
    }
  }
  return total;
}

Count count_n18_halfcase(const CanonicalOffset& off) {
  const Coord i = off.i(), j = off.j(), k = off.k();
  if (i > j + k + 1) {
    throw std::invalid_argument("count_n18_halfcase: needs i <= j+k+1, got " + offset_text(off));
  }
  const Coord sum = off.sum();
  const Coord len = (sum + 1) / 2;
  // Each of the len steps changes two coordinates (one for the singular
  // step of an odd sum); ri is how many steps leave axis x untouched.
  const Coord ri = len - i, rj = len - j, rk = len - k;
  const Count denom = factorial(ri) * factorial(rj) * factorial(rk);
  if (sum % 2 == 0) return factorial(len) / denom;
  // A zero factor drops the singular-step placements that cannot occur.
  const Count weight = Count(ri) * rj + Count(rj) * rk + Count(rk) * ri;
  return factorial(len) * weight / denom;
}

Count count_n18(const CanonicalOffset& off, OverlapCheck check) {
  switch (classify_n18(off)) {
    case N18Case::MaxCase: return count_n18_maxcase(off);
    case N18Case::HalfCase: return count_n18_halfcase(off);
    case N18Case::Overlap: break;
  }
  Count value = count_n18_maxcase(off);
  if (check == OverlapCheck::Assert) {
    const Count other = count_n18_halfcase(off);
    if (other != value) {
      throw std::logic_error("N18 closed forms disagree at " + offset_text(off) + ": " +
                             value.str() + " vs " + other.str());
    }
  }
  return value;
}

Count count_n26(const CanonicalOffset& off) {
  return count_n8_2d(off.i(), off.j()) * count_n8_2d(off.i(), off.k());
}

Count count_paths(Neighborhood n, const CanonicalOffset& off, OverlapCheck check) {
  switch (n) {
    case Neighborhood::N6: return count_n6(off);
    case Neighborhood::N18: return count_n18(off, check);
    case Neighborhood::N26: return count_n26(off);
  }
  return 0;
}

}  // namespace digipath
