#include "genset/family.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <charconv>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace genset {

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::string SubsetMask::to_string() const {
  if (bits_ == 0) return "-";
  std::string out;
  for (std::uint64_t b = bits_; b; b &= b - 1) {
    if (!out.empty()) out += ',';
    out += std::to_string(std::countr_zero(b) + 1);
  }
  return out;
}

bool SetFamily::contains(SubsetMask s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

void check_ground_set(int n) {
  if (n < 1 || n > kMaxGroundSet) {
    throw InvalidInput("ground set size n=" + std::to_string(n) + " outside 1.." +
                       std::to_string(kMaxGroundSet));
  }
}

void check_n_k(int n, int k) {
  check_ground_set(n);
  if (k < 1 || k > n) {
    throw InvalidInput("need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

struct FamilyBuilder {
  static SetFamily build(int n, std::vector<SubsetMask> sorted_unique) {
    SetFamily f;
    f.n_ = n;
    f.members_ = std::move(sorted_unique);
    return f;
  }
};

MadeFamily make_family(int n, std::vector<SubsetMask> masks) {
  check_ground_set(n);
  for (SubsetMask s : masks) {
    if (!s.valid_for(n)) {
      throw InvalidInput("mask " + std::to_string(s.bits()) + " has elements beyond n=" + std::to_string(n));
    }
  }
  std::sort(masks.begin(), masks.end());
  const std::size_t before = masks.size();
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  MadeFamily made;
  made.duplicates_dropped = before - masks.size();
  made.family = FamilyBuilder::build(n, std::move(masks));
  return made;
}

SetFamily family_of(int n, std::vector<SubsetMask> masks) { return make_family(n, std::move(masks)).family; }

CanonicalPartition canonical_partition(int n, int k) {
  check_n_k(n, k);
  CanonicalPartition p{n, k, {}};
  const int small = n / k;
  const int larger = n % k;
  int next = 0;  // zero-based element index
  for (int c = 0; c < k; ++c) {
    const int size = small + (c < larger ? 1 : 0);
    std::uint64_t bits = 0;
    for (int i = 0; i < size; ++i) bits |= std::uint64_t{1} << (next + i);
    next += size;
    p.classes.emplace_back(bits);
  }
  return p;
}

BigInt canonical_size(int n, int k) {
  BigInt total = 0;
  for (SubsetMask c : canonical_partition(n, k).classes) total += pow2(c.size()) - 1;
  return total;
}

SetFamily canonical_generator(int n, int k, const Caps& caps) {
  const BigInt expected = canonical_size(n, k);
  if (expected > caps.family_m) {
    throw BudgetExceeded("canonical generator would have " + expected.str() + " members (cap " +
                         std::to_string(caps.family_m) + ")");
  }
  std::vector<SubsetMask> members;
  members.reserve(expected.convert_to<std::size_t>());
  // Classes occupy increasing bit ranges, so ascending submasks per class
  // concatenate into an already sorted, duplicate-free list.
  for (SubsetMask cls : canonical_partition(n, k).classes) {
    const std::uint64_t c = cls.bits();
    for (std::uint64_t s = (0 - c) & c; s; s = (s - c) & c) members.emplace_back(s);
  }
  return FamilyBuilder::build(n, std::move(members));
}

namespace {

BigInt sum_binomials_upto(const BigInt& m, int k) {
  BigInt term = 1, total = 1;
  for (int i = 1; i <= k; ++i) {
    if (BigInt(i) > m) break;
    term = term * (m - i + 1) / i;
    total += term;
  }
  return total;
}

}  // namespace

BigInt trivial_lower_bound(int n, int k) {
  check_n_k(n, k);
  const BigInt target = pow2(n);
  BigInt lo = 0, hi = target - 1;  // sum at m = 2^n - 1 is already >= 2^n for k >= 1
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (sum_binomials_upto(mid, k) >= target) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

Rational parse_rational(const std::string& text) {
  auto fail = [&] { throw InvalidInput("not a rational number: '" + text + "'"); };
  if (text.empty()) fail();
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) fail();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) fail();
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9') fail();
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) fail();
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    const bool negative = !whole.empty() && whole[0] == '-';
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) fail();
    Rational value = Rational(parse_int(negative ? whole.substr(1) : whole)) +
                     Rational(BigInt(frac), ipow(BigInt(10), frac.size()));
    return negative ? Rational(-value) : value;
  }
  return Rational(parse_int(text));
}

std::string to_decimal_string(const HighFloat& x, int significant) {
  std::ostringstream os;
  os.precision(significant);
  os << x;
  return os.str();
}

std::string to_decimal_string(const Rational& q, int significant) {
  return to_decimal_string(to_high(q), significant);
}

}  // namespace genset
