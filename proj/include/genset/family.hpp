#pragma once

#include "genset/common.hpp"
#include "genset/numeric.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace genset {

inline constexpr int kMaxGroundSet = 62;

/// A subset of [n]; element i is stored at bit i-1.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  static SubsetMask of(std::initializer_list<int> elements) {
    std::uint64_t bits = 0;
    for (int e : elements) bits |= std::uint64_t{1} << (e - 1);
    return SubsetMask(bits);
  }
  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int element) const { return (bits_ >> (element - 1)) & 1u; }
  constexpr bool subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(SubsetMask other) const { return (bits_ & other.bits_) == 0; }
  constexpr bool valid_for(int n) const { return (bits_ & ~full(n).bits_) == 0; }

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  constexpr SubsetMask minus(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_); }

  constexpr auto operator<=>(const SubsetMask&) const = default;

  /// Ascending elements, e.g. "1,3,4"; the empty set renders as "-".
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// A duplicate-free family over [n], members sorted by mask value.
class SetFamily {
 public:
  SetFamily() = default;

  int n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const SubsetMask> members() const { return members_; }
  const SubsetMask& operator[](std::size_t i) const { return members_[i]; }
  bool contains(SubsetMask s) const;

  bool operator==(const SetFamily&) const = default;

 private:
  friend struct FamilyBuilder;
  int n_ = 1;
  std::vector<SubsetMask> members_;
};

struct MadeFamily {
  SetFamily family;
  std::size_t duplicates_dropped = 0;
};

/// Validates, sorts and deduplicates. Throws InvalidInput on a bad n or an out-of-range mask.
MadeFamily make_family(int n, std::vector<SubsetMask> masks);

/// Shorthand for make_family(...).family.
SetFamily family_of(int n, std::vector<SubsetMask> masks);

/// The k near-equal classes of [n]: contiguous blocks, the n mod k larger ones first.
struct CanonicalPartition {
  int n = 0;
  int k = 0;
  std::vector<SubsetMask> classes;
};

CanonicalPartition canonical_partition(int n, int k);

/// Union over the classes of all their nonempty subsets.
SetFamily canonical_generator(int n, int k, const Caps& caps = default_caps());

/// Sum over classes of 2^|class| - 1, without building the family.
BigInt canonical_size(int n, int k);

/// Smallest m with sum_{i<=k} C(m,i) >= 2^n.
BigInt trivial_lower_bound(int n, int k);

void check_ground_set(int n);
void check_n_k(int n, int k);

}  // namespace genset
