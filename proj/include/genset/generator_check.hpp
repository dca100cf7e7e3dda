#pragma once

#include "genset/family.hpp"

#include <optional>
#include <vector>

namespace genset {

/// Per-mask minimum number of members needed, for every mask of [n].
///
/// Layer j of the table is the set of masks whose entry is <= j, so the
/// layers are nested by construction. Entries above the computed depth hold
/// kUnreached. Depth never needs to exceed n: a disjoint union of nonempty
/// sets over [n] has at most n parts.
class LayerTable {
 public:
  static constexpr std::uint8_t kUnreached = 0xff;

  LayerTable(int n, int k, std::vector<std::uint8_t> depth)
      : n_(n), k_(k), depth_(std::move(depth)) {}

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t mask_count() const { return depth_.size(); }

  bool marks(int layer, SubsetMask x) const { return depth_[x.bits()] <= layer; }
  std::uint8_t min_parts(SubsetMask x) const { return depth_[x.bits()]; }
  std::uint64_t layer_size(int layer) const;
  std::span<const std::uint8_t> depths() const { return depth_; }

  bool operator==(const LayerTable&) const = default;

 private:
  int n_;
  int k_;
  std::vector<std::uint8_t> depth_;
};

struct GeneratorVerdict {
  bool holds = false;
  std::optional<SubsetMask> counterexample;  // numerically smallest uncovered mask
};

struct Decomposition {
  std::vector<SubsetMask> parts;  // descending mask value
};

/// Disjoint-union layers: layer_j[x] iff layer_{j-1}[x] or some nonempty
/// member g <= x has layer_{j-1}[x \ g]. Empty members are ignored.
LayerTable reachable_layers(const SetFamily& family, int k, const Caps& caps = default_caps());

/// Union layers with overlaps allowed (the k-base relation).
LayerTable union_layers(const SetFamily& family, int k, const Caps& caps = default_caps());

GeneratorVerdict verdict_from(const LayerTable& table);

GeneratorVerdict is_k_generator(const SetFamily& family, int k, const Caps& caps = default_caps());
GeneratorVerdict is_k_base(const SetFamily& family, int k, const Caps& caps = default_caps());

/// Witness for x as a union of at most k pairwise disjoint nonempty members.
std::optional<Decomposition> decompose(const SetFamily& family, int k, SubsetMask x,
                                       const Caps& caps = default_caps());
std::optional<Decomposition> decompose(const SetFamily& family, const LayerTable& table, SubsetMask x);

/// Unordered tuples of 0..k pairwise disjoint distinct members, the empty tuple included.
BigInt count_disjoint_tuples(const SetFamily& family, int k, const Caps& caps = default_caps());

}  // namespace genset
