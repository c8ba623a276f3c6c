#pragma once

#include <array>
#include <climits>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "leafnet/graph.hpp"

namespace leafnet {

inline constexpr int kInfinite = INT_MAX;

/// Degree sequence of one ml-subgraph over the label space of the host graph.
/// Vertices outside `live` (the deleted vertex of G - v) carry degree 0.
struct DegreeProfile {
  std::array<std::uint8_t, kMaxVertices> degrees{};
  int order = 0;
  int deleted = -1;
  Mask live = 0;
  Mask leaf_mask = 0;
  Mask deg2_mask = 0;
  Mask branch_mask = 0;

  static DegreeProfile from_degrees(std::span<const int> degrees, Mask live);
  static DegreeProfile from_degrees(const std::array<std::uint8_t, kMaxVertices>& degrees, int order,
                                    Mask live);
  /// All live vertices at degree 2, optionally with two path ends at degree 1.
  static DegreeProfile hamiltonian(int order, Mask live, int end_a = -1, int end_b = -1);

  int leaves() const { return popcount(leaf_mask); }
  int degree(int v) const { return degrees[v]; }
  std::vector<std::pair<int, int>> branches() const;
  std::vector<int> to_vector() const;

  friend bool operator==(const DegreeProfile& a, const DegreeProfile& b) {
    return a.order == b.order && a.live == b.live && a.degrees == b.degrees;
  }
  friend bool operator<(const DegreeProfile& a, const DegreeProfile& b) {
    if (a.live != b.live) return a.live < b.live;
    return a.degrees < b.degrees;
  }
};

struct DegreeProfileHash {
  std::size_t operator()(const DegreeProfile& p) const noexcept;
};

enum class MlKind { HamCycle, HamPath, Tree };

std::string_view to_string(MlKind k);

struct MlProfile {
  int ml = kInfinite;
  MlKind kind = MlKind::Tree;
  std::vector<DegreeProfile> profiles;  // sorted, distinct
  bool bound_exceeded = false;

  /// Vertices that are a leaf in at least one stored profile.
  Mask leaf_union() const;
};

}  // namespace leafnet
