#include "leafnet/profile.hpp"

namespace leafnet {

namespace {

void fill_masks(DegreeProfile& p) {
  p.leaf_mask = p.deg2_mask = p.branch_mask = 0;
  for (int v : bits_of(p.live)) {
    const int d = p.degrees[v];
    if (d == 1) p.leaf_mask |= bit(v);
    else if (d == 2) p.deg2_mask |= bit(v);
    else if (d >= 3) p.branch_mask |= bit(v);
  }
  const Mask missing = low_bits(p.order) & ~p.live;
  p.deleted = popcount(missing) == 1 ? lowest(missing) : -1;
}

}  // namespace

DegreeProfile DegreeProfile::from_degrees(std::span<const int> degrees, Mask live) {
  DegreeProfile p;
  p.order = static_cast<int>(degrees.size());
  if (p.order > kMaxVertices) throw Error(ErrorCode::TooLarge, "profile over more than 64 labels");
  p.live = live & low_bits(p.order);
  for (int v : bits_of(p.live)) p.degrees[v] = static_cast<std::uint8_t>(degrees[v]);
  fill_masks(p);
  return p;
}

DegreeProfile DegreeProfile::from_degrees(const std::array<std::uint8_t, kMaxVertices>& degrees,
                                          int order, Mask live) {
  DegreeProfile p;
  p.order = order;
  p.live = live & low_bits(order);
  for (int v : bits_of(p.live)) p.degrees[v] = degrees[v];
  fill_masks(p);
  return p;
}

DegreeProfile DegreeProfile::hamiltonian(int order, Mask live, int end_a, int end_b) {
  DegreeProfile p;
  p.order = order;
  p.live = live & low_bits(order);
  for (int v : bits_of(p.live)) p.degrees[v] = 2;
  if (end_a >= 0) p.degrees[end_a] = 1;
  if (end_b >= 0) p.degrees[end_b] = 1;
  fill_masks(p);
  return p;
}

std::vector<std::pair<int, int>> DegreeProfile::branches() const {
  std::vector<std::pair<int, int>> out;
  for (int v : bits_of(branch_mask)) out.emplace_back(v, degrees[v]);
  return out;
}

std::vector<int> DegreeProfile::to_vector() const {
  return std::vector<int>(degrees.begin(), degrees.begin() + order);
}

std::size_t DegreeProfileHash::operator()(const DegreeProfile& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ p.live;
  for (int i = 0; i < p.order; ++i) {
    h ^= p.degrees[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string_view to_string(MlKind k) {
  switch (k) {
    case MlKind::HamCycle: return "HamCycle";
    case MlKind::HamPath: return "HamPath";
    case MlKind::Tree: return "Tree";
  }
  return "Unknown";
}

Mask MlProfile::leaf_union() const {
  Mask m = 0;
  for (const auto& p : profiles) m |= p.leaf_mask;
  return m;
}

}  // namespace leafnet
