#include "leafnet/faultcost.hpp"

#include <algorithm>

#include "leafnet/hamilton.hpp"
#include "leafnet/kernels.hpp"
#include "leafnet/mlst.hpp"

namespace leafnet {

namespace {

void check_label_space(const DegreeProfile& s, const DegreeProfile& sv) {
  if (s.deleted >= 0 || s.live != low_bits(s.order)) {
    throw Error(ErrorCode::LabelSpaceMismatch, "first profile must cover the whole graph");
  }
  if (sv.order != s.order || sv.deleted < 0 || sv.live != (s.live & ~bit(sv.deleted))) {
    throw Error(ErrorCode::LabelSpaceMismatch, "second profile must be of the same graph minus one vertex");
  }
}

const kernels::Kernel& active_kernel() {
  static const kernels::Kernel k = kernels::kernel_for(kernels::selected());
  return k;
}

void require_two_connected(const Graph& g) {
  if (!is_two_connected(g)) {
    throw Error(ErrorCode::NotTwoConnected, "fault cost needs a 2-connected graph");
  }
}

std::vector<MlProfile> deleted_profiles(const Graph& g, const MlProfile& whole) {
  const Mask leafy = whole.leaf_union();
  std::vector<MlProfile> out;
  out.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) {
    const Mask alive = g.vertices() & ~bit(v);
    // A leaf of some ml-subgraph can be cut off without adding leaves; any
    // other vertex costs at most Δ extra leaves in a 2-connected graph.
    const int upper = (leafy & bit(v)) ? whole.ml : whole.ml + g.max_degree();
    MlProfile p = ml_profile_masked(g, alive, upper);
    if (p.bound_exceeded) p = ml_profile_masked(g, alive);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

int transition_cost(const DegreeProfile& s, const DegreeProfile& sv, int ceiling) {
  check_label_space(s, sv);
  return active_kernel()(s, sv, ceiling);
}

int min_transition_cost(const DegreeProfile& s, std::span<const DegreeProfile> candidates, int ceiling,
                        int good_enough) {
  const auto kernel = active_kernel();
  int best = ceiling == kInfinite ? kInfinite : ceiling + 1;
  for (const auto& c : candidates) {
    check_label_space(s, c);
    const int cost = kernel(s, c, best == kInfinite ? kInfinite : best - 1);
    best = std::min(best, cost);
    if (best <= good_enough || best == 0) break;
  }
  return best;
}

int phi_of_profile(const DegreeProfile& s, std::span<const MlProfile> vertex_deleted,
                   std::vector<int>* per_vertex, int abandon_at) {
  int worst = 0;
  if (per_vertex) per_vertex->assign(vertex_deleted.size(), 0);
  for (std::size_t v = 0; v < vertex_deleted.size(); ++v) {
    const auto& candidates = vertex_deleted[v].profiles;
    if (per_vertex) {
      const int c = min_transition_cost(s, candidates);
      (*per_vertex)[v] = c;
      worst = std::max(worst, c);
    } else {
      // Only a minimum above the running maximum can change φ_S.
      worst = std::max(worst, min_transition_cost(s, candidates, kInfinite, worst));
      if (worst >= abandon_at) return worst;
    }
  }
  return worst;
}

FaultCostReport fault_cost(const Graph& g) {
  require_two_connected(g);
  const int n = g.order();
  FaultCostReport report;
  if (is_1_hamiltonian(g)) {
    report.phi = 0;
    report.ml = 1;
    report.optimal_profile = DegreeProfile::hamiltonian(n, g.vertices());
    report.per_vertex_cost.assign(n, 0);
    report.profiles = {report.optimal_profile};
    report.per_profile_phi = {0};
    return report;
  }

  const MlProfile whole = ml_profile(g);
  report.ml = whole.ml;
  report.profiles = whole.profiles;
  report.vertex_deleted = deleted_profiles(g, whole);

  report.per_profile_phi.reserve(whole.profiles.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < whole.profiles.size(); ++i) {
    report.per_profile_phi.push_back(phi_of_profile(whole.profiles[i], report.vertex_deleted));
    if (report.per_profile_phi[i] < report.per_profile_phi[best]) best = i;
  }
  report.phi = report.per_profile_phi[best];
  report.optimal_profile = whole.profiles[best];
  phi_of_profile(report.optimal_profile, report.vertex_deleted, &report.per_vertex_cost);
  return report;
}

int fault_cost_value(const Graph& g) {
  require_two_connected(g);
  if (is_1_hamiltonian(g)) return 0;
  const MlProfile whole = ml_profile(g);
  const std::vector<MlProfile> deleted = deleted_profiles(g, whole);
  int best = kInfinite;
  for (const auto& s : whole.profiles) {
    best = std::min(best, phi_of_profile(s, deleted, nullptr, best));
    if (best <= 1) break;
  }
  return best;
}

}  // namespace leafnet
