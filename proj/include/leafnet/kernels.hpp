#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "leafnet/profile.hpp"

namespace leafnet::kernels {

// Transition-cost kernels. Each counts live vertices of `sv` whose degree in
// `sv` differs from their degree in `s`, and returns min(count, ceiling + 1)
// so callers can stop as soon as a candidate is known to be too expensive.
// No argument validation happens here.

int transition_cost_scalar(const DegreeProfile& s, const DegreeProfile& sv, int ceiling);
int transition_cost_masks(const DegreeProfile& s, const DegreeProfile& sv, int ceiling);
int transition_cost_sse2(const DegreeProfile& s, const DegreeProfile& sv, int ceiling);
int transition_cost_avx2(const DegreeProfile& s, const DegreeProfile& sv, int ceiling);

enum class Isa { Scalar, Masks, Sse2, Avx2 };

std::string_view to_string(Isa isa);
bool supported(Isa isa);
/// Every variant the running CPU can execute.
std::vector<Isa> available();
/// The variant picked at start-up: the widest supported one.
Isa selected();

using Kernel = int (*)(const DegreeProfile&, const DegreeProfile&, int);
Kernel kernel_for(Isa isa);

}  // namespace leafnet::kernels
