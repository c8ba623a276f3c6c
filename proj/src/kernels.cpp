#include "leafnet/kernels.hpp"

#include <algorithm>

#if defined(__x86_64__) || defined(__i386__)
#define LEAFNET_X86 1
#include <immintrin.h>
#endif

namespace leafnet::kernels {

namespace {
int cap(int count, int ceiling) { return ceiling == kInfinite ? count : std::min(count, ceiling + 1); }
}  // namespace

int transition_cost_scalar(const DegreeProfile& s, const DegreeProfile& sv, int ceiling) {
  int count = 0;
  for (int w = 0; w < sv.order; ++w) {
    if (!(sv.live & bit(w))) continue;
    if (s.degrees[w] != sv.degrees[w] && ++count > ceiling) return cap(count, ceiling);
  }
  return count;
}

int transition_cost_masks(const DegreeProfile& s, const DegreeProfile& sv, int ceiling) {
  // Leaves and degree-2 vertices are compared a word at a time; only vertices
  // that branch in both subgraphs need their exact degrees looked at.
  const Mask live = sv.live;
  int count = popcount(((s.leaf_mask ^ sv.leaf_mask) | (s.deg2_mask ^ sv.deg2_mask) |
                        (s.branch_mask ^ sv.branch_mask)) & live);
  if (count > ceiling) return cap(count, ceiling);
  for (int w : bits_of(s.branch_mask & sv.branch_mask & live)) {
    if (s.degrees[w] != sv.degrees[w] && ++count > ceiling) return cap(count, ceiling);
  }
  return count;
}

#ifdef LEAFNET_X86

__attribute__((target("sse2"))) int transition_cost_sse2(const DegreeProfile& s, const DegreeProfile& sv,
                                                         int ceiling) {
  Mask equal = 0;
  for (int chunk = 0; chunk < 4; ++chunk) {
    const auto* a = reinterpret_cast<const __m128i*>(s.degrees.data() + 16 * chunk);
    const auto* b = reinterpret_cast<const __m128i*>(sv.degrees.data() + 16 * chunk);
    const __m128i eq = _mm_cmpeq_epi8(_mm_loadu_si128(a), _mm_loadu_si128(b));
    equal |= static_cast<Mask>(static_cast<std::uint16_t>(_mm_movemask_epi8(eq))) << (16 * chunk);
  }
  return cap(popcount(~equal & sv.live), ceiling);
}

__attribute__((target("avx2,popcnt"))) int transition_cost_avx2(const DegreeProfile& s,
                                                                const DegreeProfile& sv, int ceiling) {
  const auto* a = reinterpret_cast<const __m256i*>(s.degrees.data());
  const auto* b = reinterpret_cast<const __m256i*>(sv.degrees.data());
  const __m256i lo = _mm256_cmpeq_epi8(_mm256_loadu_si256(a), _mm256_loadu_si256(b));
  const __m256i hi = _mm256_cmpeq_epi8(_mm256_loadu_si256(a + 1), _mm256_loadu_si256(b + 1));
  const Mask equal = static_cast<Mask>(static_cast<std::uint32_t>(_mm256_movemask_epi8(lo))) |
                     (static_cast<Mask>(static_cast<std::uint32_t>(_mm256_movemask_epi8(hi))) << 32);
  const Mask differ = ~equal & sv.live;
  return cap(static_cast<int>(_mm_popcnt_u64(differ)), ceiling);
}

#else

int transition_cost_sse2(const DegreeProfile& s, const DegreeProfile& sv, int ceiling) {
  return transition_cost_masks(s, sv, ceiling);
}

int transition_cost_avx2(const DegreeProfile& s, const DegreeProfile& sv, int ceiling) {
  return transition_cost_masks(s, sv, ceiling);
}

#endif

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Masks: return "masks";
    case Isa::Sse2: return "sse2";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
    case Isa::Masks: return true;
#ifdef LEAFNET_X86
    case Isa::Sse2: return __builtin_cpu_supports("sse2");
    case Isa::Avx2: return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    case Isa::Sse2:
    case Isa::Avx2: return false;
#endif
  }
  return false;
}

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Masks, Isa::Sse2, Isa::Avx2}) {
    if (supported(isa)) out.push_back(isa);
  }
  return out;
}

Isa selected() {
  static const Isa choice = [] {
    if (supported(Isa::Avx2)) return Isa::Avx2;
    if (supported(Isa::Sse2)) return Isa::Sse2;
    return Isa::Masks;
  }();
  return choice;
}

Kernel kernel_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return &transition_cost_scalar;
    case Isa::Masks: return &transition_cost_masks;
    case Isa::Sse2: return &transition_cost_sse2;
    case Isa::Avx2: return &transition_cost_avx2;
  }
  return &transition_cost_scalar;
}

}  // namespace leafnet::kernels
