#include <doctest.h>

#include <random>

#include "leafnet/kernels.hpp"

using namespace leafnet;
namespace k = leafnet::kernels;

namespace {

DegreeProfile random_profile(std::mt19937_64& rng, int order, Mask live, int spread) {
  std::vector<int> deg(order);
  std::uniform_int_distribution<int> d(0, spread);
  for (auto& x : deg) x = d(rng);
  return DegreeProfile::from_degrees(deg, live);
}

int definition(const DegreeProfile& s, const DegreeProfile& sv) {
  int c = 0;
  for (int w : bits_of(sv.live)) c += s.degrees[w] != sv.degrees[w];
  return c;
}

}  // namespace

TEST_CASE("scalar kernel matches the definition") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    const int order = 1 + static_cast<int>(rng() % 64);
    const int del = static_cast<int>(rng() % order);
    const DegreeProfile s = random_profile(rng, order, low_bits(order), 4);
    const DegreeProfile sv = random_profile(rng, order, low_bits(order) & ~bit(del), 4);
    CHECK(k::transition_cost_scalar(s, sv, kInfinite) == definition(s, sv));
  }
}

TEST_CASE("every available kernel agrees with the scalar one") {
  const auto isas = k::available();
  REQUIRE(std::find(isas.begin(), isas.end(), k::Isa::Scalar) != isas.end());
  CHECK(k::supported(k::selected()));
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20000; ++i) {
    const int order = 1 + static_cast<int>(rng() % 64);
    const int del = static_cast<int>(rng() % order);
    // Small spread gives many equal degrees; the occasional large one exercises branch vertices.
    const int spread = i % 5 == 0 ? 40 : 3;
    const DegreeProfile s = random_profile(rng, order, low_bits(order), spread);
    DegreeProfile sv = random_profile(rng, order, low_bits(order) & ~bit(del), spread);
    if (i % 3 == 0) {
      auto deg = s.degrees;
      deg[del] = 0;
      sv = DegreeProfile::from_degrees(deg, order, low_bits(order) & ~bit(del));
    }
    const int ceiling = std::array<int, 5>{0, 1, 2, 7, kInfinite}[i % 5];
    const int want = k::transition_cost_scalar(s, sv, ceiling);
    for (k::Isa isa : isas) {
      INFO("isa " << k::to_string(isa) << " order " << order);
      CHECK(k::kernel_for(isa)(s, sv, ceiling) == want);
    }
  }
}

TEST_CASE("ceiling caps the count") {
  const int order = 10;
  const DegreeProfile s = DegreeProfile::hamiltonian(order, low_bits(order));
  const DegreeProfile sv = DegreeProfile::hamiltonian(order, low_bits(order) & ~bit(0), 1, 2);
  for (k::Isa isa : k::available()) {
    CHECK(k::kernel_for(isa)(s, sv, kInfinite) == 2);
    CHECK(k::kernel_for(isa)(s, sv, 0) == 1);
    CHECK(k::kernel_for(isa)(s, sv, 5) == 2);
  }
}
