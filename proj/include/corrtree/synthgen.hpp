#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corrtree/transform.hpp"

namespace corrtree {

struct FactorGroup {
  std::string label;
  std::size_t members = 0;
};

// One latent factor per group:
//   Y_k(t) = loading * F_g(t) + global_loading * M(t) + noise_sigma * e_k(t)
// with independent standard normal F_g, M and e_k. Within-group population
// correlation is (loading^2 + global^2) / (loading^2 + global^2 + noise^2).
struct FactorModelSpec {
  std::vector<FactorGroup> groups;
  double factor_loading = 0.8;
  double noise_sigma = 0.6;
  double global_loading = 0.0;
  std::size_t length = 1000;
  std::uint64_t seed = 0;
};

// Throws SpecError on an invalid spec.
void validate(const FactorModelSpec& spec);

// Parses "3x10" (three groups of ten) or "4,6,5" (explicit sizes) into
// groups labelled G1, G2, ...
std::vector<FactorGroup> parse_groups(const std::string& text);

// Asset labels are "<group>_<member>" with the member index zero-padded.
// Every variate is a pure function of (seed, stream, index, t), so the panel
// is identical for any thread count.
ReturnsMatrix generate(const FactorModelSpec& spec);

// Group label of each generated asset, in asset order.
std::vector<std::string> group_of_assets(const FactorModelSpec& spec);

// Counter-based standard normal variate keyed on its coordinates.
double keyed_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t index, std::uint64_t t);

}  // namespace corrtree
