#include "corrtree/synthgen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "corrtree/error.hpp"

namespace corrtree {
namespace {

constexpr std::uint64_t kFactorStream = 1;
constexpr std::uint64_t kNoiseStream = 2;
constexpr std::uint64_t kGlobalStream = 3;

// splitmix64 finalizer.
constexpr std::uint64_t mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in (0, 1) from the top 53 bits.
double to_unit(std::uint64_t bits) noexcept {
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

std::size_t parse_count(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
    throw SpecError("bad group size '" + std::string(s) + "'");
  return v;
}

std::string pad(std::size_t k, std::size_t width) {
  std::string s = std::to_string(k);
  return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

}  // namespace

double keyed_normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t index, std::uint64_t t) {
  std::uint64_t h = mix(seed);
  h = mix(h ^ stream);
  h = mix(h ^ index);
  h = mix(h ^ t);
  const double u1 = to_unit(h);
  const double u2 = to_unit(mix(h ^ 0xd1b54a32d192ed03ULL));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

void validate(const FactorModelSpec& spec) {
  if (spec.groups.empty()) throw SpecError("factor model needs at least one group");
  std::size_t total = 0;
  std::vector<std::string> labels;
  for (const auto& g : spec.groups) {
    if (std::find(labels.begin(), labels.end(), g.label) != labels.end())
      throw SpecError("duplicate group label '" + g.label + "'");
    labels.push_back(g.label);
    if (g.members == 0) throw SpecError("group '" + g.label + "' has no members");
    if (g.label.empty()) throw SpecError("group label must not be empty");
    total += g.members;
  }
  if (total < 2) throw SpecError("factor model needs at least 2 assets");
  if (!(spec.factor_loading > 0.0 && spec.factor_loading < 1.0))
    throw SpecError("factor loading must lie in (0, 1)");
  if (!(spec.noise_sigma >= 0.0) || !std::isfinite(spec.noise_sigma))
    throw SpecError("noise sigma must be non-negative");
  if (!(spec.global_loading >= 0.0) || !std::isfinite(spec.global_loading))
    throw SpecError("global loading must be non-negative");
  if (spec.length < 3) throw SpecError("series length must be at least 3");
}

std::vector<FactorGroup> parse_groups(const std::string& text) {
  std::vector<std::size_t> sizes;
  if (const auto x = text.find('x'); x != std::string::npos) {
    const std::size_t count = parse_count(std::string_view(text).substr(0, x));
    const std::size_t members = parse_count(std::string_view(text).substr(x + 1));
    sizes.assign(count, members);
  } else {
    std::string_view rest = text;
    while (true) {
      const auto comma = rest.find(',');
      sizes.push_back(parse_count(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  std::vector<FactorGroup> groups;
  for (std::size_t g = 0; g < sizes.size(); ++g) groups.push_back({"G" + std::to_string(g + 1), sizes[g]});
  return groups;
}

std::vector<std::string> group_of_assets(const FactorModelSpec& spec) {
  std::vector<std::string> out;
  for (const auto& g : spec.groups) out.insert(out.end(), g.members, g.label);
  return out;
}

ReturnsMatrix generate(const FactorModelSpec& spec) {
  validate(spec);
  ReturnsMatrix out;
  out.kind = SignalKind::raw;
  std::vector<std::size_t> group_index;
  for (std::size_t g = 0; g < spec.groups.size(); ++g) {
    const auto& grp = spec.groups[g];
    const std::size_t width = std::to_string(grp.members - 1).size();
    for (std::size_t m = 0; m < grp.members; ++m) {
      out.assets.push_back(grp.label + "_" + pad(m, std::max<std::size_t>(width, 2)));
      group_index.push_back(g);
    }
  }
  const std::size_t n = out.assets.size(), T = spec.length;
  for (std::size_t t = 0; t < T; ++t) out.timestamps.push_back(std::to_string(t));
  out.observations = Matrix(T, n);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t kk = 0; kk < static_cast<std::ptrdiff_t>(n); ++kk) {
    const auto k = static_cast<std::size_t>(kk);
    for (std::size_t t = 0; t < T; ++t) {
      double y = spec.factor_loading * keyed_normal(spec.seed, kFactorStream, group_index[k], t) +
                 spec.noise_sigma * keyed_normal(spec.seed, kNoiseStream, k, t);
      if (spec.global_loading > 0.0)
        y += spec.global_loading * keyed_normal(spec.seed, kGlobalStream, 0, t);
      out.observations(t, k) = y;
    }
  }
  return out;
}

}  // namespace corrtree
