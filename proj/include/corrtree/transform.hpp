#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "corrtree/ingest.hpp"
#include "corrtree/matrix.hpp"

namespace corrtree {

enum class SignalKind { log_return, raw, rank, zscore };

std::string_view to_string(SignalKind kind) noexcept;
SignalKind parse_signal_kind(std::string_view name);  // throws SpecError

// Signal matrix fed to the correlation estimator. observations(t, i) is the
// transformed value of asset i at row t; timestamps label each row.
struct ReturnsMatrix {
  std::vector<std::string> assets;
  std::vector<std::string> timestamps;
  Matrix observations;
  SignalKind kind = SignalKind::raw;

  std::size_t n_assets() const noexcept { return assets.size(); }
  std::size_t n_times() const noexcept { return observations.rows(); }

  // Rows [first, last) with the same assets and kind.
  ReturnsMatrix slice(std::size_t first, std::size_t last) const;
};

// Y(t, i) = ln P(t+1, i) - ln P(t, i). Missing at either end gives missing.
// Throws DomainError on a non-positive present value.
ReturnsMatrix log_returns(const TimeSeriesPanel& panel);

// The panel values unchanged, as a signal matrix.
ReturnsMatrix raw_signal(const TimeSeriesPanel& panel);

// League-table ranks per timestamp: 1 for the largest value, ties share the
// mean of the ranks they span. Throws DomainError on a missing cell.
ReturnsMatrix rank_signal(const TimeSeriesPanel& panel);

// Per-asset standardization to mean 0 and population standard deviation 1
// over present values. Missing cells stay missing.
ReturnsMatrix zscore(const TimeSeriesPanel& panel);

// Dispatches on kind.
ReturnsMatrix make_signal(const TimeSeriesPanel& panel, SignalKind kind);

// Re-expresses quotes given in a common numeraire in terms of `base`:
// P'(t, i) = P(t, i) / P(t, base), the numeraire itself becomes a new last
// asset with quote 1 / P(t, base), and the base column is dropped.
// Rebasing to `numeraire` returns the panel unchanged.
TimeSeriesPanel rebase(const TimeSeriesPanel& panel, const std::string& base,
                       const std::string& numeraire);

}  // namespace corrtree
