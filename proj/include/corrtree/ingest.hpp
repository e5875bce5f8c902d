#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "corrtree/matrix.hpp"

namespace corrtree {

// Aligned panel of raw signals: values(t, i) is asset i observed at
// timestamps[t]. Timestamps are opaque keys kept in strictly increasing order
// (numeric when every key is an integer, lexicographic otherwise).
struct TimeSeriesPanel {
  std::vector<std::string> assets;
  std::vector<std::string> timestamps;
  Matrix values;

  std::size_t n_assets() const noexcept { return assets.size(); }
  std::size_t n_times() const noexcept { return timestamps.size(); }
  std::size_t index_of(const std::string& asset) const;  // throws LookupError

  friend bool operator==(const TimeSeriesPanel&, const TimeSeriesPanel&) = default;
};

enum class TimeColumn { automatic, present, absent };

struct LoadOptions {
  char delimiter = ',';
  std::vector<std::string> missing_markers{"", "NA"};
  // automatic: the first column holds timestamps when its header cell is
  // empty or one of date/time/timestamp/datetime/t/index (case-insensitive).
  TimeColumn time_column = TimeColumn::automatic;
};

// When `had_time_column` is given it receives whether the first column was
// read as timestamps (otherwise rows are keyed 0..T-1).
TimeSeriesPanel load_panel(const std::filesystem::path& path, const LoadOptions& options = {},
                           bool* had_time_column = nullptr);
TimeSeriesPanel read_panel(std::istream& in, const LoadOptions& options = {},
                           bool* had_time_column = nullptr);

struct WriteOptions {
  char delimiter = ',';
  std::string missing_marker = "NA";
};

// Writes a panel in the format load_panel reads, always with a leading
// "timestamp" column and full-precision values.
void write_panel(std::ostream& out, const TimeSeriesPanel& panel, const WriteOptions& options = {});

// Joins panels on the intersection of their timestamps; assets are
// concatenated in input order.
TimeSeriesPanel align_panels(const std::vector<TimeSeriesPanel>& panels);

// Checks the structural invariants (unique non-empty labels, strictly
// increasing timestamps, matching dimensions). Throws SchemaError.
void validate(const TimeSeriesPanel& panel);

// Ordering used for timestamp keys across a set of keys.
bool all_integer_keys(const std::vector<std::string>& keys);
void sort_keys(std::vector<std::string>& keys);

}  // namespace corrtree
