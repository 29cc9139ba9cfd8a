#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "busca/series.hpp"
#include "busca/types.hpp"

namespace busca {

/// A series as read from disk, before validation.
struct RawSeries {
    std::string id;
    std::vector<double> timestamps;
    std::optional<double> window_start;
    std::optional<double> window_end;
};

struct SeriesFile {
    std::vector<RawSeries> series;
    std::vector<std::string> errors; // one human-readable entry per bad record
};

/// Reads either JSON Lines ({"id", "timestamps", "a"?, "b"?} per line) or
/// plain text (one timestamp per line, the whole file one series named
/// after it). Malformed JSONL lines become error entries with their line
/// number; the rest of the file still loads.
[[nodiscard]] SeriesFile read_series_file(const std::string& path);

[[nodiscard]] EventSeries validate_raw(const RawSeries& raw);

void write_series_jsonl(std::ostream& out, const EventSeries& series);
void write_labels_csv_header(std::ostream& out);
void write_labels_csv(std::ostream& out, const EventSeries& series,
                      const LabelAssignment& labels);

/// Formats a double with 10 significant digits, '.' decimal separator.
[[nodiscard]] std::string format_number(double value);

/// Minimal CSV quoting: quotes a field only when it contains a comma,
/// quote, or newline.
[[nodiscard]] std::string csv_escape(const std::string& field);

void write_csv_row(std::ostream& out, std::span<const std::string> fields);

/// Parses a CSV file into rows of fields, honoring double-quote escaping.
[[nodiscard]] std::vector<std::vector<std::string>> read_csv(const std::string& path);

} // namespace busca
