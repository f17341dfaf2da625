#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace lics {

inline constexpr const char* kVersion = "0.1.0";

/// Columnar run output. Rows are sorted by the first (axis) column.
/// Summary entries carry scalar results (located minima, fidelities,
/// dark energies). Wall time is reported on stderr, not embedded here,
/// so identical runs produce identical bytes.
struct ScanResult {
  std::string scenario_hash;
  std::string version = kVersion;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, double>> summary;
};

// 12 significant digits, shortest form.
std::string format_double(double v);

// Header line first, then rows, then '#'-prefixed meta and summary
// lines. UTF-8, LF line endings.
void write_csv(const ScanResult& r, std::ostream& os);

// Single document {meta, columns, rows}.
void write_json(const ScanResult& r, std::ostream& os);

}  // namespace lics
