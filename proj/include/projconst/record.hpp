#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "projconst/result.hpp"

namespace projconst {

inline constexpr std::string_view kCsvHeader = "family,n,d,dim,value,abs_err,method";

/// One line of CLI output. `family` is one of harmonic, homogeneous,
/// polyleq, complex-homogeneous, hilbert-real, hilbert-complex.
struct OutputRecord {
  std::string family;
  int n = 0;
  int d = 0;
  std::uint64_t dim = 0;
  double value = 0.0;
  double abs_err = 0.0;
  std::string method;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(const ComputationResult& result, std::uint64_t dim);

/// Shortest decimal string that parses back to exactly `x`.
std::string format_roundtrip(double x);

/// 15 significant digits, for human-facing text.
std::string format_15(double x);

std::string to_json(const OutputRecord& record);
std::string to_csv_row(const OutputRecord& record);
std::string to_text(const OutputRecord& record);

/// Inverses of to_json / to_csv_row; throw std::invalid_argument on malformed input.
OutputRecord record_from_json(std::string_view line);
OutputRecord record_from_csv_row(std::string_view line);

}  // namespace projconst
