#include "projconst/record.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace projconst {

OutputRecord make_record(const ComputationResult& result, std::uint64_t dim) {
  return {result.subject, result.n, result.d, dim, result.value, result.abs_err,
          method_name(result.method)};
}

std::string format_roundtrip(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string format_15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

std::string to_json(const OutputRecord& r) {
  // Numbers are written by hand so that doubles use the shortest round-trip
  // form and the key order is fixed.
  std::string out = "{\"family\":" + nlohmann::json(r.family).dump();
  out += ",\"n\":" + std::to_string(r.n);
  out += ",\"d\":" + std::to_string(r.d);
  out += ",\"dim\":" + std::to_string(r.dim);
  out += ",\"value\":" + format_roundtrip(r.value);
  out += ",\"abs_err\":" + format_roundtrip(r.abs_err);
  out += ",\"method\":" + nlohmann::json(r.method).dump() + "}";
  return out;
}

std::string to_csv_row(const OutputRecord& r) {
  return r.family + "," + std::to_string(r.n) + "," + std::to_string(r.d) + "," +
         std::to_string(r.dim) + "," + format_roundtrip(r.value) + "," +
         format_roundtrip(r.abs_err) + "," + r.method;
}

std::string to_text(const OutputRecord& r) {
  return r.family + " n=" + std::to_string(r.n) + " d=" + std::to_string(r.d) +
         " dim=" + std::to_string(r.dim) + ": " + format_15(r.value) + " +/- " +
         format_15(r.abs_err) + " (" + r.method + ")";
}

OutputRecord record_from_json(std::string_view line) {
  try {
    const auto j = nlohmann::json::parse(line);
    OutputRecord r;
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<int>();
    r.d = j.at("d").get<int>();
    r.dim = j.at("dim").get<std::uint64_t>();
    r.value = j.at("value").get<double>();
    r.abs_err = j.at("abs_err").get<double>();
    r.method = j.at("method").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON record: ") + e.what());
  }
}

namespace {

template <typename T>
T parse_number(std::string_view field) {
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw std::invalid_argument("malformed CSV field '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

OutputRecord record_from_csv_row(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (fields.size() != 7) throw std::invalid_argument("CSV record must have 7 fields");
  OutputRecord r;
  r.family = std::string(fields[0]);
  r.n = parse_number<int>(fields[1]);
  r.d = parse_number<int>(fields[2]);
  r.dim = parse_number<std::uint64_t>(fields[3]);
  r.value = parse_number<double>(fields[4]);
  r.abs_err = parse_number<double>(fields[5]);
  r.method = std::string(fields[6]);
  return r;
}

}  // namespace projconst
