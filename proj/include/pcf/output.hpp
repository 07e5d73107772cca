#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pcf {

enum class OutputFormat { json_lines, csv, human };

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept;

/// One cell. monostate prints as null (json), empty (csv) or "-" (human).
using Value = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

/// Streams rows with a fixed column set. Reals use 17 significant digits, so
/// every printed number parses back to the same double.
class RowWriter {
 public:
  RowWriter(std::ostream& out, OutputFormat format, std::vector<std::string> columns);

  void write(const std::vector<Value>& row);

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::vector<std::string> columns_;
  bool header_written_ = false;
};

}  // namespace pcf
