#include "pcf/output.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "pcf/parameters.hpp"

namespace pcf {
namespace {

std::string real_text(double v, OutputFormat format) {
  if (std::isfinite(v)) return format_real(v);
  if (format == OutputFormat::json_lines) return "null";
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

std::string cell_text(const Value& value, OutputFormat format) {
  const bool json = format == OutputFormat::json_lines;
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return json ? "null" : format == OutputFormat::human ? "-" : "";
        } else if constexpr (std::is_same_v<T, double>) {
          return real_text(v, format);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return json ? nlohmann::json(v).dump() : v;
        }
      },
      value);
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept {
  if (name == "json-lines" || name == "json") return OutputFormat::json_lines;
  if (name == "csv") return OutputFormat::csv;
  if (name == "human") return OutputFormat::human;
  return std::nullopt;
}

RowWriter::RowWriter(std::ostream& out, OutputFormat format, std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns)) {}

void RowWriter::write(const std::vector<Value>& row) {
  if (row.size() != columns_.size()) {
    throw std::logic_error("RowWriter: row width does not match the header");
  }
  switch (format_) {
    case OutputFormat::csv:
      if (!header_written_) {
        for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
        out_ << '\n';
        header_written_ = true;
      }
      for (std::size_t i = 0; i < row.size(); ++i) {
        out_ << (i ? "," : "") << cell_text(row[i], format_);
      }
      break;
    case OutputFormat::json_lines:
      out_ << '{';
      for (std::size_t i = 0; i < row.size(); ++i) {
        out_ << (i ? "," : "") << '"' << columns_[i] << "\":" << cell_text(row[i], format_);
      }
      out_ << '}';
      break;
    case OutputFormat::human:
      for (std::size_t i = 0; i < row.size(); ++i) {
        out_ << (i ? "  " : "") << columns_[i] << '=' << cell_text(row[i], format_);
      }
      break;
  }
  out_ << '\n';
}

}  // namespace pcf
