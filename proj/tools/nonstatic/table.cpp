#include "nonstatic/table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace nonstatic::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

}  // namespace

TableWriter::TableWriter(std::ostream& os, bool json, std::string subject,
                         std::vector<std::string> columns)
    : os_(os), json_(json), columns_(std::move(columns)) {
  if (json_) {
    os_ << "{\"schema_version\":1,\"subject\":" << quoted(subject) << ",\"columns\":[";
    for (std::size_t i = 0; i < columns_.size(); ++i) os_ << (i ? "," : "") << quoted(columns_[i]);
    os_ << "],\"rows\":[";
  } else {
    for (std::size_t i = 0; i < columns_.size(); ++i) os_ << (i ? "," : "") << csv_field(columns_[i]);
    os_ << '\n';
  }
}

TableWriter::~TableWriter() {
  if (!finished_) finish();
}

void TableWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != columns_.size()) throw std::logic_error("row width does not match header");
  if (json_) os_ << (rows_ ? ",\n[" : "\n[");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os_ << ',';
    const Cell& c = cells[i];
    if (const double* d = std::get_if<double>(&c)) {
      if (json_ && !std::isfinite(*d)) {
        os_ << "null";
      } else {
        os_ << format_number(*d);
      }
    } else if (const std::string* s = std::get_if<std::string>(&c)) {
      os_ << (json_ ? quoted(*s) : csv_field(*s));
    } else if (json_) {
      os_ << "null";
    }
  }
  os_ << (json_ ? "]" : "\n");
  ++rows_;
}

void TableWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (json_) os_ << "\n]}\n";
}

}  // namespace nonstatic::cli
