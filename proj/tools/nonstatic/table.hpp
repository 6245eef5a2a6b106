#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace nonstatic::cli {

/// A cell is a number, a string, or missing (empty CSV field, JSON null).
using Cell = std::variant<std::monostate, double, std::string>;

/// Formats with 17 significant digits; non-finite values become "nan",
/// "inf" or "-inf".
std::string format_number(double v);

/// Streams one table as CSV (header row, then data, '\n' endings) or as a
/// JSON document {"schema_version", "subject", "columns", "rows"}.
class TableWriter {
 public:
  TableWriter(std::ostream& os, bool json, std::string subject, std::vector<std::string> columns);
  TableWriter(const TableWriter&) = delete;
  TableWriter& operator=(const TableWriter&) = delete;
  ~TableWriter();

  void row(const std::vector<Cell>& cells);
  /// Writes the closing bracket of a JSON document. Called by the destructor
  /// if not called explicitly.
  void finish();

  std::size_t rows() const noexcept { return rows_; }
  const std::vector<std::string>& columns() const noexcept { return columns_; }

 private:
  std::ostream& os_;
  bool json_;
  std::vector<std::string> columns_;
  std::size_t rows_ = 0;
  bool finished_ = false;
};

}  // namespace nonstatic::cli
