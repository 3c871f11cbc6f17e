#pragma once

#include <string>
#include <vector>

#include "glt/error.hpp"

namespace glt {

/// Rectangular numeric table written as CSV: one text header row, then rows
/// of values rendered with 6 significant digits, '.' decimal separator,
/// ',' field separator and '\n' line endings. Output is byte-deterministic.
class CsvTable {
  public:
    CsvTable(std::string file_name, std::vector<std::string> header)
        : name_(std::move(file_name)), header_(std::move(header)) {}

    void add_row(std::vector<double> row);

    const std::string& name() const { return name_; }
    std::size_t row_count() const { return rows_.size(); }

    /// Serialized file content.
    std::string to_string() const;

    /// Writes into `dir` (created if needed); returns the full path.
    std::string write(const std::string& dir) const;

  private:
    std::string name_;
    std::vector<std::string> header_;
    std::vector<std::vector<double>> rows_;
};

/// 6-significant-digit, locale-independent rendering used for all CSV cells.
std::string format_number(double v);

}  // namespace glt
