#include "glt/csv.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>

namespace glt {

std::string format_number(double v) {
    char buf[48];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
    return std::string(buf, res.ptr);
}

void CsvTable::add_row(std::vector<double> row) {
    if (row.size() != header_.size())
        throw DimensionError("CSV row width " + std::to_string(row.size()) +
                             " does not match header width " + std::to_string(header_.size()));
    rows_.push_back(std::move(row));
}

std::string CsvTable::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (i) out += ',';
        out += header_[i];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string CsvTable::write(const std::string& dir) const {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::filesystem::path path = std::filesystem::path(dir) / name_;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f << to_string();
    if (!f) throw IoError("write failed for " + path.string());
    return path.string();
}

}  // namespace glt
