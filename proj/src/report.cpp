#include "casimir/report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace casimir {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

void CsvDocument::meta(const std::string& key, const std::string& value) {
    meta_.emplace_back(key, value);
}

void CsvDocument::meta(const std::string& key, double value) {
    meta_.emplace_back(key, format_double(value));
}

void CsvDocument::header(std::vector<std::string> columns) {
    columns_ = std::move(columns);
}

void CsvDocument::row(const std::vector<std::string>& cells) {
    std::string line;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    rows_.push_back(std::move(line));
}

void CsvDocument::numeric_row(const std::vector<double>& cells) {
    std::vector<std::string> text;
    text.reserve(cells.size());
    for (double v : cells) text.push_back(format_double(v));
    row(text);
}

void CsvDocument::write(std::ostream& os) const {
    for (const auto& [k, v] : meta_) os << "# " << k << "=" << v << "\n";
    for (size_t i = 0; i < columns_.size(); ++i)
        os << columns_[i] << (i + 1 < columns_.size() ? "," : "");
    if (!columns_.empty()) os << "\n";
    for (const std::string& r : rows_) os << r << "\n";
}

} // namespace casimir
