// Deterministic document emission: shortest round-trip float formatting
// and CSV assembly with a leading "# key=value" metadata block.
#ifndef CASIMIR_REPORT_HPP
#define CASIMIR_REPORT_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace casimir {

inline constexpr const char* engine_version = "0.1.0";

// Shortest representation that round-trips to the same double.
std::string format_double(double value);

class CsvDocument {
  public:
    void meta(const std::string& key, const std::string& value);
    void meta(const std::string& key, double value);
    void header(std::vector<std::string> columns);
    void row(const std::vector<std::string>& cells);
    void numeric_row(const std::vector<double>& cells);
    void write(std::ostream& os) const;

  private:
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<std::string> columns_;
    std::vector<std::string> rows_;
};

} // namespace casimir

#endif
