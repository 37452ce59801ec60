#include "casimir/units.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

namespace {

struct Suffix {
    const char* text;
    double factor;
};

// longest suffixes first so "mm" beats "m"
constexpr Suffix kLength[] = {{"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}, {"m", 1.0}};
constexpr Suffix kTemperature[] = {{"K", 1.0}};
constexpr Suffix kTime[] = {{"fs", 1e-15}, {"s", 1.0}};
constexpr Suffix kEnergy[] = {{"meV", 1e-3}, {"eV", 1.0}};
constexpr Suffix kFrequency[] = {{"THz", 1e12}, {"Hz", 1.0}};

} // namespace

double parse_quantity(std::string_view text, Quantity kind) {
    // trim whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty()) throw parse_error("empty quantity");

    double number = 0.0;
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, number);
    if (ec != std::errc{} || ptr == begin)
        throw parse_error("cannot parse number in '" + std::string(text) + "'");

    std::string_view unit(ptr, static_cast<size_t>(end - ptr));
    while (!unit.empty() && std::isspace(static_cast<unsigned char>(unit.front())))
        unit.remove_prefix(1);
    if (unit.empty())
        throw parse_error("missing unit in '" + std::string(text) +
                          "' (bare numbers are not accepted)");

    const Suffix* table = nullptr;
    size_t count = 0;
    switch (kind) {
    case Quantity::Length: table = kLength; count = std::size(kLength); break;
    case Quantity::Temperature: table = kTemperature; count = std::size(kTemperature); break;
    case Quantity::Time: table = kTime; count = std::size(kTime); break;
    case Quantity::PlasmaEnergy: table = kEnergy; count = std::size(kEnergy); break;
    case Quantity::Frequency: table = kFrequency; count = std::size(kFrequency); break;
    }
    for (size_t i = 0; i < count; ++i) {
        if (unit == table[i].text) {
            const double si = number * table[i].factor;
            if (kind == Quantity::PlasmaEnergy)
                return si * constants::eV / constants::hbar;
            return si;
        }
    }
    throw parse_error("unknown unit '" + std::string(unit) + "' in '" +
                      std::string(text) + "'");
}

} // namespace casimir
