#include "pile/io/units.hpp"

#include <array>
#include <charconv>
#include <cstring>
#include <stdexcept>

namespace pile::io {

namespace {

struct UnitEntry {
    const char* token;
    double factor;
    Dimension dimension;
};

constexpr std::array<UnitEntry, 10> kUnits = {{
    {"m", 1.0, Dimension::Length},
    {"mm", 1e-3, Dimension::Length},
    {"MPa/m", 1e6, Dimension::StiffnessPerLength},
    {"Pa/m", 1.0, Dimension::StiffnessPerLength},
    {"GPa", 1e9, Dimension::Modulus},
    {"Pa", 1.0, Dimension::Modulus},
    {"MN", 1e6, Dimension::Force},
    {"kN", 1e3, Dimension::Force},
    {"N", 1.0, Dimension::Force},
    {"degC", 1.0, Dimension::Temperature},
}};

const UnitEntry* find_unit(const std::string& token) {
    // Thermal expansion has no compact SI prefix family; 1/degC is the one
    // accepted spelling.
    static constexpr UnitEntry kExpansion = {"1/degC", 1.0, Dimension::Expansion};
    if (token == kExpansion.token) return &kExpansion;
    for (const auto& u : kUnits) {
        if (token == u.token) return &u;
    }
    return nullptr;
}

}  // namespace

bool is_known_unit(const std::string& token) { return find_unit(token) != nullptr; }

double unit_factor(const std::string& token) {
    const UnitEntry* u = find_unit(token);
    if (!u) throw std::invalid_argument("unknown unit token '" + token + "'");
    return u->factor;
}

Dimension unit_dimension(const std::string& token) {
    const UnitEntry* u = find_unit(token);
    if (!u) throw std::invalid_argument("unknown unit token '" + token + "'");
    return u->dimension;
}

const char* dimension_name(Dimension d) {
    switch (d) {
        case Dimension::Length: return "length";
        case Dimension::Modulus: return "pressure";
        case Dimension::StiffnessPerLength: return "stiffness per length";
        case Dimension::Force: return "force";
        case Dimension::Temperature: return "temperature";
        case Dimension::Expansion: return "thermal expansion";
    }
    return "?";
}

Quantity make_quantity(double value, const std::string& unit) {
    Quantity q;
    q.value = value;
    q.unit = unit;
    q.si = value * unit_factor(unit);
    return q;
}

std::string format_double(double v) {
    if (v == 0.0) return "0";  // avoid "-0" in output
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

}  // namespace pile::io
