#pragma once

#include <string>

namespace pile::io {

// Physical dimension classes accepted by the spec file.
enum class Dimension { Length, Modulus, StiffnessPerLength, Force, Temperature, Expansion };

struct Quantity {
    double value = 0.0;     // as written in the input
    std::string unit;       // unit token as written
    double si = 0.0;        // converted to strict SI
};

// True when the token is one of the supported unit suffixes.
bool is_known_unit(const std::string& token);

// SI multiplier for a token; throws std::invalid_argument for unknown ones.
double unit_factor(const std::string& token);

// Dimension a token belongs to.
Dimension unit_dimension(const std::string& token);

const char* dimension_name(Dimension d);

Quantity make_quantity(double value, const std::string& unit);

// Formats a double with shortest round-trip representation (locale-free).
std::string format_double(double v);

}  // namespace pile::io
