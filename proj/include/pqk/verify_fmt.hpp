#pragma once

// Deterministic scalar formatting for reports: exact scalars as "p/q" /
// "a+b*sqrt(d)", floats as shortest round-trip decimals.

#include "pqk/scalar.hpp"

#include <json.hpp>

#include <string>

namespace pqk {

inline std::string fmt_decimal(double v)
{
    return nlohmann::ordered_json(v).dump();
}

inline std::string fmt_scalar(const Rational& v) { return to_string(v); }
inline std::string fmt_scalar(const QRational& v) { return to_string(v); }
inline std::string fmt_scalar(double v) { return fmt_decimal(v); }

}  // namespace pqk
