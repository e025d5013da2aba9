#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace cqgen {

// Error taxonomy, mapped to CLI exit codes: validation -> 1, I/O -> 2, numeric -> 3.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// dB / linear conversions. Powers in Watts, levels in dBm unless suffixed otherwise.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

// Pluggable warning sink so library code stays silent under test harnesses.
using WarnHandler = std::function<void(const std::string&)>;
void set_warn_handler(WarnHandler handler);
void warn(const std::string& message);

}  // namespace cqgen
