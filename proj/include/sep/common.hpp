#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sep {

// Error taxonomy. The CLI maps these onto stable exit codes:
//   UsageError -> 2, InputError/FormatError -> 3, ConfigError/IncompatError -> 4.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class SizeError : public Error {
public:
    explicit SizeError(const std::string& msg) : Error(msg) {}
};

class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

class FormatError : public Error {
public:
    explicit FormatError(const std::string& msg) : Error(msg) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

class IncompatError : public Error {
public:
    explicit IncompatError(const std::string& msg) : Error(msg) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

class FixtureError : public Error {
public:
    explicit FixtureError(const std::string& msg) : Error(msg) {}
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

using cplx = std::complex<double>;

// dB values in reports are clamped to +-kDbClamp and flagged instead of
// propagating infinities.
inline constexpr double kDbClamp = 300.0;

struct DbValue {
    double db = 0.0;
    bool clamped = false;
};

inline double amplitude_db(double ratio) { return 20.0 * std::log10(ratio); }
inline double power_db(double ratio) { return 10.0 * std::log10(ratio); }
inline double db_to_amplitude(double db) { return std::pow(10.0, db / 20.0); }
inline double db_to_power(double db) { return std::pow(10.0, db / 10.0); }

inline bool all_finite(std::span<const double> x) {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

inline bool all_finite(std::span<const cplx> x) {
    for (const cplx& v : x)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

inline double energy(std::span<const double> x) {
    double e = 0.0;
    for (double v : x) e += v * v;
    return e;
}

inline double inner_product(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw SizeError("inner_product: length mismatch");
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Deterministic RNG helpers. std::uniform_real_distribution is
// implementation-defined, so reproducible streams map the raw engine output
// explicitly.
inline double uniform01(std::uint64_t raw) {
    return static_cast<double>(raw >> 11) * 0x1.0p-53;
}

// FNV-1a, used for weight-bundle topology fingerprints.
inline std::uint64_t fnv1a64(std::span<const unsigned char> data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : data) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s) {
    return fnv1a64(std::span<const unsigned char>(
        reinterpret_cast<const unsigned char*>(s.data()), s.size()));
}

// Log level comes from the SEP_RT_LOG environment variable
// (error|warn|info|debug); default warn.
enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

LogLevel log_level();
void log_message(LogLevel level, const std::string& msg);

inline void log_error(const std::string& msg) { log_message(LogLevel::Error, msg); }
inline void log_warn(const std::string& msg) { log_message(LogLevel::Warn, msg); }
inline void log_info(const std::string& msg) { log_message(LogLevel::Info, msg); }
inline void log_debug(const std::string& msg) { log_message(LogLevel::Debug, msg); }

}  // namespace sep
