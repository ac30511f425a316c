#ifndef DLN_RATIONAL_HPP
#define DLN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "dln/errors.hpp"

namespace dln {

// Exact rationals are GMP mpq_class throughout; this header only adds the
// text forms used by the CLI and the extended value lk can take.

// Renders reduced "num/den", omitting "/1".
std::string to_string(const mpq_class& r);

// Parses "num" or "num/den"; use extended_from_string when "inf" can occur.
mpq_class rational_from_string(const std::string& text);

// A linking number: a rational, or infinity when a branch curve is not
// rationally null-homologous.  Infinity carries no sign.
struct ExtendedRational {
    bool is_inf = false;
    mpq_class value;  // meaningful iff !is_inf

    ExtendedRational() = default;
    explicit ExtendedRational(mpq_class v) : is_inf(false), value(std::move(v)) {}
    static ExtendedRational infinity() {
        ExtendedRational e;
        e.is_inf = true;
        return e;
    }

    bool operator==(const ExtendedRational& o) const {
        if (is_inf != o.is_inf) return false;
        return is_inf || value == o.value;
    }
    // ascending, with inf sorted last
    bool operator<(const ExtendedRational& o) const {
        if (is_inf) return false;
        if (o.is_inf) return true;
        return value < o.value;
    }
};

std::string to_string(const ExtendedRational& v);
ExtendedRational extended_from_string(const std::string& text);

}  // namespace dln

#endif
