#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mzv {

// Exact rational scalar used throughout the symbolic side of the library.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

// Accepts "p", "-p", "p/q"; normalizes sign and gcd.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) {
        throw std::invalid_argument("not a rational literal: '" + s + "'");
    }
    r.canonicalize();
    return r;
}

inline double rat_to_double(const Rat& r) {
    return r.get_d();
}

}  // namespace mzv
