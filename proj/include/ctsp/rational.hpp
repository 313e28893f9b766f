#pragma once

#include <gmpxx.h>
#include <string>

namespace ctsp {

// Exact rational scalar used for matching weights, contributions and all
// bound checks. Nothing in the library ever rounds through floating point.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "p/q" (or "p" when the denominator is 1), the format used in JSON and CSV.
inline std::string rat_str(const Rat& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

inline Rat parse_rat(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

} // namespace ctsp
