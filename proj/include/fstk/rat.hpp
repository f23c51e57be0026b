#pragma once

#include <gmpxx.h>
#include <string>

namespace fstk {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as we canonicalize after raw construction.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n", "-n", "n/d".
Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& r);

} // namespace fstk
