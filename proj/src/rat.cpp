#include "fstk/rat.hpp"

#include <stdexcept>

namespace fstk {

Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::runtime_error("bad rational literal: " + s);
    if (r.get_den() == 0)
        throw std::runtime_error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    return r.get_str();
}

} // namespace fstk
