#include "fstk/chain_complex.hpp"

#include <stdexcept>

namespace fstk {

RationalChainComplex::RationalChainComplex(std::vector<std::size_t> dims,
                                           std::vector<RatMatrix> boundaries)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    validate();
}

const RatMatrix& RationalChainComplex::boundary(std::size_t s) const {
    if (s == 0 || s > top_degree())
        throw std::out_of_range("RationalChainComplex::boundary");
    return boundaries_[s - 1];
}

void RationalChainComplex::validate() const {
    if (dims_.empty()) {
        if (!boundaries_.empty()) throw std::runtime_error("complex: stray boundaries");
        return;
    }
    if (boundaries_.size() + 1 != dims_.size())
        throw std::runtime_error("complex: boundary count mismatch");
    for (std::size_t s = 1; s < dims_.size(); ++s) {
        const RatMatrix& b = boundaries_[s - 1];
        if (b.rows() != dims_[s - 1] || b.cols() != dims_[s])
            throw std::runtime_error("complex: boundary shape mismatch");
        if (s >= 2 && !boundaries_[s - 2].mul(b).is_zero())
            throw std::runtime_error("complex: d∘d != 0");
    }
}

std::vector<std::size_t> RationalChainComplex::homology_dims() const {
    std::vector<std::size_t> h(dims_.size(), 0);
    std::vector<std::size_t> ranks(dims_.size() + 1, 0);
    for (std::size_t s = 1; s < dims_.size(); ++s) ranks[s] = rank(boundaries_[s - 1]);
    for (std::size_t s = 0; s < dims_.size(); ++s)
        h[s] = dims_[s] - ranks[s] - ranks[s + 1];
    return h;
}

bool RationalChainComplex::is_exact(std::size_t lo, std::size_t hi) const {
    std::vector<std::size_t> h = homology_dims();
    for (std::size_t s = lo; s <= hi && s < h.size(); ++s)
        if (h[s] != 0) return false;
    return true;
}

bool RationalChainComplex::is_exact() const {
    return dims_.empty() || is_exact(0, dims_.size() - 1);
}

long RationalChainComplex::euler_characteristic() const {
    long chi = 0;
    for (std::size_t s = 0; s < dims_.size(); ++s)
        chi += (s % 2 == 0) ? static_cast<long>(dims_[s]) : -static_cast<long>(dims_[s]);
    return chi;
}

} // namespace fstk
