#pragma once

#include "fstk/matrix.hpp"

#include <vector>

namespace fstk {

// Chain complex of Q-vector spaces: boundary(s) maps degree s to degree s-1
// and has shape dims[s-1] x dims[s]. boundary(0) does not exist.
class RationalChainComplex {
public:
    RationalChainComplex() = default;
    RationalChainComplex(std::vector<std::size_t> dims,
                         std::vector<RatMatrix> boundaries);

    std::size_t top_degree() const { return dims_.empty() ? 0 : dims_.size() - 1; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(std::size_t s) const { return s < dims_.size() ? dims_[s] : 0; }
    const RatMatrix& boundary(std::size_t s) const; // 1 <= s <= top_degree

    // Throws std::runtime_error if shapes are wrong or d∘d != 0.
    void validate() const;

    std::vector<std::size_t> homology_dims() const;
    bool is_exact(std::size_t lo, std::size_t hi) const;
    bool is_exact() const;
    long euler_characteristic() const;

private:
    std::vector<std::size_t> dims_;
    std::vector<RatMatrix> boundaries_; // boundaries_[s-1] is boundary(s)
};

} // namespace fstk
