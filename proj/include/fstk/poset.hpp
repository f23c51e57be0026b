#pragma once

#include "fstk/chain_complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fstk {

// Finite strict partial order on {0..n-1}. Irreflexive, antisymmetric,
// transitive; `top`, when present, lies above every other element.
class FinitePoset {
public:
    FinitePoset() = default;
    // `strict_relations` may be any generating set; the transitive closure is
    // taken and the axioms checked.
    FinitePoset(std::size_t size,
                const std::vector<std::pair<std::size_t, std::size_t>>& strict_relations,
                std::optional<std::size_t> top = std::nullopt,
                std::vector<std::string> labels = {});

    std::size_t size() const { return n_; }
    bool less(std::size_t a, std::size_t b) const { return less_[a][b]; }
    bool leq(std::size_t a, std::size_t b) const { return a == b || less_[a][b]; }
    bool covers(std::size_t a, std::size_t b) const; // b covers a (a < b, nothing between)
    std::optional<std::size_t> top() const { return top_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(std::size_t i) const;

    std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;

    // Ranks r(p) = r(p, top): length of a maximal chain from p up to the top.
    // Empty optional if the poset is not graded or has no top.
    std::optional<std::vector<std::size_t>> grading() const;

private:
    std::size_t n_ = 0;
    std::vector<std::vector<bool>> less_;
    std::optional<std::size_t> top_;
    std::vector<std::string> labels_;
};

// Enumeration bounds for the lattice families (configuration constants).
struct PosetBounds {
    std::size_t boolean_max = 12;
    std::size_t partition_max = 8;
    std::size_t subspace_max_n = 4;
};
PosetBounds& poset_bounds();

// Subsets of [n] ordered by inclusion, indexed by binary value; top = [n].
FinitePoset boolean_lattice(std::size_t n);

// Subspaces of F_q^n (q in {2,3,4,5}) ordered by containment, enumerated by
// canonical reduced-row-echelon representatives; top = whole space.
FinitePoset subspace_lattice(std::size_t q, std::size_t n);

// Set partitions of [n]. p <= q iff every block of q is contained in a block
// of p; top = discrete partition, bottom = indiscrete. Canonical enumeration:
// blocks sorted by minimum, partitions ordered lexicographically by
// block-assignment (restricted growth) vector.
FinitePoset partition_lattice(std::size_t n);

// The canonical partitions behind partition_lattice's indexing: element i is
// partitions[i], each block sorted, blocks sorted by minimum (0-based).
std::vector<std::vector<std::vector<std::size_t>>> partition_lattice_blocks(std::size_t n);

// Componentwise order on tuples; index encoding is mixed radix with the first
// factor most significant: idx = ((x1*n2)+x2)*n3 + ...
FinitePoset product_poset(const std::vector<FinitePoset>& factors);
std::vector<std::size_t> product_decode(const std::vector<FinitePoset>& factors, std::size_t idx);
std::size_t product_encode(const std::vector<FinitePoset>& factors,
                           const std::vector<std::size_t>& tuple);

// Integer polynomials in t, coefficients by degree, trailing zeros trimmed.
using IntPolynomial = std::vector<long>;
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_trim(IntPolynomial p);
std::string poly_str(const IntPolynomial& p);

// Simplicial chain complex of the pair (N[x,1̂], Z_{[x,1̂]}): degree s is
// spanned by the chains x = q_s < ... < q_0 = 1̂ containing both endpoints;
// the differential drops interior elements only. For x = 1̂ the complex is Q
// in degree 0.
RationalChainComplex interval_pair_complex(const FinitePoset& p, std::size_t x);

// Euler characteristic of interval_pair_complex.
long mobius(const FinitePoset& p, std::size_t x);
// Classical recursion mu(x,1) = -sum_{x<y<=1} mu(y,1); independent oracle.
long mobius_recursive(const FinitePoset& p, std::size_t x);

IntPolynomial whitney_polynomial(const FinitePoset& p);

bool is_upper_cm(const FinitePoset& p);

} // namespace fstk
