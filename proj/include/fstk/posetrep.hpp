#pragma once

#include "fstk/poset.hpp"

#include <functional>
#include <random>

namespace fstk {

// Upward-closed subset of a poset.
struct PosetIdeal {
    const FinitePoset* poset;
    std::vector<bool> members;

    void validate() const; // throws if not upward closed
};

PosetIdeal principal_ideal(const FinitePoset& p, std::size_t x);

// Functor P -> Vect_Q: dimension per element plus a matrix M_{pq}: M_p -> M_q
// for every comparable pair p <= q. Functoriality is asserted on construction.
class PosetRep {
public:
    PosetRep(const FinitePoset& poset, std::vector<std::size_t> dims,
             std::function<RatMatrix(std::size_t, std::size_t)> map_builder);

    const FinitePoset& poset() const { return *poset_; }
    std::size_t dim_at(std::size_t p) const { return dims_[p]; }
    // p <= q required.
    const RatMatrix& map_for(std::size_t p, std::size_t q) const;

private:
    const FinitePoset* poset_;
    std::vector<std::size_t> dims_;
    std::map<std::pair<std::size_t, std::size_t>, RatMatrix> maps_;
};

PosetRep ideal_rep(const PosetIdeal& ideal);
PosetRep constant_rep(const FinitePoset& p, std::size_t dim = 1);

// Random functorial representation: fix V = Q^D with a random vector v_x per
// element, put M_p = V / span{v_x : x <= p}, maps the projections.
PosetRep random_quotient_rep(const FinitePoset& p, std::size_t ambient_dim, std::mt19937& rng);

// Descending chains (p_1 > ... > p_s), all strictly below the top, in
// lexicographic order per length. Length 0 is the empty chain.
std::vector<std::vector<std::vector<std::size_t>>> descending_chains(const FinitePoset& p);

RationalChainComplex bar_complex(const PosetRep& m);

// Kernel subcomplex of the Bar complex (requires upper CM): degree s is
// spanned by the cover chains 1̂ > p_1 > ... > p_s with r(p_s) = s that are
// killed by the truncated face alternation; the differential is (-1)^s ∂_s in
// kernel coordinates. `assume_upper_cm` skips the certification (for posets
// already certified by the caller).
RationalChainComplex koszul_complex(const PosetRep& m, bool assume_upper_cm = false);

// Total complex of the iterated Bar construction over a product poset.
// `m_at` gives the module data of the product representation through the
// product index encoding of `factors`. Sign convention: the factor-t
// differential carries (-1)^(i_1+...+i_{t-1}).
RationalChainComplex multi_bar_complex(const std::vector<FinitePoset>& factors,
                                       const PosetRep& m);

// Prop "PSet": decompose an injective-transition set functor into ideals.
// f_sets[p] lists the fiber elements as opaque ids; transition(p, q, y) gives
// the image id of y under F_{pq} (p <= q). Returns one ideal per element of
// the top fiber, keyed in ascending id order.
std::vector<std::pair<long, PosetIdeal>> pset_decompose(
    const FinitePoset& p, const std::vector<std::vector<long>>& f_sets,
    const std::function<long(std::size_t, std::size_t, long)>& transition);

} // namespace fstk
