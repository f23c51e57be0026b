#pragma once

#include "fstk/posetrep.hpp"
#include "fstk/symfunc.hpp"

#include <map>

namespace fstk {

// Surjection [n] -> [d] encoded as its word of letters 1..d.
using SurjWord = std::vector<int>;

// All surjective d-ary words of length n, lexicographically.
std::vector<SurjWord> enumerate_surjections(long n, long d);

// Precomposition: f maps positions of the result to positions of w (0-based).
SurjWord compose_word(const SurjWord& w, const std::vector<int>& f);

// A permutation of [n] with the given cycle type, 0-based, as consecutive
// cycles.
std::vector<int> cycle_type_rep(const Partition& lam, long n);

struct RelationTerm {
    std::size_t gen;
    SurjWord word; // surjection from the relation degree onto generator_degrees[gen]
    Rat coef;
};

struct FsopRelation {
    long degree;
    std::vector<RelationTerm> terms;
};

// Finite presentation of a module over the category of finite sets and
// surjections (contravariant): free generators in given degrees, modulo the
// closure of the listed relations under precomposition.
struct FsopPresentation {
    std::vector<long> generator_degrees;
    std::vector<FsopRelation> relations;

    void validate() const;
};

FsopPresentation free_presentation(long d);

struct DegreeEvaluation {
    long degree = 0;
    std::size_t free_dim = 0;
    std::vector<std::pair<std::size_t, SurjWord>> basis; // free basis, by generator then word
    std::map<std::pair<std::size_t, SurjWord>, std::size_t> index;
    Echelon relation_echelon;                // rows span the relation subspace
    std::vector<std::size_t> quotient_cols;  // non-pivot columns = quotient basis
    std::size_t quotient_dim = 0;
};

class FsopModule {
  public:
    // degree_bound < 0 picks the default: 8 when every generator degree is at
    // most 2, else 6.
    explicit FsopModule(FsopPresentation pres, long degree_bound = -1);

    const FsopPresentation& presentation() const { return pres_; }
    long degree_bound() const { return bound_; }
    const DegreeEvaluation& at(long n) const;
    std::size_t dim_at(long n) const { return at(n).quotient_dim; }
    std::vector<std::size_t> hilbert_dims(long max_n) const;

    // Matrix of the module map M_n -> M_m induced by the surjection
    // f: [m] -> [n] (0-based images), acting on words by precomposition.
    RatMatrix induced_map(long n, long m, const std::vector<int>& f) const;

    // Trace of the permutation action on M_n; perm is 0-based.
    Rat trace_of(long n, const std::vector<int>& perm) const;

  private:
    FsopPresentation pres_;
    long bound_;
    mutable std::map<long, DegreeEvaluation> cache_;
};

// True iff all coefficients of denom(t) * sum dims[n] t^n vanish in degrees
// [from_degree, dims.size()-1]. A finite-window check only.
bool verify_rational_tail(const std::vector<std::size_t>& dims, const IntPolynomial& denom,
                          std::size_t from_degree);

// Bar complex of the partition-lattice representation p -> M_{[n] + blocks(p)}.
RationalChainComplex bd_complex_at(const FsopModule& m, long d, long n);
// Koszul subcomplex of the same representation.
RationalChainComplex kd_complex_at(const FsopModule& m, long d, long n);
// Total complex of the iterated construction over P(d_1) x ... x P(d_r).
RationalChainComplex iterated_bd_at(const FsopModule& m, const std::vector<long>& ds, long n);

// Bounded witness for "type < J": iterated complexes exact for all
// l_t in [j_t, j_t + slack] and n in [n_lo, n_hi].
bool check_type_less(const FsopModule& m, const std::vector<long>& j, long n_lo, long n_hi,
                     long slack);

// Trace of one representative per cycle type of S_n on M_n.
std::map<Partition, Rat, PartitionLess> sn_character(const FsopModule& m, long n);

// sum_{n <= max_n} sum_{lam of n} tr(sigma_lam) p_lam / z_lam.
SymFunc frobenius_character(const FsopModule& m, long max_n);

// For each lam of d: the coefficient of p_lam (second factor) in the
// two-variable character of the complex B_d(M), as a SymFunc in the first
// factor truncated at max_n.
std::map<Partition, SymFunc, PartitionLess> character_of_bd(const FsopModule& m, long d,
                                                            long max_n);

std::string fsop_json(const FsopPresentation& p);
FsopPresentation fsop_from_json(const std::string& text);

} // namespace fstk
