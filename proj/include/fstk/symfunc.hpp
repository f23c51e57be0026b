#pragma once

#include "fstk/rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace fstk {

// Weakly decreasing sequence of positive integers.
using Partition = std::vector<long>;

long partition_size(const Partition& p);
long partition_rank(const Partition& p);
// z = prod_i m_i! * i^{m_i} over the part values i with multiplicity m_i.
Rat z_of(const Partition& p);
// Sign of a permutation with this cycle type.
int sgn_of(const Partition& p);
// prod_i m_i! over part multiplicities.
Rat mult_factorial(const Partition& p);
std::vector<Partition> partitions_of(long n);
std::string partition_str(const Partition& p);

// Orders partitions by degree, then lexicographically on parts.
struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        long sa = partition_size(a), sb = partition_size(b);
        if (sa != sb) return sa < sb;
        return a < b;
    }
};

// Symmetric function truncated at degree N, stored in the power-sum basis.
class SymFunc {
  public:
    using Coeffs = std::map<Partition, Rat, PartitionLess>;

    explicit SymFunc(long trunc) : n_(trunc) {}
    SymFunc(long trunc, Coeffs c);

    long trunc() const { return n_; }
    const Coeffs& coeffs() const { return coeffs_; }
    Rat coeff(const Partition& p) const;
    void add_term(const Partition& p, const Rat& c);
    bool is_zero() const { return coeffs_.empty(); }

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const SymFunc& o) const;
    SymFunc scaled(const Rat& c) const;
    bool operator==(const SymFunc& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

    // Drop terms above new_trunc and re-tag. new_trunc must not exceed N.
    SymFunc retagged(long new_trunc) const;

    std::string str() const;

  private:
    long n_;
    Coeffs coeffs_;
};

SymFunc p_basis(const Partition& p, long trunc);
SymFunc e_basis(const Partition& p, long trunc);
SymFunc h_basis(const Partition& p, long trunc);
SymFunc s_basis(const Partition& p, long trunc);
// y_n = sum_{k >= 1} p_{nk}/k, truncated.
SymFunc y_elem(long n, long trunc);
SymFunc basis_element(char kind, const Partition& index, long trunc);

// Symmetric group character value chi^lam(mu) by Murnaghan-Nakayama.
long sym_character(const Partition& lam, const Partition& mu);

SymFunc exp_truncated(const SymFunc& f);
Rat hall_pair(const SymFunc& f, const SymFunc& g);
SymFunc apply_partial(long n, const SymFunc& f);
SymFunc apply_D(long n, const SymFunc& f);
SymFunc apply_binom_D(const Partition& lam, const SymFunc& f);
std::map<Partition, Rat, PartitionLess> schur_expansion(const SymFunc& f, long max_deg);

// Number-theoretic Mobius function.
long mobius_int(long n);

std::string symfunc_json(const SymFunc& f);
SymFunc symfunc_from_json(const std::string& text);

} // namespace fstk
