#pragma once

#include "fstk/poset.hpp"
#include "fstk/symfunc.hpp"

#include <optional>

namespace fstk {

// Exponential profile A = 1^{a_1} 2^{a_2} ..., stored as the multiplicity
// vector (a_1, a_2, ...).
struct ExpProfile {
    std::vector<long> mult;

    long a(long i) const {
        return (i >= 1 && i <= static_cast<long>(mult.size())) ? mult[i - 1] : 0;
    }
    long size() const; // |A| = sum i * a_i
    // s_n = sum_{d | n} d * a_d; the scalar shift in u_n = p_n - s_n.
    long shift(long n) const;
};

// Coefficients c_0..c_max of prod_i (1 - t^i)^{a_i}.
std::vector<long> c_coeffs(const ExpProfile& a, long max_m);

// Coefficient of t^n in prod_i (1 - t^i)^{-b_i}; B given as multiplicities.
long g_B(const std::vector<long>& b, long n);

SymFunc u_elem(const ExpProfile& a, long n, long trunc);
SymFunc u_monomial(const ExpProfile& a, const Partition& lam, long trunc);
// exp(sum_i a_i y_i), truncated.
SymFunc exp_profile_elem(const ExpProfile& a, long trunc);
// E_m = -(-1)^m e_m + c_m, with E_0 = 0.
SymFunc E_elem(const ExpProfile& a, long m, long trunc);
SymFunc E_monomial(const ExpProfile& a, const Partition& lam, long trunc);

// <u_lam / z_lam, f>.
Rat u_expansion_coeff(const SymFunc& f, const Partition& lam, const ExpProfile& a);

// Specialization p_i -> 0 for i > k.
SymFunc eps_k(const SymFunc& f, long k);

// p_lam modulo (e_{k+1}, e_{k+2}, ...), as a polynomial in p_1..p_k.
SymFunc reduce_mod_e(long k, const Partition& lam, long trunc);

// The unique element of F_{<=k} with the same eps_k image as f.
SymFunc pi_k(const SymFunc& f, long k);

// Schur support has at most k rows, up to truncation.
bool in_F_leq_k(const SymFunc& f, long k);

// Membership in V_{A,r} = exp(sum a_i y_i) (Lambda)^pow_{<r}, tested through
// the u-coefficient criterion: all coefficients at rank >= r vanish.
bool in_V_Ar(const SymFunc& f, const ExpProfile& a, long r);

// All products (D choose lam_1)...(D choose lam_r) with j_t <= |lam_t| <=
// j_t + slack annihilate f (up to the surviving truncation).
bool type_equations_check(const SymFunc& f, const std::vector<long>& j, long slack);

// Part(r,k): partitions with parts <= k and fewer than r parts.
bool in_part_rk(const Partition& p, long r, long k);
std::vector<Partition> part_rk(long r, long k);

// H_nu(n) = n * g_{rank(nu) A}(n - |nu|) * (rank(nu)-1)! / nu!; |nu| > 0.
Rat H_nu(const Partition& nu, const ExpProfile& a, long n);

// Dual basis element of V_{A,r} /\ F_{<=k} against {f(E_nu)}.
SymFunc L_nu(const Partition& nu, const ExpProfile& a, long r, long k, long trunc);

// The quotient ring R = Lambda / ((u)^r + (e_{k+1}, ...)), modeled as
// Q[u_1..u_k]/(u_1..u_k)^r with basis the u-monomials in Part(r,k).
class UQuotient {
  public:
    using Elem = std::map<Partition, Rat, PartitionLess>;

    UQuotient(const ExpProfile& a, long r, long k);

    Elem mul(const Elem& x, const Elem& y) const;
    Elem image_p(const Partition& lam) const;  // f(p_lam)
    Elem image(const SymFunc& f) const;        // finite support required
    Elem image_u(long n) const;
    Elem image_E(long m) const;

  private:
    const Elem& p_single(long n) const;

    ExpProfile a_;
    long r_, k_;
    mutable std::map<long, Elem> p_cache_;
};

struct ClassFnSpec {
    Partition nu;
    ExpProfile a;
};

// Evaluate (X choose nu) A^{X - nu} on a permutation of cycle type mu,
// with the 0^0 = 1 convention.
Rat class_fn_eval(const ClassFnSpec& s, const Partition& mu);

// <p_mu, (p_nu / z_nu) exp(sum a_i y_i)> agrees with class_fn_eval for all
// |mu| <= max_n.
bool translation_check(const ClassFnSpec& s, long max_n);

// Multiplicities of s_{(n, lam)} in f for n = max(lam_1, 0min)..max_n.
std::vector<Rat> multiplicity_series(const SymFunc& f, const Partition& lam, long max_n);

struct RationalFit {
    std::vector<long> exponents; // denominator = prod_i (1 - t^i)^{e_i}
    IntPolynomial denominator;
    std::vector<Rat> numerator;
};

// Smallest denominator prod (1-t^i)^{e_i}, i <= root_orders, of total degree
// <= denom_degree whose product with the series has a vanishing tail.
std::optional<RationalFit> rational_fit(const std::vector<Rat>& seq, long denom_degree,
                                        long root_orders);

} // namespace fstk
