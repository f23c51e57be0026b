#include "fstk/charspace.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fstk {

long ExpProfile::size() const {
    long s = 0;
    for (std::size_t i = 0; i < mult.size(); ++i) s += static_cast<long>(i + 1) * mult[i];
    return s;
}

long ExpProfile::shift(long n) const {
    long s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) s += d * a(d);
    return s;
}

std::vector<long> c_coeffs(const ExpProfile& a, long max_m) {
    std::vector<long> c(max_m + 1, 0);
    c[0] = 1;
    for (std::size_t i = 0; i < a.mult.size(); ++i) {
        long step = static_cast<long>(i + 1);
        for (long rep = 0; rep < a.mult[i]; ++rep)
            for (long j = max_m; j >= step; --j) c[j] -= c[j - step];
    }
    return c;
}

long g_B(const std::vector<long>& b, long n) {
    if (n < 0) return 0;
    std::vector<long> g(n + 1, 0);
    g[0] = 1;
    for (std::size_t i = 0; i < b.size(); ++i) {
        long step = static_cast<long>(i + 1);
        for (long rep = 0; rep < b[i]; ++rep)
            for (long j = step; j <= n; ++j) g[j] += g[j - step]; // 1/(1-t^step)
    }
    return g[n];
}

SymFunc u_elem(const ExpProfile& a, long n, long trunc) {
    SymFunc out(trunc);
    out.add_term({n}, 1);
    out.add_term({}, -a.shift(n));
    return out;
}

SymFunc u_monomial(const ExpProfile& a, const Partition& lam, long trunc) {
    SymFunc out = p_basis({}, trunc);
    for (long part : lam) out = out * u_elem(a, part, trunc);
    return out;
}

SymFunc exp_profile_elem(const ExpProfile& a, long trunc) {
    SymFunc arg(trunc);
    for (std::size_t i = 0; i < a.mult.size(); ++i)
        if (a.mult[i] != 0 && static_cast<long>(i + 1) <= trunc)
            arg = arg + y_elem(static_cast<long>(i + 1), trunc).scaled(a.mult[i]);
    return exp_truncated(arg);
}

SymFunc E_elem(const ExpProfile& a, long m, long trunc) {
    SymFunc out(trunc);
    if (m == 0) return out;
    out = e_basis({m}, trunc).scaled(m % 2 ? 1 : -1); // -(-1)^m e_m
    out.add_term({}, c_coeffs(a, m)[m]);
    return out;
}

SymFunc E_monomial(const ExpProfile& a, const Partition& lam, long trunc) {
    SymFunc out = p_basis({}, trunc);
    for (long part : lam) out = out * E_elem(a, part, trunc);
    return out;
}

Rat u_expansion_coeff(const SymFunc& f, const Partition& lam, const ExpProfile& a) {
    SymFunc u = u_monomial(a, lam, f.trunc());
    return hall_pair(u, f) / z_of(lam);
}

SymFunc eps_k(const SymFunc& f, long k) {
    SymFunc out(f.trunc());
    for (const auto& [p, c] : f.coeffs())
        if (p.empty() || p.front() <= k) out.add_term(p, c);
    return out;
}

// Homogeneous elements can be re-tagged upward term by term.
static SymFunc lift_to(const SymFunc& f, long trunc) {
    SymFunc out(trunc);
    for (const auto& [p, c] : f.coeffs()) out.add_term(p, c);
    return out;
}

// Newton in k variables: for n > k, p_n = e_1 p_{n-1} - ... +- e_k p_{n-k}.
static SymFunc reduce_part(long k, long n) {
    SymFunc out(n);
    if (n <= k) {
        out.add_term(n ? Partition{n} : Partition{}, 1);
        return out;
    }
    for (long i = 1; i <= k; ++i) {
        SymFunc prod = e_basis({i}, n) * lift_to(reduce_part(k, n - i), n);
        if (i % 2 == 0) prod = prod.scaled(-1);
        out = out + prod;
    }
    return out;
}

SymFunc reduce_mod_e(long k, const Partition& lam, long trunc) {
    SymFunc out = p_basis({}, trunc);
    for (long part : lam) {
        SymFunc reduced = reduce_part(k, part);
        SymFunc red(trunc);
        for (const auto& [p, c] : reduced.coeffs()) red.add_term(p, c);
        out = out * red;
    }
    return out;
}

SymFunc pi_k(const SymFunc& f, long k) {
    SymFunc out(f.trunc());
    for (long d = 0; d <= f.trunc(); ++d)
        for (const Partition& lam : partitions_of(d)) {
            SymFunc red = reduce_mod_e(k, lam, d);
            Rat c = 0;
            for (const auto& [mu, rc] : red.coeffs()) c += rc * z_of(mu) * f.coeff(mu);
            out.add_term(lam, c / z_of(lam));
        }
    return out;
}

bool in_F_leq_k(const SymFunc& f, long k) {
    for (long d = 0; d <= f.trunc(); ++d)
        for (const Partition& lam : partitions_of(d)) {
            if (static_cast<long>(lam.size()) <= k) continue;
            Rat c = 0;
            for (const Partition& mu : partitions_of(d)) {
                Rat fm = f.coeff(mu);
                if (fm != 0) c += Rat(sym_character(lam, mu)) * fm;
            }
            if (c != 0) return false;
        }
    return true;
}

bool in_V_Ar(const SymFunc& f, const ExpProfile& a, long r) {
    for (long d = 0; d <= f.trunc(); ++d)
        for (const Partition& lam : partitions_of(d)) {
            if (static_cast<long>(lam.size()) < r) continue;
            if (u_expansion_coeff(f, lam, a) != 0) return false;
        }
    return true;
}

bool type_equations_check(const SymFunc& f, const std::vector<long>& j, long slack) {
    std::function<bool(std::size_t, const SymFunc&)> rec = [&](std::size_t t, const SymFunc& g) {
        if (t == j.size()) return g.is_zero();
        for (long l = j[t]; l <= j[t] + slack; ++l) {
            if (l > g.trunc()) continue; // nothing left to test at this depth
            for (const Partition& lam : partitions_of(l))
                if (!rec(t + 1, apply_binom_D(lam, g))) return false;
        }
        return true;
    };
    return rec(0, f);
}

bool in_part_rk(const Partition& p, long r, long k) {
    if (static_cast<long>(p.size()) >= r) return false;
    for (long part : p)
        if (part > k) return false;
    return true;
}

std::vector<Partition> part_rk(long r, long k) {
    std::vector<Partition> out;
    for (long d = 0; d <= k * (r - 1); ++d)
        for (const Partition& p : partitions_of(d))
            if (in_part_rk(p, r, k)) out.push_back(p);
    return out;
}

Rat H_nu(const Partition& nu, const ExpProfile& a, long n) {
    if (nu.empty()) throw std::runtime_error("H_nu: nu must be nonempty");
    long rank = static_cast<long>(nu.size());
    std::vector<long> b(a.mult.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = rank * a.mult[i];
    Rat fact = 1;
    for (long i = 2; i < rank; ++i) fact *= i;
    return Rat(n) * Rat(g_B(b, n - partition_size(nu))) * fact / mult_factorial(nu);
}

namespace {

// Multiplicity-vector view of a partition with parts <= k.
std::vector<long> to_mult(const Partition& p, long k) {
    std::vector<long> m(k, 0);
    for (long part : p) ++m[part - 1];
    return m;
}

Partition from_mult(const std::vector<long>& m) {
    Partition p;
    for (long i = static_cast<long>(m.size()); i >= 1; --i)
        for (long rep = 0; rep < m[i - 1]; ++rep) p.push_back(i);
    return p;
}

// Sum over ordered splittings of `rem` into `slots` nonzero multiplicity
// vectors of prod_i H_{nu_i}(lam_i).
Rat split_sum(std::vector<long>& rem, const Partition& lam, std::size_t slot,
              const ExpProfile& a) {
    if (slot == lam.size()) {
        for (long v : rem)
            if (v != 0) return 0;
        return 1;
    }
    // Enumerate nonzero sub-vectors of rem.
    Rat total = 0;
    std::vector<long> sub(rem.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == rem.size()) {
            bool nonzero = false;
            for (long v : sub)
                if (v) nonzero = true;
            if (!nonzero) return;
            for (std::size_t t = 0; t < rem.size(); ++t) rem[t] -= sub[t];
            Rat tail = split_sum(rem, lam, slot + 1, a);
            for (std::size_t t = 0; t < rem.size(); ++t) rem[t] += sub[t];
            if (tail != 0) total += H_nu(from_mult(sub), a, lam[slot]) * tail;
            return;
        }
        for (long v = 0; v <= rem[i]; ++v) {
            sub[i] = v;
            rec(i + 1);
        }
        sub[i] = 0;
    };
    rec(0);
    return total;
}

} // namespace

SymFunc L_nu(const Partition& nu, const ExpProfile& a, long r, long k, long trunc) {
    if (!in_part_rk(nu, r, k)) throw std::runtime_error("L_nu: nu outside Part(r,k)");
    if (a.size() > k) throw std::runtime_error("L_nu: |A| exceeds k");
    long rank = static_cast<long>(nu.size());
    SymFunc series(trunc);
    series.add_term({}, nu.empty() ? 1 : 0);
    std::vector<long> m = to_mult(nu, k);
    for (long d = 1; d <= trunc; ++d)
        for (const Partition& lam : partitions_of(d)) {
            if (static_cast<long>(lam.size()) > rank) continue;
            Rat c = split_sum(m, lam, 0, a);
            if (c != 0) series.add_term(lam, c / z_of(lam));
        }
    return exp_profile_elem(a, trunc) * series;
}

UQuotient::UQuotient(const ExpProfile& a, long r, long k) : a_(a), r_(r), k_(k) {}

UQuotient::Elem UQuotient::mul(const Elem& x, const Elem& y) const {
    Elem out;
    for (const auto& [p, c] : x)
        for (const auto& [q, d] : y) {
            Partition merged = p;
            merged.insert(merged.end(), q.begin(), q.end());
            if (static_cast<long>(merged.size()) >= r_) continue;
            std::sort(merged.begin(), merged.end(), std::greater<>());
            auto [it, fresh] = out.emplace(merged, c * d);
            if (!fresh) it->second += c * d;
            if (it->second == 0) out.erase(it);
        }
    return out;
}

const UQuotient::Elem& UQuotient::p_single(long n) const {
    auto it = p_cache_.find(n);
    if (it != p_cache_.end()) return it->second;
    Elem out;
    if (n == 0) {
        out.emplace(Partition{}, 1);
    } else if (n <= k_) {
        out.emplace(Partition{n}, 1);
        if (a_.shift(n) != 0) out.emplace(Partition{}, a_.shift(n));
    } else {
        SymFunc reduced = reduce_part(k_, n);
        for (const auto& [mu, c] : reduced.coeffs()) {
            Elem term;
            term.emplace(Partition{}, c);
            for (long part : mu) term = mul(term, p_single(part));
            for (const auto& [key, v] : term) {
                auto [oit, fresh] = out.emplace(key, v);
                if (!fresh) oit->second += v;
                if (oit->second == 0) out.erase(oit);
            }
        }
    }
    return p_cache_.emplace(n, std::move(out)).first->second;
}

UQuotient::Elem UQuotient::image_p(const Partition& lam) const {
    Elem out;
    out.emplace(Partition{}, 1);
    for (long part : lam) out = mul(out, p_single(part));
    return out;
}

UQuotient::Elem UQuotient::image(const SymFunc& f) const {
    Elem out;
    for (const auto& [lam, c] : f.coeffs()) {
        Elem term = image_p(lam);
        for (const auto& [key, v] : term) {
            auto [it, fresh] = out.emplace(key, c * v);
            if (!fresh) it->second += c * v;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

UQuotient::Elem UQuotient::image_u(long n) const {
    Elem out = p_single(n);
    long s = a_.shift(n);
    if (s != 0) {
        auto [it, fresh] = out.emplace(Partition{}, Rat(-s));
        if (!fresh) it->second -= s;
        if (it->second == 0) out.erase(it);
    }
    return out;
}

UQuotient::Elem UQuotient::image_E(long m) const {
    if (m == 0) return {};
    return image(E_elem(a_, m, m));
}

Rat class_fn_eval(const ClassFnSpec& s, const Partition& mu) {
    long max_n = 0;
    for (long x : s.nu) max_n = std::max(max_n, x);
    for (long x : mu) max_n = std::max(max_n, x);
    Rat out = 1;
    for (long n = 1; n <= max_n; ++n) {
        long xn = static_cast<long>(std::count(mu.begin(), mu.end(), n));
        long mn = static_cast<long>(std::count(s.nu.begin(), s.nu.end(), n));
        if (xn < mn) return 0;
        long binom = 1;
        for (long i = 0; i < mn; ++i) binom = binom * (xn - i) / (i + 1);
        out *= binom;
        long base = s.a.shift(n);
        long expo = xn - mn;
        if (expo > 0) {
            if (base == 0) return 0;
            for (long i = 0; i < expo; ++i) out *= base;
        }
        // 0^0 = 1: nothing to do.
    }
    return out;
}

bool translation_check(const ClassFnSpec& s, long max_n) {
    if (partition_size(s.nu) > max_n) throw std::runtime_error("translation_check: nu too large");
    SymFunc g = p_basis(s.nu, max_n).scaled(1 / z_of(s.nu)) * exp_profile_elem(s.a, max_n);
    for (long n = 0; n <= max_n; ++n)
        for (const Partition& mu : partitions_of(n))
            if (z_of(mu) * g.coeff(mu) != class_fn_eval(s, mu)) return false;
    return true;
}

std::vector<Rat> multiplicity_series(const SymFunc& f, const Partition& lam, long max_n) {
    long start = lam.empty() ? 0 : lam.front();
    std::vector<Rat> out;
    for (long n = start; n <= max_n; ++n) {
        long d = n + partition_size(lam);
        if (d > f.trunc()) throw std::runtime_error("multiplicity_series: truncation exceeded");
        Partition row;
        if (n > 0) row.push_back(n);
        row.insert(row.end(), lam.begin(), lam.end());
        Rat c = 0;
        for (const Partition& mu : partitions_of(d)) {
            Rat fm = f.coeff(mu);
            if (fm != 0) c += Rat(sym_character(row, mu)) * fm;
        }
        out.push_back(c);
    }
    return out;
}

std::optional<RationalFit> rational_fit(const std::vector<Rat>& seq, long denom_degree,
                                        long root_orders) {
    long len = static_cast<long>(seq.size());
    if (len < 2 * denom_degree + 4) throw std::runtime_error("rational_fit: sequence too short");
    // Candidate exponent vectors by ascending total degree, then lex.
    std::vector<std::vector<long>> cands;
    std::vector<long> e(root_orders, 0);
    std::function<void(long, long)> gen = [&](long i, long left) {
        if (i == root_orders) {
            cands.push_back(e);
            return;
        }
        for (long v = 0; v * (i + 1) <= left; ++v) {
            e[i] = v;
            gen(i + 1, left - v * (i + 1));
        }
        e[i] = 0;
    };
    gen(0, denom_degree);
    std::stable_sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) {
        long dx = 0, dy = 0;
        for (std::size_t i = 0; i < x.size(); ++i) dx += static_cast<long>(i + 1) * x[i];
        for (std::size_t i = 0; i < y.size(); ++i) dy += static_cast<long>(i + 1) * y[i];
        if (dx != dy) return dx < dy;
        return x < y;
    });
    long cut = (len + 1) / 2;
    for (const auto& cand : cands) {
        IntPolynomial denom{1};
        for (std::size_t i = 0; i < cand.size(); ++i) {
            IntPolynomial factor(i + 2, 0);
            factor[0] = 1;
            factor[i + 1] = -1;
            for (long rep = 0; rep < cand[i]; ++rep) denom = poly_mul(denom, factor);
        }
        std::vector<Rat> num(len, Rat(0));
        bool ok = true;
        for (long j = 0; j < len; ++j) {
            Rat c = 0;
            for (std::size_t i = 0; i < denom.size() && static_cast<long>(i) <= j; ++i)
                c += Rat(denom[i]) * seq[j - static_cast<long>(i)];
            num[j] = c;
            if (j >= cut && c != 0) { ok = false; break; }
        }
        if (!ok) continue;
        while (!num.empty() && num.back() == 0) num.pop_back();
        return RationalFit{cand, denom, std::move(num)};
    }
    return std::nullopt;
}

} // namespace fstk
