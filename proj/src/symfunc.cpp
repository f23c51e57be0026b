#include "fstk/symfunc.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fstk {

long partition_size(const Partition& p) {
    long s = 0;
    for (long x : p) s += x;
    return s;
}

long partition_rank(const Partition& p) { return static_cast<long>(p.size()); }

static std::map<long, long> multiplicities(const Partition& p) {
    std::map<long, long> m;
    for (long x : p) ++m[x];
    return m;
}

Rat z_of(const Partition& p) {
    Rat z = 1;
    for (auto [i, m] : multiplicities(p)) {
        for (long k = 1; k <= m; ++k) z *= k;
        for (long k = 0; k < m; ++k) z *= i;
    }
    return z;
}

int sgn_of(const Partition& p) {
    return (partition_size(p) - partition_rank(p)) % 2 == 0 ? 1 : -1;
}

Rat mult_factorial(const Partition& p) {
    Rat f = 1;
    for (auto [i, m] : multiplicities(p))
        for (long k = 1; k <= m; ++k) f *= k;
    return f;
}

static void partitions_rec(long n, long max_part, Partition& cur,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long first = std::min(n, max_part); first >= 1; --first) {
        cur.push_back(first);
        partitions_rec(n - first, first, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    Partition cur;
    if (n >= 0) partitions_rec(n, n, cur, out);
    return out;
}

std::string partition_str(const Partition& p) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    os << ')';
    return os.str();
}

SymFunc::SymFunc(long trunc, Coeffs c) : n_(trunc), coeffs_(std::move(c)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0 || partition_size(it->first) > n_)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

Rat SymFunc::coeff(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void SymFunc::add_term(const Partition& p, const Rat& c) {
    if (partition_size(p) > n_) return;
    auto it = coeffs_.find(p);
    if (it == coeffs_.end()) {
        if (c != 0) coeffs_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

static void check_trunc(const SymFunc& a, const SymFunc& b) {
    if (a.trunc() != b.trunc())
        throw std::runtime_error("SymFunc truncation degree mismatch");
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    check_trunc(*this, o);
    SymFunc out = *this;
    for (const auto& [p, c] : o.coeffs_) out.add_term(p, c);
    return out;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
    check_trunc(*this, o);
    SymFunc out = *this;
    for (const auto& [p, c] : o.coeffs_) out.add_term(p, -c);
    return out;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
    check_trunc(*this, o);
    SymFunc out(n_);
    for (const auto& [p, c] : coeffs_) {
        long dp = partition_size(p);
        for (const auto& [q, d] : o.coeffs_) {
            if (dp + partition_size(q) > n_) break; // keys ordered by degree
            Partition merged = p;
            merged.insert(merged.end(), q.begin(), q.end());
            std::sort(merged.begin(), merged.end(), std::greater<>());
            out.add_term(merged, c * d);
        }
    }
    return out;
}

SymFunc SymFunc::scaled(const Rat& c) const {
    SymFunc out(n_);
    if (c == 0) return out;
    for (const auto& [p, v] : coeffs_) out.add_term(p, v * c);
    return out;
}

SymFunc SymFunc::retagged(long new_trunc) const {
    if (new_trunc > n_) throw std::runtime_error("retagged: cannot raise truncation");
    SymFunc out(new_trunc);
    for (const auto& [p, c] : coeffs_) {
        if (partition_size(p) > new_trunc) break;
        out.add_term(p, c);
    }
    return out;
}

std::string SymFunc::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c) << "*p" << partition_str(p);
    }
    return os.str();
}

SymFunc p_basis(const Partition& p, long trunc) {
    if (partition_size(p) > trunc) throw std::runtime_error("p_basis: degree exceeds truncation");
    SymFunc out(trunc);
    out.add_term(p, 1);
    return out;
}

// Newton's identities: n e_n = sum_{i=1}^{n} (-1)^{i-1} p_i e_{n-i} and the
// same without signs for h.
static std::vector<SymFunc> newton_family(long up_to, long trunc, bool signs) {
    std::vector<SymFunc> fam;
    fam.push_back(p_basis({}, trunc)); // e_0 = h_0 = 1
    for (long n = 1; n <= up_to; ++n) {
        SymFunc acc(trunc);
        for (long i = 1; i <= n; ++i) {
            SymFunc t = p_basis({i}, trunc) * fam[n - i];
            if (signs && i % 2 == 0) t = t.scaled(-1);
            acc = acc + t;
        }
        fam.push_back(acc.scaled(Rat(1, n)));
    }
    return fam;
}

static SymFunc product_over_parts(const Partition& p, long trunc,
                                  const std::vector<SymFunc>& fam) {
    SymFunc out = p_basis({}, trunc);
    for (long part : p) out = out * fam[part];
    return out;
}

SymFunc e_basis(const Partition& p, long trunc) {
    if (partition_size(p) > trunc) throw std::runtime_error("e_basis: degree exceeds truncation");
    long biggest = p.empty() ? 0 : p.front();
    return product_over_parts(p, trunc, newton_family(biggest, trunc, true));
}

SymFunc h_basis(const Partition& p, long trunc) {
    if (partition_size(p) > trunc) throw std::runtime_error("h_basis: degree exceeds truncation");
    long biggest = p.empty() ? 0 : p.front();
    return product_over_parts(p, trunc, newton_family(biggest, trunc, false));
}

// Beta-set border-strip recursion. Removing a strip of size k replaces some
// beta number b with b-k (not already present); the height is the number of
// beta numbers strictly between.
static long chi_rec(std::vector<long>& beta, const Partition& mu, std::size_t idx) {
    if (idx == mu.size()) return 1;
    long k = mu[idx];
    long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        long b = beta[i] - k;
        if (b < 0) continue;
        bool clash = false;
        long ht = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == b) clash = true;
            if (beta[j] > b && beta[j] < beta[i]) ++ht;
        }
        if (clash) continue;
        long save = beta[i];
        beta[i] = b;
        long sub = chi_rec(beta, mu, idx + 1);
        beta[i] = save;
        total += (ht % 2 == 0 ? 1 : -1) * sub;
    }
    return total;
}

long sym_character(const Partition& lam, const Partition& mu) {
    if (partition_size(lam) != partition_size(mu))
        throw std::runtime_error("sym_character: sizes differ");
    std::vector<long> beta(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i)
        beta[i] = lam[i] + static_cast<long>(lam.size() - 1 - i);
    return chi_rec(beta, mu, 0);
}

SymFunc s_basis(const Partition& p, long trunc) {
    long d = partition_size(p);
    if (d > trunc) throw std::runtime_error("s_basis: degree exceeds truncation");
    SymFunc out(trunc);
    for (const Partition& mu : partitions_of(d)) {
        long chi = sym_character(p, mu);
        if (chi != 0) out.add_term(mu, Rat(chi) / z_of(mu));
    }
    return out;
}

SymFunc y_elem(long n, long trunc) {
    if (n < 1) throw std::runtime_error("y_elem: n must be positive");
    SymFunc out(trunc);
    for (long k = 1; n * k <= trunc; ++k) out.add_term({n * k}, Rat(1, k));
    return out;
}

SymFunc basis_element(char kind, const Partition& index, long trunc) {
    switch (kind) {
        case 'p': return p_basis(index, trunc);
        case 'e': return e_basis(index, trunc);
        case 'h': return h_basis(index, trunc);
        case 's': return s_basis(index, trunc);
        case 'y':
            if (index.size() != 1) throw std::runtime_error("y takes a single index");
            return y_elem(index[0], trunc);
        default: throw std::runtime_error("unknown basis kind");
    }
}

SymFunc exp_truncated(const SymFunc& f) {
    if (f.coeff({}) != 0) throw std::runtime_error("exp_truncated: nonzero constant term");
    SymFunc out = p_basis({}, f.trunc());
    SymFunc pow = out;
    Rat fact = 1;
    for (long k = 1; k <= f.trunc(); ++k) {
        pow = pow * f;
        if (pow.is_zero()) break;
        fact *= k;
        out = out + pow.scaled(1 / fact);
    }
    return out;
}

Rat hall_pair(const SymFunc& f, const SymFunc& g) {
    check_trunc(f, g);
    Rat out = 0;
    for (const auto& [p, c] : f.coeffs()) out += z_of(p) * c * g.coeff(p);
    return out;
}

SymFunc apply_partial(long n, const SymFunc& f) {
    if (n < 1) throw std::runtime_error("apply_partial: n must be positive");
    SymFunc out(std::max(f.trunc() - n, 0L));
    for (const auto& [p, c] : f.coeffs()) {
        long m = static_cast<long>(std::count(p.begin(), p.end(), n));
        if (m == 0) continue;
        Partition q = p;
        q.erase(std::find(q.begin(), q.end(), n));
        out.add_term(q, c * m);
    }
    return out;
}

long mobius_int(long n) {
    long out = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        out = -out;
    }
    if (n > 1) out = -out;
    return out;
}

SymFunc apply_D(long n, const SymFunc& f) {
    SymFunc out(std::max(f.trunc() - n, 0L));
    for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        long mu = mobius_int(d);
        if (mu == 0) continue;
        out = out + apply_partial(n / d, f).retagged(out.trunc()).scaled(Rat(mu, d));
    }
    return out;
}

SymFunc apply_binom_D(const Partition& lam, const SymFunc& f) {
    SymFunc cur = f;
    Rat denom = 1;
    // Distinct parts ascending; the operators commute so the order is a pure
    // convention.
    std::map<long, long> mult = [&] {
        std::map<long, long> m;
        for (long x : lam) ++m[x];
        return m;
    }();
    for (auto [i, m] : mult) {
        for (long j = 0; j < m; ++j) {
            // cur <- (D_i - j) cur
            SymFunc next = apply_D(i, cur);
            next = next - cur.retagged(next.trunc()).scaled(j);
            cur = next;
        }
        for (long k = 1; k <= m; ++k) denom *= k;
    }
    return cur.scaled(1 / denom);
}

std::map<Partition, Rat, PartitionLess> schur_expansion(const SymFunc& f, long max_deg) {
    if (max_deg > f.trunc()) throw std::runtime_error("schur_expansion: degree exceeds truncation");
    std::map<Partition, Rat, PartitionLess> out;
    for (long d = 0; d <= max_deg; ++d) {
        for (const Partition& lam : partitions_of(d)) {
            // <s_lam, f> = sum_mu chi^lam(mu) f[mu]
            Rat c = 0;
            for (const Partition& mu : partitions_of(d)) {
                Rat fm = f.coeff(mu);
                if (fm != 0) c += Rat(sym_character(lam, mu)) * fm;
            }
            if (c != 0) out.emplace(lam, c);
        }
    }
    return out;
}

std::string symfunc_json(const SymFunc& f) {
    nlohmann::ordered_json j;
    j["N"] = f.trunc();
    j["terms"] = nlohmann::json::array();
    for (const auto& [p, c] : f.coeffs()) {
        nlohmann::ordered_json t;
        t["partition"] = p;
        t["coef"] = rat_str(c);
        j["terms"].push_back(t);
    }
    return j.dump();
}

SymFunc symfunc_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SymFunc out(j.at("N").get<long>());
    for (const auto& t : j.at("terms")) {
        Partition p = t.at("partition").get<Partition>();
        out.add_term(p, rat_parse(t.at("coef").get<std::string>()));
    }
    return out;
}

} // namespace fstk
