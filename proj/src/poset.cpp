#include "fstk/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fstk {

FinitePoset::FinitePoset(std::size_t size,
                         const std::vector<std::pair<std::size_t, std::size_t>>& strict_relations,
                         std::optional<std::size_t> top,
                         std::vector<std::string> labels)
    : n_(size), less_(size, std::vector<bool>(size, false)), top_(top), labels_(std::move(labels)) {
    for (auto [a, b] : strict_relations) {
        if (a >= n_ || b >= n_) throw std::runtime_error("poset: relation out of range");
        if (a == b) throw std::runtime_error("poset: reflexive relation");
        less_[a][b] = true;
    }
    // Warshall transitive closure.
    for (std::size_t m = 0; m < n_; ++m)
        for (std::size_t a = 0; a < n_; ++a)
            if (less_[a][m])
                for (std::size_t b = 0; b < n_; ++b)
                    if (less_[m][b]) less_[a][b] = true;
    for (std::size_t a = 0; a < n_; ++a) {
        if (less_[a][a]) throw std::runtime_error("poset: cycle detected");
        for (std::size_t b = 0; b < a; ++b)
            if (less_[a][b] && less_[b][a]) throw std::runtime_error("poset: antisymmetry violated");
    }
    if (top_) {
        for (std::size_t a = 0; a < n_; ++a)
            if (a != *top_ && !less_[a][*top_])
                throw std::runtime_error("poset: declared top is not above everything");
    }
    if (!labels_.empty() && labels_.size() != n_)
        throw std::runtime_error("poset: label count mismatch");
}

bool FinitePoset::covers(std::size_t a, std::size_t b) const {
    if (!less_[a][b]) return false;
    for (std::size_t m = 0; m < n_; ++m)
        if (less_[a][m] && less_[m][b]) return false;
    return true;
}

std::string FinitePoset::label(std::size_t i) const {
    if (!labels_.empty()) return labels_[i];
    return std::to_string(i);
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covering_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            if (covers(a, b)) out.emplace_back(a, b);
    return out;
}

std::optional<std::vector<std::size_t>> FinitePoset::grading() const {
    if (!top_) return std::nullopt;
    // r(p) = length of maximal chains from p to the top; well defined iff the
    // min and max over cover-paths agree for every element. (With a top this
    // is equivalent to the all-intervals formulation.)
    auto pairs = covering_pairs();
    std::vector<std::vector<std::size_t>> up(n_);
    for (auto [a, b] : pairs) up[a].push_back(b);
    std::vector<long> lo(n_, -1), hi(n_, -1);
    lo[*top_] = hi[*top_] = 0;
    std::function<bool(std::size_t)> eval = [&](std::size_t p) -> bool {
        if (lo[p] >= 0) return true;
        if (up[p].empty()) return false; // not connected upward to top
        long mn = -1, mx = -1;
        for (std::size_t q : up[p]) {
            if (!eval(q)) return false;
            if (mn < 0 || lo[q] + 1 < mn) mn = lo[q] + 1;
            if (hi[q] + 1 > mx) mx = hi[q] + 1;
        }
        lo[p] = mn;
        hi[p] = mx;
        return true;
    };
    std::vector<std::size_t> r(n_);
    for (std::size_t p = 0; p < n_; ++p) {
        if (!eval(p) || lo[p] != hi[p]) return std::nullopt;
        r[p] = static_cast<std::size_t>(lo[p]);
    }
    return r;
}

PosetBounds& poset_bounds() {
    static PosetBounds b;
    return b;
}

FinitePoset boolean_lattice(std::size_t n) {
    if (n > poset_bounds().boolean_max) throw std::runtime_error("boolean_lattice: n too large");
    std::size_t sz = std::size_t(1) << n;
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    std::vector<std::string> labels(sz);
    for (std::size_t a = 0; a < sz; ++a) {
        std::string l = "{";
        for (std::size_t i = 0; i < n; ++i)
            if (a >> i & 1) l += std::to_string(i + 1) + ",";
        if (l.size() > 1) l.pop_back();
        labels[a] = l + "}";
        for (std::size_t b = 0; b < sz; ++b)
            if (a != b && (a & b) == a) rel.emplace_back(a, b);
    }
    return FinitePoset(sz, rel, sz - 1, labels);
}

namespace {

struct SmallField {
    std::size_t q;
    std::size_t add(std::size_t a, std::size_t b) const {
        if (q == 4) return a ^ b; // GF(4) addition is carryless
        return (a + b) % q;
    }
    std::size_t mul(std::size_t a, std::size_t b) const {
        if (q != 4) return (a * b) % q;
        static const std::size_t t[4][4] = {
            {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
        return t[a][b];
    }
};

// All reduced-row-echelon k x n matrices over F_q, rows flattened.
void enumerate_rref(const SmallField& F, std::size_t n, std::size_t k,
                    std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> pivots(k);
    std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t i, std::size_t from) {
        if (i == k) {
            // Fill free entries: row r has 1 at pivots[r], 0 left of it and in
            // other pivot columns, arbitrary elsewhere right of pivots[r].
            std::vector<std::pair<std::size_t, std::size_t>> free_pos;
            std::vector<bool> is_pivot(n, false);
            for (std::size_t c : pivots) is_pivot[c] = true;
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = pivots[r] + 1; c < n; ++c)
                    if (!is_pivot[c]) free_pos.emplace_back(r, c);
            std::vector<std::size_t> mat(k * n, 0);
            for (std::size_t r = 0; r < k; ++r) mat[r * n + pivots[r]] = 1;
            std::function<void(std::size_t)> fill = [&](std::size_t j) {
                if (j == free_pos.size()) {
                    out.push_back(mat);
                    return;
                }
                auto [r, c] = free_pos[j];
                for (std::size_t v = 0; v < F.q; ++v) {
                    mat[r * n + c] = v;
                    fill(j + 1);
                }
                mat[r * n + c] = 0;
            };
            fill(0);
            return;
        }
        for (std::size_t c = from; c + (k - i) <= n; ++c) {
            pivots[i] = c;
            pick(i + 1, c + 1);
        }
    };
    pick(0, 0);
}

std::size_t encode_vec(const SmallField& F, const std::vector<std::size_t>& v) {
    std::size_t code = 0;
    for (std::size_t x : v) code = code * F.q + x;
    return code;
}

// Member-vector codes of the row space of a k x n matrix.
std::vector<std::size_t> span_codes(const SmallField& F, std::size_t n, std::size_t k,
                                    const std::vector<std::size_t>& mat) {
    std::vector<std::size_t> codes;
    std::vector<std::size_t> coef(k, 0);
    while (true) {
        std::vector<std::size_t> v(n, 0);
        for (std::size_t r = 0; r < k; ++r)
            if (coef[r])
                for (std::size_t c = 0; c < n; ++c)
                    v[c] = F.add(v[c], F.mul(coef[r], mat[r * n + c]));
        codes.push_back(encode_vec(F, v));
        std::size_t i = 0;
        while (i < k && coef[i] + 1 == F.q) coef[i++] = 0;
        if (i == k) break;
        ++coef[i];
    }
    std::sort(codes.begin(), codes.end());
    return codes;
}

} // namespace

FinitePoset subspace_lattice(std::size_t q, std::size_t n) {
    if (q != 2 && q != 3 && q != 4 && q != 5)
        throw std::runtime_error("subspace_lattice: unsupported field size");
    if (n > poset_bounds().subspace_max_n) throw std::runtime_error("subspace_lattice: n too large");
    SmallField F{q};
    struct Sub {
        std::size_t dim;
        std::vector<std::size_t> mat;
        std::vector<std::size_t> members;
    };
    std::vector<Sub> subs;
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::vector<std::size_t>> mats;
        enumerate_rref(F, n, k, mats);
        // Echelon-matrix lexicographic order within each dimension.
        std::sort(mats.begin(), mats.end());
        for (auto& m : mats) subs.push_back({k, m, span_codes(F, n, k, m)});
    }
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t a = 0; a < subs.size(); ++a)
        for (std::size_t b = 0; b < subs.size(); ++b) {
            if (a == b || subs[a].dim >= subs[b].dim) continue;
            if (std::includes(subs[b].members.begin(), subs[b].members.end(),
                              subs[a].members.begin(), subs[a].members.end()))
                rel.emplace_back(a, b);
        }
    std::vector<std::string> labels;
    for (auto& s : subs) {
        std::ostringstream os;
        os << "dim" << s.dim << "[";
        for (std::size_t x : s.mat) os << x;
        os << "]";
        labels.push_back(os.str());
    }
    return FinitePoset(subs.size(), rel, subs.size() - 1, labels);
}

namespace {
// Restricted growth strings of length n in lexicographic order.
std::vector<std::vector<std::size_t>> rgs_enumerate(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> a(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t mx) {
        if (i == n) {
            out.push_back(a);
            return;
        }
        for (std::size_t v = 0; v <= mx + 1 && v <= i; ++v) {
            a[i] = v;
            rec(i + 1, std::max(mx, v));
        }
    };
    if (n == 0)
        out.push_back({});
    else {
        a[0] = 0;
        std::function<void()> start = [&] { rec(1, 0); };
        start();
    }
    return out;
}
} // namespace

FinitePoset partition_lattice(std::size_t n) {
    if (n == 0 || n > poset_bounds().partition_max)
        throw std::runtime_error("partition_lattice: n out of range");
    auto rgs = rgs_enumerate(n);
    std::size_t sz = rgs.size();
    auto refines = [&](const std::vector<std::size_t>& fine, const std::vector<std::size_t>& coarse) {
        // every block of `fine` inside a block of `coarse`
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (fine[i] == fine[j] && coarse[i] != coarse[j]) return false;
        return true;
    };
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t a = 0; a < sz; ++a)
        for (std::size_t b = 0; b < sz; ++b)
            if (a != b && refines(rgs[b], rgs[a]) && rgs[a] != rgs[b]) rel.emplace_back(a, b);
    std::vector<std::string> labels(sz);
    for (std::size_t i = 0; i < sz; ++i) {
        std::size_t blocks = *std::max_element(rgs[i].begin(), rgs[i].end()) + 1;
        std::vector<std::string> bl(blocks);
        for (std::size_t j = 0; j < n; ++j) bl[rgs[i][j]] += std::to_string(j + 1);
        std::string l;
        for (auto& b : bl) l += (l.empty() ? "" : "|") + b;
        labels[i] = l;
    }
    return FinitePoset(sz, rel, sz - 1, labels);
}

std::vector<std::vector<std::vector<std::size_t>>> partition_lattice_blocks(std::size_t n) {
    auto rgs = rgs_enumerate(n);
    std::vector<std::vector<std::vector<std::size_t>>> out;
    for (auto& a : rgs) {
        std::size_t blocks = a.empty() ? 0 : *std::max_element(a.begin(), a.end()) + 1;
        std::vector<std::vector<std::size_t>> part(blocks);
        for (std::size_t j = 0; j < n; ++j) part[a[j]].push_back(j);
        out.push_back(part);
    }
    return out;
}

FinitePoset product_poset(const std::vector<FinitePoset>& factors) {
    if (factors.empty()) throw std::runtime_error("product_poset: no factors");
    std::size_t sz = 1;
    for (auto& f : factors) {
        if (f.size() == 0) throw std::runtime_error("product_poset: empty factor");
        sz *= f.size();
    }
    auto decode = [&](std::size_t idx) { return product_decode(factors, idx); };
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t a = 0; a < sz; ++a) {
        auto ta = decode(a);
        for (std::size_t b = 0; b < sz; ++b) {
            if (a == b) continue;
            auto tb = decode(b);
            bool le = true;
            for (std::size_t t = 0; t < factors.size() && le; ++t)
                le = factors[t].leq(ta[t], tb[t]);
            if (le) rel.emplace_back(a, b);
        }
    }
    std::optional<std::size_t> top;
    bool all_tops = std::all_of(factors.begin(), factors.end(),
                                [](const FinitePoset& f) { return f.top().has_value(); });
    if (all_tops) {
        std::vector<std::size_t> t;
        for (auto& f : factors) t.push_back(*f.top());
        top = product_encode(factors, t);
    }
    return FinitePoset(sz, rel, top);
}

std::vector<std::size_t> product_decode(const std::vector<FinitePoset>& factors, std::size_t idx) {
    std::vector<std::size_t> t(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
        t[i] = idx % factors[i].size();
        idx /= factors[i].size();
    }
    return t;
}

std::size_t product_encode(const std::vector<FinitePoset>& factors,
                           const std::vector<std::size_t>& tuple) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i].size() + tuple[i];
    return idx;
}

IntPolynomial poly_trim(IntPolynomial p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.empty() || b.empty()) return {};
    IntPolynomial out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return poly_trim(out);
}

std::string poly_str(const IntPolynomial& p) {
    if (p.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        long c = p[i];
        if (!s.empty()) s += c > 0 ? " +" : " -";
        else if (c < 0) s += "-";
        long a = c < 0 ? -c : c;
        if (a != 1 || i == 0) s += std::to_string(a);
        if (i == 1) s += "t";
        if (i > 1) s += "t^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

namespace {
// Chains in the open interval (x, top) grouped by cardinality, each chain
// listed by its element tuple in descending order, lexicographic enumeration.
std::vector<std::vector<std::vector<std::size_t>>> interval_chains(const FinitePoset& p,
                                                                   std::size_t x) {
    std::size_t top = *p.top();
    std::vector<std::size_t> interior;
    for (std::size_t y = 0; y < p.size(); ++y)
        if (p.less(x, y) && p.less(y, top)) interior.push_back(y);
    std::vector<std::vector<std::vector<std::size_t>>> by_len(1);
    by_len[0].push_back({});
    while (true) {
        std::vector<std::vector<std::size_t>> next;
        for (auto& c : by_len.back())
            for (std::size_t y : interior) {
                if (!c.empty() && !p.less(y, c.back())) continue;
                auto c2 = c;
                c2.push_back(y);
                next.push_back(c2);
            }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        by_len.push_back(std::move(next));
    }
    return by_len;
}
} // namespace

RationalChainComplex interval_pair_complex(const FinitePoset& p, std::size_t x) {
    if (!p.top()) throw std::runtime_error("interval_pair_complex: poset has no top");
    std::size_t top = *p.top();
    if (!p.leq(x, top)) throw std::runtime_error("interval_pair_complex: x not below top");
    if (x == top) {
        return RationalChainComplex({1}, {});
    }
    auto by_len = interval_chains(p, x);
    // Degree s chains carry s-1 interior elements; degree 0 is empty.
    std::vector<std::size_t> dims(by_len.size() + 1);
    dims[0] = 0;
    for (std::size_t j = 0; j < by_len.size(); ++j) dims[j + 1] = by_len[j].size();
    std::vector<RatMatrix> bd;
    for (std::size_t s = 1; s < dims.size(); ++s) {
        RatMatrix d(dims[s - 1], dims[s]);
        if (s >= 2) {
            std::map<std::vector<std::size_t>, std::size_t> index;
            for (std::size_t i = 0; i < by_len[s - 2].size(); ++i) index[by_len[s - 2][i]] = i;
            for (std::size_t j = 0; j < by_len[s - 1].size(); ++j) {
                const auto& c = by_len[s - 1][j];
                // Chain 1̂ > c[0] > ... > c[s-2] > x; interior faces drop c[i-1].
                for (std::size_t i = 1; i <= s - 1; ++i) {
                    auto f = c;
                    f.erase(f.begin() + (i - 1));
                    d.add_to(index[f], j, (i % 2 == 0) ? Rat(1) : Rat(-1));
                }
            }
        }
        bd.push_back(std::move(d));
    }
    return RationalChainComplex(std::move(dims), std::move(bd));
}

long mobius(const FinitePoset& p, std::size_t x) {
    if (!p.top()) throw std::runtime_error("mobius: poset has no top");
    std::size_t top = *p.top();
    if (!p.leq(x, top)) throw std::runtime_error("mobius: x not below top");
    if (x == top) return 1;
    // Euler characteristic of interval_pair_complex(p, x): the degree-s part
    // counts chains with s-1 interior elements, so only chain counts matter.
    std::vector<std::size_t> interior;
    for (std::size_t y = 0; y < p.size(); ++y)
        if (p.less(x, y) && p.less(y, top)) interior.push_back(y);
    std::size_t m = interior.size();
    // C_j = number of j-element chains in the open interval; the degree-s
    // part of the pair complex has dimension C_{s-1}, so
    // chi = sum_{j>=0} (-1)^{j+1} C_j.
    std::vector<long long> f(m, 1); // chains of size j with given maximum
    long chi = -1;                  // (-1)^1 * C_0
    for (std::size_t j = 1; j <= m; ++j) {
        long long cj = 0;
        for (long long v : f) cj += v;
        if (cj == 0) break;
        chi += ((j + 1) % 2 == 0 ? 1 : -1) * static_cast<long>(cj);
        std::vector<long long> next(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            if (f[i])
                for (std::size_t i2 = 0; i2 < m; ++i2)
                    if (p.less(interior[i], interior[i2])) next[i2] += f[i];
        f = std::move(next);
    }
    return chi;
}

long mobius_recursive(const FinitePoset& p, std::size_t x) {
    if (!p.top()) throw std::runtime_error("mobius_recursive: poset has no top");
    std::size_t top = *p.top();
    std::map<std::size_t, long> memo;
    std::function<long(std::size_t)> mu = [&](std::size_t y) -> long {
        if (y == top) return 1;
        auto it = memo.find(y);
        if (it != memo.end()) return it->second;
        long s = 0;
        for (std::size_t z = 0; z < p.size(); ++z)
            if (p.less(y, z) && p.leq(z, top)) s += mu(z);
        memo[y] = -s;
        return -s;
    };
    return mu(x);
}

IntPolynomial whitney_polynomial(const FinitePoset& p) {
    auto r = p.grading();
    if (!r) throw std::runtime_error("whitney_polynomial: poset not graded with top");
    IntPolynomial w;
    for (std::size_t x = 0; x < p.size(); ++x) {
        std::size_t d = (*r)[x];
        if (w.size() <= d) w.resize(d + 1, 0);
        w[d] += mobius(p, x);
    }
    return poly_trim(w);
}

bool is_upper_cm(const FinitePoset& p) {
    if (!p.top()) return false;
    auto r = p.grading();
    if (!r) return false;
    for (std::size_t x = 0; x < p.size(); ++x) {
        auto h = interval_pair_complex(p, x).homology_dims();
        for (std::size_t j = 0; j < (*r)[x] && j < h.size(); ++j)
            if (h[j] != 0) return false;
    }
    return true;
}

} // namespace fstk
