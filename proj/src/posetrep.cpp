#include "fstk/posetrep.hpp"

#include <algorithm>
#include <stdexcept>

namespace fstk {

void PosetIdeal::validate() const {
    for (std::size_t x = 0; x < poset->size(); ++x)
        if (members[x])
            for (std::size_t y = 0; y < poset->size(); ++y)
                if (poset->less(x, y) && !members[y])
                    throw std::runtime_error("PosetIdeal: not upward closed");
}

PosetIdeal principal_ideal(const FinitePoset& p, std::size_t x) {
    PosetIdeal i{&p, std::vector<bool>(p.size(), false)};
    for (std::size_t y = 0; y < p.size(); ++y) i.members[y] = p.leq(x, y);
    return i;
}

PosetRep::PosetRep(const FinitePoset& poset, std::vector<std::size_t> dims,
                   std::function<RatMatrix(std::size_t, std::size_t)> map_builder)
    : poset_(&poset), dims_(std::move(dims)) {
    if (dims_.size() != poset.size()) throw std::runtime_error("PosetRep: dim count mismatch");
    std::size_t n = poset.size();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (poset.less(p, q)) {
                RatMatrix m = map_builder(p, q);
                if (m.rows() != dims_[q] || m.cols() != dims_[p])
                    throw std::runtime_error("PosetRep: map shape mismatch");
                maps_.emplace(std::make_pair(p, q), std::move(m));
            }
    // Functoriality on all comparable triples (skip zero spaces, where it is vacuous).
    for (const auto& [pq, mpq] : maps_) {
        auto [p, q] = pq;
        if (dims_[p] == 0) continue;
        for (std::size_t r = 0; r < n; ++r)
            if (poset.less(q, r)) {
                if (!(map_for(q, r).mul(mpq) == map_for(p, r)))
                    throw std::runtime_error("PosetRep: functoriality violated");
            }
    }
}

const RatMatrix& PosetRep::map_for(std::size_t p, std::size_t q) const {
    static const RatMatrix empty;
    if (p == q) throw std::runtime_error("PosetRep::map_for: use identity for p == q");
    auto it = maps_.find({p, q});
    if (it == maps_.end()) throw std::runtime_error("PosetRep::map_for: incomparable pair");
    return it->second;
}

PosetRep ideal_rep(const PosetIdeal& ideal) {
    ideal.validate();
    const FinitePoset& P = *ideal.poset;
    std::vector<std::size_t> dims(P.size());
    for (std::size_t p = 0; p < P.size(); ++p) dims[p] = ideal.members[p] ? 1 : 0;
    return PosetRep(P, dims, [&](std::size_t p, std::size_t q) {
        RatMatrix m(dims[q], dims[p]);
        if (dims[p] && dims[q]) m.set(0, 0, 1);
        return m;
    });
}

PosetRep constant_rep(const FinitePoset& p, std::size_t dim) {
    return PosetRep(p, std::vector<std::size_t>(p.size(), dim),
                    [&](std::size_t, std::size_t) { return RatMatrix::identity(dim); });
}

PosetRep random_quotient_rep(const FinitePoset& p, std::size_t ambient_dim, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-2, 2);
    std::size_t n = p.size(), D = ambient_dim;
    std::vector<std::vector<int>> vecs(n, std::vector<int>(D));
    for (auto& v : vecs)
        for (auto& e : v) e = dist(rng);
    // Echelon data of span{v_x : x <= p} for each element.
    std::vector<Echelon> ech(n);
    std::vector<std::size_t> dims(n);
    std::vector<std::vector<std::size_t>> free_cols(n);
    for (std::size_t q = 0; q < n; ++q) {
        std::vector<std::size_t> below;
        for (std::size_t x = 0; x < n; ++x)
            if (p.leq(x, q)) below.push_back(x);
        RatMatrix m(below.size(), D);
        for (std::size_t i = 0; i < below.size(); ++i)
            for (std::size_t c = 0; c < D; ++c)
                if (vecs[below[i]][c]) m.set(i, c, vecs[below[i]][c]);
        ech[q] = echelon_form(m);
        std::vector<bool> piv(D, false);
        for (std::size_t c : ech[q].pivot_cols) piv[c] = true;
        for (std::size_t c = 0; c < D; ++c)
            if (!piv[c]) free_cols[q].push_back(c);
        dims[q] = free_cols[q].size();
    }
    return PosetRep(p, dims, [&](std::size_t a, std::size_t b) {
        // Project the class of each basis coordinate of V/V_a into V/V_b.
        RatMatrix m(dims[b], dims[a]);
        for (std::size_t j = 0; j < dims[a]; ++j) {
            std::vector<Rat> v(D, Rat(0));
            v[free_cols[a][j]] = 1;
            reduce_against(ech[b], v);
            for (std::size_t i = 0; i < dims[b]; ++i)
                if (v[free_cols[b][i]] != 0) m.set(i, j, v[free_cols[b][i]]);
        }
        return m;
    });
}

std::vector<std::vector<std::vector<std::size_t>>> descending_chains(const FinitePoset& p) {
    if (!p.top()) throw std::runtime_error("descending_chains: no top");
    std::size_t top = *p.top();
    std::vector<std::vector<std::vector<std::size_t>>> by_len(1);
    by_len[0].push_back({});
    while (true) {
        std::vector<std::vector<std::size_t>> next;
        for (auto& c : by_len.back())
            for (std::size_t y = 0; y < p.size(); ++y) {
                if (y == top) continue;
                if (!c.empty() && !p.less(y, c.back())) continue;
                auto c2 = c;
                c2.push_back(y);
                next.push_back(std::move(c2));
            }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        by_len.push_back(std::move(next));
    }
    return by_len;
}

namespace {

struct BarBasis {
    // Basis offsets per degree; chain i occupies [offsets[i], offsets[i]+dim).
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    std::map<std::vector<std::size_t>, std::size_t> chain_index;
};

BarBasis make_basis(const std::vector<std::vector<std::size_t>>& chains,
                    const PosetRep& m, std::size_t top) {
    BarBasis b;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        b.chain_index[chains[i]] = i;
        b.offsets.push_back(b.total);
        std::size_t bottom = chains[i].empty() ? top : chains[i].back();
        b.total += m.dim_at(bottom);
    }
    return b;
}

} // namespace

RationalChainComplex bar_complex(const PosetRep& m) {
    const FinitePoset& P = m.poset();
    if (!P.top()) throw std::runtime_error("bar_complex: no top");
    std::size_t top = *P.top();
    auto chains = descending_chains(P);
    std::vector<BarBasis> bases;
    for (auto& cl : chains) bases.push_back(make_basis(cl, m, top));
    std::vector<std::size_t> dims;
    for (auto& b : bases) dims.push_back(b.total);
    std::vector<RatMatrix> boundaries;
    for (std::size_t s = 1; s < chains.size(); ++s) {
        RatMatrix d(dims[s - 1], dims[s]);
        for (std::size_t ci = 0; ci < chains[s].size(); ++ci) {
            const auto& c = chains[s][ci];
            std::size_t src_off = bases[s].offsets[ci];
            std::size_t bottom = c.back();
            std::size_t mdim = m.dim_at(bottom);
            // Interior faces: drop p_i (1 <= i < s), identity on the module.
            for (std::size_t i = 1; i < s; ++i) {
                auto f = c;
                f.erase(f.begin() + (i - 1));
                std::size_t tgt_off = bases[s - 1].offsets[bases[s - 1].chain_index.at(f)];
                Rat sign = (i % 2 == 0) ? 1 : -1;
                for (std::size_t k = 0; k < mdim; ++k) d.add_to(tgt_off + k, src_off + k, sign);
            }
            // Last face: drop p_s and push the module element up.
            auto f = c;
            f.pop_back();
            std::size_t nb = f.empty() ? top : f.back();
            std::size_t tgt_off = bases[s - 1].offsets[bases[s - 1].chain_index.at(f)];
            const RatMatrix& mp = m.map_for(bottom, nb);
            Rat sign = (s % 2 == 0) ? 1 : -1;
            for (const auto& [rc, v] : mp.entries())
                d.add_to(tgt_off + rc.first, src_off + rc.second, sign * v);
        }
        boundaries.push_back(std::move(d));
    }
    return RationalChainComplex(std::move(dims), std::move(boundaries));
}

RationalChainComplex koszul_complex(const PosetRep& m, bool assume_upper_cm) {
    const FinitePoset& P = m.poset();
    if (!assume_upper_cm && !is_upper_cm(P))
        throw std::runtime_error("koszul_complex: poset is not upper CM");
    auto ranks_opt = P.grading();
    if (!ranks_opt) throw std::runtime_error("koszul_complex: poset not graded");
    const auto& r = *ranks_opt;
    std::size_t top = *P.top();
    auto chains = descending_chains(P);

    // Degree-s slice: chains of length s with r(p_s) = s (necessarily cover
    // chains), and chains of length s-1 ending at rank s (alternation target).
    auto slice = [&](std::size_t len, std::size_t bottom_rank) {
        std::vector<std::vector<std::size_t>> out;
        if (len < chains.size())
            for (auto& c : chains[len])
                if (!c.empty() && r[c.back()] == bottom_rank) out.push_back(c);
        return out;
    };

    std::size_t maxdeg = 0;
    for (std::size_t x = 0; x < P.size(); ++x) maxdeg = std::max(maxdeg, r[x]);

    std::vector<std::size_t> dims;
    std::vector<RatMatrix> kernels; // columns: kernel coordinates in the slice basis
    std::vector<std::vector<std::vector<std::size_t>>> slice_chains;
    for (std::size_t s = 0; s <= maxdeg; ++s) {
        if (s == 0) {
            slice_chains.push_back({{}});
            kernels.push_back(RatMatrix::identity(m.dim_at(top)));
            dims.push_back(m.dim_at(top));
            continue;
        }
        auto sc = slice(s, s);
        slice_chains.push_back(sc);
        BarBasis src = make_basis(sc, m, top);
        auto tgt_chains = slice(s - 1, s);
        BarBasis tgt = make_basis(tgt_chains, m, top);
        RatMatrix T(tgt.total, src.total);
        for (std::size_t ci = 0; ci < sc.size(); ++ci) {
            const auto& c = sc[ci];
            std::size_t mdim = m.dim_at(c.back());
            for (std::size_t i = 1; i < s; ++i) {
                auto f = c;
                f.erase(f.begin() + (i - 1));
                std::size_t off = tgt.offsets[tgt.chain_index.at(f)];
                Rat sign = (i % 2 == 0) ? 1 : -1;
                for (std::size_t k = 0; k < mdim; ++k)
                    T.add_to(off + k, src.offsets[ci] + k, sign);
            }
        }
        kernels.push_back(kernel_basis(T));
        dims.push_back(kernels.back().cols());
    }

    std::vector<RatMatrix> boundaries;
    for (std::size_t s = 1; s <= maxdeg; ++s) {
        BarBasis src = make_basis(slice_chains[s], m, top);
        BarBasis tgt = make_basis(slice_chains[s - 1], m, top);
        // (-1)^s ∂_s on the ambient slice: drop p_s, apply the module map.
        RatMatrix ds(tgt.total, src.total);
        for (std::size_t ci = 0; ci < slice_chains[s].size(); ++ci) {
            const auto& c = slice_chains[s][ci];
            auto f = c;
            f.pop_back();
            std::size_t nb = f.empty() ? top : f.back();
            auto it = tgt.chain_index.find(f);
            if (it == tgt.chain_index.end())
                throw std::runtime_error("koszul_complex: face left the cover slice");
            std::size_t off = tgt.offsets[it->second];
            const RatMatrix& mp = m.map_for(c.back(), nb);
            Rat sign = (s % 2 == 0) ? 1 : -1;
            for (const auto& [rc, v] : mp.entries())
                ds.add_to(off + rc.first, src.offsets[ci] + rc.second, sign * v);
        }
        boundaries.push_back(solve_in_span(kernels[s - 1], ds.mul(kernels[s])));
    }
    return RationalChainComplex(std::move(dims), std::move(boundaries));
}

RationalChainComplex multi_bar_complex(const std::vector<FinitePoset>& factors,
                                       const PosetRep& m) {
    std::size_t r = factors.size();
    if (r == 0) throw std::runtime_error("multi_bar_complex: no factors");
    std::vector<std::vector<std::vector<std::vector<std::size_t>>>> chains;
    std::vector<std::size_t> tops;
    for (auto& f : factors) {
        if (!f.top()) throw std::runtime_error("multi_bar_complex: factor without top");
        tops.push_back(*f.top());
        chains.push_back(descending_chains(f));
    }
    std::size_t maxdeg = 0;
    for (auto& cl : chains) maxdeg += cl.size() - 1;

    // Basis entry: composition + chain index per factor.
    struct Entry {
        std::vector<std::size_t> comp;
        std::vector<std::size_t> idx;
        std::size_t bottom; // product element index
        std::size_t offset;
    };
    std::vector<std::vector<Entry>> basis(maxdeg + 1);
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> lookup(maxdeg + 1);
    std::vector<std::size_t> dims(maxdeg + 1, 0);

    auto bottom_of = [&](const std::vector<std::size_t>& comp,
                         const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> tup(r);
        for (std::size_t t = 0; t < r; ++t) {
            const auto& c = chains[t][comp[t]][idx[t]];
            tup[t] = c.empty() ? tops[t] : c.back();
        }
        return product_encode(factors, tup);
    };

    // Enumerate compositions of n into r parts in lexicographic order, then
    // chain tuples in nested lexicographic order.
    for (std::size_t n = 0; n <= maxdeg; ++n) {
        std::vector<std::size_t> comp(r, 0);
        std::function<void(std::size_t, std::size_t)> rec_comp = [&](std::size_t t,
                                                                     std::size_t left) {
            if (t == r) {
                if (left) return;
                for (std::size_t u = 0; u < r; ++u)
                    if (comp[u] >= chains[u].size()) return;
                std::vector<std::size_t> idx(r, 0);
                std::function<void(std::size_t)> rec_idx = [&](std::size_t u) {
                    if (u == r) {
                        Entry e{comp, idx, bottom_of(comp, idx), dims[n]};
                        std::vector<std::size_t> key = comp;
                        key.insert(key.end(), idx.begin(), idx.end());
                        lookup[n][key] = basis[n].size();
                        dims[n] += m.dim_at(e.bottom);
                        basis[n].push_back(std::move(e));
                        return;
                    }
                    for (idx[u] = 0; idx[u] < chains[u][comp[u]].size(); ++idx[u]) rec_idx(u + 1);
                    idx[u] = 0;
                };
                rec_idx(0);
                return;
            }
            for (comp[t] = 0; comp[t] <= left; ++comp[t]) rec_comp(t + 1, left - comp[t]);
            comp[t] = 0;
        };
        rec_comp(0, n);
    }

    std::vector<RatMatrix> boundaries;
    for (std::size_t n = 1; n <= maxdeg; ++n) {
        RatMatrix d(dims[n - 1], dims[n]);
        for (const auto& e : basis[n]) {
            std::size_t mdim = m.dim_at(e.bottom);
            long presign = 1;
            for (std::size_t t = 0; t < r; ++t) {
                std::size_t it = e.comp[t];
                if (it > 0) {
                    const auto& c = chains[t][it][e.idx[t]];
                    for (std::size_t j = 1; j <= it; ++j) {
                        auto f = c;
                        f.erase(f.begin() + (j - 1));
                        auto ncomp = e.comp;
                        ncomp[t] = it - 1;
                        auto nidx = e.idx;
                        nidx[t] = 0; // fixed below via lookup of the face chain
                        // Find the face chain's index in its length class.
                        const auto& cls = chains[t][it - 1];
                        std::size_t fi =
                            std::lower_bound(cls.begin(), cls.end(), f) - cls.begin();
                        nidx[t] = fi;
                        std::vector<std::size_t> key = ncomp;
                        key.insert(key.end(), nidx.begin(), nidx.end());
                        const Entry& tgt = basis[n - 1][lookup[n - 1].at(key)];
                        Rat sign = Rat(presign) * ((j % 2 == 0) ? 1 : -1);
                        if (j < it) {
                            for (std::size_t k = 0; k < mdim; ++k)
                                d.add_to(tgt.offset + k, e.offset + k, sign);
                        } else {
                            const RatMatrix& mp = m.map_for(e.bottom, tgt.bottom);
                            for (const auto& [rc, v] : mp.entries())
                                d.add_to(tgt.offset + rc.first, e.offset + rc.second, sign * v);
                        }
                    }
                }
                if (e.comp[t] % 2 == 1) presign = -presign;
            }
        }
        boundaries.push_back(std::move(d));
    }
    return RationalChainComplex(std::move(dims), std::move(boundaries));
}

std::vector<std::pair<long, PosetIdeal>> pset_decompose(
    const FinitePoset& p, const std::vector<std::vector<long>>& f_sets,
    const std::function<long(std::size_t, std::size_t, long)>& transition) {
    if (!p.top()) throw std::runtime_error("pset_decompose: no top");
    std::size_t top = *p.top();
    // Injectivity of every transition map.
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.less(a, b)) {
                std::vector<long> seen;
                for (long y : f_sets[a]) {
                    long im = transition(a, b, y);
                    if (std::find(seen.begin(), seen.end(), im) != seen.end())
                        throw std::runtime_error("pset_decompose: non-injective transition");
                    seen.push_back(im);
                }
            }
    std::vector<long> tops = f_sets[top];
    std::sort(tops.begin(), tops.end());
    std::vector<std::pair<long, PosetIdeal>> out;
    std::size_t covered = 0;
    for (long x : tops) {
        PosetIdeal ideal{&p, std::vector<bool>(p.size(), false)};
        for (std::size_t a = 0; a < p.size(); ++a) {
            for (long y : f_sets[a])
                if ((a == top && y == x) || (a != top && transition(a, top, y) == x)) {
                    ideal.members[a] = true;
                    break;
                }
            if (ideal.members[a]) ++covered;
        }
        ideal.validate();
        out.emplace_back(x, std::move(ideal));
    }
    std::size_t total = 0;
    for (auto& f : f_sets) total += f.size();
    if (covered != total)
        throw std::runtime_error("pset_decompose: ideals do not reconstruct the functor");
    return out;
}

} // namespace fstk
