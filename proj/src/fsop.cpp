#include "fstk/fsop.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fstk {

std::vector<SurjWord> enumerate_surjections(long n, long d) {
    std::vector<SurjWord> out;
    if (d < 0 || n < 0 || d > n) return out;
    if (d == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    SurjWord w(n);
    // Lexicographic enumeration with a used-letter count prune.
    std::function<void(long, long)> rec = [&](long pos, long used) {
        if (n - pos < d - used) return; // cannot become surjective
        if (pos == n) {
            out.push_back(w);
            return;
        }
        for (int c = 1; c <= d; ++c) {
            bool fresh = std::find(w.begin(), w.begin() + pos, c) == w.begin() + pos;
            w[pos] = c;
            rec(pos + 1, used + (fresh ? 1 : 0));
        }
    };
    rec(0, 0);
    return out;
}

SurjWord compose_word(const SurjWord& w, const std::vector<int>& f) {
    SurjWord out(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) out[j] = w[f[j]];
    return out;
}

std::vector<int> cycle_type_rep(const Partition& lam, long n) {
    if (partition_size(lam) != n) throw std::runtime_error("cycle_type_rep: size mismatch");
    std::vector<int> perm(n);
    long base = 0;
    for (long part : lam) {
        for (long i = 0; i < part; ++i) perm[base + i] = static_cast<int>(base + (i + 1) % part);
        base += part;
    }
    return perm;
}

void FsopPresentation::validate() const {
    for (long g : generator_degrees)
        if (g < 0 || g > 9) throw std::runtime_error("generator degree out of range");
    for (const auto& rel : relations) {
        if (rel.terms.empty()) throw std::runtime_error("empty relation");
        for (const auto& t : rel.terms) {
            if (t.gen >= generator_degrees.size())
                throw std::runtime_error("relation cites unknown generator");
            if (static_cast<long>(t.word.size()) != rel.degree)
                throw std::runtime_error("relation word length differs from its degree");
            std::vector<bool> seen(generator_degrees[t.gen], false);
            for (int c : t.word) {
                if (c < 1 || c > generator_degrees[t.gen])
                    throw std::runtime_error("relation word letter out of range");
                seen[c - 1] = true;
            }
            for (bool b : seen)
                if (!b) throw std::runtime_error("relation word is not surjective");
        }
    }
}

FsopPresentation free_presentation(long d) { return FsopPresentation{{d}, {}}; }

FsopModule::FsopModule(FsopPresentation pres, long degree_bound)
    : pres_(std::move(pres)), bound_(degree_bound) {
    pres_.validate();
    if (bound_ < 0) {
        long maxg = 0;
        for (long g : pres_.generator_degrees) maxg = std::max(maxg, g);
        bound_ = maxg <= 2 ? 8 : 6;
    }
}

const DegreeEvaluation& FsopModule::at(long n) const {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    if (n < 0 || n > bound_) throw std::runtime_error("FsopModule: degree bound exceeded");

    DegreeEvaluation ev;
    ev.degree = n;
    for (std::size_t i = 0; i < pres_.generator_degrees.size(); ++i)
        for (const auto& w : enumerate_surjections(n, pres_.generator_degrees[i])) {
            ev.index.emplace(std::make_pair(i, w), ev.basis.size());
            ev.basis.emplace_back(i, w);
        }
    ev.free_dim = ev.basis.size();

    // Relation space: every relation precomposed with every surjection
    // [n] -> [relation degree]. Closure under position permutations is
    // automatic since permutations compose with surjections to surjections.
    std::vector<std::map<std::size_t, Rat>> rel_rows;
    for (const auto& rel : pres_.relations) {
        for (const auto& f1 : enumerate_surjections(n, rel.degree)) {
            std::vector<int> f(f1.size());
            for (std::size_t j = 0; j < f1.size(); ++j) f[j] = f1[j] - 1;
            std::map<std::size_t, Rat> row;
            for (const auto& t : rel.terms) {
                std::size_t col = ev.index.at({t.gen, compose_word(t.word, f)});
                auto [rit, fresh] = row.emplace(col, t.coef);
                if (!fresh) rit->second += t.coef;
            }
            rel_rows.push_back(std::move(row));
        }
    }
    RatMatrix rels(rel_rows.size(), ev.free_dim);
    for (std::size_t r = 0; r < rel_rows.size(); ++r)
        for (const auto& [c, v] : rel_rows[r]) rels.set(r, c, v);
    ev.relation_echelon = echelon_form(rels);
    std::vector<bool> is_pivot(ev.free_dim, false);
    for (std::size_t c : ev.relation_echelon.pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < ev.free_dim; ++c)
        if (!is_pivot[c]) ev.quotient_cols.push_back(c);
    ev.quotient_dim = ev.quotient_cols.size();
    return cache_.emplace(n, std::move(ev)).first->second;
}

std::vector<std::size_t> FsopModule::hilbert_dims(long max_n) const {
    std::vector<std::size_t> out;
    for (long n = 0; n <= max_n; ++n) out.push_back(at(n).quotient_dim);
    return out;
}

// Reduce a free-space vector modulo the relation space and read off its
// quotient-basis coordinates.
static std::vector<Rat> quotient_coords(const DegreeEvaluation& ev, std::vector<Rat>& v) {
    reduce_against(ev.relation_echelon, v);
    std::vector<Rat> out(ev.quotient_dim);
    for (std::size_t i = 0; i < ev.quotient_dim; ++i) out[i] = v[ev.quotient_cols[i]];
    return out;
}

RatMatrix FsopModule::induced_map(long n, long m, const std::vector<int>& f) const {
    const DegreeEvaluation& src = at(n);
    const DegreeEvaluation& dst = at(m);
    RatMatrix out(dst.quotient_dim, src.quotient_dim);
    for (std::size_t c = 0; c < src.quotient_dim; ++c) {
        const auto& [gen, w] = src.basis[src.quotient_cols[c]];
        std::vector<Rat> v(dst.free_dim, Rat(0));
        v[dst.index.at({gen, compose_word(w, f)})] = 1;
        std::vector<Rat> coords = quotient_coords(dst, v);
        for (std::size_t r = 0; r < coords.size(); ++r)
            if (coords[r] != 0) out.set(r, c, coords[r]);
    }
    return out;
}

Rat FsopModule::trace_of(long n, const std::vector<int>& perm) const {
    const DegreeEvaluation& ev = at(n);
    // Trace on the free space: fixed basis words.
    Rat tr_free = 0;
    for (const auto& [gen, w] : ev.basis)
        if (compose_word(w, perm) == w) tr_free += 1;
    // Trace on the relation space: solve P B = B C for the echelon basis B.
    std::size_t rk = ev.relation_echelon.rank;
    Rat tr_rel = 0;
    if (rk > 0) {
        RatMatrix b(ev.free_dim, rk);
        RatMatrix pb(ev.free_dim, rk);
        for (std::size_t j = 0; j < rk; ++j)
            for (const auto& [c, v] : ev.relation_echelon.rows[j]) {
                b.set(c, j, v);
                // Basis vector e_{(gen,w)} maps to e_{(gen, w o perm)}.
                const auto& [gen, w] = ev.basis[c];
                pb.set(ev.index.at({gen, compose_word(w, perm)}), j, v);
            }
        RatMatrix c = solve_in_span(b, pb);
        for (std::size_t j = 0; j < rk; ++j) tr_rel += c.get(j, j);
    }
    return tr_free - tr_rel;
}

bool verify_rational_tail(const std::vector<std::size_t>& dims, const IntPolynomial& denom,
                          std::size_t from_degree) {
    std::size_t deg = denom.empty() ? 0 : denom.size() - 1;
    if (dims.size() < from_degree + deg + 1)
        throw std::runtime_error("verify_rational_tail: window too short");
    for (std::size_t k = from_degree; k < dims.size(); ++k) {
        Rat c = 0;
        for (std::size_t j = 0; j < denom.size() && j <= k; ++j)
            c += Rat(denom[j]) * Rat(static_cast<long>(dims[k - j]));
        if (c != 0) return false;
    }
    return true;
}

namespace {

// The P(d_1) x ... x P(d_r) representation (p_1,..,p_r) -> M_{[n]+p_1+..+p_r}
// used by all the complexes below.
struct PartitionRepData {
    std::vector<FinitePoset> factors;
    std::vector<std::vector<std::vector<std::vector<std::size_t>>>> blocks; // per factor
    FinitePoset product;
    long n;

    long degree_at(std::size_t idx) const {
        auto t = product_decode(factors, idx);
        long deg = n;
        for (std::size_t f = 0; f < factors.size(); ++f)
            deg += static_cast<long>(blocks[f][t[f]].size());
        return deg;
    }

    // Surjection [deg(q)] -> [deg(p)] for p <= q: identity on [n], blocks of
    // each refined partition onto the containing coarser block.
    std::vector<int> surjection(std::size_t p, std::size_t q) const {
        auto tp = product_decode(factors, p);
        auto tq = product_decode(factors, q);
        std::vector<int> f(n);
        for (long i = 0; i < n; ++i) f[i] = static_cast<int>(i);
        long off_p = n;
        for (std::size_t fac = 0; fac < factors.size(); ++fac) {
            const auto& bp = blocks[fac][tp[fac]];
            const auto& bq = blocks[fac][tq[fac]];
            for (const auto& blk : bq) {
                // Locate the coarse block containing this refined block.
                std::size_t host = 0;
                for (std::size_t j = 0; j < bp.size(); ++j)
                    if (std::binary_search(bp[j].begin(), bp[j].end(), blk[0])) { host = j; break; }
                f.push_back(static_cast<int>(off_p + host));
            }
            off_p += static_cast<long>(bp.size());
        }
        return f;
    }
};

PartitionRepData make_rep_data(const FsopModule&, const std::vector<long>& ds, long n) {
    PartitionRepData rd;
    for (long d : ds) {
        rd.factors.push_back(partition_lattice(d));
        rd.blocks.push_back(partition_lattice_blocks(d));
    }
    rd.product = product_poset(rd.factors);
    rd.n = n;
    return rd;
}

PosetRep make_rep(const FsopModule& m, const PartitionRepData& rd) {
    std::vector<std::size_t> dims(rd.product.size());
    for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = m.dim_at(rd.degree_at(i));
    return PosetRep(rd.product, dims, [&](std::size_t p, std::size_t q) {
        return m.induced_map(rd.degree_at(p), rd.degree_at(q), rd.surjection(p, q));
    });
}

} // namespace

RationalChainComplex bd_complex_at(const FsopModule& m, long d, long n) {
    if (d < 1) throw std::runtime_error("bd_complex_at: d must be positive");
    PartitionRepData rd = make_rep_data(m, {d}, n);
    return bar_complex(make_rep(m, rd));
}

RationalChainComplex kd_complex_at(const FsopModule& m, long d, long n) {
    if (d < 1) throw std::runtime_error("kd_complex_at: d must be positive");
    PartitionRepData rd = make_rep_data(m, {d}, n);
    // Partition lattices are Cohen-Macaulay from the top; certified in tests.
    return koszul_complex(make_rep(m, rd), true);
}

RationalChainComplex iterated_bd_at(const FsopModule& m, const std::vector<long>& ds, long n) {
    if (ds.empty()) throw std::runtime_error("iterated_bd_at: empty iteration");
    PartitionRepData rd = make_rep_data(m, ds, n);
    return multi_bar_complex(rd.factors, make_rep(m, rd));
}

bool check_type_less(const FsopModule& m, const std::vector<long>& j, long n_lo, long n_hi,
                     long slack) {
    std::vector<long> ls(j.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t t) {
        if (t == j.size()) {
            for (long n = n_lo; n <= n_hi; ++n)
                if (!iterated_bd_at(m, ls, n).is_exact()) return false;
            return true;
        }
        for (long l = j[t]; l <= j[t] + slack; ++l) {
            ls[t] = l;
            if (!rec(t + 1)) return false;
        }
        return true;
    };
    return rec(0);
}

std::map<Partition, Rat, PartitionLess> sn_character(const FsopModule& m, long n) {
    std::map<Partition, Rat, PartitionLess> out;
    for (const Partition& lam : partitions_of(n))
        out.emplace(lam, m.trace_of(n, cycle_type_rep(lam, n)));
    return out;
}

SymFunc frobenius_character(const FsopModule& m, long max_n) {
    SymFunc out(max_n);
    for (long n = 0; n <= max_n; ++n)
        for (const auto& [lam, tr] : sn_character(m, n))
            if (tr != 0) out.add_term(lam, tr / z_of(lam));
    return out;
}

std::map<Partition, SymFunc, PartitionLess> character_of_bd(const FsopModule& m, long d,
                                                            long max_n) {
    if (max_n + d > m.degree_bound())
        throw std::runtime_error("character_of_bd: degree bound exceeded");
    FinitePoset pl = partition_lattice(d);
    auto blocks = partition_lattice_blocks(d);
    std::map<std::vector<std::vector<std::size_t>>, std::size_t> block_index;
    for (std::size_t i = 0; i < blocks.size(); ++i) block_index.emplace(blocks[i], i);
    auto chains = descending_chains(pl);
    std::size_t top = *pl.top();

    std::map<Partition, SymFunc, PartitionLess> out;
    for (const Partition& lam : partitions_of(d)) {
        std::vector<int> sigma = cycle_type_rep(lam, d);
        // Image of each lattice element under sigma.
        std::vector<std::size_t> image(pl.size());
        for (std::size_t i = 0; i < pl.size(); ++i) {
            auto bs = blocks[i];
            for (auto& blk : bs)
                for (auto& x : blk) x = static_cast<std::size_t>(sigma[x]);
            for (auto& blk : bs) std::sort(blk.begin(), blk.end());
            std::sort(bs.begin(), bs.end());
            image[i] = block_index.at(bs);
        }
        // Count sigma-fixed chains per (homological degree, chain bottom).
        // All chains with the same bottom contribute the same trace.
        std::map<std::pair<std::size_t, std::size_t>, long> fixed_count;
        for (std::size_t s = 0; s < chains.size(); ++s)
            for (const auto& ch : chains[s]) {
                bool fixed = true;
                for (std::size_t x : ch)
                    if (image[x] != x) { fixed = false; break; }
                if (fixed) ++fixed_count[{s, ch.empty() ? top : ch.back()}];
            }

        SymFunc val(max_n);
        for (const auto& [key, count] : fixed_count) {
            auto [s, bottom] = key;
            const auto& bs = blocks[bottom];
            long k = static_cast<long>(bs.size());
            // Permutation induced by sigma on the blocks of the bottom.
            std::vector<int> block_perm(k);
            for (long j = 0; j < k; ++j) {
                std::vector<std::size_t> img;
                for (std::size_t x : bs[j]) img.push_back(static_cast<std::size_t>(sigma[x]));
                std::sort(img.begin(), img.end());
                for (long i = 0; i < k; ++i)
                    if (bs[i] == img) { block_perm[j] = static_cast<int>(i); break; }
            }
            Rat sign = (s % 2 == 0) ? 1 : -1;
            for (long n = 0; n <= max_n; ++n) {
                for (const Partition& mu : partitions_of(n)) {
                    std::vector<int> tau = cycle_type_rep(mu, n);
                    std::vector<int> pi(n + k);
                    for (long i = 0; i < n; ++i) pi[i] = tau[i];
                    for (long j = 0; j < k; ++j) pi[n + j] = static_cast<int>(n) + block_perm[j];
                    Rat tr = m.trace_of(n + k, pi);
                    if (tr != 0) val.add_term(mu, sign * Rat(count) * tr / z_of(mu));
                }
            }
        }
        out.emplace(lam, val.scaled(1 / z_of(lam)));
    }
    return out;
}

std::string fsop_json(const FsopPresentation& p) {
    nlohmann::ordered_json j;
    j["generators"] = p.generator_degrees;
    j["relations"] = nlohmann::json::array();
    for (const auto& rel : p.relations) {
        nlohmann::ordered_json r;
        r["degree"] = rel.degree;
        r["terms"] = nlohmann::json::array();
        for (const auto& t : rel.terms) {
            nlohmann::ordered_json tt;
            tt["gen"] = t.gen;
            std::string w;
            for (int c : t.word) w += static_cast<char>('0' + c);
            tt["word"] = w;
            tt["coef"] = rat_str(t.coef);
            r["terms"].push_back(tt);
        }
        j["relations"].push_back(r);
    }
    return j.dump();
}

FsopPresentation fsop_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FsopPresentation p;
    p.generator_degrees = j.at("generators").get<std::vector<long>>();
    for (const auto& r : j.at("relations")) {
        FsopRelation rel;
        rel.degree = r.at("degree").get<long>();
        for (const auto& t : r.at("terms")) {
            RelationTerm term;
            term.gen = t.at("gen").get<std::size_t>();
            for (char c : t.at("word").get<std::string>()) {
                if (c < '1' || c > '9') throw std::runtime_error("bad word digit");
                term.word.push_back(c - '0');
            }
            term.coef = rat_parse(t.at("coef").get<std::string>());
            rel.terms.push_back(std::move(term));
        }
        p.relations.push_back(std::move(rel));
    }
    p.validate();
    return p;
}

} // namespace fstk
