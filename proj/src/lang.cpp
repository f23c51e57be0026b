#include "fstk/lang.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace fstk {

Word word_of(const std::string& s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        if (c < 'a' || c > 'z') throw std::runtime_error("word letters must be a..z");
        w.push_back(c - 'a');
    }
    return w;
}

std::string word_str(const Word& w) {
    std::string s;
    for (int a : w) s.push_back(static_cast<char>('a' + a));
    return s;
}

void Dfa::validate() const {
    if (alphabet < 0) throw std::runtime_error("negative alphabet");
    if (delta.size() != state_count || accepts.size() != state_count)
        throw std::runtime_error("dfa table size mismatch");
    if (start >= state_count) throw std::runtime_error("dfa start out of range");
    for (const auto& row : delta) {
        if (row.size() != static_cast<std::size_t>(alphabet))
            throw std::runtime_error("dfa transition row size mismatch");
        for (std::size_t t : row)
            if (t >= state_count) throw std::runtime_error("dfa transition out of range");
    }
}

bool Dfa::accepts_word(const Word& w) const {
    std::size_t q = start;
    for (int a : w) {
        if (a < 0 || a >= alphabet) throw std::runtime_error("letter outside alphabet");
        q = delta[q][a];
    }
    return accepts[q];
}

namespace {

struct Nfa {
    // edges[q] = list of (letter, target); letter -1 is an epsilon edge.
    std::vector<std::vector<std::pair<int, int>>> edges;

    int fresh() {
        edges.emplace_back();
        return static_cast<int>(edges.size()) - 1;
    }
};

struct Frag {
    int start, accept;
};

class RegexParser {
  public:
    RegexParser(const std::string& s, long d, Nfa& nfa) : s_(s), d_(d), nfa_(nfa) {}

    Frag run() {
        Frag f = parse_union();
        if (pos_ != s_.size()) fail();
        return f;
    }

  private:
    [[noreturn]] void fail() const {
        throw std::runtime_error("regex syntax error at position " + std::to_string(pos_));
    }
    bool more() const { return pos_ < s_.size(); }
    char peek() const { return s_[pos_]; }
    bool at_letter() const { return more() && peek() >= 'a' && peek() < 'a' + d_; }

    Frag epsilon() {
        int s = nfa_.fresh(), t = nfa_.fresh();
        nfa_.edges[s].push_back({-1, t});
        return {s, t};
    }

    Frag parse_union() {
        Frag f = parse_concat();
        while (more() && peek() == '|') {
            ++pos_;
            Frag g = parse_concat();
            int s = nfa_.fresh(), t = nfa_.fresh();
            nfa_.edges[s].push_back({-1, f.start});
            nfa_.edges[s].push_back({-1, g.start});
            nfa_.edges[f.accept].push_back({-1, t});
            nfa_.edges[g.accept].push_back({-1, t});
            f = {s, t};
        }
        return f;
    }

    Frag parse_concat() {
        Frag f = epsilon();
        while (at_letter() || (more() && peek() == '(')) {
            Frag g = parse_atom();
            while (more() && peek() == '*') {
                ++pos_;
                int s = nfa_.fresh(), t = nfa_.fresh();
                nfa_.edges[s].push_back({-1, g.start});
                nfa_.edges[s].push_back({-1, t});
                nfa_.edges[g.accept].push_back({-1, g.start});
                nfa_.edges[g.accept].push_back({-1, t});
                g = {s, t};
            }
            nfa_.edges[f.accept].push_back({-1, g.start});
            f = {f.start, g.accept};
        }
        return f;
    }

    Frag parse_atom() {
        if (peek() == '(') {
            ++pos_;
            Frag f = parse_union();
            if (!more() || peek() != ')') fail();
            ++pos_;
            return f;
        }
        if (!at_letter()) fail();
        int s = nfa_.fresh(), t = nfa_.fresh();
        nfa_.edges[s].push_back({peek() - 'a', t});
        ++pos_;
        return {s, t};
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    long d_;
    Nfa& nfa_;
};

std::set<int> eps_closure(const Nfa& nfa, std::set<int> states) {
    std::vector<int> stack(states.begin(), states.end());
    while (!stack.empty()) {
        int q = stack.back();
        stack.pop_back();
        for (const auto& [letter, to] : nfa.edges[q])
            if (letter == -1 && states.insert(to).second) stack.push_back(to);
    }
    return states;
}

Dfa subset_construction(const Nfa& nfa, const Frag& frag, long d) {
    std::map<std::set<int>, std::size_t> ids;
    std::vector<std::set<int>> subsets;
    auto intern = [&](const std::set<int>& s) {
        auto [it, fresh] = ids.emplace(s, subsets.size());
        if (fresh) subsets.push_back(s);
        return it->second;
    };
    intern(eps_closure(nfa, {frag.start}));

    Dfa out;
    out.alphabet = d;
    for (std::size_t q = 0; q < subsets.size(); ++q) {
        out.delta.emplace_back();
        for (long a = 0; a < d; ++a) {
            std::set<int> next;
            for (int p : subsets[q])
                for (const auto& [letter, to] : nfa.edges[p])
                    if (letter == a) next.insert(to);
            out.delta[q].push_back(intern(eps_closure(nfa, std::move(next))));
        }
    }
    out.state_count = subsets.size();
    out.start = 0;
    out.accepts.resize(out.state_count);
    for (std::size_t q = 0; q < out.state_count; ++q)
        out.accepts[q] = subsets[q].count(frag.accept) > 0;
    return out;
}

// Partition refinement to the coarsest congruence separating accept from
// reject states; classes are numbered by their smallest member.
Dfa minimize(const Dfa& in) {
    std::size_t n = in.state_count;
    std::vector<std::size_t> cls(n);
    for (std::size_t q = 0; q < n; ++q) cls[q] = in.accepts[q] ? 1 : 0;
    for (;;) {
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> sig_ids;
        std::vector<std::size_t> next(n);
        for (std::size_t q = 0; q < n; ++q) {
            std::vector<std::size_t> image;
            for (long a = 0; a < in.alphabet; ++a) image.push_back(cls[in.delta[q][a]]);
            auto key = std::make_pair(cls[q], std::move(image));
            auto [it, fresh] = sig_ids.emplace(std::move(key), sig_ids.size());
            next[q] = it->second;
        }
        bool stable = true;
        for (std::size_t q = 0; q < n && stable; ++q)
            for (std::size_t p = 0; p < q && stable; ++p)
                if ((cls[p] == cls[q]) != (next[p] == next[q])) stable = false;
        cls = std::move(next);
        if (stable) break;
    }
    // Renumber classes by smallest member state.
    std::map<std::size_t, std::size_t> renum;
    for (std::size_t q = 0; q < n; ++q) renum.emplace(cls[q], renum.size());
    std::size_t m = renum.size();

    Dfa out;
    out.state_count = m;
    out.alphabet = in.alphabet;
    out.start = renum.at(cls[in.start]);
    out.delta.assign(m, {});
    out.accepts.assign(m, false);
    for (std::size_t q = 0; q < n; ++q) {
        std::size_t c = renum.at(cls[q]);
        if (!out.delta[c].empty()) continue;
        for (long a = 0; a < in.alphabet; ++a)
            out.delta[c].push_back(renum.at(cls[in.delta[q][a]]));
        out.accepts[c] = in.accepts[q];
    }
    return out;
}

Dfa prune_unreachable(const Dfa& in) {
    std::vector<bool> seen(in.state_count, false);
    std::queue<std::size_t> bfs;
    seen[in.start] = true;
    bfs.push(in.start);
    std::vector<std::size_t> order;
    while (!bfs.empty()) {
        std::size_t q = bfs.front();
        bfs.pop();
        order.push_back(q);
        for (std::size_t t : in.delta[q])
            if (!seen[t]) {
                seen[t] = true;
                bfs.push(t);
            }
    }
    std::vector<std::size_t> renum(in.state_count);
    for (std::size_t i = 0; i < order.size(); ++i) renum[order[i]] = i;

    Dfa out;
    out.state_count = order.size();
    out.alphabet = in.alphabet;
    out.start = renum[in.start];
    for (std::size_t q : order) {
        out.delta.emplace_back();
        for (std::size_t t : in.delta[q]) out.delta.back().push_back(renum[t]);
        out.accepts.push_back(in.accepts[q]);
    }
    return out;
}

} // namespace

Dfa parse_regex(const std::string& expr, long alphabet) {
    if (alphabet < 1 || alphabet > 26) throw std::runtime_error("alphabet size out of range");
    Nfa nfa;
    RegexParser parser(expr, alphabet, nfa);
    Frag frag = parser.run();
    Dfa d = prune_unreachable(minimize(subset_construction(nfa, frag, alphabet)));
    d.validate();
    return d;
}

std::string dfa_json(const Dfa& d) {
    nlohmann::ordered_json j;
    j["states"] = d.state_count;
    j["alphabet"] = d.alphabet;
    j["delta"] = d.delta;
    j["start"] = d.start;
    auto acc = nlohmann::json::array();
    for (std::size_t q = 0; q < d.state_count; ++q)
        if (d.accepts[q]) acc.push_back(q);
    j["accepts"] = acc;
    return j.dump();
}

Dfa dfa_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Dfa d;
    d.state_count = j.at("states").get<std::size_t>();
    d.alphabet = j.at("alphabet").get<long>();
    d.delta = j.at("delta").get<std::vector<std::vector<std::size_t>>>();
    d.start = j.at("start").get<std::size_t>();
    d.accepts.assign(d.state_count, false);
    for (std::size_t q : j.at("accepts").get<std::vector<std::size_t>>()) d.accepts.at(q) = true;
    d.validate();
    return d;
}

std::size_t OrderedDfa::length() const {
    // Longest chain in the order, by depth DP over the strict relation.
    std::size_t n = dfa.state_count;
    std::vector<std::size_t> depth(n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (x != y && leq[x][y] && depth[x] + 1 > depth[y]) {
                    depth[y] = depth[x] + 1;
                    changed = true;
                }
    }
    return *std::max_element(depth.begin(), depth.end());
}

std::optional<OrderedDfa> reachability_order(const Dfa& d) {
    d.validate();
    Dfa c = prune_unreachable(d);
    std::size_t n = c.state_count;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t q = 0; q < n; ++q) {
        leq[q][q] = true;
        std::queue<std::size_t> bfs;
        bfs.push(q);
        while (!bfs.empty()) {
            std::size_t x = bfs.front();
            bfs.pop();
            for (std::size_t t : c.delta[x])
                if (!leq[q][t]) {
                    leq[q][t] = true;
                    bfs.push(t);
                }
        }
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (leq[x][y] && leq[y][x]) return std::nullopt;
    return OrderedDfa{std::move(c), std::move(leq)};
}

OrderedDfa truncate_dfa(const OrderedDfa& a, std::size_t s) {
    if (s >= a.dfa.state_count) throw std::runtime_error("truncation state out of range");
    std::vector<std::size_t> keep;
    std::vector<std::size_t> renum(a.dfa.state_count, 0);
    for (std::size_t q = 0; q < a.dfa.state_count; ++q)
        if (a.leq[s][q]) {
            renum[q] = keep.size();
            keep.push_back(q);
        }
    Dfa d;
    d.state_count = keep.size();
    d.alphabet = a.dfa.alphabet;
    d.start = renum[s];
    std::vector<std::vector<bool>> leq(keep.size(), std::vector<bool>(keep.size(), false));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        d.delta.emplace_back();
        for (std::size_t t : a.dfa.delta[keep[i]]) d.delta.back().push_back(renum[t]);
        d.accepts.push_back(a.dfa.accepts[keep[i]]);
        for (std::size_t j = 0; j < keep.size(); ++j) leq[i][j] = a.leq[keep[i]][keep[j]];
    }
    d.validate();
    return OrderedDfa{std::move(d), std::move(leq)};
}

bool star_property_check(const Dfa& a, long max_len) {
    std::vector<Word> layer{{}};
    for (long len = 0; len <= max_len; ++len) {
        for (const Word& w : layer) {
            if (!a.accepts_word(w)) continue;
            for (std::size_t i = 0; i < w.size(); ++i)
                for (std::size_t j = i + 1; j <= w.size(); ++j) {
                    Word dup(w.begin(), w.begin() + j);
                    dup.push_back(w[i]);
                    dup.insert(dup.end(), w.begin() + j, w.end());
                    if (!a.accepts_word(dup)) return false;
                }
        }
        if (len == max_len) break;
        std::vector<Word> next;
        next.reserve(layer.size() * a.alphabet);
        for (const Word& w : layer)
            for (int c = 0; c < a.alphabet; ++c) {
                next.push_back(w);
                next.back().push_back(c);
            }
        layer = std::move(next);
    }
    return true;
}

WordFactorization factor_word(const Word& w,
                              const std::vector<std::vector<std::size_t>>& blocks) {
    WordFactorization out{w, blocks, std::nullopt};
    Word quotient;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::runtime_error("empty block");
        if (b > 0 && blocks[b][0] <= blocks[b - 1][0])
            throw std::runtime_error("blocks not sorted by minimum");
        int letter = w.at(blocks[b][0]);
        for (std::size_t pos : blocks[b])
            if (w.at(pos) != letter) return out;
        quotient.push_back(letter);
    }
    std::size_t covered = 0;
    for (const auto& b : blocks) covered += b.size();
    if (covered != w.size()) throw std::runtime_error("blocks do not cover the word");
    out.quotient = std::move(quotient);
    return out;
}

WordIdeal ideal_I(const Word& w, const Dfa& a) {
    a.validate();
    std::size_t n = w.size();
    if (n < 1 || n > poset_bounds().partition_max)
        throw std::runtime_error("word length outside the partition lattice bounds");
    auto poset = std::make_shared<const FinitePoset>(partition_lattice(n));
    auto blocks = partition_lattice_blocks(n);
    PosetIdeal ideal{poset.get(), std::vector<bool>(poset->size(), false)};
    for (std::size_t p = 0; p < poset->size(); ++p) {
        auto fac = factor_word(w, blocks[p]);
        ideal.members[p] = fac.quotient && a.accepts_word(*fac.quotient);
    }
    if (star_property_check(a, static_cast<long>(n))) ideal.validate();
    return WordIdeal{std::move(poset), std::move(ideal)};
}

TupleIdeal ideal_J(const std::vector<Word>& words, const Dfa& a) {
    a.validate();
    if (words.empty()) throw std::runtime_error("empty word tuple");
    std::size_t total = 0;
    TupleIdeal out;
    std::vector<std::vector<std::vector<std::vector<std::size_t>>>> blocks;
    for (const Word& w : words) {
        if (w.empty() || w.size() > poset_bounds().partition_max)
            throw std::runtime_error("word length outside the partition lattice bounds");
        total += w.size();
        out.factors.push_back(partition_lattice(w.size()));
        blocks.push_back(partition_lattice_blocks(w.size()));
    }
    if (total > 10) throw std::runtime_error("total word length above the supported bound");
    out.product = std::make_shared<const FinitePoset>(product_poset(out.factors));
    out.ideal.poset = out.product.get();
    out.ideal.members.assign(out.product->size(), false);
    for (std::size_t idx = 0; idx < out.product->size(); ++idx) {
        auto tuple = product_decode(out.factors, idx);
        Word quotient;
        bool ok = true;
        for (std::size_t t = 0; t < words.size() && ok; ++t) {
            auto fac = factor_word(words[t], blocks[t][tuple[t]]);
            if (!fac.quotient)
                ok = false;
            else
                quotient.insert(quotient.end(), fac.quotient->begin(), fac.quotient->end());
        }
        out.ideal.members[idx] = ok && a.accepts_word(quotient);
    }
    if (star_property_check(a, static_cast<long>(total))) out.ideal.validate();
    return out;
}

LanguagesTheoremReport verify_languages_theorem(const OrderedDfa& a,
                                                const std::vector<Word>& words,
                                                long star_bound) {
    LanguagesTheoremReport rep;
    long d = a.dfa.alphabet;
    std::size_t r = words.size();
    rep.dfa_length = a.length();
    rep.star_ok = star_property_check(a.dfa, star_bound);
    rep.r_ok = r >= rep.dfa_length;
    rep.lengths_ok = true;
    for (std::size_t t = 0; t < r; ++t) {
        long need = (t + 1 < r) ? d : d + 1;
        if (static_cast<long>(words[t].size()) < need) rep.lengths_ok = false;
    }
    rep.hypotheses_met = rep.star_ok && rep.r_ok && rep.lengths_ok;

    TupleIdeal ideal = ideal_J(words, a.dfa);
    PosetRep m = ideal_rep(ideal.ideal);
    RationalChainComplex c = multi_bar_complex(ideal.factors, m);
    rep.homology = c.homology_dims();
    rep.exact = c.is_exact();
    if (rep.hypotheses_met && !rep.exact)
        throw std::logic_error("hypotheses hold but the complex is not exact");
    return rep;
}

bool os_word_less(const SurjWord& u, const SurjWord& v) {
    if (u.size() != v.size()) throw std::runtime_error("word length mismatch");
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

bool is_ordered_surjection(const SurjWord& f) {
    int seen = 0;
    for (int a : f) {
        if (a > seen + 1) return false;
        seen = std::max(seen, a);
    }
    return true;
}

bool os_order_axiom_check(long d, long max_n) {
    for (long m = d; m <= max_n; ++m) {
        auto words = enumerate_surjections(m, d);
        for (long n = m; n <= max_n; ++n)
            for (const SurjWord& f : enumerate_surjections(n, m)) {
                if (!is_ordered_surjection(f)) continue;
                std::vector<int> f0(f.size());
                for (std::size_t i = 0; i < f.size(); ++i) f0[i] = f[i] - 1;
                for (std::size_t i = 0; i < words.size(); ++i)
                    for (std::size_t j = i + 1; j < words.size(); ++j) {
                        // words is lex sorted: words[i] < words[j].
                        if (!os_word_less(compose_word(words[i], f0),
                                          compose_word(words[j], f0)))
                            return false;
                    }
            }
    }
    return true;
}

namespace {

// Row span of the submodule at one degree, with columns in decreasing word
// order so that echelon pivots are the leading words.
struct DegreeInit {
    std::vector<SurjWord> words_desc;
    Echelon ech;
};

DegreeInit degree_elimination(long d, const std::vector<OsElement>& gens, long n) {
    DegreeInit out;
    out.words_desc = enumerate_surjections(n, d);
    std::reverse(out.words_desc.begin(), out.words_desc.end());
    std::map<SurjWord, std::size_t> col;
    for (std::size_t i = 0; i < out.words_desc.size(); ++i) col.emplace(out.words_desc[i], i);

    std::vector<std::map<std::size_t, Rat>> rows;
    for (const OsElement& g : gens) {
        if (g.degree > n) continue;
        for (const SurjWord& f : enumerate_surjections(n, g.degree)) {
            if (!is_ordered_surjection(f)) continue;
            std::vector<int> f0(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) f0[i] = f[i] - 1;
            std::map<std::size_t, Rat> row;
            for (const auto& [w, c] : g.terms) {
                auto [it, fresh] = row.emplace(col.at(compose_word(w, f0)), c);
                if (!fresh) it->second += c;
            }
            rows.push_back(std::move(row));
        }
    }
    RatMatrix m(rows.size(), out.words_desc.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) m.set(r, c, v);
    out.ech = echelon_form(m);
    return out;
}

} // namespace

std::vector<std::set<SurjWord>> init_ideal(long d, const std::vector<OsElement>& gens,
                                           long max_n) {
    for (const OsElement& g : gens)
        for (const auto& [w, c] : g.terms)
            if (static_cast<long>(w.size()) != g.degree)
                throw std::runtime_error("generator term length mismatch");
    std::vector<std::set<SurjWord>> out(max_n + 1);
    for (long n = 0; n <= max_n; ++n) {
        DegreeInit di = degree_elimination(d, gens, n);
        for (std::size_t c : di.ech.pivot_cols) out[n].insert(di.words_desc[c]);
    }
    return out;
}

bool assoc_graded_check(long d, const std::vector<OsElement>& gens, long max_n) {
    auto init = init_ideal(d, gens, max_n);
    for (long n = 0; n <= max_n; ++n) {
        // The filtration jumps of the degree-n span must be exactly the
        // initial words (one jump per pivot under the word order).
        DegreeInit di = degree_elimination(d, gens, n);
        if (di.ech.rank != init[n].size()) return false;
        // Closure under ordered precomposition from the lower degrees.
        for (long m = 1; m < n; ++m)
            for (const SurjWord& w : init[m])
                for (const SurjWord& f : enumerate_surjections(n, m)) {
                    if (!is_ordered_surjection(f)) continue;
                    std::vector<int> f0(f.size());
                    for (std::size_t i = 0; i < f.size(); ++i) f0[i] = f[i] - 1;
                    if (!init[n].count(compose_word(w, f0))) return false;
                }
    }
    return true;
}

} // namespace fstk
