#pragma once

#include "fstk/fsop.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>

namespace fstk {

// Words over a d-letter alphabet, letters 0..d-1.
using Word = std::vector<int>;

Word word_of(const std::string& s); // 'a' -> 0, 'b' -> 1, ...
std::string word_str(const Word& w);

// Complete deterministic automaton: delta[state][letter] is total.
struct Dfa {
    std::size_t state_count = 0;
    long alphabet = 0;
    std::vector<std::vector<std::size_t>> delta;
    std::size_t start = 0;
    std::vector<bool> accepts;

    void validate() const;
    bool accepts_word(const Word& w) const;
};

// Minimal complete DFA: syntax tree -> Thompson NFA -> subset construction ->
// Hopcroft minimization, unreachable states pruned. Grammar: letters,
// juxtaposition, "|", "*", parentheses. Throws std::runtime_error with the
// offending position on bad syntax.
Dfa parse_regex(const std::string& expr, long alphabet);

std::string dfa_json(const Dfa& d);
Dfa dfa_from_json(const std::string& text);

// DFA together with its reachability order: x <= y iff some word drives x to
// y. Only exists when that preorder is antisymmetric.
struct OrderedDfa {
    Dfa dfa;
    std::vector<std::vector<bool>> leq;

    std::size_t length() const; // elements in a longest chain
};

// Prunes states unreachable from the start, then orders by reachability.
// Empty when two distinct states reach each other.
std::optional<OrderedDfa> reachability_order(const Dfa& d);

// Keep the states >= s with s as the new start; transitions stay inside
// because the automaton is ordered.
OrderedDfa truncate_dfa(const OrderedDfa& a, std::size_t s);

// Bounded check of the duplication property: w1 a w2 w3 in L implies
// w1 a w2 a w3 in L, verified for all accepted words up to max_len.
bool star_property_check(const Dfa& a, long max_len);

struct WordFactorization {
    Word word;
    std::vector<std::vector<std::size_t>> blocks; // sorted by minimum
    std::optional<Word> quotient;                 // letter per block, if constant
};

WordFactorization factor_word(const Word& w,
                              const std::vector<std::vector<std::size_t>>& blocks);

// Upward ideal of partitions p such that w factors through p with accepted
// quotient word, together with the partition lattice it lives in. Upward
// closure is asserted whenever the bounded duplication check passes.
struct WordIdeal {
    std::shared_ptr<const FinitePoset> poset;
    PosetIdeal ideal;
};

WordIdeal ideal_I(const Word& w, const Dfa& a);

// Restriction of the concatenated-word ideal to the embedded product of
// partition lattices P(l_1) x ... x P(l_r).
struct TupleIdeal {
    std::vector<FinitePoset> factors;
    std::shared_ptr<const FinitePoset> product;
    PosetIdeal ideal;
};

TupleIdeal ideal_J(const std::vector<Word>& words, const Dfa& a);

struct LanguagesTheoremReport {
    std::size_t dfa_length = 0;
    bool star_ok = false;    // bounded check
    bool r_ok = false;       // r >= length of the automaton
    bool lengths_ok = false; // l_t >= d for t < r, l_r >= d + 1
    bool hypotheses_met = false;
    std::vector<std::size_t> homology;
    bool exact = false;
};

// Builds the product-lattice representation of the tuple ideal and runs the
// iterated chain construction. Throws std::logic_error if the hypotheses hold
// but the complex fails to be exact.
LanguagesTheoremReport verify_languages_theorem(const OrderedDfa& a,
                                                const std::vector<Word>& words,
                                                long star_bound = 8);

// Length-stratified lexicographic order on surjection words, 1 < 2 < ... < d.
// Throws on length mismatch.
bool os_word_less(const SurjWord& u, const SurjWord& v);

// True iff the word of f (values 1..m) has its first occurrences in
// increasing order, i.e. f is an ordered surjection.
bool is_ordered_surjection(const SurjWord& f);

// Exhaustive check that precomposition with ordered surjections strictly
// preserves os_word_less, for all word lengths up to max_n.
bool os_order_axiom_check(long d, long max_n);

// Element of the free module on one degree-d generator: a formal sum of
// surjective words of one common length.
struct OsElement {
    long degree = 0;
    std::vector<std::pair<SurjWord, Rat>> terms;
};

// Leading words (maximal under os_word_less) of the submodule generated by
// `gens` under ordered precomposition, per degree 0..max_n.
std::vector<std::set<SurjWord>> init_ideal(long d, const std::vector<OsElement>& gens,
                                           long max_n);

// The initial module is an honest submodule: per degree, its dimension equals
// the filtration-jump count of the generated submodule, and it is closed
// under ordered precomposition from lower degrees.
bool assoc_graded_check(long d, const std::vector<OsElement>& gens, long max_n);

} // namespace fstk
