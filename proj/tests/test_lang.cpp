#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fstk/lang.hpp"

#include <random>

using namespace fstk;

namespace {

std::size_t partition_index(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
    auto all = partition_lattice_blocks(n);
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == blocks) return i;
    throw std::runtime_error("partition not found");
}

const char* kExampleRegex = "ab*a(a*b*)*";

} // namespace

TEST_CASE("regex to minimal dfa") {
    Dfa a = parse_regex("a", 2);
    CHECK(a.state_count == 3); // start, accept, sink
    CHECK(a.accepts_word(word_of("a")));
    CHECK_FALSE(a.accepts_word(word_of("aa")));
    CHECK_FALSE(a.accepts_word(word_of("b")));
    CHECK_FALSE(a.accepts_word({}));

    Dfa sigma = parse_regex("(a|b)*", 2);
    CHECK(sigma.state_count == 1);
    CHECK(sigma.accepts[0]);

    Dfa l = parse_regex(kExampleRegex, 2);
    CHECK(l.accepts_word(word_of("abba")));
    CHECK(l.accepts_word(word_of("aba")));
    CHECK_FALSE(l.accepts_word(word_of("abb")));
    CHECK_FALSE(l.accepts_word(word_of("ab")));

    CHECK_THROWS_WITH(parse_regex("a(", 2), "regex syntax error at position 2");
    CHECK_THROWS(parse_regex("*a", 2));
    CHECK_THROWS(parse_regex("a)b", 2));
    CHECK_THROWS(parse_regex("c", 2)); // letter outside the alphabet
}

TEST_CASE("dfa json round trip") {
    Dfa l = parse_regex(kExampleRegex, 2);
    Dfa back = dfa_from_json(dfa_json(l));
    CHECK(dfa_json(back) == dfa_json(l));
    CHECK(back.accepts_word(word_of("abba")));
}

TEST_CASE("reachability order") {
    Dfa single{1, 1, {{0}}, 0, {true}};
    auto o = reachability_order(single);
    REQUIRE(o);
    CHECK(o->length() == 1);

    Dfa cycle{2, 1, {{1}, {0}}, 0, {true, false}};
    CHECK_FALSE(reachability_order(cycle));

    auto ol = reachability_order(parse_regex(kExampleRegex, 2));
    REQUIRE(ol);
    CHECK(ol->dfa.state_count == 4);
    CHECK(ol->length() == 3);
}

TEST_CASE("truncation") {
    auto ol = reachability_order(parse_regex(kExampleRegex, 2));
    REQUIRE(ol);
    OrderedDfa same = truncate_dfa(*ol, ol->dfa.start);
    CHECK(same.dfa.state_count == ol->dfa.state_count);
    CHECK(same.length() == ol->length());

    std::size_t mid = ol->dfa.delta[ol->dfa.start][0]; // after the leading a
    std::size_t top = ol->dfa.delta[mid][0];           // accepting everything
    OrderedDfa at_top = truncate_dfa(*ol, top);
    CHECK(at_top.dfa.state_count == 1);
    CHECK(at_top.dfa.accepts[0]);
    CHECK(at_top.length() == 1);

    OrderedDfa at_mid = truncate_dfa(*ol, mid);
    CHECK(at_mid.length() < ol->length());
    CHECK(at_mid.dfa.accepts_word(word_of("bba")));
}

TEST_CASE("duplication property check") {
    CHECK(star_property_check(parse_regex("(a|b)*", 2), 6));
    CHECK_FALSE(star_property_check(parse_regex("ab", 2), 4));
    CHECK(star_property_check(parse_regex(kExampleRegex, 2), 8));
}

TEST_CASE("word factorization") {
    Word w = word_of("abba");
    auto all = partition_lattice_blocks(4);
    std::map<std::string, std::string> factored;
    for (const auto& blocks : all) {
        auto f = factor_word(w, blocks);
        if (!f.quotient) continue;
        std::string key;
        for (const auto& b : blocks) {
            if (!key.empty()) key.push_back('|');
            for (std::size_t p : b) key.push_back(static_cast<char>('1' + p));
        }
        factored[key] = word_str(*f.quotient);
    }
    std::map<std::string, std::string> expect{
        {"1|2|3|4", "abba"}, {"14|2|3", "abb"}, {"1|23|4", "aba"}, {"14|23", "ab"}};
    CHECK(factored == expect);
}

TEST_CASE("word ideal") {
    Dfa l = parse_regex(kExampleRegex, 2);
    WordIdeal wi = ideal_I(word_of("abba"), l);
    std::vector<bool> expect(wi.poset->size(), false);
    expect[partition_index(4, {{0}, {1}, {2}, {3}})] = true;
    expect[partition_index(4, {{0}, {1, 2}, {3}})] = true;
    CHECK(wi.ideal.members == expect);

    // Not in the language and no coarsening is: empty ideal.
    WordIdeal empty = ideal_I(word_of("ab"), l);
    CHECK(empty.ideal.members == std::vector<bool>(empty.poset->size(), false));

    // Full language: the principal ideal at the partition induced by the word.
    Dfa sigma = parse_regex("(a|b)*", 2);
    WordIdeal pr = ideal_I(word_of("aba"), sigma);
    std::size_t pw = partition_index(3, {{0, 2}, {1}});
    CHECK(pr.ideal.members == principal_ideal(*pr.poset, pw).members);
}

TEST_CASE("tuple ideal") {
    Dfa l = parse_regex(kExampleRegex, 2);

    // A single word gives the plain word ideal.
    TupleIdeal single = ideal_J({word_of("abba")}, l);
    WordIdeal wi = ideal_I(word_of("abba"), l);
    CHECK(single.ideal.members == wi.ideal.members);

    // The split (ab, ba) is the restriction of the abba ideal to the embedded
    // product of partition lattices.
    TupleIdeal split = ideal_J({word_of("ab"), word_of("ba")}, l);
    auto blocks2 = partition_lattice_blocks(2);
    for (std::size_t idx = 0; idx < split.product->size(); ++idx) {
        auto tuple = product_decode(split.factors, idx);
        std::vector<std::vector<std::size_t>> combined = blocks2[tuple[0]];
        for (auto b : blocks2[tuple[1]]) {
            for (auto& p : b) p += 2;
            combined.push_back(b);
        }
        CHECK(split.ideal.members[idx] == wi.ideal.members[partition_index(4, combined)]);
    }

    // Length-one words over the full language: the whole product.
    Dfa sigma = parse_regex("(a|b)*", 2);
    TupleIdeal full = ideal_J({word_of("a"), word_of("b")}, sigma);
    CHECK(full.ideal.members == std::vector<bool>(full.product->size(), true));
}

TEST_CASE("languages theorem verification") {
    Dfa one{1, 1, {{0}}, 0, {true}};
    auto a1 = reachability_order(one);
    REQUIRE(a1);

    auto rep = verify_languages_theorem(*a1, {word_of("a"), word_of("aa")});
    CHECK(rep.hypotheses_met);
    CHECK(rep.exact);

    // l_r = d violates the hypotheses, and the complex fails to be exact.
    auto bad = verify_languages_theorem(*a1, {word_of("a")});
    CHECK_FALSE(bad.lengths_ok);
    CHECK_FALSE(bad.hypotheses_met);
    CHECK_FALSE(bad.exact);

    auto ol = reachability_order(parse_regex(kExampleRegex, 2));
    REQUIRE(ol);
    auto rep2 = verify_languages_theorem(*ol, {word_of("ab"), word_of("ba"), word_of("aba")});
    CHECK(rep2.dfa_length == 3);
    CHECK(rep2.hypotheses_met);
    CHECK(rep2.exact);
}

TEST_CASE("word order") {
    CHECK(os_word_less({1, 2}, {2, 1}));
    CHECK(os_word_less({1, 1, 2}, {1, 2, 1}));
    CHECK_FALSE(os_word_less({1, 2}, {1, 2}));
    CHECK_THROWS(os_word_less({1}, {1, 2}));
    CHECK(os_order_axiom_check(2, 4));
}

TEST_CASE("initial words") {
    // Both degree-2 words generate everything.
    std::vector<OsElement> whole{{2, {{{1, 2}, 1}}}, {2, {{{2, 1}, 1}}}};
    auto all = init_ideal(2, whole, 4);
    for (long n = 2; n <= 4; ++n)
        CHECK(all[n].size() == enumerate_surjections(n, 2).size());

    CHECK(init_ideal(2, {}, 3) == std::vector<std::set<SurjWord>>(4));

    std::vector<OsElement> swap_diff{{2, {{{1, 2}, 1}, {{2, 1}, -1}}}};
    auto init = init_ideal(2, swap_diff, 4);
    CHECK(init[2] == std::set<SurjWord>{{2, 1}});
    CHECK(init[3] == std::set<SurjWord>{{2, 1, 1}, {2, 1, 2}, {2, 2, 1}});
    CHECK(init[4].size() == 7); // rank of the degree-4 relation span
}

TEST_CASE("associated graded dimensions") {
    CHECK(assoc_graded_check(2, {}, 4));
    std::vector<OsElement> whole{{2, {{{1, 2}, 1}}}, {2, {{{2, 1}, 1}}}};
    CHECK(assoc_graded_check(2, whole, 4));
    std::vector<OsElement> swap_diff{{2, {{{1, 2}, 1}, {{2, 1}, -1}}}};
    CHECK(assoc_graded_check(2, swap_diff, 5));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 5; ++trial) {
        OsElement g;
        g.degree = 3;
        for (const SurjWord& w : enumerate_surjections(3, 2))
            if (int c = coef(rng)) g.terms.push_back({w, Rat(c)});
        CHECK(assoc_graded_check(2, {g}, 5));
    }
}
