#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fstk/poset.hpp"

using namespace fstk;

namespace {
IntPolynomial one_minus_jt_product(const std::vector<long>& js) {
    IntPolynomial w{1};
    for (long j : js) w = poly_mul(w, IntPolynomial{1, -j});
    return w;
}
} // namespace

TEST_CASE("boolean lattice structure") {
    CHECK(boolean_lattice(0).size() == 1);
    FinitePoset b2 = boolean_lattice(2);
    CHECK(b2.size() == 4);
    std::size_t strict = 0;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            if (b2.less(a, b)) ++strict;
    CHECK(strict == 5);
    CHECK(*b2.top() == 3);
    CHECK(whitney_polynomial(boolean_lattice(3)) == IntPolynomial{1, -3, 3, -1});
}

TEST_CASE("subspace lattice structure") {
    CHECK(subspace_lattice(2, 1).size() == 2);
    CHECK(subspace_lattice(2, 2).size() == 5);
    CHECK(whitney_polynomial(subspace_lattice(2, 2)) == one_minus_jt_product({1, 2}));
    CHECK(subspace_lattice(3, 2).size() == 6);  // 0, four lines, plane
    CHECK(subspace_lattice(4, 2).size() == 7);
    CHECK(whitney_polynomial(subspace_lattice(4, 2)) == one_minus_jt_product({1, 4}));
}

TEST_CASE("partition lattice structure") {
    CHECK(partition_lattice(2).size() == 2);
    FinitePoset p3 = partition_lattice(3);
    CHECK(p3.size() == 5);
    CHECK(whitney_polynomial(p3) == IntPolynomial{1, -3, 2});
    // Unsigned Mobius of the bottom of P(4) is 3! = 6.
    FinitePoset p4 = partition_lattice(4);
    auto r = p4.grading();
    REQUIRE(r);
    // bottom = indiscrete partition = index 0 in RGS order
    CHECK((*r)[0] == 3);
    CHECK(mobius(p4, 0) == -6);
}

TEST_CASE("product poset") {
    FinitePoset b1 = boolean_lattice(1);
    std::vector<FinitePoset> fs{b1, b1};
    FinitePoset prod = product_poset(fs);
    FinitePoset b2 = boolean_lattice(2);
    CHECK(prod.size() == 4);
    // Same number of strict relations as B(2) (they are isomorphic).
    std::size_t s1 = 0, s2 = 0;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            if (prod.less(a, b)) ++s1;
            if (b2.less(a, b)) ++s2;
        }
    CHECK(s1 == s2);
    CHECK(prod.top().has_value());

    std::vector<FinitePoset> pp{partition_lattice(2), partition_lattice(2)};
    CHECK(product_poset(pp).size() == 4);

    // Rank additivity and Mobius multiplicativity across factors.
    std::vector<FinitePoset> mixed{partition_lattice(3), boolean_lattice(2)};
    FinitePoset m = product_poset(mixed);
    auto rm = m.grading();
    REQUIRE(rm);
    for (std::size_t i = 0; i < m.size(); ++i) {
        auto t = product_decode(mixed, i);
        auto r0 = *mixed[0].grading(), r1 = *mixed[1].grading();
        CHECK((*rm)[i] == r0[t[0]] + r1[t[1]]);
        CHECK(mobius(m, i) == mobius(mixed[0], t[0]) * mobius(mixed[1], t[1]));
    }
}

TEST_CASE("interval pair complex") {
    FinitePoset b2 = boolean_lattice(2);
    CHECK(interval_pair_complex(b2, 3).homology_dims() == std::vector<std::size_t>{1});
    auto h = interval_pair_complex(b2, 0).homology_dims();
    CHECK(h == std::vector<std::size_t>{0, 0, 1});

    FinitePoset b3 = boolean_lattice(3);
    auto h3 = interval_pair_complex(b3, 0).homology_dims();
    CHECK(h3 == std::vector<std::size_t>{0, 0, 0, 1});

    // P(4), bottom: top homology dimension 3! = 6.
    FinitePoset p4 = partition_lattice(4);
    auto h4 = interval_pair_complex(p4, 0).homology_dims();
    REQUIRE(h4.size() == 4);
    CHECK(h4[3] == 6);
    CHECK(h4[0] + h4[1] + h4[2] == 0);
}

TEST_CASE("mobius equals euler characteristic of the pair complex") {
    for (auto p : {partition_lattice(4), boolean_lattice(3), subspace_lattice(2, 3)})
        for (std::size_t x = 0; x < p.size(); ++x) {
            long chi = interval_pair_complex(p, x).euler_characteristic();
            CHECK(mobius(p, x) == chi);
            CHECK(mobius(p, x) == mobius_recursive(p, x));
        }
}

TEST_CASE("whitney closed forms small") {
    CHECK(whitney_polynomial(partition_lattice(4)) == one_minus_jt_product({1, 2, 3}));
    CHECK(whitney_polynomial(boolean_lattice(4)) == one_minus_jt_product({1, 1, 1, 1}));
    CHECK(whitney_polynomial(subspace_lattice(3, 3)) == one_minus_jt_product({1, 3, 9}));
    FinitePoset single(1, {}, 0);
    CHECK(whitney_polynomial(single) == IntPolynomial{1});
}

TEST_CASE("upper CM") {
    CHECK(is_upper_cm(partition_lattice(4)));
    CHECK(is_upper_cm(boolean_lattice(4)));
    CHECK(is_upper_cm(subspace_lattice(2, 3)));
    // Two disjoint chains x<c<a and x<d<b joined at bottom x and top: the
    // open interval (x, top) is disconnected, so homology appears in degree 2
    // while x has rank 3.
    FinitePoset n(6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}}, 5);
    CHECK_FALSE(is_upper_cm(n));
}

TEST_CASE("mu tilde on partition and subspace lattices") {
    FinitePoset p4 = partition_lattice(4);
    auto blocks = partition_lattice_blocks(4);
    auto r = *p4.grading();
    for (std::size_t i = 0; i < p4.size(); ++i) {
        long expect = 1;
        for (auto& b : blocks[i])
            for (std::size_t k = 2; k <= b.size(); ++k) expect *= static_cast<long>(k - 1);
        long mt = ((r[i] % 2 == 0) ? 1 : -1) * mobius(p4, i);
        CHECK(mt == expect);
    }
    // B_q(n): mu tilde = q^(c choose 2), c = corank.
    FinitePoset bq = subspace_lattice(2, 3);
    auto rq = *bq.grading();
    for (std::size_t i = 0; i < bq.size(); ++i) {
        long c = static_cast<long>(rq[i]);
        long expect = 1;
        for (long j = 0; j < c * (c - 1) / 2; ++j) expect *= 2;
        long mt = ((rq[i] % 2 == 0) ? 1 : -1) * mobius(bq, i);
        CHECK(mt == expect);
    }
}
