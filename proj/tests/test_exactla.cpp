#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fstk/chain_complex.hpp"
#include "fstk/matrix.hpp"

#include <random>

using namespace fstk;

namespace {

// Independent dense elimination oracle for ranks.
std::size_t dense_rank(const RatMatrix& m) {
    std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols(), Rat(0)));
    for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][c] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rat f = a[r][c] / a[rank][c];
            for (std::size_t cc = c; cc < m.cols(); ++cc) a[r][cc] -= f * a[rank][cc];
        }
        ++rank;
    }
    return rank;
}

RatMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> val(-4, 4);
    std::uniform_int_distribution<int> keep(0, 2);
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (keep(rng) == 0) m.set(r, c, val(rng));
    return m;
}

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank(RatMatrix::identity(2)) == 2);
    CHECK(rank(RatMatrix(3, 4)) == 0);
}

TEST_CASE("rank agrees with dense oracle on random matrices") {
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        RatMatrix m = random_matrix(rng, 6, 7);
        CHECK(rank(m) == dense_rank(m));
    }
}

TEST_CASE("rank is invariant under row scaling") {
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        RatMatrix m = random_matrix(rng, 5, 6);
        std::size_t r0 = rank(m);
        RatMatrix scaled = m;
        std::uniform_int_distribution<int> rowpick(0, 4);
        std::size_t row = rowpick(rng);
        for (std::size_t c = 0; c < 6; ++c) {
            Rat v = m.get(row, c);
            scaled.set(row, c, v * Rat(3, 7));
        }
        CHECK(rank(scaled) == r0);
    }
}

TEST_CASE("kernel basis normalization") {
    CHECK(kernel_basis(RatMatrix::identity(3)).cols() == 0);

    RatMatrix z(2, 3);
    RatMatrix k = kernel_basis(z);
    CHECK(k == RatMatrix::identity(3));

    RatMatrix m(1, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    RatMatrix kb = kernel_basis(m);
    REQUIRE(kb.cols() == 1);
    CHECK(kb.get(0, 0) == -1);
    CHECK(kb.get(1, 0) == 1);
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        RatMatrix m = random_matrix(rng, 5, 8);
        CHECK(rank(m) + kernel_basis(m).cols() == m.cols());
        CHECK(m.mul(kernel_basis(m)).is_zero());
    }
}

TEST_CASE("solve_in_span recovers coefficients") {
    std::mt19937 rng(5);
    RatMatrix b(4, 2);
    b.set(0, 0, 1);
    b.set(1, 0, 2);
    b.set(2, 1, 3);
    b.set(3, 1, -1);
    RatMatrix x(2, 1);
    x.set(0, 0, Rat(5, 3));
    x.set(1, 0, -2);
    RatMatrix t = b.mul(x);
    CHECK(solve_in_span(b, t) == x);
    RatMatrix bad(4, 1);
    bad.set(0, 0, 1);
    bad.set(2, 0, 1);
    CHECK_THROWS(solve_in_span(b, bad));
}

TEST_CASE("chain complex homology") {
    // 0 -> Q -> Q -> 0 with identity boundary
    RationalChainComplex iso({1, 1}, {RatMatrix::identity(1)});
    CHECK(iso.homology_dims() == std::vector<std::size_t>{0, 0});
    CHECK(iso.is_exact());
    CHECK(iso.euler_characteristic() == 0);

    RationalChainComplex zero({2, 3}, {RatMatrix(2, 3)});
    CHECK(zero.homology_dims() == std::vector<std::size_t>{2, 3});
    CHECK_FALSE(zero.is_exact());

    RationalChainComplex point({1}, {});
    CHECK(point.euler_characteristic() == 1);
}

TEST_CASE("d after d must vanish") {
    RatMatrix a(1, 1);
    a.set(0, 0, 1);
    CHECK_THROWS(RationalChainComplex({1, 1, 1}, {a, a}));
}

TEST_CASE("euler characteristic equals alternating homology sum") {
    std::mt19937 rng(13);
    // Build complexes of the form V2 --d2--> V1 --d1--> V0 with d1 d2 = 0 by
    // factoring d2 through the kernel of d1.
    for (int i = 0; i < 10; ++i) {
        RatMatrix d1 = random_matrix(rng, 3, 5);
        RatMatrix k = kernel_basis(d1); // 5 x f
        RatMatrix c = random_matrix(rng, k.cols(), 4);
        RatMatrix d2 = k.mul(c);
        RationalChainComplex cc({3, 5, 4}, {d1, d2});
        auto h = cc.homology_dims();
        long alt = 0;
        for (std::size_t s = 0; s < h.size(); ++s)
            alt += (s % 2 == 0 ? 1 : -1) * static_cast<long>(h[s]);
        CHECK(alt == cc.euler_characteristic());
    }
}
