#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fstk/symfunc.hpp"

#include <random>

using namespace fstk;

namespace {

SymFunc random_symfunc(std::mt19937& rng, long trunc) {
    std::uniform_int_distribution<int> val(-3, 3);
    SymFunc f(trunc);
    for (long d = 0; d <= trunc; ++d)
        for (const auto& p : partitions_of(d)) f.add_term(p, val(rng));
    return f;
}

SymFunc homogeneous_part(const SymFunc& f, long d) {
    SymFunc out(f.trunc());
    for (const auto& [p, c] : f.coeffs())
        if (partition_size(p) == d) out.add_term(p, c);
    return out;
}

} // namespace

TEST_CASE("partition statistics") {
    CHECK(z_of({2, 1}) == 2);
    CHECK(z_of({1, 1, 1}) == 6);
    CHECK(z_of({3}) == 3);
    CHECK(sgn_of({2, 1}) == -1);
    CHECK(sgn_of({3}) == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("basis elements") {
    CHECK(e_basis({1}, 4) == p_basis({1}, 4));
    CHECK(h_basis({1}, 4) == p_basis({1}, 4));

    SymFunc s21 = s_basis({2, 1}, 4);
    CHECK(s21.coeff({1, 1, 1}) == Rat(1, 3));
    CHECK(s21.coeff({3}) == Rat(-1, 3));
    CHECK(s21.coeff({2, 1}) == 0);

    SymFunc y1 = y_elem(1, 4);
    CHECK(y1.coeff({1}) == 1);
    CHECK(y1.coeff({2}) == Rat(1, 2));
    CHECK(y1.coeff({3}) == Rat(1, 3));
    CHECK(y1.coeff({4}) == Rat(1, 4));

    // exp(y_1) = sum of complete homogeneous functions.
    SymFunc expy = exp_truncated(y1);
    SymFunc hsum(4);
    for (long n = 0; n <= 4; ++n) hsum = hsum + h_basis(n ? Partition{n} : Partition{}, 4);
    CHECK(expy == hsum);
}

TEST_CASE("multiplication") {
    SymFunc p1 = p_basis({1}, 3);
    CHECK((p1 * p1).coeff({1, 1}) == 1);
    CHECK(p1 * p_basis({}, 3) == p1);
    SymFunc prod = h_basis({2}, 3) * h_basis({1}, 3);
    auto se = schur_expansion(prod, 3);
    CHECK(se.size() == 2);
    CHECK(se.at({3}) == 1);
    CHECK(se.at({2, 1}) == 1);
    CHECK_THROWS(p1 * p_basis({1}, 4));
}

TEST_CASE("exp basics") {
    CHECK(exp_truncated(SymFunc(5)) == p_basis({}, 5));
    CHECK_THROWS(exp_truncated(p_basis({}, 5)));
}

TEST_CASE("hall pairing") {
    for (long d = 0; d <= 5; ++d)
        for (const auto& lam : partitions_of(d))
            for (const auto& mu : partitions_of(d)) {
                Rat v = hall_pair(s_basis(lam, 5), s_basis(mu, 5));
                CHECK(v == (lam == mu ? 1 : 0));
            }
    SymFunc hs(6);
    for (long n = 0; n <= 6; ++n) hs = hs + h_basis(n ? Partition{n} : Partition{}, 6);
    CHECK(hall_pair(h_basis({3}, 6), hs) == 1);
}

TEST_CASE("partial derivatives") {
    CHECK(apply_partial(1, p_basis({1}, 3)) == p_basis({}, 2));
    SymFunc p22 = p_basis({2, 2}, 6);
    SymFunc d = apply_partial(2, p22);
    CHECK(d.coeff({2}) == 2);

    // Adjointness: i * <d_i f, g'> = <f, p_i g> with g' the truncation of g.
    std::mt19937 rng(41);
    for (long i : {1L, 2L, 3L}) {
        SymFunc f = random_symfunc(rng, 6);
        SymFunc g = random_symfunc(rng, 6);
        Rat lhs = Rat(i) * hall_pair(apply_partial(i, f), g.retagged(6 - i));
        Rat rhs = hall_pair(f, p_basis({i}, 6) * g);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("D operators") {
    // D_2 = d_2 - d_1/2 applied to y_1 gives 0.
    CHECK(apply_D(2, y_elem(1, 8)).is_zero());
    for (long n = 1; n <= 4; ++n)
        for (long m = 1; m <= 4; ++m) {
            SymFunc d = apply_D(n, y_elem(m, 8));
            if (n == m)
                CHECK(d == p_basis({}, 8 - n));
            else
                CHECK(d.is_zero());
        }
    // D_1(exp(y_1)) = exp(y_1) up to truncation.
    SymFunc e = exp_truncated(y_elem(1, 6));
    CHECK(apply_D(1, e) == e.retagged(5));
}

TEST_CASE("p_n as a mobius sum of y") {
    for (long n = 1; n <= 4; ++n) {
        SymFunc acc(8);
        for (long d = 1; n * d <= 8; ++d)
            acc = acc + y_elem(n * d, 8).scaled(Rat(mobius_int(d), d));
        CHECK(acc == p_basis({n}, 8));
    }
}

TEST_CASE("signed e generating identity") {
    // Degree-n part of exp(-sum p_k/k) equals (-1)^n e_n.
    long n = 6;
    SymFunc arg(n);
    for (long k = 1; k <= n; ++k) arg.add_term({k}, Rat(-1, k));
    SymFunc e = exp_truncated(arg);
    for (long d = 0; d <= n; ++d) {
        SymFunc expect = e_basis(d ? Partition{d} : Partition{}, n).scaled(d % 2 ? -1 : 1);
        CHECK(homogeneous_part(e, d) == expect);
    }
}

TEST_CASE("binomial D operators") {
    SymFunc f = p_basis({2}, 6) * exp_truncated(y_elem(1, 6));
    CHECK(apply_binom_D({1}, f) == apply_D(1, f));

    // Eigenvector: (D choose lam) exp(sum a_i y_i) = prod C(a_i, m_i) * same.
    SymFunc g = exp_truncated(y_elem(1, 8).scaled(2) + y_elem(2, 8));
    SymFunc r = apply_binom_D({2, 1, 1}, g); // C(2,2)*C(1,1) = 1
    CHECK(r == g.retagged(8 - 4));
    SymFunc r2 = apply_binom_D({1, 1}, g); // C(2,2) = 1
    CHECK(r2 == g.retagged(6));
    SymFunc r3 = apply_binom_D({1, 1, 1}, g); // C(2,3) = 0
    CHECK(r3.is_zero());

    // Commutation.
    std::mt19937 rng(43);
    SymFunc h = random_symfunc(rng, 8);
    CHECK(apply_binom_D({2}, apply_binom_D({1, 1}, h)) ==
          apply_binom_D({1, 1}, apply_binom_D({2}, h)));
}

TEST_CASE("schur expansion") {
    auto hn = schur_expansion(h_basis({4}, 4), 4);
    CHECK(hn.size() == 1);
    CHECK(hn.at({4}) == 1);
    auto sq = schur_expansion(p_basis({1}, 2) * p_basis({1}, 2), 2);
    CHECK(sq.at({2}) == 1);
    CHECK(sq.at({1, 1}) == 1);
}

TEST_CASE("json round trip") {
    SymFunc f = s_basis({2, 1}, 4) + y_elem(2, 4);
    SymFunc g = symfunc_from_json(symfunc_json(f));
    CHECK(f == g);
    CHECK(symfunc_json(f) == symfunc_json(g));
}
