#include <doctest.h>

#include "oracles.hpp"
#include "otsym/rep_formulas.hpp"

using namespace otsym;

namespace {

SymFunc qfree_schur(std::initializer_list<std::pair<Partition, long long>> entries, int cap = 0) {
    int n = entries.begin()->first.n();
    SymFunc f(n, cap, Basis::schur);
    for (const auto& [lambda, c] : entries)
        f.add_term(lambda, QSeries::constant(Rational(c), cap));
    return f;
}

QSeries poincare_product(int m, int cap) {
    QSeries p = QSeries::one(cap);
    for (int k = 1; k <= m; ++k)
        p = p * (QSeries::one(cap) + QSeries::q_power(1, cap).scaled(Rational(k)));
    return p;
}

}  // namespace

TEST_CASE("number-theory helpers") {
    CHECK(mobius_mu(1) == 1);
    CHECK(mobius_mu(2) == -1);
    CHECK(mobius_mu(4) == 0);
    CHECK(mobius_mu(6) == 1);
    CHECK(mobius_mu(30) == -1);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(10) == 4);
    CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("lyndon characteristic: small goldens") {
    CHECK(lyndon(1, 0) == SymFunc::schur(Partition({1}), 0));
    CHECK(lyndon(2, 0) == SymFunc::schur(Partition({1, 1}), 0));
    CHECK(lyndon(3, 0) == SymFunc::schur(Partition({2, 1}), 0));
    for (int n = 1; n <= 8; ++n) {
        SymFunc l = lyndon(n, 0);
        assert_schur_nonneg_integral(l, "lyndon");
        // dimension (n-1)!: index of Z_n in S_n
        CHECK(graded_dimension(l).coeff(0) == Rational(BigInt::factorial(static_cast<unsigned>(n - 1))));
    }
}

TEST_CASE("lyndon matches the coset-sum induced character, all primitive characters, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        SymFunc ours = to_powersum(lyndon(n, 0));
        for (int j = 1; j <= n; ++j) {
            if (std::gcd(j, n) != 1) continue;
            auto chi = oracle::induced_character_from_Zn(n, j % n);
            SymFunc from_oracle(n, 0, Basis::power_sum);
            for (const auto& [mu, value] : chi)
                from_oracle.add_term(mu, QSeries::constant(value / Rational(z_of(mu)), 0));
            CHECK(from_oracle == ours);
        }
    }
}

TEST_CASE("cyclic trivial induction: goldens and coset oracle") {
    CHECK(ch_cyclic_triv(2) == SymFunc::schur(Partition({2}), 0));
    CHECK(ch_cyclic_triv(3) == qfree_schur({{Partition({3}), 1}, {Partition({1, 1, 1}), 1}}));
    for (int n = 1; n <= 8; ++n)
        CHECK(graded_dimension(ch_cyclic_triv(n)).coeff(0) ==
              Rational(BigInt::factorial(static_cast<unsigned>(n - 1))));
    for (int n = 1; n <= 6; ++n) {
        auto chi = oracle::induced_character_from_Zn(n, 0);
        SymFunc from_oracle(n, 0, Basis::power_sum);
        for (const auto& [mu, value] : chi)
            from_oracle.add_term(mu, QSeries::constant(value / Rational(z_of(mu)), 0));
        CHECK(from_oracle == to_powersum(ch_cyclic_triv(n)));
    }
}

TEST_CASE("regular representation characteristic") {
    CHECK(ch_regular(2) == qfree_schur({{Partition({2}), 1}, {Partition({1, 1}), 1}}));
    CHECK(ch_regular(3) ==
          qfree_schur({{Partition({3}), 1}, {Partition({2, 1}), 2}, {Partition({1, 1, 1}), 1}}));
    // equivalently sum_lambda f^lambda s_lambda
    for (int n = 1; n <= 8; ++n) {
        SymFunc direct(n, 0, Basis::schur);
        for (const auto& lambda : partitions_of(n))
            direct.add_term(lambda, QSeries::constant(Rational(dimension_hook(lambda)), 0));
        CHECK(ch_regular(n) == direct);
    }
}

TEST_CASE("ch C_n: goldens and global properties") {
    CHECK(ch_C(1, 0) == SymFunc::schur(Partition({1}), 0));

    SymFunc c2 = ch_C(2, 1);
    SymFunc c2_expected(2, 1, Basis::schur);
    c2_expected.add_term(Partition({2}), QSeries::one(1));
    c2_expected.add_term(Partition({1, 1}), QSeries::q_power(1, 1));
    CHECK(c2 == c2_expected);

    SymFunc c3 = ch_C(3, 2);
    SymFunc c3_expected(3, 2, Basis::schur);
    c3_expected.add_term(Partition({3}), QSeries::one(2));
    c3_expected.add_term(Partition({2, 1}), QSeries::q_power(1, 2) + QSeries::q_power(2, 2));
    c3_expected.add_term(Partition({1, 1, 1}), QSeries::q_power(1, 2));
    CHECK(c3 == c3_expected);

    // basis round trip on ch C_3
    CHECK(to_schur(to_powersum(c3)) == c3);

    for (int n = 1; n <= 10; ++n) {
        SymFunc c = ch_C(n, n - 1 > 0 ? n - 1 : 0);
        assert_schur_nonneg_integral(c, "ch_C");
        // H(C_n, q) = prod_{k=1}^{n-1} (1 + k q)
        CHECK(graded_dimension(c) == poincare_product(n - 1, std::max(n - 1, 0)));
        // trivial H^0 of a connected space
        CHECK(hall_inner(SymFunc::schur(Partition({n}), c.cap()), c).coeff(0) == Rational(1));
        // ungraded C_n is the regular representation
        CHECK(specialize_q1(c) == ch_regular(n));
    }
}

TEST_CASE("ch R_n: principal specialization") {
    // R_2 at cap 3: (1 + q^2) s_2 + (q + q^3) s_11
    SymFunc r2 = ch_R(2, 3);
    SymFunc r2_expected(2, 3, Basis::schur);
    r2_expected.add_term(Partition({2}), QSeries::one(3) + QSeries::q_power(2, 3));
    r2_expected.add_term(Partition({1, 1}), QSeries::q_power(1, 3) + QSeries::q_power(3, 3));
    CHECK(r2 == r2_expected);

    // degree-0 part of R_n is the trivial representation
    for (int n = 1; n <= 8; ++n)
        CHECK(coeff_slice(ch_R(n, 3), 0) == SymFunc::schur(Partition({n}), 0));

    // Hilbert series of R_3 = C[z1,z2]:  1/(1-q)^2 -> 1 + 2q + 3q^2
    QSeries gd = graded_dimension(ch_R(3, 2));
    CHECK(gd == QSeries(2, {Rational(1), Rational(2), Rational(3)}));

    // graded dimension of R_n is 1/(1-q)^{n-1}
    for (int n = 2; n <= 6; ++n) {
        QSeries expected = QSeries::one(4);
        for (int k = 1; k < n; ++k) expected = expected * QSeries::geometric_hook(1, 4);
        CHECK(graded_dimension(ch_R(n, 4)) == expected);
    }
}

TEST_CASE("ch W_n") {
    SymFunc w2 = ch_W(2, 1);
    SymFunc w2_expected(2, 1, Basis::schur);
    w2_expected.add_term(Partition({2}), QSeries::one(1));
    w2_expected.add_term(Partition({1, 1}), QSeries::q_power(1, 1));
    CHECK(w2 == w2_expected);

    SymFunc w4 = ch_W(4, 3);
    SymFunc w4_expected(4, 3, Basis::schur);
    w4_expected.add_term(Partition({4}), QSeries::one(3));
    w4_expected.add_term(Partition({3, 1}), QSeries::q_power(1, 3));
    CHECK(w4 == w4_expected);

    for (int n = 2; n <= 9; ++n) {
        QSeries gd = graded_dimension(ch_W(n, 1));
        CHECK(gd == QSeries::one(1) + QSeries::q_power(1, 1).scaled(Rational(n - 1)));
    }
    CHECK_THROWS_AS(ch_W(1, 0), std::invalid_argument);
}

TEST_CASE("ch D_n: Kronecker division by W_n") {
    CHECK(ch_D(2, 1) == SymFunc::schur(Partition({2}), 1).recap(1));

    SymFunc d3 = ch_D(3, 2);
    SymFunc d3_expected(3, 2, Basis::schur);
    d3_expected.add_term(Partition({3}), QSeries::one(2));
    d3_expected.add_term(Partition({1, 1, 1}), QSeries::q_power(1, 2));
    CHECK(d3 == d3_expected);

    for (int n = 2; n <= 7; ++n) {
        int cap = n - 1;
        SymFunc d = ch_D(n, cap);
        assert_schur_nonneg_integral(d, "ch_D");
        // H(D_n, q) = prod_{k=1}^{n-2} (1 + k q)
        CHECK(graded_dimension(d) == poincare_product(n - 2, cap));
        // reconstruction: D_n (x) W_n = C_n
        CHECK(schur_equal(to_schur(kronecker(d, ch_W(n, cap))), ch_C(n, cap)));
        // restriction: Res D_n = C_{n-1}
        int rcap = std::max(n - 2, 0);
        CHECK(schur_equal(to_schur(restrict_once(ch_D(n, rcap))), ch_C(n - 1, rcap)));
        // ungraded: D_n forgets to C[S_n/Z_n]
        CHECK(specialize_q1(d) == ch_cyclic_triv(n));
    }
    CHECK_THROWS_AS(ch_D(1, 0), std::invalid_argument);
}

TEST_CASE("truncation consistency: larger caps agree on shared coefficients") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(ch_C(n, 2).recap(1) == ch_C(n, 1));
        CHECK(ch_R(n, 5).recap(2) == ch_R(n, 2));
        CHECK(ch_D(n, n - 1).recap(1) == ch_D(n, 1));
    }
}
