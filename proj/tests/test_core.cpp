#include <doctest.h>

#include <numeric>

#include "otsym/bigint.hpp"
#include "otsym/character_table.hpp"
#include "otsym/partition.hpp"
#include "otsym/qseries.hpp"
#include "otsym/rational.hpp"

using namespace otsym;

namespace {

// Deterministic 64-bit LCG for reproducible sampling.
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }
    long long next_in(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Partition counting via the pentagonal number recurrence, independent of the
// enumerator under test.
std::vector<long long> pentagonal_partition_counts(int up_to) {
    std::vector<long long> p(static_cast<std::size_t>(up_to) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= up_to; ++n) {
        long long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            long long term = 0;
            if (g1 <= n) term += p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) term += p[static_cast<std::size_t>(n - g2)];
            total += (k % 2 == 1) ? term : -term;
        }
        p[static_cast<std::size_t>(n)] = total;
    }
    return p;
}

}  // namespace

TEST_CASE("BigInt basic arithmetic and strings") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-17).to_string() == "-17");
    CHECK(BigInt::factorial(20).to_string() == "2432902008176640000");
    CHECK(BigInt::factorial(30).to_string() == "265252859812191058636308480000000");
    CHECK(BigInt::from_string("265252859812191058636308480000000") == BigInt::factorial(30));
    CHECK(BigInt::from_string("-42") == BigInt(-42));
    CHECK(BigInt::pow(BigInt(2), 100).to_string() == "1267650600228229401496703205376");
    CHECK(BigInt(-9223372036854775807LL - 1).to_string() == "-9223372036854775808");
    CHECK(BigInt(-9223372036854775807LL - 1).to_int64() == -9223372036854775807LL - 1);
    CHECK(BigInt::factorial(25) / BigInt::factorial(20) == BigInt(21LL * 22 * 23 * 24 * 25));
}

TEST_CASE("BigInt divmod and gcd agree with native arithmetic") {
    Lcg rng(0xfeedfaceULL);
    for (int iter = 0; iter < 4000; ++iter) {
        long long a = rng.next_in(-1000000000000LL, 1000000000000LL);
        long long b = rng.next_in(-1000000LL, 1000000LL);
        if (b == 0) b = 7;
        auto [q, r] = BigInt::divmod(BigInt(a), BigInt(b));
        CHECK(q == BigInt(a / b));
        CHECK(r == BigInt(a % b));
        CHECK(BigInt::gcd(BigInt(a), BigInt(b)) == BigInt(std::gcd(a, b)));
    }
    // multi-limb divisor path
    for (int iter = 0; iter < 200; ++iter) {
        BigInt a = BigInt::factorial(static_cast<unsigned>(20 + iter % 15)) + BigInt(rng.next_in(0, 1LL << 40));
        BigInt b = BigInt::from_string("123456789012345678901") + BigInt(rng.next_in(0, 1000000));
        auto [q, r] = BigInt::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r >= BigInt(0));
        CHECK(r < b);
        CHECK(BigInt::from_string(a.to_string()) == a);
    }
}

TEST_CASE("Rational normalization and arithmetic") {
    CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(1), BigInt(-2)) == Rational(BigInt(-1), BigInt(2)));
    CHECK((Rational(BigInt(1), BigInt(3)) + Rational(BigInt(1), BigInt(6))) == Rational(BigInt(1), BigInt(2)));
    CHECK((Rational(BigInt(2), BigInt(3)) * Rational(BigInt(9), BigInt(4))) == Rational(BigInt(3), BigInt(2)));
    CHECK((Rational(1) / Rational(BigInt(-3), BigInt(7))).to_string() == "-7/3");
    CHECK(Rational(BigInt(6), BigInt(3)).is_integer());
    CHECK(Rational().is_zero());
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("QSeries products match the broken-circuit product example") {
    // (1+q)(1+2q) at cap 2 -> 1 + 3q + 2q^2
    QSeries a = QSeries::one(2) + QSeries::q_power(1, 2);
    QSeries b = QSeries::one(2) + QSeries::q_power(1, 2).scaled(Rational(2));
    QSeries prod = a * b;
    CHECK(prod.coeff(0) == Rational(1));
    CHECK(prod.coeff(1) == Rational(3));
    CHECK(prod.coeff(2) == Rational(2));
    CHECK(prod.to_string() == "1 + 3q + 2q^2");

    QSeries f(3, {Rational(1), Rational(-2), Rational(0), Rational(5)});
    CHECK(f * QSeries::one(3) == f);

    // (1-q) * (1+q+q^2+...) at cap 5 -> 1
    QSeries one_minus_q = QSeries::one(5) - QSeries::q_power(1, 5);
    CHECK((one_minus_q * QSeries::geometric_hook(1, 5)).is_one());
}

TEST_CASE("QSeries substitute_power and geometric_hook") {
    QSeries one_plus_q = QSeries::one(4) + QSeries::q_power(1, 4);
    CHECK(one_plus_q.substitute_power(2) == QSeries::one(4) + QSeries::q_power(2, 4));
    QSeries f(4, {Rational(3), Rational(1), Rational(7), Rational(0), Rational(2)});
    CHECK(f.substitute_power(1) == f);
    QSeries g = QSeries::one(4) + QSeries::q_power(1, 4) + QSeries::q_power(2, 4);
    CHECK(g.substitute_power(3) == QSeries::one(4) + QSeries::q_power(3, 4));

    CHECK(QSeries::geometric_hook(1, 3).to_string() == "1 + q + q^2 + q^3");
    CHECK(QSeries::geometric_hook(2, 3) == QSeries::one(3) + QSeries::q_power(2, 3));
    CHECK(QSeries::geometric_hook(5, 3).is_one());
}

TEST_CASE("QSeries ring axioms on random samples") {
    Lcg rng(0x5eed0001ULL);
    auto random_series = [&](int cap) {
        QSeries f(cap);
        for (int d = 0; d <= cap; ++d) {
            Rational c(rng.next_in(-6, 6), static_cast<long long>(1 + (rng.next() % 4)));
            f += QSeries::q_power(d, cap).scaled(c);
        }
        return f;
    };
    for (int iter = 0; iter < 50; ++iter) {
        int cap = 3 + static_cast<int>(rng.next() % 5);
        QSeries a = random_series(cap), b = random_series(cap), c = random_series(cap);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        // substitute then evaluate at 1 equals evaluating at 1 (cap permitting)
        int k = 1 + static_cast<int>(rng.next() % 3);
        if (a.degree() >= 0 && k * a.degree() <= cap)
            CHECK(a.substitute_power(k).eval_one() == a.eval_one());
        // truncation consistency: recomputing at lower cap matches prefix
        int small = cap / 2;
        CHECK((a.recap(small) * b.recap(small)) == (a * b).recap(small));
    }
    CHECK_THROWS_AS(QSeries::one(2) * QSeries::one(3), std::invalid_argument);
    CHECK_THROWS_AS(QSeries::one(2) + QSeries::one(3), std::invalid_argument);
}

TEST_CASE("Partition enumeration is lex-descending with pentagonal counts") {
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));

    CHECK(enumerate_partitions(10).size() == 42);

    auto counts = pentagonal_partition_counts(30);
    for (int n = 0; n <= 30; ++n)
        CHECK(static_cast<long long>(enumerate_partitions(n).size()) == counts[static_cast<std::size_t>(n)]);

    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
}

TEST_CASE("Partition statistics") {
    auto m = multiplicities(Partition({2, 1, 1}));
    CHECK(m[1] == 2);
    CHECK(m[2] == 1);
    auto m2 = multiplicities(Partition({5}));
    CHECK(m2[5] == 1);
    auto m3 = multiplicities(Partition({3, 3, 2}));
    CHECK(m3[2] == 1);
    CHECK(m3[3] == 2);

    CHECK(z_of(Partition({1, 1, 1})) == BigInt(6));
    CHECK(z_of(Partition({2, 1})) == BigInt(2));
    CHECK(z_of(Partition({3})) == BigInt(3));

    CHECK(dimension_hook(Partition({7})) == BigInt(1));
    CHECK(dimension_hook(Partition({2, 1})) == BigInt(2));
    for (int n = 2; n <= 9; ++n)
        CHECK(dimension_hook(Partition({n - 1, 1})) == BigInt(n - 1));

    CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(n_stat(Partition({3, 1})) == 1);
    CHECK(n_stat(Partition({1, 1, 1})) == 3);

    for (int n = 0; n <= 12; ++n) {
        BigInt sum_sq, sum_class;
        BigInt nf = BigInt::factorial(static_cast<unsigned>(n));
        for (const auto& lambda : partitions_of(n)) {
            BigInt d = dimension_hook(lambda);
            sum_sq += d * d;
            sum_class += nf / z_of(lambda);
        }
        CHECK(sum_sq == nf);
        CHECK(sum_class == nf);
    }
}

TEST_CASE("Character table values and orthogonality") {
    const CharacterTable& t3 = CharacterTable::get(3);
    CHECK(t3.chi(Partition({1, 1, 1}), Partition({3})) == BigInt(1));
    CHECK(t3.chi(Partition({2, 1}), Partition({1, 1, 1})) == BigInt(2));
    CHECK(t3.chi(Partition({2, 1}), Partition({3})) == BigInt(-1));
    CHECK(t3.chi(Partition({2, 1}), Partition({2, 1})) == BigInt(0));

    for (int n = 0; n <= 10; ++n) {
        const CharacterTable& t = CharacterTable::get(n);
        std::size_t k = t.partitions().size();
        Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
        Partition triv = n > 0 ? Partition({n}) : Partition();
        for (std::size_t li = 0; li < k; ++li) {
            CHECK(t.chi(li, t.index_of(ones)) == t.dim(li));
            CHECK(t.chi(t.index_of(triv), li) == BigInt(1));
        }
        // column orthogonality: sum_lambda chi(lambda,mu) chi(lambda,nu) = delta z_mu
        for (std::size_t mi = 0; mi < k; ++mi) {
            for (std::size_t ni = mi; ni < k; ++ni) {
                BigInt s;
                for (std::size_t li = 0; li < k; ++li) s += t.chi(li, mi) * t.chi(li, ni);
                CHECK(s == (mi == ni ? t.z(mi) : BigInt(0)));
            }
        }
        // row orthogonality: sum_mu (n!/z_mu) chi(l,mu) chi(l',mu) = delta n!
        BigInt nf = BigInt::factorial(static_cast<unsigned>(n));
        for (std::size_t li = 0; li < k; ++li) {
            for (std::size_t lj = li; lj < k; ++lj) {
                BigInt s;
                for (std::size_t mi = 0; mi < k; ++mi)
                    s += (nf / t.z(mi)) * t.chi(li, mi) * t.chi(lj, mi);
                CHECK(s == (li == lj ? nf : BigInt(0)));
            }
        }
    }
}
