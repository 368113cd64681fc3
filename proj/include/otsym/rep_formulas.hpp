#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "otsym/core.hpp"
#include "otsym/symfunc.hpp"

namespace otsym {

inline std::vector<int> divisors(int n) {
    std::vector<int> ds;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) ds.push_back(d);
    return ds;
}

inline int mobius_mu(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline int euler_phi(int n) {
    int phi = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            phi -= phi / p;
        }
    }
    if (n > 1) phi -= phi / n;
    return phi;
}

// Lyndon symmetric function: the characteristic of the induction of a
// primitive character of the cyclic group Z_n up to S_n,
//   l_n = (1/n) sum_{d | n} mu(d) p_d^{n/d}.
// q-free; returned in the Schur basis.
inline SymFunc lyndon(int n, int cap) {
    if (n < 1) throw std::invalid_argument("lyndon: n must be >= 1");
    SymFunc f(n, cap, Basis::power_sum);
    for (int d : divisors(n)) {
        int mu = mobius_mu(d);
        if (mu == 0) continue;
        std::vector<int> parts(static_cast<std::size_t>(n / d), d);
        f.add_term(Partition(std::move(parts)), QSeries::constant(Rational(mu, n), cap));
    }
    return to_schur(f);
}

// Characteristic of C[S_n / Z_n] = Ind_{Z_n}^{S_n}(triv):
//   (1/n) sum_{d | n} phi(d) p_d^{n/d}.
inline SymFunc ch_cyclic_triv(int n) {
    if (n < 1) throw std::invalid_argument("ch_cyclic_triv: n must be >= 1");
    SymFunc f(n, 0, Basis::power_sum);
    for (int d : divisors(n)) {
        std::vector<int> parts(static_cast<std::size_t>(n / d), d);
        f.add_term(Partition(std::move(parts)), QSeries::constant(Rational(euler_phi(d), n), 0));
    }
    return to_schur(f);
}

// Characteristic of the regular representation, p_1^n = sum f^lambda s_lambda.
inline SymFunc ch_regular(int n) {
    if (n < 1) throw std::invalid_argument("ch_regular: n must be >= 1");
    std::vector<int> ones(static_cast<std::size_t>(n), 1);
    return to_schur(SymFunc::powersum(Partition(std::move(ones)), 0));
}

namespace detail {
inline std::mutex& formula_mutex() {
    static std::mutex mu;
    return mu;
}
}  // namespace detail

// ch C_n = sum_{lambda |- n} q^{sum (i-1) m_i} prod_i h_{m_i}[l_i],
// the cohomology of the configuration space of n points in R^3.
// Memoized per (n, cap); Schur basis.
inline SymFunc ch_C(int n, int cap) {
    if (n < 1) throw std::invalid_argument("ch_C: n must be >= 1");
    static std::map<std::pair<int, int>, SymFunc> cache;
    {
        std::lock_guard<std::mutex> lock(detail::formula_mutex());
        auto it = cache.find({n, cap});
        if (it != cache.end()) return it->second;
    }
    SymFunc total(n, cap, Basis::power_sum);
    std::map<int, SymFunc> lyndon_p;  // l_i in the power-sum basis
    for (const auto& lambda : partitions_of(n)) {
        int shift = n - lambda.length();  // sum (i-1) m_i
        if (shift > cap) continue;
        std::vector<int> m = multiplicities(lambda);
        SymFunc prod = SymFunc::unit(cap);
        for (int i = 1; i <= n; ++i) {
            if (m[static_cast<std::size_t>(i)] == 0) continue;
            auto it = lyndon_p.find(i);
            if (it == lyndon_p.end()) it = lyndon_p.emplace(i, to_powersum(lyndon(i, cap))).first;
            prod = outer_product(prod, plethysm(SymFunc::complete_h(m[static_cast<std::size_t>(i)], cap), it->second));
        }
        total = total + prod.scaled(QSeries::q_power(shift, cap));
    }
    SymFunc result = to_schur(total);
    std::lock_guard<std::mutex> lock(detail::formula_mutex());
    return cache.emplace(std::make_pair(n, cap), std::move(result)).first->second;
}

// ch R_n = (1-q) sum_{lambda |- n} s_lambda(1,q,q^2,...) s_lambda, with the
// principal specialization computed as q^{n(lambda)} / prod_cells (1-q^hook).
// Memoized per (n, cap); Schur basis.
inline SymFunc ch_R(int n, int cap) {
    if (n < 1) throw std::invalid_argument("ch_R: n must be >= 1");
    static std::map<std::pair<int, int>, SymFunc> cache;
    {
        std::lock_guard<std::mutex> lock(detail::formula_mutex());
        auto it = cache.find({n, cap});
        if (it != cache.end()) return it->second;
    }
    QSeries one_minus_q = QSeries::one(cap) - QSeries::q_power(1, cap);
    SymFunc result(n, cap, Basis::schur);
    for (const auto& lambda : partitions_of(n)) {
        int shift = n_stat(lambda);
        if (shift > cap) continue;
        QSeries c = QSeries::q_power(shift, cap);
        for (int h : hook_lengths(lambda)) c = c * QSeries::geometric_hook(h, cap);
        result.add_term(lambda, c * one_minus_q);
    }
    std::lock_guard<std::mutex> lock(detail::formula_mutex());
    return cache.emplace(std::make_pair(n, cap), std::move(result)).first->second;
}

// ch W_n: trivial representation in degree zero plus the irreducible
// permutation representation (shape (n-1,1)) in degree two.
inline SymFunc ch_W(int n, int cap) {
    if (n < 2) throw std::invalid_argument("ch_W: n must be >= 2");
    SymFunc f(n, cap, Basis::schur);
    f.add_term(Partition(std::vector<int>{n}), QSeries::one(cap));
    f.add_term(Partition(std::vector<int>{n - 1, 1}), QSeries::q_power(1, cap));
    return f;
}

// ch D_n, recovered from C_n = D_n (x) W_n by graded Kronecker division:
// with W = s_n + q s_{(n-1,1)}, solve D_d = C_d - D_{d-1} * s_{(n-1,1)}
// degree by degree. Divisibility is guaranteed; any non-integral or negative
// Schur coefficient along the way is a fatal consistency error.
// Memoized per (n, cap); Schur basis.
inline SymFunc ch_D(int n, int cap) {
    if (n < 2) throw std::invalid_argument("ch_D: n must be >= 2");
    static std::map<std::pair<int, int>, SymFunc> cache;
    {
        std::lock_guard<std::mutex> lock(detail::formula_mutex());
        auto it = cache.find({n, cap});
        if (it != cache.end()) return it->second;
    }
    SymFunc c_n = ch_C(n, cap);
    SymFunc w1 = SymFunc::schur(Partition(std::vector<int>{n - 1, 1}), 0);
    std::vector<SymFunc> slices;
    slices.reserve(static_cast<std::size_t>(cap) + 1);
    for (int d = 0; d <= cap; ++d) {
        SymFunc rhs = coeff_slice(c_n, d);
        if (d > 0) rhs = to_schur(rhs - to_schur(kronecker(slices[static_cast<std::size_t>(d) - 1], w1)));
        assert_schur_nonneg_integral(rhs, "Kronecker division by W_" + std::to_string(n) +
                                              " failed at q-degree " + std::to_string(d));
        slices.push_back(to_schur(rhs));
    }
    SymFunc result(n, cap, Basis::schur);
    for (int d = 0; d <= cap; ++d)
        for (const auto& [key, c] : slices[static_cast<std::size_t>(d)].terms())
            result.add_term(key, QSeries::q_power(d, cap).scaled(c.coeff(0)));
    std::lock_guard<std::mutex> lock(detail::formula_mutex());
    return cache.emplace(std::make_pair(n, cap), std::move(result)).first->second;
}

}  // namespace otsym
