#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "otsym/core.hpp"
#include "otsym/parallel.hpp"
#include "otsym/rep_formulas.hpp"
#include "otsym/symfunc.hpp"

namespace otsym {

// In-memory table of ch M_n values (Schur basis, cap max(n-2, 0), i.e. the
// full polynomial). Entries are contiguous starting at 1 and every entry must
// be Schur-nonnegative with integer coefficients. Concurrent reads are safe;
// writes are serialized internally.
class MnCache {
public:
    bool has(int n) const {
        std::lock_guard<std::mutex> lock(mu_);
        return entries_.count(n) > 0;
    }

    int max_n() const {
        std::lock_guard<std::mutex> lock(mu_);
        return entries_.empty() ? 0 : entries_.rbegin()->first;
    }

    const SymFunc& get(int n) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = entries_.find(n);
        if (it == entries_.end())
            throw std::invalid_argument("MnCache: ch M_" + std::to_string(n) + " not computed yet");
        return it->second;
    }

    void put(int n, SymFunc ch_m) {
        if (n < 1) throw std::invalid_argument("MnCache: n must be >= 1");
        assert_schur_nonneg_integral(ch_m, "MnCache entry " + std::to_string(n));
        std::lock_guard<std::mutex> lock(mu_);
        if (n > 1 && entries_.count(n - 1) == 0)
            throw std::invalid_argument("MnCache: entries must be inserted contiguously");
        entries_.insert_or_assign(n, std::move(ch_m));
    }

private:
    mutable std::mutex mu_;
    std::map<int, SymFunc> entries_;  // node stability keeps get() references valid
};

// Base cases of the recursion: OT_1 = C and OT_2 is free of rank one over R_2,
// so M_1 = s_1 and M_2 = s_2, both concentrated in q-degree 0.
inline SymFunc ch_M_base(int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("ch_M_base: i must be 1 or 2");
    return SymFunc::schur(Partition(std::vector<int>{i}), 0);
}

// Degree reversal ch M_i^c(q) = q^{2(i-1)} ch M_i(1/q): the q-degree d
// coefficient of the result is the q-degree 2(i-1)-d coefficient of ch M_i.
// For i >= 2 the support is q^i .. q^{2(i-1)}; for i = 1 it is s_1 at q^0.
// The input must carry the full polynomial (cap >= i-2).
inline SymFunc ch_M_compact(const SymFunc& ch_m, int cap) {
    int i = ch_m.degree();
    if (i < 1) throw std::invalid_argument("ch_M_compact: degree must be >= 1");
    if (ch_m.cap() < std::max(i - 2, 0))
        throw std::invalid_argument("ch_M_compact: input is truncated below its top degree");
    int top = 2 * (i - 1);
    SymFunc fs = to_schur(ch_m);
    SymFunc r(i, cap, Basis::schur);
    for (const auto& [lambda, c] : fs.terms()) {
        for (int d = 0; d <= c.cap(); ++d) {
            if (c.coeff(d).is_zero()) continue;
            int flipped = top - d;
            if (flipped <= cap) r.add_term(lambda, QSeries::q_power(flipped, cap).scaled(c.coeff(d)));
        }
    }
    return r;
}

namespace detail {

// One summand of the recursion: the tuple (nu_1, ..., nu_n) with nu_i a
// partition of m_i(lambda), recorded as the sparse list of (i, nu_i) with
// m_i > 0.
struct RecursionTerm {
    std::vector<std::pair<int, Partition>> nus;
    int min_q_degree = 0;  // sum over i >= 2 of i * m_i
};

inline std::vector<RecursionTerm> recursion_terms(int n, int cap, bool prune) {
    std::vector<RecursionTerm> terms;
    for (const auto& lambda : partitions_of(n)) {
        std::vector<int> m = multiplicities(lambda);
        int min_deg = 0;
        for (int i = 2; i <= n; ++i) min_deg += i * m[static_cast<std::size_t>(i)];
        if (prune && min_deg > cap) continue;
        std::vector<int> sizes;  // the i with m_i > 0, ascending
        for (int i = 1; i <= n; ++i)
            if (m[static_cast<std::size_t>(i)] > 0) sizes.push_back(i);
        // Odometer over per-size partition choices, each lexicographic
        // descending, rightmost digit fastest.
        std::vector<std::size_t> idx(sizes.size(), 0);
        while (true) {
            RecursionTerm t;
            t.min_q_degree = min_deg;
            for (std::size_t s = 0; s < sizes.size(); ++s)
                t.nus.emplace_back(sizes[s], partitions_of(m[static_cast<std::size_t>(sizes[s])])[idx[s]]);
            terms.push_back(std::move(t));
            std::size_t pos = sizes.size();
            while (pos > 0) {
                --pos;
                if (++idx[pos] < partitions_of(m[static_cast<std::size_t>(sizes[pos])]).size()) break;
                idx[pos] = 0;
                if (pos == 0) {
                    pos = sizes.size() + 1;  // full wrap: done
                    break;
                }
            }
            if (pos == sizes.size() + 1 || sizes.empty()) break;
        }
    }
    return terms;
}

}  // namespace detail

// The recursion for the Orlik-Terao characteristic, truncated at q^cap:
//
//   ch OT_n = sum over tuples (nu_1,...,nu_n), sum i |nu_i| = n, of
//       < s_{nu_1} ... s_{nu_n}, ch C_{sum |nu_i|} >
//       * prod_i s_{nu_i}[ ch M_i^c * ch R_i ]
//
// where * inside the plethysm bracket is the Kronecker product and the outer
// prod is the ordinary product. Terms whose minimal q-degree exceeds cap are
// pruned before evaluation; with cap <= n-2 this removes every appearance of
// ch M_n, so the cache only needs entries 1..n-1. Result is Schur basis.
//
// prune=false evaluates every tuple (then the cache must also hold ch M_n);
// it exists so tests can confirm pruning never changes the result.
inline SymFunc ch_OT_truncated(int n, int cap, const MnCache& cache, int jobs = 1, bool prune = true) {
    if (n < 2) throw std::invalid_argument("ch_OT_truncated: n must be >= 2");
    if (cap < 0) throw std::invalid_argument("ch_OT_truncated: cap must be >= 0");
    if (prune && cap > n - 2)
        throw std::invalid_argument("ch_OT_truncated: cap must be <= n-2 (the lambda=(n) term would need ch M_n)");
    int need = prune ? n - 1 : n;
    for (int i = 1; i <= need; ++i)
        if (!cache.has(i))
            throw std::invalid_argument("ch_OT_truncated: cache is missing ch M_" + std::to_string(i));

    std::vector<detail::RecursionTerm> terms = detail::recursion_terms(n, cap, prune);

    // Shared immutable ingredients, built up front: the Kronecker factors
    // ch M_i^c * ch R_i and the ch C_l values the brackets pair against.
    std::map<int, SymFunc> inner;  // i -> ch M_i^c * ch R_i (power-sum basis)
    std::map<int, SymFunc> c_pow;  // l -> ch C_l (power-sum basis)
    for (const auto& t : terms) {
        int l = 0;
        for (const auto& [i, nu] : t.nus) {
            l += nu.n();
            if (!inner.count(i))
                inner.emplace(i, to_powersum(kronecker(ch_M_compact(cache.get(i), cap), ch_R(i, cap))));
        }
        if (!c_pow.count(l)) c_pow.emplace(l, to_powersum(ch_C(l, cap)));
    }

    auto evaluate = [&](std::size_t ti) -> SymFunc {
        const detail::RecursionTerm& t = terms[ti];
        int l = 0;
        SymFunc bracket_arg = SymFunc::unit(cap);
        for (const auto& [i, nu] : t.nus) {
            l += nu.n();
            bracket_arg = outer_product(bracket_arg, SymFunc::schur(nu, cap));
        }
        QSeries bracket = hall_inner(bracket_arg, c_pow.at(l));
        SymFunc result(n, cap, Basis::power_sum);
        if (bracket.is_zero()) return result;
        SymFunc prod = SymFunc::unit(cap);
        for (const auto& [i, nu] : t.nus)
            prod = outer_product(prod, plethysm(SymFunc::schur(nu, cap), inner.at(i)));
        return prod.scaled(bracket);
    };

    std::vector<SymFunc> parts = parallel_map<SymFunc>(terms.size(), jobs, evaluate);
    SymFunc total(n, cap, Basis::power_sum);
    for (const auto& part : parts)
        if (!part.is_zero()) total = total + part;
    return to_schur(total);
}

// Recover ch M_n from ch OT_n = ch R_n * ch M_n (Kronecker, bilinear over q)
// by degreewise division: with R_0 = s_n the Kronecker identity,
//   M_d = OT_d - sum_{j=1..d} R_j * M_{d-j}.
// The result is stored in the cache and returned. Division must come out
// Schur-nonnegative and integral; anything else is a fatal consistency error.
inline SymFunc extract_M(int n, MnCache& cache, int jobs = 1) {
    if (n < 2) throw std::invalid_argument("extract_M: n must be >= 2");
    int cap = std::max(n - 2, 0);
    SymFunc ot = ch_OT_truncated(n, cap, cache, jobs);
    SymFunc r_n = ch_R(n, cap);
    std::vector<SymFunc> m_slices;
    m_slices.reserve(static_cast<std::size_t>(cap) + 1);
    for (int d = 0; d <= cap; ++d) {
        SymFunc rhs = coeff_slice(ot, d);
        for (int j = 1; j <= d; ++j) {
            SymFunc r_j = coeff_slice(r_n, j);
            if (r_j.is_zero()) continue;
            rhs = rhs - to_schur(kronecker(r_j, m_slices[static_cast<std::size_t>(d - j)]));
        }
        assert_schur_nonneg_integral(rhs, "Kronecker division by ch R_" + std::to_string(n) +
                                              " failed at q-degree " + std::to_string(d));
        m_slices.push_back(rhs);
    }
    SymFunc result(n, cap, Basis::schur);
    for (int d = 0; d <= cap; ++d)
        for (const auto& [key, c] : m_slices[static_cast<std::size_t>(d)].terms())
            result.add_term(key, QSeries::q_power(d, cap).scaled(c.coeff(0)));
    cache.put(n, result);
    return result;
}

// Make sure ch M_1 .. ch M_n are all present, computing missing entries in
// order (base cases for 1 and 2, the recursion beyond).
inline void ensure_M(MnCache& cache, int n, int jobs = 1) {
    for (int i = 1; i <= std::min(n, 2); ++i)
        if (!cache.has(i)) cache.put(i, ch_M_base(i));
    for (int i = 3; i <= n; ++i)
        if (!cache.has(i)) extract_M(i, cache, jobs);
}

}  // namespace otsym
