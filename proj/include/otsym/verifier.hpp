#pragma once

#include <optional>
#include <string>
#include <vector>

#include "otsym/ot_recursion.hpp"
#include "otsym/rep_formulas.hpp"
#include "otsym/symfunc.hpp"

namespace otsym {

// One discrepant cell of a failed identity check. For scalar (dimension)
// identities the partition is absent.
struct CheckWitness {
    std::optional<Partition> partition;
    int q_degree = 0;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::string check;
    int n = 0;
    bool pass = true;
    std::vector<CheckWitness> witnesses;
};

namespace detail {

// Compare two graded characteristics cell by cell in canonical Schur form.
inline void diff_symfunc(const SymFunc& lhs, const SymFunc& rhs, CheckReport& report) {
    SymFunc a = to_schur(lhs), b = to_schur(rhs);
    int cap = std::max(a.cap(), b.cap());
    std::vector<Partition> keys;
    for (const auto& [key, c] : a.terms()) keys.push_back(key);
    for (const auto& [key, c] : b.terms())
        if (!std::count(keys.begin(), keys.end(), key)) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), PartitionOrder{});
    for (const auto& key : keys) {
        QSeries ca = a.coeff(key).recap(cap), cb = b.coeff(key).recap(cap);
        for (int d = 0; d <= cap; ++d) {
            if (ca.coeff(d) == cb.coeff(d)) continue;
            report.pass = false;
            report.witnesses.push_back({key, d, ca.coeff(d).to_string(), cb.coeff(d).to_string()});
        }
    }
}

inline void diff_qseries(const QSeries& lhs, const QSeries& rhs, CheckReport& report) {
    for (int d = 0; d <= std::max(lhs.cap(), rhs.cap()); ++d) {
        Rational a = d <= lhs.cap() ? lhs.coeff(d) : Rational();
        Rational b = d <= rhs.cap() ? rhs.coeff(d) : Rational();
        if (a == b) continue;
        report.pass = false;
        report.witnesses.push_back({std::nullopt, d, a.to_string(), b.to_string()});
    }
}

// prod_{k=1}^{m} (1 + k q), the broken-circuit product.
inline QSeries poincare_product(int m, int cap) {
    QSeries p = QSeries::one(cap);
    for (int k = 1; k <= m; ++k)
        p = p * (QSeries::one(cap) + QSeries::q_power(1, cap).scaled(Rational(k)));
    return p;
}

}  // namespace detail

// The flagship check: ch M_n (from the recursion) equals ch D_n (from the
// closed C_n formula and Kronecker division by W_n), term by term in the
// Schur basis at cap n-2.
inline CheckReport check_conjecture_main(int n, MnCache& cache) {
    CheckReport report{"conjecture_main", n, true, {}};
    ensure_M(cache, n);
    int cap = std::max(n - 2, 0);
    detail::diff_symfunc(cache.get(n), ch_D(n, cap), report);
    return report;
}

// Both graded dimensions equal prod_{k=1}^{n-2} (1 + k q).
inline CheckReport check_poincare(int n, MnCache& cache) {
    CheckReport report{"poincare", n, true, {}};
    ensure_M(cache, n);
    int cap = std::max(n - 2, 0);
    QSeries target = detail::poincare_product(n - 2, cap);
    detail::diff_qseries(graded_dimension(cache.get(n)), target, report);
    detail::diff_qseries(graded_dimension(ch_D(n, cap)), target, report);
    return report;
}

// Res_{S_{n-1}}^{S_n} D_n = C_{n-1}.
inline CheckReport check_restriction(int n, MnCache&) {
    CheckReport report{"restriction", n, true, {}};
    int cap = std::max(n - 2, 0);
    detail::diff_symfunc(restrict_once(ch_D(n, cap)), ch_C(n - 1, cap), report);
    return report;
}

// Ungraded: D_n forgets to C[S_n/Z_n], and so does M_n.
inline CheckReport check_ungraded(int n, MnCache& cache) {
    CheckReport report{"ungraded", n, true, {}};
    ensure_M(cache, n);
    int cap = std::max(n - 2, 0);
    SymFunc cyc = ch_cyclic_triv(n);
    detail::diff_symfunc(specialize_q1(ch_D(n, cap)), cyc, report);
    detail::diff_symfunc(specialize_q1(cache.get(n)), cyc, report);
    return report;
}

// C_n = D_n (x) W_n (reconstruction after the division).
inline CheckReport check_cdw(int n, MnCache&) {
    CheckReport report{"cdw", n, true, {}};
    int cap = std::max(n - 1, 0);
    detail::diff_symfunc(kronecker(ch_D(n, cap), ch_W(n, cap)), ch_C(n, cap), report);
    return report;
}

// Ungraded C_n is the regular representation.
inline CheckReport check_regular(int n, MnCache&) {
    CheckReport report{"regular", n, true, {}};
    detail::diff_symfunc(specialize_q1(ch_C(n, std::max(n - 1, 0))), ch_regular(n), report);
    return report;
}

// M_n and D_n agree in q-degrees 0, 1, 2 (cohomological degrees 0, 2, 4),
// independently of the full conjecture check.
inline CheckReport check_degrees_024(int n, MnCache& cache) {
    CheckReport report{"degrees_024", n, true, {}};
    ensure_M(cache, n);
    int cap = std::max(n - 2, 0);
    SymFunc d_n = ch_D(n, cap);
    for (int d = 0; d <= std::min(2, cap); ++d) {
        CheckReport sub{"", n, true, {}};
        detail::diff_symfunc(coeff_slice(cache.get(n), d), coeff_slice(d_n, d), sub);
        for (auto& w : sub.witnesses) {
            w.q_degree = d;
            report.witnesses.push_back(w);
        }
        report.pass = report.pass && sub.pass;
    }
    return report;
}

inline const std::vector<std::string>& verifier_check_names() {
    static const std::vector<std::string> names = {
        "conjecture_main", "poincare", "restriction", "ungraded", "cdw", "regular", "degrees_024"};
    return names;
}

inline CheckReport run_verifier_check(const std::string& name, int n, MnCache& cache) {
    if (name == "conjecture_main") return check_conjecture_main(n, cache);
    if (name == "poincare") return check_poincare(n, cache);
    if (name == "restriction") return check_restriction(n, cache);
    if (name == "ungraded") return check_ungraded(n, cache);
    if (name == "cdw") return check_cdw(n, cache);
    if (name == "regular") return check_regular(n, cache);
    if (name == "degrees_024") return check_degrees_024(n, cache);
    throw std::invalid_argument("unknown check: " + name);
}

}  // namespace otsym
