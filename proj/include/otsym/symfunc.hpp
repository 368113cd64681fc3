#pragma once

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "otsym/character_table.hpp"
#include "otsym/core.hpp"
#include "otsym/partition.hpp"
#include "otsym/qseries.hpp"

namespace otsym {

enum class Basis { schur, power_sum };

// Graded symmetric function of a fixed symmetric degree n: a sparse map from
// partitions of n to truncated q-polynomials, tagged with the basis the keys
// refer to. This is the graded Frobenius characteristic of a (virtual) graded
// S_n representation: the q^i coefficient is the characteristic of the degree
// 2i part.
//
// PowerSum is the working basis (products, Kronecker, inner product and
// plethysm are monomial or diagonal there); Schur is the presentation basis.
// Zero coefficients are pruned, so term iteration is always in canonical
// (lexicographic descending) order over nonzero keys.
class SymFunc {
public:
    using Terms = std::map<Partition, QSeries, PartitionOrder>;

    SymFunc(int degree, int cap, Basis basis) : degree_(degree), cap_(cap), basis_(basis) {
        if (degree < 0) throw std::invalid_argument("SymFunc: negative degree");
        if (cap < 0) throw std::invalid_argument("SymFunc: negative cap");
    }

    // The multiplicative unit: degree 0, sole term the empty partition.
    static SymFunc unit(int cap) {
        SymFunc f(0, cap, Basis::power_sum);
        f.add_term(Partition(), QSeries::one(cap));
        return f;
    }

    static SymFunc schur(const Partition& lambda, int cap) {
        SymFunc f(lambda.n(), cap, Basis::schur);
        f.add_term(lambda, QSeries::one(cap));
        return f;
    }

    static SymFunc powersum(const Partition& mu, int cap) {
        SymFunc f(mu.n(), cap, Basis::power_sum);
        f.add_term(mu, QSeries::one(cap));
        return f;
    }

    // h_m = sum_{mu |- m} p_mu / z_mu.
    static SymFunc complete_h(int m, int cap) {
        SymFunc f(m, cap, Basis::power_sum);
        for (const auto& mu : partitions_of(m))
            f.add_term(mu, QSeries::constant(Rational(BigInt(1), z_of(mu)), cap));
        return f;
    }

    // e_m = sum_{mu |- m} (-1)^{m - l(mu)} p_mu / z_mu.
    static SymFunc elementary_e(int m, int cap) {
        SymFunc f(m, cap, Basis::power_sum);
        for (const auto& mu : partitions_of(m)) {
            Rational c(BigInt(1), z_of(mu));
            if ((m - mu.length()) % 2 != 0) c = -c;
            f.add_term(mu, QSeries::constant(c, cap));
        }
        return f;
    }

    int degree() const { return degree_; }
    int cap() const { return cap_; }
    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    QSeries coeff(const Partition& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? QSeries(cap_) : it->second;
    }

    // Accumulate a term; zero results are pruned.
    void add_term(const Partition& key, const QSeries& c) {
        if (key.n() != degree_) throw std::invalid_argument("SymFunc::add_term: wrong degree");
        if (c.cap() != cap_) throw std::invalid_argument("SymFunc::add_term: cap mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend SymFunc operator+(const SymFunc& a, const SymFunc& b) {
        check_compatible(a, b, true);
        SymFunc r = a;
        for (const auto& [key, c] : b.terms_) r.add_term(key, c);
        return r;
    }

    friend SymFunc operator-(const SymFunc& a, const SymFunc& b) {
        check_compatible(a, b, true);
        SymFunc r = a;
        for (const auto& [key, c] : b.terms_) r.add_term(key, c.scaled(Rational(-1)));
        return r;
    }

    SymFunc scaled(const QSeries& s) const {
        SymFunc r(degree_, cap_, basis_);
        if (s.cap() != cap_) throw std::invalid_argument("SymFunc::scaled: cap mismatch");
        for (const auto& [key, c] : terms_) r.add_term(key, c * s);
        return r;
    }

    SymFunc scaled(const Rational& s) const {
        SymFunc r(degree_, cap_, basis_);
        for (const auto& [key, c] : terms_) r.add_term(key, c.scaled(s));
        return r;
    }

    // Explicit re-truncation (extension pads with zeros; meaningful only for
    // values that are genuine polynomials within the old cap).
    SymFunc recap(int new_cap) const {
        SymFunc r(degree_, new_cap, basis_);
        for (const auto& [key, c] : terms_) r.add_term(key, c.recap(new_cap));
        return r;
    }

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.degree_ == b.degree_ && a.cap_ == b.cap_ && a.basis_ == b.basis_ &&
               a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string prefix = basis_ == Basis::schur ? "s" : "p";
        std::string out;
        for (const auto& [key, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += prefix + key.to_string() + "*(" + c.to_string() + ")";
        }
        return out;
    }

    static void check_compatible(const SymFunc& a, const SymFunc& b, bool need_same_basis) {
        if (a.degree_ != b.degree_) throw std::invalid_argument("SymFunc: degree mismatch");
        if (a.cap_ != b.cap_) throw std::invalid_argument("SymFunc: cap mismatch");
        if (need_same_basis && a.basis_ != b.basis_)
            throw std::invalid_argument("SymFunc: basis mismatch");
    }

private:
    int degree_;
    int cap_;
    Basis basis_;
    Terms terms_;
};

// Basis change via s_lambda = sum_mu (chi^lambda_mu / z_mu) p_mu.
inline SymFunc to_powersum(const SymFunc& f) {
    if (f.basis() == Basis::power_sum) return f;
    const CharacterTable& tab = CharacterTable::get(f.degree());
    SymFunc r(f.degree(), f.cap(), Basis::power_sum);
    for (const auto& [lambda, c] : f.terms()) {
        std::size_t li = tab.index_of(lambda);
        for (std::size_t mi = 0; mi < tab.partitions().size(); ++mi) {
            const BigInt& x = tab.chi(li, mi);
            if (x.is_zero()) continue;
            r.add_term(tab.partitions()[mi], c.scaled(Rational(x, tab.z(mi))));
        }
    }
    return r;
}

// Inverse basis change via p_mu = sum_lambda chi^lambda_mu s_lambda.
inline SymFunc to_schur(const SymFunc& f) {
    if (f.basis() == Basis::schur) return f;
    const CharacterTable& tab = CharacterTable::get(f.degree());
    SymFunc r(f.degree(), f.cap(), Basis::schur);
    for (const auto& [mu, c] : f.terms()) {
        std::size_t mi = tab.index_of(mu);
        for (std::size_t li = 0; li < tab.partitions().size(); ++li) {
            const BigInt& x = tab.chi(li, mi);
            if (x.is_zero()) continue;
            r.add_term(tab.partitions()[li], c.scaled(Rational(x)));
        }
    }
    return r;
}

inline SymFunc to_basis(const SymFunc& f, Basis b) {
    return b == Basis::power_sum ? to_powersum(f) : to_schur(f);
}

namespace detail {
// Multiset union of parts, kept weakly decreasing.
inline Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<int>());
    return Partition(std::move(parts));
}
}  // namespace detail

// Product in the ring of symmetric functions (induction product): p_mu p_nu is
// the merged partition, with q-coefficients multiplying as series. Degrees
// add. Result is in the power-sum basis.
inline SymFunc outer_product(const SymFunc& f, const SymFunc& g) {
    if (f.cap() != g.cap()) throw std::invalid_argument("outer_product: cap mismatch");
    SymFunc fp = to_powersum(f), gp = to_powersum(g);
    SymFunc r(f.degree() + g.degree(), f.cap(), Basis::power_sum);
    for (const auto& [mu, a] : fp.terms())
        for (const auto& [nu, b] : gp.terms()) r.add_term(detail::merge_parts(mu, nu), a * b);
    return r;
}

// Kronecker (internal) product: diagonal in the power-sum basis,
// p_mu * p_mu = z_mu p_mu, with the attached q-polynomials multiplying.
inline SymFunc kronecker(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("kronecker: degree mismatch");
    if (f.cap() != g.cap()) throw std::invalid_argument("kronecker: cap mismatch");
    SymFunc fp = to_powersum(f), gp = to_powersum(g);
    SymFunc r(f.degree(), f.cap(), Basis::power_sum);
    for (const auto& [mu, a] : fp.terms()) {
        auto it = gp.terms().find(mu);
        if (it == gp.terms().end()) continue;
        r.add_term(mu, (a * it->second).scaled(Rational(z_of(mu))));
    }
    return r;
}

// Hall inner product <p_mu, p_nu> = delta z_mu, extended bilinearly; the
// q-polynomials of matching keys multiply. For graded characteristics of
// honest representations this is H(Hom_{S_n}(V, V'), q).
inline QSeries hall_inner(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("hall_inner: degree mismatch");
    if (f.cap() != g.cap()) throw std::invalid_argument("hall_inner: cap mismatch");
    SymFunc fp = to_powersum(f), gp = to_powersum(g);
    QSeries r(f.cap());
    for (const auto& [mu, a] : fp.terms()) {
        auto it = gp.terms().find(mu);
        if (it == gp.terms().end()) continue;
        r += (a * it->second).scaled(Rational(z_of(mu)));
    }
    return r;
}

namespace detail {
// p_k applied plethystically to g: every p_j becomes p_{jk} and q becomes q^k.
inline SymFunc power_plethysm(int k, const SymFunc& g_power) {
    SymFunc r(g_power.degree() * k, g_power.cap(), Basis::power_sum);
    for (const auto& [mu, c] : g_power.terms()) {
        std::vector<int> scaled;
        scaled.reserve(mu.parts().size());
        for (int p : mu.parts()) scaled.push_back(p * k);
        r.add_term(Partition(std::move(scaled)), c.substitute_power(k));
    }
    return r;
}
}  // namespace detail

// Plethysm f[g]. In the power-sum basis this is the algebra morphism sending
// p_k to p_k[g]; the grading rule is that p_k also replaces q by q^k inside g,
// while f's own q-coefficients ride along untouched. Requires deg g >= 1.
inline SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
    if (f.cap() != g.cap()) throw std::invalid_argument("plethysm: cap mismatch");
    if (g.degree() < 1) throw std::invalid_argument("plethysm: inner argument must have degree >= 1");
    SymFunc fp = to_powersum(f), gp = to_powersum(g);
    SymFunc r(f.degree() * g.degree(), f.cap(), Basis::power_sum);
    // Cache p_k[g] for the part sizes that occur in f.
    std::map<int, SymFunc> pk;
    for (const auto& [mu, c] : fp.terms()) {
        SymFunc prod = SymFunc::unit(f.cap());
        for (int k : mu.parts()) {
            auto it = pk.find(k);
            if (it == pk.end()) it = pk.emplace(k, detail::power_plethysm(k, gp)).first;
            prod = outer_product(prod, it->second);
        }
        r = r + prod.scaled(c);
    }
    return r;
}

// Restriction to S_{n-1} (skew by p_1): in the power-sum basis p_1^perp sends
// p_mu to m_1(mu) p_{mu minus one part 1}. On Schur functions this is the
// branching rule (remove one box).
inline SymFunc restrict_once(const SymFunc& f) {
    if (f.degree() < 1) throw std::invalid_argument("restrict_once: degree must be >= 1");
    SymFunc fp = to_powersum(f);
    SymFunc r(f.degree() - 1, f.cap(), Basis::power_sum);
    for (const auto& [mu, c] : fp.terms()) {
        const auto& parts = mu.parts();
        if (parts.empty() || parts.back() != 1) continue;
        int m1 = 0;
        for (auto it = parts.rbegin(); it != parts.rend() && *it == 1; ++it) ++m1;
        std::vector<int> rest(parts.begin(), parts.end() - 1);
        r.add_term(Partition(std::move(rest)), c.scaled(Rational(m1)));
    }
    return r;
}

// Forget the grading: q := 1 coefficientwise. The result has cap 0.
inline SymFunc specialize_q1(const SymFunc& f) {
    SymFunc r(f.degree(), 0, f.basis());
    for (const auto& [key, c] : f.terms()) r.add_term(key, QSeries::constant(c.eval_one(), 0));
    return r;
}

// H(V, q) = sum_lambda c_lambda(q) f^lambda over the Schur expansion.
inline QSeries graded_dimension(const SymFunc& f) {
    SymFunc fs = to_schur(f);
    QSeries r(f.cap());
    for (const auto& [lambda, c] : fs.terms()) r += c.scaled(Rational(dimension_hook(lambda)));
    return r;
}

// The q^d coefficient as a q-free SymFunc (cap 0), same basis.
inline SymFunc coeff_slice(const SymFunc& f, int d) {
    SymFunc r(f.degree(), 0, f.basis());
    if (d < 0 || d > f.cap()) return r;
    for (const auto& [key, c] : f.terms()) r.add_term(key, QSeries::constant(c.coeff(d), 0));
    return r;
}

// Structural equality in canonical Schur form.
inline bool schur_equal(const SymFunc& a, const SymFunc& b) {
    if (a.degree() != b.degree() || a.cap() != b.cap()) return false;
    return to_schur(a).terms() == to_schur(b).terms();
}

// Every Schur coefficient must be a polynomial in q with nonnegative integer
// coefficients; violations signal an implementation bug upstream.
inline void assert_schur_nonneg_integral(const SymFunc& f, const std::string& context) {
    SymFunc fs = to_schur(f);
    for (const auto& [lambda, c] : fs.terms()) {
        if (!c.all_nonneg_integers())
            throw consistency_error(context + ": non-integral or negative Schur coefficient at s" +
                                    lambda.to_string() + " (" + c.to_string() + ")");
    }
}

}  // namespace otsym
