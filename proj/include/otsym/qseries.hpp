#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "otsym/rational.hpp"

namespace otsym {

// Polynomial in q truncated at a fixed cap: all arithmetic is modulo q^{cap+1}.
// Coefficients are exact rationals; coeffs() always has exactly cap+1 entries.
// Values are immutable once built; operations on mixed caps are rejected
// rather than silently re-truncated.
class QSeries {
public:
    explicit QSeries(int cap) : cap_(check_cap(cap)), coeffs_(cap + 1) {}

    QSeries(int cap, std::vector<Rational> coeffs) : cap_(check_cap(cap)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != static_cast<std::size_t>(cap_) + 1)
            throw std::invalid_argument("QSeries: coefficient count must be cap+1");
    }

    static QSeries constant(const Rational& c, int cap) {
        QSeries r(cap);
        r.coeffs_[0] = c;
        return r;
    }

    static QSeries one(int cap) { return constant(Rational(1), cap); }

    // q^d, or zero if d exceeds the cap.
    static QSeries q_power(int d, int cap) {
        QSeries r(cap);
        if (d >= 0 && d <= cap) r.coeffs_[d] = Rational(1);
        return r;
    }

    // Truncation of 1/(1 - q^h).
    static QSeries geometric_hook(int h, int cap) {
        if (h <= 0) throw std::invalid_argument("QSeries::geometric_hook: exponent must be positive");
        QSeries r(cap);
        for (int d = 0; d <= cap; d += h) r.coeffs_[d] = Rational(1);
        return r;
    }

    int cap() const { return cap_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    const Rational& coeff(int d) const {
        if (d < 0 || d > cap_) throw std::out_of_range("QSeries::coeff: degree out of range");
        return coeffs_[d];
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool is_one() const {
        if (!coeffs_[0].is_one()) return false;
        for (int d = 1; d <= cap_; ++d)
            if (!coeffs_[d].is_zero()) return false;
        return true;
    }

    // Highest degree with a nonzero coefficient, or -1 for the zero series.
    int degree() const {
        for (int d = cap_; d >= 0; --d)
            if (!coeffs_[d].is_zero()) return d;
        return -1;
    }

    int min_degree() const {
        for (int d = 0; d <= cap_; ++d)
            if (!coeffs_[d].is_zero()) return d;
        return -1;
    }

    // Explicit re-truncation. Extending the cap appends zero coefficients and
    // is only meaningful for values known to be genuine polynomials within the
    // old cap (the callers that use it hold exactly such values).
    QSeries recap(int new_cap) const {
        QSeries r(new_cap);
        for (int d = 0; d <= std::min(cap_, new_cap); ++d) r.coeffs_[d] = coeffs_[d];
        return r;
    }

    // q -> q^k: the coefficient of q^j moves to q^{jk}; terms past cap drop.
    QSeries substitute_power(int k) const {
        if (k <= 0) throw std::invalid_argument("QSeries::substitute_power: k must be positive");
        if (k == 1) return *this;
        QSeries r(cap_);
        for (int j = 0; j <= cap_ / k; ++j) r.coeffs_[j * k] = coeffs_[j];
        return r;
    }

    Rational eval_one() const {
        Rational s;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        check_same_cap(a, b);
        QSeries r(a.cap_);
        for (int d = 0; d <= a.cap_; ++d) r.coeffs_[d] = a.coeffs_[d] + b.coeffs_[d];
        return r;
    }

    friend QSeries operator-(const QSeries& a, const QSeries& b) {
        check_same_cap(a, b);
        QSeries r(a.cap_);
        for (int d = 0; d <= a.cap_; ++d) r.coeffs_[d] = a.coeffs_[d] - b.coeffs_[d];
        return r;
    }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        check_same_cap(a, b);
        QSeries r(a.cap_);
        for (int i = 0; i <= a.cap_; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.cap_; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    QSeries& operator+=(const QSeries& b) { return *this = *this + b; }
    QSeries& operator-=(const QSeries& b) { return *this = *this - b; }

    QSeries scaled(const Rational& c) const {
        QSeries r(cap_);
        if (c.is_zero()) return r;
        for (int d = 0; d <= cap_; ++d)
            if (!coeffs_[d].is_zero()) r.coeffs_[d] = coeffs_[d] * c;
        return r;
    }

    // Multiplication by q^d (with truncation).
    QSeries shifted(int d) const {
        QSeries r(cap_);
        for (int j = 0; j + d <= cap_; ++j)
            if (j + d >= 0) r.coeffs_[j + d] = coeffs_[j];
        return r;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.cap_ == b.cap_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    bool all_nonneg_integers() const {
        for (const auto& c : coeffs_)
            if (!c.is_integer() || c.is_negative()) return false;
        return true;
    }

    // Human-readable polynomial, e.g. "1 + 3q + 2q^2"; "0" for zero.
    std::string to_string() const {
        std::string out;
        for (int d = 0; d <= cap_; ++d) {
            const Rational& c = coeffs_[d];
            if (c.is_zero()) continue;
            Rational a = c.is_negative() ? -c : c;
            std::string mono = d == 0 ? "" : (d == 1 ? "q" : "q^" + std::to_string(d));
            std::string body = (a.is_one() && d > 0) ? mono : a.to_string() + mono;
            if (out.empty())
                out = c.is_negative() ? "-" + body : body;
            else
                out += (c.is_negative() ? " - " : " + ") + body;
        }
        return out.empty() ? "0" : out;
    }

private:
    int cap_;
    std::vector<Rational> coeffs_;

    static int check_cap(int cap) {
        if (cap < 0) throw std::invalid_argument("QSeries: cap must be nonnegative");
        return cap;
    }

    static void check_same_cap(const QSeries& a, const QSeries& b) {
        if (a.cap_ != b.cap_) throw std::invalid_argument("QSeries: cap mismatch");
    }
};

}  // namespace otsym
