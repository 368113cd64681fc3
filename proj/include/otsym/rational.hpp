#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "otsym/bigint.hpp"

namespace otsym {

// Exact rational number over BigInt. Always normalized: denominator positive,
// gcd(|num|, den) = 1, and zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_integer() const { return den_.is_one(); }

    friend Rational operator-(Rational a) {
        a.num_ = -a.num_;
        return a;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ + b.num_);
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.is_zero() || b.is_zero()) return Rational();
        // Cross-reduce first to keep intermediates small.
        BigInt g1 = BigInt::gcd(a.num_, b.den_);
        BigInt g2 = BigInt::gcd(b.num_, a.den_);
        Rational r;
        r.num_ = (a.num_ / g1) * (b.num_ / g2);
        r.den_ = (a.den_ / g2) * (b.den_ / g1);
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        if (a.is_zero()) return Rational();
        Rational inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        if (inv.den_.is_negative()) {
            inv.num_ = -inv.num_;
            inv.den_ = -inv.den_;
        }
        return a * inv;
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (a.num_ * b.den_) < (b.num_ * a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

}  // namespace otsym
