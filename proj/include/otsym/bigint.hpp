#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace otsym {

// Arbitrary-precision signed integer.
//
// Magnitude is a little-endian vector of 32-bit limbs with no trailing zero
// limbs; sign() is -1, 0 or +1 and is 0 exactly when the magnitude is empty.
// Division truncates toward zero, so the remainder carries the dividend's sign.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // Negate via unsigned arithmetic so LLONG_MIN is handled.
        unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
        if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            r = r * BigInt(10) + BigInt(c - '0');
        }
        if (neg && !r.is_zero()) r.sign_ = -1;
        return r;
    }

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_negative() const { return sign_ < 0; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator-(BigInt a) {
        a.sign_ = -a.sign_;
        return a;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        if (a.mag_.size() == 1 && b.mag_.size() == 1) {
            std::uint64_t p = static_cast<std::uint64_t>(a.mag_[0]) * b.mag_[0];
            r.mag_.push_back(static_cast<std::uint32_t>(p & 0xffffffffULL));
            if (p >> 32) r.mag_.push_back(static_cast<std::uint32_t>(p >> 32));
            return r;
        }
        r.mag_ = mul_mag(a.mag_, b.mag_);
        return r;
    }

    // Truncated division: q = trunc(a/b), r = a - q*b (r has a's sign).
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        if (a.is_zero()) return {BigInt(), BigInt()};
        if (cmp_mag(a.mag_, b.mag_) < 0) return {BigInt(), a};
        auto [qm, rm] = divmod_mag(a.mag_, b.mag_);
        BigInt q, r;
        if (!qm.empty()) {
            q.mag_ = std::move(qm);
            q.sign_ = a.sign_ * b.sign_;
        }
        if (!rm.empty()) {
            r.mag_ = std::move(rm);
            r.sign_ = a.sign_;
        }
        return {q, r};
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    static BigInt gcd(const BigInt& a, const BigInt& b) {
        if (a.is_zero()) return b.abs();
        if (b.is_zero()) return a.abs();
        // Native fast path once both fit in 64 bits; general case peels one
        // Euclid step per round until they do.
        BigInt x = a.abs(), y = b.abs();
        while (true) {
            if (x.mag_.size() <= 2 && y.mag_.size() <= 2) {
                std::uint64_t u = x.to_u64_mag(), v = y.to_u64_mag();
                while (v) {
                    std::uint64_t t = u % v;
                    u = v;
                    v = t;
                }
                return from_u64(u);
            }
            if (cmp_mag(x.mag_, y.mag_) < 0) std::swap(x, y);
            BigInt r = x % y;
            if (r.is_zero()) return y;
            x = std::move(y);
            y = std::move(r);
        }
    }

    static BigInt pow(const BigInt& base, unsigned e) {
        BigInt r(1), b = base;
        while (e) {
            if (e & 1u) r *= b;
            e >>= 1u;
            if (e) b *= b;
        }
        return r;
    }

    static BigInt factorial(unsigned n) {
        BigInt r(1);
        for (unsigned k = 2; k <= n; ++k) r *= BigInt(static_cast<long long>(k));
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        std::uint64_t u = to_u64_mag();
        if (sign_ >= 0) return u <= 0x7fffffffffffffffULL;
        return u <= 0x8000000000000000ULL;
    }

    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit in int64");
        std::uint64_t u = to_u64_mag();
        if (sign_ >= 0) return static_cast<long long>(u);
        return -static_cast<long long>(u - 1) - 1;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            // divide magnitude by 1e9 in place
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    std::uint64_t to_u64_mag() const {
        std::uint64_t u = 0;
        if (mag_.size() > 1) u = static_cast<std::uint64_t>(mag_[1]) << 32;
        if (!mag_.empty()) u |= mag_[0];
        return u;
    }

    static BigInt from_u64(std::uint64_t u) {
        BigInt r;
        if (u == 0) return r;
        r.sign_ = 1;
        r.mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
        if (u >> 32) r.mag_.push_back(static_cast<std::uint32_t>(u >> 32));
        return r;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
            r[i] = static_cast<std::uint32_t>(s & 0xffffffffULL);
            carry = s >> 32;
        }
        r[big.size()] = static_cast<std::uint32_t>(carry);
        trim(r);
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                             (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (d < 0) {
                d += 0x100000000LL;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(d);
        }
        trim(r);
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = r[i + j] + ai * b[j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                std::uint64_t cur = r[k] + carry;
                r[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
                carry = cur >> 32;
                ++k;
            }
        }
        trim(r);
        return r;
    }

    // Magnitude division, |a| >= |b| > 0. Single-limb divisors take a word
    // loop; the general case is plain binary long division, which is ample for
    // the operand sizes this project produces.
    static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
    divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (b.size() == 1) {
            std::vector<std::uint32_t> q(a.size(), 0);
            std::uint64_t rem = 0, d = b[0];
            for (std::size_t i = a.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<std::uint32_t>(cur / d);
                rem = cur % d;
            }
            trim(q);
            std::vector<std::uint32_t> r;
            if (rem) r.push_back(static_cast<std::uint32_t>(rem));
            return {q, r};
        }
        std::size_t bits = a.size() * 32;
        std::vector<std::uint32_t> q(a.size(), 0), r;
        for (std::size_t i = bits; i-- > 0;) {
            shl1(r);
            if ((a[i / 32] >> (i % 32)) & 1u) {
                if (r.empty())
                    r.push_back(1);
                else
                    r[0] |= 1u;
            }
            if (cmp_mag(r, b) >= 0) {
                r = sub_mag(r, b);
                q[i / 32] |= 1u << (i % 32);
            }
        }
        trim(q);
        return {q, r};
    }

    static void shl1(std::vector<std::uint32_t>& v) {
        std::uint32_t carry = 0;
        for (auto& limb : v) {
            std::uint32_t next = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next;
        }
        if (carry) v.push_back(carry);
    }

    static void trim(std::vector<std::uint32_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
};

}  // namespace otsym
