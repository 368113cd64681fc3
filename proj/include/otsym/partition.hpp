#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "otsym/bigint.hpp"

namespace otsym {

// Integer partition: weakly decreasing sequence of positive parts. The empty
// sequence is the unique partition of 0. The sum is cached.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
            n_ += parts_[i];
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Lexicographic-descending order: for partitions of the same n, (n) comes
// first and (1,...,1) last. This is the canonical order for every iteration
// and serialization in the project.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        return b.parts() < a.parts();
    }
};

// All partitions of n in lexicographic-descending order.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// Memoized view of enumerate_partitions; safe for concurrent use.
inline const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enumerate_partitions(n)).first;
    return it->second;
}

// m[i] = number of parts equal to i, for i in 1..n (index 0 unused).
inline std::vector<int> multiplicities(const Partition& lambda) {
    std::vector<int> m(static_cast<std::size_t>(lambda.n()) + 1, 0);
    for (int p : lambda.parts()) m[static_cast<std::size_t>(p)]++;
    return m;
}

// Centralizer order z_lambda = prod_i i^{m_i} m_i!.
inline BigInt z_of(const Partition& lambda) {
    BigInt z(1);
    int run = 0, prev = 0;
    for (int p : lambda.parts()) {
        run = (p == prev) ? run + 1 : 1;
        prev = p;
        z *= BigInt(p) * BigInt(run);
    }
    return z;
}

inline Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return Partition();
    std::vector<int> t(static_cast<std::size_t>(lambda.parts()[0]), 0);
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j) t[static_cast<std::size_t>(j)]++;
    return Partition(t);
}

// Hook lengths of all cells, row by row.
inline std::vector<int> hook_lengths(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    std::vector<int> hooks;
    const auto& rows = lambda.parts();
    const auto& cols = conj.parts();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j)
            hooks.push_back(rows[i] - j + cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1);
    return hooks;
}

// Dimension of the irreducible S_n representation indexed by lambda, via the
// hook length formula f^lambda = n! / prod(hooks).
inline BigInt dimension_hook(const Partition& lambda) {
    BigInt denom(1);
    for (int h : hook_lengths(lambda)) denom *= BigInt(h);
    auto [q, r] = BigInt::divmod(BigInt::factorial(static_cast<unsigned>(lambda.n())), denom);
    if (!r.is_zero()) throw std::logic_error("dimension_hook: hook product does not divide n!");
    return q;
}

// n(lambda) = sum (i-1) * lambda_i, the exponent of the principal
// specialization q^{n(lambda)} / prod (1 - q^hook).
inline int n_stat(const Partition& lambda) {
    int s = 0;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
    return s;
}

}  // namespace otsym
