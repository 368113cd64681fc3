#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "otsym/bigint.hpp"
#include "otsym/partition.hpp"

namespace otsym {

// Irreducible character table of S_n, chi^lambda_mu, built once per n with the
// Murnaghan-Nakayama rule and cached process-wide. Rows and columns are both
// indexed by partitions_of(n) (lexicographic descending). Values are exact
// integers; z(mu) and dim(lambda) are stored alongside.
class CharacterTable {
public:
    static const CharacterTable& get(int n) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<CharacterTable>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, std::unique_ptr<CharacterTable>(new CharacterTable(n))).first;
        return *it->second;
    }

    int n() const { return n_; }
    const std::vector<Partition>& partitions() const { return parts_; }

    std::size_t index_of(const Partition& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw std::invalid_argument("CharacterTable: not a partition of n");
        return it->second;
    }

    const BigInt& chi(std::size_t lambda_idx, std::size_t mu_idx) const {
        return chi_[lambda_idx][mu_idx];
    }
    const BigInt& chi(const Partition& lambda, const Partition& mu) const {
        return chi_[index_of(lambda)][index_of(mu)];
    }

    const BigInt& z(std::size_t mu_idx) const { return z_[mu_idx]; }
    const BigInt& dim(std::size_t lambda_idx) const { return dim_[lambda_idx]; }

private:
    int n_;
    std::vector<Partition> parts_;
    std::map<Partition, std::size_t, PartitionOrder> index_;
    std::vector<std::vector<BigInt>> chi_;
    std::vector<BigInt> z_;
    std::vector<BigInt> dim_;

    explicit CharacterTable(int n) : n_(n), parts_(partitions_of(n)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) index_.emplace(parts_[i], i);
        z_.reserve(parts_.size());
        dim_.reserve(parts_.size());
        for (const auto& p : parts_) {
            z_.push_back(z_of(p));
            dim_.push_back(dimension_hook(p));
        }
        chi_.resize(parts_.size());
        for (std::size_t li = 0; li < parts_.size(); ++li) chi_[li].resize(parts_.size());
        // One memo per column mu: keys are (beta set, index into mu's parts),
        // shared across all rows lambda.
        for (std::size_t mi = 0; mi < parts_.size(); ++mi) {
            std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo;
            for (std::size_t li = 0; li < parts_.size(); ++li)
                chi_[li][mi] = mn_chi(beta_set(parts_[li]), parts_[mi].parts(), 0, memo);
        }
    }

    // Beta set of lambda padded to length n: strictly increasing values
    // lambda_i + (n - 1 - i).
    std::vector<int> beta_set(const Partition& lambda) const {
        std::vector<int> beta;
        beta.reserve(static_cast<std::size_t>(n_));
        const auto& p = lambda.parts();
        for (int i = n_ - 1; i >= 0; --i) {
            int part = i < lambda.length() ? p[static_cast<std::size_t>(i)] : 0;
            beta.push_back(part + (n_ - 1 - i));
        }
        return beta;  // sorted ascending
    }

    // Murnaghan-Nakayama on beta sets: removing a border strip of size k is
    // replacing some beta value b by b-k (which must be absent), with sign
    // (-1)^{#values strictly between b-k and b}.
    static BigInt mn_chi(const std::vector<int>& beta, const std::vector<int>& mu, std::size_t idx,
                         std::map<std::pair<std::vector<int>, std::size_t>, BigInt>& memo) {
        if (idx == mu.size()) return BigInt(1);
        auto key = std::make_pair(beta, idx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int k = mu[idx];
        BigInt total;
        for (std::size_t pos = 0; pos < beta.size(); ++pos) {
            int b = beta[pos];
            if (b < k) continue;
            int t = b - k;
            auto lb = std::lower_bound(beta.begin(), beta.end(), t);
            if (lb != beta.end() && *lb == t) continue;  // b-k already present
            std::size_t li = static_cast<std::size_t>(lb - beta.begin());
            bool odd = ((pos - li) % 2) != 0;
            std::vector<int> next = beta;
            // move beta[pos] down to value t, keeping the vector sorted
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(pos));
            next.insert(std::lower_bound(next.begin(), next.end(), t), t);
            BigInt sub = mn_chi(next, mu, idx + 1, memo);
            if (odd)
                total -= sub;
            else
                total += sub;
        }
        return memo.emplace(std::move(key), std::move(total)).first->second;
    }
};

}  // namespace otsym
