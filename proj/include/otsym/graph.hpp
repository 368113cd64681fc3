#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "otsym/bigint.hpp"
#include "otsym/core.hpp"
#include "otsym/qseries.hpp"

namespace otsym {

// Simple graph on vertices 0..n-1 (1-indexed in all external formats). Edges
// are stored normalized: i < j, sorted, deduplicated. Loops are rejected.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        for (auto [a, b] : edges) {
            if (a == b) throw std::invalid_argument("Graph: loops are not allowed");
            if (a < 0 || b < 0 || a >= n || b >= n)
                throw std::invalid_argument("Graph: vertex index out of range");
            edges_.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    // Parse "i j" pairs, one per line, 1-indexed; blank lines and lines
    // starting with '#' are skipped. The vertex count is the largest index.
    static Graph from_edge_list_text(const std::string& text) {
        std::vector<std::pair<int, int>> edges;
        int max_v = 0;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            std::istringstream ls(line);
            int a = 0, b = 0;
            if (!(ls >> a >> b)) throw std::invalid_argument("Graph: bad edge line: " + line);
            if (a < 1 || b < 1) throw std::invalid_argument("Graph: vertices are 1-indexed");
            max_v = std::max(max_v, std::max(a, b));
            edges.emplace_back(a - 1, b - 1);
        }
        return Graph(max_v, std::move(edges));
    }

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::vector<std::vector<int>> components() const {
        std::vector<int> comp(static_cast<std::size_t>(n_), -1);
        std::vector<std::vector<int>> out;
        for (int start = 0; start < n_; ++start) {
            if (comp[static_cast<std::size_t>(start)] != -1) continue;
            int id = static_cast<int>(out.size());
            out.emplace_back();
            std::vector<int> stack{start};
            comp[static_cast<std::size_t>(start)] = id;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                out[static_cast<std::size_t>(id)].push_back(v);
                for (auto [a, b] : edges_) {
                    int other = a == v ? b : (b == v ? a : -1);
                    if (other >= 0 && comp[static_cast<std::size_t>(other)] == -1) {
                        comp[static_cast<std::size_t>(other)] = id;
                        stack.push_back(other);
                    }
                }
            }
            std::sort(out.back().begin(), out.back().end());
        }
        return out;
    }

    bool is_connected() const { return n_ <= 1 || components().size() == 1; }

    // Cone: one new vertex adjacent to every existing vertex.
    Graph cone() const {
        std::vector<std::pair<int, int>> edges = edges_;
        for (int v = 0; v < n_; ++v) edges.emplace_back(v, n_);
        return Graph(n_ + 1, std::move(edges));
    }

    // Deterministic relabeling by iterated degree refinement; isomorphic
    // inputs often (not always) map to the same form, and equal forms always
    // mean isomorphic graphs, so this is safe as a memo key.
    std::vector<std::pair<int, int>> canonical_edges() const {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
        for (auto [a, b] : edges_) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        std::vector<int> color(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) color[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        for (int round = 0; round < n_; ++round) {
            std::vector<std::pair<std::vector<int>, int>> sigs(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) {
                std::vector<int> s;
                s.push_back(color[static_cast<std::size_t>(v)]);
                for (int w : adj[static_cast<std::size_t>(v)]) s.push_back(color[static_cast<std::size_t>(w)]);
                std::sort(s.begin() + 1, s.end());
                sigs[static_cast<std::size_t>(v)] = {std::move(s), v};
            }
            std::vector<std::vector<int>> uniq;
            for (const auto& [s, v] : sigs) uniq.push_back(s);
            std::sort(uniq.begin(), uniq.end());
            uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
            std::vector<int> next(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v)
                next[static_cast<std::size_t>(v)] = static_cast<int>(
                    std::lower_bound(uniq.begin(), uniq.end(), sigs[static_cast<std::size_t>(v)].first) - uniq.begin());
            if (next == color) break;
            color = std::move(next);
        }
        std::vector<int> order(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) order[static_cast<std::size_t>(v)] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (color[static_cast<std::size_t>(a)] != color[static_cast<std::size_t>(b)])
                return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)];
            return a < b;
        });
        std::vector<int> newlabel(static_cast<std::size_t>(n_));
        for (int pos = 0; pos < n_; ++pos) newlabel[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
        std::vector<std::pair<int, int>> relabeled;
        relabeled.reserve(edges_.size());
        for (auto [a, b] : edges_) {
            int x = newlabel[static_cast<std::size_t>(a)], y = newlabel[static_cast<std::size_t>(b)];
            relabeled.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(relabeled.begin(), relabeled.end());
        return relabeled;
    }

    std::string canonical_key() const {
        std::string key = std::to_string(n_) + ":";
        for (auto [a, b] : canonical_edges()) key += std::to_string(a) + "-" + std::to_string(b) + ";";
        return key;
    }

    // Packed canonical form for graphs with at most 11 vertices: 4 bits of n
    // plus one bit per vertex pair (C(11,2) = 55).
    std::uint64_t packed_canonical_key() const {
        std::uint64_t mask = 0;
        for (auto [a, b] : canonical_edges())
            mask |= 1ULL << (static_cast<std::uint64_t>(a) * (2 * n_ - a - 1) / 2 + (b - a - 1));
        return (static_cast<std::uint64_t>(n_) << 55) | mask;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
};

// Dense integer polynomial in t; coefficient of t^k at index k.
using IntPoly = std::vector<BigInt>;

inline std::string int_poly_to_string(const IntPoly& p, const std::string& var = "t") {
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
        if (p[k].is_zero()) continue;
        BigInt a = p[k].is_negative() ? -p[k] : p[k];
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string body = (a.is_one() && k > 0) ? mono : a.to_string() + mono;
        if (out.empty())
            out = p[k].is_negative() ? "-" + body : body;
        else
            out += (p[k].is_negative() ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

inline BigInt int_poly_eval(const IntPoly& p, const BigInt& t) {
    BigInt v;
    for (std::size_t k = p.size(); k-- > 0;) v = v * t + p[k];
    return v;
}

namespace detail {

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline IntPoly poly_sub(IntPoly a, const IntPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

// t^c (t-1)^m, the chromatic polynomial of a forest with c components and m
// edges on c+m vertices.
inline IntPoly forest_chromatic(int components, int m) {
    IntPoly r{BigInt(1)};
    IntPoly tm1{BigInt(-1), BigInt(1)};
    for (int k = 0; k < m; ++k) r = poly_mul(r, tm1);
    IntPoly shifted(static_cast<std::size_t>(components) + r.size());
    for (std::size_t i = 0; i < r.size(); ++i) shifted[i + static_cast<std::size_t>(components)] = r[i];
    return shifted;
}

// t (t-1) ... (t-n+1), the complete-graph chromatic polynomial.
inline IntPoly falling_factorial(int n) {
    if (n == 0) return IntPoly{BigInt(1)};
    IntPoly r{BigInt(0), BigInt(1)};
    for (int k = 1; k < n; ++k) r = poly_mul(r, IntPoly{BigInt(-k), BigInt(1)});
    return r;
}

inline std::mutex& chromatic_mutex() {
    static std::mutex mu;
    return mu;
}

// Two memo maps: packed keys for graphs small enough to fit 64 bits (the hot
// path), string keys beyond that.
inline std::map<std::uint64_t, IntPoly>& chromatic_memo_packed() {
    static std::map<std::uint64_t, IntPoly> memo;
    return memo;
}

inline std::map<std::string, IntPoly>& chromatic_memo_string() {
    static std::map<std::string, IntPoly> memo;
    return memo;
}

inline IntPoly chromatic_rec(const Graph& g) {
    int n = g.n();
    int m = g.edge_count();
    if (m == 0) {
        IntPoly r(static_cast<std::size_t>(n) + 1);
        r[static_cast<std::size_t>(n)] = BigInt(1);
        return r;
    }
    if (m == n * (n - 1) / 2) return falling_factorial(n);
    int comps = static_cast<int>(g.components().size());
    if (m == n - comps) return forest_chromatic(comps, m);

    bool small = n <= 11;
    std::uint64_t key64 = small ? g.packed_canonical_key() : 0;
    std::string key_str = small ? std::string() : g.canonical_key();
    {
        std::lock_guard<std::mutex> lock(chromatic_mutex());
        if (small) {
            auto it = chromatic_memo_packed().find(key64);
            if (it != chromatic_memo_packed().end()) return it->second;
        } else {
            auto it = chromatic_memo_string().find(key_str);
            if (it != chromatic_memo_string().end()) return it->second;
        }
    }

    auto [a, b] = g.edges().front();
    std::vector<std::pair<int, int>> deleted(g.edges().begin() + 1, g.edges().end());
    Graph del(n, deleted);
    // contract b into a; vertices above b shift down by one
    std::vector<std::pair<int, int>> contracted;
    for (auto [x, y] : deleted) {
        int cx = x == b ? a : (x > b ? x - 1 : x);
        int cy = y == b ? a : (y > b ? y - 1 : y);
        if (cx != cy) contracted.emplace_back(cx, cy);
    }
    Graph con(n - 1, std::move(contracted));
    IntPoly result = poly_sub(chromatic_rec(del), chromatic_rec(con));

    std::lock_guard<std::mutex> lock(chromatic_mutex());
    if (small) return chromatic_memo_packed().emplace(key64, std::move(result)).first->second;
    return chromatic_memo_string().emplace(std::move(key_str), std::move(result)).first->second;
}

}  // namespace detail

// Chromatic polynomial P(Gamma, t) by deletion-contraction with memoization
// on canonical forms; P(edgeless graph on n vertices) = t^n.
inline IntPoly chromatic_polynomial(const Graph& g) { return detail::chromatic_rec(g); }

namespace detail {
inline void require_connected(const Graph& g, const std::string& where) {
    if (g.is_connected()) return;
    auto comps = g.components();
    std::string msg = where + ": graph is disconnected; components:";
    for (const auto& comp : comps) {
        msg += " {";
        for (std::size_t i = 0; i < comp.size(); ++i)
            msg += (i ? "," : "") + std::to_string(comp[i] + 1);
        msg += "}";
    }
    throw std::invalid_argument(msg);
}
}  // namespace detail

// f-polynomial of the broken circuit complex (Poincare polynomial of C_Gamma):
// with the reduced chromatic polynomial chi(t) = P(Gamma, t)/t and rank
// r = n-1, f_Gamma(q) = (-q)^r chi(-1/q).
inline QSeries f_poly(const Graph& g, int cap) {
    detail::require_connected(g, "f_poly");
    if (g.n() < 1) throw std::invalid_argument("f_poly: empty graph");
    IntPoly p = chromatic_polynomial(g);
    if (!p.empty() && !p[0].is_zero()) throw consistency_error("f_poly: chromatic polynomial has nonzero constant term");
    int r = g.n() - 1;
    if (cap < r) throw std::invalid_argument("f_poly: cap too small to hold the exact polynomial");
    QSeries out(cap);
    std::vector<Rational> coeffs(static_cast<std::size_t>(cap) + 1);
    // chi coefficients: c_j = p[j+1], j = 0..r; f_d = (-1)^d c_{r-d}
    for (int d = 0; d <= r; ++d) {
        BigInt c = p[static_cast<std::size_t>(r - d) + 1];
        if (d % 2 != 0) c = -c;
        if (c.is_negative()) throw consistency_error("f_poly: negative Whitney number");
        coeffs[static_cast<std::size_t>(d)] = Rational(c);
    }
    return QSeries(cap, std::move(coeffs));
}

// h-polynomial of the broken circuit complex (Poincare polynomial of M_Gamma):
// h_Gamma(q) = (1-q)^r f_Gamma(q/(1-q)) = sum_d f_d q^d (1-q)^{r-d}.
inline QSeries h_poly(const Graph& g, int cap) {
    detail::require_connected(g, "h_poly");
    int r = g.n() - 1;
    QSeries f = f_poly(g, std::max(cap, r));
    std::vector<BigInt> h(static_cast<std::size_t>(r) + 1);
    for (int d = 0; d <= r; ++d) {
        const Rational& fd = f.coeff(d);
        if (fd.is_zero()) continue;
        // (1-q)^{r-d} expanded with binomial coefficients
        BigInt binom(1);
        for (int k = 0; k <= r - d; ++k) {
            BigInt term = fd.num() * binom;
            if (k % 2 != 0) term = -term;
            h[static_cast<std::size_t>(d + k)] += term;
            binom = binom * BigInt(r - d - k) / BigInt(k + 1);
        }
    }
    int degree = r;
    while (degree > 0 && h[static_cast<std::size_t>(degree)].is_zero()) --degree;
    if (cap < degree) throw std::invalid_argument("h_poly: cap too small to hold the exact polynomial");
    std::vector<Rational> coeffs(static_cast<std::size_t>(cap) + 1);
    for (int d = 0; d <= std::min(r, cap); ++d) {
        if (h[static_cast<std::size_t>(d)].is_negative())
            throw consistency_error("h_poly: negative h-vector entry");
        coeffs[static_cast<std::size_t>(d)] = Rational(h[static_cast<std::size_t>(d)]);
    }
    return QSeries(cap, std::move(coeffs));
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

// All connected graphs on exactly n labeled vertices, in ascending
// edge-subset order. Exhaustive and deterministic; vertex counts beyond ~6
// are not intended (the count grows as 2^(n choose 2)).
inline std::vector<Graph> all_connected_graphs(int n) {
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all_edges.emplace_back(i, j);
    std::size_t m = all_edges.size();
    if (m > 31) throw std::invalid_argument("all_connected_graphs: too many vertices");
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t e = 0; e < m; ++e)
            if (mask & (1ULL << e)) edges.push_back(all_edges[e]);
        Graph g(n, std::move(edges));
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace otsym
