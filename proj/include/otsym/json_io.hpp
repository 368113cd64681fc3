#pragma once

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "otsym/core.hpp"
#include "otsym/ot_recursion.hpp"
#include "otsym/symfunc.hpp"
#include "otsym/verifier.hpp"

namespace otsym {

using ordered_json = nlohmann::ordered_json;

// Canonical JSON form of a graded characteristic: Schur basis, partitions in
// lexicographic descending order, integer coefficient arrays of length cap+1.
// Emission asserts integrality; virtual (rational) elements are not
// serializable by design.
inline ordered_json symfunc_to_json(const SymFunc& f) {
    SymFunc fs = to_schur(f);
    ordered_json doc;
    doc["n"] = fs.degree();
    doc["basis"] = "schur";
    doc["cap"] = fs.cap();
    doc["terms"] = ordered_json::array();
    for (const auto& [lambda, c] : fs.terms()) {
        if (!c.all_nonneg_integers())
            throw consistency_error("symfunc_to_json: non-integral Schur coefficient at s" + lambda.to_string());
        ordered_json term;
        term["partition"] = lambda.parts();
        std::vector<long long> coeffs;
        coeffs.reserve(static_cast<std::size_t>(c.cap()) + 1);
        for (int d = 0; d <= c.cap(); ++d) coeffs.push_back(c.coeff(d).num().to_int64());
        term["coeffs"] = coeffs;
        doc["terms"].push_back(std::move(term));
    }
    return doc;
}

inline SymFunc symfunc_from_json(const nlohmann::json& doc) {
    int n = doc.at("n").get<int>();
    int cap = doc.at("cap").get<int>();
    std::string basis = doc.at("basis").get<std::string>();
    if (basis != "schur") throw std::invalid_argument("symfunc_from_json: unsupported basis " + basis);
    SymFunc f(n, cap, Basis::schur);
    for (const auto& term : doc.at("terms")) {
        Partition lambda(term.at("partition").get<std::vector<int>>());
        auto coeffs = term.at("coeffs").get<std::vector<long long>>();
        if (coeffs.size() != static_cast<std::size_t>(cap) + 1)
            throw std::invalid_argument("symfunc_from_json: coefficient array must have cap+1 entries");
        std::vector<Rational> qc(coeffs.begin(), coeffs.end());
        f.add_term(lambda, QSeries(cap, std::move(qc)));
    }
    return f;
}

// One newline-delimited report record:
// {"check": name, "n": int, "status": "pass"|"fail", "witnesses": [...]}.
inline std::string check_report_to_json(const CheckReport& report) {
    ordered_json doc;
    doc["check"] = report.check;
    doc["n"] = report.n;
    doc["status"] = report.pass ? "pass" : "fail";
    doc["witnesses"] = ordered_json::array();
    for (const auto& w : report.witnesses) {
        ordered_json jw;
        if (w.partition)
            jw["partition"] = w.partition->parts();
        else
            jw["partition"] = nullptr;
        jw["q_degree"] = w.q_degree;
        jw["lhs"] = w.lhs;
        jw["rhs"] = w.rhs;
        doc["witnesses"].push_back(std::move(jw));
    }
    return doc.dump();
}

// ---- On-disk ch M_n cache -------------------------------------------------
//
// One JSON document per n: <dir>/M_<n>.json with engine version, creation
// timestamp, trust flag and the canonical characteristic. Version mismatches
// invalidate an entry; a present-but-unreadable file is a hard error with a
// diagnostic rather than silent recomputation.

inline std::filesystem::path m_entry_path(const std::filesystem::path& dir, int n) {
    return dir / ("M_" + std::to_string(n) + ".json");
}

inline std::string iso8601_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[80];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

inline void save_m_entry(const std::filesystem::path& dir, int n, const SymFunc& ch_m, bool trusted) {
    std::filesystem::create_directories(dir);
    ordered_json doc;
    doc["engine"] = engine_version;
    doc["n"] = n;
    doc["trusted"] = trusted;
    doc["created"] = iso8601_now();
    doc["ch_M"] = symfunc_to_json(ch_m);
    std::ofstream out(m_entry_path(dir, n));
    if (!out) throw std::runtime_error("cache: cannot write " + m_entry_path(dir, n).string());
    out << doc.dump(2) << "\n";
}

// Loads entry n. Returns nullopt if the file does not exist or was written by
// a different engine version; throws on corruption.
inline std::optional<SymFunc> load_m_entry(const std::filesystem::path& dir, int n) {
    std::filesystem::path path = m_entry_path(dir, n);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json doc;
    try {
        in >> doc;
        if (doc.at("engine").get<std::string>() != engine_version) return std::nullopt;
        if (doc.at("n").get<int>() != n)
            throw std::invalid_argument("entry claims n=" + std::to_string(doc.at("n").get<int>()));
        return symfunc_from_json(doc.at("ch_M"));
    } catch (const std::exception& e) {
        throw std::runtime_error("cache corruption in " + path.string() + ": " + e.what());
    }
}

// Loads the consecutive prefix 1..k of cache entries into the in-memory
// cache; returns k (0 if nothing usable).
inline int load_m_cache(const std::filesystem::path& dir, MnCache& cache) {
    int loaded = 0;
    for (int n = 1;; ++n) {
        if (cache.has(n)) {
            loaded = n;
            continue;
        }
        auto entry = load_m_entry(dir, n);
        if (!entry) break;
        cache.put(n, std::move(*entry));
        loaded = n;
    }
    return loaded;
}

// Flip the trusted flag on existing entries 1..upto (missing files are
// skipped; content is otherwise preserved).
inline void mark_m_entries_trusted(const std::filesystem::path& dir, int upto) {
    for (int n = 1; n <= upto; ++n) {
        std::filesystem::path path = m_entry_path(dir, n);
        std::ifstream in(path);
        if (!in) continue;
        ordered_json doc;
        try {
            in >> doc;
        } catch (const std::exception& e) {
            throw std::runtime_error("cache corruption in " + path.string() + ": " + e.what());
        }
        in.close();
        doc["trusted"] = true;
        std::ofstream out(path);
        out << doc.dump(2) << "\n";
    }
}

}  // namespace otsym
