// otsym: exact computations with graded symmetric-group characteristics.
//
//   otsym compute --what M --n 6 --format table
//   otsym verify --max-n 10 --checks conjecture_main
//   otsym graph fpoly --edges "1-2,2-3"
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error,
// 3 internal consistency error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "otsym/otsym.hpp"

namespace {

namespace fs = std::filesystem;
using namespace otsym;

fs::path resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("OTSYM_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg)
        return fs::path(xdg) / "otsym";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".local" / "share" / "otsym";
    return fs::path(".otsym-cache");
}

std::string format_table(const SymFunc& f) {
    SymFunc fs_ = to_schur(f);
    std::string out;
    for (const auto& [lambda, c] : fs_.terms())
        out += "s" + lambda.to_string() + ": " + c.to_string() + "\n";
    if (out.empty()) out = "0\n";
    return out;
}

std::string format_latex(const SymFunc& f) {
    SymFunc fs_ = to_schur(f);
    std::string out;
    for (const auto& [lambda, c] : fs_.terms()) {
        if (!out.empty()) out += " + ";
        std::string idx = lambda.to_string();  // "[3,1]"
        out += "s_{" + idx + "}\\,(" + c.to_string() + ")";
    }
    if (out.empty()) out = "0";
    return out + "\n";
}

int cmd_compute(const std::string& what, int n, int cap_flag, const std::string& format,
                const std::string& cache_flag, int jobs) {
    bool cap_given = cap_flag >= 0;
    int cap;
    if (what == "M" || what == "OT")
        cap = cap_given ? cap_flag : std::max(n - 2, 0);
    else
        cap = cap_given ? cap_flag : std::max(n - 1, 0);

    if (n < 1) throw std::invalid_argument("compute: --n must be >= 1");
    if ((what == "OT" || what == "D" || what == "W") && n < 2)
        throw std::invalid_argument("compute: --what " + what + " requires --n >= 2");

    SymFunc result = SymFunc::unit(0);
    if (what == "M") {
        fs::path dir = resolve_cache_dir(cache_flag);
        MnCache cache;
        load_m_cache(dir, cache);
        int before = cache.max_n();
        ensure_M(cache, n, jobs);
        for (int i = before + 1; i <= n; ++i) save_m_entry(dir, i, cache.get(i), false);
        result = cache.get(n).recap(cap);
    } else if (what == "OT") {
        fs::path dir = resolve_cache_dir(cache_flag);
        MnCache cache;
        load_m_cache(dir, cache);
        int before = cache.max_n();
        ensure_M(cache, n - 1, jobs);
        for (int i = before + 1; i <= n - 1; ++i) save_m_entry(dir, i, cache.get(i), false);
        result = ch_OT_truncated(n, cap, cache, jobs);
    } else if (what == "C") {
        result = ch_C(n, cap);
    } else if (what == "D") {
        result = ch_D(n, cap);
    } else if (what == "R") {
        result = ch_R(n, cap);
    } else if (what == "W") {
        result = ch_W(n, cap);
    } else if (what == "lyndon") {
        result = lyndon(n, cap);
    } else if (what == "cyclic") {
        result = ch_cyclic_triv(n).recap(cap);
    } else {
        throw std::invalid_argument("compute: unknown --what " + what);
    }

    if (format == "json") {
        std::cout << symfunc_to_json(result).dump() << "\n";
    } else {
        assert_schur_nonneg_integral(result, "compute emission");
        std::cout << (format == "latex" ? format_latex(result) : format_table(result));
    }
    return 0;
}

int cmd_verify(int max_n, const std::string& checks_csv, int jobs, const std::string& cache_flag) {
    if (max_n < 2) throw std::invalid_argument("verify: --max-n must be >= 2");
    std::vector<std::string> selected;
    if (checks_csv == "all") {
        selected = verifier_check_names();
    } else {
        std::stringstream ss(checks_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            const auto& names = verifier_check_names();
            if (std::find(names.begin(), names.end(), item) == names.end()) {
                std::string valid;
                for (const auto& name : names) valid += (valid.empty() ? "" : ", ") + name;
                throw std::invalid_argument("verify: unknown check '" + item + "'; valid checks: " +
                                            valid + ", all");
            }
            selected.push_back(item);
        }
        if (selected.empty()) throw std::invalid_argument("verify: no checks selected");
    }
    // Canonical execution order regardless of how the list was written.
    std::vector<std::string> ordered;
    for (const auto& name : verifier_check_names())
        if (std::find(selected.begin(), selected.end(), name) != selected.end())
            ordered.push_back(name);

    bool needs_cache = false;
    for (const auto& name : ordered)
        needs_cache |= (name == "conjecture_main" || name == "poincare" || name == "ungraded" ||
                        name == "degrees_024");

    MnCache cache;
    if (needs_cache) ensure_M(cache, max_n, jobs);

    std::size_t passed = 0, total = 0;
    for (int n = 2; n <= max_n; ++n) {
        for (const auto& name : ordered) {
            CheckReport report = run_verifier_check(name, n, cache);
            std::cout << check_report_to_json(report) << "\n";
            ++total;
            if (report.pass) {
                ++passed;
            } else {
                std::cerr << "FAIL " << name << " n=" << n << " (" << report.witnesses.size()
                          << " discrepant cells)\n";
            }
        }
    }
    std::cerr << "verify: " << passed << "/" << total << " checks passed (n = 2.." << max_n << ")\n";

    bool all_pass = passed == total;
    if (all_pass && ordered.size() == verifier_check_names().size() && max_n >= 8) {
        // Full suite passed through at least n = 8: persist and mark trusted.
        fs::path dir = resolve_cache_dir(cache_flag);
        for (int i = 1; i <= max_n; ++i) save_m_entry(dir, i, cache.get(i), true);
    }
    return all_pass ? 0 : 1;
}

Graph load_graph(const std::string& file, const std::string& inline_edges) {
    if (!file.empty() && !inline_edges.empty())
        throw std::invalid_argument("graph: give either --file or --edges, not both");
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("graph: cannot open " + file);
        std::stringstream ss;
        ss << in.rdbuf();
        return Graph::from_edge_list_text(ss.str());
    }
    if (!inline_edges.empty()) {
        // "1-2,2-3" -> edge list text
        std::string text;
        std::stringstream ss(inline_edges);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto dash = item.find('-');
            if (dash == std::string::npos)
                throw std::invalid_argument("graph: bad edge '" + item + "' (want i-j)");
            text += item.substr(0, dash) + " " + item.substr(dash + 1) + "\n";
        }
        return Graph::from_edge_list_text(text);
    }
    throw std::invalid_argument("graph: an input graph is required (--file or --edges)");
}

void emit_poly(const QSeries& p, const std::string& format, const std::string& name) {
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["poly"] = nlohmann::ordered_json::array();
        for (int d = 0; d <= (p.degree() < 0 ? 0 : p.degree()); ++d)
            doc["poly"].push_back(p.coeff(d).num().to_int64());
        std::cout << doc.dump() << "\n";
    } else {
        (void)name;
        std::cout << p.to_string() << "\n";
    }
}

int cmd_graph_poly(bool want_f, const std::string& file, const std::string& edges,
                   const std::string& format) {
    Graph g = load_graph(file, edges);
    int cap = std::max(g.n() - 1, 0);
    QSeries p = want_f ? f_poly(g, cap) : h_poly(g, cap);
    emit_poly(p, format, want_f ? "fpoly" : "hpoly");
    return 0;
}

int cmd_cone_check(const std::string& file, const std::string& edges, int max_vertices) {
    if (max_vertices > 0) {
        bool all_pass = true;
        for (int v = 1; v <= max_vertices; ++v) {
            std::size_t count = 0, failures = 0;
            for (const Graph& g : all_connected_graphs(v)) {
                ++count;
                QSeries f = f_poly(g, g.n());
                QSeries h = h_poly(g.cone(), g.n());
                if (f != h) {
                    ++failures;
                    std::cout << "FAIL n=" << v << " key=" << g.canonical_key()
                              << " f=" << f.to_string() << " h_cone=" << h.to_string() << "\n";
                }
            }
            std::cout << "n=" << v << ": " << count << " connected graphs, "
                      << (failures == 0 ? "all pass" : std::to_string(failures) + " failures") << "\n";
            all_pass &= failures == 0;
        }
        std::cout << (all_pass ? "PASS" : "FAIL") << ": cone identity h_cone(q) = f(q) on all "
                  << "connected graphs with <= " << max_vertices << " vertices\n";
        return all_pass ? 0 : 1;
    }
    Graph g = load_graph(file, edges);
    QSeries f = f_poly(g, g.n());
    QSeries h = h_poly(g.cone(), g.n());
    if (f == h) {
        std::cout << "PASS: h_cone(q) = f(q) = " << f.to_string() << "\n";
        return 0;
    }
    std::cout << "FAIL: f(q) = " << f.to_string() << " but h_cone(q) = " << h.to_string() << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for graded S_n characteristics of the Orlik-Terao algebra and "
                 "configuration-space cohomology"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "Compute a named characteristic");
    std::string what, format = "table", cache_dir;
    int n = 0, cap = -1, jobs = 1;
    compute->add_option("--what", what, "One of M, OT, C, D, R, W, lyndon, cyclic")
        ->required()
        ->check(CLI::IsMember({"M", "OT", "C", "D", "R", "W", "lyndon", "cyclic"}));
    compute->add_option("--n", n, "Symmetric degree")->required();
    compute->add_option("--cap", cap, "q-truncation cap (default: n-2 for M/OT, n-1 otherwise)");
    compute->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table", "latex"}));
    compute->add_option("--cache-dir", cache_dir, "ch M cache directory (default: OTSYM_CACHE or platform data dir)");
    compute->add_option("--jobs", jobs, "Worker threads for the recursion")->check(CLI::PositiveNumber);

    // verify
    auto* verify = app.add_subcommand("verify", "Run the identity checks");
    int max_n = 0;
    std::string checks = "all";
    verify->add_option("--max-n", max_n, "Largest n to check (checks run for n = 2..max-n)")->required();
    verify->add_option("--checks", checks, "Comma-separated check names, or 'all'");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--cache-dir", cache_dir, "Cache directory for trusted entries");

    // graph
    auto* graph = app.add_subcommand("graph", "Graphical arrangement polynomials");
    graph->require_subcommand(1);
    std::string gfile, gedges, gformat = "text";
    int max_vertices = 0;
    auto* fpoly_cmd = graph->add_subcommand("fpoly", "f-polynomial of the broken circuit complex");
    auto* hpoly_cmd = graph->add_subcommand("hpoly", "h-polynomial of the broken circuit complex");
    auto* cone_cmd = graph->add_subcommand("cone-check", "Check h_cone(q) = f(q)");
    for (auto* sub : {fpoly_cmd, hpoly_cmd, cone_cmd}) {
        sub->add_option("--file", gfile, "Edge list file, one 'i j' pair per line, 1-indexed");
        sub->add_option("--edges", gedges, "Inline edges, e.g. \"1-2,2-3\"");
    }
    for (auto* sub : {fpoly_cmd, hpoly_cmd})
        sub->add_option("--format", gformat, "text or json")->check(CLI::IsMember({"text", "json"}));
    cone_cmd->add_option("--max-vertices", max_vertices,
                         "Check all connected graphs with up to this many vertices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(what, n, cap, format, cache_dir, jobs);
        if (verify->parsed()) return cmd_verify(max_n, checks, jobs, cache_dir);
        if (graph->parsed()) {
            if (fpoly_cmd->parsed()) return cmd_graph_poly(true, gfile, gedges, gformat);
            if (hpoly_cmd->parsed()) return cmd_graph_poly(false, gfile, gedges, gformat);
            if (cone_cmd->parsed()) return cmd_cone_check(gfile, gedges, max_vertices);
        }
    } catch (const consistency_error& e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
