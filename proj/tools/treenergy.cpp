// treenergy: graph energy of trees, extremal-family comparison, and the
// verification suites, with deterministic plain/csv/json output.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "treenergy/canonical.hpp"
#include "treenergy/comparator.hpp"
#include "treenergy/energy.hpp"
#include "treenergy/enumerate.hpp"
#include "treenergy/format.hpp"
#include "treenergy/parallel.hpp"
#include "treenergy/verify.hpp"

namespace {

using namespace treenergy;

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

enum class Format { plain, csv, json };

Format parse_format(const std::string& s) {
    if (s == "plain") return Format::plain;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw CLI::ValidationError("--format", "expected plain, csv or json");
}

double default_tolerance() {
    if (const char* env = std::getenv("ENERGY_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
        std::cerr << "warning: ignoring invalid ENERGY_TOL=" << env << "\n";
    }
    return QuadratureConfig{}.abs_tol;
}

struct TreeSelection {
    std::string family;  // ta | tb | tc
    int delta = 0;
    int t = 0;
    int n = 0;  // tc only
    int path = 0;
    std::string edgelist;
};

Tree select_tree(const TreeSelection& sel) {
    if (sel.path > 0) return build_path(sel.path);
    if (!sel.edgelist.empty()) return read_edgelist_file(sel.edgelist);
    if (sel.family == "ta") return build_ta({sel.delta, sel.t});
    if (sel.family == "tb") return build_tb({sel.delta, sel.t});
    if (sel.family == "tc") {
        if (sel.n <= 0)
            throw CLI::ValidationError("--family tc", "requires --n (the tree order)");
        return build_tc(sel.delta, sel.n);
    }
    throw CLI::ValidationError("tree selection",
                               "choose one of --family, --path, --edgelist");
}

nlohmann::json energy_json(const EnergyResult& r) {
    return {{"method", to_string(r.method)},
            {"value", round_g12(r.value)},
            {"abs_error_estimate", round_g12(r.abs_error_estimate)},
            {"evaluations", r.evaluations}};
}

int cmd_energy(const TreeSelection& sel, const std::string& method, double tol, Format fmt) {
    const Tree tree = select_tree(sel);
    QuadratureConfig cfg;
    cfg.abs_tol = tol;

    std::vector<EnergyResult> results;
    if (method == "coulson" || method == "both")
        results.push_back(energy_coulson(matching_polynomial(tree), cfg));
    if (method == "eigen" || method == "both") results.push_back(energy_eigen(tree));

    if (fmt == Format::json) {
        nlohmann::json j;
        j["order"] = tree.order();
        j["results"] = nlohmann::json::array();
        for (const auto& r : results) j["results"].push_back(energy_json(r));
        if (results.size() == 2)
            j["cross_method_delta"] = round_g12(std::abs(results[0].value - results[1].value));
        std::cout << j.dump() << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "method,value,abs_error_estimate,evaluations\n";
        for (const auto& r : results)
            std::cout << to_string(r.method) << ',' << fmt_g12(r.value) << ','
                      << fmt_g12(r.abs_error_estimate) << ',' << r.evaluations << "\n";
    } else {
        for (const auto& r : results)
            std::cout << to_string(r.method) << ": E = " << fmt_g12(r.value)
                      << "  (abs error est " << fmt_g12(r.abs_error_estimate) << ", "
                      << r.evaluations << " evaluations)\n";
        if (results.size() == 2)
            std::cout << "cross-method delta = "
                      << fmt_g12(std::abs(results[0].value - results[1].value)) << "\n";
    }
    return kExitOk;
}

struct VerdictRow {
    int delta, t;
    std::optional<Verdict> verdict;
    std::string error;
};

void print_verdict_rows(const std::vector<VerdictRow>& rows, Format fmt) {
    if (fmt == Format::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json j{{"delta", row.delta}, {"t", row.t}};
            if (row.verdict) {
                j["winner"] = to_string(row.verdict->winner);
                j["margin"] = round_g12(row.verdict->margin);
                j["margin_error"] = round_g12(row.verdict->margin_error);
                j["decisive"] = row.verdict->decisive;
            } else {
                j["decisive"] = false;
                j["error"] = row.error;
            }
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump() << "\n";
        return;
    }
    if (fmt == Format::csv) std::cout << "delta,t,winner,margin,margin_error,decisive\n";
    for (const auto& row : rows) {
        if (fmt == Format::csv) {
            if (row.verdict)
                std::cout << row.delta << ',' << row.t << ',' << to_string(row.verdict->winner)
                          << ',' << fmt_g12(row.verdict->margin) << ','
                          << fmt_g12(row.verdict->margin_error) << ','
                          << (row.verdict->decisive ? "true" : "false") << "\n";
            else
                std::cout << row.delta << ',' << row.t << ",?,,," << "false\n";
        } else {
            std::cout << "delta=" << row.delta << " t=" << row.t << ": ";
            if (row.verdict)
                std::cout << to_string(row.verdict->winner)
                          << "  margin=" << fmt_g12(row.verdict->margin)
                          << "  error=" << fmt_g12(row.verdict->margin_error) << "\n";
            else
                std::cout << "INDECISIVE (" << row.error << ")\n";
        }
    }
}

int cmd_compare(int delta, const std::string& t_range, double tol, Format fmt) {
    // parse "T" or "A:B" or "A:B:STEP"
    int lo = 0, hi = 0, step = 1;
    {
        std::vector<int> parts;
        size_t pos = 0;
        while (pos <= t_range.size()) {
            const size_t colon = t_range.find(':', pos);
            const std::string piece =
                t_range.substr(pos, colon == std::string::npos ? colon : colon - pos);
            try {
                parts.push_back(std::stoi(piece));
            } catch (...) {
                throw CLI::ValidationError("--t/--t-range", "bad integer: " + piece);
            }
            if (colon == std::string::npos) break;
            pos = colon + 1;
        }
        if (parts.size() == 1) lo = hi = parts[0];
        else if (parts.size() == 2) lo = parts[0], hi = parts[1];
        else if (parts.size() == 3) lo = parts[0], hi = parts[1], step = parts[2];
        else throw CLI::ValidationError("--t-range", "expected A:B or A:B:STEP");
        if (step < 1 || hi < lo) throw CLI::ValidationError("--t-range", "empty range");
        if (lo < 3) throw CLI::ValidationError("--t", "the comparison needs t >= 3");
    }

    QuadratureConfig cfg;
    cfg.abs_tol = tol;
    std::vector<int> ts;
    for (int t = lo; t <= hi; t += step) ts.push_back(t);
    std::vector<VerdictRow> rows(ts.size());
    parallel_for(static_cast<int>(ts.size()), [&](int i) {
        rows[i].delta = delta;
        rows[i].t = ts[i];
        try {
            rows[i].verdict = maximal_tree(delta, ts[i], cfg);
        } catch (const std::exception& e) {
            rows[i].error = e.what();
        }
    });
    print_verdict_rows(rows, fmt);
    for (const auto& row : rows)
        if (!row.verdict) return kExitComputation;
    return kExitOk;
}

int cmd_table1(const std::string& delta_range, bool check, double tol, Format fmt) {
    int lo = 8, hi = 67;
    if (!delta_range.empty()) {
        const size_t colon = delta_range.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--delta-range", "expected LO:HI");
        try {
            lo = std::stoi(delta_range.substr(0, colon));
            hi = std::stoi(delta_range.substr(colon + 1));
        } catch (...) {
            throw CLI::ValidationError("--delta-range", "bad integers in " + delta_range);
        }
        if (lo < 3 || hi < lo) throw CLI::ValidationError("--delta-range", "need 3 <= LO <= HI");
    }
    QuadratureConfig cfg;
    cfg.abs_tol = tol;

    std::vector<int> deltas;
    for (int d = lo; d <= hi; ++d) deltas.push_back(d);
    std::vector<BoundCertificate> rows(deltas.size());
    parallel_for(static_cast<int>(deltas.size()),
                 [&](int i) { rows[i] = table1_entry(deltas[i], cfg); });

    const auto& ref = table1_reference();
    auto reference_value = [&](int delta) -> std::optional<double> {
        for (const auto& row : ref)
            if (row.delta == delta) return row.f_value;
        return std::nullopt;
    };

    double max_diff = 0.0;
    bool any_missing = false;
    if (fmt == Format::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json j{{"delta", row.delta},
                             {"f_value", round_g12(row.integral_value)},
                             {"tail_part", round_g12(row.tail_part)},
                             {"head_part", round_g12(row.head_part)}};
            if (check) {
                if (auto fp = reference_value(row.delta)) {
                    j["f_reference"] = *fp;
                    j["abs_diff"] = round_g12(std::abs(row.integral_value - *fp));
                    max_diff = std::max(max_diff, std::abs(row.integral_value - *fp));
                } else {
                    any_missing = true;
                }
            }
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump() << "\n";
    } else {
        std::cout << (check ? "delta,f_value,f_reference,abs_diff\n" : "delta,f_value\n");
        for (const auto& row : rows) {
            std::cout << row.delta << ',' << fmt_g12(row.integral_value);
            if (check) {
                if (auto fp = reference_value(row.delta)) {
                    const double diff = std::abs(row.integral_value - *fp);
                    max_diff = std::max(max_diff, diff);
                    std::cout << ',' << fmt_g12(*fp) << ',' << fmt_g12(diff);
                } else {
                    any_missing = true;
                    std::cout << ",,";
                }
            }
            std::cout << "\n";
        }
    }
    if (check && (max_diff > 5e-5 || any_missing)) return kExitComputation;
    return kExitOk;
}

int cmd_verify(const std::string& suite, Format fmt, int cap) {
    SuiteReport report;
    if (suite == "theorem11" && cap != TheoremConfig{}.enumeration_cap) {
        TheoremConfig cfg;
        cfg.enumeration_cap = cap;
        report = suite_theorem11(cfg);
    } else {
        report = run_suite(suite);
    }
    if (fmt == Format::json) {
        std::cout << report.to_json() << "\n";
    } else {
        std::cout << "suite " << report.suite_name << ": " << report.cases_run << " cases, "
                  << report.failures.size() << " failures\n";
        for (const auto& f : report.failures)
            std::cout << "  FAIL " << f.case_id << ": expected " << f.expected << ", got "
                      << f.got << "\n";
    }
    return report.passed() ? kExitOk : kExitComputation;
}

int cmd_enumerate(int n, int delta, bool rank, Format fmt) {
    auto trees = delta > 0 ? enumerate_constrained_trees(n, delta) : enumerate_trees(n);
    std::vector<double> energy(trees.size(), 0.0);
    if (rank) {
        parallel_for(static_cast<int>(trees.size()),
                     [&](int i) { energy[i] = energy_eigen(trees[i]).value; });
        std::vector<int> order(trees.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return energy[a] > energy[b]; });
        std::vector<Tree> sorted;
        std::vector<double> esorted;
        sorted.reserve(trees.size());
        for (int i : order) {
            sorted.push_back(trees[i]);
            esorted.push_back(energy[i]);
        }
        trees = std::move(sorted);
        energy = std::move(esorted);
    }

    if (fmt == Format::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (size_t i = 0; i < trees.size(); ++i) {
            nlohmann::json j{{"index", i}, {"order", trees[i].order()}};
            nlohmann::json edges = nlohmann::json::array();
            for (const auto& [u, v] : trees[i].edges()) edges.push_back({u, v});
            j["edges"] = std::move(edges);
            if (rank) j["energy"] = round_g12(energy[i]);
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump() << "\n";
    } else if (fmt == Format::csv) {
        std::cout << (rank ? "index,energy,edges\n" : "index,edges\n");
        for (size_t i = 0; i < trees.size(); ++i) {
            std::cout << i << ',';
            if (rank) std::cout << fmt_g12(energy[i]) << ',';
            const auto& es = trees[i].edges();
            for (size_t k = 0; k < es.size(); ++k)
                std::cout << es[k].first << '-' << es[k].second << (k + 1 < es.size() ? " " : "");
            std::cout << "\n";
        }
    } else {
        for (size_t i = 0; i < trees.size(); ++i) {
            std::cout << "# tree " << i << " n=" << trees[i].order();
            if (rank) std::cout << " energy=" << fmt_g12(energy[i]);
            std::cout << "\n" << edgelist_string(trees[i]);
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph energy of trees and the Ta/Tb maximal-energy comparison"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_name = "plain";
    app.add_option("--format", format_name, "output format: plain, csv or json")
        ->capture_default_str();

    // energy
    auto* energy = app.add_subcommand("energy", "energy of one tree");
    TreeSelection sel;
    std::string method = "both";
    double tol = default_tolerance();
    energy->add_option("--family", sel.family, "family tree: ta, tb or tc");
    energy->add_option("--delta", sel.delta, "maximum degree Delta");
    energy->add_option("--t", sel.t, "path parameter t (families ta, tb)");
    energy->add_option("--n", sel.n, "tree order (family tc)");
    energy->add_option("--path", sel.path, "path on N vertices");
    energy->add_option("--edgelist", sel.edgelist, "read tree from an edge-list file");
    energy->add_option("--method", method, "coulson, eigen or both")->capture_default_str();
    energy->add_option("--tol", tol, "quadrature absolute tolerance");

    // compare
    auto* compare = app.add_subcommand("compare", "which of Ta, Tb has larger energy");
    int cmp_delta = 0;
    std::string cmp_t, cmp_range;
    double cmp_tol = default_tolerance();
    compare->add_option("--delta", cmp_delta, "maximum degree Delta (>= 3)")->required();
    compare->add_option("--t", cmp_t, "single t");
    compare->add_option("--t-range", cmp_range, "range A:B or A:B:STEP");
    compare->add_option("--tol", cmp_tol, "quadrature absolute tolerance");

    // table1
    auto* table1 = app.add_subcommand("table1", "the f(Delta) bound-integral table");
    std::string delta_range;
    bool check = false;
    double t1_tol = default_tolerance();
    table1->add_option("--delta-range", delta_range, "range LO:HI (default 8:67)");
    table1->add_flag("--check", check, "compare against the reference column");
    table1->add_option("--tol", t1_tol, "quadrature absolute tolerance");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int cap = TheoremConfig{}.enumeration_cap;
    verify
        ->add_option("--suite", suite,
                     "identities, lemmas, energy-oracles, verdict-grid, table1 or theorem11")
        ->required();
    verify->add_option("--cap", cap, "enumeration cap for theorem11 (14 default, 16 is slow)");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "stream canonical trees");
    int en_n = 0, en_delta = 0;
    bool en_rank = false;
    enumerate->add_option("--n", en_n, "number of vertices")->required();
    enumerate->add_option("--delta", en_delta,
                          "restrict to exactly two vertices of maximum degree Delta");
    enumerate->add_flag("--rank", en_rank, "append eigenvalue energies, sorted descending");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Format fmt = parse_format(format_name);
        if (energy->parsed()) {
            if (method != "coulson" && method != "eigen" && method != "both")
                throw CLI::ValidationError("--method", "expected coulson, eigen or both");
            if (!sel.family.empty() && sel.delta < 3)
                throw CLI::ValidationError("--delta", "families need Delta >= 3");
            return cmd_energy(sel, method, tol, fmt);
        }
        if (compare->parsed()) {
            if (cmp_delta < 3)
                throw CLI::ValidationError("--delta", "the comparison assumes Delta >= 3");
            if (cmp_t.empty() == cmp_range.empty())
                throw CLI::ValidationError("--t", "give exactly one of --t, --t-range");
            return cmd_compare(cmp_delta, cmp_t.empty() ? cmp_range : cmp_t, cmp_tol, fmt);
        }
        if (table1->parsed()) return cmd_table1(delta_range, check, t1_tol, fmt);
        if (verify->parsed()) return cmd_verify(suite, fmt, cap);
        if (enumerate->parsed()) return cmd_enumerate(en_n, en_delta, en_rank, fmt);
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const EdgelistError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}
