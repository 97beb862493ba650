// polyres: exact resultants of systems of homogeneous polynomials, computed
// through generalized traces and assembled as Schur polynomials.

#include "polyres/errors.hpp"
#include "polyres/resultant.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace polyres;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError(std::string("malformed ") + what + " list: '" + text + "'");
        }
    }
    if (out.empty()) throw InputError(std::string("empty ") + what + " list");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string kvec_key(const std::vector<int>& kvec) {
    std::string out;
    for (size_t i = 0; i < kvec.size(); ++i) out += (i ? "," : "") + std::to_string(kvec[i]);
    return out;
}

// Shared options describing where the system comes from.
struct SystemInput {
    std::string input_path;
    std::string inline_json;
    std::string degrees_text;
    bool symbolic = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", input_path, "system document (JSON file)");
        cmd->add_option("--json", inline_json, "system document (inline JSON)");
        cmd->add_option("--degrees", degrees_text, "degree vector, e.g. 2,2");
        cmd->add_flag("--symbolic", symbolic, "build the generic symbolic system for --degrees");
    }

    PolySystem load() const {
        int sources = (!input_path.empty()) + (!inline_json.empty()) + (!degrees_text.empty());
        if (sources != 1)
            throw InputError("specify exactly one of --input, --json, --degrees");
        if (!input_path.empty()) return parse_system_json(read_file(input_path));
        if (!inline_json.empty()) return parse_system_json(inline_json);
        if (!symbolic)
            throw InputError("--degrees requires --symbolic (numeric systems come as JSON)");
        std::vector<int> degrees = parse_int_list(degrees_text, "degree");
        return build_symbolic(static_cast<int>(degrees.size()), degrees);
    }
};

struct EngineFlags {
    unsigned long long budget = 10'000'000;
    int jobs = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--budget", budget, "trace enumeration budget cap")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--jobs", jobs, "worker count for trace computation")
            ->check(CLI::PositiveNumber);
    }
    TraceOptions options() const { return TraceOptions{budget, jobs}; }
};

GradingMode parse_mode(const std::string& text) {
    if (text == "multi") return GradingMode::Multi;
    if (text == "single") return GradingMode::Single;
    throw InputError("mode must be 'multi' or 'single'");
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// resultant

int run_resultant(const SystemInput& in, const EngineFlags& flags, const std::string& mode_text,
                  const std::string& format, bool stats_only) {
    PolySystem sys = in.load();
    GradingMode mode = parse_mode(mode_text);
    ResultantResult r = resultant(sys, mode, flags.options());

    if (format == "text" && !stats_only) {
        std::cout << r.value.to_string() << "\n";
        return kExitOk;
    }
    ordered_json doc;
    doc["schema"] = 1;
    doc["n"] = sys.n();
    doc["degrees"] = sys.degrees();
    doc["mode"] = mode == GradingMode::Multi ? "multi" : "single";
    doc["degree_data"] = {{"d_vec", r.degrees.d_vec}, {"d_total", r.degrees.d_total}};
    doc["term_count"] = r.term_count;
    doc["budget"] = {{"max_enumeration", r.budget.max_enumeration},
                     {"cap", r.budget.cap},
                     {"traces_computed", r.budget.traces_computed}};
    if (!stats_only) doc["value"] = r.value.to_string();
    emit(doc);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// traces

int run_traces(const SystemInput& in, const EngineFlags& flags, const std::string& kvec_text,
               int sum_max, const std::string& box_text, const std::string& format) {
    PolySystem sys = in.load();
    const int n = sys.n();

    std::vector<std::vector<int>> kvecs;
    auto add_box = [&](const std::vector<int>& bound) {
        std::vector<int> v(bound.size(), 0);
        while (true) {
            int pos = static_cast<int>(bound.size()) - 1;
            while (pos >= 0 && v[pos] == bound[pos]) {
                v[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++v[pos];
            kvecs.push_back(v);
        }
    };

    int selectors = (!kvec_text.empty()) + (sum_max > 0) + (!box_text.empty());
    if (selectors > 1) throw InputError("use at most one of --kvec, --sum-max, --box");
    if (!kvec_text.empty()) {
        kvecs.push_back(parse_int_list(kvec_text, "grading"));
    } else if (sum_max > 0) {
        std::vector<int> cur;
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == n) {
                if (std::accumulate(cur.begin(), cur.end(), 0) > 0) kvecs.push_back(cur);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                cur.push_back(v);
                self(self, pos + 1, left - v);
                cur.pop_back();
            }
        };
        rec(rec, 0, sum_max);
    } else if (!box_text.empty()) {
        std::vector<int> bound = parse_int_list(box_text, "box");
        if (static_cast<int>(bound.size()) != n) throw InputError("--box length must equal n");
        add_box(bound);
    } else {
        DegreeData dd = degree_data(sys.degrees());
        std::vector<int> bound;
        for (long long d : dd.d_vec) bound.push_back(static_cast<int>(d));
        add_box(bound);
    }

    TraceTable table = compute_trace_table(sys, kvecs, flags.options());

    if (format == "text") {
        for (const auto& [kv, value] : table.entries())
            std::cout << "T[" << kvec_key(kv) << "] = " << value.to_string() << "\n";
        return kExitOk;
    }
    ordered_json doc;
    doc["schema"] = 1;
    doc["n"] = sys.n();
    doc["degrees"] = sys.degrees();
    ordered_json traces = ordered_json::object();
    for (const auto& [kv, value] : table.entries()) traces[kvec_key(kv)] = value.to_string();
    doc["traces"] = std::move(traces);
    emit(doc);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// schur

std::map<int, MPoly> scalar_t_table_from_json(const ordered_json& doc) {
    std::map<int, MPoly> t;
    for (const auto& [key, value] : doc.items())
        t[std::stoi(key)] = MPoly::parse(value.get<std::string>());
    return t;
}

int run_schur(int k, const std::string& target_text, const std::string& method,
              const std::string& t_table_path, const std::string& format) {
    if ((k > 0) == (!target_text.empty()))
        throw InputError("specify exactly one of --k or --target");

    MPoly value;
    if (k > 0) {
        std::map<int, MPoly> t;
        if (!t_table_path.empty()) {
            ordered_json doc = ordered_json::parse(read_file(t_table_path));
            t = scalar_t_table_from_json(doc.at("t"));
        } else {
            t = symbolic_t_table(k);
        }
        SchurMethod m = SchurMethod::Recurrence;
        if (method == "enumerate") m = SchurMethod::Enumerate;
        else if (!method.empty() && method != "recurrence" && method != "series")
            throw InputError("method must be 'recurrence', 'series' or 'enumerate'");
        value = schur_poly(k, t, m);
    } else {
        std::vector<int> target = parse_int_list(target_text, "target");
        std::map<std::vector<int>, MPoly> t;
        if (!t_table_path.empty()) {
            ordered_json doc = ordered_json::parse(read_file(t_table_path));
            for (const auto& [key, val] : doc.at("t").items())
                t[parse_int_list(key, "grading")] = MPoly::parse(val.get<std::string>());
        } else {
            t = symbolic_multi_t_table(target);
        }
        MultiSchurMethod m = MultiSchurMethod::SeriesExp;
        if (method == "enumerate") m = MultiSchurMethod::Enumerate;
        else if (!method.empty() && method != "recurrence" && method != "series")
            throw InputError("method must be 'recurrence', 'series' or 'enumerate'");
        value = multi_schur(target, t, m);
    }

    if (format == "text") {
        std::cout << value.to_string() << "\n";
    } else {
        ordered_json doc;
        doc["schema"] = 1;
        doc["value"] = value.to_string();
        emit(doc);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// det

int run_det(const std::string& input_path, int n, bool symbolic, const std::string& format) {
    std::vector<std::vector<MPoly>> matrix;
    if (!input_path.empty()) {
        ordered_json doc = ordered_json::parse(read_file(input_path));
        for (const auto& row : doc.at("matrix")) {
            std::vector<MPoly> r;
            for (const auto& cell : row) r.push_back(MPoly::parse(cell.get<std::string>()));
            matrix.push_back(std::move(r));
        }
    } else if (symbolic && n > 0) {
        for (int i = 0; i < n; ++i) {
            std::vector<MPoly> row;
            for (int j = 0; j < n; ++j)
                row.push_back(MPoly::variable(Symbol::coeff(i + 1, {j + 1})));
            matrix.push_back(std::move(row));
        }
    } else {
        throw InputError("det needs --input FILE or --n N --symbolic");
    }

    MPoly value = determinant_special(matrix);
    if (format == "text") {
        std::cout << value.to_string() << "\n";
    } else {
        ordered_json doc;
        doc["schema"] = 1;
        doc["n"] = matrix.size();
        doc["value"] = value.to_string();
        emit(doc);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// probe

int run_probe(const SystemInput& in, const EngineFlags& flags, const std::string& format) {
    PolySystem sys = in.load();
    Rational value = solvability_probe(sys, flags.options());
    if (format == "text") {
        std::cout << to_string(value) << "\n";
    } else {
        ordered_json doc;
        doc["schema"] = 1;
        doc["value"] = to_string(value);
        doc["is_zero"] = value == 0;
        emit(doc);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// stats

int run_stats(const SystemInput& in, const EngineFlags& flags, const std::string& mode_text) {
    PolySystem sys = in.load();
    GradingMode mode = parse_mode(mode_text);
    DegreeData dd = degree_data(sys.degrees());

    std::vector<std::vector<int>> kvecs;
    if (mode == GradingMode::Multi) {
        std::vector<int> bound;
        for (long long d : dd.d_vec) bound.push_back(static_cast<int>(d));
        std::vector<int> v(bound.size(), 0);
        while (true) {
            int pos = static_cast<int>(bound.size()) - 1;
            while (pos >= 0 && v[pos] == bound[pos]) {
                v[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++v[pos];
            kvecs.push_back(v);
        }
    } else {
        std::vector<int> cur;
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == sys.n()) {
                if (std::accumulate(cur.begin(), cur.end(), 0) > 0) kvecs.push_back(cur);
                return;
            }
            for (int w = 0; w <= left; ++w) {
                cur.push_back(w);
                self(self, pos + 1, left - w);
                cur.pop_back();
            }
        };
        rec(rec, 0, static_cast<int>(dd.d_total));
    }

    unsigned long long max_enum = 0;
    std::vector<int> blocking;
    for (const auto& kv : kvecs) {
        unsigned long long est = estimate_trace_enumeration(sys, kv);
        if (est > max_enum) {
            max_enum = est;
            blocking = kv;
        }
    }

    ordered_json doc;
    doc["schema"] = 1;
    doc["n"] = sys.n();
    doc["degrees"] = sys.degrees();
    doc["mode"] = mode == GradingMode::Multi ? "multi" : "single";
    doc["degree_data"] = {{"d_vec", dd.d_vec}, {"d_total", dd.d_total}};
    doc["traces_needed"] = kvecs.size();
    doc["max_enumeration"] = max_enum;
    doc["heaviest_grading"] = kvec_key(blocking);
    doc["budget_cap"] = flags.budget;
    doc["within_budget"] = max_enum <= flags.budget;
    emit(doc);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// check

int run_check(uint64_t seed, int trials, const EngineFlags& flags) {
    int failures = 0;
    std::mt19937_64 rng(seed);
    auto report = [&](const std::string& name, bool ok, const std::string& extra = "") {
        std::cout << (ok ? "ok   " : "FAIL ") << name;
        if (!extra.empty()) std::cout << " (" << extra << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    };

    const std::vector<std::vector<int>> probe_vectors = {{1, 1}, {2, 2}, {2, 3}, {1, 1, 1}, {2, 2, 2}};
    for (const auto& degrees : probe_vectors) {
        int n = static_cast<int>(degrees.size());
        bool ok = true;
        for (int t = 0; t < trials && ok; ++t) {
            std::vector<Rational> root;
            for (int i = 0; i < n; ++i) root.push_back(Rational(1 + static_cast<int>(rng() % 5)));
            PolySystem sys = force_common_root(n, degrees, root, rng());
            ok = solvability_probe(sys, flags.options()) == 0;
        }
        report("forced-root probe vanishes [" + kvec_key(degrees) + "]", ok,
               "trials=" + std::to_string(trials));
    }

    for (const auto& degrees : probe_vectors) {
        int n = static_cast<int>(degrees.size());
        bool ok = true;
        for (int t = 0; t < trials && ok; ++t) {
            PolySystem sys = random_numeric_system(n, degrees, rng());
            ok = solvability_probe(sys, flags.options()) != 0;
        }
        report("random dense probe nonzero [" + kvec_key(degrees) + "]", ok,
               "trials=" + std::to_string(trials));
    }

    const std::vector<std::vector<int>> sylvester_pairs = {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}};
    for (const auto& degrees : sylvester_pairs) {
        bool ok = true;
        int sign = 0;
        for (int t = 0; t < trials && ok; ++t) {
            PolySystem sys = random_numeric_system(2, degrees, rng());
            Rational probe = solvability_probe(sys, flags.options());
            MPoly syl = sylvester_resultant(sys.poly(0), sys.poly(1));
            Rational s = syl.constant_term();
            int this_sign = 0;
            if (probe == s && probe != 0) this_sign = 1;
            else if (probe == -s && probe != 0) this_sign = -1;
            else ok = false;
            if (ok) {
                if (sign == 0) sign = this_sign;
                ok = sign == this_sign;
            }
        }
        report("sylvester cross-check [" + kvec_key(degrees) + "]", ok,
               std::string("sign=") + (sign >= 0 ? "+1" : "-1"));
    }

    {
        bool ok = true;
        for (const auto& degrees :
             std::vector<std::vector<int>>{{1, 1}, {2, 2}, {1, 1, 1}, {1, 2}}) {
            PolySystem sys = build_symbolic(static_cast<int>(degrees.size()), degrees);
            ok = ok && resultant(sys, GradingMode::Single, flags.options()).value ==
                           resultant(sys, GradingMode::Multi, flags.options()).value;
        }
        report("single and multi grading agree", ok);
    }

    {
        bool ok = true;
        PolySystem quad = build_symbolic(2, {2, 2});
        for (const auto& kv : std::vector<std::vector<int>>{{1, 0}, {1, 1}, {2, 0}, {2, 1}})
            ok = ok && multigraded_trace(quad, kv) == naive_trace_oracle(quad, kv);
        report("trace pairing matches the differentiation oracle", ok);
    }

    return failures == 0 ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact resultants of homogeneous polynomial systems via "
                 "generalized traces and Schur assembly"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    // resultant
    auto* cmd_res = app.add_subcommand("resultant", "compute the resultant of a system");
    SystemInput res_in;
    EngineFlags res_flags;
    std::string res_mode = "multi";
    bool stats_only = false;
    res_in.attach(cmd_res);
    res_flags.attach(cmd_res);
    cmd_res->add_option("--mode", res_mode, "grading mode: multi or single");
    cmd_res->add_flag("--stats-only", stats_only,
                      "report term counts and degrees without printing the polynomial");
    add_format(cmd_res);

    // traces
    auto* cmd_traces = app.add_subcommand("traces", "emit a table of generalized traces");
    SystemInput tr_in;
    EngineFlags tr_flags;
    std::string tr_kvec, tr_box;
    int tr_sum_max = 0;
    tr_in.attach(cmd_traces);
    tr_flags.attach(cmd_traces);
    cmd_traces->add_option("--kvec", tr_kvec, "single grading vector, e.g. 1,1");
    cmd_traces->add_option("--sum-max", tr_sum_max, "all gradings with component sum <= K");
    cmd_traces->add_option("--box", tr_box, "all gradings componentwise <= this vector");
    add_format(cmd_traces);

    // schur
    auto* cmd_schur = app.add_subcommand("schur", "Schur and multi-Schur polynomials");
    int schur_k = 0;
    std::string schur_target, schur_method, schur_ttable;
    cmd_schur->add_option("--k", schur_k, "scalar index k");
    cmd_schur->add_option("--target", schur_target, "grading target, e.g. 2,1");
    cmd_schur->add_option("--method", schur_method, "recurrence|series|enumerate");
    cmd_schur->add_option("--t-table", schur_ttable, "JSON file with explicit t arguments");
    add_format(cmd_schur);

    // det
    auto* cmd_det = app.add_subcommand("det", "determinant through the trace formula");
    std::string det_input;
    int det_n = 0;
    bool det_symbolic = false;
    cmd_det->add_option("--input", det_input, "JSON file with a \"matrix\" of polynomial strings");
    cmd_det->add_option("--n", det_n, "matrix size for --symbolic");
    cmd_det->add_flag("--symbolic", det_symbolic, "use the generic linear coefficient matrix");
    add_format(cmd_det);

    // probe
    auto* cmd_probe = app.add_subcommand("probe", "exact numeric degeneracy probe");
    SystemInput probe_in;
    EngineFlags probe_flags;
    probe_in.attach(cmd_probe);
    probe_flags.attach(cmd_probe);
    add_format(cmd_probe);

    // check
    auto* cmd_check = app.add_subcommand("check", "run the built-in oracle suites");
    EngineFlags check_flags;
    uint64_t check_seed = 1;
    int check_trials = 5;
    check_flags.attach(cmd_check);
    cmd_check->add_option("--seed", check_seed, "random seed");
    cmd_check->add_option("--trials", check_trials, "trials per suite")->check(CLI::PositiveNumber);

    // stats
    auto* cmd_stats = app.add_subcommand("stats", "degree data and budget predictions");
    SystemInput stats_in;
    EngineFlags stats_flags;
    std::string stats_mode = "multi";
    stats_in.attach(cmd_stats);
    stats_flags.attach(cmd_stats);
    cmd_stats->add_option("--mode", stats_mode, "grading mode: multi or single");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitInput;
    }

    try {
        if (cmd_res->parsed())
            return run_resultant(res_in, res_flags, res_mode, format, stats_only);
        if (cmd_traces->parsed())
            return run_traces(tr_in, tr_flags, tr_kvec, tr_sum_max, tr_box, format);
        if (cmd_schur->parsed())
            return run_schur(schur_k, schur_target, schur_method, schur_ttable, format);
        if (cmd_det->parsed()) return run_det(det_input, det_n, det_symbolic, format);
        if (cmd_probe->parsed()) return run_probe(probe_in, probe_flags, format);
        if (cmd_check->parsed()) return run_check(check_seed, check_trials, check_flags);
        if (cmd_stats->parsed()) return run_stats(stats_in, stats_flags, stats_mode);
        std::cerr << "error: no subcommand\n";
        return kExitInput;
    } catch (const BudgetError& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        if (!e.kvec.empty()) std::cerr << "blocking grading vector: " << kvec_key(e.kvec) << "\n";
        return kExitBudget;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
