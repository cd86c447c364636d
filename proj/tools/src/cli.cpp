#include "cli.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include "qsc/criteria.hpp"
#include "qsc/generate.hpp"
#include "qsc/io.hpp"
#include "qsc/kernel_l2.hpp"
#include "qsc/phase_criteria.hpp"
#include "qsc/tolerance.hpp"
#include "qsc/wigner.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qsc_cli {

namespace {

using nlohmann::ordered_json;
using namespace qsc;

constexpr const char* kVersion = "1.0.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Kind { matrix, kernel, wigner };

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::matrix: return "matrix";
        case Kind::kernel: return "kernel";
        case Kind::wigner: return "wigner";
    }
    return "unknown";
}

Kind detect_kind(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    char head[4] = {0, 0, 0, 0};
    in.read(head, 4);
    if (in.gcount() == 4 && std::memcmp(head, "WGF1", 4) == 0) return Kind::wigner;
    in.clear();
    in.seekg(0);
    std::string line, token;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (ls >> token) break;
    }
    if (token == "dim") return Kind::matrix;
    if (token == "kernel") return Kind::kernel;
    throw ParseError("cannot tell what '" + path + "' holds; pass --kind");
}

Kind resolve_kind(const std::string& flag, const std::string& path) {
    if (flag == "matrix") return Kind::matrix;
    if (flag == "kernel") return Kind::kernel;
    if (flag == "wigner") return Kind::wigner;
    if (flag == "auto") return detect_kind(path);
    throw UsageError("unknown kind '" + flag + "'");
}

const std::vector<CriterionId>& all_criteria() {
    static const std::vector<CriterionId> ids = {
        CriterionId::GATES,
        CriterionId::FINITE_DEF2,
        CriterionId::POWER_SEQ,
        CriterionId::SQRT_SERIES,
        CriterionId::SQRT_SQUARE_TRACE,
        CriterionId::TRACE_SQRT_SQUARE,
        CriterionId::BINOMIAL_SUMS,
        CriterionId::BINOMIAL_LIMIT,
        CriterionId::PURE_FINITE,
        CriterionId::PURE_INFINITE,
        CriterionId::W_GATES,
        CriterionId::W_TRACE_SQRT,
        CriterionId::W_BINOMIAL,
        CriterionId::W_LIMIT,
        CriterionId::W_PURE,
    };
    return ids;
}

CriterionId criterion_by_name(const std::string& name) {
    for (CriterionId id : all_criteria())
        if (name == to_string(id)) return id;
    throw UsageError("unknown criterion '" + name + "'");
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<double> parse_weights(const std::string& s) {
    std::vector<double> out;
    for (const std::string& t : split_csv(s)) {
        char* end = nullptr;
        const double v = std::strtod(t.c_str(), &end);
        if (end != t.c_str() + t.size()) throw UsageError("bad weight '" + t + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty weight list");
    return out;
}

bool is_phase_id(CriterionId id) {
    switch (id) {
        case CriterionId::W_GATES:
        case CriterionId::W_TRACE_SQRT:
        case CriterionId::W_BINOMIAL:
        case CriterionId::W_LIMIT:
        case CriterionId::W_PURE:
            return true;
        default:
            return false;
    }
}

bool is_purity_id(CriterionId id) {
    return id == CriterionId::PURE_FINITE || id == CriterionId::PURE_INFINITE ||
           id == CriterionId::W_PURE;
}

struct Selection {
    bool all = true;
    std::vector<CriterionId> ids; // empty if all
    bool wants(CriterionId id) const {
        if (all) return true;
        for (CriterionId x : ids)
            if (x == id) return true;
        return false;
    }
};

Selection parse_selection(const std::string& flag, bool phase) {
    Selection sel;
    if (flag == "all") return sel;
    sel.all = false;
    for (const std::string& name : split_csv(flag)) {
        const CriterionId id = criterion_by_name(name);
        if (is_phase_id(id) != phase)
            throw UsageError("criterion '" + name + "' does not apply to this input kind");
        sel.ids.push_back(id);
    }
    if (sel.ids.empty()) throw UsageError("empty criteria list");
    return sel;
}

void aggregate(StateVerdict& out, std::size_t first_criterion_index) {
    int accepts = 0, rejects = 0;
    for (std::size_t i = first_criterion_index; i < out.reports.size(); ++i) {
        if (is_purity_id(out.reports[i].id)) continue;
        if (out.reports[i].verdict == Verdict::accept) ++accepts;
        if (out.reports[i].verdict == Verdict::reject) ++rejects;
    }
    for (std::size_t i = first_criterion_index; i < out.reports.size(); ++i)
        for (std::size_t j = i + 1; j < out.reports.size(); ++j) {
            if (is_purity_id(out.reports[i].id) || is_purity_id(out.reports[j].id)) continue;
            const Verdict a = out.reports[i].verdict;
            const Verdict b = out.reports[j].verdict;
            if ((a == Verdict::accept && b == Verdict::reject) ||
                (a == Verdict::reject && b == Verdict::accept))
                out.conflicts.push_back(std::string(to_string(out.reports[i].id)) + " vs " +
                                        to_string(out.reports[j].id));
        }
    if (!out.conflicts.empty()) out.overall = Verdict::inconclusive;
    else if (rejects > 0) out.overall = Verdict::reject;
    else if (accepts > 0) out.overall = Verdict::accept;
    else out.overall = Verdict::inconclusive;
}

StateVerdict run_matrix_selected(const ComplexMatrix& m, const ToleranceConfig& cfg,
                                 const Selection& sel) {
    if (sel.all) return run_all(m, cfg);

    StateVerdict out;
    CriterionReport gates = gate_conditions(m, cfg);
    const bool gates_ok = gates.verdict == Verdict::accept;
    out.reports.push_back(std::move(gates));
    if (!gates_ok) {
        out.overall = Verdict::reject;
        return out;
    }
    for (CriterionId id : sel.ids) {
        switch (id) {
            case CriterionId::GATES: break; // already in
            case CriterionId::FINITE_DEF2: out.reports.push_back(check_finite_def2(m, cfg)); break;
            case CriterionId::POWER_SEQ: out.reports.push_back(criterion_power_sequence(m, cfg)); break;
            case CriterionId::SQRT_SERIES: out.reports.push_back(criterion_sqrt_series(m, cfg)); break;
            case CriterionId::SQRT_SQUARE_TRACE: out.reports.push_back(criterion_sqrt_square_trace(m, cfg)); break;
            case CriterionId::TRACE_SQRT_SQUARE: out.reports.push_back(criterion_trace_sqrt_square(m, cfg)); break;
            case CriterionId::BINOMIAL_SUMS: out.reports.push_back(criterion_binomial_sums(m, cfg)); break;
            case CriterionId::BINOMIAL_LIMIT: out.reports.push_back(criterion_binomial_limit(m, cfg)); break;
            case CriterionId::PURE_FINITE: out.reports.push_back(check_pure_finite(m, cfg)); break;
            case CriterionId::PURE_INFINITE: out.reports.push_back(check_pure_infinite(m, cfg)); break;
            default:
                throw UsageError(std::string("criterion '") + to_string(id) +
                                 "' does not apply to matrix input");
        }
    }
    aggregate(out, 1);
    for (const CriterionReport& r : out.reports)
        if (r.id == CriterionId::PURE_FINITE)
            out.is_pure = out.overall == Verdict::accept && r.verdict == Verdict::accept;
    return out;
}

StateVerdict run_wigner_selected(const WignerGrid& w, const ToleranceConfig& cfg,
                                 const Selection& sel) {
    if (sel.all) return run_all_w(w, cfg);

    StateVerdict out;
    CriterionReport gates = w_gate_conditions(w, cfg);
    const bool gates_ok = gates.verdict == Verdict::accept;
    out.reports.push_back(std::move(gates));
    if (!gates_ok) {
        out.overall = Verdict::reject;
        return out;
    }
    for (CriterionId id : sel.ids) {
        switch (id) {
            case CriterionId::W_GATES: break;
            case CriterionId::W_TRACE_SQRT: out.reports.push_back(criterion_w_trace_sqrt(w, cfg)); break;
            case CriterionId::W_BINOMIAL: out.reports.push_back(criterion_w_binomial(w, cfg)); break;
            case CriterionId::W_LIMIT: out.reports.push_back(criterion_w_limit(w, cfg)); break;
            case CriterionId::W_PURE: out.reports.push_back(criterion_w_pure(w, cfg)); break;
            default:
                throw UsageError(std::string("criterion '") + to_string(id) +
                                 "' does not apply to phase-space input");
        }
    }
    aggregate(out, 1);
    for (const CriterionReport& r : out.reports)
        if (r.id == CriterionId::W_PURE)
            out.is_pure = out.overall == Verdict::accept && r.verdict == Verdict::accept;
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json report_to_json(const std::string& input, Kind kind, const StateVerdict& v,
                            bool purity_evaluated, std::size_t dim, std::size_t dim2) {
    ordered_json j;
    j["tool"] = "qsc";
    j["version"] = kVersion;
    j["input"] = input;
    j["kind"] = kind_name(kind);
    if (kind == Kind::wigner) j["dim"] = {dim, dim2};
    else j["dim"] = dim;
    j["verdict"] = to_string(v.overall);
    if (purity_evaluated) j["pure"] = v.is_pure;
    else j["pure"] = nullptr;
    j["conflicts"] = v.conflicts;
    ordered_json arr = ordered_json::array();
    for (const CriterionReport& r : v.reports) {
        ordered_json c;
        c["id"] = to_string(r.id);
        c["verdict"] = to_string(r.verdict);
        c["detail"] = r.detail;
        if (r.convergence.terms_used > 0)
            c["convergence"] = {{"status", to_string(r.convergence.status)},
                                {"terms", r.convergence.terms_used},
                                {"residual", r.convergence.final_residual}};
        else
            c["convergence"] = nullptr;
        ordered_json checks = ordered_json::array();
        for (const CriterionCheck& ck : r.checks)
            checks.push_back({{"label", ck.label}, {"value", ck.value}, {"pass", ck.pass}});
        c["checks"] = checks;
        arr.push_back(c);
    }
    j["criteria"] = arr;
    return j;
}

std::string dim_label(Kind kind, std::size_t dim, std::size_t dim2) {
    if (kind == Kind::wigner) return std::to_string(dim) + "x" + std::to_string(dim2);
    return std::to_string(dim);
}

void write_csv(std::ostream& out, const std::string& input, Kind kind, const StateVerdict& v,
               bool header, std::size_t dim, std::size_t dim2) {
    if (header) out << "input,kind,dim,criterion,verdict,check,value,pass\n";
    const std::string d = dim_label(kind, dim, dim2);
    for (const CriterionReport& r : v.reports) {
        if (r.checks.empty())
            out << input << "," << kind_name(kind) << "," << d << "," << to_string(r.id) << ","
                << to_string(r.verdict) << ",,,\n";
        for (const CriterionCheck& ck : r.checks)
            out << input << "," << kind_name(kind) << "," << d << "," << to_string(r.id) << ","
                << to_string(r.verdict) << "," << ck.label << "," << fmt_full(ck.value) << ","
                << (ck.pass ? "true" : "false") << "\n";
    }
}

void write_human(std::ostream& out, const std::string& input, Kind kind, const StateVerdict& v,
                 bool purity_evaluated, std::size_t dim, std::size_t dim2) {
    out << input << " (" << kind_name(kind) << ", dim " << dim_label(kind, dim, dim2) << ")\n";
    out << "verdict: " << to_string(v.overall);
    if (purity_evaluated && v.overall == Verdict::accept)
        out << (v.is_pure ? ", pure" : ", mixed");
    out << "\n";
    for (const CriterionReport& r : v.reports) {
        out << "  " << to_string(r.id) << ": " << to_string(r.verdict);
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        out << "\n";
        for (const CriterionCheck& ck : r.checks)
            out << "    " << ck.label << " = " << fmt(ck.value) << (ck.pass ? "" : "  [fail]")
                << "\n";
    }
    if (!v.conflicts.empty()) {
        out << "  conflicts:\n";
        for (const std::string& c : v.conflicts) out << "    " << c << "\n";
    }
}

int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::accept: return 0;
        case Verdict::reject: return 1;
        case Verdict::inconclusive: return 2;
    }
    return 2;
}

struct CheckOptions {
    std::string kind = "auto";
    std::string criteria = "all";
    ToleranceConfig tol;
    int n_max = 60;
    int m_max = 60;
    bool json = false;
    bool csv = false;
    std::string out_path;
};

void add_common_flags(CLI::App* cmd, CheckOptions& opt) {
    cmd->add_option("--kind", opt.kind, "input kind: auto, matrix, kernel, wigner");
    cmd->add_option("--criteria", opt.criteria, "comma list of criteria, or 'all'");
    cmd->add_option("--tol-series", opt.tol.series_tol, "series term convergence threshold");
    cmd->add_option("--tol-sum", opt.tol.sum_tol, "scalar sum convergence threshold");
    cmd->add_option("--tol-herm", opt.tol.herm_tol, "self-adjointness tolerance");
    cmd->add_option("--tol-trace", opt.tol.trace_tol, "trace deviation tolerance");
    cmd->add_option("--tol-psd", opt.tol.psd_tol, "eigenvalue floor for direct positivity");
    cmd->add_option("--tol-pure", opt.tol.pure_tol, "purity residual tolerance");
    cmd->add_option("--tol-divergence", opt.tol.divergence_threshold, "divergence threshold");
    cmd->add_option("--max-terms", opt.tol.max_terms, "series term cap");
    cmd->add_option("--n-max", opt.n_max, "binomial sum depth (matrix and kernel)");
    cmd->add_option("--m-max", opt.m_max, "binomial sum depth (phase space)");
    cmd->add_flag("--json", opt.json, "emit a JSON report");
    cmd->add_flag("--csv", opt.csv, "emit CSV rows, one per check");
    cmd->add_option("-o,--output", opt.out_path, "write the report here instead of stdout");
}

struct SingleResult {
    Kind kind = Kind::matrix;
    StateVerdict verdict;
    bool purity_evaluated = false;
    // Truncation size of what was actually certified: matrix or kernel
    // dimension, or the two grid extents for phase-space input.
    std::size_t dim = 0;
    std::size_t dim2 = 0;
};

SingleResult check_one(const std::string& path, const CheckOptions& opt) {
    SingleResult res;
    res.kind = resolve_kind(opt.kind, path);

    const bool phase = res.kind == Kind::wigner;
    const Selection sel = parse_selection(opt.criteria, phase);

    ToleranceConfig cfg = opt.tol;
    cfg.n_max = phase ? opt.m_max : opt.n_max;

    if (res.kind == Kind::wigner) {
        const WignerGrid w = read_wigner_file(path);
        res.dim = w.n_q;
        res.dim2 = w.n_p;
        res.verdict = run_wigner_selected(w, cfg, sel);
        res.purity_evaluated = sel.wants(CriterionId::W_PURE);
    } else {
        ComplexMatrix m;
        if (res.kind == Kind::kernel) m = kernel_to_matrix(read_kernel_file(path));
        else m = read_matrix_file(path);
        res.dim = m.dim();
        res.verdict = run_matrix_selected(m, cfg, sel);
        res.purity_evaluated = sel.wants(CriterionId::PURE_FINITE);
    }
    return res;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw ParseError("cannot write '" + path + "'");
    return file;
}

int do_check(const std::string& path, const CheckOptions& opt) {
    if (opt.json && opt.csv) throw UsageError("--json and --csv are mutually exclusive");
    const SingleResult res = check_one(path, opt);

    std::ofstream file;
    std::ostream& out = open_output(file, opt.out_path);
    if (opt.json)
        out << report_to_json(path, res.kind, res.verdict, res.purity_evaluated, res.dim, res.dim2)
                   .dump(2)
            << "\n";
    else if (opt.csv)
        write_csv(out, path, res.kind, res.verdict, true, res.dim, res.dim2);
    else
        write_human(out, path, res.kind, res.verdict, res.purity_evaluated, res.dim, res.dim2);
    return verdict_exit_code(res.verdict.overall);
}

int do_report(const std::vector<std::string>& paths, const CheckOptions& opt) {
    if (opt.json && opt.csv) throw UsageError("--json and --csv are mutually exclusive");

    std::vector<SingleResult> results;
    results.reserve(paths.size());
    for (const std::string& p : paths) results.push_back(check_one(p, opt));

    std::ofstream file;
    std::ostream& out = open_output(file, opt.out_path);
    if (opt.json) {
        ordered_json arr = ordered_json::array();
        for (std::size_t i = 0; i < paths.size(); ++i)
            arr.push_back(report_to_json(paths[i], results[i].kind, results[i].verdict,
                                         results[i].purity_evaluated, results[i].dim,
                                         results[i].dim2));
        out << arr.dump(2) << "\n";
    } else if (opt.csv) {
        for (std::size_t i = 0; i < paths.size(); ++i)
            write_csv(out, paths[i], results[i].kind, results[i].verdict, i == 0, results[i].dim,
                      results[i].dim2);
    } else {
        for (std::size_t i = 0; i < paths.size(); ++i) {
            write_human(out, paths[i], results[i].kind, results[i].verdict,
                        results[i].purity_evaluated, results[i].dim, results[i].dim2);
            if (i + 1 < paths.size()) out << "\n";
        }
    }

    bool any_reject = false, any_inconclusive = false;
    for (const SingleResult& r : results) {
        if (r.verdict.overall == Verdict::reject) any_reject = true;
        if (r.verdict.overall == Verdict::inconclusive) any_inconclusive = true;
    }
    if (any_reject) return 1;
    if (any_inconclusive) return 2;
    return 0;
}

struct GenOptions {
    std::string kind = "matrix";
    std::string preset;
    std::size_t dim = 8;
    std::size_t negatives = 1;
    std::uint64_t seed = 12345;
    std::string weights;
    int level = 0;
    std::size_t points = 64;
    double x_max = 7.0;
    std::size_t grid = 256;
    double box = 8.0;
    double hbar = 1.0;
    std::string out_path;
};

int do_gen(const GenOptions& opt) {
    if (opt.out_path.empty()) throw UsageError("gen needs -o OUTPUT");
    std::mt19937_64 rng(opt.seed);

    if (opt.kind == "matrix") {
        ComplexMatrix m;
        if (opt.preset == "density") m = random_density(opt.dim, rng);
        else if (opt.preset == "pure") m = random_pure(opt.dim, rng);
        else if (opt.preset == "negative") m = random_false_density(opt.dim, opt.negatives, rng);
        else if (opt.preset == "example")
            m = ComplexMatrix::diag({2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0});
        else throw UsageError("matrix presets: density, pure, negative, example");
        write_matrix_file(opt.out_path, m);
    } else if (opt.kind == "kernel") {
        KernelGrid g;
        g.x_min = -opt.x_max;
        g.x_max = opt.x_max;
        g.n = opt.points;
        std::vector<double> w;
        if (opt.preset == "mixture")
            w = opt.weights.empty() ? std::vector<double>{0.5, 0.5} : parse_weights(opt.weights);
        else if (opt.preset == "example")
            w = {2.0 / 3.0, 2.0 / 3.0, -1.0 / 3.0};
        else throw UsageError("kernel presets: mixture, example");
        write_kernel_file(opt.out_path, oscillator_mixture_kernel(g, w, opt.hbar));
    } else if (opt.kind == "wigner") {
        const WignerGrid geom = make_grid(-opt.box, opt.box, -opt.box, opt.box, opt.hbar,
                                          opt.grid, opt.grid);
        WignerGrid w;
        if (opt.preset == "fock") w = fock_wigner(geom, opt.level);
        else if (opt.preset == "mixture")
            w = fock_mixture_wigner(geom, opt.weights.empty()
                                              ? std::vector<double>{0.5, 0.5}
                                              : parse_weights(opt.weights));
        else if (opt.preset == "example") w = false_state_example(geom);
        else throw UsageError("wigner presets: fock, mixture, example");
        write_wigner_file(opt.out_path, w);
    } else {
        throw UsageError("gen kinds: matrix, kernel, wigner");
    }
    return 0;
}

} // namespace

int run(int argc, char** argv) {
    CLI::App app{"quantum state certification"};
    app.set_version_flag("--version", std::string("qsc ") + kVersion);
    app.require_subcommand(1);

    CheckOptions check_opt;
    std::string check_input;
    CLI::App* check = app.add_subcommand("check", "decide whether one input is a state");
    check->add_option("input", check_input, "matrix, kernel, or phase-space file")->required();
    add_common_flags(check, check_opt);

    CheckOptions report_opt;
    std::vector<std::string> report_inputs;
    CLI::App* report = app.add_subcommand("report", "run the criteria over several inputs");
    report->add_option("inputs", report_inputs, "input files")->required()->expected(-1);
    add_common_flags(report, report_opt);

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "generate example inputs");
    gen->add_option("--kind", gen_opt.kind, "matrix, kernel, or wigner");
    gen->add_option("--preset", gen_opt.preset, "what to generate")->required();
    gen->add_option("--dim", gen_opt.dim, "matrix dimension");
    gen->add_option("--negatives", gen_opt.negatives, "negative modes for preset=negative");
    gen->add_option("--seed", gen_opt.seed, "random seed");
    gen->add_option("--weights", gen_opt.weights, "comma list of mixture weights");
    gen->add_option("--level", gen_opt.level, "oscillator level for preset=fock");
    gen->add_option("--points", gen_opt.points, "kernel grid points");
    gen->add_option("--x-max", gen_opt.x_max, "kernel half-width");
    gen->add_option("--grid", gen_opt.grid, "phase-space grid points per axis");
    gen->add_option("--box", gen_opt.box, "phase-space half-width");
    gen->add_option("--hbar", gen_opt.hbar, "Planck constant over 2 pi");
    gen->add_option("-o,--output", gen_opt.out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3; // help/version exit cleanly
    }

    try {
        if (check->parsed()) return do_check(check_input, check_opt);
        if (report->parsed()) return do_report(report_inputs, report_opt);
        if (gen->parsed()) return do_gen(gen_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}

} // namespace qsc_cli
