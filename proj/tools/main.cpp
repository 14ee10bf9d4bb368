#include "njump/fastpath.hpp"
#include "njump/geometry.hpp"
#include "njump/jump.hpp"
#include "njump/parser.hpp"
#include "njump/render.hpp"
#include "njump/report_json.hpp"
#include "njump/types.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#ifdef _WIN32
#include <io.h>
#define NJUMP_ISATTY _isatty
#define NJUMP_FILENO _fileno
#else
#include <unistd.h>
#define NJUMP_ISATTY isatty
#define NJUMP_FILENO fileno
#endif

namespace {

using namespace njump;

bool use_color(std::FILE* stream)
{
    if (std::getenv("NO_COLOR"))
        return false;
    return NJUMP_ISATTY(NJUMP_FILENO(stream)) != 0;
}

std::string paint(const std::string& text, const char* code, bool enabled)
{
    if (!enabled)
        return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

// ---- input handling --------------------------------------------------------

struct InputOptions {
    std::string germ;   // literal germ, "-" for stdin, "@path" for a file
    std::string triple; // "p,q,r"
    int dim = 0;        // 0 = unset
};

void add_input_options(CLI::App* cmd, InputOptions& in)
{
    auto* pos = cmd->add_option("input", in.germ,
                                "germ text, '-' for stdin, or '@FILE' to read a file");
    auto* trip = cmd->add_option("--triple", in.triple,
                                 "one-face input p,q,r standing for x^p + y^q + z^r");
    pos->excludes(trip);
    trip->excludes(pos);
    cmd->add_option("--dim", in.dim, "number of variables (2 or 3; default 3)")
        ->check(CLI::IsMember({2, 3}));
}

std::vector<std::int64_t> parse_int_list(const std::string& text, std::size_t count,
                                         const std::string& what)
{
    std::vector<std::int64_t> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ','))
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(part, &used));
            if (used != part.size())
                throw std::invalid_argument(part);
        } catch (const std::exception&) {
            fail(ErrorKind::parse, "invalid " + what + " '" + text + "'");
        }
    if (out.size() != count)
        fail(ErrorKind::parse, what + " '" + text + "' must have " + std::to_string(count) +
                                   " comma-separated entries");
    return out;
}

Support load_support(const InputOptions& in)
{
    if (!in.triple.empty()) {
        if (in.dim == 2)
            fail(ErrorKind::input_mismatch, "--triple input is three-dimensional");
        auto v = parse_int_list(in.triple, 3, "--triple");
        if (v[0] < 1 || v[1] < 1 || v[2] < 1)
            fail(ErrorKind::parse, "--triple entries must be positive");
        return Support(3, {ev(v[0], 0, 0), ev(0, v[1], 0), ev(0, 0, v[2])});
    }
    if (in.germ.empty())
        fail(ErrorKind::parse, "no input given; pass a germ or --triple");

    std::string text = in.germ;
    if (text == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else if (text.front() == '@') {
        std::ifstream file(text.substr(1));
        if (!file)
            fail(ErrorKind::parse, "cannot read file '" + text.substr(1) + "'");
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    return parse_germ(text, in.dim ? std::optional<int>(in.dim) : std::nullopt);
}

void emit(const std::string& output_file, const std::string& content)
{
    if (output_file.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(output_file);
    if (!out)
        fail(ErrorKind::input_mismatch, "cannot write to '" + output_file + "'");
    out << content;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---- jump computation ------------------------------------------------------

enum class Engine { automatic, bruteforce, fastpath };

JumpReport run_fastpath_on(const NewtonDiagram& d)
{
    auto match = match_one_face_triple(d);
    if (!match)
        fail(ErrorKind::input_mismatch,
             "the fastpath engine requires a one-face support x^p + y^q + z^r "
             "with pairwise coprime exponents p >= q >= r >= 2");
    JumpReport report = lambda_nd_fastpath(match->triple);
    for (auto& e : report.realizing_exponents)
        e = unpermute(*match, e);
    std::sort(report.realizing_exponents.begin(), report.realizing_exponents.end());
    return report;
}

JumpReport compute_jump(const Support& s, Engine engine, const std::optional<Int>& mu,
                        bool keep_trace)
{
    const auto d = build_diagram(s);
    if (!d.convenient())
        fail(ErrorKind::not_convenient,
             "the support is not convenient (axis untouched); the jump is undefined");

    if (mu) {
        if (engine == Engine::fastpath)
            fail(ErrorKind::input_mismatch,
                 "--mu selects the degenerate entry point, which never uses the fastpath");
        return lambda_nd_degenerate(s, *mu, keep_trace);
    }

    switch (engine) {
    case Engine::bruteforce:
        return lambda_nd_bruteforce(s, keep_trace);
    case Engine::fastpath:
        return run_fastpath_on(d);
    case Engine::automatic:
        if (auto match = match_one_face_triple(d)) {
            JumpReport report = lambda_nd_fastpath(match->triple);
            for (auto& e : report.realizing_exponents)
                e = unpermute(*match, e);
            std::sort(report.realizing_exponents.begin(), report.realizing_exponents.end());
            return report;
        }
        return lambda_nd_bruteforce(s, keep_trace);
    }
    fail(ErrorKind::internal, "unhandled engine");
}

std::string jump_report_text(const JumpReport& r, int dimension, bool show_trace)
{
    std::ostringstream out;
    out << "nu          " << r.nu_before << '\n';
    out << "lambda_nd   " << r.lambda_nd << '\n';
    out << "method      " << to_string(r.method) << '\n';
    if (r.mu)
        out << "mu          " << *r.mu << '\n';
    out << "candidates  " << r.candidates_examined << '\n';
    out << "realizing  ";
    if (r.realizing_exponents.empty())
        out << " (none)";
    for (const auto& e : r.realizing_exponents)
        out << ' ' << to_string(e, dimension);
    out << '\n';
    if (r.method == Method::fastpath && !r.fastpath_trace.empty()) {
        out << "trace:\n";
        for (const auto& row : r.fastpath_trace)
            out << "  i0=" << row.i0 << "  a=" << row.a << "  b=" << row.b << "  c=" << row.c
                << "  value=" << row.value << "  " << (row.success ? "ok" : "fail") << '\n';
    } else if (show_trace && !r.candidate_trace.empty()) {
        out << "trace:\n";
        for (const auto& row : r.candidate_trace)
            out << "  " << to_string(row.exponent, dimension) << "  nu_after=" << row.nu_after
                << "  jump=" << row.jump << '\n';
    }
    return out.str();
}

// ---- subcommand state ------------------------------------------------------

struct NuOptions {
    InputOptions input;
    std::string format = "text";
    std::string output_file;
};

struct JumpOptions {
    InputOptions input;
    std::string engine = "auto";
    std::string mu;
    bool trace = false;
    std::string format = "json";
    std::string output_file;
};

struct CandidatesOptions {
    InputOptions input;
    std::string format = "text";
    std::string output_file;
};

struct RenderOptions {
    InputOptions input;
    std::string format = "auto";
    std::string output_file;
};

struct SweepOptions {
    std::string p_range, q_range, r_range;
    bool coprime_only = false;
    bool check = false;
    int jobs = 1;
    std::string engine = "auto";
    std::string format = "text";
    std::string output_file;
};

Engine parse_engine(const std::string& name)
{
    if (name == "auto")
        return Engine::automatic;
    if (name == "bruteforce")
        return Engine::bruteforce;
    if (name == "fastpath")
        return Engine::fastpath;
    fail(ErrorKind::input_mismatch, "unknown engine '" + name + "'");
}

std::optional<Int> parse_mu(const std::string& text)
{
    if (text.empty())
        return std::nullopt;
    try {
        return Int(text);
    } catch (const std::exception&) {
        fail(ErrorKind::parse, "invalid --mu '" + text + "'");
    }
}

int run_nu(const NuOptions& opt)
{
    const Support s = load_support(opt.input);
    const auto d = build_diagram(s);
    const Int nu = newton_number(d);
    if (opt.format == "json") {
        ordered_json out;
        out["nu"] = json_int(nu);
        out["metrics"] = to_json(gamma_minus_metrics(d));
        emit(opt.output_file, dump(out));
    } else {
        emit(opt.output_file, nu.str() + "\n");
    }
    return 0;
}

int run_jump(const JumpOptions& opt)
{
    const Support s = load_support(opt.input);
    const auto report =
        compute_jump(s, parse_engine(opt.engine), parse_mu(opt.mu), opt.trace);
    if (opt.format == "json")
        emit(opt.output_file, dump(to_json(report, s.dimension())));
    else
        emit(opt.output_file, jump_report_text(report, s.dimension(), opt.trace));
    return 0;
}

int run_candidates(const CandidatesOptions& opt)
{
    const Support s = load_support(opt.input);
    const Int nu_before = newton_number(s);
    const auto candidates = enumerate_candidates(s);

    std::vector<DeformationCandidate> rows;
    rows.reserve(candidates.points.size());
    for (const auto& p : candidates.points)
        rows.push_back(jump_of_candidate(s, p));

    if (opt.format == "json") {
        emit(opt.output_file, dump(candidates_json(s, rows)));
        return 0;
    }
    std::ostringstream out;
    out << "exponent  nu_after  jump   (nu = " << nu_before << ")\n";
    for (const auto& row : rows)
        out << to_string(row.exponent, s.dimension()) << "  " << row.nu_after << "  " << row.jump
            << '\n';
    out << "total " << rows.size() << " candidates\n";
    emit(opt.output_file, out.str());
    return 0;
}

int run_render(const RenderOptions& opt)
{
    const Support s = load_support(opt.input);
    const auto d = build_diagram(s);

    std::string format = opt.format;
    if (format == "auto")
        format = s.dimension() == 2 ? "svg" : "obj";

    if (format == "svg") {
        emit(opt.output_file, render_svg(d, s));
    } else if (format == "obj") {
        emit(opt.output_file, render_obj(d));
    } else if (format == "json") {
        ordered_json out = to_json(d);
        if (d.convenient()) {
            out["metrics"] = to_json(gamma_minus_metrics(d));
            out["nu"] = json_int(newton_number(d));
        }
        emit(opt.output_file, dump(out));
    } else {
        fail(ErrorKind::input_mismatch, "render format must be svg, obj or json");
    }
    return 0;
}

// ---- sweep -----------------------------------------------------------------

struct SweepRange {
    std::int64_t lo = 0, hi = 0;
};

SweepRange parse_range(const std::string& text, const char* name)
{
    SweepRange out;
    auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            out.lo = out.hi = std::stoll(text);
        } else {
            out.lo = std::stoll(text.substr(0, pos));
            out.hi = std::stoll(text.substr(pos + 2));
        }
    } catch (const std::exception&) {
        fail(ErrorKind::parse, std::string("invalid range for ") + name + ": '" + text + "'");
    }
    if (out.lo < 2)
        fail(ErrorKind::input_mismatch,
             std::string(name) + " range must start at 2 or above (exponent 1 is smooth)");
    if (out.hi < out.lo)
        fail(ErrorKind::input_mismatch, std::string(name) + " range is empty");
    return out;
}

struct SweepRow {
    std::int64_t p, q, r;
};

struct SweepOutcome {
    SweepRow row;
    Int lambda;
    std::vector<ExponentVector> realizing;
    std::string engine;
    std::optional<bool> agree; // set when both engines ran
};

bool pairwise_coprime(const SweepRow& t)
{
    return std::gcd(t.p, t.q) == 1 && std::gcd(t.p, t.r) == 1 && std::gcd(t.q, t.r) == 1;
}

SweepOutcome compute_sweep_row(const SweepRow& row, Engine engine, bool check)
{
    SweepOutcome out;
    out.row = row;
    const bool coprime = pairwise_coprime(row);

    if (engine == Engine::fastpath && !coprime)
        fail(ErrorKind::input_mismatch,
             "fastpath engine cannot handle the non-coprime triple (" + std::to_string(row.p) +
                 "," + std::to_string(row.q) + "," + std::to_string(row.r) + ")");

    std::optional<JumpReport> fast;
    std::optional<JumpReport> brute;
    if (coprime && (engine != Engine::bruteforce || check))
        fast = lambda_nd_fastpath(OneFaceTriple{row.p, row.q, row.r});

    const Support s(3, {ev(row.p, 0, 0), ev(0, row.q, 0), ev(0, 0, row.r)});
    const bool want_brute = engine == Engine::bruteforce || !coprime || check;
    if (want_brute)
        brute = lambda_nd_bruteforce(s);

    const JumpReport& chosen =
        (engine == Engine::bruteforce || !coprime) ? *brute : *fast;
    out.lambda = chosen.lambda_nd;
    out.realizing = chosen.realizing_exponents;
    out.engine = to_string(chosen.method);

    if (check && fast && brute) {
        bool same_lambda = fast->lambda_nd == brute->lambda_nd;
        bool witness_found =
            !fast->realizing_exponents.empty() &&
            std::binary_search(brute->realizing_exponents.begin(),
                               brute->realizing_exponents.end(),
                               fast->realizing_exponents.front());
        out.agree = same_lambda && witness_found;
    }
    return out;
}

std::string sweep_row_text(const SweepOutcome& o, bool color)
{
    std::ostringstream out;
    out << o.row.p << ' ' << o.row.q << ' ' << o.row.r << "  lambda=" << o.lambda << "  ";
    if (o.realizing.empty())
        out << "(none)";
    else
        out << to_string(o.realizing.front(), 3);
    out << "  " << o.engine;
    if (o.agree.has_value())
        out << "  "
            << (*o.agree ? paint("ok", "32", color) : paint("MISMATCH", "31", color));
    out << '\n';
    return out.str();
}

int run_sweep(const SweepOptions& opt)
{
    const Engine engine = parse_engine(opt.engine);
    const auto pr = parse_range(opt.p_range, "--p");
    const auto qr = parse_range(opt.q_range, "--q");
    const auto rr = parse_range(opt.r_range, "--r");

    std::vector<SweepRow> rows;
    for (std::int64_t p = pr.lo; p <= pr.hi; ++p)
        for (std::int64_t q = qr.lo; q <= std::min(qr.hi, p); ++q)
            for (std::int64_t r = rr.lo; r <= std::min(rr.hi, q); ++r) {
                SweepRow row{p, q, r};
                if (opt.coprime_only && !pairwise_coprime(row))
                    continue;
                rows.push_back(row);
            }

    unsigned jobs = opt.jobs > 0 ? static_cast<unsigned>(opt.jobs)
                                 : std::max(1u, std::thread::hardware_concurrency());
    if (rows.size() < jobs)
        jobs = static_cast<unsigned>(std::max<std::size_t>(rows.size(), 1));

    std::vector<std::optional<SweepOutcome>> results(rows.size());
    std::exception_ptr first_error;

    if (jobs <= 1) {
        for (std::size_t i = 0; i < rows.size(); ++i)
            results[i] = compute_sweep_row(rows[i], engine, opt.check);
    } else {
        std::atomic<std::size_t> next{0};
        std::mutex mutex;
        std::condition_variable ready;
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < jobs; ++t)
            workers.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= rows.size())
                        return;
                    try {
                        auto outcome = compute_sweep_row(rows[i], engine, opt.check);
                        std::lock_guard lock(mutex);
                        results[i] = std::move(outcome);
                    } catch (...) {
                        std::lock_guard lock(mutex);
                        if (!first_error)
                            first_error = std::current_exception();
                        results[i] = SweepOutcome{rows[i], 0, {}, "error", std::nullopt};
                    }
                    ready.notify_all();
                }
            });
        {
            std::unique_lock lock(mutex);
            for (std::size_t i = 0; i < rows.size(); ++i)
                ready.wait(lock, [&] { return results[i].has_value(); });
        }
        for (auto& w : workers)
            w.join();
        if (first_error)
            std::rethrow_exception(first_error);
    }

    if (opt.format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& res : results) {
            ordered_json jr;
            jr["p"] = res->row.p;
            jr["q"] = res->row.q;
            jr["r"] = res->row.r;
            jr["lambda_nd"] = json_int(res->lambda);
            auto realizing = ordered_json::array();
            for (const auto& e : res->realizing)
                realizing.push_back(to_json(e, 3));
            jr["realizing"] = std::move(realizing);
            jr["engine"] = res->engine;
            if (res->agree.has_value())
                jr["agree"] = *res->agree;
            else
                jr["agree"] = nullptr;
            out.push_back(std::move(jr));
        }
        emit(opt.output_file, dump(out));
        return 0;
    }

    const bool color = opt.output_file.empty() && use_color(stdout);
    std::ostringstream out;
    bool all_agree = true;
    for (const auto& res : results) {
        out << sweep_row_text(*res, color);
        if (res->agree.has_value() && !*res->agree)
            all_agree = false;
    }
    out << rows.size() << " triples";
    if (opt.check)
        out << (all_agree ? "; engines agree on all rows" : "; MISMATCHES FOUND");
    out << '\n';
    emit(opt.output_file, out.str());
    return opt.check && !all_agree ? 4 : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"newton numbers and non-degenerate jumps of convenient singularities"};
    app.set_version_flag("--version", "njump 0.1.0");
    app.require_subcommand(1);

    NuOptions nu_opt;
    auto* nu_cmd = app.add_subcommand("nu", "newton number of a convenient germ");
    add_input_options(nu_cmd, nu_opt.input);
    nu_cmd->add_option("--format", nu_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    nu_cmd->add_option("-o,--output", nu_opt.output_file, "write to a file instead of stdout");

    JumpOptions jump_opt;
    auto* jump_cmd =
        app.add_subcommand("jump", "smallest positive drop of the newton number under "
                                   "one-monomial deformations");
    add_input_options(jump_cmd, jump_opt.input);
    jump_cmd->add_option("--engine", jump_opt.engine, "auto, bruteforce or fastpath")
        ->check(CLI::IsMember({"auto", "bruteforce", "fastpath"}));
    jump_cmd->add_option("--mu", jump_opt.mu,
                         "milnor number of the (possibly degenerate) germ; selects the "
                         "degenerate entry point");
    jump_cmd->add_flag("--trace", jump_opt.trace, "keep per-candidate results in the report");
    jump_cmd->add_option("--format", jump_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    jump_cmd->add_option("-o,--output", jump_opt.output_file, "write to a file instead of stdout");

    CandidatesOptions cand_opt;
    auto* cand_cmd = app.add_subcommand("candidates",
                                        "lattice points of gamma-minus and their jumps");
    add_input_options(cand_cmd, cand_opt.input);
    cand_cmd->add_option("--format", cand_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cand_cmd->add_option("-o,--output", cand_opt.output_file, "write to a file instead of stdout");

    RenderOptions render_opt;
    auto* render_cmd = app.add_subcommand("render", "svg (2d), obj (3d) or json export of the "
                                                    "newton diagram");
    add_input_options(render_cmd, render_opt.input);
    render_cmd->add_option("--format", render_opt.format, "auto, svg, obj or json")
        ->check(CLI::IsMember({"auto", "svg", "obj", "json"}));
    render_cmd->add_option("-o,--output", render_opt.output_file,
                           "write to a file instead of stdout");

    SweepOptions sweep_opt;
    auto* sweep_cmd = app.add_subcommand("sweep", "jumps for all one-face triples p >= q >= r "
                                                  "in the given ranges");
    sweep_cmd->add_option("--p", sweep_opt.p_range, "range for p, e.g. 2..15 or 11")->required();
    sweep_cmd->add_option("--q", sweep_opt.q_range, "range for q")->required();
    sweep_cmd->add_option("--r", sweep_opt.r_range, "range for r")->required();
    sweep_cmd->add_flag("--coprime-only", sweep_opt.coprime_only,
                        "skip triples that are not pairwise coprime");
    sweep_cmd->add_flag("--check", sweep_opt.check,
                        "run both engines where possible and compare");
    sweep_cmd->add_option("--jobs", sweep_opt.jobs, "worker threads (0 = all cores)");
    sweep_cmd->add_option("--engine", sweep_opt.engine, "auto, bruteforce or fastpath")
        ->check(CLI::IsMember({"auto", "bruteforce", "fastpath"}));
    sweep_cmd->add_option("--format", sweep_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sweep_cmd->add_option("-o,--output", sweep_opt.output_file,
                          "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*nu_cmd)
            return run_nu(nu_opt);
        if (*jump_cmd)
            return run_jump(jump_opt);
        if (*cand_cmd)
            return run_candidates(cand_opt);
        if (*render_cmd)
            return run_render(render_opt);
        if (*sweep_cmd)
            return run_sweep(sweep_opt);
    } catch (const Error& e) {
        std::cerr << paint("njump: error:", "31", use_color(stderr)) << ' ' << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << paint("njump: internal error:", "31", use_color(stderr)) << ' ' << e.what()
                  << '\n';
        return static_cast<int>(ErrorKind::internal);
    }
    return 0;
}
