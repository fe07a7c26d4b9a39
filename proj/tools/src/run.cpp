#include "zetadiv_cli/run.hpp"

#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "zetadiv/errors.hpp"

namespace zetadiv::cli {

namespace {

const std::map<std::string, Command>& command_names() {
    static const std::map<std::string, Command> names{
        {"count", Command::Count},         {"lpoly", Command::Lpoly},         {"gsum", Command::Gsum},
        {"verify-dk", Command::VerifyDk},  {"check-div", Command::CheckDiv},  {"scan-gsum", Command::ScanGsum},
        {"counterexample", Command::Counterexample},
    };
    return names;
}

void need(bool present, const char* flag, Command c) {
    if (!present) throw UsageError(std::string(flag) + " is required for " + to_string(c));
}

EnumerationOptions options_of(const RunConfig& c) { return {c.threads, c.max_m}; }

CurveModel load_curve(const std::string& path) {
    auto c = io::curve_from_json(io::load_json_file(path));
    validate_curve(c);
    return c;
}

/// Counts a curve up to its genus and turns it into an L-polynomial.
LPolynomial lpoly_of_curve(const CurveModel& c, std::optional<unsigned> horizon, const EnumerationOptions& opt) {
    const unsigned g = genus(c);
    const auto series = count_series(c, std::max(g, horizon.value_or(g)), opt);
    return lpoly_from_counts(series.q, g, series.counts);
}

int run_count(const RunConfig& c, std::ostream& out) {
    CountReport r{load_curve(*c.curve)};
    r.genus = genus(r.curve);
    const auto opt = options_of(c);
    if (c.m) {
        r.first_m = *c.m;
        r.series.q = count_series(r.curve, 1, opt).q;
        r.series.counts = {count_points(r.curve, *c.m, opt)};
    } else {
        r.series = count_series(r.curve, c.horizon.value_or(std::max(1u, r.genus)), opt);
    }
    out << emit_report(r, c.format);
    return kExitOk;
}

int run_lpoly(const RunConfig& c, std::ostream& out) {
    LpolyReport r{load_curve(*c.curve)};
    const unsigned g = genus(r.curve);
    r.horizon = std::max(g, c.horizon.value_or(g));
    const auto series = count_series(r.curve, r.horizon, options_of(c));
    r.counts = series.counts;
    r.lpoly = lpoly_from_counts(series.q, g, series.counts);
    r.validation = validate_lpoly(r.lpoly);
    r.p_rank = p_rank_manin(r.lpoly, r.curve.characteristic());
    if (r.curve.is_as2()) r.deuring_two_rank = two_rank_deuring(r.curve);
    out << emit_report(r, c.format);
    const bool prank_ok = !r.curve.is_as2() || r.p_rank == r.deuring_two_rank;
    return r.validation.ok && prank_ok ? kExitOk : kExitViolation;
}

int run_gsum(const RunConfig& c, std::ostream& out) {
    GsumReport r;
    r.k = *c.k;
    r.m = *c.m;
    r.value = gsum(r.k, r.m, options_of(c));
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), 2, r.m);
    r.points = q + 1 + r.value;
    out << emit_report(r, c.format);
    return kExitOk;
}

int run_verify_dk(const RunConfig& c, std::ostream& out) {
    const auto r = verify_conjecture_dk(*c.k, c.horizon, options_of(c));
    out << emit_report(r, c.format);
    return r.lpoly_valid && r.prank_dk == 1 ? kExitOk : kExitViolation;
}

int run_check_div(const RunConfig& c, std::ostream& out) {
    const auto a = io::curve_or_lpoly_from_json(io::load_json_file(*c.lc));
    const auto b = io::curve_or_lpoly_from_json(io::load_json_file(*c.ld));
    const auto opt = options_of(c);
    const auto* ca = std::get_if<CurveModel>(&a);
    const auto* cb = std::get_if<CurveModel>(&b);
    if (ca && cb) {
        validate_curve(*ca);
        validate_curve(*cb);
        const unsigned h = c.horizon.value_or(std::max(genus(*ca), genus(*cb)));
        const auto r = check_main_theorem(*ca, *cb, *c.k, h, opt);
        out << emit_report(r, c.format);
        return r.verdict == Verdict::TheoremAppliesViolationFound ? kExitViolation : kExitOk;
    }
    const LPolynomial la = ca ? (validate_curve(*ca), lpoly_of_curve(*ca, std::nullopt, opt)) : std::get<LPolynomial>(a);
    const LPolynomial lb = cb ? (validate_curve(*cb), lpoly_of_curve(*cb, std::nullopt, opt)) : std::get<LPolynomial>(b);
    const unsigned h = c.horizon.value_or(2 * (la.genus + lb.genus));
    const auto r = check_main_theorem(la, lb, *c.k, std::max(1u, h));
    out << emit_report(r, c.format);
    return r.verdict == Verdict::TheoremAppliesViolationFound ? kExitViolation : kExitOk;
}

int run_scan(const RunConfig& c, std::ostream& out) {
    const auto r = gsum_invariance_scan(*c.k, *c.m, options_of(c));
    out << emit_report(r, c.format);
    return kExitOk;
}

int run_counterexample(const RunConfig& c, std::ostream& out) {
    const auto r = counterexample_f3();
    out << emit_report(r, c.format);
    return r.all_passed() ? kExitOk : kExitViolation;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
    const auto& names = command_names();
    auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

std::string to_string(Command c) {
    for (const auto& [name, cmd] : command_names())
        if (cmd == c) return name;
    return "unknown";
}

unsigned default_threads() {
    if (const char* env = std::getenv("ZETADIV_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 4096) return static_cast<unsigned>(v);
    }
    return resolve_threads(0);
}

void validate(const RunConfig& c) {
    if (c.threads < 1) throw UsageError("--threads must be at least 1");
    if (c.horizon && *c.horizon < 1) throw UsageError("--horizon must be at least 1");
    if (c.k && *c.k < 1) throw UsageError("--k must be at least 1");
    if (c.m && *c.m < 1) throw UsageError("--m must be at least 1");
    if (c.max_m < 1 || c.max_m > 48) throw UsageError("--max-m must be between 1 and 48");
    switch (c.command) {
        case Command::Count:
        case Command::Lpoly:
            need(c.curve.has_value(), "--curve", c.command);
            break;
        case Command::Gsum:
        case Command::ScanGsum:
            need(c.k.has_value(), "--k", c.command);
            need(c.m.has_value(), "--m", c.command);
            break;
        case Command::VerifyDk:
            need(c.k.has_value(), "--k", c.command);
            break;
        case Command::CheckDiv:
            need(c.lc.has_value(), "--lc", c.command);
            need(c.ld.has_value(), "--ld", c.command);
            need(c.k.has_value(), "--k", c.command);
            break;
        case Command::Counterexample:
            break;
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        switch (config.command) {
            case Command::Count:
                return run_count(config, out);
            case Command::Lpoly:
                return run_lpoly(config, out);
            case Command::Gsum:
                return run_gsum(config, out);
            case Command::VerifyDk:
                return run_verify_dk(config, out);
            case Command::CheckDiv:
                return run_check_div(config, out);
            case Command::ScanGsum:
                return run_scan(config, out);
            case Command::Counterexample:
                return run_counterexample(config, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotConsistent& e) {
        // Counts that contradict the Weil bounds or the functional equation.
        err << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Point counts, L-polynomials and divisibility checks for curves over finite fields", "zetadiv"};
    app.require_subcommand(1);

    RunConfig config;
    config.threads = default_threads();
    std::string format = "json";

    struct SubcommandInfo {
        const char* name;
        const char* help;
        bool curve, lc_ld, k, m, horizon;
    };
    const SubcommandInfo subcommands[] = {
        {"count", "Point counts N_m of a curve", true, false, false, true, true},
        {"lpoly", "L-polynomial of a curve from its point counts", true, false, false, false, true},
        {"gsum", "Character sum G_m^(k) of the D_k family", false, false, true, true, false},
        {"verify-dk", "Divisibility of L_{D_k} by L_{D_1} and the quotient shape", false, false, true, false, true},
        {"check-div", "Divisibility test for a pair of curves or L-polynomials", false, true, true, false, true},
        {"scan-gsum", "Table of G_m^(k) for k <= K, m <= M with the gcd invariance check", false, false, true, true, false},
        {"counterexample", "The F_3 pair with equal counts but no divisibility", false, false, false, false, false},
    };

    std::optional<std::string> curve, lc, ld;
    std::optional<unsigned> k, m, horizon;
    for (const auto& s : subcommands) {
        auto* sub = app.add_subcommand(s.name, s.help);
        if (s.curve) sub->add_option("--curve", curve, "Curve JSON file");
        if (s.lc_ld) {
            sub->add_option("--lc", lc, "Curve or L-polynomial JSON for C");
            sub->add_option("--ld", ld, "Curve or L-polynomial JSON for D");
        }
        if (s.k) sub->add_option("--k", k, "Parameter k");
        if (s.m) sub->add_option("--m", m, "Extension degree m");
        if (s.horizon) sub->add_option("--horizon", horizon, "Largest extension degree to count");
        sub->add_option("--threads", config.threads, "Worker threads (default: ZETADIV_THREADS or all processors)");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--max-m", config.max_m, "Largest extension degree that may be enumerated");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    const auto subs = app.get_subcommands();
    config.command = *parse_command(subs.front()->get_name());
    config.curve = curve;
    config.lc = lc;
    config.ld = ld;
    config.k = k;
    config.m = m;
    config.horizon = horizon;
    config.format = format == "table" ? Format::Table : Format::Json;
    return run(config, out, err);
}

}  // namespace zetadiv::cli
