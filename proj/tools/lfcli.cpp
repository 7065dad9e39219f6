// Command-line surface: identity verification over the registry, coefficient
// expansion, real-zero scans, residues, and gamma/conductor reports.
//
// Exit codes: 0 success, 2 usage error, 3 accuracy failure.
// Output is byte-deterministic for a given invocation (no timestamps).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lf/analytic_scan.hpp"

using namespace lf;

namespace {

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& w) : std::runtime_error(w) {}
};

// --------------------------------------------------------------------------
// Spec mini-language.
//
//   expr := term { '*' term }
//   term := 'zeta' | 'chi(' D ')' | 'sym' j '(delta)'
//         | 'sym2(delta)xsym2(delta)' | 'pixpi(delta)'
//
// j even, 2 <= j <= 12; D a fundamental discriminant.

struct ParsedSpec {
    LSeriesSpec finite;
    CompletedSpec completed;
};

[[noreturn]] void parse_fail(size_t pos, const std::string& what) {
    throw UsageError("spec parse error at position " + std::to_string(pos) + ": " +
                     what);
}

ParsedSpec parse_spec(const std::string& text) {
    std::vector<LSeriesSpec> finite_parts;
    CompletedSpec completed("(" + text + ")");
    size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        if (!first) {
            if (text[pos] != '*') parse_fail(pos, "expected '*'");
            ++pos;
        }
        first = false;
        size_t next = text.find('*', pos);
        std::string term = text.substr(pos, next == std::string::npos
                                                ? std::string::npos
                                                : next - pos);
        size_t base = pos;
        pos = next == std::string::npos ? text.size() : next;
        if (term.empty()) parse_fail(base, "empty term");
        if (term == "zeta") {
            finite_parts.push_back(zeta_spec());
            completed.add(completed_zeta().atoms()[0].first);
        } else if (term.rfind("chi(", 0) == 0 && term.back() == ')') {
            long long D = 0;
            try {
                size_t used = 0;
                std::string body = term.substr(4, term.size() - 5);
                D = std::stoll(body, &used);
                if (used != body.size()) parse_fail(base + 4 + used, "bad discriminant");
            } catch (const std::logic_error&) {
                parse_fail(base + 4, "bad discriminant");
            }
            if (!is_fundamental_discriminant(D) || D == 1)
                parse_fail(base + 4, "discriminant is not fundamental");
            finite_parts.push_back(character_spec(D));
            completed.add(completed_character(D).atoms()[0].first);
        } else if (term == "sym2(delta)xsym2(delta)") {
            finite_parts.push_back(sym2_pairing_spec());
            completed.add(completed_sym2_pairing().atoms()[0].first);
        } else if (term == "pixpi(delta)") {
            finite_parts.push_back(pi_pairing_product_spec());
            CompletedSpec pi = completed_pi_pairing();
            for (const auto& [a, e] : pi.atoms()) completed.add(a, e);
        } else if (term.rfind("sym", 0) == 0) {
            size_t open = term.find('(');
            if (open == std::string::npos || term.substr(open) != "(delta)")
                parse_fail(base + 3, "expected sym<j>(delta)");
            int j = 0;
            try {
                size_t used = 0;
                j = std::stoi(term.substr(3, open - 3), &used);
                if (used != open - 3) parse_fail(base + 3, "bad power");
            } catch (const std::logic_error&) {
                parse_fail(base + 3, "bad power");
            }
            if (j < 2 || j > 12 || j % 2 != 0)
                parse_fail(base + 3, "power must be even, 2..12");
            finite_parts.push_back(sym_power_spec(j));
            completed.add(completed_sym_power(j).atoms()[0].first);
        } else {
            parse_fail(base, "unknown term '" + term + "'");
        }
    }
    if (finite_parts.empty()) parse_fail(0, "empty spec");
    ParsedSpec out{product_spec("(" + text + ")", finite_parts), completed};
    return out;
}

std::string fmt(const real& x) { return x.str(17, std::ios_base::scientific); }

void emit(const std::string& out_path, const std::string& body) {
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw UsageError("cannot open output file: " + out_path);
    os << body;
}

// --------------------------------------------------------------------------
// Subcommand bodies.

int run_verify(const std::string& tag, const std::string& format,
               const std::string& out_path) {
    std::vector<const RegistryEntry*> selected;
    if (tag.empty()) {
        for (const auto& e : identity_registry()) selected.push_back(&e);
    } else {
        try {
            selected.push_back(&registry_entry(tag));
        } catch (const std::invalid_argument& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }
    std::ostringstream os;
    bool ok = true;
    if (format == "csv") os << "identity,status,expected,informational\n";
    for (const auto* e : selected) {
        auto rep = e->run();
        bool match = rep.all_match();
        bool as_expected = match == e->expect_match;
        ok = ok && as_expected;
        std::string status = match ? "MATCH" : "MISMATCH";
        std::string expected = e->expect_match ? "MATCH" : "MISMATCH";
        if (format == "csv") {
            os << e->tag << "," << status << "," << expected << ","
               << (e->expect_match ? 0 : 1) << "\n";
        } else if (format == "structured") {
            os << "identity: " << e->tag << "\n";
            os << "status: " << status << "\n";
            os << "expected: " << expected << "\n";
            if (!e->annotation.empty()) os << "note: " << e->annotation << "\n";
            os << "\n";
        } else {
            os << e->tag << " " << status
               << (e->expect_match ? "" : " (informational: expected mismatch)")
               << "\n";
            if (!as_expected) os << "  UNEXPECTED; details:\n" << rep.serialize();
            if (!e->annotation.empty()) os << "  note: " << e->annotation << "\n";
        }
    }
    if (format == "text") os << "result: " << (ok ? "ok" : "fail") << "\n";
    emit(out_path, os.str());
    return ok ? 0 : 1;
}

int run_coeffs(const std::string& spec_text, long long xmax,
               const std::string& format, const std::string& out_path) {
    auto parsed = parse_spec(spec_text);
    auto coeffs = expand_coeffs(parsed.finite, xmax);
    std::ostringstream os;
    if (format == "csv") os << "n,a_n\n";
    for (long long n = 1; n <= xmax; ++n) {
        std::string v = coeffs.mode == ArithmeticMode::EXACT
                            ? coeffs.qvalues[static_cast<size_t>(n - 1)].str()
                            : fmt(coeffs.fvalues[static_cast<size_t>(n - 1)]);
        if (format == "csv")
            os << n << "," << v << "\n";
        else if (format == "structured")
            os << "a." << n << ": " << v << "\n";
        else
            os << n << " " << v << "\n";
    }
    emit(out_path, os.str());
    return 0;
}

int run_scan(const std::string& spec_text, const std::string& interval, int grid,
             const std::string& c_value, const std::string& format,
             const std::string& out_path) {
    auto parsed = parse_spec(spec_text);
    ScanConfig cfg;
    size_t colon = interval.find(':');
    if (colon == std::string::npos)
        throw UsageError("interval must be given as a:b");
    try {
        cfg.a = real(interval.substr(0, colon));
        cfg.b = real(interval.substr(colon + 1));
    } catch (const std::runtime_error&) {
        throw UsageError("interval must be given as a:b with numeric bounds");
    }
    cfg.grid = grid;
    if (!c_value.empty()) cfg.c = real(c_value);
    auto res = scan_real_zeros(parsed.completed, cfg);
    std::ostringstream os;
    if (format == "csv") {
        os << res.csv();
    } else if (format == "structured") {
        os << "type: scan\n";
        os << "spec: " << spec_text << "\n";
        os << "a: " << fmt(cfg.a) << "\n";
        os << "b: " << fmt(cfg.b) << "\n";
        os << "grid: " << cfg.grid << "\n";
        os << "zero_count: " << res.zeros.size() << "\n";
        for (size_t i = 0; i < res.points.size(); ++i)
            os << "point." << i << ": " << fmt(res.points[i].s) << " "
               << fmt(res.points[i].value) << " " << (res.points[i].bracket ? 1 : 0)
               << "\n";
        for (size_t i = 0; i < res.zeros.size(); ++i)
            os << "zero." << i << ": " << fmt(res.zeros[i].zero)
               << (res.zeros[i].resolved ? "" : " UNRESOLVED") << "\n";
    } else {
        os << "spec: " << spec_text << "\n" << res.text();
    }
    emit(out_path, os.str());
    return 0;
}

int run_residue(const std::string& spec_text, const std::string& format,
                const std::string& out_path) {
    auto parsed = parse_spec(spec_text);
    if (parsed.completed.pole_order() != 1)
        throw UsageError("residue requires a spec with pole order 1");
    real r = residue_at_one(parsed.completed);
    std::ostringstream os;
    if (format == "csv")
        os << "key,value\nresidue," << fmt(r) << "\n";
    else if (format == "structured")
        os << "type: residue\nspec: " << spec_text << "\nresidue: " << fmt(r) << "\n";
    else
        os << "residue of " << spec_text << " at s=1: " << fmt(r) << "\n";
    emit(out_path, os.str());
    return 0;
}

int run_gamma(const std::string& spec_text, const std::string& format,
              const std::string& out_path) {
    auto parsed = parse_spec(spec_text);
    auto inf = parsed.completed.total_infinity();
    std::ostringstream os;
    if (format == "csv") {
        os << "index,shift_re,shift_im\n";
        for (size_t i = 0; i < inf.shifts.size(); ++i)
            os << i << "," << fmt(inf.shifts[i].real()) << ","
               << fmt(inf.shifts[i].imag()) << "\n";
    } else {
        if (format == "structured") os << "type: gamma\nspec: " << spec_text << "\n";
        os << "degree: " << inf.degree() << "\n";
        os << "lambda: " << fmt(inf.lambda()) << "\n";
        for (size_t i = 0; i < inf.shifts.size(); ++i)
            os << "shift." << i << ": " << fmt(inf.shifts[i].real()) << " "
               << fmt(inf.shifts[i].imag()) << "\n";
    }
    emit(out_path, os.str());
    return 0;
}

int run_conductor(const std::string& spec_text, const std::string& format,
                  const std::string& out_path) {
    auto parsed = parse_spec(spec_text);
    real m = parsed.completed.thickened_conductor_value();
    std::ostringstream os;
    if (format == "csv") {
        os << "key,value\n";
        os << "conductor," << parsed.completed.conductor() << "\n";
        os << "lambda," << fmt(parsed.completed.total_infinity().lambda()) << "\n";
        os << "thickened," << fmt(m) << "\n";
        os << "log_thickened," << fmt(log(m)) << "\n";
    } else {
        if (format == "structured")
            os << "type: conductor\nspec: " << spec_text << "\n";
        os << "conductor: " << parsed.completed.conductor() << "\n";
        os << "lambda: " << fmt(parsed.completed.total_infinity().lambda()) << "\n";
        os << "thickened: " << fmt(m) << "\n";
        os << "log_thickened: " << fmt(log(m)) << "\n";
    }
    emit(out_path, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact L-series identity verification and real-axis analytic reports.\n"
        "Spec grammar: expr := term {'*' term}; term := zeta | chi(D) |\n"
        "sym<j>(delta) (j even) | sym2(delta)xsym2(delta) | pixpi(delta)."};
    app.require_subcommand(1);

    std::string identity, form = "delta", spec_text, interval = "0.5:0.999";
    std::string c_value, format = "text", out_path;
    long long pmax = 200, xmax = 100;
    int grid = 100;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "structured"}));
        sub->add_option("--out", out_path);
    };

    auto* verify = app.add_subcommand("verify", "run identity suites from the registry");
    verify->add_option("--identity", identity, "registry tag; omit to run all");
    verify->add_option("--form", form)->check(CLI::IsMember({"delta"}));
    verify->add_option("--pmax", pmax);
    add_common(verify);

    auto* coeffs = app.add_subcommand("coeffs", "expand Dirichlet coefficients");
    coeffs->add_option("--spec", spec_text)->required();
    coeffs->add_option("--xmax", xmax)->check(CLI::PositiveNumber);
    add_common(coeffs);

    auto* scan = app.add_subcommand("scan", "scan for real zeros of the completed function");
    scan->add_option("--spec", spec_text)->required();
    scan->add_option("--interval", interval, "a:b inside (0,1]");
    scan->add_option("--grid", grid)->check(CLI::PositiveNumber);
    scan->add_option("--c", c_value);
    add_common(scan);

    auto* residue = app.add_subcommand("residue", "residue of the finite part at s=1");
    residue->add_option("--spec", spec_text)->required();
    add_common(residue);

    auto* gamma = app.add_subcommand("gamma", "gamma-factor shifts of a spec");
    gamma->add_option("--spec", spec_text)->required();
    add_common(gamma);

    auto* conductor = app.add_subcommand("conductor", "conductor and thickened conductor");
    conductor->add_option("--spec", spec_text)->required();
    add_common(conductor);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(identity, format, out_path);
        if (coeffs->parsed()) return run_coeffs(spec_text, xmax, format, out_path);
        if (scan->parsed()) return run_scan(spec_text, interval, grid, c_value, format, out_path);
        if (residue->parsed()) return run_residue(spec_text, format, out_path);
        if (gamma->parsed()) return run_gamma(spec_text, format, out_path);
        if (conductor->parsed()) return run_conductor(spec_text, format, out_path);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const AccuracyUnreachable& e) {
        std::cerr << "accuracy failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
