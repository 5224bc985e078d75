#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <utility>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quatroots/baseline.hpp"
#include "quatroots/errors.hpp"
#include "quatroots/problem.hpp"
#include "quatroots/solver.hpp"
#include "quatroots/verify.hpp"

namespace quatroots::cli {

namespace {

constexpr double kAgreementTol = 1e-6;

struct Settings {
    std::string algorithm = "compare";
    std::string format = "text";
    Tolerances tol;
    std::size_t samples = 8;
    bool right_sided = false;
};

struct Outcome {
    std::string algorithm;
    ZeroSet zeros;
    VerificationReport report;
};

ZeroSet solve_with(const std::string& algorithm, const SimplePolynomial& p, const Tolerances& tol) {
    if (algorithm == "new") {
        return solve_alg1(p, tol);
    }
    if (algorithm == "new-prime") {
        return solve_alg1prime(p, tol);
    }
    return solve_jo(p, tol);
}

Outcome solve_one(const std::string& algorithm, const ProblemFile& pf, const Settings& s) {
    Outcome o;
    o.algorithm = algorithm;
    if (s.right_sided) {
        o.zeros = conj_zeros(solve_with(algorithm, conj_coeffs(pf.polynomial), s.tol));
    } else {
        o.zeros = solve_with(algorithm, pf.polynomial, s.tol);
    }
    AuditOptions ao;
    ao.samples_per_class = s.samples;
    ao.side = s.right_sided ? Side::right : Side::left;
    o.report = audit(pf.polynomial, o.zeros, ao);
    if (pf.expected) {
        o.report.agreement = compare(o.zeros, *pf.expected, kAgreementTol);
    }
    return o;
}

// Returns the exit status for this problem.
int process(const std::string& label, const std::string& text, const Settings& s, std::ostream& out,
            std::ostream& err) {
    ProblemFile pf;
    try {
        pf = parse_problem(text);
    } catch (const ParseError& e) {
        err << label;
        if (e.line() != 0) {
            err << ":" << e.line();
        }
        err << ": parse error";
        if (!e.field().empty()) {
            err << " in " << e.field();
        }
        err << ": " << e.what() << '\n';
        return 1;
    }
    const std::string name = pf.name.empty() ? label : pf.name;

    std::vector<std::string> algorithms;
    if (s.algorithm == "compare") {
        algorithms = {"new", "new-prime", "jo"};
    } else {
        algorithms = {s.algorithm};
    }
    std::vector<Outcome> outcomes;
    for (const auto& a : algorithms) {
        try {
            outcomes.push_back(solve_one(a, pf, s));
        } catch (const std::exception& e) {
            err << name << ": solver '" << a << "' failed: " << e.what() << '\n';
            return 1;
        }
    }

    std::vector<std::pair<std::string, AgreementDiff>> diffs;
    for (std::size_t i = 1; i < outcomes.size(); ++i) {
        diffs.emplace_back(outcomes[0].algorithm + " vs " + outcomes[i].algorithm,
                           compare(outcomes[0].zeros, outcomes[i].zeros, kAgreementTol));
    }

    bool ok = true;
    for (const auto& o : outcomes) {
        ok = ok && o.report.ok();
    }
    for (const auto& [k, d] : diffs) {
        ok = ok && d.empty();
    }

    if (s.format == "json") {
        nlohmann::json doc;
        doc["name"] = name;
        doc["degree"] = pf.polynomial.degree();
        doc["right_sided"] = s.right_sided;
        doc["results"] = nlohmann::json::object();
        for (const auto& o : outcomes) {
            doc["results"][o.algorithm] = {{"zeros", to_json(o.zeros)}, {"verification", to_json(o.report)}};
        }
        if (!diffs.empty()) {
            doc["agreement"] = nlohmann::json::object();
            for (const auto& [k, d] : diffs) {
                doc["agreement"][k] = to_json(d);
            }
        }
        doc["ok"] = ok;
        out << doc.dump() << '\n';
    } else {
        out << "== " << name << " (degree " << pf.polynomial.degree()
            << (s.right_sided ? ", right-sided" : "") << ")\n";
        for (const auto& o : outcomes) {
            out << "-- algorithm " << o.algorithm << '\n';
            write_text(out, o.zeros);
            write_text(out, o.report);
            if (o.report.agreement) {
                out << "expected ";
                write_text(out, *o.report.agreement);
            }
        }
        for (const auto& [k, d] : diffs) {
            out << "-- " << k << '\n';
            write_text(out, d);
        }
    }
    return ok ? 0 : 2;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zeros of quaternionic polynomials with left coefficients"};
    app.name("quatroots");
    Settings s;
    std::vector<std::string> files;
    app.add_option("--algorithm", s.algorithm, "new, new-prime, jo or compare (all three)")
        ->check(CLI::IsMember({"new", "new-prime", "jo", "compare"}))
        ->capture_default_str();
    app.add_option("--tol-real", s.tol.real, "|Im z| below which a root counts as real")->capture_default_str();
    app.add_option("--tol-zero", s.tol.zero, "relative vanishing threshold")->capture_default_str();
    app.add_option("--tol-gcd", s.tol.gcd, "relative remainder cutoff of the polynomial gcd")
        ->capture_default_str();
    app.add_option("--samples-per-class", s.samples, "points audited on each spherical class")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", s.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--right-sided", s.right_sided, "coefficients multiply the powers from the right");
    app.add_option("files", files, "problem files; '-' or none reads stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 1;
    }

    if (files.empty()) {
        files.push_back("-");
    }
    int status = 0;
    for (const auto& f : files) {
        std::string text;
        if (f == "-") {
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        } else {
            std::ifstream is(f);
            if (!is) {
                err << f << ": cannot open\n";
                status = 1;
                continue;
            }
            text.assign(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
        }
        const int st = process(f == "-" ? "<stdin>" : f, text, s, out, err);
        status = (st == 1 || status == 1) ? 1 : std::max(status, st);
    }
    return status;
}

}  // namespace quatroots::cli
