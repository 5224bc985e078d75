#include "quatroots/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "quatroots/errors.hpp"

namespace quatroots {

using nlohmann::json;

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

Quaternion quaternion_from(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 4) {
        throw ParseError("expected an array of 4 numbers", 0, field);
    }
    double a[4];
    for (std::size_t c = 0; c < 4; ++c) {
        if (!j[c].is_number()) {
            throw ParseError("component is not a number", 0, field + "[" + std::to_string(c) + "]");
        }
        a[c] = j[c].get<double>();
        if (!std::isfinite(a[c])) {
            throw ParseError("component is not finite", 0, field + "[" + std::to_string(c) + "]");
        }
    }
    return {a[0], a[1], a[2], a[3]};
}

SimplePolynomial checked_polynomial(std::vector<Quaternion> coeffs, std::size_t last_line) {
    if (coeffs.size() < 2) {
        throw ParseError("need at least 2 coefficients, got " + std::to_string(coeffs.size()), last_line,
                         "coefficients");
    }
    if (norm(coeffs.back()) == 0.0) {
        throw ParseError("leading coefficient is zero", last_line,
                         "coefficients[" + std::to_string(coeffs.size() - 1) + "]");
    }
    return SimplePolynomial(std::move(coeffs));
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x + 0.0;  // no "-0"
    return os.str();
}

std::string fmt(const Quaternion& q) {
    return "(" + fmt(q.a0) + ", " + fmt(q.a1) + ", " + fmt(q.a2) + ", " + fmt(q.a3) + ")";
}

std::string fmt(const ConjugacyClass& c) {
    return "re " + fmt(c.re()) + ", modulus " + fmt(c.modulus()) + ", rep " + fmt(c.representative().real()) +
           (c.representative().imag() < 0 ? " - " : " + ") + fmt(std::abs(c.representative().imag())) + "i";
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return parse_problem_json(text);
    }
    return parse_problem_text(text);
}

ProblemFile parse_problem_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    if (!doc.is_object()) {
        throw ParseError("top level must be an object", 1);
    }
    ProblemFile pf;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            throw ParseError("name must be a string", 0, "name");
        }
        pf.name = doc["name"].get<std::string>();
    }
    if (!doc.contains("coefficients")) {
        throw ParseError("missing coefficients", 0, "coefficients");
    }
    const json& cs = doc["coefficients"];
    if (!cs.is_array()) {
        throw ParseError("coefficients must be an array", 0, "coefficients");
    }
    std::vector<Quaternion> coeffs;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        coeffs.push_back(quaternion_from(cs[i], "coefficients[" + std::to_string(i) + "]"));
    }
    pf.polynomial = checked_polynomial(std::move(coeffs), 0);
    if (doc.contains("expected")) {
        pf.expected = zero_set_from_json(doc["expected"]);
    }
    return pf;
}

ProblemFile parse_problem_text(std::string_view text) {
    std::vector<Quaternion> coeffs;
    std::size_t line = 1;
    std::size_t last_line = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find_first_of(";\n", pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view row = text.substr(pos, end - pos);
        if (const auto hash = row.find('#'); hash != std::string_view::npos) {
            row = row.substr(0, hash);
        }
        std::vector<double> vals;
        std::size_t i = 0;
        while (i < row.size()) {
            if (std::isspace(static_cast<unsigned char>(row[i])) || row[i] == ',') {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < row.size() && !std::isspace(static_cast<unsigned char>(row[j])) && row[j] != ',') {
                ++j;
            }
            const std::string tok(row.substr(i, j - i));
            const std::string field =
                "coefficients[" + std::to_string(coeffs.size()) + "][" + std::to_string(vals.size()) + "]";
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
                throw ParseError("not a finite number: '" + tok + "'", line, field);
            }
            vals.push_back(v);
            i = j;
        }
        if (!vals.empty()) {
            if (vals.size() != 4) {
                throw ParseError("expected 4 components, got " + std::to_string(vals.size()), line,
                                 "coefficients[" + std::to_string(coeffs.size()) + "]");
            }
            coeffs.emplace_back(vals[0], vals[1], vals[2], vals[3]);
            last_line = line;
        }
        if (end < text.size() && text[end] == '\n') {
            ++line;
        }
        pos = end + 1;
    }
    ProblemFile pf;
    pf.polynomial = checked_polynomial(std::move(coeffs), last_line);
    return pf;
}

json to_json(const Quaternion& q) {
    return json::array({q.a0, q.a1, q.a2, q.a3});
}

json to_json(const ZeroSet& zs) {
    json j;
    j["real"] = zs.real_zeros;
    j["isolated"] = json::array();
    for (const auto& q : zs.isolated_zeros) {
        j["isolated"].push_back(to_json(q));
    }
    j["spherical"] = json::array();
    for (const auto& c : zs.spherical) {
        j["spherical"].push_back({{"re", c.re()},
                                  {"modulus", c.modulus()},
                                  {"representative", {c.representative().real(), c.representative().imag()}}});
    }
    return j;
}

json to_json(const VerificationReport& rep) {
    json j;
    j["max_residual"] = rep.max_residual;
    j["max_relative_residual"] = rep.max_relative_residual;
    j["residuals_ok"] = rep.residuals_ok;
    j["bounds_ok"] = rep.bounds_ok;
    j["entries"] = json::array();
    for (const auto& e : rep.entries) {
        j["entries"].push_back({{"zero", e.descriptor},
                                {"point", to_json(e.point)},
                                {"residual", e.residual},
                                {"relative", e.relative()}});
    }
    if (rep.agreement) {
        j["agreement"] = to_json(*rep.agreement);
    }
    return j;
}

json to_json(const AgreementDiff& diff) {
    auto quats = [](const std::vector<Quaternion>& v) {
        json a = json::array();
        for (const auto& q : v) {
            a.push_back(to_json(q));
        }
        return a;
    };
    auto classes = [](const std::vector<ConjugacyClass>& v) {
        json a = json::array();
        for (const auto& c : v) {
            a.push_back({{"re", c.re()}, {"modulus", c.modulus()}});
        }
        return a;
    };
    return {{"empty", diff.empty()},
            {"real_only_left", diff.real_only_left},
            {"real_only_right", diff.real_only_right},
            {"isolated_only_left", quats(diff.isolated_only_left)},
            {"isolated_only_right", quats(diff.isolated_only_right)},
            {"spherical_only_left", classes(diff.spherical_only_left)},
            {"spherical_only_right", classes(diff.spherical_only_right)}};
}

ZeroSet zero_set_from_json(const json& j) {
    if (!j.is_object()) {
        throw ParseError("zero set must be an object", 0, "expected");
    }
    ZeroSet zs;
    if (j.contains("real")) {
        const json& r = j["real"];
        if (!r.is_array()) {
            throw ParseError("must be an array", 0, "real");
        }
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (!r[i].is_number()) {
                throw ParseError("not a number", 0, "real[" + std::to_string(i) + "]");
            }
            zs.real_zeros.push_back(r[i].get<double>());
        }
    }
    if (j.contains("isolated")) {
        const json& r = j["isolated"];
        if (!r.is_array()) {
            throw ParseError("must be an array", 0, "isolated");
        }
        for (std::size_t i = 0; i < r.size(); ++i) {
            zs.isolated_zeros.push_back(quaternion_from(r[i], "isolated[" + std::to_string(i) + "]"));
        }
    }
    if (j.contains("spherical")) {
        const json& r = j["spherical"];
        if (!r.is_array()) {
            throw ParseError("must be an array", 0, "spherical");
        }
        for (std::size_t i = 0; i < r.size(); ++i) {
            const std::string field = "spherical[" + std::to_string(i) + "]";
            const json& c = r[i];
            if (!c.is_object() || !c.contains("re") || !c.contains("modulus") || !c["re"].is_number() ||
                !c["modulus"].is_number()) {
                throw ParseError("expected {\"re\": number, \"modulus\": number}", 0, field);
            }
            const double re = c["re"].get<double>();
            const double mod = c["modulus"].get<double>();
            const double im2 = mod * mod - re * re;
            if (!(im2 > 0.0)) {
                throw ParseError("modulus must exceed |re|", 0, field);
            }
            zs.spherical.emplace_back(Complex(re, std::sqrt(im2)));
        }
    }
    return zs;
}

void write_text(std::ostream& os, const ZeroSet& zs) {
    os << "real zeros (" << zs.real_zeros.size() << ")\n";
    for (double x : zs.real_zeros) {
        os << "  " << fmt(x) << '\n';
    }
    os << "isolated zeros (" << zs.isolated_zeros.size() << ")\n";
    for (const auto& q : zs.isolated_zeros) {
        os << "  " << fmt(q) << '\n';
    }
    os << "spherical classes (" << zs.spherical.size() << ")\n";
    for (const auto& c : zs.spherical) {
        os << "  " << fmt(c) << '\n';
    }
}

void write_text(std::ostream& os, const VerificationReport& rep) {
    os << "verification: " << (rep.ok() ? "ok" : "FAILED") << '\n';
    os << "  max residual " << fmt(rep.max_residual) << ", max relative " << fmt(rep.max_relative_residual)
       << '\n';
    os << "  residuals " << (rep.residuals_ok ? "ok" : "too large") << ", count bounds "
       << (rep.bounds_ok ? "ok" : "violated") << '\n';
    for (const auto& e : rep.entries) {
        if (e.relative() > 1e-8) {
            os << "  " << e.descriptor << " at " << fmt(e.point) << ": residual " << fmt(e.residual) << '\n';
        }
    }
}

void write_text(std::ostream& os, const AgreementDiff& diff) {
    if (diff.empty()) {
        os << "diff: empty\n";
        return;
    }
    os << "diff:\n";
    for (double x : diff.real_only_left) os << "  < real " << fmt(x) << '\n';
    for (double x : diff.real_only_right) os << "  > real " << fmt(x) << '\n';
    for (const auto& q : diff.isolated_only_left) os << "  < isolated " << fmt(q) << '\n';
    for (const auto& q : diff.isolated_only_right) os << "  > isolated " << fmt(q) << '\n';
    for (const auto& c : diff.spherical_only_left) os << "  < class " << fmt(c) << '\n';
    for (const auto& c : diff.spherical_only_right) os << "  > class " << fmt(c) << '\n';
}

}  // namespace quatroots
