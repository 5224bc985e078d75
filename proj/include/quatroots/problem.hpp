#pragma once

// Problem files and result serialization.
//
// JSON input:
//   {"name": "...", "coefficients": [[a0,a1,a2,a3], ...],   constant term first
//    "expected": {"real": [...], "isolated": [[...]], "spherical": [{"re":..,"modulus":..}]}}
// Text input: one coefficient per row, rows separated by ';' or newlines,
// '#' starts a comment. "1 0 0 0; 0 0 0 1" is k x + 1.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "quatroots/solver.hpp"
#include "quatroots/verify.hpp"

namespace quatroots {

struct ProblemFile {
    std::string name;
    SimplePolynomial polynomial;
    std::optional<ZeroSet> expected;
};

/// Dispatches on the first non-blank character: '{' means JSON.
ProblemFile parse_problem(std::string_view text);
ProblemFile parse_problem_json(std::string_view text);
ProblemFile parse_problem_text(std::string_view text);

nlohmann::json to_json(const Quaternion& q);
nlohmann::json to_json(const ZeroSet& zs);
nlohmann::json to_json(const VerificationReport& rep);
nlohmann::json to_json(const AgreementDiff& diff);

/// Inverse of to_json(ZeroSet). Throws ParseError on malformed input.
ZeroSet zero_set_from_json(const nlohmann::json& j);

void write_text(std::ostream& os, const ZeroSet& zs);
void write_text(std::ostream& os, const VerificationReport& rep);
void write_text(std::ostream& os, const AgreementDiff& diff);

}  // namespace quatroots
