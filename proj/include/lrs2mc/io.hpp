#pragma once

#include <nlohmann/json_fwd.hpp>
#include <stdexcept>
#include <string>
#include <utility>

#include "lrs2mc/analysis.hpp"
#include "lrs2mc/lrs.hpp"
#include "lrs2mc/matrix.hpp"
#include "lrs2mc/reduction.hpp"

namespace lrs2mc {

// Malformed user input: files that fail to parse or violate the documented
// schemas. The CLI maps this (and parse exceptions) to exit status 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

std::string query_kind_to_string(QueryKind q);
QueryKind query_kind_from_string(const std::string& s);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const std::string& where);

// {"order": k, "coefficients": ["a_0", ...], "initial": ["u_0", ...]}
nlohmann::json lrs_to_json(const Lrs& l);
Lrs lrs_from_json(const nlohmann::json& j);

// {"dimension", "matrix", "source", "target", "threshold", "query"} with
// 1-based state indices and a column-stochastic nested-array matrix.
nlohmann::json instance_to_json(const MarkovInstance& inst);
MarkovInstance instance_from_json(const nlohmann::json& j);

// Mirrors the certificate fields and carries the source recurrence under
// "lrs" so that verification needs no third file.
nlohmann::json certificate_to_json(const ReductionCertificate& cert, const Lrs& source);
std::pair<ReductionCertificate, Lrs> certificate_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

nlohmann::json read_json_file(const std::string& path);
// Serializes with sorted keys, two-space indent, trailing newline; the same
// value always produces the same bytes.
void write_json_file(const std::string& path, const nlohmann::json& j);

Lrs read_lrs_file(const std::string& path);

}  // namespace lrs2mc
