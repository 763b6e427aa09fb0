#include "lrs2mc/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace lrs2mc {

using nlohmann::json;

std::string query_kind_to_string(QueryKind q) {
    switch (q) {
        case QueryKind::Equal: return "equal";
        case QueryKind::Less: return "less";
        case QueryKind::InfinitelyOftenLess: return "infinitely-often-less";
    }
    throw std::logic_error("query_kind_to_string: unknown query kind");
}

QueryKind query_kind_from_string(const std::string& s) {
    if (s == "equal") return QueryKind::Equal;
    if (s == "less") return QueryKind::Less;
    if (s == "infinitely-often-less") return QueryKind::InfinitelyOftenLess;
    throw input_error("unknown query kind \"" + s +
                      "\" (expected equal, less, or infinitely-often-less)");
}

json rational_to_json(const Rational& r) {
    return r.to_string();
}

Rational rational_from_json(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
        if (j.is_string()) return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw input_error(where + ": " + e.what());
    }
    throw input_error(where + ": expected a rational as \"p/q\" string or integer");
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw input_error(where + ": expected a non-empty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw input_error(where + ": expected non-empty array rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw input_error(where + ": ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = rational_from_json(j[r][c], where + "[" + std::to_string(r) + "][" +
                                                          std::to_string(c) + "]");
    }
    return m;
}

namespace {

std::vector<Rational> rational_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw input_error(where + ": expected an array of rationals");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

json rational_array_to_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const Rational& r : v) out.push_back(rational_to_json(r));
    return out;
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw input_error(where + ": missing key \"" + key + "\"");
    return j.at(key);
}

bool is_positive_integer(const json& j) {
    return (j.is_number_unsigned() && j.get<unsigned long long>() > 0) ||
           (j.is_number_integer() && j.get<long long>() > 0);
}

}  // namespace

json lrs_to_json(const Lrs& l) {
    return json{{"order", l.order()},
                {"coefficients", rational_array_to_json(l.coefficients())},
                {"initial", rational_array_to_json(l.initial_terms())}};
}

Lrs lrs_from_json(const json& j) {
    const json& jorder = field(j, "order", "lrs");
    if (!is_positive_integer(jorder))
        throw input_error("lrs.order: expected a positive integer");
    const std::size_t order = jorder.get<std::size_t>();
    std::vector<Rational> coeffs = rational_array(field(j, "coefficients", "lrs"), "lrs.coefficients");
    std::vector<Rational> initial = rational_array(field(j, "initial", "lrs"), "lrs.initial");
    if (coeffs.size() != order)
        throw input_error("lrs.coefficients: expected exactly " + std::to_string(order) +
                          " entries a_0..a_" + std::to_string(order - 1));
    if (initial.size() != order)
        throw input_error("lrs.initial: expected exactly " + std::to_string(order) +
                          " entries u_0..u_" + std::to_string(order - 1));
    try {
        return Lrs(std::move(coeffs), std::move(initial));
    } catch (const std::invalid_argument& e) {
        throw input_error(std::string("lrs: ") + e.what());
    }
}

json instance_to_json(const MarkovInstance& inst) {
    return json{{"dimension", inst.matrix.rows()},
                {"matrix", matrix_to_json(inst.matrix)},
                {"source", inst.source + 1},
                {"target", inst.target + 1},
                {"threshold", rational_to_json(inst.threshold)},
                {"query", query_kind_to_string(inst.query)}};
}

MarkovInstance instance_from_json(const json& j) {
    MarkovInstance inst;
    inst.matrix = matrix_from_json(field(j, "matrix", "instance"), "instance.matrix");
    const json& jdim = field(j, "dimension", "instance");
    if (!is_positive_integer(jdim) || jdim.get<std::size_t>() != inst.matrix.rows() ||
        inst.matrix.rows() != inst.matrix.cols())
        throw input_error("instance.dimension: must match a square matrix");
    const auto index = [&](const char* key) {
        const json& v = field(j, key, "instance");
        if (!is_positive_integer(v) || v.get<std::size_t>() > inst.matrix.rows())
            throw input_error(std::string("instance.") + key + ": expected a 1-based state index");
        return v.get<std::size_t>() - 1;
    };
    inst.source = index("source");
    inst.target = index("target");
    inst.threshold = rational_from_json(field(j, "threshold", "instance"), "instance.threshold");
    inst.query = query_kind_from_string(field(j, "query", "instance").get<std::string>());
    return inst;
}

json certificate_to_json(const ReductionCertificate& cert, const Lrs& source) {
    return json{{"lrs", lrs_to_json(source)},
                {"stationary", rational_array_to_json(cert.stationary)},
                {"S", matrix_to_json(cert.S)},
                {"anchor", rational_array_to_json(cert.anchor)},
                {"eta", rational_to_json(cert.eta)},
                {"F", matrix_to_json(cert.F)},
                {"B", matrix_to_json(cert.B)},
                {"C", matrix_to_json(cert.C)},
                {"gamma", rational_to_json(cert.gamma)},
                {"sigma", rational_to_json(cert.sigma)},
                {"rho", rational_to_json(cert.rho)},
                {"D", matrix_to_json(cert.D)}};
}

std::pair<ReductionCertificate, Lrs> certificate_from_json(const json& j) {
    ReductionCertificate cert;
    Lrs source = lrs_from_json(field(j, "lrs", "certificate"));
    cert.stationary = rational_array(field(j, "stationary", "certificate"), "certificate.stationary");
    cert.S = matrix_from_json(field(j, "S", "certificate"), "certificate.S");
    cert.anchor = rational_array(field(j, "anchor", "certificate"), "certificate.anchor");
    cert.eta = rational_from_json(field(j, "eta", "certificate"), "certificate.eta");
    cert.F = matrix_from_json(field(j, "F", "certificate"), "certificate.F");
    cert.B = matrix_from_json(field(j, "B", "certificate"), "certificate.B");
    cert.C = matrix_from_json(field(j, "C", "certificate"), "certificate.C");
    cert.gamma = rational_from_json(field(j, "gamma", "certificate"), "certificate.gamma");
    cert.sigma = rational_from_json(field(j, "sigma", "certificate"), "certificate.sigma");
    cert.rho = rational_from_json(field(j, "rho", "certificate"), "certificate.rho");
    cert.D = matrix_from_json(field(j, "D", "certificate"), "certificate.D");
    return {std::move(cert), std::move(source)};
}

json report_to_json(const VerificationReport& report) {
    json checks = json::array();
    for (const CheckResult& c : report.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"horizon", report.horizon}, {"overall", report.overall ? "pass" : "fail"},
                {"checks", std::move(checks)}};
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream os;
    for (const CheckResult& c : report.checks)
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    os << "overall: " << (report.overall ? "PASS" : "FAIL") << " (" << report.checks.size()
       << " checks, horizon " << report.horizon << ")\n";
    return os.str();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open \"" + path + "\" for reading");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error("\"" + path + "\": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open \"" + path + "\" for writing");
    out << j.dump(2) << "\n";
    if (!out) throw input_error("failed writing \"" + path + "\"");
}

Lrs read_lrs_file(const std::string& path) {
    return lrs_from_json(read_json_file(path));
}

}  // namespace lrs2mc
