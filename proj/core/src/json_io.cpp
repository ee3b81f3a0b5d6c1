#include "liedegen/json_io.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "liedegen/error.hpp"

namespace liedegen {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path);
    try {
        return ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw SchemaError("invalid JSON in " + path + ": " + e.what());
    }
}

ordered_json parse_text(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

void write_file(const ordered_json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

std::vector<std::string> read_parameters(const ordered_json& j) {
    std::vector<std::string> params;
    if (j.contains("parameters")) {
        if (!j["parameters"].is_array()) throw SchemaError("'parameters' must be an array");
        for (const auto& p : j["parameters"]) {
            if (!p.is_string()) throw SchemaError("parameter names must be strings");
            params.push_back(p.get<std::string>());
        }
    }
    return params;
}

LieAlgebra algebra_from_json_impl(const ordered_json& j) {
    for (const char* key : {"name", "dim", "brackets"})
        if (!j.contains(key)) throw SchemaError(std::string("algebra lacks key '") + key + "'");
    if (!j["dim"].is_number_unsigned()) throw SchemaError("'dim' must be a positive integer");
    const std::size_t dim = j["dim"].get<std::size_t>();
    if (dim == 0) throw SchemaError("'dim' must be positive");
    const std::string name = j["name"].get<std::string>();
    auto syms = Symbols::make(read_parameters(j));

    BracketTable table(dim, syms);
    if (!j["brackets"].is_array()) throw SchemaError("'brackets' must be an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& b : j["brackets"]) {
        for (const char* key : {"left", "right", "rhs"})
            if (!b.contains(key))
                throw SchemaError(std::string("bracket entry lacks key '") + key + "'");
        const std::size_t left = b["left"].get<std::size_t>();
        const std::size_t right = b["right"].get<std::size_t>();
        if (left < 1 || left > dim || right < 1 || right > dim)
            throw SchemaError("bracket index out of range: (" + std::to_string(left) + ", " +
                              std::to_string(right) + ")");
        if (left >= right)
            throw SchemaError("brackets must satisfy left < right; offending pair (" +
                              std::to_string(left) + ", " + std::to_string(right) + ")");
        if (!seen.insert({left, right}).second)
            throw SchemaError("duplicate bracket (" + std::to_string(left) + ", " +
                              std::to_string(right) + ")");
        for (const auto& term : b["rhs"]) {
            for (const char* key : {"k", "c"})
                if (!term.contains(key))
                    throw SchemaError(std::string("rhs term lacks key '") + key + "'");
            const std::size_t k = term["k"].get<std::size_t>();
            if (k < 1 || k > dim)
                throw SchemaError("component index out of range: " + std::to_string(k));
            table.set(left - 1, right - 1, k - 1,
                      Scalar::parse(term["c"].get<std::string>(), syms));
        }
    }
    return LieAlgebra(name, std::move(table));
}

// Translates the JSON library's type errors into schema errors so malformed
// values surface the same way as malformed structure.
template <typename Fn>
auto guard_schema(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw SchemaError(std::string("malformed value: ") + e.what());
    }
}

LieAlgebra algebra_from_json(const ordered_json& j) {
    return guard_schema([&] { return algebra_from_json_impl(j); });
}

ordered_json algebra_to_json(const LieAlgebra& mu) {
    ordered_json j;
    j["name"] = mu.name();
    j["dim"] = mu.dim();
    j["parameters"] = mu.symbols()->parameters();
    ordered_json brackets = ordered_json::array();
    for (const auto& [pair, comp] : mu.table().entries()) {
        ordered_json b;
        b["left"] = pair.first + 1;
        b["right"] = pair.second + 1;
        ordered_json rhs = ordered_json::array();
        for (const auto& [k, c] : comp) rhs.push_back({{"k", k + 1}, {"c", c.to_string()}});
        b["rhs"] = std::move(rhs);
        brackets.push_back(std::move(b));
    }
    j["brackets"] = std::move(brackets);
    return j;
}

LinearMap matrix_from_json_impl(const ordered_json& j) {
    for (const char* key : {"rows", "cols", "entries"})
        if (!j.contains(key)) throw SchemaError(std::string("matrix lacks key '") + key + "'");
    if (j.contains("convention") && j["convention"].get<std::string>() != "column-image")
        throw SchemaError("unsupported matrix convention '" +
                          j["convention"].get<std::string>() + "'");
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    auto syms = Symbols::make(read_parameters(j));
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != rows)
        throw SchemaError("'entries' must hold exactly 'rows' rows");
    LinearMap m(rows, cols, syms);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw SchemaError("row " + std::to_string(i + 1) + " must hold 'cols' entries");
        for (std::size_t c = 0; c < cols; ++c)
            m.set(i, c, Scalar::parse(row[c].get<std::string>(), syms));
    }
    return m;
}

LinearMap matrix_from_json(const ordered_json& j) {
    return guard_schema([&] { return matrix_from_json_impl(j); });
}

ordered_json matrix_to_json(const LinearMap& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["convention"] = "column-image";
    j["parameters"] = m.symbols()->parameters();
    ordered_json entries = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).to_string());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

DeformationCurve curve_from_json(const ordered_json& j) {
    if (!j.contains("variable") || j["variable"].get<std::string>() != "t")
        throw SchemaError("curve files must carry \"variable\": \"t\"");
    LieAlgebra realized = algebra_from_json(j);

    // Split each entry into base + t * cocycle; anything else is not a
    // linear deformation table.
    BracketTable base(realized.dim(), realized.symbols());
    BracketTable cocycle(realized.dim(), realized.symbols());
    for (const auto& [pair, comp] : realized.table().entries()) {
        for (const auto& [k, c] : comp) {
            if (c.denominator().degree_in(Symbols::kDeformationVar) > 0 ||
                c.numerator().degree_in(Symbols::kDeformationVar) > 1)
                throw SchemaError("curve entry is not linear in t: " + c.to_string());
            Poly p0 = c.numerator().coefficient_of(Symbols::kDeformationVar, 0);
            Poly p1 = c.numerator().coefficient_of(Symbols::kDeformationVar, 1);
            if (!p0.is_zero())
                base.set(pair.first, pair.second, k, Scalar(std::move(p0), c.denominator()));
            if (!p1.is_zero())
                cocycle.set(pair.first, pair.second, k, Scalar(std::move(p1), c.denominator()));
        }
    }
    return DeformationCurve(LieAlgebra(realized.name(), std::move(base)),
                            BilinearForm(std::move(cocycle)));
}

ordered_json curve_to_json(const DeformationCurve& curve) {
    ordered_json j = algebra_to_json(curve.realized());
    // Rebuild with the marker after "parameters" for a stable key order.
    ordered_json out;
    out["name"] = j["name"];
    out["dim"] = j["dim"];
    out["parameters"] = j["parameters"];
    out["variable"] = "t";
    out["brackets"] = j["brackets"];
    return out;
}

ordered_json check_to_json(const CertificateCheck& c) {
    return ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

ordered_json certificate_to_json(const DegenerationCertificate& cert, const std::string& label) {
    ordered_json j;
    if (!label.empty()) j["label"] = label;
    j["valid"] = cert.valid;
    j["witness_supplied"] = cert.witness_supplied;
    j["extension_exists"] = cert.extension_exists;
    ordered_json checks = ordered_json::array();
    for (const auto& c : cert.checks) checks.push_back(check_to_json(c));
    j["checks"] = std::move(checks);
    ordered_json objects;
    objects["base"] = algebra_to_json(cert.base);
    if (cert.curve) objects["curve"] = curve_to_json(*cert.curve);
    if (cert.mu1) objects["mu1"] = algebra_to_json(*cert.mu1);
    if (cert.witness) objects["witness"] = matrix_to_json(cert.witness->matrix());
    if (cert.auxiliary_witness)
        objects["auxiliary_witness"] = matrix_to_json(cert.auxiliary_witness->matrix());
    if (cert.extended_derivation)
        objects["extended_derivation"] = matrix_to_json(*cert.extended_derivation);
    j["objects"] = std::move(objects);
    return j;
}

}  // namespace

LieAlgebra load_algebra(const std::string& path) { return algebra_from_json(parse_file(path)); }

void save_algebra(const LieAlgebra& mu, const std::string& path) {
    write_file(algebra_to_json(mu), path);
}

LieAlgebra algebra_from_json_string(const std::string& text) {
    return algebra_from_json(parse_text(text));
}

std::string algebra_to_json_string(const LieAlgebra& mu) { return algebra_to_json(mu).dump(2); }

LinearMap load_matrix(const std::string& path) { return matrix_from_json(parse_file(path)); }

void save_matrix(const LinearMap& m, const std::string& path) {
    write_file(matrix_to_json(m), path);
}

LinearMap matrix_from_json_string(const std::string& text) {
    return matrix_from_json(parse_text(text));
}

std::string matrix_to_json_string(const LinearMap& m) { return matrix_to_json(m).dump(2); }

DeformationCurve load_curve(const std::string& path) { return curve_from_json(parse_file(path)); }

void save_curve(const DeformationCurve& curve, const std::string& path) {
    write_file(curve_to_json(curve), path);
}

DeformationCurve curve_from_json_string(const std::string& text) {
    return curve_from_json(parse_text(text));
}

std::string curve_to_json_string(const DeformationCurve& curve) {
    return curve_to_json(curve).dump(2);
}

std::vector<LieAlgebra> load_algebra_collection(const std::string& path) {
    ordered_json j = parse_file(path);
    if (!j.contains("algebras") || !j["algebras"].is_array())
        throw SchemaError("collection files need an 'algebras' array");
    std::vector<LieAlgebra> out;
    for (const auto& a : j["algebras"]) out.push_back(algebra_from_json(a));
    return out;
}

void save_algebra_collection(const std::vector<LieAlgebra>& algebras, const std::string& path) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const auto& a : algebras) arr.push_back(algebra_to_json(a));
    j["algebras"] = std::move(arr);
    write_file(j, path);
}

std::string certificate_to_json_string(const DegenerationCertificate& cert,
                                       const std::string& label) {
    return certificate_to_json(cert, label).dump(2);
}

void save_certificate(const DegenerationCertificate& cert, const std::string& path,
                      const std::string& label) {
    write_file(certificate_to_json(cert, label), path);
}

}  // namespace liedegen
