#pragma once

#include <string>
#include <vector>

#include "liedegen/catalog.hpp"

namespace liedegen {

/// Algebra files (*.alg.json):
///   {"name", "dim", "parameters": [...],
///    "brackets": [{"left": i, "right": j, "rhs": [{"k": k, "c": "expr"}]}]}
/// with 1-based indices, left < right enforced, coefficients in the
/// expression grammar. Saves are canonical: fixed key order, brackets
/// sorted by (left, right), coefficients in canonical form.
LieAlgebra load_algebra(const std::string& path);
void save_algebra(const LieAlgebra& mu, const std::string& path);
LieAlgebra algebra_from_json_string(const std::string& text);
std::string algebra_to_json_string(const LieAlgebra& mu);

/// Matrix files (*.map.json): {"rows", "cols", "convention": "column-image",
/// "parameters": [...], "entries": [[expr, ...], ...]}. Column j is the
/// image of basis vector e_j.
LinearMap load_matrix(const std::string& path);
void save_matrix(const LinearMap& m, const std::string& path);
LinearMap matrix_from_json_string(const std::string& text);
std::string matrix_to_json_string(const LinearMap& m);

/// Curve files: the algebra schema plus "variable": "t"; entries must be
/// polynomial of degree <= 1 in t (base + t * cocycle).
DeformationCurve load_curve(const std::string& path);
void save_curve(const DeformationCurve& curve, const std::string& path);
DeformationCurve curve_from_json_string(const std::string& text);
std::string curve_to_json_string(const DeformationCurve& curve);

/// Collection files: {"algebras": [<algebra>, ...]}; used for the bundled
/// template of externally supplied structure constants.
std::vector<LieAlgebra> load_algebra_collection(const std::string& path);
void save_algebra_collection(const std::vector<LieAlgebra>& algebras, const std::string& path);

/// Machine-readable certificate report (*.cert.json): per-check status and
/// details plus the constructed objects.
std::string certificate_to_json_string(const DegenerationCertificate& cert,
                                       const std::string& label = "");
void save_certificate(const DegenerationCertificate& cert, const std::string& path,
                      const std::string& label = "");

}  // namespace liedegen
