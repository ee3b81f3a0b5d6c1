// liedegen - exact verification of structure constants, linear deformations
// and one-parameter degeneration witnesses for nilpotent Lie algebras.
//
// Exit codes: 0 all checks pass; 1 a mathematical check failed (nonzero
// residual, pole, singular family); 2 invalid input or schema; 3 a case the
// exact machinery does not support (e.g. irrational eigenvalues).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <liedegen/catalog.hpp>
#include <liedegen/error.hpp>
#include <liedegen/json_io.hpp>

using namespace liedegen;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUnsupported = 3;

struct Output {
    bool quiet = false;
    std::string json_path;

    void line(const std::string& s) const {
        if (!quiet) std::cout << s << "\n";
    }

    void write_json(const ordered_json& j) const {
        if (json_path.empty()) return;
        std::ofstream out(json_path);
        if (!out) throw SchemaError("cannot write report: " + json_path);
        out << j.dump(2) << "\n";
    }
};

std::vector<std::size_t> parse_index_list(const std::string& text, std::size_t dim) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            const long v = std::stol(item);
            if (v < 1 || static_cast<std::size_t>(v) > dim)
                throw SchemaError("ideal index out of range: " + item);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::invalid_argument&) {
            throw SchemaError("bad ideal index: '" + item + "'");
        }
    }
    if (out.empty()) throw SchemaError("empty ideal index list");
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1])
            throw SchemaError("ideal indices must be strictly increasing");
    return out;
}

std::size_t default_complement(const std::vector<std::size_t>& ideal, std::size_t dim) {
    for (std::size_t i = 1; i <= dim; ++i)
        if (std::find(ideal.begin(), ideal.end(), i) == ideal.end()) return i;
    throw SchemaError("ideal indices cover the whole space");
}

ordered_json residual_json(std::size_t i, std::size_t j, const Vector& v) {
    return ordered_json{{"left", i + 1}, {"right", j + 1}, {"value", vector_to_string(v)}};
}

struct DeformationInputs {
    LieAlgebra mu;
    Vector X;
    Subspace h;
    LinearMap D;
};

DeformationInputs load_deformation_inputs(const std::string& alg_path, const std::string& ideal,
                                          const std::string& derivation_path,
                                          std::size_t complement) {
    LieAlgebra mu = load_algebra(alg_path);
    auto indices = parse_index_list(ideal, mu.dim());
    if (indices.size() + 1 != mu.dim())
        throw SchemaError("the ideal must have codimension 1");
    std::vector<std::size_t> zero_based;
    for (auto i : indices) zero_based.push_back(i - 1);
    Subspace h = Subspace::coordinate(mu.dim(), mu.symbols(), zero_based);
    LinearMap D = load_matrix(derivation_path);
    if (D.rows() != h.dim() || D.cols() != h.dim())
        throw SchemaError("derivation must be square of the ideal's dimension");
    LinearMap D_lifted(h.dim(), h.dim(), mu.symbols());
    for (std::size_t i = 0; i < D.rows(); ++i)
        for (std::size_t j = 0; j < D.cols(); ++j)
            D_lifted.set(i, j, D.at(i, j).lifted(mu.symbols()));
    const std::size_t x_index = complement == 0 ? default_complement(indices, mu.dim())
                                                : complement;
    if (x_index < 1 || x_index > mu.dim() ||
        std::find(indices.begin(), indices.end(), x_index) != indices.end())
        throw SchemaError("complement index must name a basis vector outside the ideal");
    Vector X = unit_vector(mu.dim(), x_index - 1, mu.symbols());
    return {std::move(mu), std::move(X), std::move(h), std::move(D_lifted)};
}

WitnessFamily load_witness(const std::string& path, const SymbolsPtr& target) {
    LinearMap g = load_matrix(path);
    LinearMap lifted(g.rows(), g.cols(), target);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) lifted.set(i, j, g.at(i, j).lifted(target));
    return WitnessFamily(std::move(lifted));
}

int cmd_jacobi(const Output& out, const std::string& alg_path) {
    LieAlgebra mu = load_algebra(alg_path);
    const std::size_t n = mu.dim();
    const std::size_t triples = n * (n - 1) * (n - 2) / 6;
    auto residuals = jacobi_residuals(mu);
    out.line(std::string("Lie algebra: ") + (residuals.empty() ? "yes" : "NO") + " (" +
             std::to_string(residuals.size()) + " residuals over " + std::to_string(triples) +
             " triples)");
    ordered_json rj = ordered_json::array();
    for (const auto& r : residuals) {
        out.line("  J(e" + std::to_string(r.i + 1) + ",e" + std::to_string(r.j + 1) + ",e" +
                 std::to_string(r.k + 1) + ") = " + vector_to_string(r.residual));
        rj.push_back(ordered_json{{"i", r.i + 1},
                                  {"j", r.j + 1},
                                  {"k", r.k + 1},
                                  {"value", vector_to_string(r.residual)}});
    }
    out.write_json(ordered_json{{"command", "jacobi"},
                                {"algebra", mu.name()},
                                {"is_lie_algebra", residuals.empty()},
                                {"triples", triples},
                                {"residuals", rj}});
    return residuals.empty() ? kExitOk : kExitMathFail;
}

int cmd_series(const Output& out, const std::string& alg_path, const std::string& kind) {
    LieAlgebra mu = load_algebra(alg_path);
    SeriesKind sk;
    if (kind == "lower-central") {
        sk = SeriesKind::LowerCentral;
    } else if (kind == "derived") {
        sk = SeriesKind::Derived;
    } else {
        throw SchemaError("--kind must be lower-central or derived");
    }
    auto chain = series(mu, sk);
    std::string dims;
    ordered_json steps = ordered_json::array();
    for (const auto& s : chain) {
        dims += (dims.empty() ? "" : " > ") + std::to_string(s.dim());
        steps.push_back(ordered_json{{"dim", s.dim()}, {"basis", s.to_string()}});
    }
    out.line(kind + " series dimensions: " + dims);
    out.line(std::string("terminates at zero: ") + (chain.back().dim() == 0 ? "yes" : "no"));
    out.write_json(ordered_json{{"command", "series"},
                                {"algebra", mu.name()},
                                {"kind", kind},
                                {"dimensions", [&] {
                                     ordered_json d = ordered_json::array();
                                     for (const auto& s : chain) d.push_back(s.dim());
                                     return d;
                                 }()},
                                {"terminates_at_zero", chain.back().dim() == 0},
                                {"steps", steps}});
    return kExitOk;
}

int cmd_derivations(const Output& out, const std::string& alg_path, bool diagonal_only) {
    LieAlgebra mu = load_algebra(alg_path);
    ordered_json j{{"command", "derivations"}, {"algebra", mu.name()},
                   {"diagonal", diagonal_only}};
    if (diagonal_only) {
        auto weights = diagonal_derivations(mu);
        out.line("diagonal derivation weight space: dimension " + std::to_string(weights.size()));
        ordered_json ws = ordered_json::array();
        for (const auto& w : weights) {
            std::string entries;
            for (const auto& c : w) entries += (entries.empty() ? "(" : ", ") + c.to_string();
            out.line("  w = " + entries + ")");
            ordered_json wj = ordered_json::array();
            for (const auto& c : w) wj.push_back(c.to_string());
            ws.push_back(wj);
        }
        j["weight_vectors"] = ws;
        j["dimension"] = weights.size();
    } else {
        auto basis = derivation_space(mu);
        out.line("derivation algebra dimension: " + std::to_string(basis.size()));
        ordered_json bs = ordered_json::array();
        for (const auto& d : basis) bs.push_back(ordered_json::parse(matrix_to_json_string(d)));
        j["dimension"] = basis.size();
        j["basis"] = bs;
    }
    out.write_json(j);
    return kExitOk;
}

int cmd_grading(const Output& out, const std::string& alg_path, const std::string& map_path) {
    LieAlgebra mu = load_algebra(alg_path);
    LinearMap d = load_matrix(map_path);
    LinearMap lifted(d.rows(), d.cols(), mu.symbols());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j2 = 0; j2 < d.cols(); ++j2)
            lifted.set(i, j2, d.at(i, j2).lifted(mu.symbols()));
    Grading g = eigen_grading(mu, lifted);
    ordered_json pieces = ordered_json::array();
    out.line("grading with " + std::to_string(g.pieces.size()) + " piece(s):");
    for (const auto& [w, s] : g.pieces) {
        out.line("  weight " + to_string(w) + ": dim " + std::to_string(s.dim()) + ", " +
                 s.to_string());
        pieces.push_back(ordered_json{{"weight", to_string(w)},
                                      {"dim", s.dim()},
                                      {"basis", s.to_string()}});
    }
    out.write_json(ordered_json{{"command", "grading"},
                                {"algebra", mu.name()},
                                {"pieces", pieces}});
    return kExitOk;
}

int cmd_cocycle(const Output& out, const std::string& alg_path, const std::string& ideal,
                const std::string& derivation_path, std::size_t complement, bool emit_curve) {
    DeformationInputs in =
        load_deformation_inputs(alg_path, ideal, derivation_path, complement);
    BilinearForm phi = build_mu_D(in.mu, in.X, in.h, in.D);
    if (!emit_curve) {
        out.line("cocycle mu_D: " + phi.table().to_string());
        // Cocycle files share the curve schema: the table t*mu_D, i.e. a
        // curve with zero constant part.
        if (!out.json_path.empty()) {
            LieAlgebra zero_base(in.mu.name() + "_muD", in.mu.dim(), in.mu.symbols());
            save_curve(DeformationCurve(zero_base, phi), out.json_path);
        }
        return kExitOk;
    }
    DeformationCurve curve = deform(in.mu, phi);
    out.line("deformation mu_t: " + curve.realized().table().to_string());
    if (!out.json_path.empty()) save_curve(curve, out.json_path);
    return kExitOk;
}

int cmd_witness(const Output& out, const std::string& mu1_path, const std::string& curve_path,
                const std::string& witness_path) {
    DeformationCurve curve = load_curve(curve_path);
    LieAlgebra mu1_raw = load_algebra(mu1_path);
    LieAlgebra mu1(mu1_raw.name(), mu1_raw.table().lifted(curve.base().symbols()));
    WitnessFamily g = load_witness(witness_path, curve.base().symbols());
    auto residuals = verify_witness(mu1, curve, g);
    const std::size_t n = mu1.dim();
    out.line(residuals.empty()
                 ? "witness verifies: mu1(g x, g y) = g(mu_t(x, y)) identically (" +
                       std::to_string(n * (n - 1) / 2) + " pairs)"
                 : "witness FAILS on " + std::to_string(residuals.size()) + " pair(s):");
    ordered_json rj = ordered_json::array();
    for (const auto& r : residuals) {
        out.line("  (e" + std::to_string(r.i + 1) + ", e" + std::to_string(r.j + 1) +
                 "): residual " + vector_to_string(r.residual));
        rj.push_back(residual_json(r.i, r.j, r.residual));
    }
    out.write_json(ordered_json{{"command", "witness"},
                                {"verified", residuals.empty()},
                                {"residuals", rj}});
    return residuals.empty() ? kExitOk : kExitMathFail;
}

int cmd_limit(const Output& out, const std::string& table_path) {
    LieAlgebra family = load_algebra(table_path);
    try {
        LieAlgebra limit = limit_at_zero(family);
        out.line("limit at t=0: " + limit.table().to_string());
        if (!out.json_path.empty()) save_algebra(limit, out.json_path);
        return kExitOk;
    } catch (const InvalidInputError& e) {
        // A limit that violates Jacobi is a failed mathematical check, not
        // malformed input; poles propagate to the top-level mapping.
        std::cerr << "math check failed: " << e.what() << "\n";
        return kExitMathFail;
    }
}

void print_certificate(const Output& out, const std::string& label,
                       const DegenerationCertificate& cert) {
    for (const auto& c : cert.checks)
        out.line("  [" + std::string(c.pass ? "pass" : "FAIL") + "] " + c.name + ": " + c.detail);
    out.line(std::string(label.empty() ? "certificate" : label) + ": " +
             (cert.valid ? "VALID" : "INVALID") +
             (cert.extension_exists ? " (derivation extends)" : " (no derivation extension)"));
}

int cmd_pipeline(const Output& out, const std::string& alg_path, const std::string& ideal,
                 const std::string& derivation_path, const std::string& witness_path,
                 std::size_t complement) {
    DeformationInputs in =
        load_deformation_inputs(alg_path, ideal, derivation_path, complement);
    std::optional<WitnessFamily> g;
    if (!witness_path.empty()) g = load_witness(witness_path, in.mu.symbols());
    DegenerationCertificate cert = certify_degeneration(in.mu, in.X, in.h, in.D, g);
    print_certificate(out, in.mu.name(), cert);
    if (!out.json_path.empty()) save_certificate(cert, out.json_path, in.mu.name());
    return cert.valid ? kExitOk : kExitMathFail;
}

int cmd_verify_paper(const Output& out, const std::string& constants_path) {
    auto fixtures = bundled_fixtures();
    std::vector<LieAlgebra> external;
    if (!constants_path.empty()) external = load_algebra_collection(constants_path);

    ordered_json results = ordered_json::array();
    std::size_t ran = 0, valid = 0, skipped = 0;
    for (auto& fx : fixtures) {
        Fixture work = fx;
        if (work.requires_external) {
            bool attached = false;
            for (const auto& mu : external) {
                if (mu.name() == work.name) {
                    work = attach_constants(work, mu);
                    attached = true;
                    break;
                }
            }
            if (!attached) {
                out.line("fixture " + work.name + ": SKIPPED (needs external constants)");
                results.push_back(ordered_json{{"fixture", work.name}, {"status", "skipped"}});
                ++skipped;
                continue;
            }
        }
        DegenerationCertificate cert = certify_fixture(work);
        ++ran;
        if (cert.valid) ++valid;
        out.line("fixture " + work.name + ": " + (cert.valid ? "VALID" : "INVALID"));
        if (!cert.valid)
            for (const auto& c : cert.checks)
                if (!c.pass) out.line("    [FAIL] " + c.name + ": " + c.detail);
        results.push_back(ordered_json{
            {"fixture", work.name},
            {"status", cert.valid ? "valid" : "invalid"},
            {"report", ordered_json::parse(certificate_to_json_string(cert, work.name))}});
    }
    out.line(std::to_string(valid) + "/" + std::to_string(ran) + " fixtures VALID, " +
             std::to_string(skipped) + " skipped");
    out.write_json(ordered_json{{"command", "verify-paper"},
                                {"valid", valid},
                                {"ran", ran},
                                {"skipped", skipped},
                                {"fixtures", results}});
    return valid == ran ? kExitOk : kExitMathFail;
}

int cmd_attach(const Output& out, const std::string& fixture_name, const std::string& alg_path) {
    auto fx = find_fixture(fixture_name);
    if (!fx) throw SchemaError("unknown fixture '" + fixture_name + "'");
    LieAlgebra mu = load_algebra(alg_path);
    Fixture complete = attach_constants(*fx, mu);
    out.line("fixture " + fixture_name + ": constants attached, running certification");
    DegenerationCertificate cert = certify_fixture(complete);
    print_certificate(out, fixture_name, cert);
    if (!out.json_path.empty()) save_certificate(cert, out.json_path, fixture_name);
    return cert.valid ? kExitOk : kExitMathFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "liedegen: exact structure-constant, deformation and degeneration checks "
        "over Q(t, parameters)"};
    app.require_subcommand(1);
    app.fallthrough();  // --quiet / --json may follow the subcommand

    Output out;
    app.add_flag("--quiet", out.quiet, "suppress everything but the exit status");
    app.add_option("--json", out.json_path, "write a machine-readable JSON report or object");

    std::string alg_path, ideal, derivation_path, witness_path, kind = "lower-central";
    std::string mu1_path, curve_path, constants_path, fixture_name;
    std::size_t complement = 0;
    bool diagonal_only = false;

    auto* jacobi = app.add_subcommand("jacobi", "check the Jacobi identity symbolically");
    jacobi->add_option("algebra", alg_path, "algebra file (*.alg.json)")->required();

    auto* ser = app.add_subcommand("series", "lower central or derived series");
    ser->add_option("algebra", alg_path)->required();
    ser->add_option("--kind", kind, "lower-central | derived")->required();

    auto* der = app.add_subcommand("derivations", "derivation algebra of the table");
    der->add_option("algebra", alg_path)->required();
    der->add_flag("--diagonal", diagonal_only, "solve only for diagonal weight vectors");

    auto* grad = app.add_subcommand("grading", "eigenvalue grading of a semisimple derivation");
    grad->add_option("algebra", alg_path)->required();
    grad->add_option("--derivation", derivation_path, "derivation file (*.map.json)")->required();

    auto* coc = app.add_subcommand("cocycle", "build the deformation cocycle mu_D");
    coc->add_option("algebra", alg_path)->required();
    coc->add_option("--ideal", ideal, "1-based indices of the ideal, e.g. 2,3,4,5,6")->required();
    coc->add_option("--derivation", derivation_path, "derivation of the ideal")->required();
    coc->add_option("--complement", complement, "1-based index of X (default: first gap)");

    auto* def = app.add_subcommand("deform", "build the linear deformation mu + t*mu_D");
    def->add_option("algebra", alg_path)->required();
    def->add_option("--ideal", ideal)->required();
    def->add_option("--derivation", derivation_path)->required();
    def->add_option("--complement", complement);

    auto* wit = app.add_subcommand("witness", "verify mu1(g x, g y) = g(mu_t(x, y))");
    wit->add_option("mu1", mu1_path, "specialized algebra (*.alg.json)")->required();
    wit->add_option("curve", curve_path, "deformation curve file")->required();
    wit->add_option("witness", witness_path, "family g_t (*.map.json)")->required();

    auto* lim = app.add_subcommand("limit", "entrywise t -> 0 limit of a table");
    lim->add_option("table", alg_path, "algebra file with entries in Q(t)")->required();

    auto* pipe = app.add_subcommand("pipeline", "full degeneration certificate");
    pipe->add_option("algebra", alg_path)->required();
    pipe->add_option("--ideal", ideal)->required();
    pipe->add_option("--derivation", derivation_path)->required();
    pipe->add_option("--witness", witness_path, "optional explicit family g_t");
    pipe->add_option("--complement", complement);

    auto* vp = app.add_subcommand("verify-paper", "certify all complete bundled fixtures");
    vp->add_option("--constants", constants_path,
                   "collection file completing the pending fixtures");

    auto* att = app.add_subcommand("attach", "attach external constants to a bundled fixture");
    att->add_option("fixture", fixture_name, "fixture name, e.g. g7_0.1")->required();
    att->add_option("algebra", alg_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*jacobi) return cmd_jacobi(out, alg_path);
        if (*ser) return cmd_series(out, alg_path, kind);
        if (*der) return cmd_derivations(out, alg_path, diagonal_only);
        if (*grad) return cmd_grading(out, alg_path, derivation_path);
        if (*coc) return cmd_cocycle(out, alg_path, ideal, derivation_path, complement, false);
        if (*def) return cmd_cocycle(out, alg_path, ideal, derivation_path, complement, true);
        if (*wit) return cmd_witness(out, mu1_path, curve_path, witness_path);
        if (*lim) return cmd_limit(out, alg_path);
        if (*pipe)
            return cmd_pipeline(out, alg_path, ideal, derivation_path, witness_path, complement);
        if (*vp) return cmd_verify_paper(out, constants_path);
        if (*att) return cmd_attach(out, fixture_name, alg_path);
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const PoleError& e) {
        std::cerr << "math check failed: " << e.what() << "\n";
        return kExitMathFail;
    } catch (const SingularMatrixError& e) {
        std::cerr << "math check failed: " << e.what() << "\n";
        return kExitMathFail;
    } catch (const DivisionByZeroError& e) {
        std::cerr << "math check failed: " << e.what() << "\n";
        return kExitMathFail;
    } catch (const Error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
