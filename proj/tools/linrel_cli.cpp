#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "linrel/io.hpp"
#include "linrel/pair.hpp"
#include "linrel/theorems.hpp"

namespace {

using namespace linrel;
using io::json;

// exit codes: 0 success, 1 verification failure / counterexample, 2 input error
constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

std::string shape_text(const WireShape& s) {
    return "r=" + std::to_string(s.r) + " k_I=" + std::to_string(s.k_i) +
           " k_S=" + std::to_string(s.k_s) + " k_T=" + std::to_string(s.k_t) +
           " k_D=" + std::to_string(s.k_d);
}

json shape_json(const WireShape& s) {
    return json{{"r", s.r}, {"k_I", s.k_i}, {"k_S", s.k_s}, {"k_T", s.k_t}, {"k_D", s.k_d}};
}

json props_json(const PropertyReport& p) {
    return json{{"total", p.total},           {"deterministic", p.deterministic},
                {"injective", p.injective},   {"surjective", p.surjective},
                {"is_map", p.is_map},         {"is_bijective", p.is_bijective}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

LinearRelation column_span(const Matrix& m) {
    return LinearRelation::from_subspace_basis(m.field(), 0, m.rows(), m.transpose());
}

int cmd_classify(const std::string& path, const std::string& name, bool json_style) {
    const io::InputDocument doc = io::load_document(path);
    const LinearRelation rel = doc.build_relation(name);
    const PropertyReport direct = properties(rel);
    const CospanDecomposition cd = cospan_decompose(rel);
    PropertyReport shaped;
    shaped.injective = cd.shape.k_i == 0;
    shaped.surjective = cd.shape.k_s == 0;
    shaped.total = cd.shape.k_t == 0;
    shaped.deterministic = cd.shape.k_d == 0;
    shaped.is_map = shaped.total && shaped.deterministic;
    shaped.is_bijective = shaped.is_map && shaped.injective && shaped.surjective;
    const bool agree = direct == shaped;

    if (json_style) {
        json out;
        out["command"] = "classify";
        out["field"] = rel.field().to_string();
        out["relation"] = name;
        out["m"] = rel.left_arity();
        out["n"] = rel.right_arity();
        out["dim"] = rel.dim();
        out["direct"] = props_json(direct);
        out["via_shape"] = props_json(shaped);
        out["shape"] = shape_json(cd.shape);
        out["agree"] = agree;
        emit(out);
    } else {
        std::cout << "relation " << name << ": K^" << rel.left_arity() << " -> K^"
                  << rel.right_arity() << " over " << rel.field().to_string() << ", dim "
                  << rel.dim() << "\n";
        std::cout << "direct:    " << io::properties_text(direct) << "\n";
        std::cout << "via shape: " << io::properties_text(shaped) << "\n";
        std::cout << "shape:     " << shape_text(cd.shape) << "\n";
        std::cout << "status:    " << (agree ? "AGREE" : "DISAGREE (bug)") << "\n";
    }
    return agree ? kOk : kVerificationFailure;
}

int cmd_decompose(const std::string& path, const std::string& name, const std::string& mode,
                  bool json_style) {
    const io::InputDocument doc = io::load_document(path);
    const LinearRelation rel = doc.build_relation(name);

    if (mode == "pair") {
        const io::RelationSpec& spec = doc.relation_spec(name);
        if (spec.kind != "cospan") {
            throw io::ParseError("decompose --mode pair needs a cospan-presented relation, '" +
                                 name + "' has kind '" + spec.kind + "'");
        }
        const Matrix& a = doc.matrix(spec.a);
        const Matrix& b = doc.matrix(spec.b);
        const PairDecomposition pd = pair_decompose(a, b);
        const bool verified = pd.h * pd.d1 * pd.p == a && pd.h * pd.d2 * pd.q == b &&
                              kernel_basis(pd.h).cols() == 0;
        if (json_style) {
            json out;
            out["command"] = "decompose";
            out["mode"] = "pair";
            out["field"] = rel.field().to_string();
            out["relation"] = name;
            out["k"] = a.rows();
            out["m"] = rel.left_arity();
            out["n"] = rel.right_arity();
            out["j"] = pd.h.cols();
            out["shape"] = shape_json(pd.shape);
            out["p"] = io::matrix_json(pd.p);
            out["q"] = io::matrix_json(pd.q);
            out["d1"] = io::matrix_json(pd.d1);
            out["d2"] = io::matrix_json(pd.d2);
            out["h"] = io::matrix_json(pd.h);
            out["verified"] = verified;
            emit(out);
        } else {
            std::cout << "pair decomposition of " << name << " = cospan(" << spec.a << ", "
                      << spec.b << ") over " << rel.field().to_string() << "\n";
            std::cout << "shape: " << shape_text(pd.shape) << " (j = " << pd.h.cols() << ")\n";
            std::cout << "P:\n" << io::matrix_text(pd.p);
            std::cout << "Q:\n" << io::matrix_text(pd.q);
            std::cout << "D1:\n" << io::matrix_text(pd.d1);
            std::cout << "D2:\n" << io::matrix_text(pd.d2);
            std::cout << "H:\n" << io::matrix_text(pd.h);
            std::cout << "identities A = H*D1*P, B = H*D2*Q: "
                      << (verified ? "VERIFIED" : "FAILED") << "\n";
        }
        return verified ? kOk : kVerificationFailure;
    }

    const CospanDecomposition cd = cospan_decompose(rel);
    const bool verified = rebuild(rel.field(), cd) == rel && (cd.p * cd.p_inv).is_identity() &&
                          (cd.q * cd.q_inv).is_identity();
    if (json_style) {
        json out;
        out["command"] = "decompose";
        out["mode"] = "cospan";
        out["field"] = rel.field().to_string();
        out["relation"] = name;
        out["m"] = rel.left_arity();
        out["n"] = rel.right_arity();
        out["dim"] = rel.dim();
        out["shape"] = shape_json(cd.shape);
        out["p"] = io::matrix_json(cd.p);
        out["p_inv"] = io::matrix_json(cd.p_inv);
        out["q"] = io::matrix_json(cd.q);
        out["q_inv"] = io::matrix_json(cd.q_inv);
        out["verified"] = verified;
        emit(out);
    } else {
        std::cout << "cospan decomposition of " << name << " over " << rel.field().to_string()
                  << "\n";
        std::cout << "shape: " << shape_text(cd.shape) << "\n";
        std::cout << "P:\n" << io::matrix_text(cd.p);
        std::cout << "P^-1:\n" << io::matrix_text(cd.p_inv);
        std::cout << "Q:\n" << io::matrix_text(cd.q);
        std::cout << "Q^-1:\n" << io::matrix_text(cd.q_inv);
        std::cout << "reconstruction: " << (verified ? "VERIFIED" : "FAILED") << "\n";
    }
    return verified ? kOk : kVerificationFailure;
}

int cmd_subspaces(const std::string& path, const std::string& name_a, const std::string& name_b,
                  bool json_style) {
    const io::InputDocument doc = io::load_document(path);
    const Matrix& a = doc.matrix(name_a);
    const Matrix& b = doc.matrix(name_b);
    const SubspaceReport rep = subspace_report(a, b);
    const auto [zsum, zmeet] = zassenhaus(a, b);
    const bool agree =
        column_span(zsum) == column_span(rep.sum) &&
        column_span(zmeet) == column_span(rep.intersection);

    if (json_style) {
        json out;
        out["command"] = "subspaces";
        out["field"] = a.field().to_string();
        out["a"] = name_a;
        out["b"] = name_b;
        out["im_a"] = io::matrix_json(rep.im_a);
        out["im_b"] = io::matrix_json(rep.im_b);
        out["intersection"] = io::matrix_json(rep.intersection);
        out["sum"] = io::matrix_json(rep.sum);
        out["complement_of_a"] = io::matrix_json(rep.complement_of_a);
        out["complement_of_b"] = io::matrix_json(rep.complement_of_b);
        out["complement_of_intersection"] = io::matrix_json(rep.complement_of_intersection);
        out["zassenhaus_agree"] = agree;
        emit(out);
    } else {
        std::cout << "subspaces of im(" << name_a << ") and im(" << name_b << ") over "
                  << a.field().to_string() << " (bases as columns)\n";
        std::cout << "im(A):\n" << io::matrix_text(rep.im_a);
        std::cout << "im(B):\n" << io::matrix_text(rep.im_b);
        std::cout << "intersection:\n" << io::matrix_text(rep.intersection);
        std::cout << "sum:\n" << io::matrix_text(rep.sum);
        std::cout << "complement of im(A):\n" << io::matrix_text(rep.complement_of_a);
        std::cout << "complement of im(B):\n" << io::matrix_text(rep.complement_of_b);
        std::cout << "complement of intersection:\n"
                  << io::matrix_text(rep.complement_of_intersection);
        std::cout << "zassenhaus cross-check: " << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return agree ? kOk : kVerificationFailure;
}

int cmd_inverse(const std::string& path, const std::string& name, bool json_style) {
    const io::InputDocument doc = io::load_document(path);
    const Matrix& m = doc.matrix(name);
    const auto li = left_inverse(m);
    const auto ri = right_inverse(m);
    const auto inv = inverse(m);
    bool verified = true;
    if (li && *li * m != Matrix::identity(m.field(), m.cols())) verified = false;
    if (ri && m * *ri != Matrix::identity(m.field(), m.rows())) verified = false;
    if (inv && (!li || !ri || *inv != *li || *inv != *ri)) verified = false;

    if (json_style) {
        json out;
        out["command"] = "inverse";
        out["field"] = m.field().to_string();
        out["matrix"] = name;
        out["rows"] = m.rows();
        out["cols"] = m.cols();
        out["injective"] = li.has_value();
        out["surjective"] = ri.has_value();
        out["left_inverse"] = li ? io::matrix_json(*li) : json(nullptr);
        out["right_inverse"] = ri ? io::matrix_json(*ri) : json(nullptr);
        out["inverse"] = inv ? io::matrix_json(*inv) : json(nullptr);
        out["verified"] = verified;
        emit(out);
    } else {
        std::cout << name << ": " << m.rows() << "x" << m.cols() << " over "
                  << m.field().to_string() << "\n";
        if (li) {
            std::cout << "left inverse (injective):\n" << io::matrix_text(*li);
        } else {
            std::cout << "no left inverse (not injective)\n";
        }
        if (ri) {
            std::cout << "right inverse (surjective):\n" << io::matrix_text(*ri);
        } else {
            std::cout << "no right inverse (not surjective)\n";
        }
        if (inv) {
            std::cout << "inverse:\n" << io::matrix_text(*inv);
        }
        std::cout << "products check: " << (verified ? "VERIFIED" : "FAILED") << "\n";
    }
    return verified ? kOk : kVerificationFailure;
}

int cmd_selftest(const SelftestOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    const SelftestResult result = run_selftest(opts);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    for (const SuiteResult& sr : result.suites) {
        std::cout << (sr.verdict.ok ? "[ OK ]" : "[FAIL]") << " " << sr.name << ": "
                  << sr.instances << " instances\n";
        if (!sr.verdict.ok) std::cout << sr.verdict.message << "\n";
    }
    std::cout << "selftest: " << (result.ok ? "PASS" : "FAIL") << " (" << result.suites.size()
              << " suites, " << secs << " s)\n";
    if (!result.repro_file.empty()) {
        std::cout << "counterexample written to " << result.repro_file << "\n";
    }
    return result.ok ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear relation algebra: classification, decompositions, subspaces"};
    app.require_subcommand(1);

    std::string path, name, name_b, mode = "cospan";
    bool json_style = false;

    CLI::App* classify = app.add_subcommand("classify", "fundamental properties of a relation");
    classify->add_option("file", path, "input document")->required();
    classify->add_option("relation", name, "relation name")->required();
    classify->add_flag("--json-style", json_style, "machine-readable output");

    CLI::App* decompose = app.add_subcommand("decompose", "cospan or pair decomposition");
    decompose->add_option("file", path, "input document")->required();
    decompose->add_option("relation", name, "relation name")->required();
    decompose->add_option("--mode", mode, "cospan|pair")
        ->check(CLI::IsMember({"cospan", "pair"}));
    decompose->add_flag("--json-style", json_style, "machine-readable output");

    CLI::App* subspaces = app.add_subcommand("subspaces", "subspace calculator for im(A), im(B)");
    subspaces->add_option("file", path, "input document")->required();
    subspaces->add_option("a", name, "first matrix name")->required();
    subspaces->add_option("b", name_b, "second matrix name")->required();
    subspaces->add_flag("--json-style", json_style, "machine-readable output");

    CLI::App* inverse_cmd = app.add_subcommand("inverse", "one- and two-sided inverses");
    inverse_cmd->add_option("file", path, "input document")->required();
    inverse_cmd->add_option("matrix", name, "matrix name")->required();
    inverse_cmd->add_flag("--json-style", json_style, "machine-readable output");

    SelftestOptions st;
    CLI::App* selftest = app.add_subcommand("selftest", "run the theorem verification harness");
    selftest->add_flag("--quick", st.quick, "exhaustive GF(2) suites only");
    selftest->add_option("--seed", st.seed, "seed for the randomized suites");
    selftest->add_option("--trials", st.trials, "trials per randomized suite");
    selftest->add_flag("--inject-fault", st.inject_fault,
                       "deliberately fail one check (negative testing)");
    selftest->add_option("--repro", st.repro_path, "counterexample output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kInputError;
    }

    try {
        if (classify->parsed()) return cmd_classify(path, name, json_style);
        if (decompose->parsed()) return cmd_decompose(path, name, mode, json_style);
        if (subspaces->parsed()) return cmd_subspaces(path, name, name_b, json_style);
        if (inverse_cmd->parsed()) return cmd_inverse(path, name, json_style);
        return cmd_selftest(st);
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kVerificationFailure;
    }
}
