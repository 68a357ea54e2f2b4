// End-to-end CLI tests: golden machine-readable outputs, document round
// trips that re-verify the emitted decompositions, and the exit-code
// contract (0 ok, 1 verification failure, 2 input error).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "linrel/io.hpp"
#include "linrel/theorems.hpp"

#define EXPECT(cond, msg)                                              \
    do {                                                               \
        if (!(cond)) {                                                 \
            std::fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, msg); \
            return 1;                                                  \
        }                                                              \
    } while (0)

namespace {

using namespace linrel;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_raw(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult res;
    if (!pipe) return res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}

RunResult run_cli(const std::string& args, bool keep_stderr = false) {
    return run_raw(std::string(LINREL_CLI_PATH) + " " + args +
                   (keep_stderr ? " 2>&1" : " 2>/dev/null"));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return data;
}

const std::string fixtures = LINREL_FIXTURE_DIR;
const std::string golden = LINREL_GOLDEN_DIR;

int golden_case(const std::string& args, const std::string& golden_file) {
    const RunResult res = run_cli(args);
    EXPECT(res.exit_code == 0, ("nonzero exit for: " + args).c_str());
    const std::string expect = read_file(golden + "/" + golden_file);
    EXPECT(!expect.empty(), ("missing golden " + golden_file).c_str());
    EXPECT(res.out == expect, ("not byte-identical to " + golden_file).c_str());
    return 0;
}

WireShape shape_from_json(const io::json& j) {
    return WireShape::make(j["r"].get<std::size_t>(), j["k_I"].get<std::size_t>(),
                           j["k_S"].get<std::size_t>(), j["k_T"].get<std::size_t>(),
                           j["k_D"].get<std::size_t>());
}

}  // namespace

int main() {
    // golden machine-readable outputs
    if (golden_case("classify " + fixtures + "/gf2.json R --json-style", "classify_gf2_R.json"))
        return 1;
    if (golden_case("decompose " + fixtures + "/qq.json G --mode cospan --json-style",
                    "decompose_qq_G_cospan.json"))
        return 1;
    if (golden_case("decompose " + fixtures + "/qq.json R --mode pair --json-style",
                    "decompose_qq_R_pair.json"))
        return 1;
    if (golden_case("subspaces " + fixtures + "/gf3.json A B --json-style",
                    "subspaces_gf3_A_B.json"))
        return 1;
    if (golden_case("inverse " + fixtures + "/qq.json T --json-style", "inverse_qq_T.json"))
        return 1;

    // emitted cospan decomposition re-parses and re-verifies
    {
        const RunResult res =
            run_cli("decompose " + fixtures + "/qq.json G --mode cospan --json-style");
        EXPECT(res.exit_code == 0, "decompose failed");
        const io::json doc = io::json::parse(res.out);
        EXPECT(doc["verified"].get<bool>(), "document not marked verified");
        const FieldSpec f = FieldSpec::parse(doc["field"].get<std::string>());
        CospanDecomposition cd{io::matrix_from_json(f, doc["p"], "p"),
                               io::matrix_from_json(f, doc["p_inv"], "p_inv"),
                               io::matrix_from_json(f, doc["q"], "q"),
                               io::matrix_from_json(f, doc["q_inv"], "q_inv"),
                               shape_from_json(doc["shape"])};
        EXPECT((cd.p * cd.p_inv).is_identity(), "re-parsed P*P^-1 != I");
        EXPECT((cd.q * cd.q_inv).is_identity(), "re-parsed Q*Q^-1 != I");
        const io::InputDocument fixture = io::load_document(fixtures + "/qq.json");
        EXPECT(rebuild(f, cd) == fixture.build_relation("G"),
               "re-parsed decomposition does not reconstruct the relation");
    }

    // emitted pair decomposition re-parses and re-verifies
    {
        const RunResult res =
            run_cli("decompose " + fixtures + "/qq.json R --mode pair --json-style");
        EXPECT(res.exit_code == 0, "pair decompose failed");
        const io::json doc = io::json::parse(res.out);
        EXPECT(doc["verified"].get<bool>(), "document not marked verified");
        const FieldSpec f = FieldSpec::parse(doc["field"].get<std::string>());
        const Matrix p = io::matrix_from_json(f, doc["p"], "p");
        const Matrix q = io::matrix_from_json(f, doc["q"], "q");
        const Matrix d1 = io::matrix_from_json(f, doc["d1"], "d1");
        const Matrix d2 = io::matrix_from_json(f, doc["d2"], "d2");
        const Matrix h = io::matrix_from_json(f, doc["h"], "h");
        const io::InputDocument fixture = io::load_document(fixtures + "/qq.json");
        EXPECT(h * d1 * p == fixture.matrix("A"), "re-parsed H*D1*P != A");
        EXPECT(h * d2 * q == fixture.matrix("B"), "re-parsed H*D2*Q != B");
        EXPECT(kernel_basis(h).cols() == 0, "re-parsed H not injective");
    }

    // machine-readable output does not depend on the thread count
    {
        const std::string tail = std::string(LINREL_CLI_PATH) + " decompose " + fixtures +
                                 "/qq.json R --mode pair --json-style 2>/dev/null";
        const RunResult threaded = run_raw("env OMP_NUM_THREADS=2 " + tail);
        const RunResult single = run_raw("env OMP_NUM_THREADS=1 " + tail);
        EXPECT(threaded.exit_code == 0 && single.exit_code == 0, "threaded runs failed");
        EXPECT(threaded.out == single.out, "output depends on OMP_NUM_THREADS");
    }

    // --help renders and succeeds
    {
        const RunResult res = run_cli("--help", true);
        EXPECT(res.exit_code == 0, "--help should exit 0");
        EXPECT(res.out.find("classify") != std::string::npos, "help should list subcommands");
        EXPECT(res.out.find("selftest") != std::string::npos, "help should list selftest");
    }

    // human-readable classify agrees with itself
    {
        const RunResult res = run_cli("classify " + fixtures + "/gf2.json R");
        EXPECT(res.exit_code == 0, "classify (text) failed");
        EXPECT(res.out.find("AGREE") != std::string::npos, "text output missing AGREE");
        EXPECT(res.out.find("TOT SUR") != std::string::npos, "expected TOT SUR");
    }

    // degenerate arity: a plain subspace (m = 0) classifies and decomposes
    {
        EXPECT(run_cli("classify " + fixtures + "/qq.json V").exit_code == 0,
               "classify on a subspace relation failed");
        const RunResult res =
            run_cli("decompose " + fixtures + "/qq.json V --mode cospan --json-style");
        EXPECT(res.exit_code == 0, "decompose on a subspace relation failed");
        const io::json doc = io::json::parse(res.out);
        EXPECT(doc["verified"].get<bool>(), "degenerate decomposition not verified");
        EXPECT(doc["m"].get<int>() == 0, "expected m = 0");
    }

    // exit-code contract: input errors are 2
    {
        EXPECT(run_cli("classify /nonexistent.json R").exit_code == 2, "missing file should be 2");
        EXPECT(run_cli("classify " + fixtures + "/gf2.json NOPE").exit_code == 2,
               "unknown relation should be 2");
        EXPECT(run_cli("decompose " + fixtures + "/qq.json G --mode pair").exit_code == 2,
               "pair mode on a graph presentation should be 2");
        EXPECT(run_cli("bogus-subcommand").exit_code == 2, "bad usage should be 2");

        const std::string bad = "/tmp/linrel_bad_doc.json";
        std::ofstream out(bad);
        out << R"({"field": "QQ", "matrices": {"A": [["1/0"]]}})";
        out.close();
        const RunResult res = run_cli("classify " + bad + " R", true);
        EXPECT(res.exit_code == 2, "malformed scalar should be 2");
        EXPECT(res.out.find("matrices.A") != std::string::npos, "error should name the field");
        std::remove(bad.c_str());
    }

    // selftest: quick passes, injected fault fails with a repro file
    {
        EXPECT(run_cli("selftest --quick").exit_code == 0, "selftest --quick should pass");
        EXPECT(run_cli("selftest --trials 5 --seed 9").exit_code == 0,
               "selftest with tiny trial count should pass");
        const std::string repro = "/tmp/linrel_cli_repro.json";
        std::remove(repro.c_str());
        const RunResult res = run_cli("selftest --quick --inject-fault --repro " + repro);
        EXPECT(res.exit_code == 1, "injected fault should exit 1");
        EXPECT(!read_file(repro).empty(), "repro file should exist");
        const io::InputDocument doc = io::load_document(repro);  // must re-parse
        EXPECT(doc.relations.size() == 1, "repro should carry the failing relation");
        // the repro document feeds straight back into the commands
        EXPECT(run_cli("classify " + repro + " R").exit_code == 0,
               "repro document should classify cleanly");
        std::remove(repro.c_str());
    }

    std::printf("cli_tests OK\n");
    return 0;
}
