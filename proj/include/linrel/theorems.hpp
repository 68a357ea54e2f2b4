#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linrel/pair.hpp"

namespace linrel {

/// splitmix64 stream; deterministic across platforms and cheap to reseed
/// per trial, so parallel runs reproduce exactly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);           // [0, bound)
    long long in_range(long long lo, long long hi);     // inclusive

private:
    std::uint64_t state_;
};

struct Verdict {
    bool ok = true;
    std::string message;  // counterexample description when !ok
    std::string repro;    // input-document JSON reproducing the instance

    static Verdict pass() { return Verdict{}; }
    static Verdict fail(std::string message, std::string repro = {});
};

/// Deterministic instance source: instance k of a given seed is the same
/// stream no matter how trials are scheduled.
struct InstanceGen {
    FieldSpec field = FieldSpec::rationals();
    std::size_t max_dim = 4;
    std::uint64_t seed = 0;

    Rng rng_for(std::uint64_t k) const;

    Scalar scalar(Rng& g) const;
    Scalar nonzero_scalar(Rng& g) const;
    Matrix matrix(Rng& g, std::size_t rows, std::size_t cols) const;
    /// Product of random elementary row operations; invertible without
    /// rejection sampling.
    Matrix invertible(Rng& g, std::size_t n) const;
    /// Square with rank < n by construction (a thin product). Requires n >= 1.
    Matrix singular_square(Rng& g, std::size_t n) const;
    LinearRelation relation(Rng& g, std::size_t m, std::size_t n) const;
    /// A random subspace of r (random combinations of its basis rows).
    LinearRelation subrelation(Rng& g, const LinearRelation& r) const;
};

/// Every subspace of GF(2)^(m+n) exactly once, as (m, n) relations, by
/// enumerating reduced row-echelon forms. Requires GF(2) and m + n <= 5.
std::vector<LinearRelation> enumerate_relations(const FieldSpec& f, std::size_t m, std::size_t n);
/// All 2^(rows*cols) GF(2) matrices of a shape (rows*cols <= 16).
std::vector<Matrix> enumerate_gf2_matrices(std::size_t rows, std::size_t cols);
/// Number of k-dimensional subspaces of GF(2)^n (Gaussian binomial).
std::uint64_t gf2_subspace_count(std::size_t n, std::size_t k);

// Theorem checkers. Each returns a counterexample verdict instead of
// asserting, so harnesses can serialize the failing instance.
Verdict check_poset(const LinearRelation& r);
Verdict check_mirror_symmetry(const LinearRelation& r);
Verdict check_classification_agreement(const LinearRelation& r);
Verdict check_decomposition_roundtrip(const LinearRelation& r);
Verdict check_pigeonhole(const Matrix& a, const Matrix& b);
Verdict check_exchange_equivalence(const Matrix& a, const Matrix& b);
Verdict check_cospan_dict(const Matrix& a, const Matrix& b);
Verdict check_imt(const Matrix& a);
Verdict check_pair_identities(const Matrix& a, const Matrix& b);
Verdict check_subspace_calculator(const Matrix& a, const Matrix& b);

// Inverse interaction laws. r, s compose on the right of graph(a)
// (r.n == cols a); u, v on the left (u.m == rows a).
Verdict check_left_inverse_laws(const Matrix& a, const LinearRelation& r,
                                const LinearRelation& s);
Verdict check_right_inverse_laws(const Matrix& a, const LinearRelation& u,
                                 const LinearRelation& v);
Verdict check_props_inverse_laws(const Matrix& a, const LinearRelation& r,
                                 const LinearRelation& s, const LinearRelation& u,
                                 const LinearRelation& v);

// Algebraic laws of the relation operations.
Verdict check_associativity(const LinearRelation& a, const LinearRelation& b,
                            const LinearRelation& c);
Verdict check_interchange(const LinearRelation& a, const LinearRelation& b,
                          const LinearRelation& c, const LinearRelation& d);
Verdict check_contravariance(const LinearRelation& r, const LinearRelation& s);
Verdict check_monotonicity(const LinearRelation& r, const LinearRelation& s_small,
                           const LinearRelation& s_big, const LinearRelation& t);

struct SelftestOptions {
    bool quick = false;  // exhaustive GF(2) suites only
    std::uint64_t seed = 20240517;
    std::size_t trials = 1000;
    bool inject_fault = false;  // deliberately fail one check (negative testing)
    std::string repro_path = "linrel_counterexample.json";
};

struct SuiteResult {
    std::string name;
    std::size_t instances = 0;
    Verdict verdict;
};

struct SelftestResult {
    bool ok = true;
    std::vector<SuiteResult> suites;
    std::string repro_file;  // set when a counterexample was serialized
};

/// Runs the exhaustive GF(2) suites and (unless quick) the seeded random
/// suites; trials execute in parallel and reduce to one verdict per suite.
SelftestResult run_selftest(const SelftestOptions& opts);

}  // namespace linrel
