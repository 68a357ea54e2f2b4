#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "linrel/kernels.hpp"
#include "linrel/theorems.hpp"

// Times the OpenMP kernels against the serial reference on exact-arithmetic
// row reduction and matrix products. Results must match bit for bit; the
// point of the comparison is wall time. The measurements behind the Auto
// dispatch policy (prime fields fork, rationals stay serial) come from here.

namespace {

using namespace linrel;

double seconds(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench_field(const FieldSpec& field, const std::vector<std::size_t>& sizes,
                 std::uint64_t seed) {
    InstanceGen gen{field, 0, seed};
    std::printf("%s\n", field.to_string().c_str());
    std::printf("  %6s | %10s %10s %8s | %10s %10s %8s\n", "n", "rref ser", "rref par", "speedup",
                "mul ser", "mul par", "speedup");
    for (std::size_t n : sizes) {
        Rng g = gen.rng_for(n);
        const Matrix a = gen.matrix(g, n, n);
        const Matrix b = gen.matrix(g, n, n);

        kernels::mode() = kernels::Mode::ForceSerial;
        RrefResult r_ser = rref(a);
        const double t_rref_ser = seconds([&] { r_ser = rref(a); });
        Matrix m_ser = kernels::mul_serial(a, b);
        const double t_mul_ser = seconds([&] { m_ser = kernels::mul_serial(a, b); });

        kernels::mode() = kernels::Mode::ForceParallel;
        RrefResult r_par = rref(a);
        const double t_rref_par = seconds([&] { r_par = rref(a); });
        Matrix m_par = kernels::mul_parallel(a, b);
        const double t_mul_par = seconds([&] { m_par = kernels::mul_parallel(a, b); });
        kernels::mode() = kernels::Mode::Auto;

        if (r_ser.rref != r_par.rref || r_ser.transform != r_par.transform || m_ser != m_par) {
            std::printf("  n=%zu: PARALLEL RESULT DIFFERS FROM SERIAL\n", n);
            continue;
        }
        std::printf("  %6zu | %9.4fs %9.4fs %7.2fx | %9.4fs %9.4fs %7.2fx\n", n, t_rref_ser,
                    t_rref_par, t_rref_ser / t_rref_par, t_mul_ser, t_mul_par,
                    t_mul_ser / t_mul_par);
    }
}

}  // namespace

int main(int argc, char** argv) {
    // rational elimination is far more expensive per entry, so its default
    // sizes are smaller; pass explicit sizes to override both tables
    std::vector<std::size_t> prime_sizes = {64, 128, 192};
    std::vector<std::size_t> rational_sizes = {24, 48, 72};
    if (argc > 1) {
        prime_sizes.clear();
        for (int i = 1; i < argc; ++i) prime_sizes.push_back(std::stoul(argv[i]));
        rational_sizes = prime_sizes;
    }
    bench_field(FieldSpec::prime_field(65521), prime_sizes, 7);
    bench_field(FieldSpec::rationals(), rational_sizes, 11);
    return 0;
}
