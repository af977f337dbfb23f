// Timing comparison of the serial reference kernels against the OpenMP
// ones.  Exact arithmetic makes the outputs identical; this only reports
// wall time (and verifies agreement while it is at it).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>

#include "immpoly/graph.hpp"
#include "immpoly/immanant.hpp"
#include "immpoly/matrix.hpp"
#include "immpoly/orientation.hpp"

using namespace immpoly;

namespace {

double seconds(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
}

ExactMatrix random_matrix(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = Rational(num(rng)) / Rational(den(rng));
    return m;
}

void row(const std::string& name, double serial, double parallel, bool same) {
    std::cout << name << ": serial " << serial << "s, parallel " << parallel
              << "s, speedup " << (parallel > 0 ? serial / parallel : 0.0)
              << (same ? "" : "  [MISMATCH]") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 9;
    if (n < 2 || n > 9) n = 9;

    const ExactMatrix m = random_matrix(n, 1u);

    CycleTypeSums imm_ser, imm_par;
    const double t1s =
        seconds([&] { imm_ser = immanant_class_sums_serial(m); });
    const double t1p = seconds([&] { imm_par = immanant_class_sums(m); });
    row("immanant class sums n=" + std::to_string(n), t1s, t1p,
        imm_ser.sums == imm_par.sums);

    SubsetClassSums sub_ser, sub_par;
    const double t2s =
        seconds([&] { sub_ser = subset_class_sums_serial(m, n); });
    const double t2p = seconds([&] { sub_par = subset_class_sums(m, n); });
    row("subset class sums n=" + std::to_string(n), t2s, t2p,
        sub_ser.sums == sub_par.sums);

    const Graph g = Graph::complete(std::min(n, 8));
    OrientationCensus cen_ser, cen_par;
    const double t3s = seconds(
        [&] { cen_ser = orientation_census_serial(g, g.n()); });
    const double t3p =
        seconds([&] { cen_par = orientation_census(g, g.n()); });
    row("orientation census K_" + std::to_string(g.n()), t3s, t3p,
        cen_ser.counts == cen_par.counts);

    return 0;
}
