// Timing comparison of the OpenMP kernels against their serial references:
// exterior-power minor expansion and the mod-2 shuffle product.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "sshk/engines.hpp"
#include "sshk/exterior.hpp"

using namespace sshk;
using clk = std::chrono::steady_clock;

static double seconds(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main(int argc, char** argv) {
    std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 12;
    std::size_t q = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : n / 2;
    std::size_t shuffle_n = argc > 3 ? std::strtoul(argv[3], nullptr, 10) : 18;

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4);
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Rat(entry(rng));

    auto t0 = clk::now();
    RatMatrix par = exterior_power(a, q);
    auto t1 = clk::now();
    RatMatrix ser = exterior_power_serial(a, q);
    auto t2 = clk::now();
    std::cout << "exterior power  n=" << n << " q=" << q << "  (" << par.rows << "x" << par.cols
              << " minors)\n";
    std::cout << "  parallel " << seconds(t0, t1) << " s, serial " << seconds(t1, t2)
              << " s, match " << (par == ser ? "yes" : "NO") << "\n";

    ModPMatrix phi(2, 2, 2);
    phi.at(0, 0) = 0, phi.at(0, 1) = 1, phi.at(1, 0) = 1, phi.at(1, 1) = 1;
    t0 = clk::now();
    ModPMatrix kp = klein_mod2(phi, shuffle_n);
    t1 = clk::now();
    ModPMatrix ks = klein_mod2_serial(phi, shuffle_n);
    t2 = clk::now();
    std::cout << "mod-2 shuffle   n=" << shuffle_n << "\n";
    std::cout << "  parallel " << seconds(t0, t1) << " s, serial " << seconds(t1, t2)
              << " s, match " << (kp == ks ? "yes" : "NO") << "\n";
    return 0;
}
