// A short walk through the library: the 7-core generating function, the
// two sextenary counts, and the bounds that relate them.

#include <iostream>

#include <sevencore/sevencore.hpp>

int main()
{
    using namespace sevencore;

    constexpr std::size_t order = 30;
    const auto a7 = a_t_series(7, order);
    std::cout << "7-cores, n = 0.." << order << ":\n  " << a7 << "\n\n";

    // b(n) = [q^(n+2)] q^3 psi^3(q) psi^3(q^7), read off the closed form.
    std::cout << " n   a_7(n)   b(n)   b(n) <= a_7(n) <= 2b(n)\n";
    for (std::uint64_t n = 0; n <= 20; ++n) {
        const auto b = closed_psi(n + 2);
        const bool within = b <= a7[n] && a7[n] <= 2 * b;
        std::cout << (n < 10 ? " " : "") << n << "   " << a7[n] << "   " << b << "   " << (within ? "yes" : "no")
                  << '\n';
    }

    std::cout << "\nx^2+y^2+z^2+7(s^2+t^2+u^2) = n\n";
    for (std::uint64_t n : {1, 7, 14, 100}) {
        std::cout << "  n = " << n << ": lattice " << count_sextenary(n).count << ", closed form " << closed_phi(n)
                  << '\n';
    }

    const auto f = factorize7(std::uint64_t{2} * 7 * 7 * 11 * 11 * 3 * 3);
    std::cout << "\nn = " << f.n << ": L = " << coef_L(f) << ", K = " << coef_K(f) << ", M = " << coef_M(f) << '\n';

    const auto report = check_theorem1(2000);
    std::cout << "\nupper bound for a_7 up to 2000: " << to_string(report.status) << '\n';
    return report.verified() ? 0 : 1;
}
