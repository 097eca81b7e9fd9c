// Prints the first rows of the Lah triangle three ways: recurrence table,
// closed form, and as path weights in the layered network.

#include <iostream>

#include "lahnet/lahnet.hpp"

int main() {
    const std::size_t n = 8;

    const lahnet::LahTable table = lahnet::lah_recurrence_table(n);
    std::cout << "triangle from the recurrence:\n" << lahnet::format_triangle(table);

    std::cout << "\nsame numbers as network path weights:\n";
    const lahnet::ExactMatrix W = lahnet::weight_matrix(lahnet::lah_network(n));
    for (std::size_t r = 1; r <= n; ++r) {
        std::cout << r << ":";
        for (std::size_t k = 1; k <= r; ++k) std::cout << " " << W.at(r, k);
        std::cout << "\n";
    }

    std::cout << "\nclosed form spot checks:\n";
    for (std::size_t m : {std::size_t(4), std::size_t(6), std::size_t(8)})
        std::cout << "  L(" << m << ",2) = " << lahnet::lah_closed_form(m, 2) << "\n";

    const lahnet::IdentityReport identity = lahnet::verify_polynomial_identity(n);
    std::cout << "\nrising factorial expands over falling factorials at n = " << n << ": "
              << (identity.holds ? "yes" : "NO") << "\n";
    return 0;
}
