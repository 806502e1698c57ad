// Prints the slice simplex of a leafed n-cycle with its Ehrhart data.
//
//   slice_report 5

#include <cstdlib>
#include <iostream>

#include <lapcomp.hpp>

int main(int argc, char** argv) {
    const std::int64_t n = argc > 1 ? std::atoll(argv[1]) : 5;
    try {
        const auto s = lapcomp::build_slice_simplex(n);
        std::cout << "vertices:\n";
        for (const auto& v : s.vertices()) {
            std::cout << "  (";
            for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << v[i];
            std::cout << ")\n";
        }
        const auto data = lapcomp::h_star(s);
        std::cout << "L(0..D):";
        for (const auto& x : data.dilate_counts) std::cout << ' ' << x;
        std::cout << "\nh*:";
        for (const auto& x : data.h_star) std::cout << ' ' << x;
        std::cout << "\nEhrhart series: " << lapcomp::ehrhart_series(data).str() << '\n';
        const auto cert = lapcomp::reflexivity_by_halfspaces(n);
        std::cout << "reflexive: " << (cert.reflexive ? "yes" : "no, " + cert.reason) << '\n';
    } catch (const lapcomp::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
}
