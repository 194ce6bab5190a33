// Tour of the symmetric-form layer: diagonalization, the invariant tuple
// (rank, signed discriminant, signature, Hasse places), equality decisions,
// and the Witt group tables over small prime fields.

#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#include "gwcor/fields.hpp"
#include "gwcor/gw.hpp"
#include "gwcor/quadspace.hpp"

using namespace gwcor;

namespace {

std::string places_str(const std::vector<Place>& ps) {
    if (ps.empty()) return "(none)";
    std::string out;
    for (const auto& pl : ps) {
        if (!out.empty()) out += ", ";
        out += pl.real ? "real" : pl.p.get_str();
    }
    return out;
}

void describe(const std::string& name, const QuadSpace<RationalField>& q) {
    const auto inv = gw_invariants(q);
    std::cout << name << ":\n"
              << "  diagonal form  <";
    const auto diag = diagonalize(q);
    for (std::size_t i = 0; i < diag.size(); ++i)
        std::cout << (i ? ", " : "") << diag[i].get_str();
    std::cout << ">\n"
              << "  rank           " << inv.rank << "\n"
              << "  signed disc    " << inv.disc.get_str() << "\n"
              << "  signature      " << inv.signature << "\n"
              << "  Hasse = -1 at  " << places_str(inv.hasse_minus) << "\n";
}

} // namespace

int main() {
    const RationalField Q;

    describe("hyperbolic plane [[0,1],[1,0]]",
             make_quadspace(Q, mat_make(Q, 2, 2, {0, 1, 1, 0})));
    describe("A2 form [[2,1],[1,2]]",
             make_quadspace(Q, mat_make(Q, 2, 2, {2, 1, 1, 2})));
    describe("negative plane <-1,-1>", diag_space(Q, {-1, -1}));

    // <2,-2> and <1,-1> are congruent even though their matrices differ.
    const auto a = diag_space(Q, {2, -2});
    const auto b = diag_space(Q, {1, -1});
    std::cout << "\n<2,-2> equals <1,-1>:          "
              << (gw_equal(a, b) ? "yes" : "no") << "\n";

    // <1,1> and <3,3> share rank, discriminant and signature; only the
    // 2-adic and 3-adic symbols tell them apart.
    const auto c = diag_space(Q, {1, 1});
    const auto d = diag_space(Q, {3, 3});
    std::cout << "<1,1> equals <3,3>:            "
              << (gw_equal(c, d) ? "yes" : "no") << "\n";

    // Witt equivalence discards split planes.
    const auto e = diag_space(Q, {5, 1, -1});
    const auto f = diag_space(Q, {5});
    std::cout << "<5,1,-1> Witt-equal to <5>:    "
              << (witt_equal(e, f) ? "yes" : "no") << "\n";

    for (unsigned long p : {3UL, 5UL, 7UL}) {
        const auto table = witt_table(p);
        std::cout << "\nWitt group of F" << p << ": " << table.group
                  << "  (order of <1>: " << table.unit_class_order << ")\n";
        std::cout << "  addition table:\n";
        for (const auto& row : table.add) {
            std::cout << "   ";
            for (int v : row) std::cout << ' ' << v;
            std::cout << "\n";
        }
    }
    return 0;
}
