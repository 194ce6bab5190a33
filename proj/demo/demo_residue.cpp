// Tour of the residue pairing attached to a monic polynomial modulus: the
// Gram matrix of the pairing, its diagonalization at simple roots, the two
// functional flavors, and the twisted gluing law over a product modulus.

#include <iostream>
#include <string>

#include "gwcor/fields.hpp"
#include "gwcor/gw.hpp"
#include "gwcor/poly.hpp"
#include "gwcor/quadspace.hpp"
#include "gwcor/residue.hpp"

using namespace gwcor;

namespace {

const RationalField Q;

Pol<mpq_class> from_roots(std::initializer_list<long> roots) {
    auto p = pol_one(Q);
    for (long r : roots) {
        const auto lin = pol_make(Q, {mpq_class(-r), mpq_class(1)});
        p = pol_mul(Q, p, lin);
    }
    return p;
}

std::string gram_str(const Mat<mpq_class>& g) {
    std::string out = "[";
    for (std::size_t i = 0; i < g.rows; ++i) {
        out += i ? "; " : "";
        for (std::size_t j = 0; j < g.cols; ++j)
            out += (j ? " " : "") + g.at(i, j).get_str();
    }
    return out + "]";
}

std::string diag_str(const std::vector<mpq_class>& d) {
    std::string out = "<";
    for (std::size_t i = 0; i < d.size(); ++i)
        out += (i ? ", " : "") + d[i].get_str();
    return out + ">";
}

std::string diag_str(const QuadSpace<RationalField>& q) { return diag_str(diagonalize(q)); }

} // namespace

int main() {
    const LaurentRing<RationalField> R{Q};

    // (t-1)(t-4): two simple rational roots.
    const auto n = from_roots({1, 4});
    const auto rs = residue_space(R, R.from_pol(n));
    std::cout << "modulus (t-1)(t-4)\n"
              << "  pairing gram    " << gram_str(rs.space.gram) << "\n"
              << "  split at roots  "
              << diag_str(split_at_simple_roots(R, R.from_pol(n))) << "\n";

    // Same modulus, classical scaled-trace flavor: a different form.
    const auto tr = residue_space(R, R.from_pol(n), ResidueMode::junior_trace);
    std::cout << "  trace flavor    " << gram_str(tr.space.gram) << "\n";

    // Twisted gluing: the pairing of a product modulus N1*N2 splits into the
    // pairing of each factor twisted by the other.  Plain (untwisted) pieces
    // do NOT add up; the twist is what makes the classes match.
    const auto n1 = from_roots({1});
    const auto n2 = from_roots({2});
    const auto whole = residue_space(R, R.from_pol(pol_mul(Q, n1, n2)));
    const auto tw1 = residue_space(R, R.from_pol(n1), ResidueMode::coefficient, n2);
    const auto tw2 = residue_space(R, R.from_pol(n2), ResidueMode::coefficient, n1);
    const auto plain1 = residue_space(R, R.from_pol(n1));
    const auto plain2 = residue_space(R, R.from_pol(n2));

    const auto glued = direct_sum(tw1.space, tw2.space);
    const auto untwisted = direct_sum(plain1.space, plain2.space);
    std::cout << "\nmodulus (t-1)(t-2)\n"
              << "  whole pairing         " << diag_str(whole.space) << "\n"
              << "  twisted pieces        " << diag_str(glued) << "  match: "
              << (gw_equal(whole.space, glued) ? "yes" : "no") << "\n"
              << "  untwisted pieces      " << diag_str(untwisted) << "  match: "
              << (gw_equal(whole.space, untwisted) ? "yes" : "no") << "\n";
    return 0;
}
