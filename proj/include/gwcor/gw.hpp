// Grothendieck–Witt invariants, equality decision, Witt-class utilities,
// and the Witt group tables of small prime fields.
//
// Equality of symmetric bilinear forms is decided by complete invariant
// tuples: (rank, discriminant class) over a finite field, and (rank,
// signature, signed discriminant class, Hasse symbols at all relevant
// places) over Q — the strong Hasse–Minkowski local–global principle makes
// the rational tuple complete.  Formal differences are compared through
// cross addition, which is exact by Witt cancellation.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "gwcor/fields.hpp"
#include "gwcor/hilbert.hpp"
#include "gwcor/quadspace.hpp"

namespace gwcor {

// ---------------------------------------------------------------------------
// Invariants
// ---------------------------------------------------------------------------

template <class K>
struct GWInvariants {
    std::size_t rank = 0;
    typename K::Elem disc{};        // canonical square-class representative of
                                    // the signed discriminant
    long signature = 0;             // rationals only; 0 over finite fields
    std::vector<Place> hasse_minus; // rationals only: the sorted places where
                                    // the Hasse symbol equals -1
};

namespace detail {

// Signed discriminant of a diagonalization: (-1)^{r(r-1)/2} * prod(d_i),
// reduced to its canonical square-class representative.
template <class K>
typename K::Elem signed_disc(const K& k, const std::vector<typename K::Elem>& d) {
    typename K::Elem det = k.one();
    for (const auto& e : d) det = k.mul(det, e);
    const std::size_t r = d.size();
    if (((r * (r - 1)) / 2) % 2 == 1) det = k.neg(det);
    return k.square_class(det);
}

inline std::vector<Place> hasse_minus_places(const RationalField& k,
                                             const std::vector<mpq_class>& diag) {
    // Work with square-class representatives: Hilbert symbols only depend on
    // the arguments up to squares, and square-free integers keep the place
    // set small.
    std::vector<mpq_class> reps;
    reps.reserve(diag.size());
    for (const auto& d : diag) reps.push_back(k.square_class(d));

    std::vector<Place> places = {Place::at_real(), Place::at_prime(2)};
    for (const auto& e : reps)
        for (const auto& p : odd_prime_divisors(e.get_num()))
            if (std::find(places.begin(), places.end(), Place{false, p}) == places.end())
                places.push_back(Place{false, p});
    std::sort(places.begin(), places.end());

    std::vector<Place> minus;
    for (const auto& v : places) {
        int s = 1;
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                s *= hilbert_symbol(reps[i], reps[j], v);
        if (s == -1) minus.push_back(v);
    }
    return minus;
}

} // namespace detail

template <class K>
GWInvariants<K> gw_invariants(const QuadSpace<K>& q) {
    const auto diag = diagonalize(q);
    GWInvariants<K> inv;
    inv.rank = diag.size();
    inv.disc = detail::signed_disc(q.k, diag);
    if constexpr (!K::is_finite) {
        for (const auto& d : diag) inv.signature += (d > 0) ? 1 : -1;
        inv.hasse_minus = detail::hasse_minus_places(q.k, diag);
    }
    return inv;
}

template <class K>
bool invariants_equal(const K& k, const GWInvariants<K>& a, const GWInvariants<K>& b) {
    if (a.rank != b.rank) return false;
    if (!k.eq(a.disc, b.disc)) return false;
    if constexpr (!K::is_finite) {
        if (a.signature != b.signature) return false;
        if (a.hasse_minus != b.hasse_minus) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Equality of spaces and classes
// ---------------------------------------------------------------------------

template <class K>
bool gw_equal(const QuadSpace<K>& a, const QuadSpace<K>& b) {
    require(same_field(a.k, b.k), "comparing forms over different fields");
    return invariants_equal(a.k, gw_invariants(a), gw_invariants(b));
}

// Formal difference [pos] - [neg] of isometry classes.
template <class K>
struct GWClass {
    QuadSpace<K> pos, neg;

    long rank() const {
        return static_cast<long>(pos.rank()) - static_cast<long>(neg.rank());
    }
};

template <class K>
GWClass<K> class_of(const QuadSpace<K>& q) {
    return GWClass<K>{q, QuadSpace<K>{q.k, Mat<typename K::Elem>(0, 0, q.k.zero())}};
}

template <class K>
GWClass<K> class_zero(const K& k) {
    QuadSpace<K> none{k, Mat<typename K::Elem>(0, 0, k.zero())};
    return GWClass<K>{none, none};
}

template <class K>
GWClass<K> class_add(const GWClass<K>& a, const GWClass<K>& b) {
    return GWClass<K>{direct_sum(a.pos, b.pos), direct_sum(a.neg, b.neg)};
}

template <class K>
GWClass<K> class_neg(const GWClass<K>& a) {
    return GWClass<K>{a.neg, a.pos};
}

template <class K>
GWClass<K> class_sub(const GWClass<K>& a, const GWClass<K>& b) {
    return class_add(a, class_neg(b));
}

template <class K>
GWClass<K> class_scale(const typename K::Elem& c, const GWClass<K>& a) {
    return GWClass<K>{scale(c, a.pos), scale(c, a.neg)};
}

// Cross addition reduces class equality to form equality; this is exact
// because isometry classes cancel in direct sums (Witt cancellation).
template <class K>
bool gw_equal(const GWClass<K>& a, const GWClass<K>& b) {
    return gw_equal(direct_sum(a.pos, b.neg), direct_sum(b.pos, a.neg));
}

// ---------------------------------------------------------------------------
// Witt-class utilities
// ---------------------------------------------------------------------------

// A space is metabolic iff it has even rank and is isometric to the
// corresponding sum of hyperbolic planes (over a field of char != 2).
template <class K>
bool is_metabolic(const QuadSpace<K>& q) {
    if (q.rank() % 2 != 0) return false;
    return gw_equal(q, repeat_sum(hyperbolic_space(q.k), q.rank() / 2));
}

// The Witt class of [pos] - [neg] vanishes iff pos + (-1)*neg is metabolic.
template <class K>
bool witt_zero(const GWClass<K>& a) {
    return is_metabolic(direct_sum(a.pos, scale(a.pos.k.neg(a.pos.k.one()), a.neg)));
}

template <class K>
bool witt_equal(const QuadSpace<K>& a, const QuadSpace<K>& b) {
    return witt_zero(class_sub(class_of(a), class_of(b)));
}

// ---------------------------------------------------------------------------
// Witt group of a small prime field
// ---------------------------------------------------------------------------

struct WittTable {
    std::uint64_t p = 0;
    std::string group;                    // "Z/4" or "Z/2 x Z/2"
    std::vector<std::string> reps;        // printable representatives
    std::array<std::array<int, 4>, 4> add{}; // addition table over rep indices
    int unit_class_order = 0;             // order of the class of <1>
};

inline WittTable witt_table(std::uint64_t p) {
    PrimeField k(p);
    using QS = QuadSpace<PrimeField>;
    const auto u = k.least_nonresidue();
    // w is chosen so that <1, w> represents the even-rank nontrivial class.
    const auto w = (p % 4 == 1) ? u : k.one();

    std::vector<QS> reps;
    reps.push_back(QS{k, Mat<PrimeField::Elem>(0, 0, k.zero())}); // zero class
    reps.push_back(diag_space(k, {k.one()}));
    reps.push_back(diag_space(k, {u}));
    reps.push_back(diag_space(k, {k.one(), w}));

    // Witt classes over F_p are pinned down by (rank mod 2, signed
    // discriminant class); identify each representative by that pair.
    auto class_id = [&](const QS& q) {
        const auto inv = gw_invariants(q);
        return std::pair<int, bool>(static_cast<int>(inv.rank % 2), k.is_one(inv.disc));
    };
    std::vector<std::pair<int, bool>> ids;
    for (const auto& r : reps) ids.push_back(class_id(r));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            check(ids[i] != ids[j], "Witt representatives are not distinct");

    WittTable out;
    out.p = p;
    out.reps = {"0", "<1>", "<" + k.str(u) + ">", "<1," + k.str(w) + ">"};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const auto id = class_id(direct_sum(reps[i], reps[j]));
            int found = -1;
            for (std::size_t x = 0; x < 4; ++x)
                if (ids[x] == id) found = static_cast<int>(x);
            check(found >= 0, "Witt sum left the class set");
            out.add[i][j] = found;
        }

    // Order of <1> decides the group: 2 gives the Klein group, 4 the cyclic.
    int order = 1, cur = out.add[0][1];
    while (cur != 0) {
        cur = out.add[static_cast<std::size_t>(cur)][1];
        ++order;
    }
    out.unit_class_order = order;
    out.group = (order == 4) ? "Z/4" : "Z/2 x Z/2";
    check((out.group == "Z/4") == (p % 4 == 3),
          "Witt group shape disagrees with p mod 4");
    return out;
}

} // namespace gwcor
