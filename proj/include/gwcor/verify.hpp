// The named verification suite and its seeded random generators.
//
// Every driver here checks one operation-level identity end to end and is
// shared by the `verify` subcommand of the command-line tool (small, fast
// grids) and by the acceptance program (full grids).  All randomness flows
// from an explicit 64-bit seed through a fixed engine, so a run is fully
// reproducible; each suite row reseeds from (seed, row name) and is therefore
// independent of row order.

#pragma once

#include <cstdint>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gwcor/cancel.hpp"
#include "gwcor/correspondence.hpp"
#include "gwcor/errors.hpp"
#include "gwcor/fields.hpp"
#include "gwcor/gw.hpp"
#include "gwcor/quadspace.hpp"
#include "gwcor/residue.hpp"

namespace gwcor {

// ---------------------------------------------------------------------------
// Seeded randomness
// ---------------------------------------------------------------------------

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // Uniform-ish integer in [lo, hi]; the tiny modulo bias is irrelevant for
    // test-input generation and keeps results identical across platforms.
    long pick(long lo, long hi) {
        return lo + static_cast<long>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 eng_;
};

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

template <class K>
typename K::Elem rand_nonzero(const K& k, Rng& rng) {
    if constexpr (K::is_finite) {
        return k.from_long(1 + static_cast<long>(rng.raw() %
                                                 (k.modulus() - 1)));
    } else {
        long v = rng.pick(-9, 9);
        if (v == 0) v = 1;
        return k.from_long(v);
    }
}

// ---------------------------------------------------------------------------
// Random valid correspondences
// ---------------------------------------------------------------------------

namespace gendetail {

// Congruence moves G -> V^t G V, U -> V^-1 U V by elementary invertible V
// over the Laurent ring; these preserve validity and every intrinsic
// invariant while scrambling the matrices.
template <class K>
void random_congruence_moves(Correspondence<K>& c, Rng& rng, std::size_t moves) {
    const LaurentRing<K> R{c.k};
    const std::size_t r = c.rank;
    if (r == 0) return;
    for (std::size_t mv = 0; mv < moves; ++mv) {
        auto V = mat_zero(R, r, r);
        auto Vinv = mat_zero(R, r, r);
        for (std::size_t i = 0; i < r; ++i) V.at(i, i) = Vinv.at(i, i) = R.one();
        if (r >= 2 && rng.raw() % 2 == 0) {
            // Transvection I + L * E_ij.
            const std::size_t i = static_cast<std::size_t>(rng.pick(0, static_cast<long>(r) - 1));
            std::size_t j = static_cast<std::size_t>(rng.pick(0, static_cast<long>(r) - 2));
            if (j >= i) ++j;
            const auto L = R.monomial(rand_nonzero(c.k, rng), rng.pick(-1, 1));
            V.at(i, j) = L;
            Vinv.at(i, j) = R.neg(L);
        } else {
            // Scaling by a unit monomial at one index.
            const std::size_t i = static_cast<std::size_t>(rng.pick(0, static_cast<long>(r) - 1));
            const auto u = R.monomial(rand_nonzero(c.k, rng), rng.pick(-1, 1));
            V.at(i, i) = u;
            Vinv.at(i, i) = R.inv(u);
        }
        c.gram = mat_mul(R, mat_transpose(V), mat_mul(R, c.gram, V));
        if (c.target == AffineModel::Gm)
            c.action = mat_mul(R, Vinv, mat_mul(R, c.action, V));
    }
    check_valid(c, "random correspondence generator");
}

} // namespace gendetail

// A random valid correspondence Gm -> Gm of rank 1..max_rank: diagonal unit
// Gram and diagonal monomial action (exponents in [0, max_action_exp], so the
// stability bound stays below max_action_exp + 1), scrambled by congruence
// moves.
template <class K>
Correspondence<K> rand_corr(const K& k, Rng& rng, std::size_t max_rank,
                            long max_action_exp = 1) {
    const LaurentRing<K> R{k};
    const std::size_t r = static_cast<std::size_t>(rng.pick(1, static_cast<long>(max_rank)));
    auto G = mat_zero(R, r, r);
    auto U = mat_zero(R, r, r);
    for (std::size_t i = 0; i < r; ++i) {
        G.at(i, i) = R.monomial(rand_nonzero(k, rng), rng.pick(-1, 1));
        U.at(i, i) = R.monomial(rand_nonzero(k, rng), rng.pick(0, max_action_exp));
    }
    Correspondence<K> c{k, AffineModel::Gm, AffineModel::Gm, r, std::move(G),
                        std::move(U)};
    gendetail::random_congruence_moves(c, rng, static_cast<std::size_t>(rng.pick(0, 2)));
    return c;
}

// A random metabolic correspondence: an orthogonal sum of rank-2 planes, each
// built around a Lagrangian line that the action maps into itself (a genuine
// Lagrangian subobject needs invariance under the module structure, not just
// isotropy for the pairing).  Two plane shapes:
//   - split shape: Gram diag(a, -a), action [[s-b, b], [-b, s+b]], which is
//     self-adjoint for any b, fixes the line span(e1 + e2) (image s*(e1+e2)),
//     and has determinant s^2;
//   - hyperbolic shape: Gram [[0, h], [h, 0]], action [[s, w], [0, s]],
//     self-adjoint for any w, fixing span(e1).
// Both shapes have characteristic polynomial (x - s)^2, so with one shared
// monomial exponent for the eigenvalues s the stability bound stays at that
// exponent and shifts n >= 2 remain admissible.  Congruence moves transport
// the Lagrangian along.
template <class K>
Correspondence<K> rand_metabolic_corr(const K& k, Rng& rng, long max_action_exp = 1) {
    const LaurentRing<K> R{k};
    const std::size_t planes = rng.raw() % 5 == 0 ? 2 : 1;
    const std::size_t r = 2 * planes;
    const long exp = rng.pick(0, max_action_exp);
    auto G = mat_zero(R, r, r);
    auto U = mat_zero(R, r, r);
    for (std::size_t b = 0; b < planes; ++b) {
        const std::size_t i = 2 * b;
        const auto s = R.monomial(rand_nonzero(k, rng), exp);
        const auto noise = rng.raw() % 2 == 0
                               ? R.zero()
                               : R.monomial(rand_nonzero(k, rng), rng.pick(-1, 1));
        if (rng.raw() % 2 == 0) {
            const auto a = R.monomial(rand_nonzero(k, rng), rng.pick(-1, 1));
            G.at(i, i) = a;
            G.at(i + 1, i + 1) = R.neg(a);
            U.at(i, i) = R.sub(s, noise);
            U.at(i, i + 1) = noise;
            U.at(i + 1, i) = R.neg(noise);
            U.at(i + 1, i + 1) = R.add(s, noise);
        } else {
            const auto h = R.monomial(rand_nonzero(k, rng), rng.pick(-1, 1));
            G.at(i, i + 1) = h;
            G.at(i + 1, i) = h;
            U.at(i, i) = s;
            U.at(i, i + 1) = noise;
            U.at(i + 1, i + 1) = s;
        }
    }
    Correspondence<K> c{k, AffineModel::Gm, AffineModel::Gm, r, std::move(G),
                        std::move(U)};
    gendetail::random_congruence_moves(c, rng, static_cast<std::size_t>(rng.pick(0, 3)));
    return c;
}

// ---------------------------------------------------------------------------
// Drivers (one identity each; shared by verify and acceptance)
// ---------------------------------------------------------------------------

template <class K>
std::vector<std::pair<std::string, QuadSpace<K>>> standard_forms(const K& k,
                                                                 bool full) {
    std::vector<std::pair<std::string, QuadSpace<K>>> out;
    out.emplace_back("<1>", diag_space(k, {k.one()}));
    out.emplace_back("<-1>", diag_space(k, {k.neg(k.one())}));
    if (full) {
        out.emplace_back("<2>", diag_space(k, {k.from_long(2)}));
        out.emplace_back("<1,3>", diag_space(k, {k.one(), k.from_long(3)}));
    }
    out.emplace_back("hyperbolic", hyperbolic_space(k));
    return out;
}

// Round-trip identity: the sum-level map on a boxed constant form equals
// beta_n times the form's class, with beta_n calibrated once per (field, n)
// and constant across forms.
template <class K>
bool drv_left_inverse(const K& k,
                      const std::vector<std::pair<std::string, QuadSpace<K>>>& forms,
                      const std::vector<long>& ns, std::string& detail) {
    for (const long n : ns) {
        const auto beta = beta_calibrate(k, n);
        for (const auto& [label, phi] : forms) {
            const auto rep = left_inverse_check(phi, n);
            if (!rep.pass || !k.eq(rep.beta, beta)) {
                detail = "failed for " + label + ", n=" + std::to_string(n) +
                         " (beta=" + k.str(rep.beta) + ")";
                return false;
            }
        }
    }
    return true;
}

// Metabolic inputs land on the zero Witt class.  Even iterations box a
// visibly split constant form (Q + (-1)*Q, Lagrangian the graph of the
// identity, action t*I); odd iterations draw from the richer plane generator.
template <class K>
bool drv_metabolic(const K& k, std::uint64_t seed, std::size_t count,
                   const std::vector<long>& ns, std::string& detail) {
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        Correspondence<K> c = [&] {
            if (i % 2 != 0) return rand_metabolic_corr(k, rng);
            std::vector<typename K::Elem> d;
            for (long j = rng.pick(1, 2); j > 0; --j) d.push_back(rand_nonzero(k, rng));
            const auto q = diag_space(k, d);
            return boxtimes_gm(direct_sum(q, scale(k.neg(k.one()), q)));
        }();
        for (const long n : ns) {
            if (n <= stability_bound(c).n_p) continue; // generator keeps this rare
            const auto cls = rho_n(c, n);
            if (!witt_zero(cls)) {
                detail = "metabolic input " + std::to_string(i) +
                         " gave a nonzero Witt class at n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

// Fiber identity at off-diagonal points.
template <class K>
bool drv_permutation(const K& k, std::uint64_t seed, std::size_t count,
                     ResidueMode mode, std::string& detail) {
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const auto x = rand_nonzero(k, rng);
        auto y = rand_nonzero(k, rng);
        while (k.eq(x, y)) y = rand_nonzero(k, rng);
        const auto rep = permutation_fiber_check(k, x, y, mode);
        if (!rep.pass()) {
            detail = "failed at (" + k.str(x) + ", " + k.str(y) + "): split=" +
                     (rep.pass_split ? "yes" : "no") + " metabolic=" +
                     (rep.pass_metabolic ? "yes" : "no");
            return false;
        }
    }
    return true;
}

// Plus norms are exactly (t^n - 1)^rank; minus norms above the stability
// bound are nonzero and normalize to a monic polynomial with a nonzero
// constant term.
template <class K>
bool drv_norm_identities(const K& k, std::uint64_t seed, std::size_t count,
                         std::string& detail) {
    Rng rng(seed);
    const LaurentRing<K> R{k};
    for (std::size_t i = 0; i < count; ++i) {
        const auto c = rand_corr(k, rng, 3);
        const long base = stability_bound(c).n_p;
        for (const long n : {base + 1, base + 2}) {
            const auto dp = mat_det(R, mf_matrix(c, fspec_plus(n)));
            auto expected = R.one();
            const auto tn1 = R.sub(R.t_power(n), R.one());
            for (std::size_t e = 0; e < c.rank; ++e) expected = R.mul(expected, tn1);
            if (!R.eq(dp, expected)) {
                detail = "plus norm mismatch at input " + std::to_string(i) +
                         ", n=" + std::to_string(n);
                return false;
            }
            const auto dm = mat_det(R, mf_matrix(c, fspec_minus(n)));
            if (R.is_zero(dm)) {
                detail = "minus norm vanished above the stability bound at input " +
                         std::to_string(i) + ", n=" + std::to_string(n);
                return false;
            }
            const auto nf = laurent_normalize(R, dm);
            if (!pol_is_monic(k, nf.monic) || k.is_zero(nf.monic.c[0])) {
                detail = "minus norm failed to normalize at input " +
                         std::to_string(i) + ", n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

// The isolated unit-section term contributes the zero class.
template <class K>
bool drv_unit_section(const K& k,
                      const std::vector<std::pair<std::string, QuadSpace<K>>>& forms,
                      const std::vector<long>& ns, std::string& detail) {
    const auto e = unit_gm(k);
    for (const auto& [label, phi] : forms)
        for (const long n : ns) {
            const auto term = compose(e, compose(boxtimes_gm(phi), e));
            const auto cls = rho_n(term, n);
            if (!gw_equal(cls, class_zero(k))) {
                detail = "unit-section term is nonzero for " + label +
                         ", n=" + std::to_string(n);
                return false;
            }
        }
    return true;
}

// Cofactor and radical identities: the adjugate identity is re-checked
// explicitly and the reduction pipeline (whose radical bookkeeping is
// asserted internally on every run) completes on random inputs.
template <class K>
bool drv_cofactor_radical(const K& k, std::uint64_t seed, std::size_t count,
                          std::string& detail) {
    Rng rng(seed);
    const LaurentRing<K> R{k};
    for (std::size_t i = 0; i < count; ++i) {
        const auto c = rand_corr(k, rng, 2);
        const long n = stability_bound(c).n_p + 1 + rng.pick(0, 1);
        for (const auto& f : {fspec_plus(n), fspec_minus(n)}) {
            const auto mf = mf_matrix(c, f);
            const auto g = adjugate_g(c, f); // asserts m_f g = N I and self-adjointness
            auto nI = mat_zero(R, c.rank, c.rank);
            const auto d = det_norm(c, f);
            for (std::size_t t = 0; t < c.rank; ++t) nI.at(t, t) = d;
            if (!mat_eq(R, mat_mul(R, mf, g), nI)) {
                detail = "cofactor identity failed at input " + std::to_string(i);
                return false;
            }
        }
        const auto bt = make_bitriple(c, n);
        (void)rho_triple(c, bt.plus);
        (void)rho_triple(c, bt.minus);
    }
    return true;
}

// Witt group tables of the first three odd prime fields.
inline bool drv_witt_tables(std::string& detail) {
    const auto t3 = witt_table(3);
    const auto t5 = witt_table(5);
    const auto t7 = witt_table(7);
    if (t3.group != "Z/4" || t5.group != "Z/2 x Z/2" || t7.group != "Z/4") {
        detail = "got " + t3.group + ", " + t5.group + ", " + t7.group;
        return false;
    }
    return true;
}

// Equality decision vs. exhaustive congruence search: enumerate every
// invertible symmetric matrix over F_p up to the given rank, flood-fill the
// congruence orbits under elementary generators, and demand that the
// invariant-based decision agrees with orbit membership everywhere.
inline bool drv_gw_oracle(std::uint64_t p, std::size_t max_rank, std::string& detail) {
    const PrimeField k(p);
    using E = PrimeField::Elem;
    for (std::size_t r = 1; r <= max_rank; ++r) {
        const std::size_t tri = r * (r + 1) / 2;
        std::size_t total = 1;
        for (std::size_t t = 0; t < tri; ++t) total *= p;

        const auto decode = [&](std::size_t code) {
            Mat<E> g(r, r, 0);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = i; j < r; ++j) {
                    g.at(i, j) = g.at(j, i) = static_cast<E>(code % p);
                    code /= p;
                }
            return g;
        };
        const auto encode = [&](const Mat<E>& g) {
            std::size_t code = 0, mult = 1;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = i; j < r; ++j) {
                    code += static_cast<std::size_t>(g.at(i, j)) * mult;
                    mult *= p;
                }
            return code;
        };

        // Congruence generators: transvections and one-axis scalings.
        std::vector<Mat<E>> gens;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                if (i == j) continue;
                for (E c = 1; c < p; ++c) {
                    auto a = mat_identity(k, r);
                    a.at(i, j) = c;
                    gens.push_back(std::move(a));
                }
            }
        for (std::size_t i = 0; i < r; ++i)
            for (E c = 2; c < p; ++c) {
                auto a = mat_identity(k, r);
                a.at(i, i) = c;
                gens.push_back(std::move(a));
            }

        std::vector<int> orbit(total, -1);
        std::vector<std::size_t> reps;
        for (std::size_t code = 0; code < total; ++code) {
            if (orbit[code] >= 0) continue;
            const auto g = decode(code);
            if (k.is_zero(mat_det(k, g))) continue;
            const int id = static_cast<int>(reps.size());
            reps.push_back(code);
            orbit[code] = id;
            std::queue<std::size_t> bfs;
            bfs.push(code);
            while (!bfs.empty()) {
                const auto cur = decode(bfs.front());
                bfs.pop();
                for (const auto& a : gens) {
                    const auto nb = mat_mul(k, mat_transpose(a), mat_mul(k, cur, a));
                    const auto nc = encode(nb);
                    if (orbit[nc] < 0) {
                        orbit[nc] = id;
                        bfs.push(nc);
                    }
                }
            }
        }

        // Membership agreement on every invertible matrix, and separation of
        // distinct orbits.
        std::vector<QuadSpace<PrimeField>> rep_spaces;
        rep_spaces.reserve(reps.size());
        for (const auto rc : reps) rep_spaces.push_back(make_quadspace(k, decode(rc)));
        for (std::size_t code = 0; code < total; ++code) {
            if (orbit[code] < 0) continue;
            const auto q = make_quadspace(k, decode(code));
            for (std::size_t o = 0; o < reps.size(); ++o) {
                const bool same_orbit = orbit[code] == static_cast<int>(o);
                if (gw_equal(q, rep_spaces[o]) != same_orbit) {
                    detail = "disagreement at p=" + std::to_string(p) +
                             ", rank=" + std::to_string(r) +
                             ", code=" + std::to_string(code);
                    return false;
                }
            }
        }
    }
    return true;
}

// Two distinct paddings to the same (n, m) reduce to the same class.
template <class K>
bool drv_padding_independence(const K& k, std::uint64_t seed, std::size_t count,
                              std::string& detail) {
    Rng rng(seed);
    const LaurentRing<K> R{k};
    for (std::size_t i = 0; i < count; ++i) {
        const auto c = rand_corr(k, rng, 2);
        const long n = stability_bound(c).n_p + 1;
        const long m_canonical =
            std::max(R.top_degree(det_norm(c, fspec_plus(n))),
                     R.top_degree(det_norm(c, fspec_minus(n))));
        const long m = m_canonical + 1 + rng.pick(0, 1);
        const auto bt = make_bitriple(c, n, m);

        for (const auto& canonical : {bt.plus, bt.minus}) {
            // Alternative bottom coefficient: differs from the canonical
            // padding, stays invertible.
            const auto nf = laurent_normalize(R, det_norm(c, canonical.f));
            const auto n0 = nf.monic.c[0];
            typename K::Elem eps = k.one();
            if (k.eq(n0, k.one()) || k.eq(n0, k.neg(k.one()))) eps = k.neg(n0);
            typename K::Elem other = k.zero();
            for (long cand = 1; cand <= 4; ++cand) {
                const auto e = k.from_long(cand);
                if (!k.is_zero(e) && !k.eq(e, eps)) {
                    other = e;
                    break;
                }
            }
            const auto alt = make_triple_padded(c, canonical.f, m, other);
            const auto a = rho_triple(c, canonical);
            const auto b = rho_triple(c, alt);
            if (!gw_equal(a, b)) {
                detail = "paddings disagree at input " + std::to_string(i) +
                         " (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
                return false;
            }
        }
    }
    return true;
}

// Spectator naturality of the boxed pipeline.
template <class K>
bool drv_naturality(const K& k,
                    const std::vector<std::pair<std::string, QuadSpace<K>>>& forms,
                    long n, std::string& detail) {
    (void)k;
    for (const auto& [label, phi] : forms) {
        const auto rep = naturality_boxtimes_check(phi, n);
        if (!rep.pass) {
            detail = "spectator comparison failed for " + label;
            return false;
        }
    }
    return true;
}

// The two residue functionals disagree exactly as documented: the coefficient
// functional matches the split form at (1, -1) over Q, the quotient-trace
// functional does not.
inline bool drv_residue_discrimination(std::string& detail) {
    const RationalField q;
    const auto good = permutation_fiber_check(q, mpq_class(1), mpq_class(-1),
                                              ResidueMode::coefficient);
    const auto bad = permutation_fiber_check(q, mpq_class(1), mpq_class(-1),
                                             ResidueMode::junior_trace);
    if (!good.pass()) {
        detail = "coefficient functional failed at (1, -1)";
        return false;
    }
    if (bad.pass()) {
        detail = "quotient-trace functional unexpectedly passed at (1, -1)";
        return false;
    }
    return true;
}

// Composition with the identity is literally the identity on matrices.
template <class K>
bool drv_compose_identity(const K& k, std::uint64_t seed, std::size_t count,
                          std::string& detail) {
    Rng rng(seed);
    const LaurentRing<K> R{k};
    const auto id = identity_gm(k);
    for (std::size_t i = 0; i < count; ++i) {
        const auto c = rand_corr(k, rng, 3);
        const auto l = compose(id, c);
        const auto r = compose(c, id);
        const bool ok = l.rank == c.rank && r.rank == c.rank &&
                        mat_eq(R, l.gram, c.gram) && mat_eq(R, l.action, c.action) &&
                        mat_eq(R, r.gram, c.gram) && mat_eq(R, r.action, c.action);
        if (!ok) {
            detail = "identity law failed at input " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// The residue pairing at distinct simple roots equals its split diagonal
// description.
template <class K>
bool drv_residue_split(const K& k, std::uint64_t seed, std::size_t count,
                       std::string& detail) {
    Rng rng(seed);
    const LaurentRing<K> R{k};
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t deg = static_cast<std::size_t>(rng.pick(2, 3));
        std::vector<typename K::Elem> roots;
        while (roots.size() < deg) {
            const auto x = rand_nonzero(k, rng);
            bool dup = false;
            for (const auto& rt : roots) dup = dup || k.eq(rt, x);
            if (!dup) roots.push_back(x);
        }
        auto N = R.one();
        for (const auto& rt : roots)
            N = R.mul(N, R.from_pol(pol_make(k, {k.neg(rt), k.one()})));
        const auto split = split_at_simple_roots(R, N);
        const auto rs = residue_space(R, N);
        if (!gw_equal(rs.space, diag_space(k, split))) {
            detail = "split description mismatch at input " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// The named suite
// ---------------------------------------------------------------------------

struct VerifyCase {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace verifydetail {

template <class F>
void add_case(std::vector<VerifyCase>& out, const std::string& name, F&& fn) {
    VerifyCase c{name, false, ""};
    try {
        c.pass = fn(c.detail);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = e.what();
    }
    out.push_back(std::move(c));
}

template <class K>
void add_field_cases(std::vector<VerifyCase>& out, const K& k,
                     const std::string& tag, std::uint64_t seed) {
    const auto row_seed = [&](const std::string& name) {
        return seed ^ fnv1a(name + "-" + tag);
    };
    add_case(out, "left-inverse-" + tag, [&](std::string& d) {
        return drv_left_inverse(k, standard_forms(k, false), {2}, d);
    });
    add_case(out, "metabolic-preservation-" + tag, [&](std::string& d) {
        return drv_metabolic(k, row_seed("metabolic"), 5, {2}, d);
    });
    add_case(out, "permutation-fiber-" + tag, [&](std::string& d) {
        return drv_permutation(k, row_seed("permutation"), 8,
                               ResidueMode::coefficient, d);
    });
    add_case(out, "norm-identities-" + tag, [&](std::string& d) {
        return drv_norm_identities(k, row_seed("norms"), 6, d);
    });
    add_case(out, "cofactor-radical-" + tag, [&](std::string& d) {
        return drv_cofactor_radical(k, row_seed("cofactor"), 3, d);
    });
    add_case(out, "unit-section-vanishing-" + tag, [&](std::string& d) {
        return drv_unit_section(k, standard_forms(k, false), {2}, d);
    });
    add_case(out, "padding-independence-" + tag, [&](std::string& d) {
        return drv_padding_independence(k, row_seed("padding"), 3, d);
    });
    add_case(out, "naturality-spectator-" + tag, [&](std::string& d) {
        return drv_naturality(k, standard_forms(k, false), 2, d);
    });
    add_case(out, "composition-identity-" + tag, [&](std::string& d) {
        return drv_compose_identity(k, row_seed("compose"), 4, d);
    });
    add_case(out, "residue-split-" + tag, [&](std::string& d) {
        return drv_residue_split(k, row_seed("split"), 5, d);
    });
}

} // namespace verifydetail

// The full named suite at verification scale (seconds, not minutes).  Rows
// are keyed by the operation they check; the acceptance program runs the same
// drivers on the full grids.
inline std::vector<VerifyCase> run_verify_suite(std::uint64_t seed) {
    std::vector<VerifyCase> out;
    verifydetail::add_case(out, "witt-group-tables",
                           [&](std::string& d) { return drv_witt_tables(d); });
    verifydetail::add_case(out, "gw-equality-exhaustive-f3", [&](std::string& d) {
        return drv_gw_oracle(3, 3, d);
    });
    verifydetail::add_case(out, "residue-mode-discrimination", [&](std::string& d) {
        return drv_residue_discrimination(d);
    });
    verifydetail::add_field_cases(out, RationalField{}, "q", seed);
    verifydetail::add_field_cases(out, PrimeField(5), "f5", seed);
    verifydetail::add_field_cases(out, PrimeField(7), "f7", seed);
    return out;
}

inline bool all_pass(const std::vector<VerifyCase>& cases) {
    for (const auto& c : cases)
        if (!c.pass) return false;
    return true;
}

} // namespace gwcor
