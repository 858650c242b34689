// Acceptance suite: one pass/fail line per criterion, exit code = #failures.
// Everything is exact rational arithmetic; "pass" means exact equality.

#include "ocoh/ocoh.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace ocoh;
using namespace ocoh::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count() / 1000.0;
}

int sgn_pow(long e) { return e % 2 == 0 ? 1 : -1; }

struct DiscoveredPair {
    std::string context_name;
    OContext ctx;
    OperatorPair pair;
};

std::vector<OContext> dim1_contexts() {
    std::vector<OContext> out;
    for (long c = -1; c <= 1; ++c)
        for (long lam : {0L, c})
            for (long rho : {0L, c}) {
                if (c == 0 && (lam != 0 || rho != 0)) continue;
                BilinearMap mu(1, 1, 1), l(1, 1, 1), r(1, 1, 1);
                mu.at(0, 0, 0) = Rational(c);
                l.at(0, 0, 0) = Rational(lam);
                r.at(0, 0, 0) = Rational(rho);
                out.push_back(OContext{Algebra(1, mu), Bimodule(1, 1, l, r)});
            }
    return out;
}

LinOp op_from_mask(int alg_dim, int mod_dim, int mask) {
    LinOp t(alg_dim, mod_dim);
    for (size_t i = 0; i < t.m.size(); ++i) {
        t.m[i] = Rational(mask % 3 - 1);
        mask /= 3;
    }
    return t;
}

/// Every compatible pair with entries in {-1,0,1} over the desk-scale contexts.
std::vector<DiscoveredPair> discover_pairs() {
    std::vector<DiscoveredPair> out;
    int ctx_id = 0;
    for (const OContext& ctx : dim1_contexts()) {
        for (int m1 = 0; m1 < 3; ++m1)
            for (int m2 = 0; m2 < 3; ++m2) {
                OperatorPair p{op_from_mask(1, 1, m1), op_from_mask(1, 1, m2)};
                if (is_compatible_pair(ctx, p).pass())
                    out.push_back({"dim1#" + std::to_string(ctx_id), ctx, p});
            }
        ++ctx_id;
    }
    const std::vector<std::pair<std::string, OContext>> dim2 = {
        {"kx2-adjoint", dual_numbers_adjoint()},
        {"kx2-coadjoint", make_context(dual_numbers(), coadjoint_bimodule(dual_numbers()))},
        {"kxk-adjoint", make_context(split_plane(), adjoint_bimodule(split_plane()))},
    };
    for (const auto& [name, ctx] : dim2) {
        for (int m1 = 0; m1 < 81; ++m1)
            for (int m2 = 0; m2 < 81; ++m2) {
                OperatorPair p{op_from_mask(2, 2, m1), op_from_mask(2, 2, m2)};
                if (is_compatible_pair(ctx, p).pass()) out.push_back({name, ctx, p});
            }
    }
    return out;
}

Matrix invert(const Matrix& p) {
    const int n = p.rows();
    Matrix inv(n, n);
    for (int j = 0; j < n; ++j) {
        Vec e = zero_vec(n);
        e[j] = Rational(1);
        auto col = solve(p, e);
        if (!col) throw std::invalid_argument("invert: singular");
        for (int i = 0; i < n; ++i) inv.set(i, j, (*col)[i]);
    }
    return inv;
}

/// Random change of basis of a discovered pair: keeps every axiom exactly.
DiscoveredPair conjugate(std::mt19937_64& rng, const DiscoveredPair& d) {
    const int da = d.ctx.dim_a(), dm = d.ctx.dim_m();
    auto random_invertible = [&](int n) {
        while (true) {
            Matrix p(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) p.set(i, j, Rational(static_cast<long>(rng() % 5) - 2));
            if (rank(p) == n) return p;
        }
    };
    Matrix pa = random_invertible(da), pm = random_invertible(dm);
    Matrix pa_inv = invert(pa), pm_inv = invert(pm);

    auto conj3 = [&](const BilinearMap& b, const Matrix& in1, const Matrix& in2, const Matrix& out_inv) {
        BilinearMap nb(b.d1, b.d2, b.dout);
        for (int i = 0; i < b.d1; ++i)
            for (int j = 0; j < b.d2; ++j) {
                Vec x = zero_vec(b.d1), y = zero_vec(b.d2);
                for (int w = 0; w < b.d1; ++w) x[w] = in1.at(w, i);
                for (int w = 0; w < b.d2; ++w) y[w] = in2.at(w, j);
                Vec val = out_inv.apply(b.apply(x, y));
                for (int k = 0; k < b.dout; ++k) nb.at(i, j, k) = val[k];
            }
        return nb;
    };

    DiscoveredPair out = d;
    out.context_name = d.context_name + "-conj";
    Algebra alg(da, conj3(d.ctx.algebra.mu, pa, pa, pa_inv));
    Bimodule bim(da, dm, conj3(d.ctx.bimodule.left, pa, pm, pm_inv), conj3(d.ctx.bimodule.right, pm, pa, pm_inv));
    out.ctx = OContext{alg, bim};
    auto conj_op = [&](const LinOp& t) {
        LinOp nt(da, dm);
        for (int u = 0; u < dm; ++u) {
            Vec eu = zero_vec(dm);
            for (int w = 0; w < dm; ++w) eu[w] = pm.at(w, u);
            Vec img = pa_inv.apply(t.apply(eu));
            for (int k = 0; k < da; ++k) nt.at(k, u) = img[k];
        }
        return nt;
    };
    out.pair = OperatorPair{conj_op(d.pair.T1), conj_op(d.pair.T2)};
    return out;
}

bool report_line(int n, const char* what, bool pass, const std::string& detail = "") {
    std::printf("criterion %d [%s] %s%s%s\n", n, pass ? "PASS" : "FAIL", what, detail.empty() ? "" : " - ",
                detail.c_str());
    std::fflush(stdout);
    return pass;
}

// ---- criterion 1: bracket laws --------------------------------------------

bool criterion1() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20250808);
    bool ok = true;

    for (int t = 0; t < 200; ++t) { // derived bracket
        OContext ctx = random_context(rng);
        const int m = static_cast<int>(rng() % 3), n = static_cast<int>(rng() % 3),
                  k = static_cast<int>(rng() % 3);
        MMap P = random_mmap(rng, ctx, m), Q = random_mmap(rng, ctx, n), R = random_mmap(rng, ctx, k);
        ok &= (derived_bracket(ctx, P, Q) + derived_bracket(ctx, Q, P).scaled(Rational(sgn_pow(1L * m * n))))
                  .is_zero();
        MMap jac = derived_bracket(ctx, derived_bracket(ctx, P, Q), R).scaled(Rational(sgn_pow(1L * m * k)));
        jac += derived_bracket(ctx, derived_bracket(ctx, Q, R), P).scaled(Rational(sgn_pow(1L * n * m)));
        jac += derived_bracket(ctx, derived_bracket(ctx, R, P), Q).scaled(Rational(sgn_pow(1L * k * n)));
        ok &= jac.is_zero();
    }
    for (int t = 0; t < 200; ++t) { // lifted bracket
        OContext ctx = random_context(rng);
        const int m = static_cast<int>(rng() % 3), n = static_cast<int>(rng() % 3),
                  k = static_cast<int>(rng() % 3);
        TupleCochain X = random_tuple(rng, ctx, m), Y = random_tuple(rng, ctx, n), Z = random_tuple(rng, ctx, k);
        ok &= (lifted_bracket(ctx, X, Y) + lifted_bracket(ctx, Y, X).scaled(Rational(sgn_pow(1L * m * n))))
                  .is_zero();
        TupleCochain jac = lifted_bracket(ctx, lifted_bracket(ctx, X, Y), Z).scaled(Rational(sgn_pow(1L * m * k)));
        jac += lifted_bracket(ctx, lifted_bracket(ctx, Y, Z), X).scaled(Rational(sgn_pow(1L * n * m)));
        jac += lifted_bracket(ctx, lifted_bracket(ctx, Z, X), Y).scaled(Rational(sgn_pow(1L * k * n)));
        ok &= jac.is_zero();
    }
    for (int t = 0; t < 200; ++t) { // Gerstenhaber bracket
        const int da = 1 + static_cast<int>(rng() % 2), dm = 1 + static_cast<int>(rng() % 2);
        auto rand_map = [&](int arity) {
            const int l = static_cast<int>(rng() % (arity + 1));
            return random_homogeneous_mixed(rng, da, dm, arity, arity - 1 - l, l);
        };
        const int am = 1 + static_cast<int>(rng() % 2), an = 1 + static_cast<int>(rng() % 2),
                  ak = 1 + static_cast<int>(rng() % 2);
        MixedMap F = rand_map(am), G = rand_map(an), H = rand_map(ak);
        const int m = am - 1, n = an - 1, k = ak - 1;
        ok &= (gerstenhaber(F, G) + gerstenhaber(G, F).scaled(Rational(sgn_pow(1L * m * n)))).is_zero();
        MixedMap jac = gerstenhaber(gerstenhaber(F, G), H).scaled(Rational(sgn_pow(1L * m * k)));
        jac += gerstenhaber(gerstenhaber(G, H), F).scaled(Rational(sgn_pow(1L * n * m)));
        jac += gerstenhaber(gerstenhaber(H, F), G).scaled(Rational(sgn_pow(1L * k * n)));
        ok &= jac.is_zero();
    }
    for (int t = 0; t < 200; ++t) { // brace bracket
        const int d = 1 + static_cast<int>(rng() % 2);
        auto rand_cochain = [&](int arity) {
            DendCochain c = DendCochain::zero(d, arity);
            for (auto& f : c.labels)
                for (auto& v : f.c) v = small_rational(rng);
            return c;
        };
        const int am = 1 + static_cast<int>(rng() % 3), an = 1 + static_cast<int>(rng() % 3),
                  ak = 1 + static_cast<int>(rng() % 2);
        DendCochain F = rand_cochain(am), G = rand_cochain(an), H = rand_cochain(ak);
        const long m = am - 1, n = an - 1, k = ak - 1;
        ok &= (brace_bracket(F, G) + brace_bracket(G, F).scaled(Rational(sgn_pow(m * n)))).is_zero();
        DendCochain jac = brace_bracket(brace_bracket(F, G), H).scaled(Rational(sgn_pow(m * k)));
        jac += brace_bracket(brace_bracket(G, H), F).scaled(Rational(sgn_pow(n * m)));
        jac += brace_bracket(brace_bracket(H, F), G).scaled(Rational(sgn_pow(k * n)));
        ok &= jac.is_zero();
    }

    const double secs = seconds_since(t0);
    ok &= secs < 60.0;
    std::ostringstream detail;
    detail << "200 instances per bracket, " << secs << " s";
    return report_line(1, "graded antisymmetry + Jacobi for all four brackets", ok, detail.str());
}

// ---- criterion 2: exhaustive MC equivalences -------------------------------

bool criterion2() {
    bool ok = true;
    int cases = 0;
    for (const OContext& ctx : dim1_contexts())
        for (int m1 = 0; m1 < 3; ++m1)
            for (int m2 = 0; m2 < 3; ++m2) {
                OperatorPair p{op_from_mask(1, 1, m1), op_from_mask(1, 1, m2)};
                const bool a = is_compatible_pair(ctx, p).pass();
                TupleCochain tp = make_pair_cochain(ctx, p.T1.as_mmap(), p.T2.as_mmap());
                const bool b = lifted_bracket(ctx, tp, tp).is_zero();
                const bool c = mc_defect(ctx, mc_element(ctx, p)).is_zero();
                ok &= (a == b) && (b == c);
                ++cases;
            }
    return report_line(2, "pair compatibility == lifted MC == L-infinity MC (dim-1 exhaustive)", ok,
                       std::to_string(cases) + " cases, zero disagreements");
}

// ---- criterion 3: delta^2 = 0 as matrix compositions ------------------------

bool check_all_deltas(const OContext& ctx, const OperatorPair& p, int max_n) {
    CochainComplex co = pair_complex(ctx, p);
    CochainComplex oo = ooperator_complex(ctx, p.T1 + p.T2);
    CompatibleAlgebra ca = induced_compatible_algebra(ctx, p);
    CompatibleBimodule cb = induced_compatible_bimodule(ctx, p);
    CochainComplex cass = cass_complex(ca, cb);
    CochainComplex coa = coa_complex(ctx, p);
    CochainComplex cdend = cdend_complex(induced_dendriform(ctx, p));
    bool ok = true;
    for (int n = 0; n <= max_n; ++n) {
        ok &= (coboundary_matrix(co, n + 1) * coboundary_matrix(co, n)).is_zero();
        ok &= (coboundary_matrix(oo, n + 1) * coboundary_matrix(oo, n)).is_zero();
        ok &= (coboundary_matrix(cass, n + 1) * coboundary_matrix(cass, n)).is_zero();
        if (n >= 1) {
            ok &= (coboundary_matrix(coa, n + 1) * coboundary_matrix(coa, n)).is_zero();
            ok &= (coboundary_matrix(cdend, n + 1) * coboundary_matrix(cdend, n)).is_zero();
        }
    }
    return ok;
}

bool criterion3(const std::vector<DiscoveredPair>& discovered) {
    std::mt19937_64 rng(3333);
    bool ok = check_all_deltas(dual_numbers_adjoint(), nil_pair(), 3);

    std::vector<DiscoveredPair> dim1, dim2;
    for (const auto& d : discovered)
        (d.ctx.dim_a() == 1 ? dim1 : dim2).push_back(d);
    int done = 0;
    for (int t = 0; t < 17 && !dim1.empty(); ++t, ++done) {
        DiscoveredPair d = conjugate(rng, dim1[rng() % dim1.size()]);
        ok &= check_all_deltas(d.ctx, d.pair, 3);
    }
    for (int t = 0; t < 3 && !dim2.empty(); ++t, ++done) {
        DiscoveredPair d = conjugate(rng, dim2[rng() % dim2.size()]);
        ok &= check_all_deltas(d.ctx, d.pair, 3);
    }
    return report_line(3, "matrix-level delta o delta = 0 for all five differentials, n <= 3", ok,
                       "fixture plus " + std::to_string(done) + " random valid contexts");
}

// ---- criterion 4: chain maps ------------------------------------------------

bool criterion4() {
    std::mt19937_64 rng(4444);
    OContext ctx = dual_numbers_adjoint();
    OperatorPair p = nil_pair();
    bool ok = true;

    for (int degree = 0; degree <= 3; ++degree) // Theta
        for (int t = 0; t < 100; ++t) {
            TupleCochain x = random_tuple(rng, ctx, degree);
            MMap lhs = theta(delta_pair(ctx, p, x));
            MMap rhs = derived_bracket(ctx, (p.T1 + p.T2).as_mmap(), theta(x));
            ok &= (lhs - rhs).is_zero();
        }

    LInftyElement alpha = mc_element(ctx, p); // Theta_i
    BaseElement base_alpha = base_mc_element(ctx, p.T1 + p.T2);
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t < 100; ++t) {
            Vec coords = zero_vec(coa_dim(ctx, n));
            for (auto& c : coords) c = small_rational(rng);
            COACochain x = coa_from_coords(ctx, n, coords);
            COACochain dx = delta_coa(ctx, p, x);
            BaseElement lhs = theta_map(ctx, dx.elt);
            BaseElement rhs = base_twisted_differential(ctx, base_alpha, theta_map(ctx, x.elt), n - 2);
            const Rational sign(n % 2 == 0 ? 1 : -1);
            if (rhs.vprime) rhs.vprime = rhs.vprime->scaled(sign);
            if (rhs.abelian) rhs.abelian = rhs.abelian->scaled(sign);
            ok &= base_equal(ctx, lhs, rhs, n + 1, n);
        }

    CompatibleDendriform ind = induced_dendriform(ctx, p); // Phi
    CompatibleAlgebra tot = total_algebra(ind);
    CompatibleBimodule adj{tot.dim, tot.dim, tot.mu1, tot.mu1, tot.mu2, tot.mu2};
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t < 100; ++t) {
            CompDendCochain x = CompDendCochain::zero(2, n);
            for (auto& part : x.parts)
                for (auto& f : part.labels)
                    for (auto& v : f.c) v = small_rational(rng);
            CAssCochain lhs = delta_cass(tot, adj, phi_map(x));
            CAssCochain rhs = phi_map(delta_cdend(ind, x));
            for (size_t i = 0; i < lhs.parts.size(); ++i) ok &= (lhs.parts[i] - rhs.parts[i]).is_zero();
        }

    for (int n = 1; n <= 3; ++n) // Psi
        for (int t = 0; t < 100; ++t) {
            TupleCochain x = random_tuple(rng, ctx, n);
            CompDendCochain lhs = delta_cdend(ind, psi_map(ctx, x));
            CompDendCochain rhs = psi_map(ctx, delta_pair(ctx, p, x));
            for (size_t i = 0; i < lhs.parts.size(); ++i)
                ok &= (lhs.parts[i] + rhs.parts[i].scaled(Rational(-1))).is_zero();
        }

    return report_line(4, "Theta, Theta_i, Phi, Psi commuting squares exact", ok,
                       "100 random cochains per degree <= 3 each");
}

// ---- criterion 5: the induced-structure route -------------------------------

bool criterion5(const std::vector<DiscoveredPair>& discovered) {
    bool ok = true;
    for (const auto& d : discovered) ok &= verify_induced_iso(d.ctx, d.pair).pass();
    return report_line(5, "delta_Ass = (-1)^n [T,-] and matching cohomology dims over every discovered pair", ok,
                       std::to_string(discovered.size()) + " discovered compatible pairs");
}

// ---- criterion 6: the deformation/obstruction pipeline ----------------------

bool criterion6() {
    const auto t0 = Clock::now();
    OContext ctx = dual_numbers_adjoint();
    OperatorPair base = nil_pair();
    bool ok = true;

    CochainComplex cx = pair_complex(ctx, base);
    Matrix delta1 = coboundary_matrix(cx, 1);
    int valid = 0, extensible = 0;
    for (int m1 = 0; m1 < 81; ++m1)
        for (int m2 = 0; m2 < 81; ++m2) {
            LinOp t11 = op_from_mask(2, 2, m1), t21 = op_from_mask(2, 2, m2);
            TupleCochain z = make_pair_cochain(ctx, t11.as_mmap(), t21.as_mmap());
            const bool in_kernel = is_zero_vec(delta1.apply(tuple_to_coords(z)));
            PairDeformation d;
            d.order = 1;
            d.T1s = {base.T1, t11};
            d.T2s = {base.T2, t21};
            const bool is_deformation = check_pair_deformation(ctx, d).pass();
            if (in_kernel != is_deformation) ok = false; // order-1 validity == cocycle condition
            if (!is_deformation) continue;
            ++valid;
            TupleCochain ob = obstruction(ctx, d); // throws if the 2-cocycle check fails
            auto witness = is_extensible(ctx, d);
            if (witness) {
                ++extensible;
                PairDeformation ext = d;
                ext.order = 2;
                ext.T1s.push_back(witness->first);
                ext.T2s.push_back(witness->second);
                ok &= check_pair_deformation(ctx, ext).pass();
            } else {
                Matrix aug(delta1.rows(), delta1.cols() + 1);
                for (int r = 0; r < delta1.rows(); ++r)
                    for (const auto& [c, v] : delta1.row(r)) aug.set(r, c, v);
                Vec obc = tuple_to_coords(ob);
                for (int r = 0; r < delta1.rows(); ++r) aug.set(r, delta1.cols(), obc[r]);
                ok &= rank(aug) > rank(delta1); // the rank certificate
            }
        }
    const double secs = seconds_since(t0);
    ok &= secs < 10.0;
    ok &= valid > 0;
    std::ostringstream detail;
    detail << valid << " valid order-1 deformations, " << extensible << " extensible, " << secs << " s";
    return report_line(6, "obstruction cocycle + extension verdicts on the fixture", ok, detail.str());
}

// ---- criterion 7: the Yang-Baxter bridge ------------------------------------

bool criterion7() {
    bool ok = true;
    int solutions = 0, skew_pairs = 0;
    for (const Algebra& alg : {dual_numbers(), split_plane(), zero_algebra(2), idempotent_plane()}) {
        OContext adj = make_context(alg, adjoint_bimodule(alg));
        OContext coadj = make_context(alg, coadjoint_bimodule(alg));
        std::vector<TwoTensor> sols;
        for (int mask = 0; mask < 81; ++mask) {
            TwoTensor r(2);
            int v = mask;
            for (int i = 0; i < 4; ++i) {
                r.r[i] = Rational(v % 3 - 1);
                v /= 3;
            }
            if (!aybe_check(alg, r).pass()) continue;
            ++solutions;
            sols.push_back(r);
            ok &= is_ooperator(adj, rb_from_tensor(alg, r)).pass();
            ok &= compatible_aybe_check(alg, r, -r).pass();
        }
        for (const TwoTensor& r1 : sols)
            for (const TwoTensor& r2 : sols) {
                if (!is_skew(r1) || !is_skew(r2)) continue;
                if (!compatible_aybe_check(alg, r1, r2).pass()) continue;
                ++skew_pairs;
                ok &= is_compatible_pair(coadj, {sharp(alg, r1), sharp(alg, r2)}).pass();
            }
    }
    ok &= solutions > 0 && skew_pairs > 0;
    return report_line(7, "AYBE solutions -> Rota-Baxter operators; skew pairs -> coadjoint pairs", ok,
                       std::to_string(solutions) + " solutions, " + std::to_string(skew_pairs) + " skew pairs");
}

// ---- criterion 8: the dendriform triangle -----------------------------------

bool criterion8(const std::vector<DiscoveredPair>& discovered) {
    bool ok = true;
    for (const auto& d : discovered) {
        CompatibleDendriform cd = induced_dendriform(d.ctx, d.pair);
        CompatibleAlgebra tot = total_algebra(cd);
        CompatibleAlgebra star = induced_compatible_algebra(d.ctx, d.pair);
        ok &= tot.mu1 == star.mu1 && tot.mu2 == star.mu2;

        CompatiblePreLie pl = sub_adjacent_prelie(cd);
        auto [lie1, lie2] = prelie_to_lie(pl);
        const int n = cd.dim;
        BilinearMap sk1(n, n, n), sk2(n, n, n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int k = 0; k < n; ++k) {
                    sk1.at(x, y, k) = tot.mu1.at(x, y, k) - tot.mu1.at(y, x, k);
                    sk2.at(x, y, k) = tot.mu2.at(x, y, k) - tot.mu2.at(y, x, k);
                }
        ok &= sk1 == lie1 && sk2 == lie2;
    }
    return report_line(8, "total o induced = induced algebra; pre-Lie square commutes", ok,
                       std::to_string(discovered.size()) + " discovered pairs, tensor-exact");
}

// ---- criterion 9: regression pins -------------------------------------------

struct Pin {
    const char* complex_name;
    int degree;
    int dim;
};

// computed once through the independent oracle routes below and frozen
constexpr Pin kPins[] = {
    {"co", 0, 2},   {"co", 1, 4},   {"co", 2, 8},    // compatible O-operator complex
    {"cass", 0, 2}, {"cass", 1, 2}, {"cass", 2, 6},  // induced compatible associative
    {"coa", 0, 0},  {"coa", 1, 2},  {"coa", 2, 4},   // compatible O-operator algebra
    {"cdend", 0, 0}, {"cdend", 1, 2}, {"cdend", 2, 8}, // induced compatible dendriform
};

/// Independent oracle for delta_cOA at degrees 1 and 2: the closed-form
/// Gerstenhaber expansion, no L-infinity machinery involved.
Vec coa_oracle_apply(const OContext& ctx, const OperatorPair& p, int n, const Vec& coords) {
    const MixedMap pi = structure_element(ctx);
    const MMap t1 = p.T1.as_mmap(), t2 = p.T2.as_mmap();
    auto proj = [&](const MixedMap& m) { return project_abelian(m, ctx.dim_a(), ctx.dim_m()); };
    COACochain x = coa_from_coords(ctx, n, coords);
    COACochain out = COACochain::zero(ctx, n + 1);
    MixedMap f = x.elt.vprime ? *x.elt.vprime : MixedMap(n, ctx.dim_a(), ctx.dim_m());
    auto g2 = [&](const MixedMap& a, const MMap& b) { return gerstenhaber(a, embed_mmap(b)); };
    if (n == 1) {
        // delta(h) = ([pi,h]; ([T1,h]_G, [T2,h]_G))
        MixedMap v = gerstenhaber(pi, f);
        if (!v.is_zero()) out.elt.vprime = v;
        out.elt.a_parts = {proj(gerstenhaber(embed_mmap(t1), f)), proj(gerstenhaber(embed_mmap(t2), f))};
        return coa_to_coords(ctx, out);
    }
    if (n != 2) throw std::logic_error("coa oracle only covers degrees 1 and 2");
    // delta(f,(P1,P2)) = (-[pi,f]; tau-parts of P[[pi,Tj],Pt] + 1/2 P[[f,Ti],Tj])
    MixedMap v = gerstenhaber(pi, f).scaled(Rational(-1));
    if (!v.is_zero()) out.elt.vprime = v;
    const MMap& p1 = x.elt.a_parts[0];
    const MMap& p2 = x.elt.a_parts[1];
    auto nest = [&](const MMap& a, const MMap& b) { return proj(g2(g2(pi, a), b)); };
    auto fnest = [&](const MMap& a, const MMap& b) { return proj(g2(g2(f, a), b)); };
    MMap tau1 = nest(t1, p1) + fnest(t1, t1).scaled(Rational(1, 2));
    MMap tau2 = nest(t1, p2) + nest(t2, p1) + (fnest(t1, t2) + fnest(t2, t1)).scaled(Rational(1, 2));
    MMap tau3 = nest(t2, p2) + fnest(t2, t2).scaled(Rational(1, 2));
    out.elt.a_parts = {tau1, tau2, tau3};
    return coa_to_coords(ctx, out);
}

/// Literal box construction of the R and S maps, an oracle for the
/// closed-form arithmetic in the production code.
std::pair<int, Vec> box_rs(int m, int i, int n, int r) {
    std::vector<std::vector<int>> boxes;
    int next = 1;
    for (int b = 1; b <= m; ++b) {
        std::vector<int> box;
        const int count = b == i ? n : 1;
        for (int c = 0; c < count; ++c) box.push_back(next++);
        boxes.push_back(box);
    }
    for (int b = 0; b < m; ++b)
        for (int pos = 0; pos < static_cast<int>(boxes[static_cast<size_t>(b)].size()); ++pos)
            if (boxes[static_cast<size_t>(b)][static_cast<size_t>(pos)] == r) {
                Vec s = zero_vec(n);
                if (b + 1 == i)
                    s[static_cast<size_t>(pos)] = Rational(1);
                else
                    for (int w = 0; w < n; ++w) s[static_cast<size_t>(w)] = Rational(1);
                return {b + 1, s};
            }
    throw std::logic_error("box_rs: symbol not found");
}

DendCochain oracle_compose(const DendCochain& f, int i, const DendCochain& g) {
    const int m = f.arity, n = g.arity, d = f.dim;
    DendCochain out = DendCochain::zero(d, m + n - 1);
    for (int r = 1; r <= m + n - 1; ++r) {
        auto [fr, scoef] = box_rs(m, i, n, r);
        MLMap& target = out.labels[static_cast<size_t>(r - 1)];
        detail::for_each_index(m + n - 1, d, [&](const std::vector<int>& idx) {
            Vec inner = zero_vec(d);
            for (int s = 1; s <= n; ++s) {
                if (scoef[static_cast<size_t>(s - 1)].is_zero()) continue;
                std::vector<int> gidx(idx.begin() + (i - 1), idx.begin() + (i - 1) + n);
                add_scaled(inner, scoef[static_cast<size_t>(s - 1)],
                           g.labels[static_cast<size_t>(s - 1)].value(gidx));
            }
            std::vector<int> fidx;
            fidx.insert(fidx.end(), idx.begin(), idx.begin() + (i - 1));
            fidx.push_back(0);
            fidx.insert(fidx.end(), idx.begin() + (i - 1) + n, idx.end());
            const Vec val = f.labels[static_cast<size_t>(fr - 1)].value_with_slot(fidx, i - 1, inner);
            const size_t flat = target.flatten(idx);
            for (int k = 0; k < d; ++k) target.at(k, flat) += val[k];
        });
    }
    return out;
}

DendCochain oracle_brace(const DendCochain& f, const DendCochain& g) {
    const int m = f.arity, n = g.arity;
    DendCochain out = DendCochain::zero(f.dim, m + n - 1);
    for (int i = 1; i <= m; ++i)
        out += oracle_compose(f, i, g).scaled(Rational(sgn_pow(static_cast<long>(i - 1) * (n - 1))));
    const int smn = sgn_pow(static_cast<long>(m - 1) * (n - 1));
    for (int i = 1; i <= n; ++i)
        out += oracle_compose(g, i, f).scaled(Rational(-smn * sgn_pow(static_cast<long>(i - 1) * (m - 1))));
    return out;
}

Vec cdend_oracle_apply(const CompatibleDendriform& cd, int n, const Vec& coords) {
    auto [pi1, pi2] = structure_cochains(cd);
    CompDendCochain x = cdend_from_coords(cd.dim, n, coords);
    CompDendCochain out = CompDendCochain::zero(cd.dim, n + 1);
    const Rational sign((n - 1) % 2 == 0 ? 1 : -1);
    for (int i = 1; i <= n + 1; ++i) {
        DendCochain acc = DendCochain::zero(cd.dim, n + 1);
        if (i <= n) acc += oracle_brace(pi1, x.parts[static_cast<size_t>(i - 1)]);
        if (i >= 2) acc += oracle_brace(pi2, x.parts[static_cast<size_t>(i - 2)]);
        out.parts[static_cast<size_t>(i - 1)] = acc.scaled(sign);
    }
    return cdend_to_coords(out);
}

bool criterion9() {
    OContext ctx = dual_numbers_adjoint();
    OperatorPair p = nil_pair();
    bool ok = true;

    CochainComplex co = pair_complex(ctx, p);
    CompatibleAlgebra ca = induced_compatible_algebra(ctx, p);
    CompatibleBimodule cb = induced_compatible_bimodule(ctx, p);
    CochainComplex cass = cass_complex(ca, cb);
    CochainComplex coa = coa_complex(ctx, p);
    CompatibleDendriform ind = induced_dendriform(ctx, p);
    CochainComplex cdend = cdend_complex(ind);

    CochainComplex co_oracle = co;
    co_oracle.apply = [ctx, p](int n, const Vec& coords) {
        return tuple_to_coords(delta_pair_oracle(ctx, p, tuple_from_coords(ctx, n, coords)));
    };
    CochainComplex cass_oracle = cass; // the bracket route of the same complex
    cass_oracle.apply = [ctx, p](int n, const Vec& coords) {
        CAssCochain x = cass_from_coords(ctx.dim_m(), ctx.dim_a(), n, coords);
        const Rational sign(n % 2 == 0 ? 1 : -1);
        CAssCochain out = CAssCochain::zero(ctx.dim_m(), ctx.dim_a(), n + 1);
        const int parts = CAssCochain::part_count(n);
        for (int i = 1; i <= CAssCochain::part_count(n + 1); ++i) {
            MLMap acc(n + 1, ctx.dim_m(), ctx.dim_a());
            if (i <= parts) acc += derived_bracket(ctx, p.T1.as_mmap(), x.parts[static_cast<size_t>(i - 1)]);
            if (i >= 2 && i - 2 < parts)
                acc += derived_bracket(ctx, p.T2.as_mmap(), x.parts[static_cast<size_t>(i - 2)]);
            out.parts[static_cast<size_t>(i - 1)] = acc.scaled(sign);
        }
        return cass_to_coords(out);
    };
    CochainComplex coa_oracle = coa;
    coa_oracle.apply = [ctx, p](int n, const Vec& coords) { return coa_oracle_apply(ctx, p, n, coords); };
    CochainComplex cdend_oracle = cdend;
    cdend_oracle.apply = [ind](int n, const Vec& coords) { return cdend_oracle_apply(ind, n, coords); };

    auto dims_of = [](const CochainComplex& cx, int degree, bool starts_at_one) {
        if (starts_at_one && degree == 0) return 0;
        if (starts_at_one && degree == 1) return kernel_basis(coboundary_matrix(cx, 1)).dim();
        return cohomology_dim(cx, degree);
    };

    for (const Pin& pin : kPins) {
        int prod = 0, oracle = 0;
        const std::string name = pin.complex_name;
        if (name == "co") {
            prod = dims_of(co, pin.degree, false);
            oracle = dims_of(co_oracle, pin.degree, false);
        } else if (name == "cass") {
            prod = dims_of(cass, pin.degree, false);
            oracle = dims_of(cass_oracle, pin.degree, false);
        } else if (name == "coa") {
            prod = dims_of(coa, pin.degree, true);
            oracle = dims_of(coa_oracle, pin.degree, true);
        } else {
            prod = dims_of(cdend, pin.degree, true);
            oracle = dims_of(cdend_oracle, pin.degree, true);
        }
        if (prod != pin.dim || oracle != pin.dim) {
            std::printf("  pin mismatch: %s degree %d expected %d, production %d, oracle %d\n", pin.complex_name,
                        pin.degree, pin.dim, prod, oracle);
            ok = false;
        }
    }
    return report_line(9, "fixture cohomology dims reproduced by production and oracle routes", ok,
                       "complexes co, cass, coa, cdend at degrees 0-2");
}

} // namespace

int main() {
    const auto t0 = Clock::now();
    std::vector<DiscoveredPair> discovered = discover_pairs();
    std::printf("discovered %zu compatible pairs over the desk-scale contexts\n", discovered.size());

    int failures = 0;
    failures += criterion1() ? 0 : 1;
    failures += criterion2() ? 0 : 1;
    failures += criterion3(discovered) ? 0 : 1;
    failures += criterion4() ? 0 : 1;
    failures += criterion5(discovered) ? 0 : 1;
    failures += criterion6() ? 0 : 1;
    failures += criterion7() ? 0 : 1;
    failures += criterion8(discovered) ? 0 : 1;
    failures += criterion9() ? 0 : 1;

    std::printf("acceptance: %d/9 criteria passed in %.1f s\n", 9 - failures, seconds_since(t0));
    return failures;
}
