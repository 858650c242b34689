#pragma once

#include "ocoh/linfty.hpp"

namespace ocoh {

/// Order-N polynomial deformation of a compatible pair: T_{j,t} = sum t^i T_{j,i}.
struct PairDeformation {
    int order = 0;
    std::vector<LinOp> T1s, T2s; // index 0 holds the base operators

    void validate(const OContext& ctx) const {
        if (static_cast<int>(T1s.size()) != order + 1 || static_cast<int>(T2s.size()) != order + 1)
            throw std::invalid_argument("PairDeformation: coefficient count does not match order");
        for (const auto& t : T1s) detail::check_op_shape(ctx, t);
        for (const auto& t : T2s) detail::check_op_shape(ctx, t);
        if (!is_compatible_pair(ctx, {T1s[0], T2s[0]}).pass())
            throw std::invalid_argument("PairDeformation: base pair is not compatible");
    }

    OperatorPair base() const { return {T1s[0], T2s[0]}; }
};

namespace detail {

/// One side of a deformation equation at order n:
/// sum_{i+j=n} S_i(u).T_j(v) - S_i(T_j(u).v + u.T_j(v)) with the convention
/// that products use the fixed context.
inline Vec pair_defn_defect(const OContext& ctx, const std::vector<LinOp>& S, const std::vector<LinOp>& T, int n,
                            int u, int v) {
    const int dm = ctx.dim_m();
    Vec eu = zero_vec(dm), ev = zero_vec(dm);
    eu[u] = Rational(1);
    ev[v] = Rational(1);
    Vec acc = zero_vec(ctx.dim_a());
    for (int i = 0; i <= n; ++i) {
        const int j = n - i;
        if (i >= static_cast<int>(S.size()) || j >= static_cast<int>(T.size())) continue;
        add_scaled(acc, Rational(1), ctx.mul(S[i].apply_basis(u), T[j].apply_basis(v)));
        Vec arg = ctx.act_left(T[j].apply_basis(u), ev);
        add_scaled(arg, Rational(1), ctx.act_right(eu, T[j].apply_basis(v)));
        add_scaled(acc, Rational(-1), S[i].apply(arg));
    }
    return acc;
}

} // namespace detail

/// The three convolution families for n = 0..N, plus the equivalent
/// half-bracket formulation as a redundant route.
inline CheckReport check_pair_deformation(const OContext& ctx, const PairDeformation& d) {
    d.validate(ctx);
    CheckReport rep{"pair deformation"};
    const int dm = ctx.dim_m();
    for (int n = 0; n <= d.order; ++n)
        for (int u = 0; u < dm; ++u)
            for (int v = 0; v < dm; ++v) {
                rep.record("T1 family", {n, u, v}, detail::pair_defn_defect(ctx, d.T1s, d.T1s, n, u, v));
                rep.record("T2 family", {n, u, v}, detail::pair_defn_defect(ctx, d.T2s, d.T2s, n, u, v));
                Vec mixed = detail::pair_defn_defect(ctx, d.T1s, d.T2s, n, u, v);
                add_scaled(mixed, Rational(1), detail::pair_defn_defect(ctx, d.T2s, d.T1s, n, u, v));
                rep.record("mixed family", {n, u, v}, std::move(mixed));
            }

    // redundant route: delta(T1n, T2n) = -1/2 sum_{i+j=n, i,j>=1} [[(T1i,T2i),(T1j,T2j)]]
    OperatorPair base = d.base();
    for (int n = 1; n <= d.order; ++n) {
        TupleCochain lhs = delta_pair(ctx, base, make_pair_cochain(ctx, d.T1s[n].as_mmap(), d.T2s[n].as_mmap()));
        TupleCochain rhs = TupleCochain::zero(ctx, 2);
        for (int i = 1; i <= n - 1; ++i) {
            const int j = n - i;
            rhs += lifted_bracket(ctx, make_pair_cochain(ctx, d.T1s[i].as_mmap(), d.T2s[i].as_mmap()),
                                  make_pair_cochain(ctx, d.T1s[j].as_mmap(), d.T2s[j].as_mmap()));
        }
        TupleCochain diff = lhs + rhs.scaled(Rational(1, 2));
        for (size_t part = 0; part < diff.parts.size(); ++part)
            if (!diff.parts[part].is_zero())
                rep.defects.push_back({"half-bracket route", {n, static_cast<int>(part)}, diff.parts[part].c});
    }
    return rep;
}

struct Infinitesimal {
    TupleCochain cochain;
    bool is_cocycle = false;
};

/// (T_{1,1}, T_{2,1}) with its 1-cocycle verdict.
inline Infinitesimal infinitesimal(const OContext& ctx, const PairDeformation& d) {
    if (d.order < 1) throw std::domain_error("infinitesimal: deformation must have order >= 1");
    d.validate(ctx);
    Infinitesimal out;
    out.cochain = make_pair_cochain(ctx, d.T1s[1].as_mmap(), d.T2s[1].as_mmap());
    out.is_cocycle = delta_pair(ctx, d.base(), out.cochain).is_zero();
    return out;
}

/// Gauge data: a0 generates the order-t term, higher corrections optional.
struct EquivalenceData {
    Vec a0;
    std::vector<Matrix> phi_higher; // phi_i for i >= 2, in order
    std::vector<Matrix> psi_higher;
};

namespace detail {

inline Matrix phi_coefficient(const OContext& ctx, const EquivalenceData& e, int i) {
    const int da = ctx.dim_a();
    if (i == 0) return Matrix::identity(da);
    if (i == 1) {
        Matrix m(da, da);
        for (int b = 0; b < da; ++b) {
            Vec eb = zero_vec(da);
            eb[b] = Rational(1);
            Vec col = ctx.mul(e.a0, eb);
            add_scaled(col, Rational(-1), ctx.mul(eb, e.a0));
            for (int k = 0; k < da; ++k) m.set(k, b, col[k]);
        }
        return m;
    }
    const size_t idx = static_cast<size_t>(i - 2);
    if (idx < e.phi_higher.size()) return e.phi_higher[idx];
    return Matrix(da, da);
}

inline Matrix psi_coefficient(const OContext& ctx, const EquivalenceData& e, int i) {
    const int dm = ctx.dim_m();
    if (i == 0) return Matrix::identity(dm);
    if (i == 1) {
        Matrix m(dm, dm);
        for (int u = 0; u < dm; ++u) {
            Vec eu = zero_vec(dm);
            eu[u] = Rational(1);
            Vec col = ctx.act_left(e.a0, eu);
            add_scaled(col, Rational(-1), ctx.act_right(eu, e.a0));
            for (int k = 0; k < dm; ++k) m.set(k, u, col[k]);
        }
        return m;
    }
    const size_t idx = static_cast<size_t>(i - 2);
    if (idx < e.psi_higher.size()) return e.psi_higher[idx];
    return Matrix(dm, dm);
}

} // namespace detail

/// Order-by-order morphism conditions for (phi_t, psi_t) between two
/// deformations of one base pair, plus the order-1 coboundary consequence.
inline CheckReport check_pair_equivalence(const OContext& ctx, const PairDeformation& d, const PairDeformation& dp,
                                          const EquivalenceData& e) {
    d.validate(ctx);
    dp.validate(ctx);
    if (!(d.T1s[0] == dp.T1s[0]) || !(d.T2s[0] == dp.T2s[0]))
        throw std::invalid_argument("check_pair_equivalence: deformations have different base pairs");
    CheckReport rep{"pair deformation equivalence"};
    const int order = std::min(d.order, dp.order);
    const int da = ctx.dim_a(), dm = ctx.dim_m();

    std::vector<Matrix> phi, psi;
    for (int i = 0; i <= order; ++i) {
        phi.push_back(detail::phi_coefficient(ctx, e, i));
        psi.push_back(detail::psi_coefficient(ctx, e, i));
    }

    for (int n = 0; n <= order; ++n) {
        // phi_n(a b) = sum_{i+j=n} phi_i(a) phi_j(b)
        for (int a = 0; a < da; ++a)
            for (int b = 0; b < da; ++b) {
                Vec lhs = phi[n].apply(ctx.algebra.mu.apply_basis(a, b));
                for (int i = 0; i <= n; ++i) {
                    Vec ea = zero_vec(da), eb = zero_vec(da);
                    ea[a] = Rational(1);
                    eb[b] = Rational(1);
                    add_scaled(lhs, Rational(-1), ctx.mul(phi[i].apply(ea), phi[n - i].apply(eb)));
                }
                rep.record("phi multiplicative", {n, a, b}, std::move(lhs));
            }
        // sum phi_i T1_j = sum T1'_i psi_j (and for T2)
        for (int u = 0; u < dm; ++u) {
            Vec eu = zero_vec(dm);
            eu[u] = Rational(1);
            Vec lhs1 = zero_vec(da), lhs2 = zero_vec(da);
            for (int i = 0; i <= n; ++i) {
                const int j = n - i;
                if (j <= d.order) {
                    add_scaled(lhs1, Rational(1), phi[i].apply(d.T1s[j].apply_basis(u)));
                    add_scaled(lhs2, Rational(1), phi[i].apply(d.T2s[j].apply_basis(u)));
                }
                if (j <= dp.order) {
                    add_scaled(lhs1, Rational(-1), dp.T1s[j].apply(psi[i].apply(eu)));
                    add_scaled(lhs2, Rational(-1), dp.T2s[j].apply(psi[i].apply(eu)));
                }
            }
            rep.record("phi T1 intertwine", {n, u}, std::move(lhs1));
            rep.record("phi T2 intertwine", {n, u}, std::move(lhs2));
        }
        // psi equivariance against the constant actions
        for (int a = 0; a < da; ++a)
            for (int u = 0; u < dm; ++u) {
                Vec ea = zero_vec(da), eu = zero_vec(dm);
                ea[a] = Rational(1);
                eu[u] = Rational(1);
                Vec l = psi[n].apply(ctx.act_left(ea, eu));
                Vec r = psi[n].apply(ctx.act_right(eu, ea));
                for (int i = 0; i <= n; ++i) {
                    add_scaled(l, Rational(-1), ctx.act_left(phi[i].apply(ea), psi[n - i].apply(eu)));
                    add_scaled(r, Rational(-1), ctx.act_right(psi[i].apply(eu), phi[n - i].apply(ea)));
                }
                rep.record("psi left equivariance", {n, a, u}, std::move(l));
                rep.record("psi right equivariance", {n, a, u}, std::move(r));
            }
    }

    // order-1 consequence: infinitesimal difference is the coboundary of a0
    if (d.order >= 1 && dp.order >= 1) {
        TupleCochain diff = make_pair_cochain(ctx, d.T1s[1].as_mmap(), d.T2s[1].as_mmap());
        diff += make_pair_cochain(ctx, dp.T1s[1].as_mmap(), dp.T2s[1].as_mmap()).scaled(Rational(-1));
        TupleCochain a0c;
        a0c.degree = 0;
        a0c.parts = {mmap_from_element(ctx, e.a0)};
        diff += delta_pair(ctx, d.base(), a0c).scaled(Rational(-1));
        for (size_t part = 0; part < diff.parts.size(); ++part)
            if (!diff.parts[part].is_zero())
                rep.defects.push_back({"order-1 coboundary identity", {static_cast<int>(part)}, diff.parts[part].c});
    }
    return rep;
}

/// Ob = -1/2 sum_{i+j=N+1, i,j>=1} [[(T1i,T2i),(T1j,T2j)]], always a 2-cocycle
/// for a valid deformation (a failure here is an internal error).
inline TupleCochain obstruction(const OContext& ctx, const PairDeformation& d) {
    if (!check_pair_deformation(ctx, d).pass())
        throw std::domain_error("obstruction: not a valid order-N deformation");
    TupleCochain ob = TupleCochain::zero(ctx, 2);
    for (int i = 1; i <= d.order; ++i) {
        const int j = d.order + 1 - i;
        if (j < 1 || j > d.order) continue;
        ob += lifted_bracket(ctx, make_pair_cochain(ctx, d.T1s[i].as_mmap(), d.T2s[i].as_mmap()),
                             make_pair_cochain(ctx, d.T1s[j].as_mmap(), d.T2s[j].as_mmap()));
    }
    ob = ob.scaled(Rational(-1, 2));
    if (!delta_pair(ctx, d.base(), ob).is_zero())
        throw std::logic_error("obstruction: the obstruction cochain is not a cocycle");
    return ob;
}

/// Extension to order N+1 when the obstruction is a coboundary: solves
/// delta(x) = Ob and re-verifies the extended deformation.
inline std::optional<std::pair<LinOp, LinOp>> is_extensible(const OContext& ctx, const PairDeformation& d) {
    TupleCochain ob = obstruction(ctx, d);
    CochainComplex cx = pair_complex(ctx, d.base());
    Matrix delta1 = coboundary_matrix(cx, 1);
    auto x = solve(delta1, tuple_to_coords(ob));
    if (!x) return std::nullopt;
    TupleCochain sol = tuple_from_coords(ctx, 1, *x);
    PairDeformation ext = d;
    ext.order = d.order + 1;
    ext.T1s.push_back(LinOp::from_mmap(sol.parts[0]));
    ext.T2s.push_back(LinOp::from_mmap(sol.parts[1]));
    if (!check_pair_deformation(ctx, ext).pass())
        throw std::logic_error("is_extensible: extension witness failed re-verification");
    return std::make_pair(ext.T1s.back(), ext.T2s.back());
}

/// All a0 with delta(a0) = z: a particular solution plus the kernel of the
/// degree-0 differential.
struct AffineSolutions {
    Vec particular;
    Subspace kernel;
};

inline std::optional<AffineSolutions> coboundary_preimage(const OContext& ctx, const OperatorPair& p,
                                                          const TupleCochain& z) {
    if (z.degree != 1) throw std::invalid_argument("coboundary_preimage: cochain must have degree 1");
    if (!delta_pair(ctx, p, z).is_zero()) throw std::domain_error("coboundary_preimage: input is not a cocycle");
    CochainComplex cx = pair_complex(ctx, p);
    Matrix delta0 = coboundary_matrix(cx, 0);
    auto x = solve(delta0, tuple_to_coords(z));
    if (!x) return std::nullopt;
    return AffineSolutions{*x, kernel_basis(delta0)};
}

// ---- full deformations ----------------------------------------------------

/// Order-N deformation of the whole structure (mu, l, r, T1, T2).
struct FullDeformation {
    int order = 0;
    std::vector<BilinearMap> mus; // A x A -> A
    std::vector<BilinearMap> ls;  // A x M -> M
    std::vector<BilinearMap> rs;  // M x A -> M
    std::vector<LinOp> T1s, T2s;

    OContext base_context() const {
        Algebra a(mus[0].d1, mus[0]);
        Bimodule b(ls[0].d1, ls[0].d2, ls[0], rs[0]);
        return OContext{a, b};
    }

    void validate() const {
        const size_t n = static_cast<size_t>(order) + 1;
        if (mus.size() != n || ls.size() != n || rs.size() != n || T1s.size() != n || T2s.size() != n)
            throw std::invalid_argument("FullDeformation: coefficient count does not match order");
        OContext ctx = base_context();
        if (!check_associative(ctx.algebra).pass() || !check_bimodule(ctx.algebra, ctx.bimodule).pass() ||
            !is_compatible_pair(ctx, {T1s[0], T2s[0]}).pass())
            throw std::invalid_argument("FullDeformation: base is not a compatible O-operator algebra");
    }
};

/// The seven convolution families (associativity, three bimodule families,
/// three operator families) for n = 0..N.
inline CheckReport check_full_deformation(const FullDeformation& d) {
    d.validate();
    CheckReport rep{"full deformation"};
    const int da = d.mus[0].d1, dm = d.ls[0].d2;
    auto mu = [&](int i) -> const BilinearMap& { return d.mus[static_cast<size_t>(i)]; };
    auto l = [&](int i) -> const BilinearMap& { return d.ls[static_cast<size_t>(i)]; };
    auto r = [&](int i) -> const BilinearMap& { return d.rs[static_cast<size_t>(i)]; };

    for (int n = 0; n <= d.order; ++n) {
        for (int a = 0; a < da; ++a)
            for (int b = 0; b < da; ++b) {
                for (int c = 0; c < da; ++c) {
                    Vec acc = zero_vec(da);
                    for (int i = 0; i <= n; ++i) {
                        const int j = n - i;
                        Vec ec = zero_vec(da);
                        ec[c] = Rational(1);
                        Vec ea = zero_vec(da);
                        ea[a] = Rational(1);
                        add_scaled(acc, Rational(1), mu(i).apply(mu(j).apply_basis(a, b), ec));
                        add_scaled(acc, Rational(-1), mu(i).apply(ea, mu(j).apply_basis(b, c)));
                    }
                    rep.record("associativity", {n, a, b, c}, std::move(acc));
                }
                for (int u = 0; u < dm; ++u) {
                    Vec acc = zero_vec(dm);
                    for (int i = 0; i <= n; ++i) {
                        const int j = n - i;
                        Vec eu = zero_vec(dm);
                        eu[u] = Rational(1);
                        Vec ea = zero_vec(da);
                        ea[a] = Rational(1);
                        add_scaled(acc, Rational(1), l(i).apply(mu(j).apply_basis(a, b), eu));
                        add_scaled(acc, Rational(-1), l(i).apply(ea, l(j).apply_basis(b, u)));
                    }
                    rep.record("left action", {n, a, b, u}, std::move(acc));

                    Vec acc2 = zero_vec(dm);
                    for (int i = 0; i <= n; ++i) {
                        const int j = n - i;
                        Vec eb = zero_vec(da);
                        eb[b] = Rational(1);
                        Vec ea = zero_vec(da);
                        ea[a] = Rational(1);
                        add_scaled(acc2, Rational(1), r(i).apply(l(j).apply_basis(a, u), eb));
                        add_scaled(acc2, Rational(-1), l(i).apply(ea, r(j).apply_basis(u, b)));
                    }
                    rep.record("mixed action", {n, a, u, b}, std::move(acc2));

                    Vec acc3 = zero_vec(dm);
                    for (int i = 0; i <= n; ++i) {
                        const int j = n - i;
                        Vec eu = zero_vec(dm);
                        eu[u] = Rational(1);
                        Vec eb = zero_vec(da);
                        eb[b] = Rational(1);
                        add_scaled(acc3, Rational(1), r(i).apply(eu, mu(j).apply_basis(a, b)));
                        add_scaled(acc3, Rational(-1), r(i).apply(r(j).apply_basis(u, a), eb));
                    }
                    rep.record("right action", {n, u, a, b}, std::move(acc3));
                }
            }
        // operator families: sum_{i+j+k=n} mu_i(S_j u, T_k v) = sum S_i(l_j(T_k u, v) + r_j(u, T_k v))
        auto op_family = [&](const std::vector<LinOp>& S, const std::vector<LinOp>& T, int u, int v) {
            Vec acc = zero_vec(da);
            Vec eu = zero_vec(dm), ev = zero_vec(dm);
            eu[u] = Rational(1);
            ev[v] = Rational(1);
            for (int i = 0; i <= n; ++i)
                for (int j = 0; i + j <= n; ++j) {
                    const int k = n - i - j;
                    add_scaled(acc, Rational(1), mu(i).apply(S[static_cast<size_t>(j)].apply_basis(u),
                                                             T[static_cast<size_t>(k)].apply_basis(v)));
                    Vec arg = l(j).apply(T[static_cast<size_t>(k)].apply_basis(u), ev);
                    add_scaled(arg, Rational(1), r(j).apply(eu, T[static_cast<size_t>(k)].apply_basis(v)));
                    add_scaled(acc, Rational(-1), S[static_cast<size_t>(i)].apply(arg));
                }
            return acc;
        };
        for (int u = 0; u < dm; ++u)
            for (int v = 0; v < dm; ++v) {
                rep.record("T1 operator family", {n, u, v}, op_family(d.T1s, d.T1s, u, v));
                rep.record("T2 operator family", {n, u, v}, op_family(d.T2s, d.T2s, u, v));
                Vec mixed = op_family(d.T1s, d.T2s, u, v);
                add_scaled(mixed, Rational(1), op_family(d.T2s, d.T1s, u, v));
                rep.record("mixed operator family", {n, u, v}, std::move(mixed));
            }
    }
    return rep;
}

struct FullInfinitesimal {
    COACochain cochain;
    bool is_cocycle = false;
};

/// Assembles ((mu_1 + l_1 + r_1), (T_{1,1}, T_{2,1})) as a degree-2 cochain.
inline COACochain full_infinitesimal_cochain(const FullDeformation& d) {
    OContext ctx = d.base_context();
    const int da = ctx.dim_a(), dm = ctx.dim_m();
    COACochain x = COACochain::zero(ctx, 2);
    MixedMap v(2, da, dm);
    {
        auto& blk = v.block(Sp::A, {Sp::A, Sp::A});
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < da; ++j)
                for (int k = 0; k < da; ++k)
                    blk[static_cast<size_t>(k) * da * da + static_cast<size_t>(i) * da + j] = d.mus[1].at(i, j, k);
    }
    {
        auto& blk = v.block(Sp::M, {Sp::A, Sp::M});
        for (int i = 0; i < da; ++i)
            for (int u = 0; u < dm; ++u)
                for (int w = 0; w < dm; ++w)
                    blk[static_cast<size_t>(w) * da * dm + static_cast<size_t>(i) * dm + u] = d.ls[1].at(i, u, w);
    }
    {
        auto& blk = v.block(Sp::M, {Sp::M, Sp::A});
        for (int u = 0; u < dm; ++u)
            for (int i = 0; i < da; ++i)
                for (int w = 0; w < dm; ++w)
                    blk[static_cast<size_t>(w) * dm * da + static_cast<size_t>(u) * da + i] = d.rs[1].at(u, i, w);
    }
    v.normalize();
    if (!v.is_zero()) x.elt.vprime = std::move(v);
    x.elt.a_parts = {d.T1s[1].as_mmap(), d.T2s[1].as_mmap()};
    return x;
}

/// The infinitesimal with its 2-cocycle verdict in the cOA complex.
inline FullInfinitesimal full_infinitesimal(const FullDeformation& d) {
    if (d.order < 1) throw std::domain_error("full_infinitesimal: deformation must have order >= 1");
    d.validate();
    OContext ctx = d.base_context();
    FullInfinitesimal out{full_infinitesimal_cochain(d), false};
    out.is_cocycle = delta_coa(ctx, {d.T1s[0], d.T2s[0]}, out.cochain).elt.is_zero();
    return out;
}

/// Gauge data for full deformations: phi_0 = id and psi_0 = id are implicit,
/// the vectors list phi_i / psi_i from i = 1.
struct FullEquivalenceData {
    std::vector<Matrix> phis;
    std::vector<Matrix> psis;

    Matrix phi(int i, int dim) const {
        if (i == 0) return Matrix::identity(dim);
        const size_t idx = static_cast<size_t>(i - 1);
        return idx < phis.size() ? phis[idx] : Matrix(dim, dim);
    }
    Matrix psi(int i, int dim) const {
        if (i == 0) return Matrix::identity(dim);
        const size_t idx = static_cast<size_t>(i - 1);
        return idx < psis.size() ? psis[idx] : Matrix(dim, dim);
    }
};

/// The five morphism families order-by-order plus the order-1 coboundary
/// consequence in the cOA complex.
inline CheckReport check_full_equivalence(const FullDeformation& d, const FullDeformation& dp,
                                          const FullEquivalenceData& e) {
    d.validate();
    dp.validate();
    if (!(d.mus[0] == dp.mus[0]) || !(d.ls[0] == dp.ls[0]) || !(d.rs[0] == dp.rs[0]) || !(d.T1s[0] == dp.T1s[0]) ||
        !(d.T2s[0] == dp.T2s[0]))
        throw std::invalid_argument("check_full_equivalence: deformations have different bases");
    CheckReport rep{"full deformation equivalence"};
    OContext ctx = d.base_context();
    const int da = ctx.dim_a(), dm = ctx.dim_m();
    const int order = std::min(d.order, dp.order);

    auto at = [](const std::vector<BilinearMap>& v, int i) -> const BilinearMap& { return v[static_cast<size_t>(i)]; };

    for (int n = 0; n <= order; ++n) {
        for (int a = 0; a < da; ++a)
            for (int b = 0; b < da; ++b) {
                Vec lhs = zero_vec(da);
                for (int i = 0; i <= n; ++i)
                    add_scaled(lhs, Rational(1), e.phi(i, da).apply(at(d.mus, n - i).apply_basis(a, b)));
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; i + j <= n; ++j) {
                        const int k = n - i - j;
                        Vec ea = zero_vec(da), eb = zero_vec(da);
                        ea[a] = Rational(1);
                        eb[b] = Rational(1);
                        add_scaled(lhs, Rational(-1),
                                   at(dp.mus, i).apply(e.phi(j, da).apply(ea), e.phi(k, da).apply(eb)));
                    }
                rep.record("product family", {n, a, b}, std::move(lhs));
            }
        for (int a = 0; a < da; ++a)
            for (int u = 0; u < dm; ++u) {
                Vec lhs = zero_vec(dm), rhs = zero_vec(dm);
                for (int i = 0; i <= n; ++i) {
                    add_scaled(lhs, Rational(1), e.psi(i, dm).apply(at(d.ls, n - i).apply_basis(a, u)));
                    add_scaled(rhs, Rational(1), e.psi(i, dm).apply(at(d.rs, n - i).apply_basis(u, a)));
                }
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; i + j <= n; ++j) {
                        const int k = n - i - j;
                        Vec ea = zero_vec(da), eu = zero_vec(dm);
                        ea[a] = Rational(1);
                        eu[u] = Rational(1);
                        add_scaled(lhs, Rational(-1),
                                   at(dp.ls, i).apply(e.phi(j, da).apply(ea), e.psi(k, dm).apply(eu)));
                        add_scaled(rhs, Rational(-1),
                                   at(dp.rs, i).apply(e.psi(j, dm).apply(eu), e.phi(k, da).apply(ea)));
                    }
                rep.record("left action family", {n, a, u}, std::move(lhs));
                rep.record("right action family", {n, u, a}, std::move(rhs));
            }
        for (int u = 0; u < dm; ++u) {
            Vec eu = zero_vec(dm);
            eu[u] = Rational(1);
            Vec lhs1 = zero_vec(da), lhs2 = zero_vec(da);
            for (int i = 0; i <= n; ++i) {
                const int j = n - i;
                add_scaled(lhs1, Rational(1), e.phi(i, da).apply(d.T1s[static_cast<size_t>(j)].apply_basis(u)));
                add_scaled(lhs2, Rational(1), e.phi(i, da).apply(d.T2s[static_cast<size_t>(j)].apply_basis(u)));
                add_scaled(lhs1, Rational(-1), dp.T1s[static_cast<size_t>(i)].apply(e.psi(j, dm).apply(eu)));
                add_scaled(lhs2, Rational(-1), dp.T2s[static_cast<size_t>(i)].apply(e.psi(j, dm).apply(eu)));
            }
            rep.record("T1 intertwine family", {n, u}, std::move(lhs1));
            rep.record("T2 intertwine family", {n, u}, std::move(lhs2));
        }
    }

    if (d.order >= 1 && dp.order >= 1) {
        // (mu1+l1+r1,(T11,T21)) - (mu1'+l1'+r1',(T11',T21')) = delta_cOA((phi_1, psi_1))
        FullDeformation trunc = d, truncp = dp;
        auto truncate = [](FullDeformation& f) {
            f.order = 1;
            f.mus.resize(2);
            f.ls.resize(2);
            f.rs.resize(2);
            f.T1s.resize(2);
            f.T2s.resize(2);
        };
        truncate(trunc);
        truncate(truncp);
        COACochain left = full_infinitesimal_cochain(trunc);
        COACochain right = full_infinitesimal_cochain(truncp);
        COACochain phi1 = COACochain::zero(ctx, 1);
        MixedMap vp(1, da, dm);
        {
            auto& blk = vp.block(Sp::A, {Sp::A});
            Matrix p1 = e.phi(1, da);
            for (int i = 0; i < da; ++i)
                for (int k = 0; k < da; ++k) blk[static_cast<size_t>(k) * da + i] = p1.at(k, i);
        }
        {
            auto& blk = vp.block(Sp::M, {Sp::M});
            Matrix p1 = e.psi(1, dm);
            for (int u = 0; u < dm; ++u)
                for (int k = 0; k < dm; ++k) blk[static_cast<size_t>(k) * dm + u] = p1.at(k, u);
        }
        vp.normalize();
        if (!vp.is_zero()) phi1.elt.vprime = std::move(vp);
        COACochain dphi = delta_coa(ctx, {d.T1s[0], d.T2s[0]}, phi1);
        LInftyElement diff = left.elt;
        diff += right.elt.scaled(Rational(-1));
        diff += dphi.elt.scaled(Rational(-1));
        if (!diff.is_zero()) rep.defects.push_back({"order-1 coboundary identity", {}, {}});
    }
    return rep;
}

} // namespace ocoh
