#pragma once

#include "ocoh/operators.hpp"
#include "ocoh/parallel.hpp"

#include <functional>

namespace ocoh {

/// Classical Hochschild coboundary of f : X^n -> Y over the algebra (X, mu)
/// with bimodule actions left : X x Y -> Y and right : Y x X -> Y:
///   (df)(a_1..a_{n+1}) = a_1.f(a_2..) + sum_i (-1)^i f(.., a_i a_{i+1}, ..)
///                        + (-1)^{n+1} f(..).a_{n+1}
inline MLMap hochschild_delta(const BilinearMap& mu, const BilinearMap& left, const BilinearMap& right,
                              const MLMap& f) {
    const int dx = mu.d1, dy = left.d2;
    if (f.in_dim != dx || f.out_dim != dy) throw std::invalid_argument("hochschild_delta: shape mismatch");
    if (left.d1 != dx || left.dout != dy || right.d1 != dy || right.d2 != dx || right.dout != dy)
        throw std::invalid_argument("hochschild_delta: action shape mismatch");
    const int n = f.arity;
    MLMap out(n + 1, dx, dy);
    detail::for_each_index(n + 1, dx, [&](const std::vector<int>& idx) {
        Vec acc = zero_vec(dy);
        {
            std::vector<int> rest(idx.begin() + 1, idx.end());
            const Vec fv = f.value(rest);
            for (int k = 0; k < dy; ++k)
                for (int w = 0; w < dy; ++w) acc[k] += fv[w] * left.at(idx[0], w, k);
        }
        for (int i = 1; i <= n; ++i) {
            Vec prod = mu.apply_basis(idx[i - 1], idx[i]);
            std::vector<int> merged;
            merged.insert(merged.end(), idx.begin(), idx.begin() + (i - 1));
            merged.push_back(0);
            merged.insert(merged.end(), idx.begin() + (i + 1), idx.end());
            const Vec term = f.value_with_slot(merged, i - 1, prod);
            const Rational s(i % 2 == 0 ? 1 : -1);
            add_scaled(acc, s, term);
        }
        {
            std::vector<int> head(idx.begin(), idx.end() - 1);
            const Vec fv = f.value(head);
            const Rational s((n + 1) % 2 == 0 ? 1 : -1);
            for (int k = 0; k < dy; ++k)
                for (int w = 0; w < dy; ++w) acc[k] += s * fv[w] * right.at(w, idx[n], k);
        }
        const size_t flat = out.flatten(idx);
        for (int k = 0; k < dy; ++k) out.at(k, flat) = acc[k];
    });
    return out;
}

/// delta_T = [T, -], the differential of a single O-operator.
inline MMap delta_T(const OContext& ctx, const LinOp& T, const MMap& f) {
    if (!is_ooperator(ctx, T).pass()) throw std::domain_error("delta_T: T is not an O-operator");
    return derived_bracket(ctx, T.as_mmap(), f);
}

/// delta_{(T1,T2)} = [[(T1,T2), -]], the compatible differential.
inline TupleCochain delta_pair(const OContext& ctx, const OperatorPair& p, const TupleCochain& x) {
    if (!is_compatible_pair(ctx, p).pass()) throw std::domain_error("delta_pair: pair is not compatible");
    return lifted_bracket(ctx, make_pair_cochain(ctx, p.T1.as_mmap(), p.T2.as_mmap()), x);
}

/// Cochain of the compatible-associative complex: degree 0 holds an element
/// of the module (subject to the degree-0 condition), degree n holds n maps.
struct CAssCochain {
    int degree = 0;
    std::vector<MLMap> parts;

    static int part_count(int degree) { return degree == 0 ? 1 : degree; }

    static CAssCochain zero(int alg_dim, int mod_dim, int degree) {
        CAssCochain x;
        x.degree = degree;
        const int arity = degree == 0 ? 0 : degree;
        for (int i = 0; i < part_count(degree); ++i) x.parts.push_back(MLMap(arity, alg_dim, mod_dim));
        return x;
    }

    bool is_zero() const {
        for (const auto& p : parts)
            if (!p.is_zero()) return false;
        return true;
    }
};

/// The linear condition cutting out C^0: a .1 m - m .1 a = a .2 m - m .2 a.
inline Matrix cass_degree0_constraint(const CompatibleAlgebra& c, const CompatibleBimodule& cb) {
    const int n = c.dim, m = cb.module_dim;
    Matrix rows(n * m, m);
    for (int a = 0; a < n; ++a)
        for (int u = 0; u < m; ++u)
            for (int k = 0; k < m; ++k) {
                Rational v = cb.l1.at(a, u, k) - cb.r1.at(u, a, k) - cb.l2.at(a, u, k) + cb.r2.at(u, a, k);
                rows.set(a * m + u, k, v);
            }
    return rows;
}

inline bool cass_degree0_ok(const CompatibleAlgebra& c, const CompatibleBimodule& cb, const Vec& m0) {
    return is_zero_vec(cass_degree0_constraint(c, cb).apply(m0));
}

/// Componentwise convolution of the two Hochschild differentials.
inline CAssCochain delta_cass(const CompatibleAlgebra& c, const CompatibleBimodule& cb, const CAssCochain& x) {
    if (!check_compatible_associative(c).pass() || !check_compatible_bimodule(c, cb).pass())
        throw std::domain_error("delta_cass: structures fail their checks");
    const int n = x.degree;
    auto d1 = [&](const MLMap& f) { return hochschild_delta(c.mu1, cb.l1, cb.r1, f); };
    auto d2 = [&](const MLMap& f) { return hochschild_delta(c.mu2, cb.l2, cb.r2, f); };
    CAssCochain out = CAssCochain::zero(c.dim, cb.module_dim, n + 1);
    if (n == 0) {
        const Vec m0 = x.parts[0].value({});
        if (!cass_degree0_ok(c, cb, m0)) throw std::domain_error("delta_cass: degree-0 condition violated");
        out.parts[0] = d1(x.parts[0]); // equals d2(x) on the constrained subspace
        return out;
    }
    for (int i = 1; i <= n + 1; ++i) {
        MLMap acc(n + 1, c.dim, cb.module_dim);
        if (i <= n) acc += d1(x.parts[i - 1]);
        if (i >= 2) acc += d2(x.parts[i - 2]);
        out.parts[i - 1] = std::move(acc);
    }
    return out;
}

/// A cochain complex presented through flat coordinate vectors, ready for
/// matrix assembly. degree0_inclusion, when present, maps the true degree-0
/// space (a subspace basis) into raw degree-0 coordinates.
struct CochainComplex {
    std::function<int(int)> dim;
    std::function<Vec(int, const Vec&)> apply;
    std::optional<Matrix> degree0_inclusion;
};

/// Matrix of the degree-n differential in the canonical coordinates; for a
/// constrained degree 0 the columns run over the subspace basis.
inline Matrix coboundary_matrix(const CochainComplex& cx, int degree) {
    const bool constrained = degree == 0 && cx.degree0_inclusion.has_value();
    const int cols = constrained ? cx.degree0_inclusion->cols() : cx.dim(degree);
    const int rows = cx.dim(degree + 1);
    Matrix out(rows, cols);
    std::vector<Vec> columns(static_cast<size_t>(cols));
    parallel_for(cols, [&](int j) {
        Vec basis = zero_vec(cols);
        basis[j] = Rational(1);
        const Vec input = constrained ? cx.degree0_inclusion->apply(basis) : basis;
        columns[j] = cx.apply(degree, input);
    });
    for (int j = 0; j < cols; ++j)
        for (int r = 0; r < rows; ++r)
            if (!columns[j][r].is_zero()) out.set(r, j, columns[j][r]);
    return out;
}

/// dim ker(delta_n) - rank(delta_{n-1}), with both delta o delta = 0 checks
/// done on the matrices themselves.
inline int cohomology_dim(const CochainComplex& cx, int degree) {
    Matrix d_n = coboundary_matrix(cx, degree);
    if (degree == 0) return kernel_basis(d_n).dim();
    Matrix d_prev = coboundary_matrix(cx, degree - 1);
    if (!(d_n * d_prev).is_zero()) throw std::logic_error("cohomology_dim: delta o delta != 0");
    Subspace cycles = kernel_basis(d_n);
    // an independent basis of the image: row space of the transpose
    auto ech = detail::echelon_form(d_prev.transpose());
    std::vector<Vec> image_basis;
    for (const auto& row : ech.rows) {
        Vec v = zero_vec(d_prev.rows());
        for (const auto& [c, val] : row) v[c] = Rational(mpz_class(val));
        image_basis.push_back(std::move(v));
    }
    return quotient_dim(cycles, Subspace(d_prev.rows(), std::move(image_basis)));
}

// ---- concrete complexes -------------------------------------------------

inline size_t int_pow(int base, int exp) {
    size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= static_cast<size_t>(base);
    return r;
}

inline CochainComplex ooperator_complex(const OContext& ctx, const LinOp& T) {
    if (!is_ooperator(ctx, T).pass()) throw std::domain_error("ooperator_complex: T is not an O-operator");
    const int da = ctx.dim_a(), dm = ctx.dim_m();
    CochainComplex cx;
    cx.dim = [da, dm](int n) { return static_cast<int>(da * int_pow(dm, n)); };
    cx.apply = [ctx, T, da, dm](int n, const Vec& coords) {
        MMap f(n, dm, da);
        f.c = coords;
        return derived_bracket(ctx, T.as_mmap(), f).c;
    };
    return cx;
}

inline Vec tuple_to_coords(const TupleCochain& x) {
    Vec out;
    for (const auto& p : x.parts) out.insert(out.end(), p.c.begin(), p.c.end());
    return out;
}

inline TupleCochain tuple_from_coords(const OContext& ctx, int degree, const Vec& coords) {
    TupleCochain x = TupleCochain::zero(ctx, degree);
    size_t off = 0;
    for (auto& p : x.parts) {
        std::copy(coords.begin() + off, coords.begin() + off + p.c.size(), p.c.begin());
        off += p.c.size();
    }
    if (off != coords.size()) throw std::invalid_argument("tuple_from_coords: length mismatch");
    return x;
}

inline CochainComplex pair_complex(const OContext& ctx, const OperatorPair& p) {
    if (!is_compatible_pair(ctx, p).pass()) throw std::domain_error("pair_complex: pair is not compatible");
    const int da = ctx.dim_a(), dm = ctx.dim_m();
    TupleCochain tpair = make_pair_cochain(ctx, p.T1.as_mmap(), p.T2.as_mmap());
    CochainComplex cx;
    cx.dim = [da, dm](int n) {
        return static_cast<int>(TupleCochain::part_count(n) * da * int_pow(dm, n == 0 ? 0 : n));
    };
    cx.apply = [ctx, tpair](int n, const Vec& coords) {
        return tuple_to_coords(lifted_bracket(ctx, tpair, tuple_from_coords(ctx, n, coords)));
    };
    return cx;
}

inline Vec cass_to_coords(const CAssCochain& x) {
    Vec out;
    for (const auto& p : x.parts) out.insert(out.end(), p.c.begin(), p.c.end());
    return out;
}

inline CAssCochain cass_from_coords(int alg_dim, int mod_dim, int degree, const Vec& coords) {
    CAssCochain x = CAssCochain::zero(alg_dim, mod_dim, degree);
    size_t off = 0;
    for (auto& p : x.parts) {
        std::copy(coords.begin() + off, coords.begin() + off + p.c.size(), p.c.begin());
        off += p.c.size();
    }
    if (off != coords.size()) throw std::invalid_argument("cass_from_coords: length mismatch");
    return x;
}

inline CochainComplex cass_complex(const CompatibleAlgebra& c, const CompatibleBimodule& cb) {
    if (!check_compatible_associative(c).pass() || !check_compatible_bimodule(c, cb).pass())
        throw std::domain_error("cass_complex: structures fail their checks");
    const int da = c.dim, dm = cb.module_dim;
    CochainComplex cx;
    cx.dim = [da, dm](int n) {
        if (n == 0) return dm;
        return static_cast<int>(CAssCochain::part_count(n) * dm * int_pow(da, n));
    };
    cx.apply = [c, cb, da, dm](int n, const Vec& coords) {
        return cass_to_coords(delta_cass(c, cb, cass_from_coords(da, dm, n, coords)));
    };
    Subspace w = kernel_basis(cass_degree0_constraint(c, cb));
    Matrix incl(dm, w.dim());
    for (int j = 0; j < w.dim(); ++j)
        for (int i = 0; i < dm; ++i) incl.set(i, j, w.basis()[j][i]);
    cx.degree0_inclusion = incl;
    return cx;
}

// ---- route comparisons ----------------------------------------------------

/// The two Hochschild routes of the induced structures against the bracket
/// route, checked on every basis cochain (the identities are linear).
inline CheckReport verify_induced_iso(const OContext& ctx, const OperatorPair& p) {
    if (!is_compatible_pair(ctx, p).pass()) throw std::domain_error("verify_induced_iso: pair is not compatible");
    CheckReport rep{"induced compatible-associative route"};
    CompatibleAlgebra ca = induced_compatible_algebra(ctx, p);
    CompatibleBimodule cb = induced_compatible_bimodule(ctx, p);
    const int dm = ctx.dim_m(), da = ctx.dim_a();

    auto check_route = [&](const BilinearMap& star, const BilinearMap& l, const BilinearMap& r, const LinOp& T,
                           const char* name) {
        for (int n = 0; n <= 3; ++n) {
            const size_t basis_count = static_cast<size_t>(da) * int_pow(dm, n);
            for (size_t b = 0; b < basis_count; ++b) {
                MMap f(n, dm, da);
                f.c[b] = Rational(1);
                MLMap lhs = hochschild_delta(star, l, r, f);
                MMap rhs = derived_bracket(ctx, T.as_mmap(), f).scaled(Rational(n % 2 == 0 ? 1 : -1));
                if (!(lhs - rhs).is_zero())
                    rep.defects.push_back({name, {n, static_cast<int>(b)}, (lhs - rhs).c});
            }
        }
    };
    check_route(ca.mu1, cb.l1, cb.r1, p.T1, "delta1_Ass = (-1)^n [T1,-]");
    check_route(ca.mu2, cb.l2, cb.r2, p.T2, "delta2_Ass = (-1)^n [T2,-]");

    // cohomology dims along the bracket route and the Hochschild route agree;
    // the underlying spaces are identified component-by-component
    CochainComplex bracket_route = pair_complex(ctx, p);
    CochainComplex hoch_route = bracket_route;
    hoch_route.apply = [ctx, ca, cb, da, dm](int n, const Vec& coords) {
        auto d1 = [&](const MMap& f) { return hochschild_delta(ca.mu1, cb.l1, cb.r1, f); };
        auto d2 = [&](const MMap& f) { return hochschild_delta(ca.mu2, cb.l2, cb.r2, f); };
        TupleCochain x = tuple_from_coords(ctx, n, coords);
        TupleCochain out = TupleCochain::zero(ctx, n + 1);
        const Rational sign(n % 2 == 0 ? 1 : -1);
        const int cm = TupleCochain::part_count(n);
        for (int i = 1; i <= TupleCochain::part_count(n + 1); ++i) {
            MMap acc = zero_mmap(ctx, n + 1);
            if (i <= cm) acc += d1(x.parts[i - 1]);
            if (i >= 2 && i - 2 < cm) acc += d2(x.parts[i - 2]);
            out.parts[i - 1] = acc.scaled(sign);
        }
        return tuple_to_coords(out);
    };
    for (int n = 0; n <= 2; ++n) {
        const int lhs = cohomology_dim(bracket_route, n);
        const int rhs = cohomology_dim(hoch_route, n);
        if (lhs != rhs)
            rep.defects.push_back({"cohomology dimension mismatch", {n}, {Rational(lhs), Rational(rhs)}});
    }
    return rep;
}

/// Theta is a chain map onto the total-operator complex, checked on all
/// basis cochains of degrees <= max_degree.
inline CheckReport verify_theta_chain_map(const OContext& ctx, const OperatorPair& p, int max_degree = 3) {
    if (!is_compatible_pair(ctx, p).pass())
        throw std::domain_error("verify_theta_chain_map: pair is not compatible");
    CheckReport rep{"theta chain map"};
    const LinOp total = p.T1 + p.T2;
    for (int n = 0; n <= max_degree; ++n) {
        TupleCochain probe = TupleCochain::zero(ctx, n);
        const Vec zero = tuple_to_coords(probe);
        for (size_t b = 0; b < zero.size(); ++b) {
            Vec coords = zero;
            coords[b] = Rational(1);
            TupleCochain x = tuple_from_coords(ctx, n, coords);
            MMap lhs = theta(delta_pair(ctx, p, x));
            MMap rhs = derived_bracket(ctx, total.as_mmap(), theta(x));
            if (!(lhs - rhs).is_zero())
                rep.defects.push_back({"theta o delta = delta_total o theta", {n, static_cast<int>(b)}, (lhs - rhs).c});
        }
    }
    return rep;
}

} // namespace ocoh
