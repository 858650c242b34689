#pragma once

#include "ocoh/cohomology.hpp"

namespace ocoh {

struct DendriformAlgebra {
    int dim = 0;
    BilinearMap prec, succ;
};

struct CompatibleDendriform {
    int dim = 0;
    BilinearMap prec1, succ1, prec2, succ2;
};

inline CheckReport check_dendriform(const DendriformAlgebra& d) {
    CheckReport rep{"dendriform algebra"};
    const int n = d.dim;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Vec ez = zero_vec(n), ex = zero_vec(n);
                ez[z] = Rational(1);
                ex[x] = Rational(1);
                {
                    // (x < y) < z - x < (y < z + y > z)
                    Vec lhs = d.prec.apply(d.prec.apply_basis(x, y), ez);
                    Vec inner = d.prec.apply_basis(y, z);
                    add_scaled(inner, Rational(1), d.succ.apply_basis(y, z));
                    add_scaled(lhs, Rational(-1), d.prec.apply(ex, inner));
                    rep.record("axiom 1", {x, y, z}, std::move(lhs));
                }
                {
                    // (x > y) < z - x > (y < z)
                    Vec lhs = d.prec.apply(d.succ.apply_basis(x, y), ez);
                    add_scaled(lhs, Rational(-1), d.succ.apply(ex, d.prec.apply_basis(y, z)));
                    rep.record("axiom 2", {x, y, z}, std::move(lhs));
                }
                {
                    // (x < y + x > y) > z - x > (y > z)
                    Vec star = d.prec.apply_basis(x, y);
                    add_scaled(star, Rational(1), d.succ.apply_basis(x, y));
                    Vec lhs = d.succ.apply(star, ez);
                    add_scaled(lhs, Rational(-1), d.succ.apply(ex, d.succ.apply_basis(y, z)));
                    rep.record("axiom 3", {x, y, z}, std::move(lhs));
                }
            }
    return rep;
}

inline CheckReport check_compatible_dendriform(const CompatibleDendriform& cd) {
    CheckReport rep{"compatible dendriform algebra"};
    const int n = cd.dim;
    rep.merge(check_dendriform({n, cd.prec1, cd.succ1}));
    rep.merge(check_dendriform({n, cd.prec2, cd.succ2}));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Vec ez = zero_vec(n), ex = zero_vec(n);
                ez[z] = Rational(1);
                ex[x] = Rational(1);
                {
                    Vec lhs = cd.prec2.apply(cd.prec1.apply_basis(x, y), ez);
                    add_scaled(lhs, Rational(1), cd.prec1.apply(cd.prec2.apply_basis(x, y), ez));
                    Vec s1 = cd.prec1.apply_basis(y, z);
                    add_scaled(s1, Rational(1), cd.succ1.apply_basis(y, z));
                    Vec s2 = cd.prec2.apply_basis(y, z);
                    add_scaled(s2, Rational(1), cd.succ2.apply_basis(y, z));
                    add_scaled(lhs, Rational(-1), cd.prec2.apply(ex, s1));
                    add_scaled(lhs, Rational(-1), cd.prec1.apply(ex, s2));
                    rep.record("mixed axiom 1", {x, y, z}, std::move(lhs));
                }
                {
                    Vec lhs = cd.prec2.apply(cd.succ1.apply_basis(x, y), ez);
                    add_scaled(lhs, Rational(1), cd.prec1.apply(cd.succ2.apply_basis(x, y), ez));
                    add_scaled(lhs, Rational(-1), cd.succ2.apply(ex, cd.prec1.apply_basis(y, z)));
                    add_scaled(lhs, Rational(-1), cd.succ1.apply(ex, cd.prec2.apply_basis(y, z)));
                    rep.record("mixed axiom 2", {x, y, z}, std::move(lhs));
                }
                {
                    Vec star1 = cd.prec1.apply_basis(x, y);
                    add_scaled(star1, Rational(1), cd.succ1.apply_basis(x, y));
                    Vec star2 = cd.prec2.apply_basis(x, y);
                    add_scaled(star2, Rational(1), cd.succ2.apply_basis(x, y));
                    Vec lhs = cd.succ2.apply(star1, ez);
                    add_scaled(lhs, Rational(1), cd.succ1.apply(star2, ez));
                    add_scaled(lhs, Rational(-1), cd.succ2.apply(ex, cd.succ1.apply_basis(y, z)));
                    add_scaled(lhs, Rational(-1), cd.succ1.apply(ex, cd.succ2.apply_basis(y, z)));
                    rep.record("mixed axiom 3", {x, y, z}, std::move(lhs));
                }
            }
    // redundant route: the summed operations form a dendriform algebra
    rep.merge(check_dendriform({n, cd.prec1 + cd.prec2, cd.succ1 + cd.succ2}));
    return rep;
}

// ---- the labeled nonsymmetric operad --------------------------------------

/// Box map R_{m;i,n}: C_{m+n-1} -> C_m (all 1-based).
inline int r_map(int m, int i, int n, int r) {
    if (i < 1 || i > m || r < 1 || r > m + n - 1) throw std::invalid_argument("r_map: index out of range");
    if (r < i) return r;
    if (r <= i + n - 1) return i;
    return r - n + 1;
}

/// Box map S_{m;i,n}: C_{m+n-1} -> k[C_n], as a coefficient vector over C_n.
inline Vec s_map(int m, int i, int n, int r) {
    if (i < 1 || i > m || r < 1 || r > m + n - 1) throw std::invalid_argument("s_map: index out of range");
    Vec out = zero_vec(n);
    if (r >= i && r <= i + n - 1) {
        out[r - i] = Rational(1);
    } else {
        for (int s = 0; s < n; ++s) out[s] = Rational(1);
    }
    return out;
}

/// Element of Hom(k[C_n] (x) D^n, D): one coefficient tensor per label.
struct DendCochain {
    int arity = 0;
    int dim = 0;
    std::vector<MLMap> labels; // labels[r-1] : D^arity -> D

    static DendCochain zero(int dim, int arity) {
        DendCochain c;
        c.arity = arity;
        c.dim = dim;
        c.labels.assign(static_cast<size_t>(arity), MLMap(arity, dim, dim));
        return c;
    }

    bool is_zero() const {
        for (const auto& f : labels)
            if (!f.is_zero()) return false;
        return true;
    }

    DendCochain& operator+=(const DendCochain& o) {
        if (arity != o.arity || dim != o.dim) throw std::invalid_argument("DendCochain: shape mismatch");
        for (size_t i = 0; i < labels.size(); ++i) labels[i] += o.labels[i];
        return *this;
    }
    friend DendCochain operator+(DendCochain a, const DendCochain& b) { return a += b; }
    DendCochain scaled(const Rational& s) const {
        DendCochain c = *this;
        for (auto& f : c.labels) f = f.scaled(s);
        return c;
    }
    friend bool operator==(const DendCochain& a, const DendCochain& b) {
        return a.arity == b.arity && a.dim == b.dim && a.labels == b.labels;
    }
};

/// The arity-1 identity cochain (the operad unit).
inline DendCochain dend_identity(int dim) {
    DendCochain c = DendCochain::zero(dim, 1);
    for (int k = 0; k < dim; ++k) c.labels[0].at(k, static_cast<size_t>(k)) = Rational(1);
    return c;
}

/// (f o_i g)([r]; x..) = f(R[r]; .., g(S[r]; ..), ..) with the S formal sum
/// expanded linearly.
inline DendCochain partial_composition(const DendCochain& f, int i, const DendCochain& g) {
    if (f.dim != g.dim) throw std::invalid_argument("partial_composition: dimension mismatch");
    const int m = f.arity, n = g.arity, d = f.dim;
    if (i < 1 || i > m) throw std::invalid_argument("partial_composition: slot out of range");
    DendCochain out = DendCochain::zero(d, m + n - 1);
    for (int r = 1; r <= m + n - 1; ++r) {
        const int fr = r_map(m, i, n, r);
        const Vec scoef = s_map(m, i, n, r);
        MLMap& target = out.labels[static_cast<size_t>(r - 1)];
        detail::for_each_index(m + n - 1, d, [&](const std::vector<int>& idx) {
            Vec inner = zero_vec(d);
            for (int s = 1; s <= n; ++s) {
                if (scoef[s - 1].is_zero()) continue;
                std::vector<int> gidx(idx.begin() + (i - 1), idx.begin() + (i - 1) + n);
                add_scaled(inner, scoef[s - 1], g.labels[static_cast<size_t>(s - 1)].value(gidx));
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

/// The degree -1 graded Lie bracket of the labeled operad; arity-m cochains
/// have degree m - 1.
inline DendCochain brace_bracket(const DendCochain& f, const DendCochain& g) {
    const int m = f.arity, n = g.arity;
    DendCochain out = DendCochain::zero(f.dim, m + n - 1);
    for (int i = 1; i <= m; ++i) {
        const int s = detail::pow_sign(static_cast<long>(i - 1) * (n - 1));
        out += partial_composition(f, i, g).scaled(Rational(s));
    }
    const int smn = detail::pow_sign(static_cast<long>(m - 1) * (n - 1));
    for (int i = 1; i <= n; ++i) {
        const int s = -smn * detail::pow_sign(static_cast<long>(i - 1) * (m - 1));
        out += partial_composition(g, i, f).scaled(Rational(s));
    }
    return out;
}

/// pi_j([1]; x, y) = x prec_j y and pi_j([2]; x, y) = x succ_j y.
inline std::pair<DendCochain, DendCochain> structure_cochains(const CompatibleDendriform& cd) {
    auto build = [&](const BilinearMap& prec, const BilinearMap& succ) {
        DendCochain c = DendCochain::zero(cd.dim, 2);
        for (int x = 0; x < cd.dim; ++x)
            for (int y = 0; y < cd.dim; ++y)
                for (int k = 0; k < cd.dim; ++k) {
                    c.labels[0].at(k, c.labels[0].flatten({x, y})) = prec.at(x, y, k);
                    c.labels[1].at(k, c.labels[1].flatten({x, y})) = succ.at(x, y, k);
                }
        return c;
    };
    return {build(cd.prec1, cd.succ1), build(cd.prec2, cd.succ2)};
}

struct CompDendCochain {
    int degree = 0; // n >= 1, with n parts of arity n
    std::vector<DendCochain> parts;

    static CompDendCochain zero(int dim, int degree) {
        CompDendCochain x;
        x.degree = degree;
        x.parts.assign(static_cast<size_t>(degree), DendCochain::zero(dim, degree));
        return x;
    }

    bool is_zero() const {
        for (const auto& p : parts)
            if (!p.is_zero()) return false;
        return true;
    }
    friend bool operator==(const CompDendCochain& a, const CompDendCochain& b) {
        return a.degree == b.degree && a.parts == b.parts;
    }
};

/// delta_cDend((f_1..f_n)) = (-1)^{n-1}({{pi1,f_1}}, .., {{pi1,f_i}} +
/// {{pi2,f_{i-1}}}, .., {{pi2,f_n}}).
inline CompDendCochain delta_cdend(const CompatibleDendriform& cd, const CompDendCochain& x) {
    if (!check_compatible_dendriform(cd).pass())
        throw std::domain_error("delta_cdend: structure fails the compatible dendriform axioms");
    const int n = x.degree;
    auto [pi1, pi2] = structure_cochains(cd);
    CompDendCochain out = CompDendCochain::zero(cd.dim, n + 1);
    const Rational sign((n - 1) % 2 == 0 ? 1 : -1);
    for (int i = 1; i <= n + 1; ++i) {
        DendCochain acc = DendCochain::zero(cd.dim, n + 1);
        if (i <= n) acc += brace_bracket(pi1, x.parts[static_cast<size_t>(i - 1)]);
        if (i >= 2) acc += brace_bracket(pi2, x.parts[static_cast<size_t>(i - 2)]);
        out.parts[static_cast<size_t>(i - 1)] = acc.scaled(sign);
    }
    return out;
}

inline Vec cdend_to_coords(const CompDendCochain& x) {
    Vec out;
    for (const auto& p : x.parts)
        for (const auto& f : p.labels) out.insert(out.end(), f.c.begin(), f.c.end());
    return out;
}

inline CompDendCochain cdend_from_coords(int dim, int degree, const Vec& coords) {
    CompDendCochain x = CompDendCochain::zero(dim, degree);
    size_t off = 0;
    for (auto& p : x.parts)
        for (auto& f : p.labels) {
            std::copy(coords.begin() + off, coords.begin() + off + f.c.size(), f.c.begin());
            off += f.c.size();
        }
    if (off != coords.size()) throw std::invalid_argument("cdend_from_coords: length mismatch");
    return x;
}

inline CochainComplex cdend_complex(const CompatibleDendriform& cd) {
    if (!check_compatible_dendriform(cd).pass())
        throw std::domain_error("cdend_complex: structure fails the compatible dendriform axioms");
    const int d = cd.dim;
    auto pis = structure_cochains(cd);
    CochainComplex cx;
    cx.dim = [d](int n) {
        if (n < 1) return 0;
        return static_cast<int>(static_cast<size_t>(n) * n * int_pow(d, n) * d);
    };
    cx.apply = [cd, pis, d](int n, const Vec& coords) {
        CompDendCochain x = cdend_from_coords(d, n, coords);
        CompDendCochain out = CompDendCochain::zero(d, n + 1);
        const Rational sign((n - 1) % 2 == 0 ? 1 : -1);
        for (int i = 1; i <= n + 1; ++i) {
            DendCochain acc = DendCochain::zero(d, n + 1);
            if (i <= n) acc += brace_bracket(pis.first, x.parts[static_cast<size_t>(i - 1)]);
            if (i >= 2) acc += brace_bracket(pis.second, x.parts[static_cast<size_t>(i - 2)]);
            out.parts[static_cast<size_t>(i - 1)] = acc.scaled(sign);
        }
        return cdend_to_coords(out);
    };
    return cx;
}

inline int cohomology_dim_cdend(const CompatibleDendriform& cd, int degree) {
    if (degree < 1) throw std::invalid_argument("cohomology_dim_cdend: degree must be >= 1");
    CochainComplex cx = cdend_complex(cd);
    if (degree == 1) return kernel_basis(coboundary_matrix(cx, 1)).dim();
    return cohomology_dim(cx, degree);
}

// ---- functors -------------------------------------------------------------

/// x *j y = x prec_j y + x succ_j y.
inline CompatibleAlgebra total_algebra(const CompatibleDendriform& cd) {
    if (!check_compatible_dendriform(cd).pass())
        throw std::domain_error("total_algebra: structure fails the compatible dendriform axioms");
    return CompatibleAlgebra{cd.dim, cd.prec1 + cd.succ1, cd.prec2 + cd.succ2};
}

/// u prec_{Tj} v = u . Tj(v), u succ_{Tj} v = Tj(u) . v on the module.
inline CompatibleDendriform induced_dendriform(const OContext& ctx, const OperatorPair& p) {
    if (!is_compatible_pair(ctx, p).pass())
        throw std::domain_error("induced_dendriform: pair is not compatible");
    const int dm = ctx.dim_m();
    CompatibleDendriform cd;
    cd.dim = dm;
    cd.prec1 = BilinearMap(dm, dm, dm);
    cd.succ1 = BilinearMap(dm, dm, dm);
    cd.prec2 = BilinearMap(dm, dm, dm);
    cd.succ2 = BilinearMap(dm, dm, dm);
    for (int u = 0; u < dm; ++u)
        for (int v = 0; v < dm; ++v) {
            Vec eu = zero_vec(dm), ev = zero_vec(dm);
            eu[u] = Rational(1);
            ev[v] = Rational(1);
            const Vec p1 = ctx.act_right(eu, p.T1.apply_basis(v));
            const Vec s1 = ctx.act_left(p.T1.apply_basis(u), ev);
            const Vec p2 = ctx.act_right(eu, p.T2.apply_basis(v));
            const Vec s2 = ctx.act_left(p.T2.apply_basis(u), ev);
            for (int k = 0; k < dm; ++k) {
                cd.prec1.at(u, v, k) = p1[k];
                cd.succ1.at(u, v, k) = s1[k];
                cd.prec2.at(u, v, k) = p2[k];
                cd.succ2.at(u, v, k) = s2[k];
            }
        }
    return cd;
}

/// psi preserves all four operations.
inline CheckReport check_dendriform_morphism(const CompatibleDendriform& from, const CompatibleDendriform& to,
                                             const Matrix& psi) {
    if (psi.rows() != to.dim || psi.cols() != from.dim)
        throw std::invalid_argument("check_dendriform_morphism: map shape mismatch");
    CheckReport rep{"morphism of compatible dendriform algebras"};
    auto col = [&](int j) {
        Vec v = zero_vec(psi.rows());
        for (int i = 0; i < psi.rows(); ++i) v[i] = psi.at(i, j);
        return v;
    };
    auto check_op = [&](const BilinearMap& f, const BilinearMap& g, const char* name) {
        for (int x = 0; x < from.dim; ++x)
            for (int y = 0; y < from.dim; ++y) {
                Vec lhs = psi.apply(f.apply_basis(x, y));
                Vec rhs = g.apply(col(x), col(y));
                for (size_t k = 0; k < lhs.size(); ++k) lhs[k] -= rhs[k];
                rep.record(name, {x, y}, std::move(lhs));
            }
    };
    check_op(from.prec1, to.prec1, "prec1");
    check_op(from.succ1, to.succ1, "succ1");
    check_op(from.prec2, to.prec2, "prec2");
    check_op(from.succ2, to.succ2, "succ2");
    return rep;
}

struct PreLieAlgebra {
    int dim = 0;
    BilinearMap diamond;
};

struct CompatiblePreLie {
    int dim = 0;
    BilinearMap diamond1, diamond2;
};

inline CheckReport check_prelie(const PreLieAlgebra& p) {
    CheckReport rep{"pre-Lie algebra"};
    const int n = p.dim;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Vec ez = zero_vec(n), ex = zero_vec(n), ey = zero_vec(n);
                ez[z] = Rational(1);
                ex[x] = Rational(1);
                ey[y] = Rational(1);
                Vec lhs = p.diamond.apply(p.diamond.apply_basis(x, y), ez);
                add_scaled(lhs, Rational(-1), p.diamond.apply(ex, p.diamond.apply_basis(y, z)));
                add_scaled(lhs, Rational(-1), p.diamond.apply(p.diamond.apply_basis(y, x), ez));
                add_scaled(lhs, Rational(1), p.diamond.apply(ey, p.diamond.apply_basis(x, z)));
                rep.record("left pre-Lie identity", {x, y, z}, std::move(lhs));
            }
    return rep;
}

inline CheckReport check_compatible_prelie(const CompatiblePreLie& p) {
    CheckReport rep{"compatible pre-Lie algebra"};
    rep.merge(check_prelie({p.dim, p.diamond1}));
    rep.merge(check_prelie({p.dim, p.diamond2}));
    rep.merge(check_prelie({p.dim, p.diamond1 + p.diamond2}));
    return rep;
}

inline CheckReport check_lie(const BilinearMap& b) {
    CheckReport rep{"Lie algebra"};
    const int n = b.d1;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Vec skew = b.apply_basis(x, y);
            add_scaled(skew, Rational(1), b.apply_basis(y, x));
            rep.record("skew-symmetry", {x, y}, std::move(skew));
            for (int z = 0; z < n; ++z) {
                Vec jac = b.apply(b.apply_basis(x, y), [&] {
                    Vec e = zero_vec(n);
                    e[z] = Rational(1);
                    return e;
                }());
                add_scaled(jac, Rational(1), b.apply(b.apply_basis(y, z), [&] {
                               Vec e = zero_vec(n);
                               e[x] = Rational(1);
                               return e;
                           }()));
                add_scaled(jac, Rational(1), b.apply(b.apply_basis(z, x), [&] {
                               Vec e = zero_vec(n);
                               e[y] = Rational(1);
                               return e;
                           }()));
                rep.record("Jacobi", {x, y, z}, std::move(jac));
            }
        }
    return rep;
}

inline CheckReport check_compatible_lie(const BilinearMap& b1, const BilinearMap& b2) {
    CheckReport rep{"compatible Lie algebra"};
    rep.merge(check_lie(b1));
    rep.merge(check_lie(b2));
    rep.merge(check_lie(b1 + b2));
    return rep;
}

/// x diamond_j y = x succ_j y - y prec_j x.
inline CompatiblePreLie sub_adjacent_prelie(const CompatibleDendriform& cd) {
    if (!check_compatible_dendriform(cd).pass())
        throw std::domain_error("sub_adjacent_prelie: structure fails the compatible dendriform axioms");
    const int n = cd.dim;
    CompatiblePreLie out{n, BilinearMap(n, n, n), BilinearMap(n, n, n)};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int k = 0; k < n; ++k) {
                out.diamond1.at(x, y, k) = cd.succ1.at(x, y, k) - cd.prec1.at(y, x, k);
                out.diamond2.at(x, y, k) = cd.succ2.at(x, y, k) - cd.prec2.at(y, x, k);
            }
    return out;
}

/// Subadjacent brackets [x,y]_j = x diamond_j y - y diamond_j x.
inline std::pair<BilinearMap, BilinearMap> prelie_to_lie(const CompatiblePreLie& p) {
    const int n = p.dim;
    BilinearMap b1(n, n, n), b2(n, n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int k = 0; k < n; ++k) {
                b1.at(x, y, k) = p.diamond1.at(x, y, k) - p.diamond1.at(y, x, k);
                b2.at(x, y, k) = p.diamond2.at(x, y, k) - p.diamond2.at(y, x, k);
            }
    return {b1, b2};
}

/// Phi_n: label-sum into the compatible-associative complex of the total
/// algebra with adjoint coefficients.
inline CAssCochain phi_map(const CompDendCochain& x) {
    const int n = x.degree;
    const int d = x.parts.empty() ? 0 : x.parts[0].dim;
    CAssCochain out = CAssCochain::zero(d, d, n);
    for (int i = 0; i < n; ++i) {
        MLMap tot(n, d, d);
        for (const auto& lab : x.parts[static_cast<size_t>(i)].labels) tot += lab;
        out.parts[static_cast<size_t>(i)] = std::move(tot);
    }
    return out;
}

/// Psi_n: the compatible-operator cochain (f_1..f_{n+1}) embeds into labeled
/// (n+1)-cochains of the induced dendriform structure on M. The whole map is
/// normalized by the unit (-1)^{n(n-1)/2}, which makes the square with
/// delta_cDend commute exactly under the bracket conventions used here.
inline CompDendCochain psi_map(const OContext& ctx, const TupleCochain& x) {
    x.validate();
    const int n = x.degree;
    if (n < 1) throw std::invalid_argument("psi_map: degree must be >= 1");
    const int dm = ctx.dim_m();
    CompDendCochain out = CompDendCochain::zero(dm, n + 1);
    const Rational eps((static_cast<long>(n) * (n - 1) / 2) % 2 == 0 ? 1 : -1);
    const Rational lead = eps * Rational((n + 1) % 2 == 0 ? 1 : -1);
    for (int i = 0; i <= n; ++i) {
        DendCochain& target = out.parts[static_cast<size_t>(i)];
        const MMap& f = x.parts[static_cast<size_t>(i)];
        detail::for_each_index(n + 1, dm, [&](const std::vector<int>& idx) {
            {
                // label [1]: (-1)^{n+1} u_1 . f(u_2..u_{n+1})
                std::vector<int> rest(idx.begin() + 1, idx.end());
                Vec eu = zero_vec(dm);
                eu[idx[0]] = Rational(1);
                Vec val = ctx.act_right(eu, f.value(rest));
                const size_t flat = target.labels[0].flatten(idx);
                for (int k = 0; k < dm; ++k) target.labels[0].at(k, flat) = lead * val[k];
            }
            {
                // label [n+1]: f(u_1..u_n) . u_{n+1}
                std::vector<int> head(idx.begin(), idx.end() - 1);
                Vec eu = zero_vec(dm);
                eu[idx[static_cast<size_t>(n)]] = Rational(1);
                Vec val = ctx.act_left(f.value(head), eu);
                const size_t flat = target.labels[static_cast<size_t>(n)].flatten(idx);
                for (int k = 0; k < dm; ++k) target.labels[static_cast<size_t>(n)].at(k, flat) = eps * val[k];
            }
        });
    }
    return out;
}

} // namespace ocoh
