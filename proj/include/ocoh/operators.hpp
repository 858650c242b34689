#pragma once

#include "ocoh/mmap.hpp"

#include <optional>

namespace ocoh {

/// Linear map T : M -> A as a dense dimA x dimM matrix of column images.
struct LinOp {
    int alg_dim = 0;
    int mod_dim = 0;
    std::vector<Rational> m; // m[a * mod_dim + u] = e_a coefficient of T(m_u)

    LinOp() = default;
    LinOp(int alg_dim_, int mod_dim_)
        : alg_dim(alg_dim_), mod_dim(mod_dim_), m(static_cast<size_t>(alg_dim_) * mod_dim_) {}

    const Rational& at(int a, int u) const { return m[static_cast<size_t>(a) * mod_dim + u]; }
    Rational& at(int a, int u) { return m[static_cast<size_t>(a) * mod_dim + u]; }

    Vec apply_basis(int u) const {
        Vec out(static_cast<size_t>(alg_dim));
        for (int a = 0; a < alg_dim; ++a) out[a] = at(a, u);
        return out;
    }

    Vec apply(const Vec& x) const {
        Vec out = zero_vec(alg_dim);
        for (int u = 0; u < mod_dim; ++u)
            if (!x[u].is_zero()) add_scaled(out, x[u], apply_basis(u));
        return out;
    }

    MMap as_mmap() const {
        MMap f(1, mod_dim, alg_dim);
        f.c = m; // both are out-major over a single input slot
        return f;
    }

    static LinOp from_mmap(const MMap& f) {
        if (f.arity != 1) throw std::invalid_argument("LinOp::from_mmap: arity must be 1");
        LinOp t(f.out_dim, f.in_dim);
        t.m = f.c;
        return t;
    }

    LinOp& operator+=(const LinOp& o) {
        if (alg_dim != o.alg_dim || mod_dim != o.mod_dim) throw std::invalid_argument("LinOp: shape mismatch");
        for (size_t i = 0; i < m.size(); ++i) m[i] += o.m[i];
        return *this;
    }
    friend LinOp operator+(LinOp a, const LinOp& b) { return a += b; }
    LinOp scaled(const Rational& s) const {
        LinOp r = *this;
        for (auto& v : r.m) v = v * s;
        return r;
    }
    LinOp operator-() const { return scaled(Rational(-1)); }
    bool is_zero() const {
        for (const auto& v : m)
            if (!v.is_zero()) return false;
        return true;
    }
    friend bool operator==(const LinOp& a, const LinOp& b) {
        return a.alg_dim == b.alg_dim && a.mod_dim == b.mod_dim && a.m == b.m;
    }
};

struct OperatorPair {
    LinOp T1, T2;
};

namespace detail {
inline void check_op_shape(const OContext& ctx, const LinOp& t) {
    if (t.alg_dim != ctx.dim_a() || t.mod_dim != ctx.dim_m())
        throw std::invalid_argument("operator shape does not match context");
}
} // namespace detail

/// T(u).T(v) = T(T(u).v + u.T(v)) on all basis pairs.
inline CheckReport is_ooperator(const OContext& ctx, const LinOp& T) {
    detail::check_op_shape(ctx, T);
    CheckReport rep{"O-operator"};
    const int dm = ctx.dim_m();
    for (int u = 0; u < dm; ++u)
        for (int v = 0; v < dm; ++v) {
            Vec eu = zero_vec(dm), ev = zero_vec(dm);
            eu[u] = Rational(1);
            ev[v] = Rational(1);
            const Vec tu = T.apply_basis(u), tv = T.apply_basis(v);
            Vec lhs = ctx.mul(tu, tv);
            Vec inner = ctx.act_left(tu, ev);
            const Vec inner2 = ctx.act_right(eu, tv);
            for (int w = 0; w < dm; ++w) inner[w] += inner2[w];
            const Vec rhs = T.apply(inner);
            for (int k = 0; k < ctx.dim_a(); ++k) lhs[k] -= rhs[k];
            rep.record("O-operator identity", {u, v}, std::move(lhs));
        }
    return rep;
}

/// Both operators pass, the mixed identity holds, and (redundantly) the sum
/// is again an O-operator.
inline CheckReport is_compatible_pair(const OContext& ctx, const OperatorPair& p) {
    CheckReport rep{"compatible O-operator pair"};
    {
        CheckReport r1 = is_ooperator(ctx, p.T1);
        for (auto& d : r1.defects) d.identity = "T1 " + d.identity;
        rep.merge(r1);
        CheckReport r2 = is_ooperator(ctx, p.T2);
        for (auto& d : r2.defects) d.identity = "T2 " + d.identity;
        rep.merge(r2);
    }
    const int dm = ctx.dim_m();
    for (int u = 0; u < dm; ++u)
        for (int v = 0; v < dm; ++v) {
            Vec eu = zero_vec(dm), ev = zero_vec(dm);
            eu[u] = Rational(1);
            ev[v] = Rational(1);
            const Vec t1u = p.T1.apply_basis(u), t1v = p.T1.apply_basis(v);
            const Vec t2u = p.T2.apply_basis(u), t2v = p.T2.apply_basis(v);
            Vec lhs = ctx.mul(t1u, t2v);
            add_scaled(lhs, Rational(1), ctx.mul(t2u, t1v));
            Vec arg1 = ctx.act_left(t2u, ev);
            add_scaled(arg1, Rational(1), ctx.act_right(eu, t2v));
            Vec arg2 = ctx.act_left(t1u, ev);
            add_scaled(arg2, Rational(1), ctx.act_right(eu, t1v));
            const Vec rhs1 = p.T1.apply(arg1), rhs2 = p.T2.apply(arg2);
            for (int k = 0; k < ctx.dim_a(); ++k) lhs[k] -= rhs1[k] + rhs2[k];
            rep.record("mixed identity", {u, v}, std::move(lhs));
        }
    rep.merge([&] {
        CheckReport r = is_ooperator(ctx, p.T1 + p.T2);
        for (auto& d : r.defects) d.identity = "T1+T2 " + d.identity;
        return r;
    }());
    return rep;
}

/// u *i v = Ti(u).v + u.Ti(v): the compatible associative structure on M.
inline CompatibleAlgebra induced_compatible_algebra(const OContext& ctx, const OperatorPair& p) {
    if (!is_compatible_pair(ctx, p).pass())
        throw std::domain_error("induced_compatible_algebra: pair is not compatible");
    const int dm = ctx.dim_m();
    CompatibleAlgebra out;
    out.dim = dm;
    out.mu1 = BilinearMap(dm, dm, dm);
    out.mu2 = BilinearMap(dm, dm, dm);
    for (int u = 0; u < dm; ++u)
        for (int v = 0; v < dm; ++v) {
            Vec eu = zero_vec(dm), ev = zero_vec(dm);
            eu[u] = Rational(1);
            ev[v] = Rational(1);
            Vec s1 = ctx.act_left(p.T1.apply_basis(u), ev);
            add_scaled(s1, Rational(1), ctx.act_right(eu, p.T1.apply_basis(v)));
            Vec s2 = ctx.act_left(p.T2.apply_basis(u), ev);
            add_scaled(s2, Rational(1), ctx.act_right(eu, p.T2.apply_basis(v)));
            for (int w = 0; w < dm; ++w) {
                out.mu1.at(u, v, w) = s1[w];
                out.mu2.at(u, v, w) = s2[w];
            }
        }
    return out;
}

/// l_T(u, a) = T(u).a - T(u.a) and r_T(a, u) = a.T(u) - T(a.u): the compatible
/// bimodule structure on A over the induced algebra (M, *1, *2).
inline CompatibleBimodule induced_compatible_bimodule(const OContext& ctx, const OperatorPair& p) {
    if (!is_compatible_pair(ctx, p).pass())
        throw std::domain_error("induced_compatible_bimodule: pair is not compatible");
    const int dm = ctx.dim_m(), da = ctx.dim_a();
    CompatibleBimodule out;
    out.algebra_dim = dm; // the algebra is (M, *1, *2)
    out.module_dim = da;  // the module is A
    out.l1 = BilinearMap(dm, da, da);
    out.l2 = BilinearMap(dm, da, da);
    out.r1 = BilinearMap(da, dm, da);
    out.r2 = BilinearMap(da, dm, da);
    for (int u = 0; u < dm; ++u)
        for (int a = 0; a < da; ++a) {
            Vec eu = zero_vec(dm), ea = zero_vec(da);
            eu[u] = Rational(1);
            ea[a] = Rational(1);
            auto fill_l = [&](const LinOp& T, BilinearMap& l) {
                Vec val = ctx.mul(T.apply_basis(u), ea);
                const Vec inner = T.apply(ctx.act_right(eu, ea));
                for (int k = 0; k < da; ++k) {
                    val[k] -= inner[k];
                    l.at(u, a, k) = val[k];
                }
            };
            auto fill_r = [&](const LinOp& T, BilinearMap& r) {
                Vec val = ctx.mul(ea, T.apply_basis(u));
                const Vec inner = T.apply(ctx.act_left(ea, eu));
                for (int k = 0; k < da; ++k) {
                    val[k] -= inner[k];
                    r.at(a, u, k) = val[k];
                }
            };
            fill_l(p.T1, out.l1);
            fill_l(p.T2, out.l2);
            fill_r(p.T1, out.r1);
            fill_r(p.T2, out.r2);
        }
    return out;
}

/// Morphism of compatible O-operators (phi, psi): phi an algebra map,
/// phi T_i = T'_i psi, and psi equivariant for both actions.
inline CheckReport check_morphism(const OContext& ctx, const Matrix& phi, const Matrix& psi,
                                  const OperatorPair& from, const OperatorPair& to) {
    const int da = ctx.dim_a(), dm = ctx.dim_m();
    if (phi.rows() != da || phi.cols() != da || psi.rows() != dm || psi.cols() != dm)
        throw std::invalid_argument("check_morphism: map shape mismatch");
    CheckReport rep{"morphism of compatible O-operators"};

    auto col = [](const Matrix& m, int j) {
        Vec v = zero_vec(m.rows());
        for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
        return v;
    };

    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            Vec lhs = phi.apply(ctx.algebra.mu.apply_basis(i, j));
            Vec rhs = ctx.mul(col(phi, i), col(phi, j));
            for (int k = 0; k < da; ++k) lhs[k] -= rhs[k];
            rep.record("phi multiplicative", {i, j}, std::move(lhs));
        }
    for (int u = 0; u < dm; ++u) {
        {
            Vec lhs = phi.apply(from.T1.apply_basis(u));
            Vec rhs = to.T1.apply(col(psi, u));
            for (int k = 0; k < da; ++k) lhs[k] -= rhs[k];
            rep.record("phi T1 = T1' psi", {u}, std::move(lhs));
        }
        {
            Vec lhs = phi.apply(from.T2.apply_basis(u));
            Vec rhs = to.T2.apply(col(psi, u));
            for (int k = 0; k < da; ++k) lhs[k] -= rhs[k];
            rep.record("phi T2 = T2' psi", {u}, std::move(lhs));
        }
    }
    for (int i = 0; i < da; ++i)
        for (int u = 0; u < dm; ++u) {
            {
                Vec eu = zero_vec(dm);
                eu[u] = Rational(1);
                Vec ei = zero_vec(da);
                ei[i] = Rational(1);
                Vec lhs = psi.apply(ctx.act_left(ei, eu));
                Vec rhs = ctx.act_left(col(phi, i), col(psi, u));
                for (int k = 0; k < dm; ++k) lhs[k] -= rhs[k];
                rep.record("psi(a.u) = phi(a).psi(u)", {i, u}, std::move(lhs));
            }
            {
                Vec eu = zero_vec(dm);
                eu[u] = Rational(1);
                Vec ei = zero_vec(da);
                ei[i] = Rational(1);
                Vec lhs = psi.apply(ctx.act_right(eu, ei));
                Vec rhs = ctx.act_right(col(psi, u), col(phi, i));
                for (int k = 0; k < dm; ++k) lhs[k] -= rhs[k];
                rep.record("psi(u.a) = psi(u).phi(a)", {u, i}, std::move(lhs));
            }
        }
    return rep;
}

/// Element r = sum r[i][j] e_i (x) e_j of A (x) A.
struct TwoTensor {
    int dim = 0;
    std::vector<Rational> r;

    TwoTensor() = default;
    explicit TwoTensor(int dim_) : dim(dim_), r(static_cast<size_t>(dim_) * dim_) {}

    const Rational& at(int i, int j) const { return r[static_cast<size_t>(i) * dim + j]; }
    Rational& at(int i, int j) { return r[static_cast<size_t>(i) * dim + j]; }

    TwoTensor operator-() const {
        TwoTensor t = *this;
        for (auto& v : t.r) v = -v;
        return t;
    }
};

inline bool is_skew(const TwoTensor& r) {
    for (int i = 0; i < r.dim; ++i)
        for (int j = 0; j < r.dim; ++j)
            if (r.at(i, j) != -r.at(j, i)) return false;
    return true;
}

/// r13 r12 - r12 r23 + r23 r13 in A (x) A (x) A, reported as a defect tensor.
inline CheckReport aybe_check(const Algebra& alg, const TwoTensor& r) {
    if (r.dim != alg.dim) throw std::invalid_argument("aybe_check: dimension mismatch");
    CheckReport rep{"associative Yang-Baxter"};
    const int n = alg.dim;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int s = 0; s < n; ++s) {
                Rational acc(0);
                for (int i = 0; i < n; ++i)
                    for (int k = 0; k < n; ++k) {
                        acc += r.at(i, s) * r.at(k, q) * alg.mu.at(i, k, p); // r13 r12
                        acc -= r.at(p, i) * r.at(k, s) * alg.mu.at(i, k, q); // r12 r23
                        acc += r.at(q, i) * r.at(p, k) * alg.mu.at(i, k, s); // r23 r13
                    }
                if (!acc.is_zero()) rep.defects.push_back({"AYBE", {p, q, s}, {acc}});
            }
    return rep;
}

/// The six-term mixed identity for a pair of Yang-Baxter solutions.
inline CheckReport compatible_aybe_check(const Algebra& alg, const TwoTensor& r1, const TwoTensor& r2) {
    if (r1.dim != alg.dim || r2.dim != alg.dim) throw std::invalid_argument("compatible_aybe_check: dimension mismatch");
    CheckReport rep{"compatible associative Yang-Baxter"};
    rep.merge([&] {
        CheckReport r = aybe_check(alg, r1);
        for (auto& d : r.defects) d.identity = "r1 " + d.identity;
        return r;
    }());
    rep.merge([&] {
        CheckReport r = aybe_check(alg, r2);
        for (auto& d : r.defects) d.identity = "r2 " + d.identity;
        return r;
    }());
    const int n = alg.dim;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int s = 0; s < n; ++s) {
                Rational acc(0);
                for (int i = 0; i < n; ++i)
                    for (int k = 0; k < n; ++k) {
                        acc += r1.at(i, s) * r2.at(k, q) * alg.mu.at(i, k, p);
                        acc += r2.at(i, s) * r1.at(k, q) * alg.mu.at(i, k, p);
                        acc -= r1.at(p, i) * r2.at(k, s) * alg.mu.at(i, k, q);
                        acc -= r2.at(p, i) * r1.at(k, s) * alg.mu.at(i, k, q);
                        acc += r2.at(p, i) * r1.at(q, k) * alg.mu.at(k, i, s);
                        acc += r1.at(p, i) * r2.at(q, k) * alg.mu.at(k, i, s);
                    }
                if (!acc.is_zero()) rep.defects.push_back({"mixed AYBE", {p, q, s}, {acc}});
            }
    return rep;
}

/// T(a) = sum r[i][j] e_i . a . e_j, an operator on the adjoint bimodule.
inline LinOp rb_from_tensor(const Algebra& alg, const TwoTensor& r) {
    if (r.dim != alg.dim) throw std::invalid_argument("rb_from_tensor: dimension mismatch");
    const int n = alg.dim;
    LinOp T(n, n);
    for (int u = 0; u < n; ++u) {
        Vec img = zero_vec(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (r.at(i, j).is_zero()) continue;
                Vec eu = zero_vec(n), ej = zero_vec(n);
                eu[u] = Rational(1);
                ej[j] = Rational(1);
                Vec ei = zero_vec(n);
                ei[i] = Rational(1);
                add_scaled(img, r.at(i, j), alg.mu.apply(alg.mu.apply(ei, eu), ej));
            }
        for (int k = 0; k < n; ++k) T.at(k, u) = img[k];
    }
    return T;
}

/// r_sharp(f) = sum f(r^{[2]}) r^{[1]}, an operator A* -> A on the coadjoint
/// bimodule; in coordinates the matrix is just r itself.
inline LinOp sharp(const Algebra& alg, const TwoTensor& r) {
    if (r.dim != alg.dim) throw std::invalid_argument("sharp: dimension mismatch");
    const int n = alg.dim;
    LinOp T(n, n);
    for (int i = 0; i < n; ++i)
        for (int u = 0; u < n; ++u) T.at(i, u) = r.at(i, u);
    return T;
}

/// The five Nijenhuis identities of a candidate element a0 for a pair.
inline CheckReport nijenhuis_check(const OContext& ctx, const Vec& a0, const OperatorPair& p) {
    if (static_cast<int>(a0.size()) != ctx.dim_a()) throw std::invalid_argument("nijenhuis_check: a0 length mismatch");
    CheckReport rep{"Nijenhuis element"};
    const int da = ctx.dim_a(), dm = ctx.dim_m();

    auto comm_alg = [&](const Vec& x) { // a0.x - x.a0 in A
        Vec out = ctx.mul(a0, x);
        const Vec t = ctx.mul(x, a0);
        for (int k = 0; k < da; ++k) out[k] -= t[k];
        return out;
    };

    for (int a = 0; a < da; ++a) {
        Vec ea = zero_vec(da);
        ea[a] = Rational(1);
        const Vec ca = comm_alg(ea);
        for (int b = 0; b < da; ++b) {
            Vec eb = zero_vec(da);
            eb[b] = Rational(1);
            rep.record("(a0.a - a.a0).(a0.b - b.a0)", {a, b}, ctx.mul(ca, comm_alg(eb)));
        }
    }

    auto lr_defect = [&](const LinOp& T, const char* name) {
        for (int u = 0; u < dm; ++u) {
            Vec eu = zero_vec(dm);
            eu[u] = Rational(1);
            // l_T(u, a0) - r_T(a0, u)
            Vec lt = ctx.mul(T.apply_basis(u), a0);
            Vec t1 = T.apply(ctx.act_right(eu, a0));
            for (int k = 0; k < da; ++k) lt[k] -= t1[k];
            Vec rt = ctx.mul(a0, T.apply_basis(u));
            Vec t2 = T.apply(ctx.act_left(a0, eu));
            for (int k = 0; k < da; ++k) rt[k] -= t2[k];
            Vec x = lt;
            for (int k = 0; k < da; ++k) x[k] -= rt[k];
            Vec d = ctx.mul(a0, x);
            const Vec xa = ctx.mul(x, a0);
            for (int k = 0; k < da; ++k) d[k] -= xa[k];
            rep.record(name, {u}, std::move(d));
        }
    };
    lr_defect(p.T1, "a0-commutator of l_T1 - r_T1");
    lr_defect(p.T2, "a0-commutator of l_T2 - r_T2");

    for (int a = 0; a < da; ++a) {
        Vec ea = zero_vec(da);
        ea[a] = Rational(1);
        const Vec ca = comm_alg(ea);
        for (int u = 0; u < dm; ++u) {
            Vec eu = zero_vec(dm);
            eu[u] = Rational(1);
            Vec cu = ctx.act_left(ea, eu);
            const Vec uc = ctx.act_right(eu, ea);
            for (int k = 0; k < dm; ++k) cu[k] -= uc[k];
            rep.record("(a0.a - a.a0).(a.u - u.a)", {a, u}, ctx.act_left(ca, cu));
            rep.record("(a.u - u.a).(a0.a - a.a0)", {a, u}, ctx.act_right(cu, ca));
        }
    }
    return rep;
}

} // namespace ocoh
