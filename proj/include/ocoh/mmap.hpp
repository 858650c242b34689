#pragma once

#include "ocoh/algebra.hpp"

#include <cassert>
#include <vector>

namespace ocoh {

/// The (A, M) pair all cochain calculus happens over.
struct OContext {
    Algebra algebra;
    Bimodule bimodule;

    int dim_a() const { return algebra.dim; }
    int dim_m() const { return bimodule.module_dim; }

    Vec act_left(const Vec& a, const Vec& u) const { return bimodule.left.apply(a, u); }
    Vec act_right(const Vec& u, const Vec& a) const { return bimodule.right.apply(u, a); }
    Vec mul(const Vec& a, const Vec& b) const { return algebra.mu.apply(a, b); }
};

inline OContext make_context(const Algebra& alg, const Bimodule& bim) {
    if (bim.algebra_dim != alg.dim) throw std::invalid_argument("make_context: dimension mismatch");
    return OContext{alg, bim};
}

/// A multilinear map X^{arity} -> Y between uniform spaces, stored as the
/// coefficient tensor c[k * in_dim^arity + flatten(inputs)], k an output index.
/// Arity 0 is just a vector in Y.
struct MLMap {
    int arity = 0;
    int in_dim = 0;
    int out_dim = 0;
    std::vector<Rational> c;

    MLMap() = default;
    MLMap(int arity_, int in_dim_, int out_dim_) : arity(arity_), in_dim(in_dim_), out_dim(out_dim_) {
        size_t n = static_cast<size_t>(out_dim);
        for (int i = 0; i < arity; ++i) n *= static_cast<size_t>(in_dim);
        c.assign(n, Rational(0));
    }

    size_t input_count() const {
        size_t n = 1;
        for (int i = 0; i < arity; ++i) n *= static_cast<size_t>(in_dim);
        return n;
    }

    const Rational& at(int k, size_t flat_in) const { return c[static_cast<size_t>(k) * input_count() + flat_in]; }
    Rational& at(int k, size_t flat_in) { return c[static_cast<size_t>(k) * input_count() + flat_in]; }

    size_t flatten(const std::vector<int>& idx) const {
        assert(static_cast<int>(idx.size()) == arity);
        size_t f = 0;
        for (int i = 0; i < arity; ++i) f = f * static_cast<size_t>(in_dim) + static_cast<size_t>(idx[i]);
        return f;
    }

    /// Value on basis inputs, as a coefficient vector in Y.
    Vec value(const std::vector<int>& idx) const {
        const size_t f = flatten(idx);
        Vec out(static_cast<size_t>(out_dim));
        for (int k = 0; k < out_dim; ++k) out[k] = at(k, f);
        return out;
    }

    /// Value with one slot replaced by a coefficient vector, others basis indices.
    Vec value_with_slot(const std::vector<int>& idx, int slot, const Vec& vec) const {
        Vec out = zero_vec(out_dim);
        std::vector<int> tmp = idx;
        for (int w = 0; w < in_dim; ++w) {
            if (vec[w].is_zero()) continue;
            tmp[slot] = w;
            add_scaled(out, vec[w], value(tmp));
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& v : c)
            if (!v.is_zero()) return false;
        return true;
    }

    MLMap& operator+=(const MLMap& o) {
        if (arity != o.arity || in_dim != o.in_dim || out_dim != o.out_dim)
            throw std::invalid_argument("MLMap: shape mismatch");
        for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    friend MLMap operator+(MLMap a, const MLMap& b) { return a += b; }
    MLMap& operator-=(const MLMap& o) { return *this += o.scaled(Rational(-1)); }
    friend MLMap operator-(MLMap a, const MLMap& b) { return a -= b; }

    MLMap scaled(const Rational& s) const {
        MLMap r = *this;
        for (auto& v : r.c) v = v * s;
        return r;
    }
    MLMap operator-() const { return scaled(Rational(-1)); }

    friend bool operator==(const MLMap& a, const MLMap& b) {
        return a.arity == b.arity && a.in_dim == b.in_dim && a.out_dim == b.out_dim && a.c == b.c;
    }
};

/// Element of Hom(M^{tensor n}, A); arity 0 holds an element of A.
using MMap = MLMap;

inline MMap zero_mmap(const OContext& ctx, int arity) { return MMap(arity, ctx.dim_m(), ctx.dim_a()); }

inline MMap mmap_from_element(const OContext& ctx, const Vec& a) {
    MMap m(0, ctx.dim_m(), ctx.dim_a());
    for (int k = 0; k < ctx.dim_a(); ++k) m.c[k] = a[k];
    return m;
}

namespace detail {

inline void check_mmap_shape(const OContext& ctx, const MMap& f) {
    if (f.in_dim != ctx.dim_m() || f.out_dim != ctx.dim_a())
        throw std::invalid_argument("MMap does not match the given (A, M) context");
}

/// Iterate over all multi-indices in {0..in_dim-1}^arity.
template <typename F>
void for_each_index(int arity, int in_dim, F&& body) {
    if (arity > 0 && in_dim == 0) return;
    std::vector<int> idx(static_cast<size_t>(arity), 0);
    while (true) {
        body(idx);
        int p = arity - 1;
        while (p >= 0) {
            if (++idx[p] < in_dim) break;
            idx[p] = 0;
            --p;
        }
        if (p < 0) break;
    }
}

inline int pow_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace detail

/// The derived graded Lie bracket on +Hom(M^n, A); an arity-n map has degree n.
/// Dispatches on the three defining cases (both arities positive, one zero,
/// both zero).
inline MMap derived_bracket(const OContext& ctx, const MMap& P, const MMap& Q) {
    detail::check_mmap_shape(ctx, P);
    detail::check_mmap_shape(ctx, Q);
    const int m = P.arity, n = Q.arity;
    const int dm = ctx.dim_m();

    if (m == 0 && n == 0) {
        // [a, b] = a.b - b.a
        Vec a = P.value({}), b = Q.value({});
        Vec out = ctx.mul(a, b);
        Vec ba = ctx.mul(b, a);
        for (size_t k = 0; k < out.size(); ++k) out[k] -= ba[k];
        return mmap_from_element(ctx, out);
    }

    if (n == 0) {
        // [P, a](u_1..u_m) = sum_i P(.., a.u_i - u_i.a, ..) + P(..).a - a.P(..)
        const Vec a = Q.value({});
        MMap out = zero_mmap(ctx, m);
        detail::for_each_index(m, dm, [&](const std::vector<int>& idx) {
            Vec acc = zero_vec(ctx.dim_a());
            for (int i = 0; i < m; ++i) {
                Vec u(static_cast<size_t>(dm));
                u[idx[i]] = Rational(1);
                Vec comm = ctx.act_left(a, u);
                Vec ua = ctx.act_right(u, a);
                for (int w = 0; w < dm; ++w) comm[w] -= ua[w];
                const Vec term = P.value_with_slot(idx, i, comm);
                for (size_t k = 0; k < acc.size(); ++k) acc[k] += term[k];
            }
            const Vec pv = P.value(idx);
            Vec t1 = ctx.mul(pv, a), t2 = ctx.mul(a, pv);
            for (size_t k = 0; k < acc.size(); ++k) acc[k] += t1[k] - t2[k];
            const size_t f = out.flatten(idx);
            for (int k = 0; k < ctx.dim_a(); ++k) out.at(k, f) = acc[k];
        });
        return out;
    }

    if (m == 0) {
        // graded antisymmetry: [a, Q] = -[Q, a]
        return -derived_bracket(ctx, Q, P);
    }

    MMap out = zero_mmap(ctx, m + n);
    detail::for_each_index(m + n, dm, [&](const std::vector<int>& idx) {
        Vec acc = zero_vec(ctx.dim_a());
        auto basis_m = [&](int u) {
            Vec e(static_cast<size_t>(dm));
            e[u] = Rational(1);
            return e;
        };

        // P-major blocks
        for (int i = 1; i <= m; ++i) {
            // Q(u_i..u_{i+n-1}) . u_{i+n}
            std::vector<int> qidx(idx.begin() + (i - 1), idx.begin() + (i - 1) + n);
            const Vec qv = Q.value(qidx);
            {
                Vec slotv = ctx.act_left(qv, basis_m(idx[i - 1 + n]));
                std::vector<int> pidx;
                pidx.insert(pidx.end(), idx.begin(), idx.begin() + (i - 1));
                pidx.push_back(0); // placeholder slot
                pidx.insert(pidx.end(), idx.begin() + (i + n), idx.end());
                const Vec term = P.value_with_slot(pidx, i - 1, slotv);
                const int s = detail::pow_sign(static_cast<long>(i - 1) * n);
                for (size_t k = 0; k < acc.size(); ++k) acc[k] += Rational(s) * term[k];
            }
            // u_i . Q(u_{i+1}..u_{i+n})
            {
                std::vector<int> qidx2(idx.begin() + i, idx.begin() + i + n);
                const Vec qv2 = Q.value(qidx2);
                Vec slotv = ctx.act_right(basis_m(idx[i - 1]), qv2);
                std::vector<int> pidx;
                pidx.insert(pidx.end(), idx.begin(), idx.begin() + (i - 1));
                pidx.push_back(0);
                pidx.insert(pidx.end(), idx.begin() + (i + n), idx.end());
                const Vec term = P.value_with_slot(pidx, i - 1, slotv);
                const int s = -detail::pow_sign(static_cast<long>(i) * n);
                for (size_t k = 0; k < acc.size(); ++k) acc[k] += Rational(s) * term[k];
            }
        }

        // Q-major blocks, inside -(-1)^{mn} { ... }
        const int smn = detail::pow_sign(static_cast<long>(m) * n);
        for (int i = 1; i <= n; ++i) {
            {
                std::vector<int> pidx(idx.begin() + (i - 1), idx.begin() + (i - 1) + m);
                const Vec pv = P.value(pidx);
                Vec slotv = ctx.act_left(pv, basis_m(idx[i - 1 + m]));
                std::vector<int> qidx;
                qidx.insert(qidx.end(), idx.begin(), idx.begin() + (i - 1));
                qidx.push_back(0);
                qidx.insert(qidx.end(), idx.begin() + (i + m), idx.end());
                const Vec term = Q.value_with_slot(qidx, i - 1, slotv);
                const int s = -smn * detail::pow_sign(static_cast<long>(i - 1) * m);
                for (size_t k = 0; k < acc.size(); ++k) acc[k] += Rational(s) * term[k];
            }
            {
                std::vector<int> pidx2(idx.begin() + i, idx.begin() + i + m);
                const Vec pv2 = P.value(pidx2);
                Vec slotv = ctx.act_right(basis_m(idx[i - 1]), pv2);
                std::vector<int> qidx;
                qidx.insert(qidx.end(), idx.begin(), idx.begin() + (i - 1));
                qidx.push_back(0);
                qidx.insert(qidx.end(), idx.begin() + (i + m), idx.end());
                const Vec term = Q.value_with_slot(qidx, i - 1, slotv);
                const int s = smn * detail::pow_sign(static_cast<long>(i) * m);
                for (size_t k = 0; k < acc.size(); ++k) acc[k] += Rational(s) * term[k];
            }
        }

        // product tail: (-1)^{mn} { P(u_1..u_m).Q(u_{m+1}..) - (-1)^{mn} Q(u_1..u_n).P(u_{n+1}..) }
        {
            std::vector<int> pidx(idx.begin(), idx.begin() + m);
            std::vector<int> qidx(idx.begin() + m, idx.end());
            const Vec t = ctx.mul(P.value(pidx), Q.value(qidx));
            for (size_t k = 0; k < acc.size(); ++k) acc[k] += Rational(smn) * t[k];
        }
        {
            std::vector<int> qidx(idx.begin(), idx.begin() + n);
            std::vector<int> pidx(idx.begin() + n, idx.end());
            const Vec t = ctx.mul(Q.value(qidx), P.value(pidx));
            for (size_t k = 0; k < acc.size(); ++k) acc[k] -= t[k];
        }

        const size_t f = out.flatten(idx);
        for (int k = 0; k < ctx.dim_a(); ++k) out.at(k, f) = acc[k];
    });
    return out;
}

/// Element of the compatible cochain space: one copy of A in degree 0,
/// (n+1) copies of Hom(M^n, A) in degree n >= 1.
struct TupleCochain {
    int degree = 0;
    std::vector<MMap> parts;

    static int part_count(int degree) { return degree == 0 ? 1 : degree + 1; }

    static TupleCochain zero(const OContext& ctx, int degree) {
        TupleCochain t;
        t.degree = degree;
        const int arity = degree == 0 ? 0 : degree;
        for (int i = 0; i < part_count(degree); ++i) t.parts.push_back(MMap(arity, ctx.dim_m(), ctx.dim_a()));
        return t;
    }

    void validate() const {
        if (static_cast<int>(parts.size()) != part_count(degree))
            throw std::invalid_argument("TupleCochain: wrong number of parts");
        const int arity = degree == 0 ? 0 : degree;
        for (const auto& p : parts)
            if (p.arity != arity) throw std::invalid_argument("TupleCochain: part arity mismatch");
    }

    bool is_zero() const {
        for (const auto& p : parts)
            if (!p.is_zero()) return false;
        return true;
    }

    TupleCochain& operator+=(const TupleCochain& o) {
        if (degree != o.degree) throw std::invalid_argument("TupleCochain: degree mismatch");
        for (size_t i = 0; i < parts.size(); ++i) parts[i] += o.parts[i];
        return *this;
    }
    friend TupleCochain operator+(TupleCochain a, const TupleCochain& b) { return a += b; }

    TupleCochain scaled(const Rational& s) const {
        TupleCochain t = *this;
        for (auto& p : t.parts) p = p.scaled(s);
        return t;
    }
    TupleCochain operator-() const { return scaled(Rational(-1)); }

    friend bool operator==(const TupleCochain& a, const TupleCochain& b) {
        return a.degree == b.degree && a.parts == b.parts;
    }
};

inline TupleCochain make_pair_cochain(const OContext& ctx, const MMap& f1, const MMap& f2) {
    if (f1.arity != 1 || f2.arity != 1) throw std::invalid_argument("make_pair_cochain: arity must be 1");
    detail::check_mmap_shape(ctx, f1);
    detail::check_mmap_shape(ctx, f2);
    TupleCochain t;
    t.degree = 1;
    t.parts = {f1, f2};
    return t;
}

/// The lifted graded Lie bracket: componentwise convolution
/// [[x, y]]_i = sum_{p+q = i+1} [x_p, y_q].
inline TupleCochain lifted_bracket(const OContext& ctx, const TupleCochain& x, const TupleCochain& y) {
    x.validate();
    y.validate();
    const int m = x.degree, n = y.degree;
    TupleCochain out = TupleCochain::zero(ctx, m + n);
    const int cm = TupleCochain::part_count(m);
    const int cn = TupleCochain::part_count(n);
    for (int p = 1; p <= cm; ++p)
        for (int q = 1; q <= cn; ++q) {
            const int i = p + q - 1;
            out.parts[i - 1] += derived_bracket(ctx, x.parts[p - 1], y.parts[q - 1]);
        }
    return out;
}

/// Componentwise sum; a morphism of graded Lie algebras onto +Hom(M^n, A).
inline MMap theta(const TupleCochain& x) {
    x.validate();
    MMap s = x.parts[0];
    for (size_t i = 1; i < x.parts.size(); ++i) s += x.parts[i];
    return s;
}

} // namespace ocoh
