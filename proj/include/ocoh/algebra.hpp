#pragma once

#include "ocoh/check_report.hpp"

#include <stdexcept>
#include <vector>

namespace ocoh {

/// Structure constants of a bilinear map V1 x V2 -> W on chosen bases:
/// c[(i * d2 + j) * dout + k] is the e_k coefficient of f(e_i, e_j).
struct BilinearMap {
    int d1 = 0, d2 = 0, dout = 0;
    std::vector<Rational> c;

    BilinearMap() = default;
    BilinearMap(int d1_, int d2_, int dout_)
        : d1(d1_), d2(d2_), dout(dout_), c(static_cast<size_t>(d1_) * d2_ * dout_) {}

    const Rational& at(int i, int j, int k) const { return c[(static_cast<size_t>(i) * d2 + j) * dout + k]; }
    Rational& at(int i, int j, int k) { return c[(static_cast<size_t>(i) * d2 + j) * dout + k]; }

    /// Bilinear extension to coefficient vectors.
    Vec apply(const Vec& x, const Vec& y) const {
        Vec out = zero_vec(dout);
        for (int i = 0; i < d1; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < d2; ++j) {
                if (y[j].is_zero()) continue;
                const Rational xy = x[i] * y[j];
                for (int k = 0; k < dout; ++k) out[k] += xy * at(i, j, k);
            }
        }
        return out;
    }

    Vec apply_basis(int i, int j) const {
        Vec out(static_cast<size_t>(dout));
        for (int k = 0; k < dout; ++k) out[k] = at(i, j, k);
        return out;
    }

    bool is_zero() const {
        for (const auto& v : c)
            if (!v.is_zero()) return false;
        return true;
    }

    BilinearMap& operator+=(const BilinearMap& o) {
        if (d1 != o.d1 || d2 != o.d2 || dout != o.dout) throw std::invalid_argument("BilinearMap: shape mismatch");
        for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    friend BilinearMap operator+(BilinearMap a, const BilinearMap& b) { return a += b; }

    BilinearMap scaled(const Rational& s) const {
        BilinearMap r = *this;
        for (auto& v : r.c) v = v * s;
        return r;
    }

    BilinearMap operator-() const { return scaled(Rational(-1)); }

    friend bool operator==(const BilinearMap& a, const BilinearMap& b) {
        return a.d1 == b.d1 && a.d2 == b.d2 && a.dout == b.dout && a.c == b.c;
    }
};

/// Associative algebra by structure constants; mu.at(i,j,k) is the e_k
/// coefficient of e_i . e_j.
struct Algebra {
    int dim = 0;
    BilinearMap mu;

    Algebra() = default;
    Algebra(int dim_, BilinearMap mu_) : dim(dim_), mu(std::move(mu_)) {
        if (mu.d1 != dim || mu.d2 != dim || mu.dout != dim) throw std::invalid_argument("Algebra: mu shape mismatch");
    }
};

/// Bimodule over an Algebra: left : A x M -> M, right : M x A -> M.
struct Bimodule {
    int algebra_dim = 0;
    int module_dim = 0;
    BilinearMap left;
    BilinearMap right;

    Bimodule() = default;
    Bimodule(int adim, int mdim, BilinearMap l, BilinearMap r)
        : algebra_dim(adim), module_dim(mdim), left(std::move(l)), right(std::move(r)) {
        if (left.d1 != adim || left.d2 != mdim || left.dout != mdim)
            throw std::invalid_argument("Bimodule: left action shape mismatch");
        if (right.d1 != mdim || right.d2 != adim || right.dout != mdim)
            throw std::invalid_argument("Bimodule: right action shape mismatch");
    }
};

/// Two associative products on one space whose sum is again associative.
struct CompatibleAlgebra {
    int dim = 0;
    BilinearMap mu1, mu2;
};

/// Compatible bimodule over a CompatibleAlgebra: (l1,r1) over mu1, (l2,r2)
/// over mu2, plus the three mixed identities.
struct CompatibleBimodule {
    int algebra_dim = 0;
    int module_dim = 0;
    BilinearMap l1, r1, l2, r2;
};

inline CheckReport check_associative(const Algebra& alg) {
    CheckReport rep{"associative algebra"};
    const int n = alg.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec ij = alg.mu.apply_basis(i, j);
            for (int k = 0; k < n; ++k) {
                Vec lhs = zero_vec(n);
                for (int w = 0; w < n; ++w)
                    if (!ij[w].is_zero()) add_scaled(lhs, ij[w], alg.mu.apply_basis(w, k));
                const Vec jk = alg.mu.apply_basis(j, k);
                Vec rhs = zero_vec(n);
                for (int w = 0; w < n; ++w)
                    if (!jk[w].is_zero()) add_scaled(rhs, jk[w], alg.mu.apply_basis(i, w));
                for (int w = 0; w < n; ++w) lhs[w] -= rhs[w];
                rep.record("associativity", {i, j, k}, std::move(lhs));
            }
        }
    return rep;
}

inline CheckReport check_bimodule(const Algebra& alg, const Bimodule& bim) {
    if (bim.algebra_dim != alg.dim) throw std::invalid_argument("check_bimodule: dimension mismatch");
    CheckReport rep{"bimodule"};
    const int n = alg.dim, m = bim.module_dim;
    // (a b) u = a (b u)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int u = 0; u < m; ++u) {
                const Vec ab = alg.mu.apply_basis(i, j);
                Vec lhs = zero_vec(m);
                for (int w = 0; w < n; ++w)
                    if (!ab[w].is_zero()) add_scaled(lhs, ab[w], bim.left.apply_basis(w, u));
                const Vec bu = bim.left.apply_basis(j, u);
                Vec rhs = zero_vec(m);
                for (int w = 0; w < m; ++w)
                    if (!bu[w].is_zero()) add_scaled(rhs, bu[w], bim.left.apply_basis(i, w));
                for (int w = 0; w < m; ++w) lhs[w] -= rhs[w];
                rep.record("left associativity", {i, j, u}, std::move(lhs));
            }
    // (a u) b = a (u b)
    for (int i = 0; i < n; ++i)
        for (int u = 0; u < m; ++u)
            for (int j = 0; j < n; ++j) {
                const Vec au = bim.left.apply_basis(i, u);
                Vec lhs = zero_vec(m);
                for (int w = 0; w < m; ++w)
                    if (!au[w].is_zero()) add_scaled(lhs, au[w], bim.right.apply_basis(w, j));
                const Vec ub = bim.right.apply_basis(u, j);
                Vec rhs = zero_vec(m);
                for (int w = 0; w < m; ++w)
                    if (!ub[w].is_zero()) add_scaled(rhs, ub[w], bim.left.apply_basis(i, w));
                for (int w = 0; w < m; ++w) lhs[w] -= rhs[w];
                rep.record("mixed associativity", {i, u, j}, std::move(lhs));
            }
    // (u a) b = u (a b)
    for (int u = 0; u < m; ++u)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Vec ua = bim.right.apply_basis(u, i);
                Vec lhs = zero_vec(m);
                for (int w = 0; w < m; ++w)
                    if (!ua[w].is_zero()) add_scaled(lhs, ua[w], bim.right.apply_basis(w, j));
                const Vec ab = alg.mu.apply_basis(i, j);
                Vec rhs = zero_vec(m);
                for (int w = 0; w < n; ++w)
                    if (!ab[w].is_zero()) add_scaled(rhs, ab[w], bim.right.apply_basis(u, w));
                for (int w = 0; w < m; ++w) lhs[w] -= rhs[w];
                rep.record("right associativity", {u, i, j}, std::move(lhs));
            }
    return rep;
}

inline CheckReport check_compatible_associative(const CompatibleAlgebra& c) {
    CheckReport rep{"compatible associative algebra"};
    const int n = c.dim;
    rep.merge(check_associative(Algebra(n, c.mu1)));
    rep.merge(check_associative(Algebra(n, c.mu2)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // (a .1 b) .2 c + (a .2 b) .1 c - a .2 (b .1 c) - a .1 (b .2 c)
                Vec d = zero_vec(n);
                const Vec ij1 = c.mu1.apply_basis(i, j);
                const Vec ij2 = c.mu2.apply_basis(i, j);
                for (int w = 0; w < n; ++w) {
                    if (!ij1[w].is_zero()) add_scaled(d, ij1[w], c.mu2.apply_basis(w, k));
                    if (!ij2[w].is_zero()) add_scaled(d, ij2[w], c.mu1.apply_basis(w, k));
                }
                const Vec jk1 = c.mu1.apply_basis(j, k);
                const Vec jk2 = c.mu2.apply_basis(j, k);
                for (int w = 0; w < n; ++w) {
                    if (!jk1[w].is_zero()) add_scaled(d, -jk1[w], c.mu2.apply_basis(i, w));
                    if (!jk2[w].is_zero()) add_scaled(d, -jk2[w], c.mu1.apply_basis(i, w));
                }
                rep.record("compatibility", {i, j, k}, std::move(d));
            }
    // redundant route: mu1 + mu2 must be associative
    rep.merge(check_associative(Algebra(n, c.mu1 + c.mu2)));
    return rep;
}

inline CheckReport check_compatible_bimodule(const CompatibleAlgebra& c, const CompatibleBimodule& cb) {
    if (cb.algebra_dim != c.dim) throw std::invalid_argument("check_compatible_bimodule: dimension mismatch");
    CheckReport rep{"compatible bimodule"};
    const int n = c.dim, m = cb.module_dim;
    rep.merge(check_bimodule(Algebra(n, c.mu1), Bimodule(n, m, cb.l1, cb.r1)));
    rep.merge(check_bimodule(Algebra(n, c.mu2), Bimodule(n, m, cb.l2, cb.r2)));

    // Each mixed identity has the shape
    //   oL1(iL1(x,y), z) + oL2(iL2(x,y), z) - oR1(x, iR1(y,z)) - oR2(x, iR2(y,z)) = 0
    auto mixed = [&](const char* name, int dx, int dy, int dz,
                     const BilinearMap& iL1, const BilinearMap& oL1,
                     const BilinearMap& iL2, const BilinearMap& oL2,
                     const BilinearMap& oR1, const BilinearMap& iR1,
                     const BilinearMap& oR2, const BilinearMap& iR2) {
        for (int i = 0; i < dx; ++i)
            for (int j = 0; j < dy; ++j)
                for (int k = 0; k < dz; ++k) {
                    Vec d = zero_vec(oL1.dout);
                    const Vec a1 = iL1.apply_basis(i, j);
                    const Vec a2 = iL2.apply_basis(i, j);
                    for (int w = 0; w < iL1.dout; ++w) {
                        if (!a1[w].is_zero()) add_scaled(d, a1[w], oL1.apply_basis(w, k));
                        if (!a2[w].is_zero()) add_scaled(d, a2[w], oL2.apply_basis(w, k));
                    }
                    const Vec b1 = iR1.apply_basis(j, k);
                    const Vec b2 = iR2.apply_basis(j, k);
                    for (int w = 0; w < iR1.dout; ++w) {
                        if (!b1[w].is_zero()) add_scaled(d, -b1[w], oR1.apply_basis(i, w));
                        if (!b2[w].is_zero()) add_scaled(d, -b2[w], oR2.apply_basis(i, w));
                    }
                    rep.record(name, {i, j, k}, std::move(d));
                }
    };

    // (a .1 b) .2 u + (a .2 b) .1 u = a .1 (b .2 u) + a .2 (b .1 u)
    mixed("mixed AAM", n, n, m, c.mu1, cb.l2, c.mu2, cb.l1, cb.l1, cb.l2, cb.l2, cb.l1);
    // (a .1 u) .2 b + (a .2 u) .1 b = a .1 (u .2 b) + a .2 (u .1 b)
    mixed("mixed AMA", n, m, n, cb.l1, cb.r2, cb.l2, cb.r1, cb.l1, cb.r2, cb.l2, cb.r1);
    // (u .1 a) .2 b + (u .2 a) .1 b = u .1 (a .2 b) + u .2 (a .1 b)
    mixed("mixed MAA", m, n, n, cb.r1, cb.r2, cb.r2, cb.r1, cb.r1, c.mu2, cb.r2, c.mu1);

    // redundant route: the summed actions form a bimodule over mu1 + mu2
    rep.merge(check_bimodule(Algebra(n, c.mu1 + c.mu2), Bimodule(n, m, cb.l1 + cb.l2, cb.r1 + cb.r2)));
    return rep;
}

inline Bimodule adjoint_bimodule(const Algebra& alg) {
    const int n = alg.dim;
    return Bimodule(n, n, alg.mu, alg.mu);
}

/// Coadjoint actions on the dual basis: (a.f)(b) = f(b.a), (f.a)(b) = f(a.b).
inline Bimodule coadjoint_bimodule(const Algebra& alg) {
    const int n = alg.dim;
    BilinearMap left(n, n, n), right(n, n, n);
    for (int i = 0; i < n; ++i)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                left.at(i, u, v) = alg.mu.at(v, i, u);
                right.at(u, i, v) = alg.mu.at(i, v, u);
            }
    return Bimodule(n, n, std::move(left), std::move(right));
}

} // namespace ocoh
