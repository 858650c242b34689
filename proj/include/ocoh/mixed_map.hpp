#pragma once

#include "ocoh/mmap.hpp"

#include <map>
#include <optional>
#include <utility>

namespace ocoh {

/// Which summand of A (+) M a tensor slot ranges over.
enum class Sp : uint8_t { A = 0, M = 1 };

using Word = std::vector<Sp>;

/// A multilinear map (A+M)^{arity} -> (A+M), stored per (target, input word)
/// as a dense coefficient block. Only nonzero blocks are kept, so homogeneous
/// maps stay cheap: materializing full (dimA+dimM)^n tensors is never needed.
struct MixedMap {
    int arity = 0;
    int alg_dim = 0;
    int mod_dim = 0;
    // key = (target, word); value laid out out_index-major like MLMap
    std::map<std::pair<Sp, Word>, std::vector<Rational>> comps;

    MixedMap() = default;
    MixedMap(int arity_, int alg_dim_, int mod_dim_) : arity(arity_), alg_dim(alg_dim_), mod_dim(mod_dim_) {}

    int space_dim(Sp s) const { return s == Sp::A ? alg_dim : mod_dim; }

    size_t word_size(const Word& w) const {
        size_t n = 1;
        for (Sp s : w) n *= static_cast<size_t>(space_dim(s));
        return n;
    }

    std::vector<Rational>& block(Sp target, const Word& w) {
        auto key = std::make_pair(target, w);
        auto it = comps.find(key);
        if (it == comps.end()) {
            it = comps.emplace(key, std::vector<Rational>(static_cast<size_t>(space_dim(target)) * word_size(w)))
                     .first;
        }
        return it->second;
    }

    size_t flatten(const Word& w, const std::vector<int>& idx) const {
        size_t f = 0;
        for (size_t i = 0; i < w.size(); ++i) f = f * static_cast<size_t>(space_dim(w[i])) + static_cast<size_t>(idx[i]);
        return f;
    }

    Rational coeff(Sp target, const Word& w, int out, const std::vector<int>& idx) const {
        auto it = comps.find(std::make_pair(target, w));
        if (it == comps.end()) return Rational(0);
        return it->second[static_cast<size_t>(out) * word_size(w) + flatten(w, idx)];
    }

    /// Drops all-zero blocks.
    void normalize() {
        for (auto it = comps.begin(); it != comps.end();) {
            bool zero = true;
            for (const auto& v : it->second)
                if (!v.is_zero()) {
                    zero = false;
                    break;
                }
            it = zero ? comps.erase(it) : ++it;
        }
    }

    bool is_zero() const {
        for (const auto& [k, blk] : comps)
            for (const auto& v : blk)
                if (!v.is_zero()) return false;
        return true;
    }

    MixedMap& operator+=(const MixedMap& o) {
        if (arity != o.arity || alg_dim != o.alg_dim || mod_dim != o.mod_dim)
            throw std::invalid_argument("MixedMap: shape mismatch");
        for (const auto& [k, blk] : o.comps) {
            auto& mine = block(k.first, k.second);
            for (size_t i = 0; i < blk.size(); ++i) mine[i] += blk[i];
        }
        normalize();
        return *this;
    }
    friend MixedMap operator+(MixedMap a, const MixedMap& b) { return a += b; }

    MixedMap scaled(const Rational& s) const {
        MixedMap r = *this;
        if (s.is_zero()) {
            r.comps.clear();
            return r;
        }
        for (auto& [k, blk] : r.comps)
            for (auto& v : blk) v = v * s;
        return r;
    }
    MixedMap operator-() const { return scaled(Rational(-1)); }
    MixedMap& operator-=(const MixedMap& o) { return *this += o.scaled(Rational(-1)); }
    friend MixedMap operator-(MixedMap a, const MixedMap& b) { return a -= b; }

    friend bool operator==(const MixedMap& a, const MixedMap& b) {
        if (a.arity != b.arity || a.alg_dim != b.alg_dim || a.mod_dim != b.mod_dim) return false;
        MixedMap d = a - b;
        return d.is_zero();
    }
};

/// Bidegree k|l of a homogeneous map: A-valued blocks see l module slots,
/// M-valued blocks l+1, and k + l = arity - 1. Returns nullopt for zero or
/// inhomogeneous maps.
inline std::optional<std::pair<int, int>> bidegree_of(const MixedMap& f) {
    std::optional<std::pair<int, int>> bid;
    MixedMap g = f;
    g.normalize();
    for (const auto& [key, blk] : g.comps) {
        int mods = 0;
        for (Sp s : key.second)
            if (s == Sp::M) ++mods;
        const int l = key.first == Sp::A ? mods : mods - 1;
        const int k = f.arity - 1 - l;
        if (bid && *bid != std::make_pair(k, l)) return std::nullopt;
        bid = std::make_pair(k, l);
    }
    return g.comps.empty() ? std::nullopt : bid;
}

/// f composed with g in slot i (1-based): f(.., g(v_i..v_{i+n}), ..).
inline MixedMap compose_at(const MixedMap& f, int i, const MixedMap& g) {
    if (f.alg_dim != g.alg_dim || f.mod_dim != g.mod_dim) throw std::invalid_argument("compose_at: context mismatch");
    if (i < 1 || i > f.arity) throw std::invalid_argument("compose_at: slot out of range");
    MixedMap out(f.arity + g.arity - 1, f.alg_dim, f.mod_dim);
    for (const auto& [fk, fblk] : f.comps) {
        const Sp f_target = fk.first;
        const Word& fw = fk.second;
        for (const auto& [gk, gblk] : g.comps) {
            const Sp g_target = gk.first;
            const Word& gw = gk.second;
            if (fw[i - 1] != g_target) continue;
            Word ow;
            ow.insert(ow.end(), fw.begin(), fw.begin() + (i - 1));
            ow.insert(ow.end(), gw.begin(), gw.end());
            ow.insert(ow.end(), fw.begin() + i, fw.end());
            auto& oblk = out.block(f_target, ow);

            const int out_dim = out.space_dim(f_target);
            const int mid_dim = out.space_dim(g_target);
            // strides: iterate all output multi-indices of ow, split into
            // prefix (i-1 slots), inner (g.arity slots), suffix
            std::vector<int> idx(static_cast<size_t>(out.arity), 0);
            const size_t total = out.word_size(ow);
            for (size_t flat = 0; flat < total; ++flat) {
                // decode flat into idx (row-major over ow)
                size_t rem = flat;
                for (int s = out.arity - 1; s >= 0; --s) {
                    const int d = out.space_dim(ow[s]);
                    idx[s] = static_cast<int>(rem % d);
                    rem /= d;
                }
                std::vector<int> gidx(idx.begin() + (i - 1), idx.begin() + (i - 1) + g.arity);
                const size_t gflat = g.flatten(gw, gidx);
                std::vector<int> fidx;
                fidx.insert(fidx.end(), idx.begin(), idx.begin() + (i - 1));
                fidx.push_back(0);
                fidx.insert(fidx.end(), idx.begin() + (i - 1) + g.arity, idx.end());
                for (int o = 0; o < out_dim; ++o) {
                    Rational acc(0);
                    for (int mid = 0; mid < mid_dim; ++mid) {
                        const Rational gv = gblk[static_cast<size_t>(mid) * g.word_size(gw) + gflat];
                        if (gv.is_zero()) continue;
                        fidx[i - 1] = mid;
                        const Rational fv = fblk[static_cast<size_t>(o) * f.word_size(fw) + f.flatten(fw, fidx)];
                        acc += fv * gv;
                    }
                    if (!acc.is_zero()) oblk[static_cast<size_t>(o) * total + flat] += acc;
                }
            }
        }
    }
    out.normalize();
    return out;
}

/// Gerstenhaber bracket on multilinear maps of A (+) M; an arity-(m+1) map
/// has degree m.
inline MixedMap gerstenhaber(const MixedMap& f, const MixedMap& g) {
    if (f.alg_dim != g.alg_dim || f.mod_dim != g.mod_dim)
        throw std::invalid_argument("gerstenhaber: context mismatch");
    const int m = f.arity - 1, n = g.arity - 1;
    MixedMap out(f.arity + g.arity - 1, f.alg_dim, f.mod_dim);
    for (int i = 1; i <= m + 1; ++i) {
        const int s = detail::pow_sign(static_cast<long>(i - 1) * n);
        out += compose_at(f, i, g).scaled(Rational(s));
    }
    const int smn = detail::pow_sign(static_cast<long>(m) * n);
    for (int i = 1; i <= n + 1; ++i) {
        const int s = -smn * detail::pow_sign(static_cast<long>(i - 1) * m);
        out += compose_at(g, i, f).scaled(Rational(s));
    }
    return out;
}

/// pi = mu + l + r, the bidegree 1|0 element encoding the whole structure.
inline MixedMap structure_element(const OContext& ctx) {
    MixedMap pi(2, ctx.dim_a(), ctx.dim_m());
    {
        auto& blk = pi.block(Sp::A, {Sp::A, Sp::A});
        const int n = ctx.dim_a();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    blk[static_cast<size_t>(k) * n * n + static_cast<size_t>(i) * n + j] = ctx.algebra.mu.at(i, j, k);
    }
    {
        auto& blk = pi.block(Sp::M, {Sp::A, Sp::M});
        const int n = ctx.dim_a(), mm = ctx.dim_m();
        for (int i = 0; i < n; ++i)
            for (int u = 0; u < mm; ++u)
                for (int v = 0; v < mm; ++v)
                    blk[static_cast<size_t>(v) * n * mm + static_cast<size_t>(i) * mm + u] =
                        ctx.bimodule.left.at(i, u, v);
    }
    {
        auto& blk = pi.block(Sp::M, {Sp::M, Sp::A});
        const int n = ctx.dim_a(), mm = ctx.dim_m();
        for (int u = 0; u < mm; ++u)
            for (int i = 0; i < n; ++i)
                for (int v = 0; v < mm; ++v)
                    blk[static_cast<size_t>(v) * mm * n + static_cast<size_t>(u) * n + i] =
                        ctx.bimodule.right.at(u, i, v);
    }
    pi.normalize();
    return pi;
}

/// Hom(M^l, A) included as the bidegree (-1|l) part of the mixed space.
inline MixedMap embed_mmap(const MMap& f) {
    MixedMap out(f.arity, f.out_dim, f.in_dim);
    if (f.is_zero()) return out;
    Word w(static_cast<size_t>(f.arity), Sp::M);
    out.block(Sp::A, w) = f.c;
    out.normalize();
    return out;
}

/// Projection P onto the abelian part: keeps the all-module-slots, A-valued
/// block, i.e. the bidegree (-1|arity) component.
inline MMap project_abelian(const MixedMap& f, int alg_dim, int mod_dim) {
    MMap out(f.arity, mod_dim, alg_dim);
    Word w(static_cast<size_t>(f.arity), Sp::M);
    auto it = f.comps.find(std::make_pair(Sp::A, w));
    if (it != f.comps.end()) out.c = it->second;
    return out;
}

} // namespace ocoh
