#pragma once

#include "ocoh/mixed_map.hpp"
#include "ocoh/operators.hpp"

#include <random>

namespace ocoh::testing {

/// k[x]/(x^2) with basis {1, x}.
inline Algebra dual_numbers() {
    BilinearMap mu(2, 2, 2);
    mu.at(0, 0, 0) = Rational(1);
    mu.at(0, 1, 1) = Rational(1);
    mu.at(1, 0, 1) = Rational(1);
    return Algebra(2, mu);
}

inline Algebra zero_algebra(int n) { return Algebra(n, BilinearMap(n, n, n)); }

/// k x k with pointwise product.
inline Algebra split_plane() {
    BilinearMap mu(2, 2, 2);
    mu.at(0, 0, 0) = Rational(1);
    mu.at(1, 1, 1) = Rational(1);
    return Algebra(2, mu);
}

/// k[x]/(x^2 - x), idempotent generator.
inline Algebra idempotent_plane() {
    BilinearMap mu(2, 2, 2);
    mu.at(0, 0, 0) = Rational(1);
    mu.at(0, 1, 1) = Rational(1);
    mu.at(1, 0, 1) = Rational(1);
    mu.at(1, 1, 1) = Rational(1);
    return Algebra(2, mu);
}

inline OContext dual_numbers_adjoint() {
    Algebra a = dual_numbers();
    return make_context(a, adjoint_bimodule(a));
}

/// T(1) = x, T(x) = 0 on k[x]/(x^2): the standard passing operator.
inline LinOp nil_operator() {
    LinOp t(2, 2);
    t.at(1, 0) = Rational(1);
    return t;
}

/// T(1) = 0, T(x) = x: fails the O-operator identity at (1, x).
inline LinOp failing_operator() {
    LinOp t(2, 2);
    t.at(1, 1) = Rational(1);
    return t;
}

inline OperatorPair nil_pair() { return OperatorPair{nil_operator(), -nil_operator()}; }

inline Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> den(1, 2);
    return Rational(num(rng), den(rng));
}

inline MMap random_mmap(std::mt19937_64& rng, const OContext& ctx, int arity) {
    MMap f(arity, ctx.dim_m(), ctx.dim_a());
    for (auto& v : f.c) v = small_rational(rng);
    return f;
}

inline TupleCochain random_tuple(std::mt19937_64& rng, const OContext& ctx, int degree) {
    TupleCochain t = TupleCochain::zero(ctx, degree);
    for (auto& p : t.parts) p = random_mmap(rng, ctx, p.arity);
    return t;
}

inline MixedMap random_homogeneous_mixed(std::mt19937_64& rng, int da, int dm, int arity, int k, int l) {
    // bidegree k|l with k + l = arity - 1; fills all admissible words
    MixedMap f(arity, da, dm);
    auto fill_words = [&](Sp target, int mods) {
        for (unsigned mask = 0; mask < (1u << arity); ++mask) {
            if (__builtin_popcount(mask) != mods) continue;
            Word w;
            for (int s = 0; s < arity; ++s) w.push_back((mask >> s) & 1u ? Sp::M : Sp::A);
            auto& blk = f.block(target, w);
            for (auto& v : blk) v = small_rational(rng);
        }
    };
    if (k + 1 >= 0 && l <= arity) fill_words(Sp::A, l);
    if (l + 1 <= arity) fill_words(Sp::M, l + 1);
    f.normalize();
    return f;
}

/// Random context with valid algebra/bimodule: draws from a fixed family
/// covering square and mixed dimensions.
inline OContext random_context(std::mt19937_64& rng, bool allow_dim1 = true) {
    const int pick = static_cast<int>(rng() % (allow_dim1 ? 7 : 6));
    switch (pick) {
        case 0: {
            Algebra a = dual_numbers();
            return make_context(a, adjoint_bimodule(a));
        }
        case 1: {
            Algebra a = dual_numbers();
            return make_context(a, coadjoint_bimodule(a));
        }
        case 2: {
            Algebra a = split_plane();
            return make_context(a, adjoint_bimodule(a));
        }
        case 3: {
            Algebra a = zero_algebra(2);
            Bimodule b(2, 2, BilinearMap(2, 2, 2), BilinearMap(2, 2, 2));
            return make_context(a, b);
        }
        case 4: {
            // dim A = 2, dim M = 1: the actions factor through evaluation at 1
            Algebra a = dual_numbers();
            BilinearMap l(2, 1, 1), r(1, 2, 1);
            if (rng() % 2) l.at(0, 0, 0) = Rational(1);
            if (rng() % 2) r.at(0, 0, 0) = Rational(1);
            return make_context(a, Bimodule(2, 1, l, r));
        }
        case 5: {
            // dim A = 1 (unit algebra), dim M = 2: commuting idempotent actions
            BilinearMap mu(1, 1, 1);
            mu.at(0, 0, 0) = Rational(1);
            BilinearMap l(1, 2, 2), r(2, 1, 2);
            l.at(0, 0, 0) = Rational(1);
            if (rng() % 2) l.at(0, 1, 1) = Rational(1);
            r.at(0, 0, 0) = Rational(1);
            if (rng() % 2) r.at(1, 0, 1) = Rational(1);
            return make_context(Algebra(1, mu), Bimodule(1, 2, l, r));
        }
        default: {
            // dim A = dim M = 1 with c in {-1, 0, 1}, actions lambda, rho in {0, c}
            const long c = static_cast<long>(rng() % 3) - 1;
            BilinearMap mu(1, 1, 1);
            mu.at(0, 0, 0) = Rational(c);
            const long lam = (rng() % 2) ? c : 0;
            const long rho = (rng() % 2) ? c : 0;
            BilinearMap l(1, 1, 1), r(1, 1, 1);
            l.at(0, 0, 0) = Rational(lam);
            r.at(0, 0, 0) = Rational(rho);
            return make_context(Algebra(1, mu), Bimodule(1, 1, l, r));
        }
    }
}

} // namespace ocoh::testing
