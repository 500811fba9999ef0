#pragma once

// Polynomial and cyclotomic forms of index-d generalized cyclotomic mappings,
// conversions in both directions, permutation analysis and inversion.

#include "field.hpp"

#include <string_view>

namespace cyclo {

// Dense polynomial of degree <= q-1; coeffs[n] is the coefficient of T^n.
struct PolyForm {
    FieldPtr F;
    std::vector<Elem> coeffs;

    static PolyForm zero(FieldPtr F) {
        PolyForm P{F, {}};
        P.coeffs.assign(static_cast<std::size_t>(P.F->q()), Elem{0});
        return P;
    }

    Elem coeff(i64 n) const { return n < static_cast<i64>(coeffs.size()) ? coeffs[n] : Elem{0}; }

    i64 degree() const {
        for (i64 n = static_cast<i64>(coeffs.size()) - 1; n >= 0; --n)
            if (coeffs[n].v) return n;
        return -1;
    }

    std::vector<i64> term_degrees() const {
        std::vector<i64> out;
        for (std::size_t n = 0; n < coeffs.size(); ++n)
            if (coeffs[n].v) out.push_back(static_cast<i64>(n));
        return out;
    }

    Elem eval(Elem x) const {
        Elem acc{0};
        for (i64 n = degree(); n >= 0; --n) acc = F->add(F->mul(acc, x), coeffs[n]);
        return acc;
    }

    bool operator==(const PolyForm& o) const {
        i64 n = std::max(coeffs.size(), o.coeffs.size());
        for (i64 i = 0; i < n; ++i)
            if (coeff(i) != o.coeff(i)) return false;
        return true;
    }
};

struct CyclotomicForm {
    CycloContext ctx;
    std::vector<Elem> a;
    std::vector<i64> r;  // each in {1,...,m}

    Elem eval(Elem x) const {
        if (x.v == 0) return Elem{0};
        i64 i = ctx.coset_index(x);
        return ctx.F->mul(a[i], ctx.F->pow(x, r[i]));
    }

    static CyclotomicForm identity(const CycloContext& ctx) {
        return {ctx, std::vector<Elem>(ctx.d, ctx.F->one()), std::vector<i64>(ctx.d, 1)};
    }

    // Same function: a equal, and r equal wherever a_i != 0.
    bool same_function(const CyclotomicForm& o) const {
        if (a != o.a) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].v && r[i] != o.r[i]) return false;
        return true;
    }

    bool operator==(const CyclotomicForm& o) const { return a == o.a && r == o.r; }
};

enum class Reject {
    NonzeroConstantTerm,
    TooManyTerms,
    TooManyRemainders,
    NotAPartition,
    ZeroBranchCoefficient,
    ExponentNotCoprime,
    PsiNotBijective,
};

inline std::string_view reason_code(Reject r) {
    switch (r) {
        case Reject::NonzeroConstantTerm: return "nonzero-constant-term";
        case Reject::TooManyTerms: return "too-many-terms";
        case Reject::TooManyRemainders: return "too-many-remainders";
        case Reject::NotAPartition: return "not-a-partition";
        case Reject::ZeroBranchCoefficient: return "zero-branch-coefficient";
        case Reject::ExponentNotCoprime: return "exponent-not-coprime";
        case Reject::PsiNotBijective: return "psi-not-bijective";
    }
    return "unknown";
}

template <class T>
struct Outcome {
    std::optional<T> value;
    Reject reason{};

    bool ok() const { return value.has_value(); }
    const T& operator*() const { return *value; }
    const T* operator->() const { return &*value; }
};

struct PermutationAnalysis {
    CyclotomicForm form;
    std::vector<int> psi;  // psi[i] = image coset of C_i
    bool is_permutation = true;
};

inline PolyForm cyclotomic_to_poly(const CyclotomicForm& f) {
    const auto& F = f.ctx.F;
    const i64 d = f.ctx.d, m = f.ctx.m;
    PolyForm P = PolyForm::zero(F);
    Elem inv_d = F->inv(F->from_int(d));
    for (i64 i = 0; i < d; ++i) {
        if (f.a[i].v == 0) continue;
        Elem base = F->mul(inv_d, f.a[i]);
        for (i64 j = 0; j < d; ++j) {
            i64 deg = j * m + f.r[i];
            Elem c = F->mul(base, F->pow(f.ctx.zeta, -mod(i * j, d)));
            P.coeffs[deg] = F->add(P.coeffs[deg], c);
        }
    }
    return P;
}

// Conversion from polynomial form to cyclotomic form (constant term must vanish).
inline Outcome<CyclotomicForm> poly_to_cyclotomic(const PolyForm& P, const CycloContext& ctx) {
    const auto& F = ctx.F;
    const i64 d = ctx.d, m = ctx.m;
    if (P.degree() > F->q() - 1) throw Error("polynomial degree exceeds q-1");
    if (P.coeff(0).v != 0) return {std::nullopt, Reject::NonzeroConstantTerm};
    auto degs = P.term_degrees();
    if (degs.empty()) return {CyclotomicForm{ctx, std::vector<Elem>(d, Elem{0}), std::vector<i64>(d, 1)}, {}};
    if (static_cast<i64>(degs.size()) > d * d) return {std::nullopt, Reject::TooManyTerms};

    std::vector<i64> rho;
    for (i64 n : degs) rho.push_back(rem1(n, m));
    std::sort(rho.begin(), rho.end());
    rho.erase(std::unique(rho.begin(), rho.end()), rho.end());
    const i64 kk = static_cast<i64>(rho.size());
    if (kk > d) return {std::nullopt, Reject::TooManyRemainders};

    // b_l[i] = sum_j zeta^{ij} v_l[j], the inverse of the DFT in the forward formula.
    std::vector<std::vector<Elem>> b(kk, std::vector<Elem>(d, Elem{0}));
    for (i64 l = 0; l < kk; ++l) {
        for (i64 j = 0; j < d; ++j) {
            Elem v = P.coeff(j * m + rho[l]);
            if (v.v == 0) continue;
            for (i64 i = 0; i < d; ++i) b[l][i] = F->add(b[l][i], F->mul(F->pow(ctx.zeta, mod(i * j, d)), v));
        }
    }

    std::vector<i64> owner(d, -1);
    for (i64 i = 0; i < d; ++i) {
        bool all_zero = true;
        for (i64 l = 0; l < kk; ++l) all_zero = all_zero && b[l][i].v == 0;
        int hits = 0;
        for (i64 l = 0; l < kk; ++l) {
            bool in_S = (l == 0) ? (b[0][i].v != 0 || all_zero) : (b[l][i].v != 0);
            if (in_S) {
                ++hits;
                owner[i] = l;
            }
        }
        if (hits != 1) return {std::nullopt, Reject::NotAPartition};
    }

    CyclotomicForm f{ctx, std::vector<Elem>(d), std::vector<i64>(d)};
    for (i64 i = 0; i < d; ++i) {
        f.a[i] = b[owner[i]][i];
        f.r[i] = rho[owner[i]];
    }
    return {f, {}};
}

// Permutation test on a cyclotomic form; computes the induced coset permutation.
inline Outcome<PermutationAnalysis> analyze_form(const CyclotomicForm& f) {
    const auto& F = f.ctx.F;
    const i64 d = f.ctx.d, m = f.ctx.m;
    for (i64 i = 0; i < d; ++i)
        if (f.a[i].v == 0) return {std::nullopt, Reject::ZeroBranchCoefficient};
    for (i64 i = 0; i < d; ++i)
        if (gcd(f.r[i], m) > 1) return {std::nullopt, Reject::ExponentNotCoprime};
    std::vector<int> psi(d);
    std::vector<char> hit(d, 0);
    for (i64 i = 0; i < d; ++i) {
        Elem y = F->mul(f.a[i], F->omega_pow(f.r[i] * i));
        psi[i] = static_cast<int>(f.ctx.coset_index(y));
        if (hit[psi[i]]) return {std::nullopt, Reject::PsiNotBijective};
        hit[psi[i]] = 1;
    }
    return {PermutationAnalysis{f, psi, true}, {}};
}

inline Outcome<PermutationAnalysis> analyze_permutation(const PolyForm& P, const CycloContext& ctx) {
    auto f = poly_to_cyclotomic(P, ctx);
    if (!f.ok()) return {std::nullopt, f.reason};
    return analyze_form(*f);
}

// r*rt + m*t = 1 with rt in {1,...,m}.
struct ExponentInverse {
    i64 rt;
    i64 t;
};

inline ExponentInverse exponent_inverse(i64 r, i64 m) {
    if (gcd(r, m) != 1) throw Error("exponent not coprime to m");
    i64 rt = rem1(inv_mod(r, m), m);
    i64 t = (1 - r * rt) / m;
    return {rt, t};
}

inline PolyForm invert_permutation(const CyclotomicForm& f) {
    if (!analyze_form(f).ok()) throw Error("invert_permutation: form is not a permutation");
    const auto& F = f.ctx.F;
    const i64 d = f.ctx.d, m = f.ctx.m;
    PolyForm P = PolyForm::zero(F);
    Elem inv_d = F->inv(F->from_int(d));
    for (i64 i = 0; i < d; ++i) {
        auto [rt, t] = exponent_inverse(f.r[i], m);
        for (i64 j = 0; j < d; ++j) {
            Elem c = F->mul(F->pow(f.ctx.zeta, mod(i * (t - j * f.r[i]), d)), F->pow(f.a[i], -rt - j * m));
            i64 deg = rt + j * m;
            P.coeffs[deg] = F->add(P.coeffs[deg], F->mul(inv_d, c));
        }
    }
    return P;
}

struct AffineShift {
    Elem b;
    CyclotomicForm form;
};

// x -> a_i x^{r_i} + b on C_i: peel off the constant term, then convert.
inline Outcome<AffineShift> analyze_affine_shift(const PolyForm& Q, const CycloContext& ctx) {
    PolyForm P = Q;
    if (P.coeffs.empty()) P = PolyForm::zero(ctx.F);
    Elem b = P.coeffs[0];
    P.coeffs[0] = Elem{0};
    auto f = poly_to_cyclotomic(P, ctx);
    if (!f.ok()) return {std::nullopt, f.reason};
    return {AffineShift{b, *f}, {}};
}

}  // namespace cyclo
