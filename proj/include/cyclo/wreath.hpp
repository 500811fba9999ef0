#pragma once

// Holomorphs Hol(Z/mZ) and Hol(C), imprimitive wreath products over Sym(d),
// the isomorphism with cyclotomic forms, and cycle types of elements.
// All products act on the right: gh means "apply g, then h".

#include "forms.hpp"

#include <map>

namespace cyclo {

// Cycle type / monomial: cycle length (variable index) -> multiplicity.
using CycleType = std::map<i64, i64>;

inline i64 ct_degree(const CycleType& c) {
    i64 n = 0;
    for (auto [l, e] : c) n += l * e;
    return n;
}

inline void ct_mul_into(CycleType& acc, const CycleType& b) {
    for (auto [l, e] : b) acc[l] += e;
}

inline CycleType ct_mul(CycleType a, const CycleType& b) {
    ct_mul_into(a, b);
    return a;
}

// x_i -> x_{i t}
inline CycleType ct_stretch(const CycleType& c, i64 t) {
    CycleType out;
    for (auto [l, e] : c) out[l * t] += e;
    return out;
}

// x_i^e * x_j^f -> x_{lcm(i,j)}^{e f gcd(i,j)}, multiplicative within monomials.
inline CycleType ct_star(const CycleType& a, const CycleType& b) {
    CycleType out;
    for (auto [i, e] : a)
        for (auto [j, f] : b) out[lcm(i, j)] += e * f * gcd(i, j);
    return out;
}

// ---- permutations of {0,...,d-1} ---------------------------------------

using Perm = std::vector<int>;

inline Perm perm_identity(int d) {
    Perm p(d);
    for (int i = 0; i < d; ++i) p[i] = i;
    return p;
}

// sigma then psi
inline Perm perm_compose(const Perm& sigma, const Perm& psi) {
    Perm out(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) out[i] = psi[sigma[i]];
    return out;
}

inline Perm perm_inverse(const Perm& p) {
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
    return out;
}

inline bool perm_valid(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

// All cycles (fixed points included), minimal element first, ordered by that element.
inline std::vector<std::vector<int>> perm_cycles(const Perm& p) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> cyc;
        for (int x = static_cast<int>(s); !seen[x]; x = p[x]) {
            seen[x] = 1;
            cyc.push_back(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

inline CycleType perm_cycle_type(const Perm& p) {
    CycleType c;
    for (auto& cyc : perm_cycles(p)) c[static_cast<i64>(cyc.size())] += 1;
    return c;
}

// ---- Hol(Z/mZ) ---------------------------------------------------------

struct AffineZ {
    i64 m = 1;
    i64 a = 0;
    i64 b = 0;

    static AffineZ make(i64 m, i64 a, i64 b) {
        if (m < 1) throw Error("modulus must be positive");
        AffineZ g{m, mod(a, m), mod(b, m)};
        if (gcd(g.a, m) != 1) throw Error("lam(a,b)@m requires gcd(a,m) = 1");
        return g;
    }
    static AffineZ identity(i64 m) { return make(m, 1, 0); }

    i64 operator()(i64 x) const { return mod(mulmod(a, x, m) + b, m); }
    bool is_identity() const { return a == 1 % m && b == 0; }

    bool operator==(const AffineZ&) const = default;
    auto operator<=>(const AffineZ& o) const {
        if (auto c = m <=> o.m; c != 0) return c;
        if (auto c = a <=> o.a; c != 0) return c;
        return b <=> o.b;
    }
};

// apply g, then h
inline AffineZ hol_compose(const AffineZ& g, const AffineZ& h) {
    if (g.m != h.m) throw Error("hol_compose: modulus mismatch");
    return AffineZ{g.m, mulmod(g.a, h.a, g.m), mod(mulmod(h.a, g.b, g.m) + h.b, g.m)};
}

inline AffineZ hol_inverse(const AffineZ& g) {
    i64 ai = inv_mod(g.a, g.m);
    return AffineZ{g.m, ai, mod(-mulmod(ai, g.b, g.m), g.m)};
}

inline AffineZ hol_power(AffineZ g, u64 e) {
    AffineZ r = AffineZ::identity(g.m);
    while (e) {
        if (e & 1) r = hol_compose(r, g);
        g = hol_compose(g, g);
        e >>= 1;
    }
    return r;
}

// ---- Hol(C): c -> coef * c^r on the index-d subgroup C --------------------

struct AffineC {
    i64 r = 1;  // in {1,...,m}, coprime to m
    Elem c;     // element of C

    bool operator==(const AffineC&) const = default;
};

inline AffineC hol_c_make(const CycloContext& ctx, i64 r, Elem c) {
    AffineC g{rem1(r, ctx.m), c};
    if (gcd(g.r, ctx.m) != 1) throw Error("lam(r,c) requires gcd(r,m) = 1");
    if (!ctx.in_C(c)) throw Error("lam(r,c) requires c in the index-d subgroup C");
    return g;
}

inline AffineC hol_c_compose(const CycloContext& ctx, const AffineC& g, const AffineC& h) {
    return AffineC{rem1(g.r * h.r, ctx.m), ctx.F->mul(h.c, ctx.F->pow(g.c, h.r))};
}

// lam(r, c) on C becomes lam(r, log_{omega^d} c) on Z/mZ.
inline AffineZ hol_c_to_z(const CycloContext& ctx, const AffineC& g) {
    if (!ctx.in_C(g.c)) throw Error("hol_c_to_z: coefficient not in C");
    i64 b = ctx.F->dlog(ctx.F->omega_pow(ctx.d), g.c);
    return AffineZ::make(ctx.m, g.r, b);
}

inline AffineC hol_z_to_c(const CycloContext& ctx, const AffineZ& g) {
    if (g.m != ctx.m) throw Error("hol_z_to_c: modulus mismatch");
    return AffineC{rem1(g.a, ctx.m), ctx.F->omega_pow(ctx.d * g.b)};
}

// ---- wreath products ---------------------------------------------------

struct WreathZ {
    i64 m = 1;
    Perm psi;
    std::vector<AffineZ> maps;

    int d() const { return static_cast<int>(psi.size()); }

    static WreathZ identity(int d, i64 m) { return {m, perm_identity(d), std::vector<AffineZ>(d, AffineZ::identity(m))}; }

    void validate() const {
        if (!perm_valid(psi)) throw Error("psi is not a permutation");
        if (maps.size() != psi.size()) throw Error("number of maps must equal d");
        for (auto& g : maps)
            if (g.m != m) throw Error("all maps must share one modulus");
    }

    // (x, i) -> (g_{psi(i)}(x), psi(i))
    std::pair<i64, int> operator()(i64 x, int i) const {
        int j = psi[i];
        return {maps[j](x), j};
    }

    bool operator==(const WreathZ&) const = default;
};

inline WreathZ wreath_compose(const WreathZ& g, const WreathZ& h) {
    if (g.m != h.m || g.d() != h.d()) throw Error("wreath_compose: shape mismatch");
    WreathZ out{g.m, perm_compose(g.psi, h.psi), {}};
    Perm hinv = perm_inverse(h.psi);
    out.maps.resize(g.maps.size());
    for (int i = 0; i < g.d(); ++i) out.maps[i] = hol_compose(g.maps[hinv[i]], h.maps[i]);
    return out;
}

inline WreathZ wreath_inverse(const WreathZ& g) {
    WreathZ out{g.m, perm_inverse(g.psi), {}};
    out.maps.resize(g.maps.size());
    for (int i = 0; i < g.d(); ++i) out.maps[i] = hol_inverse(g.maps[g.psi[i]]);
    return out;
}

// k^{-1} g k
inline WreathZ wreath_conjugate_by(const WreathZ& g, const WreathZ& k) {
    return wreath_compose(wreath_compose(wreath_inverse(k), g), k);
}

struct WreathC {
    CycloContext ctx;
    Perm psi;
    std::vector<AffineC> maps;

    int d() const { return static_cast<int>(psi.size()); }

    // (c, i) -> (g_{psi(i)}(c), psi(i))
    std::pair<Elem, int> operator()(Elem c, int i) const {
        int j = psi[i];
        return {ctx.F->mul(maps[j].c, ctx.F->pow(c, maps[j].r)), j};
    }
};

inline WreathC wreath_c_compose(const WreathC& g, const WreathC& h) {
    WreathC out{g.ctx, perm_compose(g.psi, h.psi), {}};
    Perm hinv = perm_inverse(h.psi);
    out.maps.resize(g.maps.size());
    for (int i = 0; i < g.d(); ++i) out.maps[i] = hol_c_compose(g.ctx, g.maps[hinv[i]], h.maps[i]);
    return out;
}

inline WreathZ wreath_c_to_z(const WreathC& g) {
    WreathZ out{g.ctx.m, g.psi, {}};
    for (auto& x : g.maps) out.maps.push_back(hol_c_to_z(g.ctx, x));
    return out;
}

inline WreathC wreath_z_to_c(const CycloContext& ctx, const WreathZ& g) {
    if (g.m != ctx.m || g.d() != ctx.d) throw Error("wreath_z_to_c: shape mismatch");
    WreathC out{ctx, g.psi, {}};
    for (auto& x : g.maps) out.maps.push_back(hol_z_to_c(ctx, x));
    return out;
}

// beta_omega(c, i) = c * omega^i
inline Elem beta_omega(const CycloContext& ctx, Elem c, int i) { return ctx.F->mul(c, ctx.F->omega_pow(i)); }

inline std::pair<Elem, int> beta_omega_inverse(const CycloContext& ctx, Elem x) {
    int i = static_cast<int>(ctx.coset_index(x));
    return {ctx.F->mul(x, ctx.omega_neg[i]), i};
}

// Wreath element over C -> cyclotomic form of the conjugated permutation of F_q^*.
inline CyclotomicForm iota_omega(const WreathC& g) {
    const auto& F = g.ctx.F;
    CyclotomicForm f{g.ctx, std::vector<Elem>(g.d()), std::vector<i64>(g.d())};
    for (int i = 0; i < g.d(); ++i) {
        int j = g.psi[i];
        i64 s = rem1(g.maps[j].r, g.ctx.m);
        f.r[i] = s;
        f.a[i] = F->mul(F->omega_pow(j - i * s), g.maps[j].c);
    }
    return f;
}

inline WreathC iota_omega_inverse(const CyclotomicForm& f, const Perm& psi) {
    const auto& F = f.ctx.F;
    if (!analyze_form(f).ok()) throw Error("iota_omega_inverse: form is not a permutation");
    if (static_cast<i64>(psi.size()) != f.ctx.d || !perm_valid(psi)) throw Error("iota_omega_inverse: bad psi");
    Perm pinv = perm_inverse(psi);
    WreathC g{f.ctx, psi, std::vector<AffineC>(psi.size())};
    for (int i = 0; i < g.d(); ++i) {
        int j = pinv[i];
        Elem c = F->mul(F->omega_pow(f.r[j] * j - i), f.a[j]);
        if (!f.ctx.in_C(c)) throw Error("iota_omega_inverse: coefficient not in C (psi inconsistent with form)");
        g.maps[i] = AffineC{f.r[j], c};
    }
    return g;
}

// ---- cycle types -------------------------------------------------------

inline AffineZ fcp(const WreathZ& g, const std::vector<int>& cycle) {
    if (cycle.empty()) throw Error("fcp: empty cycle");
    for (std::size_t t = 0; t < cycle.size(); ++t) {
        int from = cycle[t], to = cycle[(t + 1) % cycle.size()];
        if (from < 0 || from >= g.d() || g.psi[from] != to) throw Error("fcp: not a cycle of psi");
    }
    if (*std::min_element(cycle.begin(), cycle.end()) != cycle[0]) throw Error("fcp: cycle must start at its minimum");
    AffineZ acc = g.maps[cycle[0]];
    for (std::size_t t = 1; t < cycle.size(); ++t) acc = hol_compose(acc, g.maps[cycle[t]]);
    return acc;
}

namespace detail {

inline CycleType affine_ct_odd(i64 p, int k, i64 a, i64 b) {
    i64 pk = ipow(p, k);
    CycleType ct;
    if (a % p != 1) {
        i64 o = mult_order(a, pk);
        int v = nu(p, o);
        i64 o1 = o / ipow(p, v);
        ct[1] += 1;
        ct[o1] += (ipow(p, k - v) - 1) / o1;
        for (int s = 1; s <= v; ++s) ct[o1 * ipow(p, s)] += ipow(p, k - 1 - v) * (p - 1) / o1;
        return ct;
    }
    int va = nu_cap(p, k, mod(a - 1, pk));
    int vb = nu_cap(p, k, b);
    if (vb >= va) {
        ct[1] += ipow(p, va);
        for (int s = 1; s <= k - va; ++s) ct[ipow(p, s)] += ipow(p, va - 1) * (p - 1);
    } else {
        i64 o = aord(b, pk);
        ct[o] += pk / o;
    }
    return ct;
}

inline CycleType affine_ct_two(int k, i64 a, i64 b) {
    i64 n = ipow(2, k);
    CycleType ct;
    auto translation = [&] {
        i64 o = aord(b, n);
        ct[o] += n / o;
    };
    if (k == 1) {
        translation();
        return ct;
    }
    if (k == 2) {
        if (a == 1) {
            translation();
        } else if (b % 2 == 0) {
            ct[1] += 2;
            ct[2] += 1;
        } else {
            ct[2] += 2;
        }
        return ct;
    }
    int eps = (a % 4 == 3) ? 1 : 0;
    i64 a5 = eps ? mod(-a, n) : a;
    i64 e = bsgs_mod(5, a5, ipow(2, k - 2), n);
    if (eps == 1) {
        if (b % 2 == 1) {
            int v = nu_cap(2, k - 2, e);
            ct[ipow(2, k - 1 - v)] += ipow(2, 1 + v);
        } else {
            int w = nu_cap(2, k - 3, e);
            ct[1] += 2;
            ct[2] += ipow(2, 2 + w) - 1;
            for (int s = 2; s <= k - 2 - w; ++s) ct[ipow(2, s)] += ipow(2, 1 + w);
        }
        return ct;
    }
    if (nu_cap(2, k, b) < nu_cap(2, k, mod(a - 1, n))) {
        translation();
    } else {
        int v = nu_cap(2, k - 2, e);
        ct[1] += ipow(2, 2 + v);
        for (int s = 1; s <= k - 2 - v; ++s) ct[ipow(2, s)] += ipow(2, 1 + v);
    }
    return ct;
}

}  // namespace detail

// Cycle type of x -> ax+b on Z/p^k via the closed-form case tables.
inline CycleType cycle_type_affine_pp(i64 p, int k, i64 a, i64 b) {
    if (k == 0) return CycleType{{1, 1}};
    i64 pk = ipow(p, k);
    a = mod(a, pk);
    b = mod(b, pk);
    return p == 2 ? detail::affine_ct_two(k, a, b) : detail::affine_ct_odd(p, k, a, b);
}

// CRT-split into prime-power components and combine with the star product.
inline CycleType cycle_type_affine(const AffineZ& g) {
    CycleType acc{{1, 1}};
    for (auto [p, k] : factorize(g.m)) acc = ct_star(acc, cycle_type_affine_pp(p, k, g.a, g.b));
    return acc;
}

inline CycleType cycle_type_wreath(const WreathZ& g) {
    CycleType acc;
    for (auto& cyc : perm_cycles(g.psi))
        ct_mul_into(acc, ct_stretch(cycle_type_affine(fcp(g, cyc)), static_cast<i64>(cyc.size())));
    return acc;
}

inline CycleType cycle_type_wreath(const WreathC& g) { return cycle_type_wreath(wreath_c_to_z(g)); }

}  // namespace cyclo
