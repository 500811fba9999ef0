#pragma once

// Full-cycle criterion, conjugacy in Hol(Z/mZ) and in the wreath products,
// and complete representative systems for long cycles and involutions.

#include "cycle_index.hpp"

#include <optional>
#include <string>

namespace cyclo {

inline bool knuth_is_full_cycle(i64 a, i64 b, i64 m) {
    if (gcd(a, m) != 1) throw Error("knuth_is_full_cycle: gcd(a,m) > 1");
    return mod(a - 1, rad_prime(m)) == 0 && gcd(mod(b, m), m) == 1;
}

struct HolClassId {
    i64 m;
    i64 a;
    i64 b_canon;
    bool operator==(const HolClassId&) const = default;
    auto operator<=>(const HolClassId&) const = default;
};

// The conjugacy class of lam(a,b) is {lam(a, (1-a)z + cb)}; with g = gcd(1-a, m)
// its minimal second component is gcd(b, g) reduced mod g.
inline HolClassId hol_class_id(const AffineZ& g) {
    i64 gg = gcd(mod(1 - g.a, g.m), g.m);
    return {g.m, g.a, gcd(g.b % gg, gg) % gg};
}

inline bool hol_conjugate(const AffineZ& g, const AffineZ& h) {
    if (g.m != h.m) throw Error("hol_conjugate: modulus mismatch");
    return hol_class_id(g) == hol_class_id(h);
}

// Z/mZ acting regularly: every element is its own class.
inline HolClassId reg_class_id(const AffineZ& g) {
    if (g.a != 1 % g.m) throw Error("element is not a translation");
    return {g.m, g.a, g.b};
}

enum class GroupKind { W, W1, Weq };

inline std::string_view group_name(GroupKind g) {
    switch (g) {
        case GroupKind::W: return "w";
        case GroupKind::W1: return "w1";
        case GroupKind::Weq: return "weq";
    }
    return "?";
}

inline bool in_group(const WreathZ& g, GroupKind kind) {
    switch (kind) {
        case GroupKind::W: return true;
        case GroupKind::W1:
            for (auto& x : g.maps)
                if (x.a != 1 % g.m) return false;
            return true;
        case GroupKind::Weq:
            for (auto& x : g.maps)
                if (x.a != g.maps.front().a) return false;
            return true;
    }
    return false;
}

// M_l(g) for every l: sorted class ids of the forward cycle products of l-cycles.
inline std::map<i64, std::vector<HolClassId>> fcp_class_multisets(const WreathZ& g, GroupKind kind) {
    std::map<i64, std::vector<HolClassId>> out;
    for (auto& cyc : perm_cycles(g.psi)) {
        AffineZ f = fcp(g, cyc);
        out[static_cast<i64>(cyc.size())].push_back(kind == GroupKind::W1 ? reg_class_id(f) : hol_class_id(f));
    }
    for (auto& [l, v] : out) std::sort(v.begin(), v.end());
    return out;
}

struct ConjugacyVerdict {
    bool conjugate = false;
    std::string reason;  // empty when conjugate
};

// Conjugacy inside the group of the given kind. For Weq the criterion is the
// W(d,m) one plus equal first components; conjugators can be chosen in Weq.
inline ConjugacyVerdict wreath_conjugate_verdict(const WreathZ& g, const WreathZ& h, GroupKind kind) {
    g.validate();
    h.validate();
    if (g.m != h.m || g.d() != h.d()) throw Error("wreath_conjugate: shape mismatch");
    if (!in_group(g, kind) || !in_group(h, kind))
        throw Error(std::string("wreath_conjugate: element not in group ") + std::string(group_name(kind)));
    if (perm_cycle_type(g.psi) != perm_cycle_type(h.psi)) return {false, "psi-cycle-type"};
    if (kind == GroupKind::Weq && g.d() > 0 && g.maps.front().a != h.maps.front().a)
        return {false, "first-component"};
    auto mg = fcp_class_multisets(g, kind), mh = fcp_class_multisets(h, kind);
    for (auto& [l, v] : mg)
        if (mh[l] != v) return {false, "M_" + std::to_string(l)};
    return {true, {}};
}

inline bool wreath_conjugate(const WreathZ& g, const WreathZ& h, GroupKind kind) {
    return wreath_conjugate_verdict(g, h, kind).conjugate;
}

// ---- involutions in Hol(Z/mZ) --------------------------------------------

inline std::vector<AffineZ> hol_involution_reps_pp(i64 p, int k) {
    i64 n = ipow(p, k);
    auto L = [n](i64 a, i64 b) { return AffineZ::make(n, a, b); };
    if (p != 2) return {L(1, 0), L(-1, 0)};
    if (k == 1) return {L(1, 0), L(1, 1)};
    if (k == 2) return {L(1, 0), L(1, 2), L(-1, 0), L(-1, 1)};
    i64 h = n / 2;
    return {L(1, 0), L(1, h), L(-1, 0), L(-1, 1), L(h - 1, 0), L(h + 1, 0)};
}

// Per-prime-power representatives glued by CRT, sorted lexicographically by (a,b).
inline std::vector<AffineZ> hol_involution_reps(i64 m) {
    if (m < 1) throw Error("hol_involution_reps: modulus must be positive");
    std::vector<AffineZ> out{AffineZ::identity(m)};
    std::vector<std::vector<AffineZ>> parts;
    for (auto [p, k] : factorize(m)) parts.push_back(hol_involution_reps_pp(p, k));
    if (parts.empty()) return out;
    out.clear();
    std::vector<std::size_t> idx(parts.size(), 0);
    while (true) {
        std::vector<std::pair<i64, i64>> ra, rb;
        for (std::size_t t = 0; t < parts.size(); ++t) {
            ra.push_back({parts[t][idx[t]].a, parts[t][idx[t]].m});
            rb.push_back({parts[t][idx[t]].b, parts[t][idx[t]].m});
        }
        out.push_back(AffineZ::make(m, crt_combine(ra).value, crt_combine(rb).value));
        std::size_t t = 0;
        while (t < parts.size() && ++idx[t] == parts[t].size()) idx[t++] = 0;
        if (t == parts.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline i64 involution_class_count_formula(i64 m) {
    int v2 = m % 2 == 0 ? nu(2, m) : 0;
    i64 odd = 0;
    for (auto [p, k] : factorize(m))
        if (p != 2) ++odd;
    return std::min<i64>(6, 2 * v2) * ipow(2, static_cast<int>(odd));
}

// ---- classification of single elements -----------------------------------

enum class ElementKind { Identity, LongCycle, Involution, Neither };

inline std::string_view element_kind_name(ElementKind k) {
    switch (k) {
        case ElementKind::Identity: return "identity";
        case ElementKind::LongCycle: return "long-cycle";
        case ElementKind::Involution: return "involution";
        case ElementKind::Neither: return "neither";
    }
    return "?";
}

inline bool wreath_is_identity(const WreathZ& g) {
    for (int i = 0; i < g.d(); ++i)
        if (g.psi[i] != i || !g.maps[i].is_identity()) return false;
    return true;
}

inline bool is_long_cycle(const WreathZ& g) {
    auto cycles = perm_cycles(g.psi);
    if (cycles.size() != 1) return false;
    AffineZ f = fcp(g, cycles[0]);
    return knuth_is_full_cycle(f.a, f.b, g.m);
}

// g^2 = 1, the identity included.
inline bool is_involution(const WreathZ& g) {
    for (auto& cyc : perm_cycles(g.psi)) {
        if (cyc.size() > 2) return false;
        AffineZ f = fcp(g, cyc);
        if (cyc.size() == 2 && !f.is_identity()) return false;
        if (cyc.size() == 1 && !hol_compose(f, f).is_identity()) return false;
    }
    return true;
}

inline ElementKind classify_wreath(const WreathZ& g) {
    g.validate();
    if (wreath_is_identity(g)) return ElementKind::Identity;
    if (is_long_cycle(g)) return ElementKind::LongCycle;
    if (is_involution(g)) return ElementKind::Involution;
    return ElementKind::Neither;
}

// ---- representative systems -----------------------------------------------

enum class RepKind { LongCycle, Involution };

inline bool has_kind(const WreathZ& g, RepKind kind) {
    return kind == RepKind::LongCycle ? is_long_cycle(g) : is_involution(g);
}

namespace detail {

inline Perm cycle_perm(int d) {
    Perm p(d);
    for (int i = 0; i < d; ++i) p[i] = (i + 1) % d;
    return p;
}

inline Perm pairing_perm(int d, int k) {
    Perm p = perm_identity(d);
    for (int j = 0; j < k; ++j) std::swap(p[2 * j], p[2 * j + 1]);
    return p;
}

// All non-decreasing index tuples of length len over {0,...,n-1}, lexicographic.
inline std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t len) {
    std::vector<std::vector<std::size_t>> out;
    if (len == 0) return {{}};
    if (n == 0) return out;
    std::vector<std::size_t> cur(len, 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = len;
        while (i > 0 && cur[i - 1] == n - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < len; ++j) cur[j] = cur[i - 1];
    }
    return out;
}

}  // namespace detail

// Units of Z/mZ as residues in [0,m); for m = 1 this is {0}.
inline std::vector<i64> units_mod(i64 m) {
    std::vector<i64> out;
    for (i64 a = 0; a < m; ++a)
        if (gcd(a, m) == 1) out.push_back(a);
    return out;
}

inline std::vector<i64> involution_units(i64 m) {
    std::vector<i64> out;
    for (i64 a : units_mod(m))
        if (mulmod(a, a, m) == 1 % m) out.push_back(a);
    return out;
}

inline std::vector<WreathZ> rep_system(GroupKind group, RepKind kind, int d, i64 m) {
    if (d < 1 || m < 1) throw Error("rep_system: d and m must be positive");
    std::vector<WreathZ> out;
    const AffineZ id = AffineZ::identity(m);
    if (kind == RepKind::LongCycle) {
        Perm psi = detail::cycle_perm(d);
        if (group == GroupKind::W) {
            i64 r = rad_prime(m);
            for (i64 t = 0; t < m / r; ++t) {
                WreathZ g{m, psi, std::vector<AffineZ>(d, id)};
                g.maps[0] = AffineZ::make(m, 1 + t * r, 1);
                out.push_back(g);
            }
        } else if (group == GroupKind::W1) {
            // Z/mZ is abelian, so each generator b gives its own class.
            for (i64 b : units_mod(m)) {
                WreathZ g{m, psi, std::vector<AffineZ>(d, id)};
                g.maps[0] = AffineZ::make(m, 1, b);
                out.push_back(g);
            }
        } else {
            i64 r = rad_prime(m);
            for (i64 a : units_mod(m)) {
                if (mod(powmod(a, d, r) - 1, r) != 0) continue;
                WreathZ g{m, psi, std::vector<AffineZ>(d, AffineZ::make(m, a, 0))};
                g.maps[0] = AffineZ::make(m, a, 1);
                out.push_back(g);
            }
        }
        return out;
    }
    for (int k = 0; 2 * k <= d; ++k) {
        Perm psi = detail::pairing_perm(d, k);
        std::size_t rest = static_cast<std::size_t>(d - 2 * k);
        if (group == GroupKind::W) {
            auto reps = hol_involution_reps(m);
            for (auto& ms : detail::multisets(reps.size(), rest)) {
                WreathZ g{m, psi, std::vector<AffineZ>(d, id)};
                for (std::size_t j = 0; j < rest; ++j) g.maps[2 * k + j] = reps[ms[j]];
                out.push_back(g);
            }
        } else if (group == GroupKind::W1) {
            std::vector<i64> bs{0};
            if (m % 2 == 0 && m > 1) bs.push_back(m / 2);
            for (auto& ms : detail::multisets(bs.size(), rest)) {
                WreathZ g{m, psi, std::vector<AffineZ>(d, id)};
                for (std::size_t j = 0; j < rest; ++j) g.maps[2 * k + j] = AffineZ::make(m, 1, bs[ms[j]]);
                out.push_back(g);
            }
        } else {
            auto reps = hol_involution_reps(m);
            for (i64 a : involution_units(m)) {
                std::vector<AffineZ> mine;
                for (auto& r : reps)
                    if (r.a == a) mine.push_back(r);
                for (auto& ms : detail::multisets(mine.size(), rest)) {
                    WreathZ g{m, psi, std::vector<AffineZ>(d, AffineZ::make(m, a, 0))};
                    for (std::size_t j = 0; j < rest; ++j) g.maps[2 * k + j] = mine[ms[j]];
                    out.push_back(g);
                }
            }
        }
    }
    return out;
}

// ---- field-level representatives -------------------------------------------

enum class FieldGroup { GCP, FOCP, CP };

inline GroupKind wreath_group_of(FieldGroup g) {
    switch (g) {
        case FieldGroup::GCP: return GroupKind::W;
        case FieldGroup::FOCP: return GroupKind::W1;
        case FieldGroup::CP: return GroupKind::Weq;
    }
    return GroupKind::W;
}

inline CyclotomicForm wreath_z_to_form(const CycloContext& ctx, const WreathZ& g) {
    return iota_omega(wreath_z_to_c(ctx, g));
}

inline WreathZ form_to_wreath_z(const CyclotomicForm& f) {
    auto an = analyze_form(f);
    if (!an.ok()) throw Error("form is not a permutation: " + std::string(reason_code(an.reason)));
    return wreath_c_to_z(iota_omega_inverse(f, an->psi));
}

inline std::vector<CyclotomicForm> reps_as_cyclotomic(FieldGroup group, RepKind kind, const CycloContext& ctx) {
    std::vector<CyclotomicForm> out;
    for (auto& g : rep_system(wreath_group_of(group), kind, static_cast<int>(ctx.d), ctx.m))
        out.push_back(wreath_z_to_form(ctx, g));
    return out;
}

// The closed-form field-level displays, evaluated literally from the wreath
// representative's parameters. Used to cross-check the isomorphism images.
inline CyclotomicForm displayed_form(FieldGroup group, RepKind kind, const CycloContext& ctx, const WreathZ& rep) {
    const auto& F = ctx.F;
    const i64 d = ctx.d;
    CyclotomicForm f{ctx, std::vector<Elem>(d), std::vector<i64>(d, 1)};
    auto w = [&](i64 e) { return F->omega_pow(e); };
    if (kind == RepKind::LongCycle) {
        i64 a = rep.maps[0].a;
        for (i64 i = 0; i < d; ++i) {
            if (group == FieldGroup::GCP) {
                f.a[i] = i < d - 1 ? w(1) : w(d - (d - 1) * a);
                f.r[i] = rem1(i < d - 1 ? 1 : a, ctx.m);
            } else if (group == FieldGroup::FOCP) {
                f.a[i] = w(1);
            } else {
                f.a[i] = i < d - 1 ? w(i + 1 - i * a) : w(a);
                f.r[i] = rem1(a, ctx.m);
            }
        }
        return f;
    }
    i64 k = 0;
    while (2 * k + 1 < d && rep.psi[2 * k] == 2 * k + 1) ++k;
    for (i64 i = 0; i < d; ++i) {
        const AffineZ& g = rep.maps[i];
        if (group == FieldGroup::CP) {
            i64 a = g.a;
            f.r[i] = rem1(a, ctx.m);
            if (i < 2 * k) f.a[i] = i % 2 == 0 ? w(i + 1 - i * a) : w(i - (i + 1) * a);
            else f.a[i] = w(i * (1 - a) + d * g.b);
        } else {
            if (i < 2 * k) {
                f.a[i] = i % 2 == 0 ? w(1) : w(-1);
            } else if (group == FieldGroup::GCP) {
                f.a[i] = w(d * g.b + (1 - g.a) * d);
                f.r[i] = rem1(g.a, ctx.m);
            } else {
                f.a[i] = w(d * g.b);
            }
        }
    }
    return f;
}

}  // namespace cyclo
