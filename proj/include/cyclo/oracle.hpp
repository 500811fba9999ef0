#pragma once

// Brute-force ground truth: explicit permutations, exhaustive group
// enumeration, cycle indices and conjugacy by definition.

#include "conjugacy.hpp"

#include <functional>
#include <unordered_map>

namespace cyclo {

struct ExplicitPerm {
    std::vector<std::uint32_t> images;

    std::size_t size() const { return images.size(); }
    bool operator==(const ExplicitPerm&) const = default;

    static ExplicitPerm identity(std::size_t n) {
        ExplicitPerm p;
        p.images.resize(n);
        for (std::size_t i = 0; i < n; ++i) p.images[i] = static_cast<std::uint32_t>(i);
        return p;
    }
    bool is_identity() const {
        for (std::size_t i = 0; i < images.size(); ++i)
            if (images[i] != i) return false;
        return true;
    }
};

// Collision witness: two points with the same image.
struct NotBijective : Error {
    std::size_t x, y;
    NotBijective(std::size_t x_, std::size_t y_)
        : Error("map is not bijective: points " + std::to_string(x_) + " and " + std::to_string(y_) +
                " share an image"),
          x(x_),
          y(y_) {}
};

inline ExplicitPerm make_perm(std::vector<std::uint32_t> images) {
    std::vector<std::int64_t> seen(images.size(), -1);
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] >= images.size()) throw Error("image out of range");
        if (seen[images[i]] >= 0) throw NotBijective(static_cast<std::size_t>(seen[images[i]]), i);
        seen[images[i]] = static_cast<std::int64_t>(i);
    }
    return ExplicitPerm{std::move(images)};
}

// p first, then q
inline ExplicitPerm perm_then(const ExplicitPerm& p, const ExplicitPerm& q) {
    if (p.size() != q.size()) throw Error("perm_then: size mismatch");
    ExplicitPerm r;
    r.images.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r.images[i] = q.images[p.images[i]];
    return r;
}

inline ExplicitPerm perm_inv(const ExplicitPerm& p) {
    ExplicitPerm r;
    r.images.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r.images[p.images[i]] = static_cast<std::uint32_t>(i);
    return r;
}

inline CycleType cycle_type_of(const ExplicitPerm& p) {
    CycleType ct;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        i64 len = 0;
        for (std::size_t x = s; !seen[x]; x = p.images[x]) {
            seen[x] = 1;
            ++len;
        }
        ct[len] += 1;
    }
    return ct;
}

// F_q^* labelled by discrete logarithm: label e stands for omega^e.
struct LogTable {
    FieldPtr F;
    std::vector<Elem> exp;
    std::vector<std::int64_t> log;  // indexed by the packed element, -1 for 0

    explicit LogTable(FieldPtr f) : F(std::move(f)) {
        const i64 n = F->q() - 1;
        exp.resize(n);
        log.assign(static_cast<std::size_t>(F->q()), -1);
        Elem x = F->one();
        for (i64 e = 0; e < n; ++e) {
            exp[e] = x;
            log[x.v] = e;
            x = F->mul(x, F->omega());
        }
    }
};

template <class Fn>
ExplicitPerm materialize_on_units(const LogTable& T, Fn&& f) {
    std::vector<std::uint32_t> img(T.exp.size());
    for (std::size_t e = 0; e < T.exp.size(); ++e) {
        Elem y = f(T.exp[e]);
        if (y.v == 0) throw Error("map sends a unit to 0");
        img[e] = static_cast<std::uint32_t>(T.log[y.v]);
    }
    return make_perm(std::move(img));
}

inline ExplicitPerm materialize(const LogTable& T, const CyclotomicForm& f) {
    return materialize_on_units(T, [&](Elem x) { return f.eval(x); });
}

inline ExplicitPerm materialize(const LogTable& T, const PolyForm& P) {
    if (P.eval(Elem{0}).v != 0) throw Error("polynomial does not fix 0");
    return materialize_on_units(T, [&](Elem x) { return P.eval(x); });
}

inline ExplicitPerm materialize(const CyclotomicForm& f) { return materialize(LogTable(f.ctx.F), f); }
inline ExplicitPerm materialize(const PolyForm& P) { return materialize(LogTable(P.F), P); }

inline ExplicitPerm materialize(const AffineZ& g) {
    std::vector<std::uint32_t> img(g.m);
    for (i64 x = 0; x < g.m; ++x) img[x] = static_cast<std::uint32_t>(g(x));
    return make_perm(std::move(img));
}

// Point (x, i) is labelled x + m*i.
inline ExplicitPerm materialize(const WreathZ& g) {
    g.validate();
    std::vector<std::uint32_t> img(static_cast<std::size_t>(g.m * g.d()));
    for (int i = 0; i < g.d(); ++i)
        for (i64 x = 0; x < g.m; ++x) {
            auto [y, j] = g(x, i);
            img[x + g.m * i] = static_cast<std::uint32_t>(y + g.m * j);
        }
    return make_perm(std::move(img));
}

// beta_omega transported to labels: (x, i) -> omega^{d x + i}.
inline ExplicitPerm transport_to_units(const CycloContext& ctx, const ExplicitPerm& p) {
    const i64 m = ctx.m, d = ctx.d;
    auto label = [&](i64 pt) { return (pt % m) * d + pt / m; };
    std::vector<std::uint32_t> img(p.size());
    for (std::size_t pt = 0; pt < p.size(); ++pt) img[label(pt)] = static_cast<std::uint32_t>(label(p.images[pt]));
    return make_perm(std::move(img));
}

// ---- group enumeration ----------------------------------------------------

inline constexpr u64 kDefaultEnumerationCap = 10'000'000;

inline u64 factorial_u64(i64 d) {
    u64 r = 1;
    for (i64 i = 2; i <= d; ++i) r *= static_cast<u64>(i);
    return r;
}

inline u64 checked_mul(u64 a, u64 b) {
    if (b != 0 && a > ~u64{0} / b) throw Error("group order overflows 64 bits");
    return a * b;
}

inline u64 checked_pow(u64 b, i64 e) {
    u64 r = 1;
    for (i64 i = 0; i < e; ++i) r = checked_mul(r, b);
    return r;
}

inline u64 group_order(GroupKind kind, int d, i64 m) {
    u64 phi = static_cast<u64>(euler_phi(m));
    u64 mm = static_cast<u64>(m);
    switch (kind) {
        case GroupKind::W: return checked_mul(factorial_u64(d), checked_pow(phi * mm, d));
        case GroupKind::W1: return checked_mul(factorial_u64(d), checked_pow(mm, d));
        case GroupKind::Weq: return checked_mul(checked_mul(factorial_u64(d), phi), checked_pow(mm, d));
    }
    return 0;
}

inline void check_cap(u64 order, u64 cap) {
    if (order > cap)
        throw Error("enumeration of " + std::to_string(order) + " elements exceeds the cap of " + std::to_string(cap));
}

inline std::vector<Perm> all_perms(int d) {
    std::vector<Perm> out;
    Perm p = perm_identity(d);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline void for_each_hol(i64 m, const std::function<void(const AffineZ&)>& fn, u64 cap = kDefaultEnumerationCap) {
    check_cap(static_cast<u64>(euler_phi(m)) * static_cast<u64>(m), cap);
    for (i64 a : units_mod(m))
        for (i64 b = 0; b < m; ++b) fn(AffineZ::make(m, a, b));
}

inline void for_each_element(GroupKind kind, int d, i64 m, const std::function<void(const WreathZ&)>& fn,
                             u64 cap = kDefaultEnumerationCap) {
    if (d < 1 || m < 1) throw Error("enumeration needs d, m >= 1");
    check_cap(group_order(kind, d, m), cap);
    std::vector<AffineZ> base;
    if (kind == GroupKind::W1) {
        for (i64 b = 0; b < m; ++b) base.push_back(AffineZ::make(m, 1, b));
    } else if (kind == GroupKind::W) {
        for_each_hol(m, [&](const AffineZ& g) { base.push_back(g); }, cap);
    }
    auto perms = all_perms(d);
    WreathZ g{m, perm_identity(d), std::vector<AffineZ>(d, AffineZ::identity(m))};
    auto run_tuples = [&](const std::vector<AffineZ>& choices) {
        std::vector<std::size_t> idx(d, 0);
        while (true) {
            for (int i = 0; i < d; ++i) g.maps[i] = choices[idx[i]];
            fn(g);
            int t = 0;
            while (t < d && ++idx[t] == choices.size()) idx[t++] = 0;
            if (t == d) break;
        }
    };
    for (auto& psi : perms) {
        g.psi = psi;
        if (kind != GroupKind::Weq) {
            run_tuples(base);
        } else {
            for (i64 a : units_mod(m)) {
                std::vector<AffineZ> choices;
                for (i64 b = 0; b < m; ++b) choices.push_back(AffineZ::make(m, a, b));
                run_tuples(choices);
            }
        }
    }
}

inline CycleIndex ci_brute_hol(i64 m, u64 cap = kDefaultEnumerationCap) {
    CycleIndex f;
    u64 n = 0;
    for_each_hol(m, [&](const AffineZ& g) {
        f.add(cycle_type_of(materialize(g)), 1);
        ++n;
    }, cap);
    return f * Rational(1, static_cast<unsigned long>(n));
}

inline CycleIndex ci_brute(GroupKind kind, int d, i64 m, u64 cap = kDefaultEnumerationCap) {
    std::map<CycleType, u64> counts;
    u64 n = 0;
    for_each_element(kind, d, m, [&](const WreathZ& g) {
        counts[cycle_type_of(materialize(g))] += 1;
        ++n;
    }, cap);
    CycleIndex f;
    for (auto& [ct, c] : counts) f.add(ct, Rational(mpz_class(static_cast<unsigned long>(c)), mpz_class(static_cast<unsigned long>(n))));
    return f;
}

inline CycleIndex ci_brute_sym(int d) {
    CycleIndex f;
    auto perms = all_perms(d);
    for (auto& p : perms) f.add(perm_cycle_type(p), 1);
    return f * Rational(1, static_cast<unsigned long>(perms.size()));
}

inline CycleIndex ci_brute_regular(i64 m) {
    CycleIndex f;
    for (i64 b = 0; b < m; ++b) f.add(cycle_type_of(materialize(AffineZ::make(m, 1, b))), Rational(1, m));
    return f;
}

// ---- conjugacy by definition -------------------------------------------------

inline bool hol_conjugate_brute(const AffineZ& g, const AffineZ& h) {
    bool found = false;
    for_each_hol(g.m, [&](const AffineZ& k) {
        if (!found && hol_compose(hol_compose(hol_inverse(k), g), k) == h) found = true;
    });
    return found;
}

inline bool conjugate_brute(const WreathZ& g, const WreathZ& h, GroupKind kind, u64 cap = kDefaultEnumerationCap) {
    bool found = false;
    ExplicitPerm target = materialize(h);
    ExplicitPerm pg = materialize(g);
    for_each_element(kind, g.d(), g.m, [&](const WreathZ& k) {
        if (found) return;
        ExplicitPerm pk = materialize(k);
        if (perm_then(perm_then(perm_inv(pk), pg), pk) == target) found = true;
    }, cap);
    return found;
}

// Compact key for an element of W(d,m): psi digits base d, then (a,b) digits base m^2.
inline u64 wreath_key(const WreathZ& g) {
    unsigned __int128 key = 0;
    for (int x : g.psi) key = key * static_cast<unsigned>(g.d()) + static_cast<unsigned>(x);
    for (auto& f : g.maps) {
        key = key * static_cast<u64>(g.m * g.m) + static_cast<u64>(f.a * g.m + f.b);
        if (key >> 63) throw Error("wreath_key: element too large to encode");
    }
    return static_cast<u64>(key);
}

// Generators of the group, used to close conjugacy classes.
inline std::vector<WreathZ> group_generators(GroupKind kind, int d, i64 m) {
    std::vector<WreathZ> gens;
    for (int i = 0; i + 1 < d; ++i) {
        WreathZ t = WreathZ::identity(d, m);
        std::swap(t.psi[i], t.psi[i + 1]);
        gens.push_back(t);
    }
    WreathZ shift = WreathZ::identity(d, m);
    shift.maps[0] = AffineZ::make(m, 1, 1);
    gens.push_back(shift);
    if (kind == GroupKind::W1) return gens;
    for (i64 u : units_mod(m)) {
        WreathZ s = WreathZ::identity(d, m);
        if (kind == GroupKind::W) s.maps[0] = AffineZ::make(m, u, 0);
        else s.maps.assign(d, AffineZ::make(m, u, 0));
        gens.push_back(s);
    }
    return gens;
}

// Conjugacy classes (by brute-force closure) of all group elements satisfying pred.
struct ClassPartition {
    std::vector<WreathZ> elements;
    std::vector<int> class_of;  // parallel to elements
    int num_classes = 0;
    std::unordered_map<u64, int> index;  // key -> position in elements

    int class_of_element(const WreathZ& g) const {
        auto it = index.find(wreath_key(g));
        return it == index.end() ? -1 : class_of[it->second];
    }
};

inline ClassPartition conjugacy_classes(GroupKind kind, int d, i64 m, const std::function<bool(const WreathZ&)>& pred,
                                        u64 cap = kDefaultEnumerationCap) {
    ClassPartition P;
    for_each_element(kind, d, m, [&](const WreathZ& g) {
        if (!pred(g)) return;
        P.index.emplace(wreath_key(g), static_cast<int>(P.elements.size()));
        P.elements.push_back(g);
    }, cap);
    P.class_of.assign(P.elements.size(), -1);
    auto gens = group_generators(kind, d, m);
    std::vector<WreathZ> gens_inv;
    for (auto& s : gens) gens_inv.push_back(wreath_inverse(s));
    for (std::size_t s = 0; s < P.elements.size(); ++s) {
        if (P.class_of[s] >= 0) continue;
        int cls = P.num_classes++;
        std::vector<std::size_t> stack{s};
        P.class_of[s] = cls;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t t = 0; t < gens.size(); ++t) {
                WreathZ c = wreath_compose(wreath_compose(gens_inv[t], P.elements[cur]), gens[t]);
                auto it = P.index.find(wreath_key(c));
                if (it == P.index.end()) throw Error("conjugacy_classes: predicate is not conjugation invariant");
                if (P.class_of[it->second] < 0) {
                    P.class_of[it->second] = cls;
                    stack.push_back(static_cast<std::size_t>(it->second));
                }
            }
        }
    }
    return P;
}

// Predicates evaluated on the explicit permutation.
inline bool oracle_is_long_cycle(const WreathZ& g) {
    CycleType ct = cycle_type_of(materialize(g));
    return ct.size() == 1 && ct.begin()->first == g.m * g.d();
}

inline bool oracle_is_involution(const WreathZ& g) {
    ExplicitPerm p = materialize(g);
    return perm_then(p, p).is_identity();
}

struct RepSystemCheck {
    bool property_ok = true;       // every rep has the claimed kind
    bool pairwise_ok = true;       // no two reps conjugate
    bool complete_ok = true;       // every element of the kind is conjugate to exactly one rep
    bool formula_agrees = true;    // wreath_conjugate agrees with the brute-force classes on reps
    int classes = 0;
    int reps = 0;
    std::string detail;
    bool ok() const { return property_ok && pairwise_ok && complete_ok && formula_agrees; }
};

inline RepSystemCheck verify_rep_system(GroupKind group, RepKind kind, int d, i64 m, u64 cap = kDefaultEnumerationCap) {
    RepSystemCheck R;
    auto reps = rep_system(group, kind, d, m);
    R.reps = static_cast<int>(reps.size());
    auto pred = kind == RepKind::LongCycle ? std::function<bool(const WreathZ&)>(oracle_is_long_cycle)
                                           : std::function<bool(const WreathZ&)>(oracle_is_involution);
    auto P = conjugacy_classes(group, d, m, pred, cap);
    R.classes = P.num_classes;
    std::vector<int> hits(P.num_classes, 0);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (!in_group(reps[i], group) || !pred(reps[i]) || !has_kind(reps[i], kind)) {
            R.property_ok = false;
            R.detail += "rep " + std::to_string(i) + " lacks the claimed property; ";
            continue;
        }
        int c = P.class_of_element(reps[i]);
        if (c < 0) {
            R.property_ok = false;
            continue;
        }
        if (hits[c]++ > 0) {
            R.pairwise_ok = false;
            R.detail += "rep " + std::to_string(i) + " repeats a class; ";
        }
        for (std::size_t j = 0; j < i; ++j) {
            bool same = P.class_of_element(reps[j]) == c;
            if (wreath_conjugate(reps[i], reps[j], group) != same) R.formula_agrees = false;
        }
    }
    for (int c = 0; c < P.num_classes; ++c)
        if (hits[c] != 1) R.complete_ok = false;
    if (!R.complete_ok) R.detail += "classes=" + std::to_string(P.num_classes) + " reps=" + std::to_string(R.reps) + "; ";
    return R;
}

}  // namespace cyclo
