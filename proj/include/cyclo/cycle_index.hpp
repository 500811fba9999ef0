#pragma once

// Exact cycle indices and cycle counters: symmetric groups, regular cyclic
// groups, holomorphs of cyclic groups, the star product, Polya substitution,
// and the groups W(d,m), W1(d,m), Weq(d,m).

#include "wreath.hpp"

namespace cyclo {

// Lexicographically descending exponent vectors: walk the variables
// x1, x2, ... and put the monomial with the larger exponent first.
struct MonomialOrder {
    bool operator()(const CycleType& a, const CycleType& b) const {
        auto ia = a.begin(), ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second > ib->second;
            ++ia;
            ++ib;
        }
        return ia != a.end() && ib == b.end();
    }
};

class CycleIndex {
public:
    using Terms = std::map<CycleType, Rational, MonomialOrder>;

    CycleIndex() = default;
    static CycleIndex monomial(const CycleType& m, const Rational& c = 1) {
        CycleIndex f;
        f.add(m, c);
        return f;
    }
    static CycleIndex one() { return monomial(CycleType{}); }

    void add(const CycleType& m, Rational c) {
        c.canonicalize();
        if (c == 0) return;
        CycleType clean;
        for (auto [l, e] : m)
            if (e) clean[l] = e;
        auto [it, fresh] = terms_.emplace(std::move(clean), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    Rational coefficient(const CycleType& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient_sum() const {
        Rational s = 0;
        for (auto& [m, c] : terms_) s += c;
        return s;
    }

    // Common degree of all monomials, or -1 if they disagree (0 for the empty polynomial).
    i64 degree() const {
        i64 deg = -2;
        for (auto& [m, c] : terms_) {
            i64 e = ct_degree(m);
            if (deg == -2) deg = e;
            else if (deg != e) return -1;
        }
        return deg == -2 ? 0 : deg;
    }

    CycleIndex& operator+=(const CycleIndex& o) {
        for (auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    CycleIndex& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        Rational t = s;
        t.canonicalize();
        for (auto& [m, c] : terms_) c *= t;
        return *this;
    }
    friend CycleIndex operator+(CycleIndex a, const CycleIndex& b) { return a += b; }
    friend CycleIndex operator*(CycleIndex a, const Rational& s) { return a *= s; }
    friend CycleIndex operator*(const CycleIndex& a, const CycleIndex& b) {
        CycleIndex out;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) out.add(ct_mul(ma, mb), ca * cb);
        return out;
    }
    bool operator==(const CycleIndex& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

inline CycleIndex ci_pow(const CycleIndex& f, i64 e) {
    CycleIndex r = CycleIndex::one();
    for (i64 i = 0; i < e; ++i) r = r * f;
    return r;
}

inline CycleIndex star_product(const CycleIndex& f, const CycleIndex& g) {
    CycleIndex out;
    for (auto& [mf, cf] : f.terms())
        for (auto& [mg, cg] : g.terms()) out.add(ct_star(mf, mg), cf * cg);
    return out;
}

inline CycleIndex ci_stretch(const CycleIndex& f, i64 t) {
    if (t < 1) throw Error("ci_stretch: factor must be positive");
    CycleIndex out;
    for (auto& [m, c] : f.terms()) out.add(ct_stretch(m, t), c);
    return out;
}

// Substitute x_i -> subs(i) into f and expand.
template <class Sub>
CycleIndex ci_substitute(const CycleIndex& f, Sub&& subs) {
    std::map<i64, std::vector<CycleIndex>> powers;  // powers[i][e-1] = subs(i)^e
    auto power = [&](i64 i, i64 e) -> const CycleIndex& {
        auto& list = powers[i];
        if (list.empty()) list.push_back(subs(i));
        while (static_cast<i64>(list.size()) < e) list.push_back(list.back() * list.front());
        return list[e - 1];
    };
    CycleIndex out;
    for (auto& [m, c] : f.terms()) {
        CycleIndex prod = CycleIndex::one();
        for (auto [i, e] : m) prod = prod * power(i, e);
        out += prod * c;
    }
    return out;
}

// CI(P)(CI^(1)(G), ..., CI^(d)(G))
inline CycleIndex polya_compose(const CycleIndex& ciP, const CycleIndex& ciG) {
    return ci_substitute(ciP, [&](i64 i) { return ci_stretch(ciG, i); });
}

namespace detail {

inline void partitions_rec(i64 rest, i64 max_part, CycleType& cur, std::vector<CycleType>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (i64 part = std::min(rest, max_part); part >= 1; --part) {
        cur[part] += 1;
        partitions_rec(rest - part, part, cur, out);
        if (--cur[part] == 0) cur.erase(part);
    }
}

inline mpz_class factorial(i64 n) {
    mpz_class r = 1;
    for (i64 i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
    return r;
}

inline mpz_class zpow(i64 b, i64 e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
    return r;
}

}  // namespace detail

// Partitions of d in multiplicity form.
inline std::vector<CycleType> partitions(i64 d) {
    std::vector<CycleType> out;
    CycleType cur;
    detail::partitions_rec(d, d, cur, out);
    return out;
}

inline CycleIndex ci_sym(i64 d) {
    if (d < 1) throw Error("ci_sym: degree must be positive");
    CycleIndex f;
    for (auto& lam : partitions(d)) {
        mpz_class den = 1;
        for (auto [i, l] : lam) den *= detail::zpow(i, l) * detail::factorial(l);
        f.add(lam, Rational(mpz_class(1), den));
    }
    return f;
}

// Cycle counter d! * CI(Sym(d)).
inline CycleIndex cc_sym(i64 d) { return ci_sym(d) * Rational(detail::factorial(d)); }

inline CycleIndex ci_regular(i64 m) {
    if (m < 1) throw Error("ci_regular: order must be positive");
    CycleIndex f;
    for (i64 o : divisors(m)) f.add({{o, m / o}}, Rational(euler_phi(o), m));
    return f;
}

inline CycleIndex ci_hol_pp(i64 p, int k) {
    if (!is_prime(p) || k < 1) throw Error("ci_hol_pp: need prime p and k >= 1");
    CycleIndex f;
    auto P = [](i64 b, i64 e) { return Rational(detail::zpow(b, e)); };
    if (p == 2 && k == 1) {
        f.add({{1, 2}}, Rational(1, 2));
        f.add({{2, 1}}, Rational(1, 2));
        return f;
    }
    if (p == 2 && k == 2) {
        f.add({{1, 4}}, Rational(1, 8));
        f.add({{1, 2}, {2, 1}}, Rational(1, 4));
        f.add({{2, 2}}, Rational(3, 8));
        f.add({{4, 1}}, Rational(1, 4));
        return f;
    }
    if (p == 2) {
        f.add({{ipow(2, k), 1}}, P(2, 2 * k - 3));
        for (int w = 1; w <= k - 1; ++w)
            f.add({{ipow(2, w), ipow(2, k - w)}}, P(2, 2 * w - 2) + Rational(euler_phi(ipow(2, w - 1))) * P(2, k - 1));
        for (int w = 0; w <= k - 2; ++w) {
            CycleType m{{1, ipow(2, k - w)}};
            for (int u = 1; u <= w; ++u) m[ipow(2, u)] += ipow(2, k - 1 - w);
            f.add(m, Rational(euler_phi(ipow(2, w))) * P(2, w));
        }
        f.add({{1, 2}, {2, ipow(2, k - 1) - 1}}, P(2, k));
        for (int w = 2; w <= k - 2; ++w) {
            CycleType m{{1, 2}, {2, ipow(2, k - w) - 1}};
            for (int u = 2; u <= w; ++u) m[ipow(2, u)] += ipow(2, k - 1 - w);
            f.add(m, P(2, k + w - 2));
        }
        return f * Rational(mpz_class(1), detail::zpow(2, 2 * k - 1));
    }
    for (int w = 1; w <= k; ++w) f.add({{ipow(p, w), ipow(p, k - w)}}, P(p, 2 * w - 2) * (p - 1));
    for (int w = 0; w <= k - 1; ++w) {
        CycleType m{{1, ipow(p, k - w)}};
        for (int u = 1; u <= w; ++u) m[ipow(p, u)] += ipow(p, k - w - 1) * (p - 1);
        f.add(m, Rational(euler_phi(ipow(p, w))) * P(p, w));
    }
    for (int w = 0; w <= k - 1; ++w) {
        for (i64 l : divisors(p - 1)) {
            if (l == 1) continue;
            CycleType m{{1, 1}};
            m[l] += (ipow(p, k - w) - 1) / l;
            for (int u = 1; u <= w; ++u) m[l * ipow(p, u)] += ipow(p, k - 1 - w) * (p - 1) / l;
            f.add(m, P(p, k) * euler_phi(ipow(p, w)) * euler_phi(l));
        }
    }
    return f * Rational(mpz_class(1), detail::zpow(p, 2 * k - 1) * (p - 1));
}

inline CycleIndex ci_hol(i64 m) {
    if (m < 1) throw Error("ci_hol: modulus must be positive");
    CycleIndex f = CycleIndex::monomial({{1, 1}});
    for (auto [p, k] : factorize(m)) f = star_product(f, ci_hol_pp(p, k));
    return f;
}

inline CycleIndex ci_gcp(i64 d, i64 m) { return polya_compose(ci_sym(d), ci_hol(m)); }
inline CycleIndex ci_focp(i64 d, i64 m) { return polya_compose(ci_sym(d), ci_regular(m)); }

// ---- order signatures of units and the fixed-exponent groups --------------

// Odd p: eps = 0 and o is the multiplicative order. p = 2: (eps, o') with
// a = (-1)^eps * 5^e and o' the order of 5^e.
struct Omicron {
    int eps = 0;
    i64 o = 1;
    bool operator==(const Omicron&) const = default;
    auto operator<=>(const Omicron&) const = default;
};

struct OmicronEntry {
    i64 p;
    int k;
    Omicron o;
    bool operator==(const OmicronEntry&) const = default;
};

using OmicronVec = std::vector<OmicronEntry>;

inline std::vector<Omicron> omega_enum(i64 p, int k) {
    std::vector<Omicron> out;
    if (p != 2) {
        if (k == 0) return {Omicron{0, 1}};
        for (i64 o : divisors(euler_phi(ipow(p, k)))) out.push_back({0, o});
        return out;
    }
    if (k <= 1) return {Omicron{0, 1}};
    for (i64 o : divisors(ipow(2, k - 2))) {
        out.push_back({0, o});
        out.push_back({1, o});
    }
    return out;
}

inline bool omicron_valid(i64 p, int k, const Omicron& o) {
    auto all = omega_enum(p, k);
    return std::find(all.begin(), all.end(), o) != all.end();
}

inline Omicron omicron_pp(i64 p, int k, i64 a) {
    i64 pk = ipow(p, k);
    if (gcd(a, pk) != 1) throw Error("omicron: argument is not a unit");
    if (p != 2) return {0, k == 0 ? 1 : mult_order(mod(a, pk), pk)};
    if (k <= 1) return {0, 1};
    a = mod(a, pk);
    int eps = a % 4 == 3 ? 1 : 0;
    i64 a5 = eps ? mod(-a, pk) : a;
    return {eps, mult_order(a5, pk)};
}

inline OmicronVec omicron_of(i64 m, i64 a) {
    if (gcd(a, m) != 1) throw Error("omicron_of: gcd(a,m) > 1");
    OmicronVec v;
    for (auto [p, k] : factorize(m)) v.push_back({p, k, omicron_pp(p, k, a)});
    return v;
}

inline Omicron pow_o(i64 p, int /*k*/, const Omicron& o, i64 l) {
    if (l < 1) throw Error("pow_o: exponent must be positive");
    if (p != 2) return {0, o.o / gcd(o.o, l)};
    return {(o.eps == 1 && l % 2 == 1) ? 1 : 0, o.o / gcd(o.o, l)};
}

// Number of units mod p^k with signature o.
inline i64 n_count_pp(i64 p, int /*k*/, const Omicron& o) {
    (void)p;
    return euler_phi(o.o);
}

inline i64 n_count(i64 /*m*/, const OmicronVec& ov) {
    i64 n = 1;
    for (auto& e : ov) n *= n_count_pp(e.p, e.k, e.o);
    return n;
}

// All signature vectors of units mod m, in lexicographic order of the entries.
inline std::vector<OmicronVec> omicron_vectors(i64 m) {
    std::vector<OmicronVec> out{{}};
    for (auto [p, k] : factorize(m)) {
        std::vector<OmicronVec> next;
        for (auto& v : out)
            for (auto& o : omega_enum(p, k)) {
                auto w = v;
                w.push_back({p, k, o});
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

// Cycle counter of {x -> ax+b : b in Z/p^k} for any a with signature o.
inline CycleIndex gamma_pp(i64 p, int k, const Omicron& o) {
    if (!omicron_valid(p, k, o)) throw Error("gamma_pp: signature not in Omega(p^k)");
    CycleIndex f;
    if (k == 0) return CycleIndex::monomial({{1, 1}});
    if (p != 2) {
        i64 pk = ipow(p, k);
        int v = nu(p, o.o);
        i64 o1 = o.o / ipow(p, v);
        if (o1 != 1) {
            CycleType m{{1, 1}};
            m[o1] += (ipow(p, k - v) - 1) / o1;
            for (int u = 1; u <= v; ++u) m[ipow(p, u) * o1] += ipow(p, k - 1 - v) * (p - 1) / o1;
            f.add(m, pk);
        } else {
            CycleType m{{1, pk / o.o}};
            for (int u = 1; u <= v; ++u) m[ipow(p, u)] += ipow(p, k - 1) / o.o * (p - 1);
            f.add(m, o.o);
            for (int s = 0; s <= k - v - 1; ++s) f.add({{ipow(p, k - s), ipow(p, s)}}, euler_phi(ipow(p, k - s)));
        }
        return f;
    }
    if (k == 1) {
        f.add({{1, 2}}, 1);
        f.add({{2, 1}}, 1);
        return f;
    }
    if (k == 2) {
        if (o.eps == 0) {
            f.add({{1, 4}}, 1);
            f.add({{2, 2}}, 1);
            f.add({{4, 1}}, 2);
        } else {
            f.add({{1, 2}, {2, 1}}, 2);
            f.add({{2, 2}}, 2);
        }
        return f;
    }
    int v = k - 2 - nu(2, o.o);
    int v1 = std::min(k - 3, v);
    if (o.eps == 1) {
        f.add({{ipow(2, k - 1 - v), ipow(2, 1 + v)}}, ipow(2, k - 1));
        CycleType m{{1, 2}, {2, ipow(2, 2 + v1) - 1}};
        for (int u = 2; u <= k - 2 - v1; ++u) m[ipow(2, u)] += ipow(2, 1 + v1);
        f.add(m, ipow(2, k - 1));
    } else {
        CycleType m{{1, ipow(2, 2 + v)}};
        for (int u = 1; u <= k - 2 - v; ++u) m[ipow(2, u)] += ipow(2, 1 + v);
        f.add(m, ipow(2, k - 2 - v));
        for (int s = 0; s <= 1 + v; ++s) f.add({{ipow(2, k - s), ipow(2, s)}}, euler_phi(ipow(2, k - s)));
    }
    return f;
}

// (star_p Gamma(pow(o_p, l))) with x_i -> x_{il}
inline CycleIndex delta_poly(i64 m, const OmicronVec& ov, i64 l) {
    CycleIndex f = CycleIndex::monomial({{1, 1}});
    i64 covered = 1;
    for (auto& e : ov) {
        f = star_product(f, gamma_pp(e.p, e.k, pow_o(e.p, e.k, e.o, l)));
        covered *= ipow(e.p, e.k);
    }
    if (covered != m) throw Error("delta_poly: signature vector does not match m");
    return ci_stretch(f, l);
}

inline CycleIndex ci_cp(i64 d, i64 m) {
    if (d < 1 || m < 1) throw Error("ci_cp: d and m must be positive");
    CycleIndex cc = cc_sym(d);
    CycleIndex total;
    for (auto& ov : omicron_vectors(m)) {
        // Each l-cycle of psi carries l translations; every fcp value occurs m^(l-1) times.
        CycleIndex part = ci_substitute(cc, [&](i64 i) { return delta_poly(m, ov, i) * Rational(detail::zpow(m, i - 1)); });
        total += part * Rational(n_count(m, ov));
    }
    mpz_class den = detail::factorial(d) * euler_phi(m) * detail::zpow(m, d);
    return total * Rational(mpz_class(1), den);
}

// Cycle index of W(d,m) with an arbitrary base group given by its cycle index.
inline CycleIndex ci_wreath(i64 d, const CycleIndex& base) { return polya_compose(ci_sym(d), base); }

}  // namespace cyclo
