#pragma once

// Finite fields F_q = F_p[x]/(f(x)). Elements are coefficient vectors packed
// base p into one integer (coefficient of x^0 is the least significant digit).

#include "arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <optional>

namespace cyclo {

struct Elem {
    std::uint32_t v = 0;
    auto operator<=>(const Elem&) const = default;
};

namespace detail {

// Dense polynomials over F_p, low degree first, no trailing zeros (zero = empty).
using Poly = std::vector<i64>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& b, i64 p) {
    trim(a);
    i64 inv_lead = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        i64 c = mulmod(a.back(), inv_lead, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod(a[shift + j] - c * b[j], p);
        trim(a);
    }
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, i64 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_mod(c, f, p);
}

inline Poly poly_powmod(Poly base, u64 e, const Poly& f, i64 p) {
    Poly r{1};
    r = poly_mod(r, f, p);
    base = poly_mod(base, f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline Poly poly_gcd(Poly a, Poly b, i64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Monic f of degree k over F_p: irreducible? Root test for k <= 3, Ben-Or otherwise.
inline bool is_irreducible(const Poly& f, i64 p) {
    int k = static_cast<int>(f.size()) - 1;
    if (k < 1) return false;
    if (k == 1) return true;
    if (k <= 3) {
        for (i64 x = 0; x < p; ++x) {
            i64 acc = 0;
            for (int i = k; i >= 0; --i) acc = (acc * x + f[i]) % p;
            if (acc == 0) return false;
        }
        return true;
    }
    Poly xp{0, 1};
    Poly cur = xp;
    for (int i = 1; i <= k / 2; ++i) {
        cur = poly_powmod(cur, static_cast<u64>(p), f, p);
        Poly diff = cur;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = mod(diff[1] - 1, p);
        trim(diff);
        if (diff.empty()) return false;
        if (poly_gcd(f, diff, p).size() > 1) return false;
    }
    return true;
}

// Conway polynomials (coefficients c_0..c_k, monic) for small non-prime fields.
inline const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> t = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {{2, 11}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 12}, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
        {{2, 13}, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 14}, {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 15}, {1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 16}, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
        {{3, 7}, {1, 0, 2, 0, 0, 0, 0, 1}},
        {{3, 8}, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{5, 4}, {2, 4, 4, 0, 1}},
        {{5, 5}, {3, 4, 0, 0, 0, 1}},
        {{5, 6}, {2, 0, 1, 4, 1, 0, 1}},
        {{7, 2}, {3, 6, 1}},
        {{7, 3}, {4, 0, 6, 1}},
        {{7, 4}, {3, 4, 5, 0, 1}},
        {{7, 5}, {4, 1, 0, 0, 0, 1}},
        {{11, 2}, {2, 7, 1}},
        {{11, 3}, {9, 2, 0, 1}},
        {{11, 4}, {2, 10, 8, 0, 1}},
        {{13, 2}, {2, 12, 1}},
        {{13, 3}, {11, 2, 0, 1}},
        {{13, 4}, {2, 12, 3, 0, 1}},
        {{17, 2}, {3, 16, 1}},
        {{17, 3}, {14, 1, 0, 1}},
        {{19, 2}, {2, 18, 1}},
        {{19, 3}, {17, 4, 0, 1}},
        {{23, 2}, {5, 21, 1}},
        {{23, 3}, {18, 2, 0, 1}},
        {{29, 2}, {2, 24, 1}},
        {{31, 2}, {3, 29, 1}},
        {{37, 2}, {2, 33, 1}},
        {{41, 2}, {6, 38, 1}},
        {{43, 2}, {3, 42, 1}},
        {{47, 2}, {5, 45, 1}},
        {{53, 2}, {2, 49, 1}},
        {{59, 2}, {2, 58, 1}},
        {{61, 2}, {2, 60, 1}},
        {{67, 2}, {2, 63, 1}},
        {{71, 2}, {7, 69, 1}},
        {{73, 2}, {5, 70, 1}},
        {{79, 2}, {3, 78, 1}},
        {{83, 2}, {2, 82, 1}},
        {{89, 2}, {3, 82, 1}},
        {{97, 2}, {5, 96, 1}},
        {{101, 2}, {2, 97, 1}},
        {{103, 2}, {5, 102, 1}},
        {{107, 2}, {2, 103, 1}},
        {{109, 2}, {6, 108, 1}},
        {{113, 2}, {3, 101, 1}},
        {{127, 2}, {3, 126, 1}},
        {{131, 2}, {2, 127, 1}},
        {{137, 2}, {3, 131, 1}},
        {{139, 2}, {2, 138, 1}},
        {{149, 2}, {2, 145, 1}},
        {{151, 2}, {6, 149, 1}},
        {{157, 2}, {5, 152, 1}},
        {{163, 2}, {2, 159, 1}},
        {{167, 2}, {5, 166, 1}},
        {{173, 2}, {2, 169, 1}},
        {{179, 2}, {2, 172, 1}},
        {{181, 2}, {2, 177, 1}},
        {{191, 2}, {19, 190, 1}},
        {{193, 2}, {5, 192, 1}},
        {{197, 2}, {2, 192, 1}},
        {{199, 2}, {3, 193, 1}},
        {{211, 2}, {2, 207, 1}},
        {{223, 2}, {3, 221, 1}},
        {{227, 2}, {2, 220, 1}},
        {{229, 2}, {6, 228, 1}},
        {{233, 2}, {3, 232, 1}},
        {{239, 2}, {7, 237, 1}},
        {{241, 2}, {7, 238, 1}},
        {{251, 2}, {6, 242, 1}},
    };
    return t;
}

}  // namespace detail

class Field {
public:
    // Builds F_{p^k}. Without a modulus the built-in Conway table is used
    // (falling back to the first primitive polynomial); without omega the class
    // of x is used for table/fallback moduli, otherwise the smallest primitive
    // element is searched.
    static std::shared_ptr<const Field> make(i64 p, int k, std::optional<std::vector<i64>> modulus = std::nullopt,
                                             std::optional<Elem> omega = std::nullopt) {
        return std::shared_ptr<const Field>(new Field(p, k, std::move(modulus), omega));
    }

    i64 p() const { return p_; }
    int k() const { return k_; }
    i64 q() const { return q_; }
    const std::vector<i64>& modulus() const { return mod_; }
    Elem omega() const { return omega_; }
    const Factorization& q_minus_1_factors() const { return qm1_; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    Elem x() const { return k_ == 1 ? Elem{0} : Elem{static_cast<std::uint32_t>(p_)}; }

    Elem from_int(i64 n) const { return Elem{static_cast<std::uint32_t>(mod(n, p_))}; }

    Elem from_coeffs(const std::vector<i64>& c) const {
        if (static_cast<int>(c.size()) > k_) throw Error("element has more than k coefficients");
        std::uint32_t v = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = static_cast<std::uint32_t>(v * p_ + mod(c[i], p_));
        return Elem{v};
    }

    std::vector<i64> coeffs(Elem a) const {
        std::vector<i64> c(k_);
        unpack(a, c.data());
        return c;
    }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return Elem{a.v ^ b.v};
        std::array<i64, 32> x{}, y{};
        unpack(a, x.data());
        unpack(b, y.data());
        for (int i = 0; i < k_; ++i) x[i] = (x[i] + y[i]) % p_;
        return pack(x.data());
    }

    Elem neg(Elem a) const {
        if (p_ == 2) return a;
        std::array<i64, 32> x{};
        unpack(a, x.data());
        for (int i = 0; i < k_; ++i) x[i] = (p_ - x[i]) % p_;
        return pack(x.data());
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a.v == 0 || b.v == 0) return Elem{0};
        if (k_ == 1) return Elem{static_cast<std::uint32_t>(static_cast<u64>(a.v) * b.v % static_cast<u64>(p_))};
        std::array<i64, 32> x{}, y{};
        std::array<i64, 64> z{};
        unpack(a, x.data());
        unpack(b, y.data());
        for (int i = 0; i < k_; ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < k_; ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p_;
        }
        for (int deg = 2 * k_ - 2; deg >= k_; --deg) {
            i64 c = z[deg];
            if (!c) continue;
            z[deg] = 0;
            for (int j = 0; j < k_; ++j) z[deg - k_ + j] = mod(z[deg - k_ + j] - c * mod_[j], p_);
        }
        return pack(z.data());
    }

    // Any integer exponent; negative exponents invert. 0^0 = 1.
    Elem pow(Elem a, i64 e) const {
        if (a.v == 0) {
            if (e < 0) throw Error("division by zero");
            return e == 0 ? one() : zero();
        }
        u64 ee = static_cast<u64>(mod(e, q_ - 1));
        Elem r = one();
        while (ee) {
            if (ee & 1) r = mul(r, a);
            a = mul(a, a);
            ee >>= 1;
        }
        return r;
    }

    Elem inv(Elem a) const {
        if (a.v == 0) throw Error("division by zero");
        return pow(a, q_ - 2);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem omega_pow(i64 e) const { return pow(omega_, e); }

    i64 order(Elem a) const {
        if (a.v == 0) throw Error("order of zero");
        i64 o = q_ - 1;
        for (auto [l, k] : qm1_)
            for (int i = 0; i < k && o % l == 0 && pow(a, o / l) == one(); ++i) o /= l;
        return o;
    }

    bool is_primitive(Elem a) const {
        if (a.v == 0) return false;
        for (auto [l, k] : qm1_)
            if (pow(a, (q_ - 1) / l) == one()) return false;
        return true;
    }

    // Least e >= 0 with base^e = x, by baby-step giant-step.
    i64 dlog(Elem base, Elem x) const {
        if (base.v == 0 || x.v == 0) throw Error("dlog: zero argument");
        i64 n = order(base);
        i64 s = 1;
        while (s * s < n) ++s;
        std::unordered_map<std::uint32_t, i64> baby;
        baby.reserve(static_cast<std::size_t>(s) * 2);
        Elem cur = one();
        for (i64 j = 0; j < s; ++j) {
            baby.emplace(cur.v, j);
            cur = mul(cur, base);
        }
        Elem step = pow(base, -s);
        Elem y = x;
        for (i64 i = 0; i <= s; ++i) {
            auto it = baby.find(y.v);
            if (it != baby.end()) return (i * s + it->second) % n;
            y = mul(y, step);
        }
        throw Error("dlog: element is not in the subgroup generated by the base");
    }

    // Discrete log to base omega, in [0, q-1).
    i64 log_omega(Elem x) const { return dlog(omega_, x); }

private:
    Field(i64 p, int k, std::optional<std::vector<i64>> modulus, std::optional<Elem> omega) : p_(p), k_(k) {
        if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
        if (k < 1) throw Error("k must be positive");
        if (k > 31) throw Error("k too large");
        long double qq = 1;
        for (int i = 0; i < k; ++i) qq *= static_cast<long double>(p);
        if (qq > 4294967295.0L) throw Error("field too large (q must be below 2^32)");
        q_ = ipow(p, k);
        qm1_ = factorize(q_ - 1);
        bool builtin = false;
        if (modulus) {
            mod_ = *modulus;
            for (auto& c : mod_) c = mod(c, p);
            if (static_cast<int>(mod_.size()) != k + 1) throw Error("modulus must have k+1 coefficients");
            if (mod_.back() != 1) throw Error("modulus must be monic");
            if (!detail::is_irreducible(mod_, p)) throw Error("modulus is reducible over F_p");
        } else if (k == 1) {
            mod_ = {0, 1};
        } else {
            auto it = detail::conway_table().find({static_cast<int>(p), k});
            if (it != detail::conway_table().end()) {
                mod_.assign(it->second.begin(), it->second.end());
            } else {
                mod_ = search_primitive_polynomial();
            }
            builtin = true;
        }
        if (omega) {
            if (omega->v >= q_) throw Error("omega is not a field element");
            if (!is_primitive(*omega)) throw Error("supplied omega is not a primitive element");
            omega_ = *omega;
        } else if (builtin && is_primitive(x())) {
            omega_ = x();
        } else {
            bool found = false;
            for (i64 v = 1; v < q_ && !found; ++v) {
                if (is_primitive(Elem{static_cast<std::uint32_t>(v)})) {
                    omega_ = Elem{static_cast<std::uint32_t>(v)};
                    found = true;
                }
            }
            if (!found) throw Error("no primitive element found");
        }
    }

    std::vector<i64> search_primitive_polynomial() {
        std::vector<i64> f(k_ + 1, 0);
        f[k_] = 1;
        for (i64 v = 0; v < q_; ++v) {
            i64 t = v;
            for (int i = 0; i < k_; ++i) {
                f[i] = t % p_;
                t /= p_;
            }
            if (f[0] == 0 || !detail::is_irreducible(f, p_)) continue;
            mod_ = f;
            if (is_primitive(x())) return f;
        }
        throw Error("no primitive polynomial found");
    }

    void unpack(Elem a, i64* out) const {
        std::uint32_t v = a.v;
        for (int i = 0; i < k_; ++i) {
            out[i] = v % p_;
            v = static_cast<std::uint32_t>(v / p_);
        }
    }

    Elem pack(const i64* c) const {
        u64 v = 0;
        for (int i = k_ - 1; i >= 0; --i) v = v * static_cast<u64>(p_) + static_cast<u64>(c[i]);
        return Elem{static_cast<std::uint32_t>(v)};
    }

    i64 p_;
    int k_;
    i64 q_ = 0;
    std::vector<i64> mod_;
    Elem omega_;
    Factorization qm1_;
};

using FieldPtr = std::shared_ptr<const Field>;

// F_q together with an index d, m = (q-1)/d and zeta = omega^m.
struct CycloContext {
    FieldPtr F;
    i64 d = 1;
    i64 m = 1;
    Elem zeta;
    std::vector<Elem> omega_neg;  // omega^{-i}, i = 0..d-1

    static CycloContext make(FieldPtr F, i64 d) {
        if (d < 1 || (F->q() - 1) % d != 0) throw Error("d must be a positive divisor of q-1");
        CycloContext c;
        c.F = std::move(F);
        c.d = d;
        c.m = (c.F->q() - 1) / d;
        c.zeta = c.F->omega_pow(c.m);
        for (i64 i = 0; i < d; ++i) c.omega_neg.push_back(c.F->omega_pow(-i));
        return c;
    }

    // The i with x in omega^i C, tested via (omega^{-i} x)^m = 1.
    i64 coset_index(Elem x) const {
        if (x.v == 0) throw Error("coset_index: zero has no coset");
        for (i64 i = 0; i < d; ++i)
            if (F->pow(F->mul(omega_neg[i], x), m) == F->one()) return i;
        throw Error("coset_index: no coset found");
    }

    bool in_C(Elem c) const { return c.v != 0 && F->pow(c, m) == F->one(); }
};

}  // namespace cyclo
