#pragma once

// Integer number theory used throughout: valuations, orders, radicals,
// CRT and trial-division factorization. Practical bound: arguments up to 2^32
// (products are formed in 128-bit arithmetic).

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cyclo {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using Rational = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrimePower {
    i64 p;
    int k;
    i64 value() const {
        i64 r = 1;
        for (int i = 0; i < k; ++i) r *= p;
        return r;
    }
    bool operator==(const PrimePower&) const = default;
};

using Factorization = std::vector<PrimePower>;

inline i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

inline i64 powmod(i64 b, u64 e, i64 m) {
    if (m == 1) return 0;
    i64 r = 1;
    b = mod(b, m);
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

inline i64 ipow(i64 b, int e) {
    i64 r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

inline i64 gcd(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }
inline i64 lcm(i64 a, i64 b) { return a / gcd(a, b) * b; }

inline Factorization factorize(i64 n) {
    if (n < 1) throw Error("factorize: argument must be positive");
    Factorization f;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        f.push_back({p, k});
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// Remainder in {1,...,m}: the zero class is represented by m.
inline i64 rem1(i64 n, i64 m) {
    i64 r = mod(n, m);
    return r == 0 ? m : r;
}

// nu_p(n) for n != 0.
inline int nu(i64 p, i64 n) {
    if (n == 0) throw Error("nu: valuation of zero is infinite");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// min(nu_p(n), cap) with nu_p(0) = infinity.
inline int nu_cap(i64 p, int cap, i64 n) {
    if (n == 0) return cap;
    int v = 0;
    while (v < cap && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

inline i64 aord(i64 b, i64 m) { return m / gcd(mod(b, m), m); }

inline i64 rad(i64 m) {
    i64 r = 1;
    for (auto [p, k] : factorize(m)) r *= p;
    return r;
}

inline i64 rad_prime(i64 m) { return m % 4 == 0 ? 2 * rad(m) : rad(m); }

inline i64 euler_phi(i64 n) {
    i64 r = n;
    for (auto [p, k] : factorize(n)) r = r / p * (p - 1);
    return r;
}

inline std::vector<i64> divisors(i64 n) {
    std::vector<i64> small, large;
    for (i64 i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        small.push_back(i);
        if (i != n / i) large.push_back(n / i);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

struct ExtGcd {
    i64 g, x, y;  // a*x + b*y = g
};

inline ExtGcd ext_gcd(i64 a, i64 b) {
    i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        i64 q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    if (a < 0) return {-a, -x0, -y0};
    return {a, x0, y0};
}

inline i64 inv_mod(i64 a, i64 m) {
    if (m == 1) return 0;
    auto e = ext_gcd(mod(a, m), m);
    if (e.g != 1) throw Error("inv_mod: " + std::to_string(a) + " is not a unit mod " + std::to_string(m));
    return mod(e.x, m);
}

// Multiplicative order of a unit a modulo m.
inline i64 mult_order(i64 a, i64 m) {
    if (m == 1) return 1;
    if (gcd(a, m) != 1) throw Error("mult_order: not a unit");
    i64 n = euler_phi(m);
    i64 o = n;
    for (auto [p, k] : factorize(n)) {
        for (int i = 0; i < k && o % p == 0 && powmod(a, o / p, m) == 1; ++i) o /= p;
    }
    return o;
}

// Least e >= 0 with g^e = x (mod m), g of order n; baby-step giant-step.
inline i64 bsgs_mod(i64 g, i64 x, i64 n, i64 m) {
    x = mod(x, m);
    i64 s = 1;
    while (s * s < n) ++s;
    std::unordered_map<i64, i64> baby;
    i64 cur = 1 % m;
    for (i64 j = 0; j < s; ++j) {
        baby.emplace(cur, j);
        cur = mulmod(cur, g, m);
    }
    i64 step = powmod(inv_mod(g, m), static_cast<u64>(s), m);
    i64 y = x;
    for (i64 i = 0; i <= s; ++i) {
        auto it = baby.find(y);
        if (it != baby.end()) return (i * s + it->second) % n;
        y = mulmod(y, step, m);
    }
    throw Error("bsgs_mod: element not in subgroup");
}

struct Crt {
    i64 value;
    i64 modulus;
    std::vector<i64> M;  // M_i = (N/n_i) * ((N/n_i)^{-1} mod n_i)
};

// Combine residues (value, modulus) with pairwise coprime moduli.
inline Crt crt_combine(const std::vector<std::pair<i64, i64>>& residues) {
    i64 N = 1;
    for (auto [v, n] : residues) {
        if (n < 1) throw Error("crt_combine: moduli must be positive");
        if (gcd(N, n) != 1) throw Error("crt_combine: moduli are not pairwise coprime");
        N *= n;
    }
    Crt out{0, N, {}};
    for (auto [v, n] : residues) {
        i64 c = N / n;
        i64 Mi = mulmod(c, inv_mod(c, n), N);
        out.M.push_back(Mi);
        out.value = mod(out.value + mulmod(Mi, v, N), N);
    }
    return out;
}

}  // namespace cyclo
