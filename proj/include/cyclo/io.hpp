#pragma once

// Text formats for field elements, polynomials, cyclotomic forms, affine maps,
// wreath elements, cycle types and cycle indices, with matching parsers.

#include "conjugacy.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

namespace cyclo {

namespace detail {

inline std::string trim_ws(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

inline std::string strip_ws(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

inline i64 parse_int(std::string_view s, const char* what) {
    std::string t = trim_ws(s);
    if (t.empty()) throw Error(std::string("expected an integer for ") + what);
    std::size_t pos = 0;
    i64 v = 0;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        throw Error(std::string("invalid integer '") + t + "' for " + what);
    }
    if (pos != t.size()) throw Error(std::string("invalid integer '") + t + "' for " + what);
    return v;
}

// Split at `sep` occurring outside any (), [] nesting.
inline std::vector<std::string> split_top(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (c == sep && depth == 0) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
        if (depth < 0) throw Error("unbalanced brackets in '" + std::string(s) + "'");
    }
    if (depth != 0) throw Error("unbalanced brackets in '" + std::string(s) + "'");
    out.emplace_back(s.substr(start));
    return out;
}

inline std::string expect_wrapped(std::string_view s, std::string_view open, char close, const char* what) {
    std::string t = trim_ws(s);
    if (t.size() < open.size() + 1 || t.compare(0, open.size(), open) != 0 || t.back() != close)
        throw Error(std::string("malformed ") + what + ": '" + t + "'");
    return t.substr(open.size(), t.size() - open.size() - 1);
}

}  // namespace detail

// ---- field elements ------------------------------------------------------------

// 0, 1, w, w^E with 0 <= E < q-1.
inline std::string format_elem(const Field& F, Elem x) {
    if (x.v == 0) return "0";
    i64 e = F.log_omega(x);
    if (e == 0) return "1";
    if (e == 1) return "w";
    return "w^" + std::to_string(e);
}

// Accepts 0 | w | w^E (any integer E) | [c0,...,c_{k-1}] | integer n (the prime-field element n mod p).
inline Elem parse_elem(const Field& F, std::string_view text) {
    std::string s = detail::strip_ws(text);
    if (s.empty()) throw Error("empty field element");
    if (s == "w") return F.omega();
    if (s.rfind("w^", 0) == 0) return F.omega_pow(detail::parse_int(s.substr(2), "exponent of w"));
    if (s.front() == '[') {
        std::string body = detail::expect_wrapped(s, "[", ']', "coefficient vector");
        std::vector<i64> c;
        for (auto& part : detail::split_top(body, ',')) c.push_back(detail::parse_int(part, "coefficient"));
        if (static_cast<int>(c.size()) != F.k())
            throw Error("coefficient vector must have exactly k = " + std::to_string(F.k()) + " entries");
        for (i64 v : c)
            if (v < 0 || v >= F.p()) throw Error("coefficients must lie in [0, p)");
        return F.from_coeffs(c);
    }
    return F.from_int(detail::parse_int(s, "field element"));
}

// ---- polynomials ---------------------------------------------------------------

inline std::string format_poly(const PolyForm& P) {
    std::string out;
    for (i64 n : P.term_degrees()) {
        Elem c = P.coeffs[n];
        std::string term;
        bool unit = c == P.F->one();
        if (n == 0) term = format_elem(*P.F, c);
        else {
            if (!unit) term = format_elem(*P.F, c) + "*";
            term += n == 1 ? "T" : "T^" + std::to_string(n);
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

inline PolyForm parse_poly(FieldPtr F, std::string_view text) {
    PolyForm P = PolyForm::zero(F);
    std::string s = detail::strip_ws(text);
    if (s.empty()) throw Error("empty polynomial");
    for (auto& term : detail::split_top(s, '+')) {
        if (term.empty()) throw Error("empty term in polynomial '" + s + "'");
        Elem c = F->one();
        i64 deg = 0;
        std::string mono = term;
        auto star = term.rfind('*');
        if (star != std::string::npos) {
            c = parse_elem(*F, term.substr(0, star));
            mono = term.substr(star + 1);
            if (mono.empty() || mono[0] != 'T') throw Error("expected T after '*' in term '" + term + "'");
        }
        if (!mono.empty() && mono[0] == 'T') {
            if (mono == "T") deg = 1;
            else if (mono.rfind("T^", 0) == 0) deg = detail::parse_int(mono.substr(2), "degree");
            else throw Error("malformed monomial '" + mono + "'");
        } else {
            c = parse_elem(*F, mono);
        }
        if (deg < 0 || deg > F->q() - 1) throw Error("degree " + std::to_string(deg) + " outside [0, q-1]");
        P.coeffs[deg] = F->add(P.coeffs[deg], c);
    }
    return P;
}

// ---- cyclotomic forms ------------------------------------------------------------

inline std::string format_form(const CyclotomicForm& f) {
    std::string a, r;
    for (std::size_t i = 0; i < f.a.size(); ++i) {
        if (i) {
            a += ",";
            r += ",";
        }
        a += format_elem(*f.ctx.F, f.a[i]);
        r += std::to_string(f.r[i]);
    }
    return "f(a=[" + a + "], r=[" + r + "])";
}

inline CyclotomicForm parse_form(const CycloContext& ctx, std::string_view text) {
    std::string body = detail::expect_wrapped(detail::strip_ws(text), "f(", ')', "cyclotomic form");
    auto parts = detail::split_top(body, ',');
    if (parts.size() != 2 || parts[0].rfind("a=", 0) != 0 || parts[1].rfind("r=", 0) != 0)
        throw Error("cyclotomic form must look like f(a=[...], r=[...])");
    auto as = detail::split_top(detail::expect_wrapped(parts[0].substr(2), "[", ']', "a-vector"), ',');
    auto rs = detail::split_top(detail::expect_wrapped(parts[1].substr(2), "[", ']', "r-vector"), ',');
    if (static_cast<i64>(as.size()) != ctx.d || static_cast<i64>(rs.size()) != ctx.d)
        throw Error("cyclotomic form needs exactly d = " + std::to_string(ctx.d) + " entries in a and r");
    CyclotomicForm f{ctx, {}, {}};
    for (auto& x : as) f.a.push_back(parse_elem(*ctx.F, x));
    for (auto& x : rs) {
        i64 r = detail::parse_int(x, "exponent");
        if (r < 1 || r > ctx.m) throw Error("exponents r_i must lie in [1, m]");
        f.r.push_back(r);
    }
    return f;
}

// ---- permutations, affine maps, wreath elements ------------------------------------

// Disjoint cycle notation without fixed points; the identity is "()".
inline std::string format_perm(const Perm& p) {
    std::string out;
    for (auto& cyc : perm_cycles(p)) {
        if (cyc.size() < 2) continue;
        out += "(";
        for (std::size_t t = 0; t < cyc.size(); ++t) out += (t ? "," : "") + std::to_string(cyc[t]);
        out += ")";
    }
    return out.empty() ? "()" : out;
}

inline Perm parse_perm(std::string_view text, int d) {
    std::string s = detail::strip_ws(text);
    Perm p = perm_identity(d);
    std::vector<char> used(d, 0);
    std::size_t i = 0;
    if (s.empty()) throw Error("empty permutation");
    while (i < s.size()) {
        if (s[i] != '(') throw Error("malformed cycle notation '" + s + "'");
        auto close = s.find(')', i);
        if (close == std::string::npos) throw Error("malformed cycle notation '" + s + "'");
        std::string body = s.substr(i + 1, close - i - 1);
        i = close + 1;
        if (body.empty()) continue;
        std::vector<int> cyc;
        for (auto& x : detail::split_top(body, ',')) {
            i64 v = detail::parse_int(x, "cycle entry");
            if (v < 0 || v >= d) throw Error("cycle entry " + std::to_string(v) + " outside [0, d)");
            if (used[v]) throw Error("cycle entry " + std::to_string(v) + " repeated");
            used[v] = 1;
            cyc.push_back(static_cast<int>(v));
        }
        for (std::size_t t = 0; t < cyc.size(); ++t) p[cyc[t]] = cyc[(t + 1) % cyc.size()];
    }
    return p;
}

inline std::string format_affine(const AffineZ& g) {
    return "lam(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")@" + std::to_string(g.m);
}

// lam(a,b)@m, or lam(a,b) with the modulus supplied by the caller.
inline AffineZ parse_affine(std::string_view text, std::optional<i64> default_m = std::nullopt) {
    std::string s = detail::strip_ws(text);
    i64 m = 0;
    auto at = s.rfind('@');
    if (at != std::string::npos) {
        m = detail::parse_int(s.substr(at + 1), "modulus");
        s = s.substr(0, at);
    } else if (default_m) {
        m = *default_m;
    } else {
        throw Error("affine map '" + s + "' needs a modulus: lam(a,b)@m");
    }
    if (default_m && m != *default_m) throw Error("affine map modulus disagrees with m");
    auto parts = detail::split_top(detail::expect_wrapped(s, "lam(", ')', "affine map"), ',');
    if (parts.size() != 2) throw Error("affine map needs two components");
    return AffineZ::make(m, detail::parse_int(parts[0], "a"), detail::parse_int(parts[1], "b"));
}

inline std::string format_affine_c(const CycloContext& ctx, const AffineC& g) {
    return "lam(" + std::to_string(g.r) + "," + format_elem(*ctx.F, g.c) + ")";
}

inline AffineC parse_affine_c(const CycloContext& ctx, std::string_view text) {
    auto parts = detail::split_top(detail::expect_wrapped(detail::strip_ws(text), "lam(", ')', "affine map"), ',');
    if (parts.size() != 2) throw Error("affine map needs two components");
    return hol_c_make(ctx, detail::parse_int(parts[0], "r"), parse_elem(*ctx.F, parts[1]));
}

namespace detail {

inline std::pair<std::string, std::vector<std::string>> split_wreath(std::string_view text) {
    std::string body = expect_wrapped(strip_ws(text), "(", ')', "wreath element");
    auto halves = split_top(body, ';');
    if (halves.size() != 2) throw Error("wreath element must look like (CYCLES; map, map, ...)");
    return {halves[0], split_top(halves[1], ',')};
}

}  // namespace detail

inline std::string format_wreath(const WreathZ& g) {
    std::string out = "(" + format_perm(g.psi) + "; ";
    for (std::size_t i = 0; i < g.maps.size(); ++i) out += (i ? ", " : "") + format_affine(g.maps[i]);
    return out + ")";
}

inline WreathZ parse_wreath(std::string_view text, std::optional<i64> m = std::nullopt) {
    auto [cycles, maps] = detail::split_wreath(text);
    WreathZ g;
    for (auto& s : maps) g.maps.push_back(parse_affine(s, m));
    if (g.maps.empty()) throw Error("wreath element needs at least one map");
    g.m = g.maps.front().m;
    g.psi = parse_perm(cycles, static_cast<int>(g.maps.size()));
    g.validate();
    return g;
}

inline std::string format_wreath_c(const WreathC& g) {
    std::string out = "(" + format_perm(g.psi) + "; ";
    for (std::size_t i = 0; i < g.maps.size(); ++i) out += (i ? ", " : "") + format_affine_c(g.ctx, g.maps[i]);
    return out + ")";
}

inline WreathC parse_wreath_c(const CycloContext& ctx, std::string_view text) {
    auto [cycles, maps] = detail::split_wreath(text);
    if (static_cast<i64>(maps.size()) != ctx.d) throw Error("wreath element needs exactly d maps");
    WreathC g{ctx, parse_perm(cycles, static_cast<int>(ctx.d)), {}};
    for (auto& s : maps) g.maps.push_back(parse_affine_c(ctx, s));
    return g;
}

// ---- cycle types and cycle indices ------------------------------------------------

inline std::string format_cycle_type(const CycleType& ct) {
    std::string out;
    for (auto [l, e] : ct) {
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(l);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

namespace detail {

inline std::pair<i64, i64> parse_power(std::string_view s) {
    std::string t = strip_ws(s);
    if (t.size() < 2 || t[0] != 'x') throw Error("malformed variable power '" + t + "'");
    auto caret = t.find('^');
    i64 idx = parse_int(t.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), "variable index");
    i64 e = caret == std::string::npos ? 1 : parse_int(t.substr(caret + 1), "exponent");
    if (idx < 1 || e < 0) throw Error("variable index must be >= 1 and exponent >= 0");
    return {idx, e};
}

}  // namespace detail

inline CycleType parse_cycle_type(std::string_view text) {
    std::string s = detail::strip_ws(text);
    CycleType ct;
    if (s == "1") return ct;
    for (auto& f : detail::split_top(s, '*')) {
        auto [idx, e] = detail::parse_power(f);
        if (e) ct[idx] += e;
    }
    return ct;
}

inline std::string format_rational(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// N/D*x1^e1*x2^e2 terms joined by " + ", canonical monomial order.
inline std::string format_cycle_index(const CycleIndex& f) {
    std::string out;
    for (auto& [m, c] : f.terms()) {
        if (!out.empty()) out += " + ";
        out += format_rational(c);
        for (auto [l, e] : m) out += "*x" + std::to_string(l) + "^" + std::to_string(e);
    }
    return out.empty() ? "0" : out;
}

inline CycleIndex parse_cycle_index(std::string_view text) {
    std::string s = detail::strip_ws(text);
    CycleIndex f;
    if (s == "0") return f;
    for (auto& term : detail::split_top(s, '+')) {
        auto factors = detail::split_top(term, '*');
        if (factors.empty() || factors[0].empty()) throw Error("malformed cycle-index term '" + term + "'");
        Rational c;
        std::size_t first = 0;
        if (factors[0][0] != 'x') {
            try {
                c = Rational(factors[0]);
            } catch (const std::exception&) {
                throw Error("malformed coefficient '" + factors[0] + "'");
            }
            if (c.get_den() == 0) throw Error("zero denominator in '" + factors[0] + "'");
            c.canonicalize();
            first = 1;
        } else {
            c = 1;
        }
        CycleType ct;
        for (std::size_t i = first; i < factors.size(); ++i) {
            auto [idx, e] = detail::parse_power(factors[i]);
            if (e) ct[idx] += e;
        }
        f.add(ct, c);
    }
    return f;
}

}  // namespace cyclo
