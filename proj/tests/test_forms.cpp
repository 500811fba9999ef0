#include "cyclo/forms.hpp"
#include "cyclo/io.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace cyclo;

namespace {

CycloContext ctx_for(i64 q, i64 d) {
    auto f = factorize(q);
    return CycloContext::make(Field::make(f[0].p, f[0].k), d);
}

CyclotomicForm paper_form(const CycloContext& ctx) {
    const auto& F = *ctx.F;
    return {ctx, {F.omega_pow(5), F.omega_pow(21)}, {7, 5}};
}

PolyForm paper_poly(const CycloContext& ctx) { return parse_poly(ctx.F, "w^15*T^5 + w^23*T^7 + w^3*T^17 + w^23*T^19"); }

Elem random_nonzero(const Field& F, std::mt19937_64& rng) {
    return F.omega_pow(std::uniform_int_distribution<i64>(0, F.q() - 2)(rng));
}

CyclotomicForm random_form(const CycloContext& ctx, std::mt19937_64& rng, bool allow_zero) {
    CyclotomicForm f{ctx, {}, {}};
    std::uniform_int_distribution<i64> rpick(1, ctx.m);
    for (i64 i = 0; i < ctx.d; ++i) {
        bool zero = allow_zero && std::uniform_int_distribution<int>(0, 3)(rng) == 0;
        f.a.push_back(zero ? ctx.F->zero() : random_nonzero(*ctx.F, rng));
        f.r.push_back(rpick(rng));
    }
    return f;
}

// a_i = omega^(psi(i) - r_i i) c_i with c_i in C sends C_i onto C_psi(i).
CyclotomicForm random_permutation_form(const CycloContext& ctx, std::mt19937_64& rng) {
    const auto& F = *ctx.F;
    std::vector<i64> psi(ctx.d);
    for (i64 i = 0; i < ctx.d; ++i) psi[i] = i;
    std::shuffle(psi.begin(), psi.end(), rng);
    std::vector<i64> units;
    for (i64 r = 1; r <= ctx.m; ++r)
        if (gcd(r, ctx.m) == 1) units.push_back(r);
    CyclotomicForm f{ctx, {}, {}};
    for (i64 i = 0; i < ctx.d; ++i) {
        i64 r = units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
        i64 e = std::uniform_int_distribution<i64>(0, ctx.m - 1)(rng) * ctx.d;
        f.a.push_back(F.omega_pow(psi[i] - r * i + e));
        f.r.push_back(r);
    }
    return f;
}

bool pointwise_equal(const CyclotomicForm& f, const CyclotomicForm& g) {
    for (i64 v = 0; v < f.ctx.F->q(); ++v) {
        Elem x{static_cast<std::uint32_t>(v)};
        if (f.eval(x) != g.eval(x)) return false;
    }
    return true;
}

bool poly_matches_form(const PolyForm& P, const CyclotomicForm& f) {
    for (i64 v = 0; v < f.ctx.F->q(); ++v) {
        Elem x{static_cast<std::uint32_t>(v)};
        if (P.eval(x) != f.eval(x)) return false;
    }
    return true;
}

const std::vector<std::pair<i64, i64>> kRoundTripShapes{{9, 2}, {16, 3}, {25, 2}, {25, 4}, {27, 13}, {49, 6}};

}  // namespace

TEST_CASE("eval_cyclotomic examples") {
    auto ctx = ctx_for(25, 2);
    const auto& F = *ctx.F;
    auto f = paper_form(ctx);
    CHECK(f.eval(F.one()) == F.omega_pow(5));
    CHECK(f.eval(F.zero()) == F.zero());
    auto id = CyclotomicForm::identity(ctx);
    for (i64 v = 0; v < 25; ++v) CHECK(id.eval(Elem{static_cast<std::uint32_t>(v)}) == Elem{static_cast<std::uint32_t>(v)});
}

TEST_CASE("cyclotomic_to_poly examples") {
    auto ctx = ctx_for(25, 2);
    CHECK(cyclotomic_to_poly(paper_form(ctx)) == paper_poly(ctx));
    auto c9 = ctx_for(9, 2);
    CHECK(format_poly(cyclotomic_to_poly(CyclotomicForm::identity(c9))) == "T");
    CyclotomicForm zero{ctx, {ctx.F->zero(), ctx.F->zero()}, {1, 1}};
    CHECK(cyclotomic_to_poly(zero).degree() == -1);
}

TEST_CASE("poly_to_cyclotomic examples") {
    auto ctx = ctx_for(25, 2);
    auto f = poly_to_cyclotomic(paper_poly(ctx), ctx);
    REQUIRE(f.ok());
    CHECK(*f == paper_form(ctx));
    auto z = poly_to_cyclotomic(PolyForm::zero(ctx.F), ctx);
    REQUIRE(z.ok());
    CHECK(z->a == std::vector<Elem>{ctx.F->zero(), ctx.F->zero()});
    CHECK(z->r == std::vector<i64>{1, 1});
    auto c = poly_to_cyclotomic(parse_poly(ctx.F, "T + 1"), ctx);
    REQUIRE_FALSE(c.ok());
    CHECK(reason_code(c.reason) == "nonzero-constant-term");
}

TEST_CASE("Algorithm 1 rejection paths") {
    auto ctx = ctx_for(25, 2);
    auto reason = [&](const std::string& s) {
        auto f = poly_to_cyclotomic(parse_poly(ctx.F, s), ctx);
        return f.ok() ? std::string("accepted") : std::string(reason_code(f.reason));
    };
    CHECK(reason("T + T^2 + T^3 + T^4 + T^5") == "too-many-terms");
    CHECK(reason("T + T^2 + T^3") == "too-many-remainders");
    CHECK(reason("T + T^2") == "not-a-partition");
    auto d1 = ctx_for(25, 1);
    auto r = poly_to_cyclotomic(parse_poly(d1.F, "T^2 + T"), d1);
    REQUIRE_FALSE(r.ok());
    CHECK(reason_code(r.reason) == "too-many-terms");
}

TEST_CASE("analyze_permutation examples") {
    auto ctx = ctx_for(25, 2);
    auto pa = analyze_permutation(paper_poly(ctx), ctx);
    REQUIRE(pa.ok());
    CHECK(pa->psi == std::vector<int>{1, 0});
    CHECK(pa->is_permutation);
    auto id = analyze_permutation(parse_poly(ctx.F, "T"), ctx);
    REQUIRE(id.ok());
    CHECK(id->psi == std::vector<int>{0, 1});
    auto half = analyze_permutation(parse_poly(ctx.F, "w^15*T^5 + w^3*T^17"), ctx);
    REQUIRE_FALSE(half.ok());
    CHECK(reason_code(half.reason) == "zero-branch-coefficient");
    auto sq = analyze_permutation(parse_poly(ctx.F, "T^2"), ctx);
    REQUIRE_FALSE(sq.ok());
    CHECK(reason_code(sq.reason) == "exponent-not-coprime");
    CyclotomicForm collide{ctx, {ctx.F->one(), ctx.F->omega_pow(-1)}, {1, 1}};
    auto co = analyze_form(collide);
    REQUIRE_FALSE(co.ok());
    CHECK(reason_code(co.reason) == "psi-not-bijective");
}

TEST_CASE("invert_permutation examples") {
    auto ctx = ctx_for(25, 2);
    auto inv = invert_permutation(paper_form(ctx));
    CHECK(format_poly(inv) == "w^9*T^5 + w^7*T^7 + w^9*T^17 + w^19*T^19");
    CHECK(format_poly(invert_permutation(CyclotomicForm::identity(ctx))) == "T");
    auto e = exponent_inverse(7, 12);
    CHECK(e.rt == 7);
    CHECK(e.t == -4);
    CyclotomicForm bad{ctx, {ctx.F->one(), ctx.F->one()}, {2, 2}};
    CHECK_THROWS_AS(invert_permutation(bad), Error);
}

TEST_CASE("analyze_affine_shift examples") {
    auto ctx = ctx_for(25, 2);
    auto P = paper_poly(ctx);
    P.coeffs[0] = ctx.F->one();
    auto s = analyze_affine_shift(P, ctx);
    REQUIRE(s.ok());
    CHECK(s->b == ctx.F->one());
    CHECK(s->form == paper_form(ctx));
    auto c = analyze_affine_shift(parse_poly(ctx.F, "w^3"), ctx);
    REQUIRE(c.ok());
    CHECK(c->b == ctx.F->omega_pow(3));
    CHECK(c->form.a == std::vector<Elem>{ctx.F->zero(), ctx.F->zero()});
    auto d1 = ctx_for(25, 1);
    auto r = analyze_affine_shift(parse_poly(d1.F, "T^2 + T + 1"), d1);
    CHECK_FALSE(r.ok());
}

TEST_CASE("round trip A: form to polynomial and back") {
    std::mt19937_64 rng(10);
    for (auto [q, d] : kRoundTripShapes) {
        auto ctx = ctx_for(q, d);
        for (int t = 0; t < 1000; ++t) {
            auto f = random_form(ctx, rng, false);
            auto P = cyclotomic_to_poly(f);
            auto g = poly_to_cyclotomic(P, ctx);
            REQUIRE(g.ok());
            REQUIRE(g->same_function(f));
            REQUIRE(pointwise_equal(*g, f));
        }
    }
}

TEST_CASE("round trip B: polynomial to form and back") {
    std::mt19937_64 rng(11);
    for (auto [q, d] : kRoundTripShapes) {
        auto ctx = ctx_for(q, d);
        int accepted = 0;
        for (int t = 0; t < 1000; ++t) {
            auto P = cyclotomic_to_poly(random_form(ctx, rng, true));
            auto f = poly_to_cyclotomic(P, ctx);
            REQUIRE(f.ok());
            ++accepted;
            REQUIRE(cyclotomic_to_poly(*f) == P);
        }
        CHECK(accepted == 1000);
    }
}

TEST_CASE("Algorithm 1 accepts exactly the generalized cyclotomic polynomials") {
    std::mt19937_64 rng(12);
    for (auto [q, d] : std::vector<std::pair<i64, i64>>{{9, 2}, {16, 3}, {25, 4}}) {
        auto ctx = ctx_for(q, d);
        const auto& F = *ctx.F;
        for (int t = 0; t < 1000; ++t) {
            PolyForm P = PolyForm::zero(ctx.F);
            int terms = std::uniform_int_distribution<int>(1, 3)(rng);
            for (int s = 0; s < terms; ++s) {
                i64 deg = std::uniform_int_distribution<i64>(1, q - 1)(rng);
                P.coeffs[deg] = random_nonzero(F, rng);
            }
            auto f = poly_to_cyclotomic(P, ctx);
            if (f.ok()) {
                REQUIRE(cyclotomic_to_poly(*f) == P);
                continue;
            }
            // A rejected polynomial must not agree with any cyclotomic form: check branch-wise.
            bool representable = true;
            for (i64 i = 0; i < d && representable; ++i) {
                Elem x0 = F.omega_pow(i);
                Elem y0 = P.eval(x0);
                std::optional<i64> exponent;
                for (i64 r = 1; r <= ctx.m && !exponent; ++r) {
                    Elem a = y0.v ? F.div(y0, F.pow(x0, r)) : F.zero();
                    bool all = true;
                    for (i64 j = 0; j < ctx.m && all; ++j) {
                        Elem x = F.mul(x0, F.omega_pow(j * d));
                        all = P.eval(x) == F.mul(a, F.pow(x, r));
                    }
                    if (all) exponent = r;
                }
                representable = exponent.has_value();
            }
            REQUIRE_FALSE(representable);
        }
    }
}

TEST_CASE("polynomial form agrees with the cyclotomic form pointwise") {
    std::mt19937_64 rng(13);
    for (auto [q, d] : kRoundTripShapes) {
        auto ctx = ctx_for(q, d);
        for (int t = 0; t < 200; ++t) {
            auto f = random_form(ctx, rng, true);
            REQUIRE(poly_matches_form(cyclotomic_to_poly(f), f));
        }
    }
}

TEST_CASE("inversion composes to the identity both ways") {
    std::mt19937_64 rng(14);
    for (auto [q, d] : kRoundTripShapes) {
        auto ctx = ctx_for(q, d);
        for (int t = 0; t < 100; ++t) {
            auto f = random_permutation_form(ctx, rng);
            REQUIRE(analyze_form(f).ok());
            auto P = cyclotomic_to_poly(f);
            auto inv = invert_permutation(f);
            for (i64 v = 0; v < q; ++v) {
                Elem x{static_cast<std::uint32_t>(v)};
                REQUIRE(inv.eval(P.eval(x)) == x);
                REQUIRE(P.eval(inv.eval(x)) == x);
            }
        }
    }
}

TEST_CASE("psi describes the coset images") {
    std::mt19937_64 rng(15);
    for (auto [q, d] : kRoundTripShapes) {
        auto ctx = ctx_for(q, d);
        const auto& F = *ctx.F;
        for (int t = 0; t < 50; ++t) {
            auto f = random_permutation_form(ctx, rng);
            auto pa = analyze_permutation(cyclotomic_to_poly(f), ctx);
            REQUIRE(pa.ok());
            for (i64 i = 0; i < d; ++i) {
                std::set<std::uint32_t> image, target;
                for (i64 j = 0; j < ctx.m; ++j) {
                    image.insert(f.eval(F.omega_pow(i + j * d)).v);
                    target.insert(F.omega_pow(pa->psi[i] + j * d).v);
                }
                REQUIRE(image == target);
            }
        }
    }
}

TEST_CASE("non-permutations are detected") {
    std::mt19937_64 rng(16);
    auto ctx = ctx_for(25, 4);
    int rejected = 0;
    for (int t = 0; t < 500; ++t) {
        auto f = random_form(ctx, rng, true);
        std::set<std::uint32_t> image;
        for (i64 v = 0; v < 25; ++v) image.insert(f.eval(Elem{static_cast<std::uint32_t>(v)}).v);
        bool bijective = image.size() == 25;
        auto pa = analyze_form(f);
        REQUIRE(pa.ok() == bijective);
        if (!pa.ok()) ++rejected;
    }
    CHECK(rejected > 0);
}
