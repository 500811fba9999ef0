#include "cyclo/io.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace cyclo;

TEST_CASE("field element text") {
    auto F = Field::make(5, 2);
    CHECK(format_elem(*F, F->zero()) == "0");
    CHECK(format_elem(*F, F->one()) == "1");
    CHECK(format_elem(*F, F->omega()) == "w");
    CHECK(format_elem(*F, F->omega_pow(21)) == "w^21");
    CHECK(parse_elem(*F, "w^-3") == F->omega_pow(21));
    CHECK(parse_elem(*F, "4") == F->neg(F->one()));
    CHECK(parse_elem(*F, "[0,1]") == F->x());
    CHECK(parse_elem(*F, " w ") == F->omega());
    for (i64 v = 0; v < F->q(); ++v) {
        Elem x{static_cast<std::uint32_t>(v)};
        REQUIRE(parse_elem(*F, format_elem(*F, x)) == x);
    }
    CHECK_THROWS_AS(parse_elem(*F, ""), Error);
    CHECK_THROWS_AS(parse_elem(*F, "[1,2,3]"), Error);
    CHECK_THROWS_AS(parse_elem(*F, "[5,0]"), Error);
    CHECK_THROWS_AS(parse_elem(*F, "v^2"), Error);
}

TEST_CASE("polynomial text") {
    auto F = Field::make(5, 2);
    auto P = parse_poly(F, "w^5*T^7 + w^21*T^17");
    CHECK(P.coeff(7) == F->omega_pow(5));
    CHECK(P.coeff(17) == F->omega_pow(21));
    CHECK(format_poly(P) == "w^5*T^7 + w^21*T^17");
    CHECK(format_poly(parse_poly(F, "T^2 + T + 1")) == "1 + T + T^2");
    CHECK(format_poly(parse_poly(F, "T + T")) == "w^6*T");
    CHECK(F->from_int(2) == F->omega_pow(6));
    CHECK(format_poly(parse_poly(F, "T + 4*T")) == "0");
    CHECK(format_poly(PolyForm::zero(F)) == "0");
    CHECK_THROWS_AS(parse_poly(F, "T^25"), Error);
    CHECK_THROWS_AS(parse_poly(F, "T^2 + "), Error);
    CHECK_THROWS_AS(parse_poly(F, "w*X"), Error);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::uint32_t> pick(0, 24);
    for (int t = 0; t < 200; ++t) {
        PolyForm Q = PolyForm::zero(F);
        for (int j = 0; j < 4; ++j) Q.coeffs[pick(rng)] = Elem{pick(rng)};
        REQUIRE(parse_poly(F, format_poly(Q)) == Q);
    }
}

TEST_CASE("cyclotomic form text") {
    auto F = Field::make(5, 2);
    auto ctx = CycloContext::make(F, 2);
    auto f = parse_form(ctx, "f(a=[w^5,w^21], r=[7,5])");
    CHECK(f.a == std::vector<Elem>{F->omega_pow(5), F->omega_pow(21)});
    CHECK(f.r == std::vector<i64>{7, 5});
    CHECK(format_form(f) == "f(a=[w^5,w^21], r=[7,5])");
    CHECK(parse_form(ctx, format_form(f)) == f);
    CHECK_THROWS_AS(parse_form(ctx, "f(a=[w], r=[1])"), Error);
    CHECK_THROWS_AS(parse_form(ctx, "f(a=[w,w], r=[0,1])"), Error);
    CHECK_THROWS_AS(parse_form(ctx, "f(a=[w,w], r=[1,13])"), Error);
    CHECK_THROWS_AS(parse_form(ctx, "g(a=[w,w], r=[1,1])"), Error);
}

TEST_CASE("permutation text") {
    CHECK(format_perm(perm_identity(3)) == "()");
    CHECK(format_perm(Perm{1, 0}) == "(0,1)");
    CHECK(format_perm(Perm{1, 2, 0, 4, 3}) == "(0,1,2)(3,4)");
    CHECK(parse_perm("(0,1,2)(3,4)", 5) == Perm{1, 2, 0, 4, 3});
    CHECK(parse_perm("()", 4) == perm_identity(4));
    CHECK_THROWS_AS(parse_perm("(0,5)", 3), Error);
    CHECK_THROWS_AS(parse_perm("(0,1)(1,2)", 3), Error);
    CHECK_THROWS_AS(parse_perm("0,1", 3), Error);
    std::mt19937_64 rng(32);
    for (int t = 0; t < 200; ++t) {
        Perm p = perm_identity(7);
        std::shuffle(p.begin(), p.end(), rng);
        REQUIRE(parse_perm(format_perm(p), 7) == p);
    }
}

TEST_CASE("affine and wreath text") {
    CHECK(format_affine(AffineZ::make(12, 5, 1)) == "lam(5,1)@12");
    CHECK(parse_affine("lam(-1,21)@12") == AffineZ::make(12, 11, 9));
    CHECK(parse_affine("lam(5,1)", 12) == AffineZ::make(12, 5, 1));
    CHECK_THROWS_AS(parse_affine("lam(5,1)"), Error);
    CHECK_THROWS_AS(parse_affine("lam(5,1)@12", 6), Error);
    CHECK_THROWS_AS(parse_affine("lam(2,1)@12"), Error);
    WreathZ g{12, {1, 0}, {AffineZ::make(12, 5, 1), AffineZ::make(12, 7, 2)}};
    CHECK(format_wreath(g) == "((0,1); lam(5,1)@12, lam(7,2)@12)");
    CHECK(parse_wreath("((0,1); lam(5,1)@12, lam(7,2)@12)") == g);
    CHECK(parse_wreath("((0,1); lam(5,1), lam(7,2))", 12) == g);
    CHECK_THROWS_AS(parse_wreath("((0,1); lam(5,1)@12, lam(7,2)@6)"), Error);
    CHECK_THROWS_AS(parse_wreath("((0,2); lam(5,1)@12, lam(7,2)@12)"), Error);
    CHECK_THROWS_AS(parse_wreath("(0,1) lam(5,1)@12"), Error);
}

TEST_CASE("wreath text over the field") {
    auto F = Field::make(5, 2);
    auto ctx = CycloContext::make(F, 2);
    WreathZ g{12, {1, 0}, {AffineZ::make(12, 5, 1), AffineZ::make(12, 7, 2)}};
    auto gc = wreath_z_to_c(ctx, g);
    auto text = format_wreath_c(gc);
    CHECK(text == "((0,1); lam(5,w^2), lam(7,w^4))");
    CHECK(wreath_c_to_z(parse_wreath_c(ctx, text)) == g);
    CHECK_THROWS_AS(parse_wreath_c(ctx, "((0,1); lam(5,w^2))"), Error);
    CHECK_THROWS_AS(parse_wreath_c(ctx, "((0,1); lam(5,w), lam(7,w^4))"), Error);
}

TEST_CASE("cycle type and cycle index text") {
    CHECK(format_cycle_type({{4, 6}}) == "x4^6");
    CHECK(format_cycle_type({{1, 3}, {2, 2}}) == "x1^3*x2^2");
    CHECK(format_cycle_type({{1, 1}, {5, 1}}) == "x1*x5");
    CHECK(format_cycle_type({}) == "1");
    CHECK(parse_cycle_type("x1^3*x2^2") == CycleType{{1, 3}, {2, 2}});
    CHECK(parse_cycle_type("1").empty());
    CHECK_THROWS_AS(parse_cycle_type("y1"), Error);
    CHECK_THROWS_AS(parse_cycle_type("x0^2"), Error);
    auto f = ci_hol(12);
    CHECK(parse_cycle_index(format_cycle_index(f)) == f);
    CHECK(parse_cycle_index(format_cycle_index(ci_gcp(2, 12))) == ci_gcp(2, 12));
    CHECK(format_cycle_index(CycleIndex{}) == "0");
    CHECK(parse_cycle_index("2/4*x1 + 1/2*x1") == CycleIndex::monomial({{1, 1}}));
    CHECK_THROWS_AS(parse_cycle_index("1/0*x1"), Error);
    CHECK_THROWS_AS(parse_cycle_index("a/b*x1"), Error);
}
