#include "cyclo/oracle.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace cyclo;

namespace {

CyclotomicForm random_permutation_form(const CycloContext& ctx, std::mt19937_64& rng) {
    const auto& F = *ctx.F;
    std::vector<i64> psi(ctx.d);
    for (i64 i = 0; i < ctx.d; ++i) psi[i] = i;
    std::shuffle(psi.begin(), psi.end(), rng);
    auto units = units_mod(ctx.m);
    if (ctx.m == 1) units = {1};
    CyclotomicForm f{ctx, {}, {}};
    for (i64 i = 0; i < ctx.d; ++i) {
        i64 r = units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
        i64 e = std::uniform_int_distribution<i64>(0, ctx.m - 1)(rng) * ctx.d;
        f.a.push_back(F.omega_pow(psi[i] - r * i + e));
        f.r.push_back(r);
    }
    return f;
}

CyclotomicForm example_form(FieldPtr F) {
    auto ctx = CycloContext::make(F, 2);
    return CyclotomicForm{ctx, {F->omega_pow(5), F->omega_pow(21)}, {7, 5}};
}

}  // namespace

TEST_CASE("materialize examples") {
    auto F = Field::make(5, 2);
    auto f = example_form(F);
    auto P = materialize(f);
    CHECK(P.size() == 24);
    CHECK(cycle_type_of(P) == CycleType{{4, 6}});
    CHECK(materialize(cyclotomic_to_poly(f)) == P);
    CHECK(materialize(CyclotomicForm::identity(f.ctx)).is_identity());
    CHECK(cycle_type_of(ExplicitPerm::identity(7)) == CycleType{{1, 7}});
    CHECK(cycle_type_of(materialize(AffineZ::make(12, 11, 9))) == CycleType{{2, 6}});
}

TEST_CASE("materialize rejects non-bijections with a witness") {
    auto F = Field::make(5, 2);
    auto ctx = CycloContext::make(F, 2);
    CyclotomicForm bad{ctx, {F->one(), F->one()}, {2, 1}};
    try {
        materialize(bad);
        FAIL("expected NotBijective");
    } catch (const NotBijective& e) {
        CHECK(e.x != e.y);
    }
    CHECK_THROWS_AS(make_perm({0, 0, 1}), NotBijective);
    CHECK_THROWS_AS(make_perm({0, 3}), Error);
}

TEST_CASE("a form followed by its inverse materializes to the identity") {
    std::mt19937_64 rng(21);
    for (auto [p, k, d] : std::vector<std::tuple<i64, int, i64>>{{5, 2, 2}, {3, 3, 13}, {7, 2, 6}, {2, 5, 31}}) {
        auto F = Field::make(p, k);
        auto ctx = CycloContext::make(F, d);
        LogTable T(F);
        for (int t = 0; t < 25; ++t) {
            auto f = random_permutation_form(ctx, rng);
            auto P = materialize(T, f);
            auto Q = materialize(T, invert_permutation(f));
            REQUIRE(perm_then(P, Q).is_identity());
            REQUIRE(perm_then(Q, P).is_identity());
            REQUIRE(perm_inv(P) == Q);
        }
    }
}

TEST_CASE("iota_omega and beta_omega transport agree as arrays") {
    std::mt19937_64 rng(22);
    for (auto [p, k, d] : std::vector<std::tuple<i64, int, i64>>{{5, 2, 2}, {5, 2, 4}, {3, 3, 2}, {7, 2, 3}}) {
        auto F = Field::make(p, k);
        auto ctx = CycloContext::make(F, d);
        LogTable T(F);
        for (int t = 0; t < 40; ++t) {
            auto f = random_permutation_form(ctx, rng);
            auto an = analyze_form(f);
            REQUIRE(an.ok());
            WreathZ g = wreath_c_to_z(iota_omega_inverse(f, an->psi));
            REQUIRE(transport_to_units(ctx, materialize(g)) == materialize(T, f));
        }
    }
}

TEST_CASE("group enumeration examples") {
    u64 n = 0;
    for_each_hol(12, [&](const AffineZ&) { ++n; });
    CHECK(n == 48);
    CHECK(group_order(GroupKind::W, 2, 12) == 4608);
    CHECK(group_order(GroupKind::Weq, 2, 12) == 1152);
    CHECK(group_order(GroupKind::W1, 2, 12) == 288);
    CHECK_THROWS_AS(for_each_element(GroupKind::W, 2, 12, [](const WreathZ&) {}, 1000), Error);
    CHECK_THROWS_AS(ci_brute(GroupKind::W, 4, 12, 1000), Error);
    CHECK_THROWS_AS(group_order(GroupKind::W, 20, 1000), Error);
}

TEST_CASE("enumeration visits each element once") {
    for (auto kind : {GroupKind::W, GroupKind::W1, GroupKind::Weq})
        for (auto [d, m] : std::vector<std::pair<int, i64>>{{1, 1}, {1, 12}, {2, 6}, {2, 12}, {3, 4}, {4, 3}}) {
            std::set<u64> keys;
            u64 n = 0;
            for_each_element(kind, d, m, [&](const WreathZ& g) {
                REQUIRE(in_group(g, kind));
                keys.insert(wreath_key(g));
                ++n;
            });
            REQUIRE(n == group_order(kind, d, m));
            REQUIRE(keys.size() == n);
        }
}

TEST_CASE("ci_brute examples") {
    CHECK(ci_brute_hol(12) == ci_hol(12));
    CHECK(ci_brute(GroupKind::W1, 1, 1) == CycleIndex::monomial({{1, 1}}));
    CHECK(ci_brute(GroupKind::W, 2, 12) == ci_gcp(2, 12));
    CycleIndex trivial = CycleIndex::monomial({{1, 5}});
    CHECK(ci_brute_regular(1) == CycleIndex::monomial({{1, 1}}));
    CHECK(ci_brute_sym(1) == CycleIndex::monomial({{1, 1}}));
    CHECK(ci_stretch(trivial, 1) == trivial);
}

TEST_CASE("ci_brute does not depend on enumeration order") {
    std::vector<WreathZ> all;
    for_each_element(GroupKind::Weq, 2, 6, [&](const WreathZ& g) { all.push_back(g); });
    std::mt19937_64 rng(23);
    std::shuffle(all.begin(), all.end(), rng);
    CycleIndex f;
    for (auto& g : all) f.add(cycle_type_of(materialize(g)), Rational(1, static_cast<unsigned long>(all.size())));
    CHECK(f == ci_brute(GroupKind::Weq, 2, 6));
}

TEST_CASE("conjugate_brute examples") {
    WreathZ g{6, {1, 0}, {AffineZ::make(6, 5, 1), AffineZ::make(6, 1, 2)}};
    CHECK(conjugate_brute(g, g, GroupKind::W));
    auto reps = hol_involution_reps(12);
    REQUIRE(reps.size() == 8);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) CHECK(hol_conjugate_brute(reps[i], reps[j]) == (i == j));
}

TEST_CASE("conjugacy_classes partitions by closure") {
    auto P = conjugacy_classes(GroupKind::W, 2, 4, [](const WreathZ&) { return true; });
    CHECK(P.elements.size() == group_order(GroupKind::W, 2, 4));
    std::set<int> seen(P.class_of.begin(), P.class_of.end());
    CHECK(static_cast<int>(seen.size()) == P.num_classes);
    CHECK_THROWS_AS(conjugacy_classes(GroupKind::W, 2, 4, [](const WreathZ& g) { return g.maps[0].b == 0; }), Error);
}
