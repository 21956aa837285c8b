#include <catch_amalgamated.hpp>

#include <random>

#include "noc/symfun.hpp"

using namespace noc;

TEST_CASE("partitions") {
    CHECK(partition_str({5, 4, 4, 1, 1, 1}) == "544111");
    CHECK(partition_str({10, 4}) == "(10,4)");
    CHECK(parse_partition("3331") == Partition{3, 3, 3, 1});
    CHECK(parse_partition("(10,4)") == Partition{10, 4});
    CHECK_THROWS_AS(check_partition(Partition{1, 2}), std::invalid_argument);
    CHECK(partition_size({4, 3, 3}) == 10);

    // hook condition: lambda_{p+1} <= m caps parts below row p
    auto hp = hook_partitions(9, 2, 2);
    for (const auto& lam : hp)
        if (lam.size() >= 3) CHECK(lam[2] <= 2);
    auto has = [&](const Partition& lam) {
        return std::find(hp.begin(), hp.end(), lam) != hp.end();
    };
    CHECK_FALSE(has({3, 3, 3}));   // third part 3 > m = 2
    CHECK(has({3, 3, 2, 1}));
    CHECK(has({9}));
    // for d = 5 no partition violates the (2,2)-hook
    CHECK(hook_partitions(5, 2, 2).size() == 7);
}

TEST_CASE("elem_sym") {
    RootContext ctx(3, 3);
    auto a = ctx.alpha_roots();
    CHECK(elem_sym(2, {a[0], a[0], a[0]}) == Rational(3) * a[0] * a[0]);
    CHECK(elem_sym(0, a) == Poly::constant(ctx.roots, Rational(1)));
    // sigma_1(2a+2b, a+3b, 4a) = 7a+5b, the Thm 3.3 restriction of v1
    Poly al = a[0], be = a[1];
    Poly s1 = elem_sym(1, {Rational(2) * al + Rational(2) * be, al + Rational(3) * be, Rational(4) * al});
    CHECK(s1 == Rational(7) * al + Rational(5) * be);
    CHECK_THROWS_AS(elem_sym(4, a), std::invalid_argument);
}

TEST_CASE("quotient chern classes") {
    RootContext ctx(3, 3);
    CHECK(quotient_chern(ctx, 0) == Poly::constant(ctx.roots, Rational(1)));

    auto a = ctx.alpha_roots();
    auto b = ctx.beta_roots();
    Poly sb1 = elem_sym(1, b), sa1 = elem_sym(1, a);
    CHECK(quotient_chern(ctx, 1) == sb1 - sa1);
    // c2 = s2(b) - s1(b)s1(a) + s1(a)^2 - s2(a)
    Poly want = elem_sym(2, b) - sb1 * sa1 + sa1 * sa1 - elem_sym(2, a);
    CHECK(quotient_chern(ctx, 2) == want);

    SECTION("defining series identity up to truncation degree") {
        // prod(1+a_i) * sum c_k == prod(1+b_j) in each degree up to 6
        int maxd = 6;
        std::vector<Poly> c;
        for (int k = 0; k <= maxd; ++k) c.push_back(quotient_chern(ctx, k));
        for (int k = 0; k <= maxd; ++k) {
            Poly lhs = Poly::zero(ctx.roots);
            for (int j = 0; j <= std::min(k, 3); ++j) lhs += elem_sym(j, a) * c[k - j];
            Poly rhs = k <= 3 ? elem_sym(k, b) : Poly::zero(ctx.roots);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("schur via Jacobi-Trudi") {
    RootContext ctx(3, 3);
    // Delta_(31) = c3*c1 - c4
    Poly c1 = quotient_chern(ctx, 1), c3 = quotient_chern(ctx, 3), c4 = quotient_chern(ctx, 4);
    CHECK(schur(ctx, {3, 1}) == c3 * c1 - c4);
    CHECK(schur(ctx, {}) == Poly::constant(ctx.roots, Rational(1)));
    CHECK(schur(ctx, {1}) == c1);
    // dual pair: Delta_(2,1,1) via det over c's compared against brute minor expansion
    Poly c0 = quotient_chern(ctx, 0), c2 = quotient_chern(ctx, 2);
    // det [[c2 c3 c4],[c0 c1 c2],[0 c0 c1]]
    Poly det = c2 * (c1 * c1 - c2 * c0) - c3 * (c0 * c1) + c4 * (c0 * c0);
    CHECK(schur(ctx, {2, 1, 1}) == det);
}

TEST_CASE("schur_expand") {
    RootContext ctx(3, 4);

    SECTION("round trips") {
        std::vector<Partition> lams = {{3, 1}, {2, 2}, {1, 1, 1, 1}, {4}, {2, 1, 1}};
        for (const auto& lam : lams) {
            SchurCombo sc = schur_expand(schur(ctx, lam), ctx);
            REQUIRE(sc.terms.size() == 1);
            CHECK(sc.terms.begin()->first == lam);
            CHECK(sc.terms.begin()->second == Rational(1));
        }
    }
    SECTION("linear combination recovered and re-evaluated") {
        SchurCombo in;
        in.add({4, 3, 3}, Rational(8));
        in.add({3, 3, 3, 1}, Rational(4));
        Poly p = schur_combo_eval(ctx, in, 10);
        SchurCombo out = schur_expand(p, ctx);
        CHECK(out == in);
        CHECK(schur_combo_eval(ctx, out, 10) == p);
    }
    SECTION("not in the span") {
        // alpha-only power sums of degree 2 are symmetric but not quotient classes
        auto a = ctx.alpha_roots();
        Poly p = a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
        CHECK_THROWS_AS(schur_expand(p, ctx), SchurExpandError);
    }
    SECTION("non-symmetric rejected") {
        auto a = ctx.alpha_roots();
        CHECK_THROWS_AS(schur_expand(a[0], ctx), std::invalid_argument);
    }
}

TEST_CASE("symmetric_to_elementary round trip") {
    RootContext ctx(2, 2);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        // random symmetric polynomial: random poly in elementary coords, expanded
        Poly pe(ctx.elems);
        std::uniform_int_distribution<int> ex(0, 2);
        for (int t = 0; t < 4; ++t) {
            Exp e(4);
            for (auto& v : e) v = static_cast<unsigned>(ex(rng));
            pe.add_term(e, Rational(coef(rng)));
        }
        detail::ElementaryExpander exp_(ctx);
        Poly roots = exp_.expand_poly(pe);
        CHECK(symmetric_to_elementary(ctx, roots) == pe);
    }
}
