#include <catch_amalgamated.hpp>

#include <random>

#include "noc/linsolve.hpp"
#include "noc/poly.hpp"
#include "noc/ratfun.hpp"

using namespace noc;

namespace {

VarTablePtr uv_table() {
    return make_table({{"u1", 1}, {"u2", 2}, {"u3", 3}, {"v1", 1}, {"v2", 2}, {"v3", 3}});
}

VarTablePtr ab_table() { return make_table({{"alpha", 1}, {"beta", 1}}); }

Poly random_poly(const VarTablePtr& vt, std::mt19937& rng, int max_terms = 5, int max_deg = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coef(-6, 6);
    std::uniform_int_distribution<int> deg(0, max_deg);
    Poly p(vt);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Exp e(vt->arity());
        for (auto& x : e) x = static_cast<unsigned>(deg(rng));
        p.add_term(e, Rational(coef(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("rationals stay reduced with positive denominators") {
    Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(Rational::parse("8/1").str_frac() == "8/1");
    CHECK(Rational::parse("-12/30") == Rational(-2, 5));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-40, 40);
    for (int i = 0; i < 200; ++i) {
        long n = d(rng), m = d(rng);
        if (m == 0) continue;
        Rational q(n, m);
        mpz_class g;
        mpz_class qn = q.num(), qd = q.den();
        mpz_gcd(g.get_mpz_t(), qn.get_mpz_t(), qd.get_mpz_t());
        CHECK(g == 1);
        CHECK(q.den() > 0);
    }
}

TEST_CASE("poly arithmetic: paper-shaped smoke cases") {
    auto vt = uv_table();
    Poly u1 = Poly::var(vt, "u1");
    Poly v1 = Poly::var(vt, "v1");

    SECTION("binomial square (v1 - 2u1)^2") {
        Poly b = v1 - u1 * Rational(2);
        Poly sq = poly_arith(b, b, PolyOp::mul);
        Poly want = v1 * v1 - Rational(4) * (u1 * v1) + Rational(4) * (u1 * u1);
        CHECK(sq == want);
    }
    SECTION("additive identity") {
        std::mt19937 rng(1);
        Poly p = random_poly(vt, rng);
        CHECK(poly_arith(p, Poly::zero(vt), PolyOp::add) == p);
    }
    SECTION("difference of squares") {
        CHECK((u1 + v1) * (u1 - v1) == u1 * u1 - v1 * v1);
    }
    SECTION("table mismatch is rejected") {
        CHECK_THROWS_AS(u1 + Poly::var(ab_table(), "alpha"), std::invalid_argument);
    }
}

TEST_CASE("ring axioms on randomized small polys") {
    auto vt = make_table({{"x", 1}, {"y", 1}, {"z", 1}});
    std::mt19937 rng(20240811);
    for (int i = 0; i < 60; ++i) {
        Poly a = random_poly(vt, rng), b = random_poly(vt, rng), c = random_poly(vt, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("substitute: restriction-map shaped checks") {
    auto vt = uv_table();
    auto pt = ab_table();
    Poly alpha = Poly::var(pt, "alpha"), beta = Poly::var(pt, "beta");
    Poly u1 = Poly::var(vt, "u1"), v1 = Poly::var(vt, "v1");

    // 8(v1-2u1)^2 under u1 -> 3a+3b, v1 -> 7a+5b: v1-2u1 restricts to a-b, so
    // the image is 8(a-b)^2 = (4a-4b)(2a-2b), the Euler class of the slice
    Poly cls = Rational(8) * (v1 - Rational(2) * u1).pow(2);
    std::map<std::string, Poly> images = {
        {"u1", Rational(3) * alpha + Rational(3) * beta},
        {"v1", Rational(7) * alpha + Rational(5) * beta},
        {"u2", Poly::zero(pt)}, {"u3", Poly::zero(pt)},
        {"v2", Poly::zero(pt)}, {"v3", Poly::zero(pt)},
    };
    CHECK(cls.substitute(images) == Rational(8) * (alpha - beta).pow(2));
    CHECK(cls.substitute(images) ==
          (Rational(4) * alpha - Rational(4) * beta) * (Rational(2) * alpha - Rational(2) * beta));

    SECTION("identity substitution") {
        std::map<std::string, Poly> id;
        for (std::size_t i = 0; i < vt->arity(); ++i) id.emplace(vt->name(i), Poly::var(vt, i));
        std::mt19937 rng(3);
        Poly p = random_poly(vt, rng);
        CHECK(p.substitute(id) == p);
    }
    SECTION("annihilation") {
        Poly p = u1 * v1;
        std::map<std::string, Poly> im = images;
        im["u1"] = Poly::zero(pt);
        CHECK(p.substitute(im).is_zero());
    }
    SECTION("missing image rejected") {
        std::map<std::string, Poly> im = {{"u1", alpha}};
        CHECK_THROWS_AS(cls.substitute(im), std::invalid_argument);
    }
    SECTION("composition: substitute(substitute(p,f),g) == substitute(p,g o f)") {
        auto mid = make_table({{"s", 1}, {"t", 1}});
        auto fin = make_table({{"w", 1}});
        Poly s = Poly::var(mid, "s"), t = Poly::var(mid, "t"), w = Poly::var(fin, "w");
        std::mt19937 rng(11);
        for (int i = 0; i < 20; ++i) {
            Poly p = random_poly(uv_table(), rng, 4, 2);
            std::vector<Poly> f = {s + t, s * t, t, s - t, s.pow(2), t + Poly::constant(mid, Rational(2))};
            std::vector<Poly> g = {w, Rational(2) * w};
            std::vector<Poly> gof;
            for (const auto& fi : f) gof.push_back(fi.substitute(g));
            CHECK(p.substitute(f).substitute(g) == p.substitute(gof));
        }
    }
}

TEST_CASE("weighted degree") {
    auto vt = uv_table();
    Poly u1 = Poly::var(vt, "u1"), u2 = Poly::var(vt, "u2"), v1 = Poly::var(vt, "v1");
    // [D-bar] of Thm 3.1 has weighted degree 2 (codimension of D)
    Poly D = Rational(-3) * u2 + Rational(17) * u1 * u1 + Rational(3) * v1 * v1;
    CHECK(D.weighted_degree() == 2);
    CHECK(Poly::constant(vt, Rational(1)).weighted_degree() == 0);
    CHECK(!(u1 + u2).weighted_degree().has_value());
}

TEST_CASE("solve_linear") {
    SECTION("Thm 3.3 slice system: A(3a+3b)+B(7a+5b) = 4a-4b") {
        // coefficients of a and b give two equations in (A,B)
        std::vector<std::vector<Rational>> rows = {{Rational(3), Rational(7)},
                                                   {Rational(3), Rational(5)}};
        std::vector<Rational> rhs = {Rational(4), Rational(-4)};
        auto sol = solve_linear(rows, rhs, 2);
        REQUIRE(sol.kind == LinearSolution::Kind::unique);
        CHECK(sol.solution[0] == Rational(-8));
        CHECK(sol.solution[1] == Rational(4));
    }
    SECTION("empty system over one unknown") {
        auto sol = solve_linear({}, {}, 1);
        CHECK(sol.kind == LinearSolution::Kind::affine_space);
        CHECK(sol.solspace_dim == 1);
    }
    SECTION("inconsistent") {
        auto sol = solve_linear({{Rational(1)}, {Rational(1)}}, {Rational(1), Rational(2)}, 1);
        CHECK(sol.kind == LinearSolution::Kind::inconsistent);
    }
}

TEST_CASE("ratfun canonical form and congruence") {
    auto vt = make_table({{"x", 1}, {"y", 1}});
    Poly x = Poly::var(vt, "x"), y = Poly::var(vt, "y");

    SECTION("(x^2-y^2)/(x-y) reduces to x+y") {
        RatFun f(x * x - y * y, x - y);
        CHECK(f.is_polynomial());
        CHECK(f.as_polynomial() == x + y);
    }
    SECTION("0/p is 0/1") {
        RatFun f(Poly::zero(vt), x * y + y);
        CHECK(f.is_zero());
        CHECK(f.den() == Poly::constant(vt, Rational(1)));
    }
    SECTION("zero denominator rejected") {
        CHECK_THROWS_AS(RatFun(x, Poly::zero(vt)), std::invalid_argument);
    }
    SECTION("series-identity shaped sum, cross-multiplication oracle") {
        auto tt = make_table({{"t", 1}});
        Poly t = Poly::var(tt, "t");
        Poly one = Poly::constant(tt, Rational(1));
        RatFun s = RatFun(one + t, one - t) + RatFun(t * t, (one - t) * (one - t));
        // oracle: a/b + c/d == (ad+cb)/(bd) via cross-multiplication equality
        RatFun expect((one + t) * (one - t) + t * t, (one - t) * (one - t));
        CHECK(s == expect);
        CHECK(s != RatFun(one, one - t));
    }
    SECTION("equality is a congruence: a/b == c/d iff ad == cb") {
        std::mt19937 rng(99);
        for (int i = 0; i < 40; ++i) {
            Poly a = random_poly(vt, rng, 3, 2), b = random_poly(vt, rng, 3, 2);
            Poly c = random_poly(vt, rng, 3, 2), d = random_poly(vt, rng, 3, 2);
            if (b.is_zero() || d.is_zero()) continue;
            RatFun f(a, b), g(c, d);
            CHECK((f == g) == (a * d == c * b));
        }
    }
}

TEST_CASE("exact division") {
    auto vt = make_table({{"x", 1}, {"y", 1}});
    Poly x = Poly::var(vt, "x"), y = Poly::var(vt, "y");
    Poly p = (x + y).pow(3) * (x - Rational(2) * y);
    CHECK(divide_exact(p, (x + y).pow(2)) == (x + y) * (x - Rational(2) * y));
    CHECK(!try_divide(p + Poly::constant(vt, Rational(1)), x + y).has_value());
}

TEST_CASE("canonical printing") {
    auto vt = uv_table();
    Poly u1 = Poly::var(vt, "u1"), u2 = Poly::var(vt, "u2"), v1 = Poly::var(vt, "v1"),
         v2 = Poly::var(vt, "v2");
    Poly D = Rational(-3) * u2 + Rational(3) * v2 - Rational(16) * u1 * v1 +
             Rational(3) * v1 * v1 + Rational(17) * u1 * u1;
    CHECK(D.str() == "17*u1^2 - 16*u1*v1 + 3*v1^2 - 3*u2 + 3*v2");
    CHECK(Poly::zero(vt).str() == "0");
    CHECK((u1 - v1).str() == "u1 - v1");
}
