#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "charvar/epoly.hpp"

using namespace charvar;

namespace {

std::mt19937 rng(20240811);

Integer random_integer(int max_limbs) {
    std::uniform_int_distribution<int> limbs(1, max_limbs);
    std::uniform_int_distribution<uint32_t> limb;
    std::uniform_int_distribution<int> sign(0, 1);
    int n = limbs(rng);
    Integer r(0);
    for (int i = 0; i < n; ++i)
        r = r * Integer(1ll << 32) + Integer(static_cast<long long>(limb(rng)));
    return sign(rng) ? r : -r;
}

EPoly random_poly(int max_degree, long long coeff_range = 50) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long long> coeff(-coeff_range, coeff_range);
    int d = deg(rng);
    std::vector<Integer> v;
    for (int i = 0; i <= d; ++i) v.emplace_back(coeff(rng));
    return EPoly::from_coeffs(std::move(v));
}

}  // namespace

TEST_CASE("Integer arithmetic basics") {
    CHECK(Integer(0).is_zero());
    CHECK(Integer(-5).to_int64() == -5);
    CHECK((Integer(7) * Integer(-3)).to_int64() == -21);
    CHECK((Integer(1000000007) * Integer(998244353)).to_string() ==
          "998244359987710471");
    CHECK(Integer::from_string("-123456789012345678901234567890").to_string() ==
          "-123456789012345678901234567890");
    CHECK((Integer::from_string("12345678901234567890") %
           Integer::from_string("97"))
              .to_int64() ==
          12345678901234567890ull % 97);
}

TEST_CASE("Integer divmod reconstruction property") {
    for (int iter = 0; iter < 500; ++iter) {
        Integer a = random_integer(5);
        Integer b = random_integer(3);
        if (b.is_zero()) continue;
        Integer q, r;
        Integer::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.is_negative() == a.is_negative());
    }
}

TEST_CASE("Integer division recovers constructed quotient and remainder") {
    // u = q*v + r with 0 <= r < v pins divmod bidirectionally; shaping the
    // divisor's leading limb near 2^31 exercises the correction branches
    std::uniform_int_distribution<uint32_t> limb;
    std::uniform_int_distribution<int> nlimbs(1, 4);
    std::uniform_int_distribution<int> shape(0, 2);
    for (int iter = 0; iter < 2000; ++iter) {
        Integer v = random_integer(3).abs();
        if (v.is_zero()) continue;
        if (shape(rng) == 0) {
            // leading limb exactly 2^31: maximal qhat overshoot probability
            v = (v % Integer(1ll << 31)) + Integer(1ll << 31);
            for (int k = 0; k < nlimbs(rng); ++k)
                v = v * Integer(1ll << 32) + Integer(static_cast<long long>(limb(rng)));
        }
        Integer q = random_integer(3).abs();
        Integer r = random_integer(4).abs() % v;
        Integer u = q * v + r;
        Integer qq, rr;
        Integer::divmod(u, v, qq, rr);
        CHECK(qq == q);
        CHECK(rr == r);
    }
}

TEST_CASE("Integer division corner cases") {
    // divisor with a high leading limb exercises the qhat correction path
    Integer u = Integer::from_string("340282366920938463463374607431768211455");
    Integer v = Integer::from_string("18446744073709551615");
    Integer q, r;
    Integer::divmod(u, v, q, r);
    CHECK(q.to_string() == "18446744073709551617");
    CHECK(r.is_zero());
    Integer::divmod(u - Integer(1), v, q, r);
    CHECK(q.to_string() == "18446744073709551616");
    CHECK(r == v - Integer(1));
}

TEST_CASE("add matches the stratification identities") {
    // five commutator strata resum to the square of the group polynomial
    EPoly x0 = EPoly::desc({1, 4, -1, -4, 0});
    EPoly x1 = EPoly::desc({1, 0, -1, 0});
    EPoly x2 = EPoly::desc({1, -2, -4, 2, 3, 0});
    EPoly x3 = EPoly::desc({1, 3, -1, -3, 0, 0});
    EPoly x4 = EPoly::desc({1, -2, -4, 0, 3, 2, 0});
    CHECK(x0 + x1 + x2 + x3 + x4 == EPoly::desc({1, 0, -2, 0, 1, 0, 0}));

    EPoly p = random_poly(8);
    CHECK(p + EPoly() == p);

    // conjugacy-type strata resum to the group polynomial
    EPoly w = EPoly::constant(2) + 2 * EPoly::desc({1, 0, -1}) +
              EPoly::desc({1, -2, -1, 0});
    CHECK(w == EPoly::desc({1, 0, -1, 0}));
}

TEST_CASE("mul matches the displayed factorizations") {
    CHECK(EPoly::desc({1, -1}) * EPoly::desc({1, 4, 1}) ==
          EPoly::desc({1, 3, -3, -1}));
    CHECK(EPoly::desc({1, 0, -1, 0}).to_string() == "q^3 - q");
    CHECK(EPoly::desc({1, -1, 0}) * EPoly::desc({1, 0, -1}) ==
          EPoly::desc({1, -1, -1, 1, 0}));
    EPoly p = random_poly(6);
    CHECK(p * EPoly::constant(1) == p);
}

TEST_CASE("ring axioms on randomized inputs") {
    for (int iter = 0; iter < 120; ++iter) {
        EPoly a = random_poly(7), b = random_poly(7), c = random_poly(7);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == EPoly());
    }
}

TEST_CASE("exact_div recovers quotients and rejects non-divisors") {
    CHECK(exact_div(EPoly::desc({1, 0, -3, -30, 0, 30, 3, 0, -1, 0}),
                    EPoly::desc({1, 0, -1, 0})) ==
          EPoly::desc({1, 0, -2, -30, -2, 0, 1}));
    CHECK(exact_div(EPoly::desc({1, 0, -1, 0}), EPoly::desc({1, 0, -1, 0})) ==
          EPoly::constant(1));
    CHECK_THROWS_AS(exact_div(EPoly::desc({1, 0, 1}), EPoly::desc({1, -1})),
                    NotDivisible);
    // leading coefficient must divide at every step
    CHECK_THROWS_AS(exact_div(EPoly::desc({1, 0, 0}), EPoly::desc({2, 0})),
                    NotDivisible);
    CHECK(exact_div(EPoly::desc({4, 0, 0}), EPoly::desc({2, 0})) ==
          EPoly::desc({2, 0}));
    CHECK_THROWS_AS(exact_div(EPoly::desc({1, -1}), EPoly::desc({1, 0, 1})),
                    NotDivisible);
    CHECK_THROWS_AS(exact_div(EPoly::constant(1), EPoly()), std::domain_error);
    CHECK(exact_div(EPoly(), EPoly::desc({1, -1})) == EPoly());
    for (int iter = 0; iter < 120; ++iter) {
        EPoly p = random_poly(6), r = random_poly(4);
        if (r.is_zero()) continue;
        CHECK(exact_div(p * r, r) == p);
    }
}

TEST_CASE("eval is exact and multiplicative") {
    CHECK(EPoly::desc({1, 4, -1, -4, 0}).eval(Integer(3)).to_int64() == 168);
    CHECK(EPoly::desc({1, 0, -1, 0}).eval(Integer(3)).to_int64() == 24);
    CHECK(EPoly().eval(Integer(12345)).is_zero());
    for (int iter = 0; iter < 120; ++iter) {
        EPoly p = random_poly(6), r = random_poly(6);
        Integer x(static_cast<long long>(rng() % 2001) - 1000);
        CHECK((p * r).eval(x) == p.eval(x) * r.eval(x));
    }
}

TEST_CASE("interpolate reconstructs integer polynomials") {
    // counting the twisted genus-1 fibre at four primes pins down q^3 - q
    std::vector<std::pair<Integer, Integer>> pts = {
        {Integer(3), Integer(24)},
        {Integer(5), Integer(120)},
        {Integer(7), Integer(336)},
        {Integer(11), Integer(1320)}};
    CHECK(interpolate(pts, 3) == EPoly::desc({1, 0, -1, 0}));

    std::vector<std::pair<Integer, Integer>> flat = {{Integer(1), Integer(1)},
                                                     {Integer(2), Integer(1)}};
    CHECK(interpolate(flat, 1) == EPoly::constant(1));

    CHECK_THROWS_AS(interpolate(flat, 3), InsufficientPoints);
    std::vector<std::pair<Integer, Integer>> dup = {{Integer(1), Integer(1)},
                                                    {Integer(1), Integer(2)}};
    CHECK_THROWS_AS(interpolate(dup, 1), InsufficientPoints);

    std::vector<std::pair<Integer, Integer>> frac = {{Integer(0), Integer(0)},
                                                     {Integer(2), Integer(1)}};
    CHECK_THROWS_AS(interpolate(frac, 1), NonIntegralResult);

    std::vector<std::pair<Integer, Integer>> overdeg = {{Integer(0), Integer(0)},
                                                        {Integer(1), Integer(1)},
                                                        {Integer(2), Integer(4)}};
    CHECK_THROWS_AS(interpolate(overdeg, 1), NonIntegralResult);
}

TEST_CASE("interpolation round-trip on random polynomials up to degree 12") {
    std::uniform_int_distribution<int> deg(0, 12);
    for (int iter = 0; iter < 120; ++iter) {
        int d = deg(rng);
        std::vector<Integer> coeffs;
        std::uniform_int_distribution<long long> coeff(-1000000, 1000000);
        for (int i = 0; i <= d; ++i) coeffs.emplace_back(coeff(rng));
        EPoly p = EPoly::from_coeffs(std::move(coeffs));
        int dd = p.degree().value_or(0);
        std::vector<std::pair<Integer, Integer>> pts;
        for (int x = 0; x <= dd; ++x)
            pts.emplace_back(Integer(2 * x + 3), p.eval(Integer(2 * x + 3)));
        CHECK(interpolate(pts, dd) == p);
    }
}

TEST_CASE("palindromicity") {
    CHECK(is_palindromic(EPoly::desc({1, 1, -2, 13, -26, 13, -2, 1, 1})));
    CHECK(is_palindromic(EPoly::desc({1, 0, 1})));
    CHECK_FALSE(is_palindromic(EPoly::desc({1, -2, -3})));
    CHECK_THROWS_AS(is_palindromic(EPoly()), ZeroPolynomial);
}

TEST_CASE("degree sentinel") {
    CHECK_FALSE(EPoly().degree().has_value());
    CHECK(EPoly::constant(7).degree() == 0);
    CHECK(EPoly::desc({1, 0, 0}).degree() == 2);
    CHECK((EPoly::desc({1, 2}) - EPoly::desc({1, 2})).degree() ==
          std::optional<int>{});
}

TEST_CASE("rendering matches the conventional style") {
    CHECK(EPoly::desc({1, 0, -2, 0, 1, 0, 0}).to_string() ==
          "q^6 - 2q^4 + q^2");
    CHECK(EPoly::desc({1, 0, -3, 15, 6, 45, 0, 0, 0}).to_string() ==
          "q^8 - 3q^6 + 15q^5 + 6q^4 + 45q^3");
    CHECK(EPoly().to_string() == "0");
    CHECK(EPoly::constant(-4).to_string() == "-4");
    CHECK(EPoly::desc({-1, 1, 1}).to_string() == "-q^2 + q + 1");
    CHECK(EPoly::desc({1, -1}).to_string() == "q - 1");
}

TEST_CASE("parsing accepts the rendered style and round-trips") {
    CHECK(EPoly::parse("q^6 - 2q^4 + q^2") ==
          EPoly::desc({1, 0, -2, 0, 1, 0, 0}));
    CHECK(EPoly::parse("0") == EPoly());
    CHECK(EPoly::parse("  -q + 7 ") == EPoly::desc({-1, 7}));
    CHECK(EPoly::parse("3q") == EPoly::desc({3, 0}));
    CHECK_THROWS_AS(EPoly::parse(""), ParseError);
    CHECK_THROWS_AS(EPoly::parse("q^"), ParseError);
    CHECK_THROWS_AS(EPoly::parse("q q"), ParseError);
    for (int iter = 0; iter < 150; ++iter) {
        EPoly p = random_poly(9, 1000);
        CHECK(EPoly::parse(p.to_string()) == p);
    }
}
