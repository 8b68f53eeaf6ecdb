#include <doctest.h>

#include <algorithm>
#include <random>

#include "ufdlab/coeff.hpp"

using namespace ufdlab;

namespace {

Int evaluate(const std::vector<Int>& values, const std::vector<Int>& coeffs) {
    Int s = 0;
    for (std::size_t i = 0; i < values.size(); ++i) s += values[i] * coeffs[i];
    return s;
}

}  // namespace

TEST_SUITE("coeff") {
    TEST_CASE("gcd_bezout examples") {
        std::vector<Int> a{4, 6};
        auto r = gcd_bezout(a);
        CHECK(r.gcd == 2);
        CHECK(r.coeffs == std::vector<Int>{-1, 1});

        std::vector<Int> one{1};
        auto r1 = gcd_bezout(one);
        CHECK(r1.gcd == 1);
        CHECK(r1.coeffs == std::vector<Int>{1});

        std::vector<Int> three{10, 15, 6};
        auto r3 = gcd_bezout(three);
        CHECK(r3.gcd == 1);
        CHECK(evaluate(three, r3.coeffs) == 1);
    }

    TEST_CASE("gcd_bezout rejects the zero list") {
        std::vector<Int> z{0, 0};
        CHECK_THROWS_WITH_AS(gcd_bezout(z), "gcd of zero list", Error);
    }

    TEST_CASE("gcd_bezout: permuting the input fixes g") {
        std::mt19937_64 rng(7);
        for (int k = 0; k < 200; ++k) {
            std::vector<Int> v;
            for (int i = 0; i < 4; ++i) v.push_back(Int(static_cast<long>(rng() % 61) - 30));
            if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; })) continue;
            auto r = gcd_bezout(v);
            CHECK(evaluate(v, r.coeffs) == r.gcd);
            CHECK(r.gcd >= 0);
            auto w = v;
            std::reverse(w.begin(), w.end());
            CHECK(gcd_bezout(w).gcd == r.gcd);
        }
    }

    TEST_CASE("prime_avoid examples") {
        std::vector<Int> a{4, 6};
        CHECK(prime_avoid(a, 3, 10) == std::vector<Int>{0, 0});
        std::vector<Int> five{5};
        CHECK(prime_avoid(five, 3, 6) == std::vector<Int>{2});
        std::vector<Int> any{7, -9, 12};
        CHECK(prime_avoid(any, 5, 1) == std::vector<Int>{0, 0, 0});
    }

    TEST_CASE("prime_avoid hypothesis failure") {
        std::vector<Int> a{2, 4};
        CHECK_THROWS_WITH_AS(prime_avoid(a, 6, 8), "hypothesis of prime avoidance fails", Error);
    }

    TEST_CASE("prime_avoid exhaustive over a small box") {
        int bad = 0, tried = 0;
        for (long a1 = -4; a1 <= 4; ++a1)
            for (long a2 = -4; a2 <= 4; ++a2)
                for (long b = -4; b <= 4; ++b)
                    for (long c = -4; c <= 4; ++c) {
                        if (c == 0) continue;
                        std::vector<Int> all{a1, a2, b, c};
                        if (gcd_of(all) != 1) continue;
                        ++tried;
                        std::vector<Int> a{a1, a2};
                        auto m = prime_avoid(a, b, c);
                        std::vector<Int> pair{Int(c), Int(b) + m[0] * a1 + m[1] * a2};
                        if (gcd_of(pair) != 1) ++bad;
                    }
        CHECK(tried > 0);
        CHECK(bad == 0);
    }

    TEST_CASE("lcm and primality") {
        std::vector<Int> v{4, 6, 10};
        CHECK(lcm_of(v) == 60);
        CHECK(is_prime(5));
        CHECK(is_prime(999983));
        CHECK_FALSE(is_prime(1));
        CHECK_FALSE(is_prime(91));
    }

    TEST_CASE("fields") {
        CHECK(Field::parse("F5") == Field::prime(5));
        CHECK(Field::parse("GF(7)").characteristic() == 7);
        CHECK(Field::parse("QQ") == Field::rationals());
        CHECK_THROWS_AS(Field::prime(4), Error);
        CHECK(Field::prime(5).name() == "F5");
    }

    TEST_CASE("rationals stay in lowest terms") {
        Field Q = Field::rationals();
        FieldElem x(Q, Rational(6, 8));
        CHECK(x.to_rational() == Rational(3, 4));
        CHECK(x.to_string() == "3/4");
        FieldElem y(Q, Rational(-2, 4));
        CHECK(y.to_rational().get_den() == 2);
    }

    TEST_CASE("residues and division by zero") {
        Field F5 = Field::prime(5);
        FieldElem a(F5, -1L);
        CHECK(a.to_string() == "4");
        CHECK((a * a).is_one());
        CHECK_THROWS_AS(FieldElem(F5, Rational(1, 5)), Error);
        CHECK_THROWS_AS(FieldElem(F5, 0L).inverse(), Error);
    }

    TEST_CASE("field axioms on random triples") {
        std::mt19937_64 rng(11);
        for (Field F : {Field::prime(7), Field::rationals()}) {
            for (int k = 0; k < 300; ++k) {
                auto pick = [&] {
                    long n = static_cast<long>(rng() % 41) - 20;
                    long d = static_cast<long>(rng() % 6) + 1;
                    return FieldElem(F, Rational(n, d));
                };
                FieldElem a = pick(), b = pick(), c = pick();
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a + b == b + a);
                if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            }
        }
    }
}
