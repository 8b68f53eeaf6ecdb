#include <doctest.h>

#include <random>

#include "ufdlab/omega.hpp"

using namespace ufdlab;

namespace {

const Field Q = Field::rationals();

OmegaPoly P(const std::string& s) { return OmegaPoly::parse(s, Q); }

OmegaMonomial random_monomial(std::mt19937_64& rng, int max_size, int max_index) {
    std::vector<Int> e(max_index + 1, 0);
    int size = 1 + static_cast<int>(rng() % max_size);
    for (int k = 0; k < size; ++k) e[rng() % (max_index + 1)] += 1;
    return OmegaMonomial::make(Int(static_cast<long>(rng() % 4)), e);
}

}  // namespace

TEST_SUITE("omega") {
    TEST_CASE("sigma examples") {
        CHECK(sigma(0).to_string() == "1");
        CHECK(sigma(5).to_string() == "z0*z2");
        for (int k = 0; k < 10; ++k) {
            auto m = sigma(Int(1) << k);
            CHECK(m.to_string() == "z" + std::to_string(k));
        }
        for (int d = 0; d < 64; ++d) {
            CHECK(sigma(d).degree() == d);
            CHECK(sigma(d).squarefree());
        }
        CHECK_THROWS_AS(sigma(-1), Error);
    }

    TEST_CASE("normal_form examples") {
        auto nf = normal_form(P("z0^2"));
        CHECK(to_poly(nf, Q) == P("-z1 - x^2*z2"));
        REQUIRE(nf.size() == 1);
        CHECK(nf.begin()->first == 2);

        auto x3 = normal_form(P("x^3"));
        REQUIRE(x3.size() == 1);
        CHECK(x3.begin()->first == -3);
        REQUIRE(x3.begin()->second.entries.size() == 1);
        CHECK(x3.begin()->second.entries[0].m == 3);
        CHECK(x3.begin()->second.entries[0].n == 0);
        CHECK(x3.begin()->second.entries[0].coeff.is_one());

        CHECK(to_poly(normal_form(P("z1 + z0^2")), Q) == P("-x^2*z2"));
    }

    TEST_CASE("in_x_omega and the z-relations") {
        CHECK_FALSE(in_x_omega(P("z0")));
        CHECK(in_x_omega(P("z1 + z0^2")));
        for (int i = 1; i <= 3; ++i) {
            Int pw = Int(1) << i;
            CHECK(in_x_omega(P("z" + std::to_string(i) + " + z0^" + pw.get_str())));
        }
        for (int i = 0; i <= 4; ++i) CHECK_FALSE(in_x_omega(P("z" + std::to_string(i))));
        std::mt19937_64 rng(2);
        for (int k = 0; k < 20; ++k) {
            auto m = OmegaPoly::monomial(Q, random_monomial(rng, 4, 3), FieldElem(Q, 1L));
            CHECK(in_x_omega(P("x") * m));
        }
    }

    TEST_CASE("x_adic_floor examples") {
        CHECK(x_adic_floor(P("z0")) == 0);
        CHECK(x_adic_floor(P("x^2*z2")) == 2);
        CHECK(x_adic_floor(P("z1 + z0^2")) == 2);
        CHECK_THROWS_WITH_AS(x_adic_floor(OmegaPoly(Q)), "zero has infinite order", Error);
    }

    TEST_CASE("degree preservation and pivot independence") {
        std::mt19937_64 rng(1);
        for (int k = 0; k < 100; ++k) {
            auto m = random_monomial(rng, 6, 4);
            auto p = OmegaPoly::monomial(Q, m, FieldElem(Q, 1L));
            auto a = normal_form(p, Pivot::Largest);
            auto b = normal_form(p, Pivot::Smallest);
            CHECK(a == b);
            CHECK(to_string(a, Q) == to_string(b, Q));
            REQUIRE(a.size() <= 1);
            if (!a.empty()) {
                CHECK(a.begin()->first == m.degree());
                const auto& entries = a.begin()->second.entries;
                for (std::size_t i = 0; i < entries.size(); ++i) {
                    CHECK(entries[i].n - entries[i].m == m.degree());
                    if (i) CHECK(entries[i - 1].m < entries[i].m);
                }
            }
        }
    }

    TEST_CASE("linearity") {
        std::mt19937_64 rng(4);
        for (int k = 0; k < 30; ++k) {
            auto p = OmegaPoly::monomial(Q, random_monomial(rng, 5, 3), FieldElem(Q, 2L)) +
                     OmegaPoly::monomial(Q, random_monomial(rng, 5, 3), FieldElem(Q, -1L));
            auto q = OmegaPoly::monomial(Q, random_monomial(rng, 5, 3), FieldElem(Q, 3L));
            CHECK(to_poly(normal_form(p + q), Q) == to_poly(normal_form(p), Q) + to_poly(normal_form(q), Q));
        }
    }

    TEST_CASE("truncated separation") {
        std::mt19937_64 rng(6);
        int checked = 0;
        for (int k = 0; k < 50; ++k) {
            auto p = OmegaPoly::monomial(Q, random_monomial(rng, 4, 3), FieldElem(Q, 1L)) +
                     OmegaPoly::monomial(Q, random_monomial(rng, 4, 3), FieldElem(Q, 1L));
            if (to_poly(normal_form(p), Q).is_zero()) continue;
            ++checked;
            Int f = x_adic_floor(p);
            CHECK(f >= 0);
            auto shifted = P("x") * p;
            CHECK(x_adic_floor(shifted) == f + 1);
            if (f >= 1) CHECK(in_x_omega(p));
        }
        CHECK(checked > 0);
    }

    TEST_CASE("binomials vanishing over F_p stay correct") {
        Field F2 = Field::prime(2);
        auto p = OmegaPoly::parse("z0^4", F2);
        auto q = OmegaPoly::parse("z0^2", F2);
        CHECK(to_poly(normal_form(p), F2) == to_poly(normal_form(q * q), F2));
        CHECK(to_poly(normal_form(p), F2) == to_poly(normal_form(to_poly(normal_form(q), F2) * to_poly(normal_form(q), F2)), F2));
    }

    TEST_CASE("index cap") {
        CHECK_THROWS_AS(P("z65"), Error);
    }
}
