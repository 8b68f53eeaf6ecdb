#include <doctest.h>

#include "ufdlab/counterexample.hpp"

using namespace ufdlab;

TEST_SUITE("counterexample") {
    TEST_CASE("s_sequence") {
        CHECK(s_sequence(2) == std::vector<Int>{2, 3});
        CHECK(s_sequence(4) == std::vector<Int>{2, 3, 6, 24});
        CHECK(s_sequence(5) == std::vector<Int>{2, 3, 6, 24, 180});
        auto s = s_sequence(9);
        for (int n = 3; n <= 9; ++n) {
            Int prod = 1;
            for (int i = 1; i <= n - 2; ++i) prod *= s[i - 1];
            CHECK(s[n - 1] == n * prod);
        }
    }

    TEST_CASE("expand_z0") {
        auto e0 = expand_z0(0);
        CHECK(e0.expansion == e0.ring.Z(0));

        auto e1 = expand_z0(1);
        CHECK(e1.expansion == parse_polynomial("x*Z2 + y^2*Z1^3", e1.ring.vars, Field::rationals()));
        CHECK(e1.identity_holds);

        for (int d = 0; d <= 3; ++d) {
            auto e = expand_z0(d);
            CHECK(e.identity_holds);
            CHECK(e.min_order >= d);
            if (d <= 2) CHECK(expansion_in_ideal(e));
        }
        CHECK_THROWS_AS(expand_z0(4), InstanceTooLarge);
    }

    TEST_CASE("m-order certificates") {
        auto c0 = m_order_certificate(0);
        CHECK(c0.accepted);
        CHECK(c0.log.empty());

        auto c1 = m_order_certificate(1);
        CHECK(c1.accepted);
        CHECK(c1.log.size() == 1);
        CHECK(c1.exact_check == true);

        for (int n = 0; n <= 10; ++n) {
            auto c = m_order_certificate(n);
            CHECK(c.accepted);
            CHECK(c.min_order >= n);
            CHECK(c.log.size() == static_cast<std::size_t>(n));
            for (const auto& round : c.log)
                for (const auto& w : round.rewrites) CHECK(w.increment == 1);
            if (n <= 3) CHECK(c.exact_check == true);
        }
        CHECK_THROWS_AS(m_order_certificate(33), Error);
    }

    TEST_CASE("x-order certificates in B'") {
        auto e = expand_z0(1, Field::rationals(), true);
        CHECK(e.expansion == parse_polynomial("x*Z2 + x^2*T^2*Z1^3", e.ring.vars, Field::rationals()));
        for (int n = 0; n <= 10; ++n) {
            auto c = x_order_certificate_bprime(n);
            CHECK(c.accepted);
            CHECK(c.ideal == "xB'");
            if (n <= 2) CHECK(c.exact_check == true);
        }
    }

    TEST_CASE("coordinate checks") {
        for (int n = 0; n <= 3; ++n) CHECK(coordinate_checks(n).all());
    }
}
