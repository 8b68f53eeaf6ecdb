#include <doctest.h>

#include <random>

#include "ufdlab/constructions.hpp"

using namespace ufdlab;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

Ideal ideal(const VarTablePtr& vars, Field field, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> g;
    for (const char* s : gens) g.push_back(parse_polynomial(s, vars, field));
    return Ideal(vars, field, g);
}

bool graded_and_homogeneous(const PresentedRing& r) {
    if (!r.grading) return false;
    for (const auto& rel : r.relations)
        if (!degree_of(rel, *r.grading)) return false;
    return true;
}

}  // namespace

TEST_SUITE("constructions") {
    TEST_CASE("present_extension examples") {
        auto A = free_ring(F5, {"u", "v"});
        auto ext = present_extension(A, A.parse("u"), A.parse("v"));
        CHECK(ext.saturation_equal);
        REQUIRE(ext.ring.relations.size() == 1);
        CHECK(ext.ring.relations[0] == ext.ring.parse("u*X - v"));

        auto A1 = free_ring(F5, {"u"});
        auto triv = present_extension(A1, A1.parse("1"), A1.parse("u"));
        CHECK(triv.saturation_equal);
        CHECK(triv.ring.relations[0] == triv.ring.parse("X - u"));

        auto e2 = present_extension(A, A.parse("u*v"), A.parse("u + v"));
        CHECK(e2.saturation_equal);
    }

    TEST_CASE("present_extension rejects non relatively prime pairs") {
        auto A = free_ring(F5, {"u", "v"});
        CHECK_THROWS_AS(present_extension(A, A.parse("u*v"), A.parse("u")), Error);
        auto rp = relatively_prime(A, A.parse("u*v"), A.parse("u"));
        CHECK_FALSE(rp.holds);
        REQUIRE(rp.witness.has_value());
    }

    TEST_CASE("present_extension grading") {
        auto A = free_ring(Q, {"u", "v"}, std::vector<Int>{1, 1});
        auto ext = present_extension(A, A.parse("u"), A.parse("v^3"));
        REQUIRE(ext.ring.grading.has_value());
        CHECK(ext.ring.grading->weight(ext.ring.vars->index("X")) == 2);
        CHECK(graded_and_homogeneous(ext.ring));
    }

    TEST_CASE("condition P examples") {
        auto A = free_ring(F5, {"u", "v"});
        auto rep = check_condition_P(A, A.parse("u"), A.parse("v"), {A.parse("u")}, 4);
        CHECK(rep.i.verdict == Verdict::Verified);
        CHECK(rep.iii.verdict == Verdict::Verified);
        CHECK(rep.iii.witness == "there are no non-associate pairs");
        CHECK(rep.ii.verdict == Verdict::Unknown);
        REQUIRE(rep.ii.bound.has_value());
        CHECK(*rep.ii.bound == 4);
        CHECK(rep.iv.verdict == Verdict::Verified);
        CHECK(rep.iv.truncated);
        CHECK(rep.overall() == Verdict::Unknown);

        auto unit = check_condition_P(A, A.parse("3"), A.parse("v"), {}, 2);
        CHECK(unit.overall() == Verdict::Verified);

        auto bad = check_condition_P(A, A.parse("u*v"), A.parse("u"), {A.parse("u"), A.parse("v")}, 2);
        CHECK(bad.i.verdict == Verdict::Refuted);
        CHECK(bad.overall() == Verdict::Refuted);

        CHECK_THROWS_AS(check_condition_P(A, A.parse("u*v"), A.parse("u + 1"), {A.parse("u")}, 2), Error);
    }

    TEST_CASE("w_chain examples") {
        auto V = make_vars({"u", "v", "w"});
        auto P = [&](const char* s) { return parse_polynomial(s, V, F5); };
        auto c = w_chain(V, F5, P("u"), P("v"), P("w"), 3);
        CHECK(c.nested);
        Ideal uv = ideal(V, F5, {"u", "v"});
        for (unsigned i = 0; i <= 3; ++i) CHECK(ideal_equal(c.W[i], uv.pow(i)));

        auto uuu = w_chain(V, F5, P("u"), P("u"), P("u"), 2);
        CHECK(ideal_equal(uuu.W[1], ideal(V, F5, {"u"})));
        CHECK(uuu.J[1].is_unit());
        CHECK(ideal_equal(uuu.W[2], ideal(V, F5, {"u"})));
    }

    TEST_CASE("w_chain lemma cases") {
        auto V = make_vars({"u", "v", "w"});
        auto P = [&](const char* s) { return parse_polynomial(s, V, F5); };
        auto reg = w_chain_lemma_check(V, F5, P("u"), P("v"), P("w"), 3);
        CHECK(reg.hypothesis == "regular-sequence");
        CHECK(reg.holds());

        // t in every bA + s^i A: W_i = (b, s^i), J_i = A
        auto a = w_chain_lemma_check(V, F5, P("u"), P("v"), P("u"), 3);
        CHECK(a.hypothesis == "t-in-intersection");
        CHECK(a.holds());
        auto ca = w_chain(V, F5, P("u"), P("v"), P("u"), 3);
        CHECK(ideal_equal(ca.W[3], ideal(V, F5, {"u", "v^3"})));

        // t a unit: J_i = W_i and W_i = (b, s)^i
        auto unit = w_chain_lemma_check(V, F5, P("u"), P("v"), P("1"), 3);
        CHECK(unit.hypothesis == "comaximal");
        CHECK(unit.holds());
        auto cu = w_chain(V, F5, P("u"), P("v"), P("1"), 2);
        CHECK(ideal_equal(cu.W[2], ideal(V, F5, {"u^2", "u*v", "v^2"})));
        CHECK_FALSE(cu.J[1].is_unit());
    }

    TEST_CASE("lemma_level_check examples") {
        auto V = make_vars({"u", "v"});
        auto P = [&](const char* s) { return parse_polynomial(s, V, F5); };
        CHECK(lemma_level_check(V, F5, P("u"), P("v"), P("u + v"), 3).holds());
        CHECK(lemma_level_check(V, F5, P("1"), P("v"), P("u + v"), 2).holds());
        CHECK_THROWS_AS(lemma_level_check(V, F5, P("u"), P("v"), P("v^2"), 2), Error);
    }

    TEST_CASE("radical_extension examples") {
        auto A = free_ring(F5, {"X1", "X2"}, std::vector<Int>{3, 2});
        auto B = radical_extension(A, A.parse("-X1^2 - X2^3"), 5);
        REQUIRE(B.grading.has_value());
        CHECK(B.grading->weight(0) == 15);
        CHECK(B.grading->weight(1) == 10);
        CHECK(B.grading->weight(B.vars->index("Z")) == 6);
        CHECK(graded_and_homogeneous(B));

        auto B1 = radical_extension(A, A.parse("X1^2 + X2^3"), 1);
        CHECK(B1.relations.back() == B1.parse("Z - X1^2 - X2^3"));

        auto C = free_ring(F5, {"x", "y"}, std::vector<Int>{1, 1});
        CHECK_THROWS_WITH_AS(radical_extension(C, C.parse("x + y^2"), 3), "F not homogeneous", Error);
        CHECK_THROWS_AS(radical_extension(A, A.parse("X1^2 + X2^3"), 4), Error);
        CHECK_THROWS_AS(radical_extension(free_ring(F5, {"x"}), C.parse("x"), 3), Error);
    }

    TEST_CASE("pham_brieskorn examples") {
        auto pb = pham_brieskorn(Q, {2, 3, 5});
        CHECK(pb.hypothesis_case == 2);
        CHECK(pb.omega == 6);
        CHECK(pb.ring.grading->weight(0) == 15);
        CHECK(pb.ring.grading->weight(1) == 10);
        CHECK(pb.ring.grading->weight(2) == 6);
        CHECK(graded_and_homogeneous(pb.ring));

        CHECK_THROWS_AS(pham_brieskorn(Q, {2, 2, 3}), Error);
        auto four = pham_brieskorn(Q, {2, 3, 4, 5});
        CHECK(four.hypothesis_case == 1);
        CHECK(graded_and_homogeneous(four.ring));
        CHECK_THROWS_AS(pham_brieskorn(Q, {2, 3, 4, 6}), Error);
    }

    TEST_CASE("fourth_criterion") {
        auto A = free_ring(Q, {"u", "v"}, std::vector<Int>{1, 1});
        auto fc = fourth_criterion(A, A.parse("u"), A.parse("v^2"), 3);
        CHECK(fc.deg_x == 1);
        CHECK(graded_and_homogeneous(fc.ring));
        CHECK_THROWS_AS(fourth_criterion(A, A.parse("u"), A.parse("v^3"), 2), Error);
    }

    TEST_CASE("fifth_weights examples") {
        std::vector<Int> e{2, 3};
        auto w = fifth_weights(6, e);
        REQUIRE(w.m.size() == 1);
        std::vector<Int> pair{3, Int(6) - 2 * w.m[0]};
        CHECK(gcd_of(pair) == 1);
        CHECK(w.check == Int(6) - 2 * w.m[0]);

        std::vector<Int> one{5};
        auto w1 = fifth_weights(6, one);
        CHECK(w1.m.empty());
        CHECK(w1.check == 6);

        std::vector<Int> bad{2, 2};
        CHECK_THROWS_AS(fifth_weights(4, bad), Error);
    }

    TEST_CASE("threefold family examples") {
        ThreefoldData d;
        d.field = F5;
        d.p = {"x"};
        d.u = {FieldElem(F5, 1L)};
        d.v = {FieldElem(F5, 1L)};
        d.a = {2};
        d.b = {3};
        d.kappa = "x";
        auto rep = threefold_family(d);
        CHECK(rep.kappa_shape == true);
        CHECK(rep.zn_outside == true);

        auto bad = d;
        bad.b = {2};
        CHECK_THROWS_AS(threefold_family(bad), Error);

        auto two = d;
        two.p = {"x", "x^2"};
        two.u = {FieldElem(F5, 1L), FieldElem(F5, 1L)};
        two.v = two.u;
        two.a = {2, 5};
        two.b = {3, 2};
        CHECK_NOTHROW(threefold_family(two));
        two.p = {"x", "x + 1"};
        two.kappa.reset();
        CHECK_THROWS_AS(threefold_family(two), Error);
    }

    TEST_CASE("jacobian_tangent_dim examples") {
        ThreefoldData d;
        d.p = {"x"};
        d.u = {FieldElem(Q, 1L)};
        d.v = {FieldElem(Q, 1L)};
        d.a = {2};
        d.b = {3};
        auto t = jacobian_tangent_dim(d, "x");
        CHECK(t.rank == 0);
        CHECK(t.tangent_dim == 4);

        ThreefoldData d2 = d;
        d2.p = {"x", "x"};
        d2.u = {FieldElem(Q, 1L), FieldElem(Q, 1L)};
        d2.v = d2.u;
        d2.a = {2, 5};
        d2.b = {3, 2};
        auto t2 = jacobian_tangent_dim(d2, "x");
        CHECK(t2.rank == 0);
        CHECK(t2.tangent_dim == 5);

        ThreefoldData d3 = d;
        d3.a = {1};
        CHECK_THROWS_AS(jacobian_tangent_dim(d3, "x"), Error);
    }

    TEST_CASE("trinomial_ring examples") {
        TrinomialData m;
        m.beta = {{2}, {3}, {5}};
        m.lambda = {FieldElem(Q, 1L)};
        m.names = {{"x"}, {"y"}, {"z"}};
        auto rep = trinomial_ring(m);
        CHECK(rep.holds());
        REQUIRE(rep.steps.size() == 1);
        const auto& s = rep.steps[0];
        CHECK(s.relation_degree == 6);
        CHECK(s.gcd == 1);
        CHECK(s.weights[0] == std::pair<std::string, Int>("x", 3));
        CHECK(s.weights[1] == std::pair<std::string, Int>("y", 2));

        TrinomialData bad = m;
        bad.beta = {{2}, {4}, {3}};
        CHECK_THROWS_WITH_AS(trinomial_ring(bad), doctest::Contains("(D.2)"), Error);

        TrinomialData block;
        block.beta = {{2, 3}, {5}, {7}};
        block.lambda = {FieldElem(Q, 1L)};
        auto br = trinomial_ring(block);
        CHECK(br.d[0] == 1);
        CHECK(br.steps[0].homogeneous);
        CHECK(br.steps[0].weights[0].second == -5);
        CHECK(br.steps[0].weights[1].second == 5);

        TrinomialData lam = m;
        lam.beta = {{2}, {3}, {5}, {7}};
        lam.lambda = {FieldElem(Q, 2L), FieldElem(Q, 2L)};
        lam.names.clear();
        CHECK_THROWS_WITH_AS(trinomial_ring(lam), doctest::Contains("(D.3)"), Error);
    }

    TEST_CASE("trinomial_ring accepts exactly the valid data") {
        std::mt19937_64 rng(23);
        for (int k = 0; k < 60; ++k) {
            TrinomialData d;
            std::size_t r = 2 + rng() % 2;
            for (std::size_t i = 0; i <= r; ++i) {
                std::vector<long> b;
                std::size_t len = 1 + rng() % 2;
                for (std::size_t j = 0; j < len; ++j) b.push_back(1 + static_cast<long>(rng() % 6));
                d.beta.push_back(b);
            }
            for (std::size_t i = 2; i <= r; ++i) d.lambda.push_back(FieldElem(Q, 1 + static_cast<long>(rng() % 3)));
            std::vector<Int> ds;
            for (const auto& b : d.beta) {
                std::vector<Int> v(b.begin(), b.end());
                ds.push_back(gcd_of(v));
            }
            bool valid = true;
            for (std::size_t i = 0; i < ds.size(); ++i)
                for (std::size_t j = i + 1; j < ds.size(); ++j) {
                    std::vector<Int> pr{ds[i], ds[j]};
                    if (gcd_of(pr) != 1) valid = false;
                }
            for (std::size_t i = 0; i < d.lambda.size(); ++i)
                for (std::size_t j = 0; j < i; ++j)
                    if (d.lambda[i] == d.lambda[j]) valid = false;
            if (valid) {
                auto rep = trinomial_ring(d);
                CHECK(rep.holds());
            } else {
                CHECK_THROWS_AS(trinomial_ring(d), Error);
            }
        }
    }
}
