#include <doctest.h>

#include <set>

#include "ufdlab/claims.hpp"
#include "ufdlab/presentation_io.hpp"

using namespace ufdlab;
using nlohmann::json;

TEST_SUITE("claims") {
    TEST_CASE("registry ids are unique and documented") {
        std::set<std::string> ids;
        for (const auto& c : claim_registry()) {
            CHECK(ids.insert(c.id).second);
            CHECK_FALSE(c.anchor.empty());
            CHECK(c.defaults.is_object());
        }
        for (const char* id : {"samuel.kernel", "omega.z-relations", "omega.basis", "omega.confluence", "cex.m-order",
                               "cex.x-order", "cex.coords", "cex.sseq", "trinomial.validate"})
            CHECK(ids.count(id) == 1);
    }

    TEST_CASE("spec examples of run_claim") {
        auto sam = run_claim("samuel.kernel", json{{"field", "F5"}, {"a", "u"}, {"b", "v"}});
        CHECK(sam.status == Verdict::Verified);
        CHECK(sam.witness.at("tag_route_equal") == true);

        auto z = run_claim("omega.z-relations", json{{"i", 2}});
        CHECK(z.status == Verdict::Verified);

        auto mori = run_claim("trinomial.validate", json::object());
        CHECK(mori.status == Verdict::Verified);
        CHECK(mori.witness.at("steps").at(0).at("weights") == json{{"x", 3}, {"y", 2}});
    }

    TEST_CASE("report layout") {
        auto r = run_claim("cex.sseq", json{{"n", 5}, {"expect", {2, 3, 6, 24, 180}}});
        auto j = r.to_json();
        for (const char* k : {"claim_id", "params", "status", "bound", "witness", "elapsed_ms", "tool_version"})
            CHECK(j.contains(k));
        CHECK(j.at("status") == "verified");
        CHECK(j.at("bound").is_null());
        CHECK(j.at("tool_version") == UFDLAB_VERSION);
        CHECK(j.at("params").at("n") == 5);

        auto bad = run_claim("cex.sseq", json{{"n", 5}, {"expect", {2, 3, 6, 24, 181}}});
        CHECK(bad.status == Verdict::Refuted);
    }

    TEST_CASE("unknown verdicts carry a bound") {
        auto p = run_claim("condition-p", json::object());
        CHECK(p.status == Verdict::Unknown);
        REQUIRE(p.bound.has_value());
        CHECK(p.to_json().at("bound") == 3);
    }

    TEST_CASE("timeouts become unknown with bound timeout") {
        RunOptions o;
        o.timeout = std::chrono::milliseconds(0);
        auto r = run_claim("groebner.soundness", json::object(), o);
        CHECK(r.status == Verdict::Unknown);
        CHECK(r.to_json().at("bound") == "timeout");
    }

    TEST_CASE("deterministic apart from timing") {
        auto a = run_claim("omega.confluence", json::object()).to_json();
        auto b = run_claim("omega.confluence", json::object()).to_json();
        a.erase("elapsed_ms");
        b.erase("elapsed_ms");
        CHECK(a.dump() == b.dump());
    }

    TEST_CASE("usage errors") {
        CHECK_THROWS_AS(run_claim("no.such.claim", json::object()), UsageError);
        CHECK_THROWS_AS(run_claim("cex.sseq", json{{"bogus", 1}}), UsageError);
        CHECK_THROWS_AS(run_claim("cex.sseq", json{{"n", "five"}}), UsageError);
        CHECK_THROWS_WITH_AS(run_claim("samuel.kernel", json{{"a", "u*v"}, {"b", "u"}}),
                             doctest::Contains("relatively prime"), UsageError);
    }

    TEST_CASE("builder claims honour the expectation") {
        auto rej = run_claim("pham-brieskorn.validate", json{{"exponents", {2, 2, 3}}, {"expect", "rejected"}});
        CHECK(rej.status == Verdict::Verified);
        auto wrong = run_claim("pham-brieskorn.validate", json{{"exponents", {2, 2, 3}}});
        CHECK(wrong.status == Verdict::Refuted);
        auto jac = run_claim("jacobian.tangent", json{{"a", {1}}, {"expect", "rejected"}});
        CHECK(jac.status == Verdict::Verified);
        CHECK(exit_code({rej, jac}) == 0);
        CHECK(exit_code({rej, wrong}) == 1);
    }
}

TEST_SUITE("presentation_io") {
    TEST_CASE("cas-text of Pham-Brieskorn (2,3,5)") {
        auto pb = pham_brieskorn(Field::rationals(), {2, 3, 5});
        auto text = to_cas_text(pb.ring);
        CHECK(text.find("field: QQ\n") != std::string::npos);
        CHECK(text.find("variables: X1, X2, X3\n") != std::string::npos);
        CHECK(text.find("weights: X1=15, X2=10, X3=6\n") != std::string::npos);
        CHECK(text.find("relation: ") != std::string::npos);
    }

    TEST_CASE("empty-relation ring exports header and variables only") {
        auto r = free_ring(Field::prime(5), {"u", "v"});
        auto text = to_cas_text(r);
        CHECK(text.find("relation:") == std::string::npos);
        CHECK(text.find("weights:") == std::string::npos);
        CHECK(text.find("variables: u, v\n") != std::string::npos);
    }

    TEST_CASE("json round trip") {
        TrinomialData m;
        m.beta = {{2}, {3}, {5}};
        m.lambda = {FieldElem(Field::rationals(), 1L)};
        m.names = {{"x"}, {"y"}, {"z"}};
        for (const auto& ring : {trinomial_ring(m).ring, pham_brieskorn(Field::prime(7), {2, 3, 5}).ring,
                                 free_ring(Field::rationals(), {"a"})}) {
            auto j = to_json(ring);
            auto back = presentation_from_json(j);
            CHECK(to_json(back) == j);
            CHECK(back.relations == ring.relations);
        }
        auto mj = to_json(trinomial_ring(m).ring);
        CHECK(mj.dump().find("(D.1)") != std::string::npos);
        CHECK(mj.dump().find("(D.3)") != std::string::npos);
    }

    TEST_CASE("builder specs") {
        auto s = ring_from_spec(json{{"builder", "samuel-extension"}, {"field", "F5"}, {"variables", {"u", "v"}},
                                     {"a", "u"}, {"b", "v"}});
        CHECK(s.relations.size() == 1);
        auto t = ring_from_spec(json{{"builder", "threefold"}, {"field", "F5"}, {"p", {"x"}}, {"a", {2}}, {"b", {3}}});
        CHECK(t.vars->size() == 4);
        CHECK_THROWS_AS(ring_from_spec(json{{"builder", "nope"}}), Error);
    }
}
