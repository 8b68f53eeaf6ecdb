// Acceptance driver: prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>


#include "ufdlab/claims.hpp"
#include "ufdlab/counterexample.hpp"
#include "ufdlab/omega.hpp"

using namespace ufdlab;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

/// Accumulates sub-check failures for one criterion.
struct Checks {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void verified(const ClaimReport& r, const std::string& what) {
        expect(r.status == Verdict::Verified, what + " (status " + to_string(r.status) + ")");
    }
};

bool run_criterion(int number, const std::string& title, double limit_s, const std::function<void(Checks&)>& body) {
    Checks checks;
    auto start = Clock::now();
    try {
        body(checks);
    } catch (const std::exception& e) {
        checks.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    checks.expect(secs < limit_s, "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit_s) + " s");
    bool ok = checks.failures.empty();
    std::printf("%s criterion %d: %s (%.3f s)\n", ok ? "PASS" : "FAIL", number, title.c_str(), secs);
    for (const auto& f : checks.failures) std::printf("    - %s\n", f.c_str());
    std::fflush(stdout);
    return ok;
}

Ideal ideal_of(const VarTablePtr& vars, Field f, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_polynomial(g, vars, f));
    return Ideal(vars, f, ps);
}

/// (u, v)^i as an explicit monomial ideal.
Ideal power_of_maximal(const VarTablePtr& vars, Field f, int i) {
    std::vector<std::string> gens;
    for (int k = 0; k <= i; ++k)
        gens.push_back("u^" + std::to_string(k) + "*v^" + std::to_string(i - k));
    return ideal_of(vars, f, gens);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    const Field F5 = Field::prime(5);
    bool all = true;

    all &= run_criterion(1, "Groebner soundness", 10.0, [&](Checks& c) {
        auto r = run_claim("groebner.soundness", json{{"field", "F5"}, {"seed", 1}, {"ideals", 20}, {"queries", 100},
                                                      {"max_vars", 3}, {"max_gens", 4}, {"max_degree", 3},
                                                      {"bound", 6}});
        c.verified(r, "groebner.soundness");
        c.expect(r.witness.value("ideals", 0) == 20, "20 ideals examined");
        c.expect(r.witness.value("agreements", 0) == 100, "100 membership agreements");
        c.expect(r.witness.value("failures", json::array()).empty(), "no S-polynomial or membership failures");
    });

    all &= run_criterion(2, "prime avoidance over [-6,6]^4", 5.0, [&](Checks& c) {
        std::size_t tuples = 0;
        for (long a1 = -6; a1 <= 6; ++a1)
            for (long a2 = -6; a2 <= 6; ++a2)
                for (long b = -6; b <= 6; ++b)
                    for (long cc = -6; cc <= 6; ++cc) {
                        if (cc == 0) continue;
                        std::vector<Int> all4{Int(a1), Int(a2), Int(b), Int(cc)};
                        if (gcd_of(all4) != 1) continue;
                        std::vector<Int> a{Int(a1), Int(a2)};
                        auto m = prime_avoid(a, Int(b), Int(cc));
                        Int s = Int(b) + m.at(0) * a[0] + m.at(1) * a[1];
                        std::vector<Int> pair{Int(cc), s};
                        ++tuples;
                        if (gcd_of(pair) != 1) {
                            c.expect(false, "gcd(c, b + sum m_i a_i) != 1 at (" + std::to_string(a1) + "," +
                                                std::to_string(a2) + "," + std::to_string(b) + "," +
                                                std::to_string(cc) + ")");
                            return;
                        }
                    }
        c.expect(tuples > 0, "tuples enumerated");
        c.verified(run_claim("coeff.prime-avoid", json{{"range", 6}}), "coeff.prime-avoid");
    });

    all &= run_criterion(3, "Samuel kernel saturation over F5[u,v,X]", 1.0, [&](Checks& c) {
        auto vars = make_vars({"u", "v", "X"});
        auto I = ideal_of(vars, F5, {"u*X - v"});
        auto sat = saturation(I, parse_polynomial("u", vars, F5));
        c.expect(sat.stabilized, "saturation stabilised");
        c.expect(ideal_equal(sat.ideal, I), "(uX - v : u^inf) == (uX - v)");
        c.verified(run_claim("samuel.kernel", json{{"field", "F5"}, {"variables", {"u", "v"}}, {"a", "u"}, {"b", "v"}}),
                   "samuel.kernel");
    });

    all &= run_criterion(4, "W-chain against the lemma", 5.0, [&](Checks& c) {
        {
            auto vars = make_vars({"u", "v", "w"});
            auto ch = w_chain(vars, F5, parse_polynomial("u", vars, F5), parse_polynomial("v", vars, F5),
                              parse_polynomial("w", vars, F5), 5);
            for (int i = 0; i <= 5; ++i)
                c.expect(ideal_equal(ch.W.at(i), power_of_maximal(vars, F5, i)),
                         "(u,v,w): W_" + std::to_string(i) + " == (u,v)^" + std::to_string(i));
        }
        {
            auto vars = make_vars({"u", "v"});
            auto ch = w_chain(vars, F5, parse_polynomial("u", vars, F5), parse_polynomial("v", vars, F5),
                              Polynomial::constant(vars, F5, 1), 5);
            for (int i = 0; i <= 5; ++i) {
                auto expected_w = i == 0 ? Ideal::unit(vars, F5) : ideal_of(vars, F5, {"u", "v^" + std::to_string(i)});
                c.expect(ideal_equal(ch.W.at(i), expected_w),
                         "(u,v,1): W_" + std::to_string(i) + " == (u) + (v^" + std::to_string(i) + ")");
                c.expect(ch.J.at(i).is_unit(), "(u,v,1): J_" + std::to_string(i) + " == (1)");
            }
        }
    });

    all &= run_criterion(5, "level-wise elimination for (u, v, u+v)", 10.0, [&](Checks& c) {
        auto vars = make_vars({"u", "v"});
        auto s = parse_polynomial("u", vars, F5), t = parse_polynomial("v", vars, F5);
        auto b = parse_polynomial("u+v", vars, F5);
        auto chain = w_chain(vars, F5, b, s, t, 4);
        auto ext = make_vars({"u", "v", "X"});
        for (int i = 0; i <= 4; ++i) {
            auto I = ideal_of(ext, F5, {"u^" + std::to_string(i), "u*v*X - (u+v)"});
            auto E = elim_ideal(I, {"u", "v"});
            std::vector<std::string> gens;
            for (const auto& g : chain.W.at(i).gens()) gens.push_back(g.to_string());
            c.expect(ideal_equal(E, ideal_of(ext, F5, gens)), "level " + std::to_string(i));
        }
        auto lc = lemma_level_check(vars, F5, s, t, b, 4);
        c.expect(lc.holds() && lc.levels.size() == 5, "library level check");
    });

    all &= run_criterion(6, "Omega rewriting suite", 20.0, [&](Checks& c) {
        auto nf = normal_form(OmegaPoly::parse("z0^2", Field::rationals()));
        c.expect(to_string(nf, Field::rationals()) == "-z1 - x^2*z2", "normal_form(z0^2) == -z1 - x^2*z2");
        for (int i = 1; i <= 3; ++i) {
            auto e = OmegaPoly::parse("z" + std::to_string(i) + " + z0^" + std::to_string(1 << i), Field::rationals());
            c.expect(in_x_omega(e), "z_i + z0^(2^i) in x*Omega for i = " + std::to_string(i));
        }
        for (int i = 0; i <= 4; ++i)
            c.expect(!in_x_omega(OmegaPoly::parse("z" + std::to_string(i), Field::rationals())),
                     "z_i not in x*Omega for i = " + std::to_string(i));
        auto conf = run_claim("omega.confluence",
                              json{{"seed", 1}, {"count", 100}, {"max_size", 6}, {"max_index", 4}});
        c.verified(conf, "omega.confluence");
        c.expect(conf.witness.value("monomials", 0) == 100, "100 monomials");
        c.verified(run_claim("omega.z-relations", json{{"max_i", 3}, {"max_outside", 4}}), "omega.z-relations");
    });

    all &= run_criterion(7, "counterexample certificates", 30.0, [&](Checks& c) {
        for (int n = 0; n <= 10; ++n) {
            auto m = m_order_certificate(n);
            c.expect(m.accepted && m.min_order >= n, "m-order certificate n = " + std::to_string(n));
            if (n <= 3) c.expect(m.exact_check == true, "m-order exact cross-check n = " + std::to_string(n));
            auto x = x_order_certificate_bprime(n);
            c.expect(x.accepted && x.min_order >= n, "x-order certificate n = " + std::to_string(n));
            if (n <= 2) c.expect(x.exact_check == true, "x-order exact cross-check n = " + std::to_string(n));
        }
        for (int n = 1; n <= 3; ++n)
            c.expect(coordinate_checks(n).all(), "coordinate checks n = " + std::to_string(n));
        auto s = s_sequence(5);
        std::vector<Int> want{Int(2), Int(3), Int(6), Int(24), Int(180)};
        c.expect(s == want, "s_sequence(5) == [2,3,6,24,180]");
    });

    all &= run_criterion(8, "Jacobian tangent dimension", 1.0, [&](Checks& c) {
        ThreefoldData d;
        d.p = {"x"};
        d.u = {FieldElem(d.field, 1L)};
        d.v = {FieldElem(d.field, 1L)};
        d.a = {2};
        d.b = {3};
        auto t = jacobian_tangent_dim(d, "x");
        c.expect(t.rank == 0, "rank 0");
        c.expect(t.tangent_dim == 4, "tangent dimension 4 = n + 3");
        d.a = {1};
        bool rejected = false;
        try {
            jacobian_tangent_dim(d, "x");
        } catch (const Error&) {
            rejected = true;
        }
        c.expect(rejected, "a_1 = 1 rejected at precondition");
    });

    all &= run_criterion(9, "trinomial and Pham-Brieskorn builders", 10.0, [&](Checks& c) {
        TrinomialData m;
        m.beta = {{2}, {3}, {5}};
        m.lambda = {FieldElem(m.field, 1L)};
        m.names = {{"x"}, {"y"}, {"z"}};
        auto rep = trinomial_ring(m);
        c.expect(rep.holds(), "Mori data validates");
        c.expect(rep.steps.size() == 1, "one grading step");
        if (!rep.steps.empty()) {
            const auto& st = rep.steps[0];
            std::vector<std::pair<std::string, Int>> w{{"x", Int(3)}, {"y", Int(2)}};
            c.expect(st.weights == w, "deg x = 3, deg y = 2");
            c.expect(st.relation_degree == 6, "relation degree 6");
            c.expect(st.gcd == 1, "gcd(5, 6) = 1");
        }
        bool rejected = false;
        try {
            pham_brieskorn(Field::rationals(), {2, 2, 3});
        } catch (const Error&) {
            rejected = true;
        }
        c.expect(rejected, "(2,2,3) rejected");
        c.expect(pham_brieskorn(Field::rationals(), {2, 3, 4, 5}).hypothesis_case == 1, "(2,3,4,5) under case (1)");
        auto vars = make_vars({"x", "y"});
        auto irr = brute_force_irreducible(parse_polynomial("x^2 + y^3", vars, F5), 2);
        c.expect(irr.irreducible, "x^2 + y^3 irreducible over F5 at bound 2");
    });

    all &= run_criterion(10, "CLI run-all over the acceptance fixtures", 120.0, [&](Checks& c) {
        const std::string out = std::string(UFDLAB_ACCEPTANCE_WORKDIR) + "/acceptance_suite.json";
        const std::string cmd = std::string("\"") + UFDLAB_CLI_PATH + "\" claim run-all --suite acceptance --fixtures \"" +
                                UFDLAB_FIXTURE_DIR + "\" --out \"" + out + "\" 2>/dev/null";
        int rc = std::system(cmd.c_str());
        c.expect(rc == 0, "run-all exit status 0 (got " + std::to_string(rc) + ")");
        json doc = json::parse(read_file(out), nullptr, false);
        c.expect(!doc.is_discarded(), "output is JSON");
        if (!doc.is_discarded()) {
            std::size_t n = doc.value("reports", json::array()).size();
            c.expect(n >= 9, "reports cover every fixture claim");
        }
        const std::string validate = std::string("python3 \"") + UFDLAB_VALIDATOR + "\" \"" + UFDLAB_SCHEMA_DIR +
                                     "/claim_report.schema.json\" \"" + out + "\"";
        c.expect(std::system(validate.c_str()) == 0, "output is schema-valid");
    });

    return all ? 0 : 1;
}
