#include "ufdlab/claims.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ufdlab/counterexample.hpp"
#include "ufdlab/omega.hpp"
#include "ufdlab/presentation_io.hpp"

namespace ufdlab {

using nlohmann::json;

json ClaimReport::to_json() const {
    json j;
    j["claim_id"] = claim_id;
    j["params"] = params;
    j["status"] = ufdlab::to_string(status);
    if (!bound)
        j["bound"] = nullptr;
    else if (std::holds_alternative<long long>(*bound))
        j["bound"] = std::get<long long>(*bound);
    else
        j["bound"] = std::get<std::string>(*bound);
    j["witness"] = witness;
    j["elapsed_ms"] = elapsed_ms;
    j["tool_version"] = tool_version;
    return j;
}

int exit_code(const std::vector<ClaimReport>& reports) {
    bool unknown = false;
    for (const auto& r : reports) {
        if (r.status == Verdict::Refuted) return 1;
        if (r.status == Verdict::Unknown) unknown = true;
    }
    return unknown ? 2 : 0;
}

namespace {

// ---------------------------------------------------------------------------
// parameter helpers

Field field_param(const json& p) { return Field::parse(p.at("field").get<std::string>()); }

VarTablePtr vars_param(const json& p) { return make_vars(p.at("variables").get<std::vector<std::string>>()); }

Polynomial poly_param(const json& p, const char* key, const VarTablePtr& vars, Field field) {
    return parse_polynomial(p.at(key).get<std::string>(), vars, field);
}

int int_param(const json& p, const char* key, int lo, int hi) {
    int v = p.at(key).get<int>();
    if (v < lo || v > hi)
        throw UsageError("parameter \"" + std::string(key) + "\" must lie in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "], got " + std::to_string(v));
    return v;
}

Int int_value(const json& v) {
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_string()) return Int(v.get<std::string>());
    throw UsageError("expected an integer, got " + v.dump());
}

std::vector<Int> int_list(const json& v) {
    std::vector<Int> out;
    for (const auto& x : v) out.push_back(int_value(x));
    return out;
}

json strings(const std::vector<Polynomial>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

json bools(const std::vector<bool>& bs) {
    json a = json::array();
    for (bool b : bs) a.push_back(b);
    return a;
}

Verdict verdict(bool ok) { return ok ? Verdict::Verified : Verdict::Refuted; }

/// Deterministic across standard libraries (no std distributions).
struct Rng {
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    std::uint64_t below(std::uint64_t n) { return gen() % n; }
    long long range(long long lo, long long hi) { return lo + static_cast<long long>(below(hi - lo + 1)); }
    std::mt19937_64 gen;
};

/// For claims that test a builder: "expect" is "accepted" or "rejected".
template <class Build>
ClaimOutcome expect_builder(const json& p, Build build) {
    std::string expect = p.at("expect").get<std::string>();
    if (expect != "accepted" && expect != "rejected")
        throw UsageError("parameter \"expect\" must be \"accepted\" or \"rejected\"");
    try {
        ClaimOutcome out = build();
        if (expect == "rejected") {
            out.status = Verdict::Refuted;
            out.witness["unexpected"] = "builder accepted the input";
        }
        return out;
    } catch (const InstanceTooLarge&) {
        throw;
    } catch (const Timeout&) {
        throw;
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        ClaimOutcome out;
        out.status = verdict(expect == "rejected");
        out.witness = json{{"rejected", e.what()}};
        return out;
    }
}

// ---------------------------------------------------------------------------
// groebner

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
    std::vector<Monomial> out;
    Monomial m(n);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == n) {
            m[i] = left;
            out.push_back(m);
            return;
        }
        for (int k = left; k >= 0; --k) {
            m[i] = k;
            rec(i + 1, left - k);
        }
    };
    if (n > 0) rec(0, d);
    return out;
}

/// Each monomial of degree in [lo, hi] enters with probability 1/2, nonzero coefficient.
Polynomial random_poly(const VarTablePtr& vars, Field field, int lo, int hi, Rng& rng) {
    std::vector<Term> terms;
    long p = static_cast<long>(field.characteristic());
    for (int d = lo; d <= hi; ++d)
        for (auto& m : monomials_of_degree(vars->size(), d))
            if (rng.below(2)) terms.push_back({m, FieldElem(field, 1 + static_cast<long>(rng.below(p - 1)))});
    return Polynomial::from_terms(vars, field, std::move(terms));
}

ClaimOutcome groebner_soundness(const json& p) {
    Field field = field_param(p);
    if (!field.is_prime_field()) throw UsageError("groebner.soundness needs a prime field");
    Rng rng(p.at("seed").get<std::uint64_t>());
    int ideals = int_param(p, "ideals", 1, 1000);
    int queries = int_param(p, "queries", 0, 100000);
    int max_vars = int_param(p, "max_vars", 1, 6);
    int max_gens = int_param(p, "max_gens", 1, 8);
    int max_degree = int_param(p, "max_degree", 1, 6);
    int bound = int_param(p, "bound", max_degree, 10);
    static const std::vector<std::string> pool{"u", "v", "w", "x", "y", "z"};

    long long spolys = 0, members = 0, agreements = 0, total = 0;
    json failures = json::array();
    auto fail = [&](json f) {
        if (failures.size() < 5) failures.push_back(std::move(f));
    };
    for (int k = 0; k < ideals; ++k) {
        auto nv = 1 + rng.below(max_vars);
        auto vars = make_vars(std::vector<std::string>(pool.begin(), pool.begin() + nv));
        std::vector<Polynomial> gens;
        auto ng = 1 + rng.below(max_gens);
        while (gens.size() < ng) {
            // homogeneous generators keep the degree-bounded oracle complete
            int d = 1 + static_cast<int>(rng.below(max_degree));
            auto g = random_poly(vars, field, d, d, rng);
            if (!g.is_zero()) gens.push_back(g);
        }
        auto basis = buchberger(gens, MonomialOrder::degrevlex());
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                ++spolys;
                auto r = reduce(s_polynomial(basis[i], basis[j], MonomialOrder::degrevlex()), basis,
                                MonomialOrder::degrevlex());
                if (!r.is_zero()) fail({{"ideal", strings(gens)}, {"s_polynomial_remainder", r.to_string()}});
            }
        for (const auto& g : gens)
            if (!reduce(g, basis, MonomialOrder::degrevlex()).is_zero())
                fail({{"ideal", strings(gens)}, {"generator_not_reduced", g.to_string()}});
        int nq = queries / ideals + (k < queries % ideals ? 1 : 0);
        for (int q = 0; q < nq; ++q) {
            Polynomial f(vars, field);
            if (q % 2 == 0) {
                for (const auto& g : gens) {
                    int room = bound - static_cast<int>(g.total_degree());
                    f += random_poly(vars, field, 0, std::max(room, 0), rng) * g;
                }
            } else {
                f = random_poly(vars, field, 0, std::min(4, bound), rng);
            }
            ++total;
            bool by_reduce = reduce(f, basis, MonomialOrder::degrevlex()).is_zero();
            bool by_linear_algebra = brute_force_member(f, gens, bound);
            if (by_reduce) ++members;
            if (by_reduce == by_linear_algebra)
                ++agreements;
            else
                fail({{"ideal", strings(gens)},
                      {"query", f.to_string()},
                      {"reduce", by_reduce},
                      {"brute_force", by_linear_algebra}});
        }
    }
    ClaimOutcome out;
    out.status = verdict(failures.empty());
    out.witness = {{"order", "degrevlex"},         {"ideals", ideals},         {"s_polynomials", spolys},
                   {"queries", total},             {"members", members},       {"agreements", agreements},
                   {"failures", failures}};
    return out;
}

ClaimOutcome prime_avoid_claim(const json& p) {
    int r = int_param(p, "range", 1, 30);
    long long tuples = 0;
    Int max_m = 0;
    json failures = json::array();
    for (long a1 = -r; a1 <= r; ++a1)
        for (long a2 = -r; a2 <= r; ++a2)
            for (long b = -r; b <= r; ++b)
                for (long c = -r; c <= r; ++c) {
                    if (c == 0) continue;
                    std::vector<Int> all{Int(a1), Int(a2), Int(b), Int(c)};
                    if (gcd_of(all) != 1) continue;
                    ++tuples;
                    std::vector<Int> a{Int(a1), Int(a2)};
                    auto m = prime_avoid(a, Int(b), Int(c));
                    Int value = Int(b) + m[0] * a1 + m[1] * a2;
                    std::vector<Int> pair{Int(c), value};
                    if (gcd_of(pair) != 1 && failures.size() < 5)
                        failures.push_back({{"a", {a1, a2}}, {"b", b}, {"c", c}, {"m", {m[0].get_str(), m[1].get_str()}}});
                    for (const auto& mi : m) max_m = std::max<Int>(max_m, abs(mi));
                }
    ClaimOutcome out;
    out.status = verdict(failures.empty());
    out.witness = {{"tuples", tuples}, {"max_abs_m", max_m.get_str()}, {"failures", failures}};
    return out;
}

ClaimOutcome samuel_kernel(const json& p) {
    Field field = field_param(p);
    auto A = free_ring(field, p.at("variables").get<std::vector<std::string>>());
    auto a = A.parse(p.at("a").get<std::string>());
    auto b = A.parse(p.at("b").get<std::string>());
    auto ext = present_extension(A, a, b, p.at("new_var").get<std::string>());
    Ideal I = ext.ring.relation_ideal();
    Polynomial a_ext = embed(a, ext.ring.vars);
    bool tag_route = ideal_equal(saturation_by_tag(I, a_ext), I);
    ClaimOutcome out;
    out.status = verdict(ext.saturation_equal && tag_route);
    out.witness = {{"relations", strings(ext.ring.relations)},
                   {"saturation_steps", ext.saturation_steps},
                   {"quotient_route_equal", ext.saturation_equal},
                   {"tag_route_equal", tag_route},
                   {"basis", strings(I.basis())}};
    return out;
}

// ---------------------------------------------------------------------------
// W chain

ClaimOutcome wchain_lemma(const json& p) {
    Field field = field_param(p);
    auto vars = vars_param(p);
    int N = int_param(p, "N", 0, kWChainCap);
    auto b = poly_param(p, "b", vars, field), s = poly_param(p, "s", vars, field), t = poly_param(p, "t", vars, field);
    auto check = w_chain_lemma_check(vars, field, b, s, t, N);
    auto chain = w_chain(vars, field, b, s, t, N);
    json W = json::array(), J = json::array();
    for (int i = 0; i <= N; ++i) {
        W.push_back(strings(chain.W[i].basis()));
        J.push_back(strings(chain.J[i].basis()));
    }
    ClaimOutcome out;
    out.witness = {{"hypothesis", check.hypothesis}, {"levels", bools(check.levels)}, {"W", W}, {"J", J},
                   {"nested", chain.nested}};
    if (check.hypothesis == "none") {
        out.status = Verdict::Unknown;
        out.bound = N;
    } else {
        out.status = verdict(check.holds());
    }
    return out;
}

ClaimOutcome lemma_levels(const json& p) {
    Field field = field_param(p);
    auto vars = vars_param(p);
    int N = int_param(p, "N", 0, kWChainCap);
    auto s = poly_param(p, "s", vars, field), t = poly_param(p, "t", vars, field), b = poly_param(p, "b", vars, field);
    auto check = lemma_level_check(vars, field, s, t, b, N);
    ClaimOutcome out;
    out.status = verdict(check.holds());
    out.witness = {{"a", (s * t).to_string()}, {"levels", bools(check.levels)}};
    return out;
}

// ---------------------------------------------------------------------------
// Omega

OmegaPoly omega_monomial(Field field, Int r, std::vector<Int> e) {
    return OmegaPoly::monomial(field, OmegaMonomial::make(std::move(r), std::move(e)), FieldElem(field, 1L));
}

ClaimOutcome omega_normal_form(const json& p) {
    Field field = field_param(p);
    auto input = OmegaPoly::parse(p.at("input").get<std::string>(), field);
    auto large = normal_form(input, Pivot::Largest);
    auto small = normal_form(input, Pivot::Smallest);
    auto element = to_poly(large, field);
    bool independent = large == small && to_string(large, field) == to_string(small, field);
    ClaimOutcome out;
    out.witness = {{"normal_form", to_string(large, field)}, {"element", element.to_string()},
                   {"pivot_independent", independent}};
    bool ok = independent;
    if (!p.at("expect").is_null()) {
        bool match = element == OmegaPoly::parse(p.at("expect").get<std::string>(), field);
        out.witness["matches_expect"] = match;
        ok = ok && match;
    }
    out.status = verdict(ok);
    return out;
}

ClaimOutcome omega_z_relations(const json& p) {
    Field field = field_param(p);
    int lo_rel = 1, hi_rel, lo_out = 0, hi_out;
    if (!p.at("i").is_null()) {
        int i = int_param(p, "i", 0, kOmegaMaxIndex - 1);
        lo_rel = std::max(i, 1);
        hi_rel = i;
        lo_out = hi_out = i;
    } else {
        hi_rel = int_param(p, "max_i", 0, 5);
        hi_out = int_param(p, "max_outside", 0, kOmegaMaxIndex - 1);
    }
    json rel = json::array(), outside = json::array();
    bool ok = true;
    for (int i = lo_rel; i <= hi_rel; ++i) {
        Int pw = Int(1) << i;
        auto e = OmegaPoly::parse("z" + std::to_string(i) + " + z0^" + pw.get_str(), field);
        bool in = in_x_omega(e);
        ok = ok && in;
        rel.push_back({{"i", i}, {"element", e.to_string()}, {"normal_form", to_string(normal_form(e), field)},
                       {"in_x_omega", in}});
    }
    for (int i = lo_out; i <= hi_out; ++i) {
        auto z = OmegaPoly::parse("z" + std::to_string(i), field);
        bool in = in_x_omega(z);
        ok = ok && !in;
        outside.push_back({{"i", i}, {"in_x_omega", in}});
    }
    ClaimOutcome out;
    out.status = verdict(ok);
    out.witness = {{"relations", rel}, {"outside", outside}};
    return out;
}

ClaimOutcome omega_confluence(const json& p) {
    Field field = field_param(p);
    Rng rng(p.at("seed").get<std::uint64_t>());
    int count = int_param(p, "count", 1, 100000);
    int max_size = int_param(p, "max_size", 1, 12);
    int max_index = int_param(p, "max_index", 0, 8);
    int max_r = int_param(p, "max_r", 0, 64);
    json failures = json::array(), samples = json::array();
    std::set<std::string> distinct;
    for (int k = 0; k < count; ++k) {
        Int r(static_cast<long>(rng.range(0, max_r)));
        std::vector<Int> e(max_index + 1, 0);
        auto size = 1 + rng.below(max_size);
        for (std::uint64_t u = 0; u < size; ++u) e[rng.below(max_index + 1)] += 1;
        auto m = OmegaMonomial::make(r, e);
        auto poly = OmegaPoly::monomial(field, m, FieldElem(field, 1L));
        auto a = normal_form(poly, Pivot::Largest), b = normal_form(poly, Pivot::Smallest);
        auto sa = to_string(a, field), sb = to_string(b, field);
        distinct.insert(m.to_string());
        bool graded = a.size() <= 1 && (a.empty() || a.begin()->first == m.degree());
        if (sa != sb || !(a == b) || !graded) {
            if (failures.size() < 5) failures.push_back({{"monomial", m.to_string()}, {"largest", sa}, {"smallest", sb}});
        } else if (samples.size() < 3) {
            samples.push_back({{"monomial", m.to_string()}, {"normal_form", sa}});
        }
    }
    ClaimOutcome out;
    out.status = verdict(failures.empty());
    out.witness = {{"monomials", count}, {"distinct", distinct.size()}, {"samples", samples}, {"failures", failures}};
    return out;
}

ClaimOutcome omega_basis(const json& p) {
    Field field = field_param(p);
    int max_size = int_param(p, "max_size", 0, 8);
    int max_index = int_param(p, "max_index", 0, 6);
    int max_r = int_param(p, "max_r", 0, 16);
    long long fixed = 0, spanned = 0;
    json failures = json::array();
    auto fail = [&](json f) {
        if (failures.size() < 5) failures.push_back(std::move(f));
    };
    // every basis element x^m F_n is its own normal form
    Int top = Int(1) << (max_index + 1);
    for (Int n = 0; n < top; ++n)
        for (long m = 0; m <= max_r; ++m) {
            auto f = sigma(n);
            auto nf = normal_form(omega_monomial(field, Int(m), f.e));
            ++fixed;
            bool ok = nf.size() == 1 && nf.begin()->first == n - m && nf.begin()->second.entries.size() == 1 &&
                      nf.begin()->second.entries[0].m == m && nf.begin()->second.entries[0].n == n &&
                      nf.begin()->second.entries[0].coeff.is_one();
            if (!ok) fail({{"basis_element", OmegaMonomial::make(Int(m), f.e).to_string()}});
        }
    // every monomial lands in the span of the basis of its own degree
    std::vector<Int> e(max_index + 1, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == max_index + 1) {
            for (long r = 0; r <= max_r; ++r) {
                auto mono = OmegaMonomial::make(Int(r), e);
                auto nf = normal_form(omega_monomial(field, Int(r), e));
                ++spanned;
                bool ok = nf.size() <= 1;
                for (const auto& [deg, exp] : nf) {
                    ok = ok && deg == mono.degree();
                    for (std::size_t k = 0; k < exp.entries.size(); ++k) {
                        ok = ok && exp.entries[k].n - exp.entries[k].m == deg && exp.entries[k].n >= 0;
                        if (k) ok = ok && exp.entries[k - 1].m < exp.entries[k].m;
                    }
                }
                if (!ok) fail({{"monomial", mono.to_string()}, {"normal_form", to_string(nf, field)}});
            }
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, max_size);
    ClaimOutcome out;
    out.status = verdict(failures.empty());
    out.witness = {{"basis_fixed_points", fixed}, {"monomials_expanded", spanned}, {"failures", failures}};
    return out;
}

ClaimOutcome omega_x_adic(const json& p) {
    Field field = field_param(p);
    json rows = json::array();
    bool ok = true;
    for (const auto& text : p.at("inputs").get<std::vector<std::string>>()) {
        auto e = OmegaPoly::parse(text, field);
        Int f = x_adic_floor(e);
        // e lies in x^f Omega and multiplying by x raises the order by exactly one
        auto shifted = omega_monomial(field, Int(1), {}) * e;
        bool exact = f >= 0 && x_adic_floor(shifted) == f + 1 && (f == 0 || in_x_omega(e));
        ok = ok && exact;
        rows.push_back({{"input", text}, {"floor", f.get_str()}, {"exact", exact}});
    }
    ClaimOutcome out;
    out.status = verdict(ok);
    out.witness = {{"orders", rows}};
    return out;
}

// ---------------------------------------------------------------------------
// counterexample

ClaimOutcome cex_sseq(const json& p) {
    int n = int_param(p, "n", 1, 40);
    auto s = s_sequence(n);
    json seq = json::array();
    for (const auto& v : s) seq.push_back(v.fits_slong_p() ? json(v.get_si()) : json(v.get_str()));
    ClaimOutcome out;
    out.witness = {{"s", seq}};
    bool ok = true;
    if (!p.at("expect").is_null()) {
        auto expect = int_list(p.at("expect"));
        ok = expect == s;
    }
    out.status = verdict(ok);
    return out;
}

json cert_json(const OrderCert& c) {
    json log = json::array();
    for (const auto& r : c.log) {
        json rw = json::array();
        for (const auto& w : r.rewrites) rw.push_back({{"index", w.index}, {"count", w.count.get_str()}, {"increment", w.increment}});
        log.push_back({{"round", r.round}, {"rewrites", rw}});
    }
    json j = {{"target", c.target}, {"ideal", c.ideal}, {"n", c.n}, {"min_order", c.min_order},
              {"accepted", c.accepted}, {"log", log}};
    j["exact_check"] = c.exact_check ? json(*c.exact_check) : json(nullptr);
    return j;
}

template <class Cert>
ClaimOutcome order_claim(const json& p, Cert cert) {
    Field field = field_param(p);
    int max_n = int_param(p, "max_n", 0, kOrderCap);
    json certs = json::array();
    bool ok = true;
    for (int n = 0; n <= max_n; ++n) {
        auto c = cert(n, field);
        ok = ok && c.accepted && c.exact_check.value_or(true);
        certs.push_back(cert_json(c));
    }
    ClaimOutcome out;
    out.status = verdict(ok);
    out.witness = {{"certificates", certs}};
    return out;
}

ClaimOutcome cex_coords(const json& p) {
    Field field = field_param(p);
    int max_n = int_param(p, "max_n", 1, 3);
    json rows = json::array();
    bool ok = true;
    for (int n = 1; n <= max_n; ++n) {
        auto c = coordinate_checks(n, field);
        ok = ok && c.all();
        rows.push_back({{"n", n}, {"automorphism", c.automorphism}, {"x_quotient", c.x_quotient},
                        {"y_quotient", c.y_quotient}});
    }
    ClaimOutcome out;
    out.status = verdict(ok);
    out.witness = {{"checks", rows}};
    return out;
}

ClaimOutcome cex_expansion(const json& p) {
    Field field = field_param(p);
    int depth = int_param(p, "depth", 0, kExpandDepthCap);
    bool bprime = p.at("bprime").get<bool>();
    auto e = expand_z0(depth, field, bprime);
    std::optional<bool> in_ideal;
    if (depth <= 2) in_ideal = expansion_in_ideal(e);
    ClaimOutcome out;
    out.status = verdict(e.identity_holds && e.min_order >= depth && in_ideal.value_or(true));
    out.witness = {{"expansion", e.expansion.to_string()}, {"cofactors", strings(e.cofactors)},
                   {"min_order", e.min_order},            {"identity_holds", e.identity_holds}};
    out.witness["ideal_check"] = in_ideal ? json(*in_ideal) : json(nullptr);
    return out;
}

// ---------------------------------------------------------------------------
// builders

ThreefoldData threefold_param(const json& p) {
    ThreefoldData d;
    d.field = field_param(p);
    d.p = p.at("p").get<std::vector<std::string>>();
    for (const auto& u : p.at("u")) d.u.push_back(parse_field_elem(u, d.field));
    for (const auto& v : p.at("v")) d.v.push_back(parse_field_elem(v, d.field));
    d.a = p.at("a").get<std::vector<long>>();
    d.b = p.at("b").get<std::vector<long>>();
    if (p.contains("kappa") && !p.at("kappa").is_null()) d.kappa = p.at("kappa").get<std::string>();
    return d;
}

ClaimOutcome jacobian_claim(const json& p) {
    return expect_builder(p, [&] {
        auto d = threefold_param(p);
        auto rep = jacobian_tangent_dim(d, p.at("q").get<std::string>());
        int n = static_cast<int>(d.p.size());
        ClaimOutcome out;
        out.status = verdict(rep.rank == 0 && rep.tangent_dim == n + 3);
        out.witness = {{"rank", rep.rank}, {"tangent_dim", rep.tangent_dim}, {"expected_tangent_dim", n + 3},
                       {"jacobian", rep.jacobian}};
        return out;
    });
}

ClaimOutcome threefold_claim(const json& p) {
    return expect_builder(p, [&] {
        auto rep = threefold_family(threefold_param(p));
        ClaimOutcome out;
        bool ok = rep.kappa_shape.value_or(true) && rep.zn_outside.value_or(true);
        out.status = verdict(ok);
        out.witness = {{"ring", to_json(rep.ring)}};
        out.witness["kappa_shape"] = rep.kappa_shape ? json(*rep.kappa_shape) : json(nullptr);
        out.witness["zn_outside"] = rep.zn_outside ? json(*rep.zn_outside) : json(nullptr);
        return out;
    });
}

ClaimOutcome trinomial_claim(const json& p) {
    return expect_builder(p, [&] {
        TrinomialData d;
        d.field = field_param(p);
        d.beta = p.at("beta").get<std::vector<std::vector<long>>>();
        for (const auto& l : p.at("lambda")) d.lambda.push_back(parse_field_elem(l, d.field));
        if (!p.at("names").is_null()) d.names = p.at("names").get<std::vector<std::vector<std::string>>>();
        auto rep = trinomial_ring(d);
        json steps = json::array();
        for (const auto& s : rep.steps) {
            json w = json::object();
            for (const auto& [name, deg] : s.weights) w[name] = deg.get_si();
            steps.push_back({{"m", s.m}, {"weights", w}, {"relation_degree", s.relation_degree.get_si()},
                             {"gcd", s.gcd.get_si()}, {"homogeneous", s.homogeneous}});
        }
        bool ok = rep.holds();
        json mismatches = json::array();
        for (const auto& want : p.at("expect_steps")) {
            auto it = std::find_if(steps.begin(), steps.end(), [&](const json& s) { return s.at("m") == want.at("m"); });
            bool match = it != steps.end();
            for (const auto& [k, v] : want.items())
                if (match && (!it->contains(k) || (*it)[k] != v)) match = false;
            if (!match) mismatches.push_back(want);
        }
        ok = ok && mismatches.empty();
        ClaimOutcome out;
        out.status = verdict(ok);
        out.witness = {{"steps", steps}, {"relations", strings(rep.ring.relations)},
                       {"mismatches", mismatches}};
        json d_list = json::array();
        for (const auto& x : rep.d) d_list.push_back(x.get_str());
        out.witness["d"] = d_list;
        return out;
    });
}

ClaimOutcome pham_brieskorn_claim(const json& p) {
    return expect_builder(p, [&] {
        auto pb = pham_brieskorn(field_param(p), p.at("exponents").get<std::vector<long>>());
        ClaimOutcome out;
        bool ok = true;
        if (!p.at("expect_case").is_null()) ok = pb.hypothesis_case == p.at("expect_case").get<int>();
        out.status = verdict(ok);
        out.witness = {{"hypothesis_case", pb.hypothesis_case}, {"omega", pb.omega.get_str()}, {"ring", to_json(pb.ring)}};
        return out;
    });
}

ClaimOutcome radical_claim(const json& p) {
    return expect_builder(p, [&] {
        json base = {{"builder", "free"}, {"field", p.at("field")}, {"variables", p.at("variables")}, {"weights", p.at("weights")}};
        auto A = ring_from_spec(base);
        auto B = radical_extension(A, A.parse(p.at("F").get<std::string>()), p.at("c").get<long>());
        ClaimOutcome out;
        out.status = Verdict::Verified;
        out.witness = {{"ring", to_json(B)}};
        return out;
    });
}

ClaimOutcome fourth_claim(const json& p) {
    return expect_builder(p, [&] {
        json base = {{"builder", "free"}, {"field", p.at("field")}, {"variables", p.at("variables")}, {"weights", p.at("weights")}};
        auto A = ring_from_spec(base);
        auto fc = fourth_criterion(A, A.parse(p.at("a").get<std::string>()), A.parse(p.at("b").get<std::string>()),
                                   p.at("n").get<long>());
        ClaimOutcome out;
        out.status = Verdict::Verified;
        out.witness = {{"deg_X", fc.deg_x.get_str()}, {"ring", to_json(fc.ring)}};
        return out;
    });
}

ClaimOutcome fifth_claim(const json& p) {
    return expect_builder(p, [&] {
        Int omega = int_value(p.at("omega"));
        auto e = int_list(p.at("e"));
        auto fw = fifth_weights(omega, e);
        Int check = omega;
        for (std::size_t i = 0; i < fw.m.size(); ++i) check -= fw.m[i] * e[i];
        std::vector<Int> pair{e.back(), check};
        ClaimOutcome out;
        out.status = verdict(check == fw.check && gcd_of(pair) == 1);
        json m = json::array();
        for (const auto& x : fw.m) m.push_back(x.get_str());
        out.witness = {{"m", m}, {"check", fw.check.get_str()}};
        return out;
    });
}

ClaimOutcome condition_p_claim(const json& p) {
    Field field = field_param(p);
    auto vars = vars_param(p);
    std::vector<Polynomial> rels, factors;
    for (const auto& r : p.at("relations")) rels.push_back(parse_polynomial(r.get<std::string>(), vars, field));
    for (const auto& f : p.at("factors")) factors.push_back(parse_polynomial(f.get<std::string>(), vars, field));
    PresentedRing A(field, vars, rels);
    int N = int_param(p, "N", 0, 12);
    auto rep = check_condition_P(A, poly_param(p, "a", vars, field), poly_param(p, "b", vars, field), factors, N);
    auto clause = [](const ClauseReport& c) {
        json j = {{"verdict", to_string(c.verdict)}, {"truncated", c.truncated}, {"witness", c.witness}};
        j["bound"] = c.bound ? json(*c.bound) : json(nullptr);
        return j;
    };
    ClaimOutcome out;
    out.status = rep.overall();
    if (out.status == Verdict::Unknown) out.bound = N;
    out.witness = {{"i", clause(rep.i)},     {"ii", clause(rep.ii)},   {"iii", clause(rep.iii)},
                   {"iv", clause(rep.iv)},   {"primes", strings(rep.primes)}, {"note", rep.note}};
    return out;
}

ClaimOutcome irreducible_claim(const json& p) {
    Field field = field_param(p);
    auto vars = vars_param(p);
    auto f = poly_param(p, "f", vars, field);
    auto v = brute_force_irreducible(f, int_param(p, "max_deg", 1, 8));
    ClaimOutcome out;
    out.status = verdict(v.irreducible);
    out.witness = {{"candidates", v.candidates}};
    if (v.g) out.witness["factors"] = {v.g->to_string(), v.h->to_string()};
    return out;
}

ClaimOutcome laurent_claim(const json& p) {
    Field field = field_param(p);
    int max = int_param(p, "max", 1, 20);
    long long pairs = 0;
    json failures = json::array();
    for (const auto& l : p.at("lambdas")) {
        FieldElem lambda = parse_field_elem(l, field);
        for (long a = 1; a <= max; ++a)
            for (long b = 1; b <= max; ++b) {
                std::vector<Int> ab{Int(a), Int(b)};
                if (gcd_of(ab) != 1) continue;
                ++pairs;
                auto iso = laurent_iso(Int(a), Int(b), lambda);
                auto z = Polynomial::variable(iso.fwd.source(), field, "z");
                bool round = iso.fwd.then(iso.inv).apply(z) == z;
                auto xy = parse_polynomial("x^" + std::to_string(a) + "*y^" + std::to_string(b), iso.inv.source(), field);
                bool value = iso.inv.apply(xy) == Polynomial::constant(iso.inv.target(), field, lambda);
                if ((!round || !value) && failures.size() < 5)
                    failures.push_back({{"a", a}, {"b", b}, {"lambda", lambda.to_string()}});
            }
    }
    ClaimOutcome out;
    out.status = verdict(failures.empty());
    out.witness = {{"instances", pairs}, {"failures", failures}};
    return out;
}

ClaimOutcome phi_theta_claim(const json& p) {
    Field field = field_param(p);
    Rng rng(p.at("seed").get<std::uint64_t>());
    int count = int_param(p, "count", 1, 10000);
    auto vars = make_vars({"t", "s", "U"}, {false, false, true});
    Grading g(vars, {Int(1), Int(2), Int(0)});
    Monomial unit(std::vector<Exponent>{0, 0, 1});
    json failures = json::array();
    for (int k = 0; k < count; ++k) {
        std::vector<Term> terms;
        auto nterms = 1 + rng.below(4);
        for (std::uint64_t i = 0; i < nterms; ++i) {
            Monomial m(std::vector<Exponent>{static_cast<Exponent>(rng.below(4)), static_cast<Exponent>(rng.below(3)),
                                             static_cast<Exponent>(rng.range(-3, 3))});
            terms.push_back({m, FieldElem(field, rng.range(-5, 5))});
        }
        auto f = Polynomial::from_terms(vars, field, terms);
        long long d = rng.range(-3, 3);
        if (phi_theta(g, unit, -d, phi_theta(g, unit, d, f)) != f && failures.size() < 5)
            failures.push_back({{"input", f.to_string()}, {"d", d}});
    }
    ClaimOutcome out;
    out.status = verdict(failures.empty());
    out.witness = {{"inputs", count}, {"failures", failures}};
    return out;
}

std::vector<ClaimInfo> build_registry() {
    json null = nullptr;
    return {
        {"groebner.soundness",
         "Buchberger output: every S-polynomial reduces to 0; reduction agrees with degree-bounded linear algebra",
         {{"field", "F5"}, {"seed", 1}, {"ideals", 20}, {"queries", 100}, {"max_vars", 3}, {"max_gens", 4},
          {"max_degree", 3}, {"bound", 6}},
         groebner_soundness},
        {"coeff.prime-avoid", "prime avoidance: gcd(a, b, c) = 1 gives m with gcd(c, b + sum m_i a_i) = 1",
         {{"range", 6}}, prime_avoid_claim},
        {"samuel.kernel", "kernel of A[X] -> A[1/a], X -> b/a, is (aX - b) when (a) and (b) meet in (ab)",
         {{"field", "F5"}, {"variables", {"u", "v"}}, {"a", "u"}, {"b", "v"}, {"new_var", "X"}}, samuel_kernel},
        {"wchain.powers",
         "W(b,s,t) equals (bA + sA)^i level-wise when t lies in the intersection or bA + sA + tA = A; "
         "with a regular sequence W_i = (b, s)^i",
         {{"field", "F5"}, {"variables", {"u", "v", "w"}}, {"b", "u"}, {"s", "v"}, {"t", "w"}, {"N", 5}},
         wchain_lemma},
        {"wchain.levels", "A meets s^i A[X] + (aX - b) exactly in W_i, a = st",
         {{"field", "F5"}, {"variables", {"u", "v"}}, {"s", "u"}, {"t", "v"}, {"b", "u+v"}, {"N", 4}}, lemma_levels},
        {"omega.normal-form", "rewriting z_m^2 -> -(x^(2^(m+1)) z_(m+2) + z_(m+1)) reaches a pivot-independent normal form",
         {{"field", "QQ"}, {"input", "z0^2"}, {"expect", null}}, omega_normal_form},
        {"omega.z-relations", "z_i + z_0^(2^i) lies in x*Omega for i >= 1, while z_i does not",
         {{"field", "QQ"}, {"i", null}, {"max_i", 3}, {"max_outside", 4}}, omega_z_relations},
        {"omega.confluence", "normal forms do not depend on the rewriting pivot",
         {{"field", "QQ"}, {"seed", 1}, {"count", 100}, {"max_size", 6}, {"max_index", 4}, {"max_r", 3}},
         omega_confluence},
        {"omega.basis", "{x^m F_n : n - m = d} is a basis of the degree-d part of Omega",
         {{"field", "QQ"}, {"max_size", 4}, {"max_index", 3}, {"max_r", 2}}, omega_basis},
        {"omega.x-adic", "the x-adic filtration of Omega is separated: nonzero elements have finite order",
         {{"field", "QQ"}, {"inputs", {"z0", "z0^2 + z1", "x*z3 + x^2*z0", "z0^4"}}}, omega_x_adic},
        {"cex.sseq", "s(1) = 2, s(2) = 3, s(n) = n s(1)...s(n-2)", {{"n", 5}, {"expect", null}}, cex_sseq},
        {"cex.z0-expansion", "z0 rewritten through the relations f_i, with an explicit cofactor identity",
         {{"field", "QQ"}, {"depth", 3}, {"bprime", false}}, cex_expansion},
        {"cex.m-order", "z0 lies in (x, y)^n for every n", {{"field", "QQ"}, {"max_n", 10}},
         [](const json& p) { return order_claim(p, m_order_certificate); }},
        {"cex.x-order", "in B' (y = xT) z0 lies in x^n B' for every n", {{"field", "QQ"}, {"max_n", 10}},
         [](const json& p) { return order_claim(p, x_order_certificate_bprime); }},
        {"cex.coords",
         "phi_n...phi_1 carries J_n onto (Z_0..Z_(n-1)); J_n + (x) and J_n + (y) have the stated generators",
         {{"field", "QQ"}, {"max_n", 3}}, cex_coords},
        {"jacobian.tangent", "the singular point of the threefold family has embedding dimension n + 3",
         {{"field", "QQ"}, {"p", {"x"}}, {"u", {1}}, {"v", {1}}, {"a", {2}}, {"b", {3}}, {"q", "x"}, {"expect", "accepted"}},
         jacobian_claim},
        {"threefold.kappa", "modulo kappa the threefold relations become u_i z_i^a_i + v_i z_(i-1)^b_i and z_n stays outside",
         {{"field", "QQ"}, {"p", {"x"}}, {"u", {1}}, {"v", {1}}, {"a", {2}}, {"b", {3}}, {"kappa", "x"}, {"expect", "accepted"}},
         threefold_claim},
        {"trinomial.validate", "trinomial data conditions and the inductive grading with gcd(beta_m, d_0...d_(m-1)) = 1",
         {{"field", "QQ"}, {"beta", {{2}, {3}, {5}}}, {"lambda", {1}}, {"names", {{"x"}, {"y"}, {"z"}}},
          {"expect_steps", json::array()}, {"expect", "accepted"}},
         trinomial_claim},
        {"pham-brieskorn.validate",
         "X1^a1 + ... + Xn^an: n = 3 needs pairwise coprime exponents, n >= 4 needs gcd(a_n, a_1...a_(n-1)) = 1",
         {{"field", "QQ"}, {"exponents", {2, 3, 5}}, {"expect_case", null}, {"expect", "accepted"}}, pham_brieskorn_claim},
        {"irreducible.bruteforce", "exhaustive divisor search over a prime field",
         {{"field", "F5"}, {"variables", {"x", "y"}}, {"f", "x^2+y^3"}, {"max_deg", 2}}, irreducible_claim},
        {"radical.extension", "A[Z]/(Z^c - F) is graded with deg Z = deg F when gcd(c, deg F) = 1",
         {{"field", "QQ"}, {"variables", {"X1", "X2"}}, {"weights", {3, 2}}, {"F", "X1^2 + X2^3"}, {"c", 5}, {"expect", "accepted"}},
         radical_claim},
        {"fourth.criterion", "A[Z]/(aZ^n - b) through A[X]/(aX - b) and Z^n - X, with gcd(n, deg b - deg a) = 1",
         {{"field", "QQ"}, {"variables", {"u", "v"}}, {"weights", {1, 1}}, {"a", "u"}, {"b", "v^2"}, {"n", 2}, {"expect", "accepted"}},
         fourth_claim},
        {"fifth.weights", "weights m with gcd(e_n, omega - sum m_i e_i) = 1 by prime avoidance",
         {{"omega", 30}, {"e", {2, 3, 7}}, {"expect", "accepted"}}, fifth_claim},
        {"condition-p", "tri-state check of the four clauses of condition P",
         {{"field", "QQ"}, {"variables", {"u", "v"}}, {"relations", json::array()}, {"a", "u"}, {"b", "v"},
          {"factors", {"u"}}, {"N", 3}},
         condition_p_claim},
        {"laurent.iso", "R[x,y]/(x^a y^b - lambda) = R[z, 1/z] for coprime a, b",
         {{"field", "QQ"}, {"max", 7}, {"lambdas", {1, 2, -1}}}, laurent_claim},
        {"phi-theta.inverse", "Phi_theta for d and -d are mutually inverse graded automorphisms",
         {{"field", "QQ"}, {"seed", 1}, {"count", 50}}, phi_theta_claim},
    };
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
    static const std::vector<ClaimInfo> registry = build_registry();
    return registry;
}

const ClaimInfo& find_claim(const std::string& id) {
    for (const auto& c : claim_registry())
        if (c.id == id) return c;
    throw UsageError("unknown claim \"" + id + "\"");
}

ClaimReport run_claim(const std::string& id, const json& params, const RunOptions& options) {
    const ClaimInfo& info = find_claim(id);
    json merged = info.defaults;
    if (!params.is_null()) {
        if (!params.is_object()) throw UsageError("params must be a JSON object");
        for (const auto& [k, v] : params.items()) {
            if (!merged.contains(k)) throw UsageError("unknown parameter \"" + k + "\" for claim " + id);
            merged[k] = v;
        }
    }
    ClaimReport report;
    report.claim_id = id;
    report.params = merged;
    auto start = Clock::now();
    try {
        DeadlineGuard guard(options.timeout);
        ClaimOutcome out = info.handler(merged);
        report.status = out.status;
        report.witness = std::move(out.witness);
        if (out.bound) report.bound = *out.bound;
    } catch (const Timeout&) {
        report.status = Verdict::Unknown;
        report.bound = std::string("timeout");
        report.witness = json{{"error", "timeout"}};
    } catch (const InstanceTooLarge& e) {
        report.status = Verdict::Unknown;
        report.bound = static_cast<long long>(current_caps().degree);
        report.witness = json{{"error", e.what()}};
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        throw UsageError(e.what());
    } catch (const json::exception& e) {
        throw UsageError(e.what());
    }
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return report;
}

}  // namespace ufdlab
