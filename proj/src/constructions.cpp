#include "ufdlab/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ufdlab {

namespace {

std::set<std::string> names_of(const VarTable& vars) { return {vars.names().begin(), vars.names().end()}; }

std::string fresh_name(const VarTable& vars, const std::string& stem) {
    std::string name = stem;
    for (int i = 1; vars.find(name); ++i) name = stem + std::to_string(i);
    return name;
}

Ideal project(const Ideal& big, const VarTablePtr& vars, Field field) {
    std::vector<Polynomial> g;
    for (const auto& p : big.gens()) g.push_back(embed(p, vars));
    return Ideal(vars, field, std::move(g));
}

Int gcd2(const Int& a, const Int& b) {
    std::vector<Int> v{a, b};
    if (a == 0 && b == 0) return 0;
    return gcd_of(v);
}

std::string join(const std::vector<Polynomial>& ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
    return s;
}

/// Monomials of total degree in [lo, hi] over all variables of the table.
std::vector<Monomial> monomials_between(std::size_t nvars, int lo, int hi) {
    std::vector<Monomial> out;
    Monomial m(nvars);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int used) {
        if (k == nvars) {
            if (used >= lo) out.push_back(m);
            return;
        }
        for (int e = 0; used + e <= hi; ++e) {
            m[k] = e;
            rec(k + 1, used + e);
        }
        m[k] = 0;
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_greater(b, a); });
    return out;
}

/// Standard monomials (not divisible by any leading monomial) of degree lo..hi.
std::vector<Monomial> standard_monomials(const std::vector<Polynomial>& basis, std::size_t nvars, int lo, int hi) {
    auto ord = MonomialOrder::degrevlex();
    std::vector<Monomial> leads;
    for (const auto& g : basis) leads.push_back(leading_term(g, ord).mono);
    std::vector<Monomial> out;
    for (auto& m : monomials_between(nvars, lo, hi))
        if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); }))
            out.push_back(m);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

PresentedRing::PresentedRing(Field f, VarTablePtr v, std::vector<Polynomial> rels, std::optional<Grading> g,
                             std::string prov)
    : field(f), vars(std::move(v)), relations(std::move(rels)), grading(std::move(g)), provenance(std::move(prov)) {
    for (const auto& r : relations) {
        if (r.is_zero()) throw Error("zero relation");
        if (r.field() != field) throw Error("coefficient field mismatch");
        if (!(*r.vars() == *vars)) throw Error("relation lives in a different ring");
        if (grading && !degree_of(r, *grading)) throw Error("relation not homogeneous: " + r.to_string());
    }
    if (grading && !(*grading->vars() == *vars)) throw Error("grading lives in a different ring");
}

PresentedRing free_ring(Field field, std::vector<std::string> names, std::optional<std::vector<Int>> weights) {
    auto vars = make_vars(std::move(names));
    std::optional<Grading> g;
    if (weights) g = Grading(vars, *weights);
    return PresentedRing(field, vars, {}, std::move(g), "free");
}

RelativePrimality relatively_prime(const PresentedRing& A, const Polynomial& a, const Polynomial& b) {
    Ideal rel = A.relation_ideal();
    Ideal meet = intersect(rel.with(a), rel.with(b));
    Ideal prod = rel.with(a * b);
    const auto& gb = prod.basis();
    auto ord = MonomialOrder::degrevlex();
    for (const auto& g : meet.gens())
        if (!reduce(g, gb, ord).is_zero()) return {false, g};
    return {true, std::nullopt};
}

Extension present_extension(const PresentedRing& A, const Polynomial& a, const Polynomial& b,
                            const std::string& new_var) {
    Ideal rel = A.relation_ideal();
    if (a.is_zero() || rel.contains(a)) throw Error("a is zero in A");
    if (b.is_zero() || rel.contains(b)) throw Error("b is zero in A");
    auto rp = relatively_prime(A, a, b);
    if (!rp.holds) throw Error("a and b are not relatively prime: " + rp.witness->to_string() + " lies in (a)∩(b) but not in (ab)");

    std::string x = fresh_name(*A.vars, new_var);
    auto big = extend_vars(A.vars, {x});
    std::vector<Polynomial> rels;
    for (const auto& r : A.relations) rels.push_back(embed(r, big));
    Polynomial ab = embed(a, big) * Polynomial::variable(big, A.field, x) - embed(b, big);
    rels.push_back(ab);

    std::optional<Grading> g;
    if (A.grading) {
        auto da = degree_of(a, *A.grading), db = degree_of(b, *A.grading);
        if (da && db) {
            auto w = A.grading->weights();
            w.push_back(*db - *da);
            g = Grading(big, w);
        }
    }
    Ideal I(big, A.field, rels);
    auto sat = saturation(I, embed(a, big));
    bool equal = sat.stabilized && ideal_equal(sat.ideal, I);
    PresentedRing ring(A.field, big, rels, g, "samuel-extension");
    ring.notes = {{"a", a.to_string()}, {"b", b.to_string()}};
    return {std::move(ring), equal, sat.steps};
}

// ---------------------------------------------------------------------------

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Verified:
            return "verified";
        case Verdict::Refuted:
            return "refuted";
        case Verdict::Unknown:
            return "unknown";
    }
    return "?";
}

Verdict ConditionPReport::overall() const {
    std::vector<Verdict> all{i.verdict, ii.verdict, iii.verdict, iv.verdict};
    if (std::count(all.begin(), all.end(), Verdict::Refuted)) return Verdict::Refuted;
    if (std::count(all.begin(), all.end(), Verdict::Unknown)) return Verdict::Unknown;
    return Verdict::Verified;
}

ConditionPReport check_condition_P(const PresentedRing& A, const Polynomial& a, const Polynomial& b,
                                   const std::vector<Polynomial>& prime_factors, int N) {
    if (N < 1) throw Error("search bound N must be positive");
    Ideal rel = A.relation_ideal();
    if (a.is_zero() || rel.contains(a)) throw Error("a is zero in A");
    if (b.is_zero() || rel.contains(b)) throw Error("b is zero in A");
    Polynomial prod = Polynomial::constant(A.vars, A.field, 1);
    for (const auto& p : prime_factors) prod *= p;
    if (!ideal_equal(rel.with(prod), rel.with(a))) throw Error("product of the supplied factors differs from a: " + prod.to_string());

    ConditionPReport rep;
    rep.note = "primality of the supplied factors is trusted, not checked";
    auto rp = relatively_prime(A, a, b);
    if (rp.holds) {
        rep.i = {Verdict::Verified, std::nullopt, false,
                 "(a)∩(b) = (ab); a = unit * (" + join(prime_factors) + ")"};
    } else {
        rep.i = {Verdict::Refuted, std::nullopt, false, rp.witness->to_string() + " in (a)∩(b) \\ (ab)"};
    }

    for (const auto& p : prime_factors) {
        bool dup = std::any_of(rep.primes.begin(), rep.primes.end(),
                               [&](const Polynomial& q) { return ideal_equal(rel.with(p), rel.with(q)); });
        if (dup) continue;
        if (!(rel.with(p).with(b)).is_unit()) rep.primes.push_back(p);
    }
    const auto& P = rep.primes;

    // (iii)
    if (P.size() < 2) {
        rep.iii = {Verdict::Verified, std::nullopt, false, "there are no non-associate pairs"};
    } else {
        rep.iii = {Verdict::Verified, std::nullopt, false, ""};
        for (std::size_t x = 0; x < P.size() && rep.iii.verdict == Verdict::Verified; ++x)
            for (std::size_t y = 0; y < P.size(); ++y) {
                if (x == y) continue;
                if (rel.with(P[x]).with(b).contains(P[y])) {
                    rep.iii = {Verdict::Refuted, std::nullopt, false,
                               P[y].to_string() + " in (" + P[x].to_string() + ", " + b.to_string() + ")"};
                    break;
                }
                rep.iii.witness += (rep.iii.witness.empty() ? "" : "; ") + P[y].to_string() + " not in (" +
                                   P[x].to_string() + ", " + b.to_string() + ")";
            }
    }

    // (ii): bounded zero-divisor search
    if (P.empty()) {
        rep.ii = {Verdict::Verified, std::nullopt, false, "P is empty"};
    } else {
        rep.ii = {Verdict::Unknown, N, false, ""};
        std::size_t tried = 0;
        for (const auto& p : P) {
            Ideal Q = rel.with(p).with(b);
            const auto& gb = Q.basis();
            auto ord = MonomialOrder::degrevlex();
            auto std_monos = standard_monomials(gb, A.vars->size(), 1, N);
            std::vector<Polynomial> cands;
            const std::size_t cap = 48;
            for (const auto& m : std_monos) {
                if (cands.size() >= cap) break;
                cands.push_back(Polynomial::monomial(A.vars, A.field, m, FieldElem(A.field, 1L)));
            }
            for (std::size_t x = 0; x < std_monos.size() && cands.size() < cap; ++x)
                for (std::size_t y = x + 1; y < std_monos.size() && cands.size() < cap; ++y)
                    for (long sign : {1L, -1L}) {
                        auto t1 = Polynomial::monomial(A.vars, A.field, std_monos[x], FieldElem(A.field, 1L));
                        auto t2 = Polynomial::monomial(A.vars, A.field, std_monos[y], FieldElem(A.field, sign));
                        if (cands.size() < cap) cands.push_back(t1 + t2);
                    }
            for (std::size_t x = 0; x < cands.size(); ++x)
                for (std::size_t y = x; y < cands.size(); ++y) {
                    ++tried;
                    check_deadline();
                    if (reduce(cands[x] * cands[y], gb, ord).is_zero()) {
                        rep.ii = {Verdict::Refuted, std::nullopt, false,
                                  "(" + cands[x].to_string() + ")*(" + cands[y].to_string() + ") in (" +
                                      p.to_string() + ", " + b.to_string() + ")"};
                        goto done_ii;
                    }
                }
        }
        rep.ii.witness = "no zero divisor among " + std::to_string(tried) + " candidate pairs up to degree " +
                         std::to_string(N);
    done_ii:;
    }

    // (iv): truncated
    if (P.empty()) {
        rep.iv = {Verdict::Verified, std::nullopt, false, "P is empty"};
    } else {
        rep.iv = {Verdict::Verified, N, true, ""};
        for (const auto& p : P) {
            Ideal Q = Ideal(A.vars, A.field, {p, b});
            long long delta = std::min(p.total_degree(), b.total_degree());
            std::vector<Ideal> powers{rel + Q};
            Ideal Qk = Q;
            for (int k = 2; k <= N + 1; ++k) {
                Qk = Qk * Q;
                powers.push_back(rel + Qk);
            }
            bool refuted = false;
            for (int k = 0; k + 1 < static_cast<int>(powers.size()) && k + 1 <= N; ++k)
                if (ideal_equal(powers[k], powers[k + 1])) {
                    rep.iv = {Verdict::Refuted, std::nullopt, false,
                              "(p, b)^" + std::to_string(k + 1) + " = (p, b)^" + std::to_string(k + 2) +
                                  " != 0 for p = " + p.to_string()};
                    refuted = true;
                    break;
                }
            if (refuted) break;
            const Ideal& QN = powers[N - 1];
            auto tests = standard_monomials(rel.basis(), A.vars->size(), 0, static_cast<int>(N * delta) - 1);
            std::size_t inside = 0;
            for (const auto& m : tests)
                if (QN.contains(Polynomial::monomial(A.vars, A.field, m, FieldElem(A.field, 1L)))) ++inside;
            if (inside) {
                rep.iv = {Verdict::Unknown, N, true,
                          std::to_string(inside) + " test monomials of degree < " + std::to_string(N * delta) +
                              " lie in (p, b)^N for p = " + p.to_string()};
                break;
            }
            rep.iv.witness += (rep.iv.witness.empty() ? "" : "; ") + std::to_string(tests.size()) +
                              " test monomials of degree < " + std::to_string(N * delta) + " lie outside (" +
                              p.to_string() + ", " + b.to_string() + ")^" + std::to_string(N);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------

WChain w_chain(const VarTablePtr& vars, Field field, const Polynomial& b, const Polynomial& s, const Polynomial& t,
               int N) {
    if (b.is_zero() || s.is_zero() || t.is_zero()) throw Error("b, s, t must be nonzero");
    if (N < 0) throw Error("chain length must be non-negative");
    if (N > kWChainCap) throw InstanceTooLarge("chain length " + std::to_string(N) + " exceeds cap " + std::to_string(kWChainCap));
    WChain c{{Ideal::unit(vars, field)}, {Ideal::unit(vars, field)}, true};
    for (int i = 1; i <= N; ++i) {
        Ideal Wi = c.J.back().times(b).with(s.pow(i));
        Ideal Ji = ideal_quotient(Wi, t);
        c.W.push_back(std::move(Wi));
        c.J.push_back(std::move(Ji));
    }
    for (int i = 0; i < N; ++i)
        if (!ideal_subset(c.W[i + 1], c.W[i]) || !ideal_subset(c.J[i + 1], c.J[i])) c.nested = false;
    return c;
}

bool WChainLemmaCheck::holds() const {
    return hypothesis != "none" && std::all_of(levels.begin(), levels.end(), [](bool b) { return b; });
}

WChainLemmaCheck w_chain_lemma_check(const VarTablePtr& vars, Field field, const Polynomial& b, const Polynomial& s,
                                     const Polynomial& t, int N) {
    WChain c = w_chain(vars, field, b, s, t, N);
    Ideal bs(vars, field, {b, s});
    WChainLemmaCheck out;

    bool t_in_all = true;
    for (int i = 1; i <= N && t_in_all; ++i) t_in_all = Ideal(vars, field, {b, s.pow(i)}).contains(t);
    if (t_in_all) {
        out.hypothesis = "t-in-intersection";
        for (int i = 0; i <= N; ++i) {
            Ideal expect = i == 0 ? Ideal::unit(vars, field) : Ideal(vars, field, {b, s.pow(i)});
            out.levels.push_back(ideal_equal(c.W[i], expect) && c.J[i].is_unit());
        }
        return out;
    }
    if (bs.with(t).is_unit()) {
        out.hypothesis = "comaximal";
    } else {
        Ideal bI(vars, field, {b});
        bool regular = ideal_equal(ideal_quotient(bI, s), bI) && ideal_equal(ideal_quotient(bs, t), bs);
        out.hypothesis = regular ? "regular-sequence" : "none";
    }
    if (out.hypothesis == "none") return out;
    for (int i = 0; i <= N; ++i) {
        Ideal expect = bs.pow(static_cast<unsigned>(i));
        out.levels.push_back(ideal_equal(c.W[i], expect) && ideal_equal(c.J[i], expect));
    }
    return out;
}

bool LevelCheck::holds() const {
    return std::all_of(levels.begin(), levels.end(), [](bool b) { return b; });
}

LevelCheck lemma_level_check(const VarTablePtr& vars, Field field, const Polynomial& s, const Polynomial& t,
                             const Polynomial& b, int N) {
    PresentedRing A(field, vars, {});
    Polynomial a = s * t;
    if (a.is_zero() || b.is_zero()) throw Error("a and b must be nonzero");
    if (auto r = relatively_prime(A, s, t); !r.holds)
        throw Error("s and t are not relatively prime: " + r.witness->to_string() + " in (s)∩(t) \\ (st)");
    if (auto r = relatively_prime(A, a, b); !r.holds)
        throw Error("a and b are not relatively prime: " + r.witness->to_string() + " in (a)∩(b) \\ (ab)");

    WChain c = w_chain(vars, field, b, s, t, N);
    std::string x = fresh_name(*vars, "X");
    auto big = extend_vars(vars, {x});
    Polynomial rel = embed(a, big) * Polynomial::variable(big, field, x) - embed(b, big);
    LevelCheck out;
    for (int i = 0; i <= N; ++i) {
        Ideal I(big, field, {embed(s.pow(i), big), rel});
        Ideal contracted = project(elim_ideal(I, names_of(*vars)), vars, field);
        out.levels.push_back(ideal_equal(contracted, c.W[i]));
    }
    return out;
}

// ---------------------------------------------------------------------------

PresentedRing radical_extension(const PresentedRing& A, const Polynomial& F, long c, const std::string& new_var) {
    if (!A.grading) throw Error("ring is not graded");
    if (c <= 0) throw Error("exponent c must be positive");
    if (F.is_zero()) throw Error("F must be nonzero");
    auto omega = degree_of(F, *A.grading);
    if (!omega) throw Error("F not homogeneous");
    if (gcd2(Int(c), *omega) != 1) throw Error("gcd(c, deg F) != 1");

    std::string z = fresh_name(*A.vars, new_var);
    auto big = extend_vars(A.vars, {z});
    std::vector<Int> w;
    for (const auto& x : A.grading->weights()) w.push_back(x * c);
    w.push_back(*omega);
    std::vector<Polynomial> rels;
    for (const auto& r : A.relations) rels.push_back(embed(r, big));
    rels.push_back(Polynomial::variable(big, A.field, z).pow(c) - embed(F, big));
    PresentedRing B(A.field, big, std::move(rels), Grading(big, w), "radical-extension");
    B.notes = {{"F", F.to_string()}, {"c", std::to_string(c)}, {"deg F", omega->get_str()}};
    return B;
}

PhamBrieskorn pham_brieskorn(Field field, const std::vector<long>& a) {
    std::size_t n = a.size();
    if (n < 3) throw Error("need n >= 3 exponents");
    for (long x : a)
        if (x < 1) throw Error("exponents must be positive");
    int hyp;
    if (n == 3) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                if (gcd2(a[i], a[j]) != 1)
                    throw Error("case (2) fails: a" + std::to_string(i + 1) + "=" + std::to_string(a[i]) + " and a" +
                                std::to_string(j + 1) + "=" + std::to_string(a[j]) + " are not coprime");
        hyp = 2;
    } else {
        Int prod = 1;
        for (std::size_t i = 0; i + 1 < n; ++i) prod *= a[i];
        if (gcd2(a[n - 1], prod) != 1) throw Error("case (1) fails: gcd(a_n, a_1...a_{n-1}) != 1");
        hyp = 1;
    }
    std::vector<Int> head(a.begin(), a.end() - 1);
    Int omega = lcm_of(head);
    std::vector<std::string> names;
    std::vector<Int> w;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        names.push_back("X" + std::to_string(i + 1));
        w.push_back(omega / a[i]);
    }
    PresentedRing A = free_ring(field, names, w);
    Polynomial F(A.vars, field);
    for (std::size_t i = 0; i + 1 < n; ++i) F -= Polynomial::variable(A.vars, field, names[i]).pow(a[i]);
    PresentedRing B = radical_extension(A, F, a[n - 1], "X" + std::to_string(n));
    B.provenance = "pham-brieskorn";
    std::string ex;
    for (std::size_t i = 0; i < n; ++i) ex += (i ? "," : "") + std::to_string(a[i]);
    B.notes = {{"exponents", ex}, {"case", std::to_string(hyp)}, {"omega", omega.get_str()}};
    return {std::move(B), hyp, omega};
}

FourthCriterion fourth_criterion(const PresentedRing& A, const Polynomial& a, const Polynomial& b, long n) {
    if (!A.grading) throw Error("ring is not graded");
    if (n <= 0) throw Error("exponent n must be positive");
    auto da = degree_of(a, *A.grading), db = degree_of(b, *A.grading);
    if (!da || !db) throw Error("a and b must be homogeneous");
    Int delta = *db - *da;
    if (gcd2(Int(n), delta) != 1) throw Error("gcd(n, deg b - deg a) != 1");
    Extension ext = present_extension(A, a, b, "X");
    std::string x = ext.ring.vars->names().back();
    PresentedRing B = radical_extension(ext.ring, Polynomial::variable(ext.ring.vars, A.field, x), n, "Z");
    B.provenance = "fourth-criterion";
    B.notes = {{"a", a.to_string()}, {"b", b.to_string()}, {"n", std::to_string(n)}, {"deg X", delta.get_str()}};
    return {std::move(B), delta};
}

FifthWeights fifth_weights(const Int& omega, const std::vector<Int>& e) {
    if (e.empty()) throw Error("need at least one exponent");
    for (const auto& x : e)
        if (x < 1) throw Error("exponents must be positive");
    std::vector<Int> all = e;
    all.push_back(omega);
    if (gcd_of(all) != 1) throw Error("gcd(e_1, ..., e_n, omega) != 1");
    std::vector<Int> neg;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) neg.push_back(-e[i]);
    std::vector<Int> m = neg.empty() ? std::vector<Int>{} : prime_avoid(neg, omega, e.back());
    Int check = omega;
    for (std::size_t i = 0; i < m.size(); ++i) check -= m[i] * e[i];
    if (gcd2(e.back(), check) != 1) throw Error("internal: prime avoidance result fails its postcondition");
    return {std::move(m), check};
}

// ---------------------------------------------------------------------------
// threefold family

namespace {

struct ThreefoldParts {
    VarTablePtr xvars;
    std::vector<Polynomial> p;
    PresentedRing ring;
};

ThreefoldParts build_threefold(const ThreefoldData& d) {
    std::size_t n = d.p.size();
    if (d.u.size() != n || d.v.size() != n || d.a.size() != n || d.b.size() != n)
        throw Error("p, u, v, a, b must have the same length");
    auto xvars = make_vars({"x"});
    std::vector<Polynomial> p;
    for (const auto& s : d.p) {
        auto q = parse_polynomial(s, xvars, d.field);
        if (q.is_zero()) throw Error("p_i must be nonzero");
        p.push_back(q);
    }
    Int prod_b = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (d.a[i] < 1 || d.b[i] < 1) throw Error("exponents a_i, b_i must be positive");
        prod_b *= d.b[i];
        if (gcd2(d.a[i], prod_b) != 1)
            throw Error("gcd(a_i, b_1...b_i) != 1 at i=" + std::to_string(i + 1));
        if (d.u[i].is_zero() || d.v[i].is_zero()) throw Error("u_i, v_i must be units");
        if (d.u[i].field() != d.field || d.v[i].field() != d.field) throw Error("coefficient field mismatch");
    }
    long long M = 1;
    for (const auto& q : p) M = std::max(M, q.total_degree());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !divide_exact(p[j].pow(M), p[i]))
                throw Error("p_" + std::to_string(i + 1) + " and p_" + std::to_string(j + 1) +
                            " do not have the same prime factors");

    std::vector<std::string> names{"x"};
    for (std::size_t i = 0; i <= n + 1; ++i) names.push_back("z" + std::to_string(i));
    auto vars = make_vars(names);
    auto z = [&](std::size_t i) { return Polynomial::variable(vars, d.field, "z" + std::to_string(i)); };
    std::vector<Polynomial> rels;
    for (std::size_t i = 1; i <= n; ++i) {
        auto ui = Polynomial::constant(vars, d.field, d.u[i - 1]);
        auto vi = Polynomial::constant(vars, d.field, d.v[i - 1]);
        rels.push_back(embed(p[i - 1], vars) * z(i + 1) + ui * z(i).pow(d.a[i - 1]) + vi * z(i - 1).pow(d.b[i - 1]));
    }
    PresentedRing ring(d.field, vars, rels, std::nullopt, "threefold-family");
    return {xvars, p, std::move(ring)};
}

}  // namespace

ThreefoldReport threefold_family(const ThreefoldData& d) {
    auto parts = build_threefold(d);
    ThreefoldReport rep{parts.ring, std::nullopt, std::nullopt};
    if (!d.kappa) return rep;
    auto kappa = parse_polynomial(*d.kappa, parts.xvars, d.field);
    if (kappa.is_zero() || kappa.is_constant()) throw Error("kappa must be a non-constant polynomial in x");
    for (std::size_t i = 0; i < parts.p.size(); ++i)
        if (!divide_exact(parts.p[i], kappa)) throw Error("kappa does not divide p_" + std::to_string(i + 1));
    const auto& vars = parts.ring.vars;
    Field k = d.field;
    auto kap = embed(kappa, vars);
    auto z = [&](std::size_t i) { return Polynomial::variable(vars, k, "z" + std::to_string(i)); };
    std::vector<Polynomial> shape{kap};
    for (std::size_t i = 1; i <= parts.p.size(); ++i)
        shape.push_back(Polynomial::constant(vars, k, d.u[i - 1]) * z(i).pow(d.a[i - 1]) +
                        Polynomial::constant(vars, k, d.v[i - 1]) * z(i - 1).pow(d.b[i - 1]));
    Ideal target(vars, k, shape);
    rep.kappa_shape = ideal_equal(parts.ring.relation_ideal().with(kap), target);
    rep.zn_outside = !target.contains(z(parts.p.size()));
    return rep;
}

namespace {

// Univariate helpers over k[x] (table with the single variable x).
std::pair<Polynomial, Polynomial> udivmod(Polynomial f, const Polynomial& g) {
    Polynomial q(f.vars(), f.field());
    const Term& lg = g.leading();
    while (!f.is_zero() && f.total_degree() >= g.total_degree()) {
        const Term& lf = f.leading();
        auto t = Polynomial::monomial(f.vars(), f.field(), lf.mono / lg.mono, lf.coeff / lg.coeff);
        q += t;
        f -= t * g;
    }
    return {q, f};
}

Polynomial inverse_mod(const Polynomial& r, const Polynomial& q) {
    Polynomial r0 = q, r1 = udivmod(r, q).second;
    Polynomial s0(q.vars(), q.field()), s1 = Polynomial::constant(q.vars(), q.field(), 1);
    while (!r1.is_zero()) {
        auto [qq, rr] = udivmod(r0, r1);
        Polynomial s2 = s0 - qq * s1;
        r0 = std::move(r1);
        r1 = std::move(rr);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (!r0.is_constant()) throw Error("q is not irreducible: residue field is not a field");
    return udivmod(s0.scaled(r0.leading().coeff.inverse()), q).second;
}

}  // namespace

TangentReport jacobian_tangent_dim(const ThreefoldData& d, const std::string& q_text) {
    for (std::size_t i = 0; i < d.a.size() && i < d.b.size(); ++i)
        if (d.a[i] < 2 || d.b[i] < 2) throw Error("hypothesis a_i, b_i >= 2 fails at i=" + std::to_string(i + 1));
    ThreefoldData plain = d;
    plain.kappa.reset();
    auto parts = build_threefold(plain);
    for (std::size_t i = 0; i < parts.p.size(); ++i)
        if (parts.p[i].is_constant()) throw Error("hypothesis p_i not in k fails at i=" + std::to_string(i + 1));
    auto q = parse_polynomial(q_text, parts.xvars, d.field);
    if (q.is_zero() || q.is_constant()) throw Error("q must be a non-constant polynomial in x");
    for (std::size_t i = 0; i < parts.p.size(); ++i)
        if (!divide_exact(parts.p[i], q)) throw Error("q does not divide p_" + std::to_string(i + 1));

    const auto& vars = parts.ring.vars;
    std::size_t n = parts.p.size(), cols = vars->size();
    TangentReport rep{0, 0, {}};
    std::vector<std::vector<Polynomial>> M;
    for (const auto& f : parts.ring.relations) {
        std::vector<std::string> srow;
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < cols; ++j) {
            Polynomial e = derivative(f, j);
            srow.push_back(e.to_string());
            // evaluate at the maximal ideal: z_j -> 0, then reduce modulo q(x)
            std::vector<Term> keep;
            for (const auto& t : e.terms()) {
                bool only_x = true;
                for (std::size_t v = 1; v < cols; ++v)
                    if (t.mono[v] != 0) only_x = false;
                if (only_x) keep.push_back(t);
            }
            Polynomial ex = embed(Polynomial::from_terms(vars, d.field, keep), parts.xvars);
            row.push_back(udivmod(ex, q).second);
        }
        rep.jacobian.push_back(std::move(srow));
        M.push_back(std::move(row));
    }
    // Gaussian elimination over k[x]/(q)
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < n; ++c) {
        std::size_t piv = rank;
        while (piv < n && M[piv][c].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(M[piv], M[rank]);
        Polynomial inv = inverse_mod(M[rank][c], q);
        for (auto& e : M[rank]) e = udivmod(e * inv, q).second;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || M[r][c].is_zero()) continue;
            Polynomial factor = M[r][c];
            for (std::size_t j = 0; j < cols; ++j) M[r][j] = udivmod(M[r][j] - factor * M[rank][j], q).second;
        }
        ++rank;
    }
    rep.rank = static_cast<int>(rank);
    rep.tangent_dim = static_cast<int>(cols) - rep.rank;
    return rep;
}

// ---------------------------------------------------------------------------
// trinomial rings

bool TrinomialReport::holds() const {
    return std::all_of(steps.begin(), steps.end(), [](const TrinomialStep& s) { return s.homogeneous && s.gcd == 1; });
}

TrinomialReport trinomial_ring(const TrinomialData& data) {
    const auto& beta = data.beta;
    if (beta.size() < 3) throw Error("(D.1) needs r >= 2, i.e. at least three blocks");
    std::size_t r = beta.size() - 1;
    for (std::size_t i = 0; i <= r; ++i) {
        if (beta[i].empty()) throw Error("(D.1) block " + std::to_string(i) + " is empty");
        for (long x : beta[i])
            if (x < 1) throw Error("(D.2) exponents must be positive integers");
    }
    std::vector<Int> d;
    for (const auto& bi : beta) {
        std::vector<Int> v(bi.begin(), bi.end());
        d.push_back(gcd_of(v));
    }
    for (std::size_t i = 0; i <= r; ++i)
        for (std::size_t j = i + 1; j <= r; ++j)
            if (gcd2(d[i], d[j]) != 1)
                throw Error("(D.2) d_" + std::to_string(i) + "=" + d[i].get_str() + " and d_" + std::to_string(j) +
                            "=" + d[j].get_str() + " are not relatively prime");
    if (data.lambda.size() != r - 1) throw Error("(D.3) needs r-1 = " + std::to_string(r - 1) + " constants");
    for (std::size_t i = 0; i < data.lambda.size(); ++i) {
        if (data.lambda[i].field() != data.field) throw Error("coefficient field mismatch");
        if (data.lambda[i].is_zero()) throw Error("(D.3) lambda_" + std::to_string(i + 2) + " is zero");
        for (std::size_t j = 0; j < i; ++j)
            if (data.lambda[i] == data.lambda[j])
                throw Error("(D.3) lambda_" + std::to_string(j + 2) + " and lambda_" + std::to_string(i + 2) +
                            " are not distinct");
    }

    std::vector<std::vector<std::string>> names = data.names;
    if (names.empty()) {
        for (std::size_t i = 0; i <= r; ++i) {
            names.emplace_back();
            for (std::size_t j = 0; j < beta[i].size(); ++j)
                names.back().push_back("t" + std::to_string(i) + "_" + std::to_string(j + 1));
        }
    }
    if (names.size() != beta.size()) throw Error("(D.1) names must match the partition");
    std::vector<std::string> flat;
    for (std::size_t i = 0; i <= r; ++i) {
        if (names[i].size() != beta[i].size()) throw Error("(D.1) names must match the partition");
        flat.insert(flat.end(), names[i].begin(), names[i].end());
    }
    auto vars = make_vars(flat);
    Field k = data.field;
    auto block_monomial = [&](std::size_t i) {
        Polynomial m = Polynomial::constant(vars, k, 1);
        for (std::size_t j = 0; j < beta[i].size(); ++j) m *= Polynomial::variable(vars, k, names[i][j]).pow(beta[i][j]);
        return m;
    };
    std::vector<Polynomial> rels;
    for (std::size_t i = 2; i <= r; ++i)
        rels.push_back(block_monomial(0) + block_monomial(1).scaled(data.lambda[i - 2]) + block_monomial(i));
    PresentedRing ring(k, vars, rels, std::nullopt, "trinomial");

    std::string bs, ls;
    for (std::size_t i = 0; i <= r; ++i) {
        bs += i ? ";" : "";
        for (std::size_t j = 0; j < beta[i].size(); ++j) bs += (j ? "," : "") + std::to_string(beta[i][j]);
    }
    for (std::size_t i = 0; i < data.lambda.size(); ++i) ls += (i ? "," : "") + data.lambda[i].to_string();
    std::string part;
    for (std::size_t i = 0; i <= r; ++i) part += (i ? "+" : "") + std::to_string(beta[i].size());
    std::string ds;
    for (std::size_t i = 0; i <= r; ++i) ds += (i ? "," : "") + d[i].get_str();
    ring.notes = {{"partition", part},
                  {"beta", bs},
                  {"lambda", ls},
                  {"(D.1)", "r = " + std::to_string(r) + ", block sizes " + part},
                  {"(D.2)", "d = " + ds + ", pairwise coprime"},
                  {"(D.3)", "lambda = " + ls + ", nonzero and distinct"}};

    TrinomialReport rep{std::move(ring), d, {}};
    for (std::size_t m = 2; m <= r; ++m) {
        TrinomialStep step;
        step.m = static_cast<int>(m);
        step.relation_degree = 1;
        for (std::size_t l = 0; l < m; ++l) step.relation_degree *= d[l];
        step.homogeneous = true;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Int> bi(beta[i].begin(), beta[i].end());
            Bezout bz = gcd_bezout(bi);
            Int cof = 1;
            for (std::size_t l = 0; l < m; ++l)
                if (l != i) cof *= d[l];
            Int deg = 0;
            for (std::size_t j = 0; j < beta[i].size(); ++j) {
                Int w = bz.coeffs[j] * cof;
                step.weights.emplace_back(names[i][j], w);
                deg += w * beta[i][j];
            }
            if (deg != step.relation_degree) step.homogeneous = false;
        }
        std::vector<Int> g(beta[m].begin(), beta[m].end());
        g.push_back(step.relation_degree);
        step.gcd = gcd_of(g);
        rep.steps.push_back(std::move(step));
    }
    return rep;
}

}  // namespace ufdlab
