#include "ufdlab/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ufdlab {

// ---------------------------------------------------------------------------
// Monomial orders

MonomialOrder MonomialOrder::elimination(const VarTable& vars, const std::set<std::string>& eliminate) {
    std::vector<bool> block(vars.size(), false);
    for (const auto& name : eliminate) block[vars.index(name)] = true;
    return MonomialOrder(Kind::Elimination, std::move(block));
}

namespace {

// grevlex restricted to the variables where mask[i] == want.
bool masked_grevlex_greater(const Monomial& a, const Monomial& b, const std::vector<bool>& mask, bool want) {
    long long da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (mask[i] == want) {
            da += a[i];
            db += b[i];
        }
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (mask[i] == want && a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Lex:
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] > b[i];
            return false;
        case Kind::DegRevLex:
            return grevlex_greater(a, b);
        case Kind::Elimination:
            if (masked_grevlex_greater(a, b, block_, true)) return true;
            if (masked_grevlex_greater(b, a, block_, true)) return false;
            return masked_grevlex_greater(a, b, block_, false);
    }
    return false;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case Kind::Lex:
            return "lex";
        case Kind::DegRevLex:
            return "degrevlex";
        case Kind::Elimination: {
            std::string s = "elim(";
            for (bool b : block_) s += b ? '1' : '0';
            return s + ")";
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Internal sorted representation: terms ascending in `ord`, leading term at back().

namespace {

using Terms = std::vector<Term>;

struct Ring {
    VarTablePtr vars;
    Field field;
};

Terms sorted_terms(const Polynomial& p, const MonomialOrder& ord) {
    Terms t = p.terms();
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.greater(b.mono, a.mono); });
    return t;
}

Polynomial to_poly(const Ring& r, Terms t) { return Polynomial::from_terms(r.vars, r.field, std::move(t)); }

// a - c*m*b, both ascending.
Terms sub_scaled(const Terms& a, const Terms& b, const Monomial& m, const FieldElem& c, const MonomialOrder& ord) {
    Terms out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        Monomial bm = b[j].mono * m;
        if (i == a.size() || ord.greater(a[i].mono, bm)) {
            out.push_back({std::move(bm), -(b[j].coeff * c)});
            ++j;
        } else if (ord.greater(bm, a[i].mono)) {
            out.push_back(a[i++]);
        } else {
            FieldElem v = a[i].coeff - b[j].coeff * c;
            if (!v.is_zero()) out.push_back({std::move(bm), std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

void make_monic(Terms& t) {
    if (t.empty()) return;
    FieldElem inv = t.back().coeff.inverse();
    for (auto& x : t) x.coeff *= inv;
}

void enforce_caps(const Terms& t, const VarTable& vars) {
    Caps caps = current_caps();
    if (t.size() > caps.terms)
        throw InstanceTooLarge("polynomial with " + std::to_string(t.size()) + " terms exceeds term cap " +
                               std::to_string(caps.terms));
    for (const auto& term : t)
        if (term.mono.total_degree() > caps.degree)
            throw InstanceTooLarge("degree " + std::to_string(term.mono.total_degree()) + " exceeds degree cap " +
                                   std::to_string(caps.degree) + " (in " + monomial_to_string(vars, term.mono) + ")");
}

// Full reduction of p modulo basis (all ascending, nonzero).
Terms reduce_terms(Terms p, const std::vector<Terms>& basis, const MonomialOrder& ord, const VarTable& vars,
                   bool tails = true) {
    Terms rem;  // collected in descending order
    std::size_t steps = 0;
    while (!p.empty()) {
        if ((++steps & 63) == 0) {
            check_deadline();
            enforce_caps(p, vars);
        }
        const Term& lt = p.back();
        const Terms* div = nullptr;
        for (const auto& g : basis)
            if (g.back().mono.divides(lt.mono)) {
                div = &g;
                break;
            }
        if (div) {
            Monomial m = lt.mono / div->back().mono;
            FieldElem c = lt.coeff / div->back().coeff;
            p = sub_scaled(p, *div, m, c, ord);
        } else {
            if (!tails) {
                std::reverse(rem.begin(), rem.end());
                p.insert(p.end(), rem.begin(), rem.end());
                return p;
            }
            rem.push_back(std::move(p.back()));
            p.pop_back();
        }
    }
    std::reverse(rem.begin(), rem.end());
    return rem;
}

void require_laurent_free(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens)
        for (const auto& t : g.terms())
            for (std::size_t i = 0; i < t.mono.size(); ++i)
                if (t.mono[i] != 0 && g.vars()->invertible(i)) throw Error("saturate the unit first");
}

Ring ring_of(const std::vector<Polynomial>& ps) {
    if (ps.empty()) throw Error("empty generator list");
    return {ps.front().vars(), ps.front().field()};
}

}  // namespace

const Term& leading_term(const Polynomial& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw Error("leading term of zero");
    const Term* best = &p.terms().front();
    for (const auto& t : p.terms())
        if (ord.greater(t.mono, best->mono)) best = &t;
    return *best;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
    std::vector<Terms> b;
    for (const auto& g : basis)
        if (!g.is_zero()) b.push_back(sorted_terms(g, ord));
    return to_poly({f.vars(), f.field()}, reduce_terms(sorted_terms(f, ord), b, ord, *f.vars()));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    const Term& lf = leading_term(f, ord);
    const Term& lg = leading_term(g, ord);
    Monomial l = lf.mono.lcm(lg.mono);
    return f.times_monomial(l / lf.mono, lf.coeff.inverse()) - g.times_monomial(l / lg.mono, lg.coeff.inverse());
}

bool is_groebner(const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
    std::vector<Polynomial> nz;
    for (const auto& g : basis)
        if (!g.is_zero()) nz.push_back(g);
    for (std::size_t i = 0; i < nz.size(); ++i)
        for (std::size_t j = i + 1; j < nz.size(); ++j)
            if (!reduce(s_polynomial(nz[i], nz[j], ord), nz, ord).is_zero()) return false;
    return true;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                   GroebnerOptions options) {
    std::vector<Polynomial> nonzero;
    for (const auto& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) return {};
    require_laurent_free(nonzero);
    Ring ring = ring_of(nonzero);
    const VarTable& vars = *ring.vars;

    std::vector<Terms> basis;
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto add = [&](Terms t) {
        make_monic(t);
        enforce_caps(t, vars);
        std::size_t k = basis.size();
        basis.push_back(std::move(t));
        for (std::size_t i = 0; i < k; ++i) {
            pairs.push_back({i, k, basis[i].back().mono.lcm(basis[k].back().mono)});
            pending.insert({i, k});
        }
    };

    for (const auto& g : nonzero) {
        Terms r = reduce_terms(sorted_terms(g, ord), basis, ord, vars);
        if (!r.empty()) add(std::move(r));
    }

    while (!pairs.empty()) {
        check_deadline();
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            long long da = a.lcm.total_degree(), db = b.lcm.total_degree();
            if (da != db) return da < db;
            return ord.greater(b.lcm, a.lcm);
        });
        Pair p = *best;
        pairs.erase(best);
        pending.erase({p.i, p.j});

        const Monomial& li = basis[p.i].back().mono;
        const Monomial& lj = basis[p.j].back().mono;
        if (li.coprime(lj)) continue;
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[k].back().mono.divides(p.lcm)) continue;
            auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chain = true;
        }
        if (chain) continue;

        // basis elements are monic: S = (lcm/li)*gi - (lcm/lj)*gj
        Terms s = sub_scaled(Terms{}, basis[p.i], p.lcm / li, FieldElem(ring.field, -1L), ord);
        s = sub_scaled(s, basis[p.j], p.lcm / lj, FieldElem(ring.field, 1L), ord);
        Terms r = reduce_terms(std::move(s), basis, ord, vars);
        if (!r.empty()) add(std::move(r));
    }

    // Minimal basis: drop elements whose leading monomial is divisible by another's.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j] || !keep[i]) continue;
            const Monomial& mi = basis[i].back().mono;
            const Monomial& mj = basis[j].back().mono;
            if (mj.divides(mi) && (mi != mj || j < i)) keep[i] = false;
        }
    std::vector<Terms> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    if (options.interreduce) {
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Terms> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            minimal[i] = reduce_terms(std::move(minimal[i]), others, ord, vars);
            make_monic(minimal[i]);
        }
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Terms& a, const Terms& b) { return ord.greater(b.back().mono, a.back().mono); });
    std::vector<Polynomial> out;
    for (auto& t : minimal) out.push_back(to_poly(ring, std::move(t)));
    return out;
}

// ---------------------------------------------------------------------------
// Ideals

Ideal::Ideal(VarTablePtr vars, Field field, std::vector<Polynomial> gens)
    : vars_(std::move(vars)), field_(field) {
    for (auto& g : gens) {
        if (g.field() != field_) throw Error("coefficient field mismatch");
        if (!(*g.vars() == *vars_)) throw Error("generator lives in a different ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(VarTablePtr vars, Field field) {
    auto one = Polynomial::constant(vars, field, 1);
    return Ideal(std::move(vars), field, {one});
}

const std::vector<Polynomial>& Ideal::basis(const MonomialOrder& ord, GroebnerOptions options) const {
    std::string key = ord.name() + (options.interreduce ? "/r" : "/m");
    for (const auto& c : cache_)
        if (c.key == key) return c.basis;
    cache_.push_back({key, buchberger(gens_, ord, options)});
    return cache_.back().basis;
}

bool Ideal::contains(const Polynomial& f, const MonomialOrder& ord) const {
    return reduce(f, basis(ord), ord).is_zero();
}

bool Ideal::is_unit() const {
    const auto& b = basis();
    return std::any_of(b.begin(), b.end(), [](const Polynomial& p) { return p.is_constant() && !p.is_zero(); });
}

bool Ideal::is_zero() const { return gens_.empty(); }

Ideal Ideal::operator+(const Ideal& o) const {
    std::vector<Polynomial> g = gens_;
    g.insert(g.end(), o.gens_.begin(), o.gens_.end());
    return Ideal(vars_, field_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& o) const {
    std::vector<Polynomial> g;
    for (const auto& a : gens_)
        for (const auto& b : o.gens_) g.push_back(a * b);
    return Ideal(vars_, field_, std::move(g));
}

Ideal Ideal::pow(unsigned k) const {
    Ideal r = unit(vars_, field_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Ideal Ideal::times(const Polynomial& f) const {
    std::vector<Polynomial> g;
    for (const auto& a : gens_) g.push_back(a * f);
    return Ideal(vars_, field_, std::move(g));
}

Ideal Ideal::with(const Polynomial& f) const {
    std::vector<Polynomial> g = gens_;
    g.push_back(f);
    return Ideal(vars_, field_, std::move(g));
}

std::string Ideal::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].to_string();
    }
    return s + ")";
}

bool ideal_subset(const Ideal& a, const Ideal& b, const MonomialOrder& ord, GroebnerOptions options) {
    const auto& gb = b.basis(ord, options);
    for (const auto& g : a.gens())
        if (!reduce(g, gb, ord).is_zero()) return false;
    return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& ord, GroebnerOptions options) {
    return ideal_subset(a, b, ord, options) && ideal_subset(b, a, ord, options);
}

Ideal elim_ideal(const Ideal& ideal, const std::set<std::string>& keep) {
    std::set<std::string> drop;
    for (const auto& n : ideal.vars()->names())
        if (!keep.count(n)) drop.insert(n);
    for (const auto& n : keep) ideal.vars()->index(n);
    if (drop.empty()) return ideal;
    auto ord = MonomialOrder::elimination(*ideal.vars(), drop);
    std::vector<Polynomial> out;
    for (const auto& g : ideal.basis(ord)) {
        bool ok = true;
        for (auto v : g.support())
            if (drop.count(ideal.vars()->name(v))) ok = false;
        if (ok) out.push_back(g);
    }
    return Ideal(ideal.vars(), ideal.field(), std::move(out));
}

namespace {

std::string fresh_name(const VarTable& vars, const std::string& stem) {
    std::string name = stem;
    for (int i = 0; vars.find(name); ++i) name = stem + std::to_string(i);
    return name;
}

std::set<std::string> all_names(const VarTable& vars) { return {vars.names().begin(), vars.names().end()}; }

Ideal project(const Ideal& big, const VarTablePtr& vars, Field field) {
    std::vector<Polynomial> g;
    for (const auto& p : big.gens()) g.push_back(embed(p, vars));
    return Ideal(vars, field, std::move(g));
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
    if (!(*a.vars() == *b.vars()) || a.field() != b.field()) throw Error("ideals live in different rings");
    if (a.is_zero() || b.is_zero()) return Ideal(a.vars(), a.field());
    std::string t = fresh_name(*a.vars(), "_tag");
    auto big = extend_vars(a.vars(), {t});
    Field k = a.field();
    auto tv = Polynomial::variable(big, k, t);
    auto one = Polynomial::constant(big, k, 1);
    std::vector<Polynomial> gens;
    for (const auto& g : a.gens()) gens.push_back(tv * embed(g, big));
    for (const auto& g : b.gens()) gens.push_back((one - tv) * embed(g, big));
    Ideal e = elim_ideal(Ideal(big, k, std::move(gens)), all_names(*a.vars()));
    return project(e, a.vars(), k);
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& t) {
    if (t.is_zero()) throw Error("ideal quotient by zero");
    Ideal cap = intersect(ideal, Ideal(ideal.vars(), ideal.field(), {t}));
    std::vector<Polynomial> out;
    for (const auto& g : cap.gens()) {
        auto q = divide_exact(g, t);
        if (!q) throw Error("internal: intersection generator not divisible by " + t.to_string());
        out.push_back(*q);
    }
    return Ideal(ideal.vars(), ideal.field(), std::move(out));
}

Saturation saturation(const Ideal& ideal, const Polynomial& f, int max_steps) {
    if (f.is_zero()) throw Error("saturation by zero");
    Ideal current = ideal;
    for (int step = 1; step <= max_steps; ++step) {
        Ideal next = ideal_quotient(current, f);
        if (ideal_equal(next, current)) return {current, true, step};
        current = std::move(next);
    }
    return {current, false, max_steps};
}

Ideal saturation_by_tag(const Ideal& ideal, const Polynomial& f) {
    if (f.is_zero()) throw Error("saturation by zero");
    std::string s = fresh_name(*ideal.vars(), "_sat");
    auto big = extend_vars(ideal.vars(), {s});
    Field k = ideal.field();
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.gens()) gens.push_back(embed(g, big));
    gens.push_back(Polynomial::constant(big, k, 1) - Polynomial::variable(big, k, s) * embed(f, big));
    Ideal e = elim_ideal(Ideal(big, k, std::move(gens)), all_names(*ideal.vars()));
    return project(e, ideal.vars(), k);
}

// ---------------------------------------------------------------------------
// Oracles

namespace {

void monomials_up_to(std::size_t nvars, const std::vector<std::size_t>& support, int max_deg,
                     std::vector<Monomial>& out) {
    Monomial m(nvars);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
        if (k == support.size()) {
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m[support[k]] = e;
            rec(k + 1, left - e);
        }
        m[support[k]] = 0;
    };
    rec(0, max_deg);
}

}  // namespace

bool brute_force_member(const Polynomial& f, const std::vector<Polynomial>& gens, int deg_bound) {
    if (!f.is_zero() && f.total_degree() > deg_bound) throw Error("degree bound below deg f");
    if (f.is_zero()) return true;
    const auto& vars = f.vars();
    std::vector<std::size_t> all(vars->size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<Monomial> monos;
    monomials_up_to(vars->size(), all, deg_bound, monos);
    std::map<Monomial, std::size_t> row_of;
    for (const auto& m : monos) row_of.emplace(m, row_of.size());

    // Columns: multiplier monomial * generator; last column is f.
    std::vector<std::map<std::size_t, FieldElem>> cols;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        long long dg = g.total_degree();
        if (dg > deg_bound) continue;
        for (const auto& m : monos) {
            if (m.total_degree() + dg > deg_bound) continue;
            std::map<std::size_t, FieldElem> col;
            for (const auto& t : g.terms()) col.emplace(row_of.at(t.mono * m), t.coeff);
            cols.push_back(std::move(col));
        }
    }
    std::size_t nrows = monos.size(), ncols = cols.size();
    Field k = f.field();
    std::vector<std::vector<FieldElem>> a(nrows, std::vector<FieldElem>(ncols + 1, FieldElem(k)));
    for (std::size_t c = 0; c < ncols; ++c)
        for (auto& [r, v] : cols[c]) a[r][c] = v;
    for (const auto& t : f.terms()) a[row_of.at(t.mono)][ncols] = t.coeff;

    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
        check_deadline();
        std::size_t piv = rank;
        while (piv < nrows && a[piv][c].is_zero()) ++piv;
        if (piv == nrows) continue;
        std::swap(a[piv], a[rank]);
        FieldElem inv = a[rank][c].inverse();
        for (std::size_t j = c; j <= ncols; ++j) a[rank][j] *= inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            FieldElem factor = a[r][c];
            for (std::size_t j = c; j <= ncols; ++j)
                if (!a[rank][j].is_zero()) a[r][j] -= factor * a[rank][j];
        }
        ++rank;
    }
    for (std::size_t r = rank; r < nrows; ++r)
        if (!a[r][ncols].is_zero()) return false;
    return true;
}

IrreducibilityVerdict brute_force_irreducible(const Polynomial& f, int max_deg, std::size_t candidate_cap) {
    Field k = f.field();
    if (!k.is_prime_field()) throw Error("brute-force irreducibility needs a prime field");
    if (f.is_zero() || f.is_constant()) throw Error("irreducibility of a constant");
    if (max_deg < 1) throw Error("max_deg must be positive");
    long long df = f.total_degree();
    if (df > 2LL * max_deg + 1) throw Error("deg f exceeds 2*max_deg+1; the search would be incomplete");

    std::vector<Monomial> monos;
    monomials_up_to(f.vars()->size(), f.support(), max_deg, monos);
    std::sort(monos.begin(), monos.end(), grevlex_greater);
    const std::uint64_t p = k.characteristic();
    const std::size_t n = monos.size();

    // Count (p^n - p)/(p - 1) monic candidates of positive degree.
    Int count = 0;
    for (std::size_t lead = 0; lead + 1 < n; ++lead) {
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p, n - lead - 1);
        count += pw;
    }
    if (count > Int(static_cast<unsigned long>(candidate_cap)))
        throw InstanceTooLarge(count.get_str() + " factor candidates exceed cap " + std::to_string(candidate_cap));

    IrreducibilityVerdict out{true, std::nullopt, std::nullopt, 0};
    std::vector<std::uint64_t> digits;
    for (std::size_t lead = 0; lead + 1 < n; ++lead) {
        std::size_t tail = n - lead - 1;
        digits.assign(tail, 0);
        for (;;) {
            if ((++out.candidates & 255) == 0) check_deadline();
            std::vector<Term> terms;
            terms.push_back({monos[lead], FieldElem(k, 1L)});
            for (std::size_t i = 0; i < tail; ++i)
                if (digits[i]) terms.push_back({monos[lead + 1 + i], FieldElem(k, Int(static_cast<unsigned long>(digits[i])))});
            Polynomial g = Polynomial::from_terms(f.vars(), k, std::move(terms));
            if (auto h = divide_exact(f, g); h && !h->is_constant()) {
                out.irreducible = false;
                out.g = g;
                out.h = *h;
                return out;
            }
            std::size_t i = 0;
            while (i < tail && ++digits[i] == p) digits[i++] = 0;
            if (i == tail) break;
        }
    }
    return out;
}

}  // namespace ufdlab
