#include "ufdlab/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ufdlab {

// ---------------------------------------------------------------------------
// VarTable

VarTable::VarTable(std::vector<std::string> names, std::vector<bool> invertible)
    : names_(std::move(names)), invertible_(std::move(invertible)) {
    if (invertible_.empty()) invertible_.assign(names_.size(), false);
    if (invertible_.size() != names_.size()) throw Error("invertibility flags do not match variable count");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw Error("empty variable name");
        if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
    }
}

std::optional<std::size_t> VarTable::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VarTable::index(const std::string& name) const {
    auto i = find(name);
    if (!i) throw Error("unknown variable '" + name + "'");
    return *i;
}

bool VarTable::has_invertible() const {
    return std::find(invertible_.begin(), invertible_.end(), true) != invertible_.end();
}

VarTablePtr make_vars(std::vector<std::string> names, std::vector<bool> invertible) {
    return std::make_shared<const VarTable>(std::move(names), std::move(invertible));
}

VarTablePtr extend_vars(const VarTablePtr& base, const std::vector<std::string>& extra, bool invertible) {
    std::vector<std::string> names = base->names();
    std::vector<bool> inv;
    for (std::size_t i = 0; i < base->size(); ++i) inv.push_back(base->invertible(i));
    for (const auto& n : extra) {
        names.push_back(n);
        inv.push_back(invertible);
    }
    return make_vars(std::move(names), std::move(inv));
}

// ---------------------------------------------------------------------------
// Monomial

long long Monomial::total_degree() const {
    long long d = 0;
    for (auto x : e_) d += x;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

bool Monomial::has_negative() const {
    return std::any_of(e_.begin(), e_.end(), [](Exponent x) { return x < 0; });
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

namespace {

Exponent checked_exponent(long long v) {
    if (v > std::numeric_limits<Exponent>::max() || v < std::numeric_limits<Exponent>::min())
        throw InstanceTooLarge("exponent overflow");
    return static_cast<Exponent>(v);
}

}  // namespace

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = checked_exponent(static_cast<long long>(e_[i]) + o.e_[i]);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = checked_exponent(static_cast<long long>(e_[i]) - o.e_[i]);
    return r;
}

Monomial Monomial::pow(long long k) const {
    Monomial r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = checked_exponent(static_cast<long long>(e_[i]) * k);
    return r;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
    long long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(VarTablePtr vars, Field field) : vars_(std::move(vars)), field_(field) {}

Polynomial Polynomial::constant(VarTablePtr vars, Field field, const FieldElem& c) {
    Monomial one(vars->size());
    return monomial(std::move(vars), field, std::move(one), c);
}

Polynomial Polynomial::constant(VarTablePtr vars, Field field, long c) {
    return constant(std::move(vars), field, FieldElem(field, c));
}

Polynomial Polynomial::variable(VarTablePtr vars, Field field, const std::string& name) {
    Monomial m(vars->size());
    m[vars->index(name)] = 1;
    return monomial(std::move(vars), field, std::move(m), FieldElem(field, 1L));
}

Polynomial Polynomial::monomial(VarTablePtr vars, Field field, Monomial m, FieldElem c) {
    std::vector<Term> t;
    t.push_back({std::move(m), std::move(c)});
    return from_terms(std::move(vars), field, std::move(t));
}

Polynomial Polynomial::from_terms(VarTablePtr vars, Field field, std::vector<Term> terms) {
    Polynomial p(std::move(vars), field);
    std::map<Monomial, FieldElem> acc;
    for (auto& t : terms) {
        if (t.mono.size() != p.vars_->size()) throw Error("monomial arity does not match the variable table");
        if (t.coeff.field() != field) throw Error("coefficient field mismatch");
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            if (t.mono[i] < 0 && !p.vars_->invertible(i))
                throw Error("negative exponent on non-invertible variable '" + p.vars_->name(i) + "'");
        auto [it, inserted] = acc.try_emplace(std::move(t.mono), t.coeff);
        if (!inserted) it->second += t.coeff;
    }
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.terms_.push_back({m, c});
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return grevlex_greater(a.mono, b.mono); });
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_unit_monomial() const {
    if (terms_.size() != 1) return false;
    const auto& m = terms_[0].mono;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0 && !vars_->invertible(i)) return false;
    return true;
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) throw Error("leading term of zero");
    return terms_.front();
}

long long Polynomial::total_degree() const {
    if (terms_.empty()) throw Error("degree of zero");
    long long d = terms_.front().mono.total_degree();
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

bool Polynomial::uses(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] != 0; });
}

std::vector<std::size_t> Polynomial::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vars_->size(); ++i)
        if (uses(i)) out.push_back(i);
    return out;
}

FieldElem Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return FieldElem(field_);
}

void Polynomial::require_compatible(const Polynomial& o) const {
    if (field_ != o.field_) throw Error("coefficient field mismatch");
    if (vars_ != o.vars_ && !(*vars_ == *o.vars_)) throw Error("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_compatible(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && grevlex_greater(terms_[i].mono, o.terms_[j].mono))) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || grevlex_greater(o.terms_[j].mono, terms_[i].mono)) {
            out.push_back(o.terms_[j++]);
        } else {
            FieldElem c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) out.push_back({std::move(terms_[i].mono), std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_compatible(b);
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
        check_deadline();
        for (const auto& t : b.terms_) raw.push_back({s.mono * t.mono, s.coeff * t.coeff});
    }
    return Polynomial::from_terms(a.vars_, a.field_, std::move(raw));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const FieldElem& c) const {
    if (c.is_zero()) return Polynomial(vars_, field_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const FieldElem& c) const {
    if (c.is_zero()) return Polynomial(vars_, field_);
    Polynomial r = *this;
    // Multiplying by a monomial preserves the grevlex order of terms.
    for (auto& t : r.terms_) {
        t.mono = t.mono * m;
        t.coeff *= c;
    }
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0 && !vars_->invertible(i))
            for (const auto& t : r.terms_)
                if (t.mono[i] < 0) throw Error("negative exponent on non-invertible variable '" + vars_->name(i) + "'");
    return r;
}

Polynomial Polynomial::pow(long long k) const {
    if (k < 0) {
        if (!is_unit_monomial()) throw Error("negative power of a non-unit");
        return monomial(vars_, field_, terms_[0].mono.pow(k), terms_[0].coeff.pow(k));
    }
    Polynomial result = constant(vars_, field_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().coeff.inverse());
}

std::string monomial_to_string(const VarTable& vars, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars.name(i);
        if (m[i] != 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = t.coeff.to_string();
        bool negative = !c.empty() && c[0] == '-';
        if (negative) c = c.substr(1);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            out += c;
        } else {
            if (c != "1") out += c + "*";
            out += monomial_to_string(*vars_, t.mono);
        }
    }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    a.require_compatible(b);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
}

Polynomial derivative(const Polynomial& p, std::size_t var) {
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        if (t.mono[var] == 0) continue;
        Monomial m = t.mono;
        FieldElem c = t.coeff * FieldElem(p.field(), static_cast<long>(m[var]));
        m[var] -= 1;
        out.push_back({std::move(m), std::move(c)});
    }
    return Polynomial::from_terms(p.vars(), p.field(), std::move(out));
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw Error("division by zero polynomial");
    for (const auto* q : {&f, &g})
        for (const auto& t : q->terms())
            if (t.mono.has_negative()) throw Error("divide_exact requires Laurent-free polynomials");
    Polynomial rest = f;
    Polynomial quotient(f.vars(), f.field());
    const Term& lg = g.leading();
    FieldElem inv = lg.coeff.inverse();
    while (!rest.is_zero()) {
        check_deadline();
        const Term& lt = rest.leading();
        if (!lg.mono.divides(lt.mono)) return std::nullopt;
        Monomial m = lt.mono / lg.mono;
        FieldElem c = lt.coeff * inv;
        quotient += Polynomial::monomial(f.vars(), f.field(), m, c);
        rest -= g.times_monomial(m, c);
    }
    return quotient;
}

Polynomial embed(const Polynomial& p, const VarTablePtr& target) {
    if (p.vars() == target || *p.vars() == *target) return Polynomial::from_terms(target, p.field(), p.terms());
    std::vector<std::optional<std::size_t>> where(p.vars()->size());
    for (std::size_t i = 0; i < p.vars()->size(); ++i) where[i] = target->find(p.vars()->name(i));
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        Monomial m(target->size());
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!where[i]) throw Error("variable '" + p.vars()->name(i) + "' is not available in the target ring");
            m[*where[i]] = t.mono[i];
        }
        out.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(target, p.field(), std::move(out));
}

// ---------------------------------------------------------------------------
// Gradings

Grading::Grading(VarTablePtr vars, std::vector<Int> weights) : vars_(std::move(vars)), w_(std::move(weights)) {
    if (w_.size() != vars_->size()) throw Error("grading must assign a weight to every variable");
}

Grading Grading::from_map(VarTablePtr vars, const std::map<std::string, Int>& weights) {
    std::vector<Int> w;
    for (const auto& name : vars->names()) {
        auto it = weights.find(name);
        if (it == weights.end()) throw Error("grading has no weight for variable '" + name + "'");
        w.push_back(it->second);
    }
    for (const auto& [name, _] : weights) vars->index(name);
    return Grading(std::move(vars), std::move(w));
}

Int Grading::degree(const Monomial& m) const {
    Int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0) d += w_[i] * static_cast<long>(m[i]);
    return d;
}

bool Grading::trivial() const {
    return std::all_of(w_.begin(), w_.end(), [](const Int& x) { return x == 0; });
}

Grading Grading::scaled(const Int& c) const {
    std::vector<Int> w = w_;
    for (auto& x : w) x *= c;
    return Grading(vars_, std::move(w));
}

std::optional<Int> degree_of(const Polynomial& p, const Grading& g) {
    if (p.is_zero()) throw Error("degree of zero");
    Int d = g.degree(p.terms().front().mono);
    for (const auto& t : p.terms())
        if (g.degree(t.mono) != d) return std::nullopt;
    return d;
}

std::map<Int, Polynomial> homogeneous_components(const Polynomial& p, const Grading& g) {
    std::map<Int, std::vector<Term>> buckets;
    for (const auto& t : p.terms()) buckets[g.degree(t.mono)].push_back(t);
    std::map<Int, Polynomial> out;
    for (auto& [d, terms] : buckets)
        out.emplace(d, Polynomial::from_terms(p.vars(), p.field(), std::move(terms)));
    return out;
}

// ---------------------------------------------------------------------------
// Ring maps

RingMap::RingMap(VarTablePtr source, VarTablePtr target, Field field, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), field_(field), images_(std::move(images)) {
    if (images_.size() != source_->size()) throw Error("ring map needs one image per source variable");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        images_[i] = embed(images_[i], target_);
        if (images_[i].field() != field_) throw Error("coefficient field mismatch");
        if (source_->invertible(i) && !images_[i].is_unit_monomial())
            throw Error("non-invertible image for invertible variable '" + source_->name(i) + "'");
    }
}

RingMap RingMap::from_names(VarTablePtr source, VarTablePtr target, Field field,
                            const std::map<std::string, Polynomial>& images) {
    std::vector<Polynomial> img;
    for (const auto& name : source->names()) {
        auto it = images.find(name);
        if (it != images.end()) img.push_back(it->second);
        else img.push_back(Polynomial::variable(target, field, name));
    }
    for (const auto& [name, _] : images) source->index(name);
    return RingMap(std::move(source), std::move(target), field, std::move(img));
}

Polynomial RingMap::apply(const Polynomial& p) const {
    if (p.field() != field_) throw Error("coefficient field mismatch");
    if (!(*p.vars() == *source_)) throw Error("polynomial does not live in the source ring of the map");
    std::vector<std::map<long long, Polynomial>> powers(source_->size());
    auto power = [&](std::size_t i, long long e) -> const Polynomial& {
        auto it = powers[i].find(e);
        if (it == powers[i].end()) {
            if (e < 0 && !images_[i].is_unit_monomial())
                throw Error("non-invertible image for negative exponent of '" + source_->name(i) + "'");
            it = powers[i].emplace(e, images_[i].pow(e)).first;
        }
        return it->second;
    };
    Polynomial out(target_, field_);
    for (const auto& t : p.terms()) {
        Polynomial term = Polynomial::constant(target_, field_, t.coeff);
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            if (t.mono[i] != 0) term *= power(i, t.mono[i]);
        out += term;
    }
    return out;
}

RingMap RingMap::then(const RingMap& next) const {
    if (!(*target_ == *next.source_)) throw Error("ring maps do not compose");
    std::vector<Polynomial> img;
    for (const auto& q : images_) img.push_back(next.apply(q));
    return RingMap(source_, next.target_, field_, std::move(img));
}

Polynomial apply_map(const RingMap& phi, const Polynomial& p) { return phi.apply(p); }

// ---------------------------------------------------------------------------
// Graded gadgets

Polynomial phi_theta(const Grading& g, const Monomial& unit, long long d, const Polynomial& p) {
    if (unit.size() != p.vars()->size()) throw Error("unit monomial arity does not match the ring");
    for (std::size_t i = 0; i < unit.size(); ++i)
        if (unit[i] != 0 && !p.vars()->invertible(i)) throw Error("unit monomial is not invertible");
    if (g.degree(unit) != 0) throw Error("unit monomial is not of degree 0");
    Polynomial out(p.vars(), p.field());
    for (const auto& [deg, comp] : homogeneous_components(p, g)) {
        if (!deg.fits_slong_p()) throw InstanceTooLarge("component degree");
        long long shift = d * deg.get_si();
        out += comp.times_monomial(unit.pow(shift), FieldElem(p.field(), 1L));
    }
    return out;
}

std::pair<Int, Int> minimal_bezout_pair(const Int& a, const Int& b) {
    std::vector<Int> ab{a, b};
    auto bz = gcd_bezout(ab);
    if (bz.gcd != 1) throw Error("exponents not coprime");
    Int m0;
    mpz_fdiv_r(m0.get_mpz_t(), bz.coeffs[0].get_mpz_t(), b.get_mpz_t());
    Int alt = m0 - b;
    Int m = abs(alt) < abs(m0) ? alt : m0;
    Int n = (1 - a * m) / b;
    return {m, n};
}

LaurentIso laurent_iso(const Int& a, const Int& b, const FieldElem& lambda) {
    if (a <= 0 || b <= 0) throw Error("exponents must be positive");
    if (lambda.is_zero()) throw Error("lambda must be nonzero");
    auto [m, n] = minimal_bezout_pair(a, b);
    if (!m.fits_sint_p() || !n.fits_sint_p() || !a.fits_sint_p() || !b.fits_sint_p())
        throw InstanceTooLarge("exponent");
    Field k = lambda.field();
    auto zt = make_vars({"z"}, {true});
    auto xyt = make_vars({"x", "y"}, {true, true});

    Monomial zimg(std::vector<Exponent>{static_cast<Exponent>(n.get_si()), static_cast<Exponent>(-m.get_si())});
    RingMap fwd(zt, xyt, k, {Polynomial::monomial(xyt, k, zimg, FieldElem(k, 1L))});

    Monomial ximg(std::vector<Exponent>{static_cast<Exponent>(b.get_si())});
    Monomial yimg(std::vector<Exponent>{static_cast<Exponent>(-a.get_si())});
    RingMap inv(xyt, zt, k,
                {Polynomial::monomial(zt, k, ximg, lambda.pow(m.get_si())),
                 Polynomial::monomial(zt, k, yimg, lambda.pow(n.get_si()))});
    return {std::move(fwd), std::move(inv), m, n};
}

DegreeUnit degree_unit(const Grading& g, const Monomial& alpha) {
    if (g.trivial()) throw Error("trivial grading");
    if (alpha.size() != g.vars()->size()) throw Error("monomial arity does not match the grading");
    auto bz = gcd_bezout(g.weights());
    DegreeUnit out{bz.gcd, Monomial(alpha.size()), Monomial(alpha.size()), Monomial(), Monomial()};
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const Int& c = bz.coeffs[i];
        if (!c.fits_sint_p()) throw InstanceTooLarge("Bezout coefficient");
        if (c > 0) out.a[i] = static_cast<Exponent>(c.get_si());
        else if (c < 0) out.b[i] = static_cast<Exponent>(-c.get_si());
    }
    out.f = alpha * out.a * out.b;
    out.w = out.a / out.b;
    return out;
}

}  // namespace ufdlab
