#include "ufdlab/omega.hpp"

#include <algorithm>

#include "ufdlab/caps.hpp"
#include "ufdlab/poly.hpp"

namespace ufdlab {

namespace {

Int pow2(unsigned long i) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, i);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

void trim(std::vector<Int>& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

std::string term_text(const FieldElem& c, const std::string& mono, bool first) {
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    std::string body;
    if (mono == "1") body = cs;
    else if (cs == "1") body = mono;
    else body = cs + "*" + mono;
    if (first) return (neg ? "-" : "") + body;
    return (neg ? " - " : " + ") + body;
}

}  // namespace

OmegaMonomial OmegaMonomial::make(Int r, std::vector<Int> e) {
    if (r < 0) throw Error("negative exponent of x");
    for (const auto& x : e)
        if (x < 0) throw Error("negative exponent of z");
    trim(e);
    if (e.size() > static_cast<std::size_t>(kOmegaMaxIndex) + 1)
        throw InstanceTooLarge("z index above " + std::to_string(kOmegaMaxIndex));
    return {std::move(r), std::move(e)};
}

Int OmegaMonomial::degree() const {
    Int d = -r;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * pow2(i);
    return d;
}

Int OmegaMonomial::size() const {
    Int s = 0;
    for (const auto& x : e) s += x;
    return s;
}

bool OmegaMonomial::squarefree() const {
    return std::all_of(e.begin(), e.end(), [](const Int& x) { return x <= 1; });
}

std::string OmegaMonomial::to_string() const {
    std::string s;
    auto put = [&](const std::string& v, const Int& k) {
        if (k == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (k != 1) s += "^" + k.get_str();
    };
    put("x", r);
    for (std::size_t i = 0; i < e.size(); ++i) put("z" + std::to_string(i), e[i]);
    return s.empty() ? "1" : s;
}

OmegaMonomial sigma(const Int& d) {
    if (d < 0) throw Error("sigma is defined on non-negative integers");
    std::vector<Int> e;
    std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    for (std::size_t i = 0; d != 0 && i < bits; ++i) e.push_back(mpz_tstbit(d.get_mpz_t(), i));
    return OmegaMonomial::make(0, std::move(e));
}

// ---------------------------------------------------------------------------

OmegaPoly OmegaPoly::monomial(Field field, const OmegaMonomial& m, const FieldElem& c) {
    OmegaPoly p(field);
    p.add(m, c);
    return p;
}

void OmegaPoly::add(const OmegaMonomial& m, const FieldElem& c) {
    if (c.field() != field_) throw Error("coefficient field mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OmegaPoly& OmegaPoly::operator+=(const OmegaPoly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

OmegaPoly operator*(const OmegaPoly& a, const OmegaPoly& b) {
    if (a.field_ != b.field_) throw Error("coefficient field mismatch");
    OmegaPoly out(a.field_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            std::vector<Int> e(std::max(ma.e.size(), mb.e.size()), Int(0));
            for (std::size_t i = 0; i < ma.e.size(); ++i) e[i] += ma.e[i];
            for (std::size_t i = 0; i < mb.e.size(); ++i) e[i] += mb.e[i];
            out.add(OmegaMonomial::make(ma.r + mb.r, std::move(e)), ca * cb);
        }
    return out;
}

OmegaPoly OmegaPoly::scaled(const FieldElem& c) const {
    OmegaPoly out(field_);
    for (const auto& [m, x] : terms_) out.add(m, x * c);
    return out;
}

std::string OmegaPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Int, const OmegaMonomial*>> keyed;
    for (const auto& [m, c] : terms_) keyed.emplace_back(m.degree(), &m);
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return *a.second < *b.second;
    });
    std::string s;
    for (const auto& [d, m] : keyed) s += term_text(terms_.at(*m), m->to_string(), s.empty());
    return s;
}

OmegaPoly OmegaPoly::parse(const std::string& text, Field field) {
    std::vector<std::string> names;
    for (const auto& id : collect_identifiers(text)) {
        bool ok = id == "x";
        if (!ok && id.size() > 1 && id[0] == 'z' &&
            std::all_of(id.begin() + 1, id.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            if (id.size() > 4 || std::stoi(id.substr(1)) > kOmegaMaxIndex)
                throw InstanceTooLarge("z index above " + std::to_string(kOmegaMaxIndex));
            if (id.size() > 2 && id[1] == '0') throw Error("malformed variable name " + id);
            ok = true;
        }
        if (!ok) throw Error("unknown variable " + id + " (expected x, z0, z1, ...)");
        names.push_back(id);
    }
    auto vars = make_vars(names);
    Polynomial p = parse_polynomial(text, vars, field);
    OmegaPoly out(field);
    for (const auto& t : p.terms()) {
        Int r = 0;
        std::vector<Int> e;
        for (std::size_t v = 0; v < vars->size(); ++v) {
            const std::string& n = vars->name(v);
            if (n == "x") {
                r = t.mono[v];
                continue;
            }
            std::size_t idx = std::stoul(n.substr(1));
            if (e.size() <= idx) e.resize(idx + 1, Int(0));
            e[idx] = t.mono[v];
        }
        out.add(OmegaMonomial::make(r, std::move(e)), t.coeff);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct SizeKey {
    Int size;
    OmegaMonomial mono;
    friend bool operator<(const SizeKey& a, const SizeKey& b) {
        if (a.size != b.size) return a.size < b.size;
        return a.mono < b.mono;
    }
};

}  // namespace

NormalForm normal_form(const OmegaPoly& p, Pivot pivot) {
    Field k = p.field();
    std::map<SizeKey, FieldElem> pending;  // largest size processed first
    OmegaPoly done(k);
    auto push = [&](OmegaMonomial m, const FieldElem& c) {
        if (c.is_zero()) return;
        if (m.squarefree()) {
            done.add(m, c);
            return;
        }
        SizeKey key{m.size(), std::move(m)};
        auto [it, inserted] = pending.emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) pending.erase(it);
        }
    };
    for (const auto& [m, c] : p.terms()) push(m, c);

    const std::size_t term_cap = current_caps().terms;
    std::size_t steps = 0;
    while (!pending.empty()) {
        if ((++steps & 63) == 0) check_deadline();
        auto node = pending.extract(std::prev(pending.end()));
        const OmegaMonomial& mu = node.key().mono;
        const FieldElem& c = node.mapped();

        std::size_t m = mu.e.size();
        for (std::size_t i = 0; i < mu.e.size(); ++i) {
            if (mu.e[i] < 2) continue;
            if (pivot == Pivot::Smallest) {
                m = i;
                break;
            }
            m = i;
        }
        if (m + 2 > static_cast<std::size_t>(kOmegaMaxIndex))
            throw InstanceTooLarge("rewriting needs z" + std::to_string(m + 2) + ", above index cap " +
                                   std::to_string(kOmegaMaxIndex));
        if (!mu.e[m].fits_ulong_p()) throw InstanceTooLarge("exponent too large");
        unsigned long em = mu.e[m].get_ui();
        unsigned long a = em / 2, b = em % 2;

        // mu = P z_m^b (z_m^2)^a,  z_m^2 = -(x^(2^(m+1)) z_{m+2} + z_{m+1})
        std::vector<Int> base = mu.e;
        base.resize(std::max<std::size_t>(base.size(), m + 3), Int(0));
        base[m] = b;
        Int step_x = pow2(m + 1);
        FieldElem sign(k, (a % 2) ? -1L : 1L);
        for (unsigned long j = 0; j <= a; ++j) {
            std::vector<Int> e = base;
            e[m + 2] += j;
            e[m + 1] += a - j;
            FieldElem coeff = c * sign * FieldElem(k, binomial(a, j));
            push(OmegaMonomial::make(mu.r + step_x * j, std::move(e)), coeff);
        }
        if (pending.size() + done.terms().size() > term_cap)
            throw InstanceTooLarge("normal form exceeds term cap " + std::to_string(term_cap));
    }

    NormalForm nf;
    for (const auto& [mono, c] : done.terms()) {
        Int n = 0;
        for (std::size_t i = 0; i < mono.e.size(); ++i)
            if (mono.e[i] == 1) n += pow2(i);
        Int d = n - mono.r;
        auto& exp = nf[d];
        exp.degree = d;
        exp.entries.push_back({mono.r, n, c});
    }
    for (auto& [d, exp] : nf) {
        std::sort(exp.entries.begin(), exp.entries.end(), [](const BasisEntry& a, const BasisEntry& b) { return a.m < b.m; });
        for (std::size_t i = 1; i < exp.entries.size(); ++i)
            if (exp.entries[i].m == exp.entries[i - 1].m)
                throw Error("internal: repeated basis coordinate in degree " + d.get_str());
    }
    return nf;
}

OmegaPoly to_poly(const NormalForm& nf, Field field) {
    OmegaPoly out(field);
    for (const auto& [d, exp] : nf)
        for (const auto& en : exp.entries) {
            OmegaMonomial f = sigma(en.n);
            out.add(OmegaMonomial::make(en.m, f.e), en.coeff);
        }
    return out;
}

std::string to_string(const NormalForm& nf, Field field) { return to_poly(nf, field).to_string(); }

bool in_x_omega(const OmegaPoly& p) {
    for (const auto& [d, exp] : normal_form(p))
        for (const auto& en : exp.entries)
            if (en.m < 1) return false;
    return true;
}

Int x_adic_floor(const OmegaPoly& p) {
    NormalForm nf = normal_form(p);
    if (nf.empty()) throw Error("zero has infinite order");
    Int best = nf.begin()->second.entries.front().m;
    for (const auto& [d, exp] : nf) best = std::min(best, exp.entries.front().m);
    return best;
}

}  // namespace ufdlab
