#include "ufdlab/coeff.hpp"

#include <algorithm>
#include <cctype>

namespace ufdlab {

namespace {

// a*x + b*y == g with g >= 0.
void extended_euclid(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    x = old_s;
    y = old_t;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return result;
}

std::uint64_t reduce_int(const Int& v, std::uint64_t p) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

Bezout gcd_bezout(std::span<const Int> values) {
    if (values.empty() || std::all_of(values.begin(), values.end(), [](const Int& v) { return v == 0; }))
        throw Error("gcd of zero list");
    Bezout out;
    out.coeffs.assign(values.size(), Int(0));
    out.gcd = abs(values[0]);
    out.coeffs[0] = values[0] < 0 ? -1 : 1;
    for (std::size_t i = 1; i < values.size(); ++i) {
        Int g, x, y;
        extended_euclid(out.gcd, values[i], g, x, y);
        for (std::size_t j = 0; j < i; ++j) out.coeffs[j] *= x;
        out.coeffs[i] = y;
        out.gcd = g;
    }
    return out;
}

Int gcd_of(std::span<const Int> values) {
    Int g = 0;
    for (const auto& v : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

Int lcm_of(std::span<const Int> values) {
    Int l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_mpz_t());
    return l;
}

std::vector<Int> prime_avoid(std::span<const Int> a, const Int& b, const Int& c) {
    std::vector<Int> all(a.begin(), a.end());
    all.push_back(b);
    all.push_back(c);
    if (c == 0 || gcd_of(all) != 1) throw Error("hypothesis of prime avoidance fails");

    std::vector<Int> e(a.size(), Int(0));
    Int d = 0;
    if (std::any_of(a.begin(), a.end(), [](const Int& v) { return v != 0; })) {
        auto bz = gcd_bezout(a);
        d = bz.gcd;
        e = std::move(bz.coeffs);
    }
    Int bound = abs(c);
    for (Int t = 0; t <= bound; ++t) {
        Int candidate = b + t * d;
        Int g;
        mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), candidate.get_mpz_t());
        if (g == 1) {
            std::vector<Int> m(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) m[i] = t * e[i];
            return m;
        }
    }
    // Unreachable when the hypothesis holds; kept as a hard failure rather than a wrong answer.
    throw Error("prime avoidance search exhausted its bound");
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p > 1000000) throw Error("prime modulus above desk-scale bound 10^6: " + std::to_string(p));
    if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(const std::string& raw) {
    std::string name;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) name += static_cast<char>(std::toupper(ch));
    if (name == "Q" || name == "QQ") return rationals();
    std::string digits;
    if (name.size() > 1 && name[0] == 'F') digits = name.substr(1);
    else if (name.rfind("GF(", 0) == 0 && name.back() == ')') digits = name.substr(3, name.size() - 4);
    else if (name.rfind("ZZ/", 0) == 0) digits = name.substr(3);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw Error("unknown field '" + raw + "'");
    return prime(std::stoull(digits));
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "F" + std::to_string(p_); }

FieldElem::FieldElem(Field f) {
    if (f.is_prime_field()) v_ = Residue{0, f.characteristic()};
    else v_ = Rational(0);
}

FieldElem::FieldElem(Field f, long value) : FieldElem(f, Int(value)) {}

FieldElem::FieldElem(Field f, const Int& value) {
    if (f.is_prime_field()) v_ = Residue{reduce_int(value, f.characteristic()), f.characteristic()};
    else v_ = Rational(value);
}

FieldElem::FieldElem(Field f, const Rational& value) {
    if (f.is_prime_field()) {
        std::uint64_t p = f.characteristic();
        std::uint64_t den = reduce_int(value.get_den(), p);
        if (den == 0) throw Error("denominator " + value.get_den().get_str() + " vanishes in " + f.name());
        std::uint64_t num = reduce_int(value.get_num(), p);
        v_ = Residue{mul_mod(num, pow_mod(den, p - 2, p), p), p};
    } else {
        Rational q = value;
        q.canonicalize();
        v_ = q;
    }
}

Field FieldElem::field() const {
    if (auto r = std::get_if<Residue>(&v_)) return Field(r->modulus);
    return Field::rationals();
}

bool FieldElem::is_zero() const {
    if (auto r = std::get_if<Residue>(&v_)) return r->value == 0;
    return std::get<Rational>(v_) == 0;
}

bool FieldElem::is_one() const {
    if (auto r = std::get_if<Residue>(&v_)) return r->value == 1 % r->modulus;
    return std::get<Rational>(v_) == 1;
}

Rational FieldElem::to_rational() const {
    if (auto r = std::get_if<Residue>(&v_)) return Rational(Int(static_cast<unsigned long>(r->value)));
    return std::get<Rational>(v_);
}

std::string FieldElem::to_string() const {
    if (auto r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
    return std::get<Rational>(v_).get_str();
}

void FieldElem::require_same(const FieldElem& o) const {
    const auto* a = std::get_if<Residue>(&v_);
    const auto* b = std::get_if<Residue>(&o.v_);
    if ((a == nullptr) != (b == nullptr) || (a && a->modulus != b->modulus))
        throw Error("coefficient field mismatch");
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw Error("division by zero");
    FieldElem out = *this;
    if (auto r = std::get_if<Residue>(&out.v_)) {
        r->value = pow_mod(r->value, r->modulus - 2, r->modulus);
    } else {
        auto& q = std::get<Rational>(out.v_);
        q = 1 / q;
    }
    return out;
}

FieldElem FieldElem::pow(long long e) const {
    FieldElem base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    if (auto r = std::get_if<Residue>(&base.v_)) {
        r->value = pow_mod(r->value, k, r->modulus);
        return base;
    }
    const Rational& q = std::get<Rational>(base.v_);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
    FieldElem out(Field::rationals());
    out.v_ = Rational(num, den);
    std::get<Rational>(out.v_).canonicalize();
    return out;
}

FieldElem FieldElem::operator-() const {
    FieldElem out = *this;
    if (auto r = std::get_if<Residue>(&out.v_)) r->value = r->value == 0 ? 0 : r->modulus - r->value;
    else std::get<Rational>(out.v_) = -std::get<Rational>(out.v_);
    return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    require_same(o);
    if (auto r = std::get_if<Residue>(&v_)) {
        r->value = (r->value + std::get<Residue>(o.v_).value) % r->modulus;
    } else {
        std::get<Rational>(v_) += std::get<Rational>(o.v_);
    }
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    require_same(o);
    if (auto r = std::get_if<Residue>(&v_)) {
        r->value = mul_mod(r->value, std::get<Residue>(o.v_).value, r->modulus);
    } else {
        std::get<Rational>(v_) *= std::get<Rational>(o.v_);
    }
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
    require_same(o);
    return *this *= o.inverse();
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    a.require_same(b);
    if (auto r = std::get_if<FieldElem::Residue>(&a.v_)) return r->value == std::get<FieldElem::Residue>(b.v_).value;
    return std::get<Rational>(a.v_) == std::get<Rational>(b.v_);
}

}  // namespace ufdlab
