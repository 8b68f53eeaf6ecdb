#pragma once

/**
 * @file coeff.hpp
 * @brief Exact integers, coefficient fields, and the integer lemmas the
 *        graded constructions rely on (Bezout identities, prime avoidance).
 */

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ufdlab/caps.hpp"

namespace ufdlab {

using Int = mpz_class;
using Rational = mpq_class;

/// gcd(values) together with coefficients realising it.
struct Bezout {
    Int gcd;
    std::vector<Int> coeffs;
};

/**
 * Extended Euclid folded over a list.
 *
 * Returns g >= 0 and c with sum c[i]*values[i] == g. The coefficients are a
 * deterministic function of the input order: [4, 6] -> (2, [-1, 1]).
 * Throws Error("gcd of zero list") when every entry is zero.
 */
Bezout gcd_bezout(std::span<const Int> values);

Int gcd_of(std::span<const Int> values);
Int lcm_of(std::span<const Int> values);

/**
 * Finds m with gcd(c, b + sum m[i]*a[i]) == 1.
 *
 * Writes d = gcd(a) = sum e[i]*a[i] and scans b + t*d for t = 0, 1, ..., |c|;
 * the answer is m[i] = t*e[i]. Requires gcd(a..., b, c) == 1.
 */
std::vector<Int> prime_avoid(std::span<const Int> a, const Int& b, const Int& c);

/// Trial division; intended for desk-scale moduli.
bool is_prime(std::uint64_t n);

/// Q or F_p. Value type; two fields compare equal iff they have the same characteristic.
class Field {
public:
    static Field rationals() { return Field(0); }
    /// Throws Error if p is not prime (checked by trial division, p <= 10^6).
    static Field prime(std::uint64_t p);
    /// Accepts "Q", "QQ", "F5", "GF(5)".
    static Field parse(const std::string& name);

    std::uint64_t characteristic() const { return p_; }
    bool is_prime_field() const { return p_ != 0; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class FieldElem;
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

/// An element of a Field. Rationals are kept reduced; residues lie in [0, p).
class FieldElem {
public:
    FieldElem() : FieldElem(Field::rationals()) {}
    explicit FieldElem(Field f);
    FieldElem(Field f, long value);
    FieldElem(Field f, const Int& value);
    /// Throws Error if the denominator vanishes in F_p.
    FieldElem(Field f, const Rational& value);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;
    /// Rational value; for residues the canonical representative in [0, p).
    Rational to_rational() const;
    std::string to_string() const;

    FieldElem inverse() const;
    FieldElem pow(long long e) const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);
    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    friend bool operator==(const FieldElem& a, const FieldElem& b);

private:
    struct Residue {
        std::uint64_t value;
        std::uint64_t modulus;
    };
    void require_same(const FieldElem& o) const;

    std::variant<Rational, Residue> v_;
};

}  // namespace ufdlab
