#pragma once

/**
 * @file omega.hpp
 * @brief The graded ring Omega = k[x, z0, z1, ...] modulo
 *        x^(2^i) z_{i+1} + z_i + z_{i-1}^2 as a rewriting system.
 *
 * Grading: deg x = -1, deg z_i = 2^i. Every element has unique coordinates
 * on the monomials x^m F_n, where F_n is the squarefree z-monomial read off
 * the binary digits of n. normal_form computes those coordinates by
 * repeatedly replacing z_m^2 with -(x^(2^(m+1)) z_{m+2} + z_{m+1}); each
 * step strictly lowers the size sum(e_i) of a monomial, so it terminates.
 */

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ufdlab/coeff.hpp"

namespace ufdlab {

/// Largest admissible z index.
constexpr int kOmegaMaxIndex = 64;

/// x^r * prod z_i^e[i]; `e` carries no trailing zeros.
struct OmegaMonomial {
    Int r = 0;
    std::vector<Int> e;

    static OmegaMonomial make(Int r, std::vector<Int> e);
    Int degree() const;
    /// sum e_i, the termination measure of the rewriting.
    Int size() const;
    bool squarefree() const;
    std::string to_string() const;

    friend bool operator==(const OmegaMonomial&, const OmegaMonomial&) = default;
    /// Lexicographic on (r, e).
    friend bool operator<(const OmegaMonomial& a, const OmegaMonomial& b) {
        if (a.r != b.r) return a.r < b.r;
        return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
    }
};

class OmegaPoly {
public:
    explicit OmegaPoly(Field field) : field_(field) {}
    static OmegaPoly monomial(Field field, const OmegaMonomial& m, const FieldElem& c);
    /// Syntax of poly plus variables x, z0, z1, ...
    static OmegaPoly parse(const std::string& text, Field field);

    Field field() const { return field_; }
    const std::map<OmegaMonomial, FieldElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const OmegaMonomial& m, const FieldElem& c);

    OmegaPoly& operator+=(const OmegaPoly& o);
    friend OmegaPoly operator+(OmegaPoly a, const OmegaPoly& b) { return a += b; }
    friend OmegaPoly operator*(const OmegaPoly& a, const OmegaPoly& b);
    OmegaPoly scaled(const FieldElem& c) const;

    /// Terms by ascending degree, then ascending x-exponent.
    std::string to_string() const;
    friend bool operator==(const OmegaPoly&, const OmegaPoly&) = default;

private:
    Field field_;
    std::map<OmegaMonomial, FieldElem> terms_;
};

/// F_d: z_i for every binary digit i of d. Throws for d < 0.
OmegaMonomial sigma(const Int& d);

struct BasisEntry {
    Int m;
    Int n;
    FieldElem coeff;
    friend bool operator==(const BasisEntry&, const BasisEntry&) = default;
};

/// Coordinates of one homogeneous component on {x^m F_n : n - m = degree}.
struct BasisExpansion {
    Int degree;
    std::vector<BasisEntry> entries;  ///< strictly increasing m
    friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

using NormalForm = std::map<Int, BasisExpansion>;

enum class Pivot { Largest, Smallest };

/**
 * Basis coordinates of p, grouped by degree (zero components omitted).
 * Throws InstanceTooLarge past kOmegaMaxIndex or the term cap.
 */
NormalForm normal_form(const OmegaPoly& p, Pivot pivot = Pivot::Largest);
/// The normal form as an element again (squarefree monomials only).
OmegaPoly to_poly(const NormalForm& nf, Field field);
std::string to_string(const NormalForm& nf, Field field);

/// p in x*Omega: every basis coordinate has m >= 1.
bool in_x_omega(const OmegaPoly& p);
/// Largest m with p in x^m Omega. Throws "zero has infinite order" when p = 0.
Int x_adic_floor(const OmegaPoly& p);

}  // namespace ufdlab
