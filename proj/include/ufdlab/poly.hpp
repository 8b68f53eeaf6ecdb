#pragma once

/**
 * @file poly.hpp
 * @brief Sparse multivariate (optionally Laurent) polynomials over a Field,
 *        Z-gradings, substitution maps, and the graded automorphism /
 *        Laurent-isomorphism gadgets built on them.
 *
 * Polynomials are canonical: terms are stored in descending graded reverse
 * lexicographic order with no zero coefficients, so equal polynomials have
 * identical term vectors and identical text.
 */

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ufdlab/coeff.hpp"

namespace ufdlab {

/// Ordered variable names; each variable may be flagged invertible (Laurent).
class VarTable {
public:
    explicit VarTable(std::vector<std::string> names, std::vector<bool> invertible = {});

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    bool invertible(std::size_t i) const { return invertible_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> find(const std::string& name) const;
    /// Throws Error for unknown names.
    std::size_t index(const std::string& name) const;
    bool has_invertible() const;

    friend bool operator==(const VarTable&, const VarTable&) = default;

private:
    std::vector<std::string> names_;
    std::vector<bool> invertible_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<std::string> names, std::vector<bool> invertible = {});
/// Table with `extra` appended after the existing variables.
VarTablePtr extend_vars(const VarTablePtr& base, const std::vector<std::string>& extra, bool invertible = false);

using Exponent = std::int32_t;

/// Exponent vector over a VarTable (dense; zero entries mean "absent").
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> e) : e_(std::move(e)) {}

    std::size_t size() const { return e_.size(); }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    Exponent& operator[](std::size_t i) { return e_[i]; }
    const std::vector<Exponent>& exponents() const { return e_; }

    long long total_degree() const;
    bool is_one() const;
    bool has_negative() const;
    /// Componentwise e_i <= o_i.
    bool divides(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;
    Monomial pow(long long k) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> e_;
};

/// Strict "a > b" in graded reverse lexicographic order on the table order.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    FieldElem coeff;
};

class Polynomial {
public:
    Polynomial(VarTablePtr vars, Field field);

    static Polynomial constant(VarTablePtr vars, Field field, const FieldElem& c);
    static Polynomial constant(VarTablePtr vars, Field field, long c);
    static Polynomial variable(VarTablePtr vars, Field field, const std::string& name);
    static Polynomial monomial(VarTablePtr vars, Field field, Monomial m, FieldElem c);
    /// Combines like terms, drops zeros, sorts; validates Laurent exponents.
    static Polynomial from_terms(VarTablePtr vars, Field field, std::vector<Term> terms);

    const VarTablePtr& vars() const { return vars_; }
    Field field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Single term whose support is invertible.
    bool is_unit_monomial() const;
    /// Leading term in grevlex; requires nonzero.
    const Term& leading() const;
    /// Maximum total degree of a term; requires nonzero.
    long long total_degree() const;
    bool uses(std::size_t var) const;
    std::vector<std::size_t> support() const;
    FieldElem coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const FieldElem& c) const;
    Polynomial times_monomial(const Monomial& m, const FieldElem& c) const;
    /// Negative powers are allowed only for unit monomials.
    Polynomial pow(long long k) const;
    /// Scales so the leading coefficient is 1.
    Polynomial monic() const;

    std::string to_string() const;
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void require_compatible(const Polynomial& o) const;

    VarTablePtr vars_;
    Field field_;
    std::vector<Term> terms_;  // descending grevlex
};

std::string monomial_to_string(const VarTable& vars, const Monomial& m);

/// Partial derivative with respect to variable `var`.
Polynomial derivative(const Polynomial& p, std::size_t var);
/// f / g when g divides f exactly in the (Laurent-free) polynomial ring, else nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);
/// Re-expresses p over `target` by variable name. Throws if a used variable is missing.
Polynomial embed(const Polynomial& p, const VarTablePtr& target);

/// Parses the text syntax: + - * / ^, parentheses, integer/rational literals.
Polynomial parse_polynomial(const std::string& text, const VarTablePtr& vars, Field field);
/// Identifiers in order of first appearance.
std::vector<std::string> collect_identifiers(const std::string& text);

/// Integer weight for every variable of a table.
class Grading {
public:
    Grading(VarTablePtr vars, std::vector<Int> weights);
    /// Every table variable must appear in `weights`.
    static Grading from_map(VarTablePtr vars, const std::map<std::string, Int>& weights);

    const VarTablePtr& vars() const { return vars_; }
    const Int& weight(std::size_t i) const { return w_[i]; }
    const std::vector<Int>& weights() const { return w_; }
    Int degree(const Monomial& m) const;
    bool trivial() const;
    Grading scaled(const Int& c) const;

private:
    VarTablePtr vars_;
    std::vector<Int> w_;
};

/// Weighted degree if p is homogeneous, nullopt otherwise. Throws "degree of zero".
std::optional<Int> degree_of(const Polynomial& p, const Grading& g);
/// Degree -> component; the components sum to p.
std::map<Int, Polynomial> homogeneous_components(const Polynomial& p, const Grading& g);

/// Substitution homomorphism source -> target.
class RingMap {
public:
    /// images[i] is the image of source variable i. Invertible source
    /// variables must map to unit monomials ("non-invertible image").
    RingMap(VarTablePtr source, VarTablePtr target, Field field, std::vector<Polynomial> images);
    /// Variables missing from `images` map to the same-named target variable.
    static RingMap from_names(VarTablePtr source, VarTablePtr target, Field field,
                              const std::map<std::string, Polynomial>& images);

    const VarTablePtr& source() const { return source_; }
    const VarTablePtr& target() const { return target_; }
    const Polynomial& image(std::size_t i) const { return images_[i]; }
    Polynomial apply(const Polynomial& p) const;
    /// x -> next(this(x)).
    RingMap then(const RingMap& next) const;

private:
    VarTablePtr source_;
    VarTablePtr target_;
    Field field_;
    std::vector<Polynomial> images_;
};

Polynomial apply_map(const RingMap& phi, const Polynomial& p);

/**
 * Graded automorphism: the degree-i component of p is multiplied by unit^(d*i).
 * `unit` must be an invertible monomial of degree 0 under g.
 */
Polynomial phi_theta(const Grading& g, const Monomial& unit, long long d, const Polynomial& p);

/**
 * R[x,y]/(x^a y^b - lambda) = R[z, 1/z] with z = x^n / y^m, am + bn = 1.
 * fwd: k[z,1/z] -> k[x,1/x,y,1/y]; inv: the other way, x -> lambda^m z^b, y -> lambda^n z^-a.
 */
struct LaurentIso {
    RingMap fwd;
    RingMap inv;
    Int m;
    Int n;
};
LaurentIso laurent_iso(const Int& a, const Int& b, const FieldElem& lambda);

/// Bezout pair (m, n) with am + bn = 1 and |m| minimal (ties keep m >= 0).
std::pair<Int, Int> minimal_bezout_pair(const Int& a, const Int& b);

/**
 * Degree-d unit for a graded free carrier: d = gcd of the weights,
 * w = a/b with deg a - deg b = d, f = alpha*a*b.
 */
struct DegreeUnit {
    Int d;
    Monomial a;
    Monomial b;
    Monomial f;
    Monomial w;
};
DegreeUnit degree_unit(const Grading& g, const Monomial& alpha);

}  // namespace ufdlab
