#pragma once

/**
 * @file groebner.hpp
 * @brief Buchberger-based ideal arithmetic: membership, equality,
 *        elimination, intersection, quotients and saturation, plus two
 *        brute-force oracles (linear-algebra membership, exhaustive
 *        factor search) that stay independent of the Gröbner path.
 */

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ufdlab/poly.hpp"

namespace ufdlab {

/// Total monomial order. `block` marks the first block of an elimination order.
class MonomialOrder {
public:
    enum class Kind { Lex, DegRevLex, Elimination };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, {}); }
    /// Variables in `eliminate` are larger than every monomial in the rest
    /// (degrevlex on the block, ties broken by degrevlex on the rest).
    static MonomialOrder elimination(const VarTable& vars, const std::set<std::string>& eliminate);

    Kind kind() const { return kind_; }
    const std::vector<bool>& block() const { return block_; }
    /// Strict "a > b".
    bool greater(const Monomial& a, const Monomial& b) const;
    std::string name() const;

private:
    MonomialOrder(Kind k, std::vector<bool> block) : kind_(k), block_(std::move(block)) {}
    Kind kind_;
    std::vector<bool> block_;
};

struct GroebnerOptions {
    /// Reduce the tails of basis elements at the end. Switch off for ideals
    /// whose reduced basis is much larger than a plain one (e.g. lex chains).
    bool interreduce = true;
};

/**
 * Buchberger's algorithm with the coprime-leading-term and chain criteria.
 * Result is a minimal Gröbner basis with monic elements (reduced when
 * options.interreduce). Throws Error("saturate the unit first") when a
 * generator uses an invertible variable, InstanceTooLarge on cap overruns.
 */
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord,
                                   GroebnerOptions options = {});

/// Remainder of full multivariate division; zero iff f is in the ideal when `basis` is Gröbner.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis, const MonomialOrder& ord);

/// Leading term of p with respect to ord; p nonzero.
const Term& leading_term(const Polynomial& p, const MonomialOrder& ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
/// Every S-polynomial of `basis` reduces to zero.
bool is_groebner(const std::vector<Polynomial>& basis, const MonomialOrder& ord);

/// Generators plus a lazily computed Gröbner basis per order.
class Ideal {
public:
    Ideal(VarTablePtr vars, Field field, std::vector<Polynomial> gens = {});
    static Ideal unit(VarTablePtr vars, Field field);

    const VarTablePtr& vars() const { return vars_; }
    Field field() const { return field_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    /// Cached; concurrent first computation must be serialised by the caller.
    const std::vector<Polynomial>& basis(const MonomialOrder& ord = MonomialOrder::degrevlex(),
                                         GroebnerOptions options = {}) const;
    bool contains(const Polynomial& f, const MonomialOrder& ord = MonomialOrder::degrevlex()) const;
    bool is_unit() const;
    bool is_zero() const;

    Ideal operator+(const Ideal& o) const;
    Ideal operator*(const Ideal& o) const;
    Ideal pow(unsigned k) const;
    Ideal times(const Polynomial& f) const;
    Ideal with(const Polynomial& f) const;
    std::string to_string() const;

private:
    VarTablePtr vars_;
    Field field_;
    std::vector<Polynomial> gens_;
    struct Cache {
        std::string key;
        std::vector<Polynomial> basis;
    };
    mutable std::vector<Cache> cache_;
};

/// True iff every generator of each side reduces to zero against the other's basis.
bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& ord = MonomialOrder::degrevlex(),
                 GroebnerOptions options = {});
/// Every generator of `a` lies in `b`.
bool ideal_subset(const Ideal& a, const Ideal& b, const MonomialOrder& ord = MonomialOrder::degrevlex(),
                  GroebnerOptions options = {});

/// I ∩ k[keep]: generators in the original ring using only `keep` variables.
Ideal elim_ideal(const Ideal& ideal, const std::set<std::string>& keep);
/// Tag-variable method: t*I + (1-t)*J, eliminate t.
Ideal intersect(const Ideal& a, const Ideal& b);
/// (I : t) via I ∩ (t) and exact division.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& t);

struct Saturation {
    Ideal ideal;
    bool stabilized;  ///< false: iteration cap hit, result is only a lower bound
    int steps;
};
/// (I : f^inf) by iterated quotients, stopping when two successive ideals agree (cap 32).
Saturation saturation(const Ideal& ideal, const Polynomial& f, int max_steps = 32);
/// (I : f^inf) = (I + (1 - t f)) ∩ k[vars]; the independent route.
Ideal saturation_by_tag(const Ideal& ideal, const Polynomial& f);

/**
 * Semi-decision: solves f = sum h_i g_i by linear algebra over the
 * monomials of total degree <= deg_bound. true certifies membership;
 * false only says no certificate exists within the bound.
 */
bool brute_force_member(const Polynomial& f, const std::vector<Polynomial>& gens, int deg_bound);

struct IrreducibilityVerdict {
    bool irreducible;
    std::optional<Polynomial> g;  ///< factor pair when reducible
    std::optional<Polynomial> h;
    std::size_t candidates = 0;
};

/**
 * Exhaustive divisor search over a prime field: every monic-normalised g
 * with 1 <= deg g <= max_deg in the variables of f is tested for exact
 * division. Complete when deg f <= 2*max_deg + 1.
 */
IrreducibilityVerdict brute_force_irreducible(const Polynomial& f, int max_deg,
                                              std::size_t candidate_cap = 10'000'000);

}  // namespace ufdlab
