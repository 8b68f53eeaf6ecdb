#pragma once

/**
 * @file constructions.hpp
 * @brief Builders and hypothesis checkers for the ring families: Samuel-type
 *        extensions A[X]/(aX-b), condition P, the W(b,s,t) chain, radical
 *        extensions Z^c - F, Pham-Brieskorn rings, the threefold family B_n
 *        and trinomial rings.
 *
 * Nothing here decides primality or unique factorisation. Builders verify
 * every finitely checkable hypothesis and either throw (hypothesis fails)
 * or record a verdict.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ufdlab/groebner.hpp"

namespace ufdlab {

/// A quotient k[vars]/(relations), optionally graded.
struct PresentedRing {
    PresentedRing(Field field, VarTablePtr vars, std::vector<Polynomial> relations,
                  std::optional<Grading> grading = std::nullopt, std::string provenance = "");

    Field field;
    VarTablePtr vars;
    std::vector<Polynomial> relations;
    std::optional<Grading> grading;
    /// Which builder produced the ring.
    std::string provenance;
    /// Free-form key/value echo of the builder input (exported verbatim).
    std::vector<std::pair<std::string, std::string>> notes;

    Ideal relation_ideal() const { return Ideal(vars, field, relations); }
    Polynomial parse(const std::string& text) const { return parse_polynomial(text, vars, field); }
};

/// The free polynomial ring k[names].
PresentedRing free_ring(Field field, std::vector<std::string> names, std::optional<std::vector<Int>> weights = {});

/// (a) ∩ (b) = (ab) modulo `relations`. On failure `witness` is an element of (a)∩(b) outside (ab).
struct RelativePrimality {
    bool holds;
    std::optional<Polynomial> witness;
};
RelativePrimality relatively_prime(const PresentedRing& A, const Polynomial& a, const Polynomial& b);

struct Extension {
    PresentedRing ring;
    /// ((relations, aX-b) : a^inf) == (relations, aX-b)
    bool saturation_equal;
    int saturation_steps;
};

/**
 * A[X]/(aX - b). Throws Error carrying the offending element when a and b
 * are not relatively prime. When A is graded and a, b are homogeneous the
 * result is graded with deg X = deg b - deg a.
 */
Extension present_extension(const PresentedRing& A, const Polynomial& a, const Polynomial& b,
                            const std::string& new_var = "X");

// ---------------------------------------------------------------------------
// condition P

enum class Verdict { Verified, Refuted, Unknown };
std::string to_string(Verdict v);

struct ClauseReport {
    Verdict verdict = Verdict::Unknown;
    std::optional<int> bound;  ///< search bound for unknown / truncated verdicts
    bool truncated = false;
    std::string witness;
};

struct ConditionPReport {
    ClauseReport i, ii, iii, iv;
    /// Factors p of a with pA + bA != A (associates removed).
    std::vector<Polynomial> primes;
    std::string note;
    /// Verified if every clause is; refuted if any is; unknown otherwise.
    Verdict overall() const;
};

/**
 * Tri-state check of condition P for (A, (a, b)). `prime_factors` is the
 * caller's factorisation of a (with multiplicity; empty when a is a unit);
 * its product must equal a up to a unit or Error is thrown. Primality of the
 * supplied factors is trusted, not checked.
 */
ConditionPReport check_condition_P(const PresentedRing& A, const Polynomial& a, const Polynomial& b,
                                   const std::vector<Polynomial>& prime_factors, int N);

// ---------------------------------------------------------------------------
// W(b, s, t)

struct WChain {
    std::vector<Ideal> W;  ///< W_0 .. W_N
    std::vector<Ideal> J;  ///< J_0 .. J_N
    bool nested;           ///< W_{i+1} ⊆ W_i and J_{i+1} ⊆ J_i for all i < N
};

constexpr int kWChainCap = 16;

/// W_0 = J_0 = (1), W_i = b J_{i-1} + (s^i), J_i = (W_i : t).
WChain w_chain(const VarTablePtr& vars, Field field, const Polynomial& b, const Polynomial& s,
               const Polynomial& t, int N);

/// Which case of the W(b,s,t) lemma applies to a triple, and whether its level-wise prediction holds.
struct WChainLemmaCheck {
    /// "t-in-intersection", "comaximal", "regular-sequence" or "none"
    std::string hypothesis;
    std::vector<bool> levels;  ///< prediction matched at level i (index 0..N)
    bool holds() const;
};
WChainLemmaCheck w_chain_lemma_check(const VarTablePtr& vars, Field field, const Polynomial& b,
                                     const Polynomial& s, const Polynomial& t, int N);

/// Per level i: elim((s^i) + (aX - b), drop X) == W_i with a = s t.
struct LevelCheck {
    std::vector<bool> levels;
    bool holds() const;
};
/// Throws Error naming the hypothesis when s,t or a,b are not relatively prime.
LevelCheck lemma_level_check(const VarTablePtr& vars, Field field, const Polynomial& s, const Polynomial& t,
                             const Polynomial& b, int N);

// ---------------------------------------------------------------------------
// graded builders

/**
 * A[Z]/(Z^c - F) with the induced grading (weights of A times c, deg Z = deg F).
 * Requires A graded, F homogeneous and gcd(c, deg F) = 1.
 */
PresentedRing radical_extension(const PresentedRing& A, const Polynomial& F, long c, const std::string& new_var = "Z");

struct PhamBrieskorn {
    PresentedRing ring;
    int hypothesis_case;  ///< 1: n >= 4 and gcd(a_n, a_1...a_{n-1}) = 1; 2: n = 3, pairwise coprime
    Int omega;            ///< lcm(a_1..a_{n-1})
};
/// k[X1..Xn]/(X1^a1 + ... + Xn^an), built as a radical extension of k[X1..X_{n-1}].
PhamBrieskorn pham_brieskorn(Field field, const std::vector<long>& exponents);

struct FourthCriterion {
    PresentedRing ring;  ///< A[X, Z]/(aX - b, Z^n - X), graded
    Int deg_x;
};
/// A[Z]/(aZ^n - b) presented through A' = A[X]/(aX-b) and Z^n - X; needs gcd(n, deg b - deg a) = 1.
FourthCriterion fourth_criterion(const PresentedRing& A, const Polynomial& a, const Polynomial& b, long n);

struct FifthWeights {
    std::vector<Int> m;  ///< weights of Z_1..Z_{n-1}
    Int check;           ///< omega - sum m_i e_i, coprime to e_n
};
/// Weights from prime avoidance; throws Error when gcd(e_1..e_n, omega) != 1.
FifthWeights fifth_weights(const Int& omega, const std::vector<Int>& e);

// ---------------------------------------------------------------------------
// threefold family B_n

struct ThreefoldData {
    Field field = Field::rationals();
    std::vector<std::string> p;  ///< p_i(x) in poly syntax
    std::vector<FieldElem> u, v;
    std::vector<long> a, b;
    std::optional<std::string> kappa;  ///< a common prime factor of the p_i
};

struct ThreefoldReport {
    PresentedRing ring;  ///< variables x, z0..z_{n+1}
    /// (kappa) + relations == (kappa, u_i z_i^a_i + v_i z_{i-1}^b_i)
    std::optional<bool> kappa_shape;
    /// z_n not in (kappa, u_i z_i^a_i + v_i z_{i-1}^b_i)
    std::optional<bool> zn_outside;
};

/// Throws Error naming the failed hypothesis (gcd condition, equal radicals, kappa | p_i).
ThreefoldReport threefold_family(const ThreefoldData& data);

struct TangentReport {
    int rank;
    int tangent_dim;
    std::vector<std::vector<std::string>> jacobian;  ///< symbolic entries
};
/// Rank of the Jacobian of the B_n relations at (q, z_0..z_{n+1}).
TangentReport jacobian_tangent_dim(const ThreefoldData& data, const std::string& q);

// ---------------------------------------------------------------------------
// trinomial rings

struct TrinomialData {
    Field field = Field::rationals();
    std::vector<std::vector<long>> beta;  ///< beta_0 .. beta_r
    std::vector<FieldElem> lambda;        ///< lambda_2 .. lambda_r
    /// Optional names, one list per block; default t<i>_<j>.
    std::vector<std::vector<std::string>> names;
};

struct TrinomialStep {
    int m;
    std::vector<std::pair<std::string, Int>> weights;
    Int relation_degree;  ///< d_0 ... d_{m-1}
    Int gcd;              ///< gcd(beta_m, relation_degree)
    bool homogeneous;     ///< every T_i^beta_i (i < m) has the relation degree
};

struct TrinomialReport {
    PresentedRing ring;
    std::vector<Int> d;
    std::vector<TrinomialStep> steps;
    bool holds() const;
};
/// Throws Error naming the violated clause of the data conditions.
TrinomialReport trinomial_ring(const TrinomialData& data);

}  // namespace ufdlab
