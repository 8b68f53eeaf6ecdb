#pragma once

/**
 * @file counterexample.hpp
 * @brief The ring B = k[x,y][Z0, Z1, ...]/(f_i), f_i = x Z_{i+1} + y^(s(i+1)-1) Z_i^s(i+1) - Z_{i-1},
 *        its exponent sequence, and finite certificates that z0 lies deep in
 *        (x,y)^n and in x^n B' with B' = B[T]/(xT - y).
 *
 * Exact expansions are feasible only at small depth because s grows
 * super-exponentially; beyond that the certificates are abstract order
 * bookkeeping justified by z_{i-1} = x z_{i+1} + y^(s-1) z_i^s.
 */

#include <optional>
#include <string>
#include <vector>

#include "ufdlab/groebner.hpp"

namespace ufdlab {

/// s(1..n): s(1)=2, s(2)=3, s(n) = n * s(1)...s(n-2).
std::vector<Int> s_sequence(int n);

constexpr int kExpandDepthCap = 3;
constexpr int kOrderCap = 32;

/// Ring k[Z0..Z_last, x, y] (or x, T for B') with the relations f_1..f_last.
struct CexRing {
    VarTablePtr vars;
    Field field;
    bool bprime;  ///< y replaced by x*T
    std::vector<Polynomial> f;  ///< f[i-1] = f_i
    Polynomial Z(int i) const;
};
CexRing cex_ring(int last_index, Field field, bool bprime = false);

/**
 * Representative of z0 obtained by repeatedly solving f_i for Z_{i-1}:
 * each monomial whose order (in (x,y), or in x for B') is below `depth`
 * has its lowest-index Z factor rewritten. Carries cofactors h_i with
 * expansion - Z0 = sum h_i f_i.
 */
struct Z0Expansion {
    CexRing ring;
    Polynomial expansion;
    std::vector<Polynomial> cofactors;  ///< h_1..h_last
    long long min_order;                ///< minimum order over the monomials
    bool identity_holds;                ///< expansion - Z0 == sum h_i f_i, exactly
};
Z0Expansion expand_z0(int depth, Field field = Field::rationals(), bool bprime = false);

/// Independent check: expansion - Z0 reduces to 0 modulo (f_i) in lex (Z0 > Z1 > ... > x > y).
bool expansion_in_ideal(const Z0Expansion& e);

struct OrderRewrite {
    int index;      ///< Z index rewritten
    Int count;      ///< multiplicity of that index in the state
    int increment;  ///< guaranteed order gain for each child
};

struct OrderRound {
    int round;
    std::vector<OrderRewrite> rewrites;
};

struct OrderCert {
    std::string target = "z0";
    std::string ideal;  ///< "(x,y)" or "xB'"
    int n = 0;
    std::vector<OrderRound> log;
    int min_order = 0;
    bool accepted = false;
    /// Exact low-depth cross-check, when performed.
    std::optional<bool> exact_check;
};

/// z0 in (x,y)^n; exact cross-check for n <= 3.
OrderCert m_order_certificate(int n, Field field = Field::rationals());
/// z0 in x^n B'; exact cross-check for n <= 2.
OrderCert x_order_certificate_bprime(int n, Field field = Field::rationals());

struct CoordinateChecks {
    bool automorphism = true;  ///< phi_n o ... o phi_1 (J_n) = (Z0..Z_{n-1})
    bool x_quotient = true;    ///< (x) + J_n = (x, y^(s-1) Z_i^s - Z_{i-1})
    bool y_quotient = true;    ///< (y) + J_n = (y, x Z_{i+1} - Z_{i-1})
    bool all() const { return automorphism && x_quotient && y_quotient; }
};
CoordinateChecks coordinate_checks(int n, Field field = Field::rationals());

}  // namespace ufdlab
