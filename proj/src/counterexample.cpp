#include "ufdlab/counterexample.hpp"

#include <algorithm>
#include <map>

namespace ufdlab {

std::vector<Int> s_sequence(int n) {
    if (n < 1) throw Error("s_sequence needs n >= 1");
    std::vector<Int> s;
    for (int k = 1; k <= n; ++k) {
        if (k == 1) s.push_back(2);
        else if (k == 2) s.push_back(3);
        else {
            Int v = k;
            for (int i = 1; i <= k - 2; ++i) v *= s[i - 1];
            s.push_back(v);
        }
    }
    return s;
}

Polynomial CexRing::Z(int i) const { return Polynomial::variable(vars, field, "Z" + std::to_string(i)); }

CexRing cex_ring(int last, Field field, bool bprime) {
    std::vector<std::string> names;
    for (int i = 0; i <= last; ++i) names.push_back("Z" + std::to_string(i));
    names.push_back("x");
    names.push_back(bprime ? "T" : "y");
    auto vars = make_vars(names);
    CexRing r{vars, field, bprime, {}};
    auto s = s_sequence(std::max(1, last));
    auto x = Polynomial::variable(vars, field, "x");
    auto y = bprime ? x * Polynomial::variable(vars, field, "T") : Polynomial::variable(vars, field, "y");
    for (int i = 1; i + 1 <= last; ++i) {
        Int si = s[i];  // s(i+1)
        if (!si.fits_slong_p() || si > 1'000'000) throw InstanceTooLarge("exponent s(" + std::to_string(i + 1) + ")");
        long e = si.get_si();
        r.f.push_back(x * r.Z(i + 1) + y.pow(e - 1) * r.Z(i).pow(e) - r.Z(i - 1));
    }
    return r;
}

namespace {

std::size_t idx_x(const CexRing& r) { return r.vars->size() - 2; }

long long order_of(const CexRing& r, const Monomial& m) {
    std::size_t ix = idx_x(r);
    return r.bprime ? m[ix] : static_cast<long long>(m[ix]) + m[ix + 1];
}

}  // namespace

Z0Expansion expand_z0(int depth, Field field, bool bprime) {
    if (depth < 0) throw Error("depth must be non-negative");
    if (depth > kExpandDepthCap)
        throw InstanceTooLarge("expansion depth " + std::to_string(depth) + " above cap " + std::to_string(kExpandDepthCap));
    int last = std::max(2, 2 * depth);
    CexRing ring = cex_ring(last, field, bprime);
    const auto& vars = ring.vars;
    std::vector<Polynomial> h(ring.f.size(), Polynomial(vars, field));
    Polynomial e = ring.Z(0);

    for (int round = 1; round <= depth; ++round) {
        check_deadline();
        std::vector<Term> keep;
        Polynomial added(vars, field);
        for (const auto& t : e.terms()) {
            if (order_of(ring, t.mono) >= round) {
                keep.push_back(t);
                continue;
            }
            int j = -1;
            for (int i = 0; i <= last; ++i)
                if (t.mono[i] > 0) {
                    j = i;
                    break;
                }
            if (j < 0) throw Error("internal: monomial without Z factor below target order");
            int i = j + 1;  // solve f_i for Z_{i-1}
            if (i > static_cast<int>(ring.f.size())) throw InstanceTooLarge("expansion needs Z" + std::to_string(i + 1));
            Monomial rest = t.mono;
            rest[j] -= 1;
            Polynomial M = Polynomial::monomial(vars, field, rest, t.coeff);
            // Z_{i-1} = f_i + Z_{i-1}  and  f_i + Z_{i-1} = x Z_{i+1} + y^(s-1) Z_i^s
            added += M * (ring.f[i - 1] + ring.Z(i - 1));
            h[i - 1] += M;
        }
        e = Polynomial::from_terms(vars, field, keep) + added;
    }
    long long mo = e.is_zero() ? 0 : order_of(ring, e.terms().front().mono);
    for (const auto& t : e.terms()) mo = std::min(mo, order_of(ring, t.mono));
    Polynomial rhs = ring.Z(0);
    for (std::size_t i = 0; i < h.size(); ++i) rhs += h[i] * ring.f[i];
    bool ok = rhs == e;
    return {std::move(ring), std::move(e), std::move(h), mo, ok};
}

bool expansion_in_ideal(const Z0Expansion& e) {
    // f_i has leading monomial Z_{i-1} in lex; these are pairwise coprime, so (f_i) is a Gröbner basis.
    auto ord = MonomialOrder::lex();
    return reduce(e.expansion - e.ring.Z(0), e.ring.f, ord).is_zero();
}

namespace {

OrderCert abstract_certificate(int n, const std::string& ideal) {
    if (n < 0) throw Error("order must be non-negative");
    if (n > kOrderCap) throw InstanceTooLarge("order " + std::to_string(n) + " above cap " + std::to_string(kOrderCap));
    OrderCert c;
    c.ideal = ideal;
    c.n = n;
    // state: Z index -> multiplicity; every entry carries the same guaranteed order (the round number)
    std::map<int, Int> state{{0, 1}};
    int order = 0;
    for (int round = 1; round <= n; ++round) {
        OrderRound r{round, {}};
        std::map<int, Int> next;
        for (const auto& [i, cnt] : state) {
            // Z_i = x Z_{i+2} + y^(s-1) Z_{i+1}^s: both children gain at least one order
            r.rewrites.push_back({i, cnt, 1});
            next[i + 2] += cnt;
            next[i + 1] += cnt;
        }
        state = std::move(next);
        order += 1;
        c.log.push_back(std::move(r));
    }
    c.min_order = order;
    bool increments_ok = std::all_of(c.log.begin(), c.log.end(), [](const OrderRound& r) {
        return std::all_of(r.rewrites.begin(), r.rewrites.end(), [](const OrderRewrite& w) { return w.increment == 1; });
    });
    c.accepted = increments_ok && c.min_order >= n;
    return c;
}

}  // namespace

OrderCert m_order_certificate(int n, Field field) {
    OrderCert c = abstract_certificate(n, "(x,y)");
    if (n <= 3) {
        auto e = expand_z0(n, field, false);
        c.exact_check = e.identity_holds && e.min_order >= n;
    }
    return c;
}

OrderCert x_order_certificate_bprime(int n, Field field) {
    OrderCert c = abstract_certificate(n, "xB'");
    if (n <= 2) {
        auto e = expand_z0(n, field, true);
        auto xn = Polynomial::variable(e.ring.vars, field, "x").pow(n);
        c.exact_check = e.identity_holds && e.min_order >= n && divide_exact(e.expansion, xn).has_value();
    }
    return c;
}

CoordinateChecks coordinate_checks(int n, Field field) {
    CoordinateChecks out;
    if (n < 0) throw Error("n must be non-negative");
    if (n == 0) return out;
    if (n > 3) throw InstanceTooLarge("coordinate checks are limited to n <= 3");
    CexRing R = cex_ring(n + 1, field);
    const auto& vars = R.vars;
    auto ord = MonomialOrder::lex();
    GroebnerOptions plain{false};
    auto x = Polynomial::variable(vars, field, "x");
    auto y = Polynomial::variable(vars, field, "y");
    std::vector<Polynomial> J(R.f.begin(), R.f.begin() + n);

    // (i) composite automorphism
    std::optional<RingMap> comp;
    for (int i = 1; i <= n; ++i) {
        std::map<std::string, Polynomial> img{{"Z" + std::to_string(i - 1), R.f[i - 1] + R.Z(i - 1) + R.Z(i - 1)}};
        // phi_i(Z_{i-1}) = Z_{i-1} + x Z_{i+1} + y^(s-1) Z_i^s = Z_{i-1} + (f_i + Z_{i-1})
        RingMap phi = RingMap::from_names(vars, vars, field, img);
        comp = comp ? comp->then(phi) : phi;
    }
    std::vector<Polynomial> image, coords;
    for (const auto& g : J) image.push_back(comp->apply(g));
    for (int i = 0; i < n; ++i) coords.push_back(R.Z(i));
    out.automorphism = ideal_equal(Ideal(vars, field, image), Ideal(vars, field, coords), ord, plain);

    auto s = s_sequence(n + 1);
    std::vector<Polynomial> lhs_x{x}, rhs_x{x}, lhs_y{y}, rhs_y{y};
    for (int i = 1; i <= n; ++i) {
        long e = s[i].get_si();
        lhs_x.push_back(R.f[i - 1]);
        lhs_y.push_back(R.f[i - 1]);
        rhs_x.push_back(y.pow(e - 1) * R.Z(i).pow(e) - R.Z(i - 1));
        rhs_y.push_back(x * R.Z(i + 1) - R.Z(i - 1));
    }
    out.x_quotient = ideal_equal(Ideal(vars, field, lhs_x), Ideal(vars, field, rhs_x), ord, plain);
    out.y_quotient = ideal_equal(Ideal(vars, field, lhs_y), Ideal(vars, field, rhs_y), ord, plain);
    return out;
}

}  // namespace ufdlab
