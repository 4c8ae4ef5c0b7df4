#pragma once

// Central extensions Q x_{phi,psi,theta} A with operation
//   (a, s) * (b, t) = (a*b, phi(s) + psi(t) + theta(a, b)),
// element (a, s) indexed a*|A| + index(s).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelian_group.hpp"
#include "affine.hpp"
#include "magma.hpp"
#include "onoi.hpp"

namespace latinq {

/// theta: Q x Q -> A, values stored as fiber element indices at a*|Q| + b.
class Cocycle {
  public:
    Cocycle() = default;
    Cocycle(std::size_t base_order, AbelianGroup2 fiber, std::vector<Element> values)
        : n_(base_order), fiber_(std::move(fiber)), values_(std::move(values)) {
        if (values_.size() != n_ * n_) throw std::invalid_argument("Cocycle: value count mismatch");
        for (auto v : values_)
            if (v >= fiber_.order()) throw std::invalid_argument("Cocycle: value out of range");
    }

    static Cocycle zero(std::size_t base_order, const AbelianGroup2& fiber) {
        return Cocycle(base_order, fiber, std::vector<Element>(base_order * base_order, 0));
    }

    std::size_t base_order() const { return n_; }
    const AbelianGroup2& fiber() const { return fiber_; }
    const std::vector<Element>& values() const { return values_; }
    Element at(std::size_t a, std::size_t b) const { return values_[a * n_ + b]; }
    void set(std::size_t a, std::size_t b, Element v) { values_.at(a * n_ + b) = v; }
    GroupElement value(std::size_t a, std::size_t b) const { return fiber_.element(at(a, b)); }

    bool diagonal_zero() const {
        for (std::size_t a = 0; a < n_; ++a)
            if (at(a, a) != 0) return false;
        return true;
    }
    bool is_zero() const {
        for (auto v : values_)
            if (v) return false;
        return true;
    }

    friend bool operator==(const Cocycle&, const Cocycle&) = default;

  private:
    std::size_t n_ = 0;
    AbelianGroup2 fiber_;
    std::vector<Element> values_;
};

struct ExtensionSpec {
    MagmaTable base;
    AbelianGroup2 fiber;
    EndoMatrix phi;
    EndoMatrix psi;
    Cocycle theta;

    /// The standard spec with phi = 1 - psi.
    static ExtensionSpec make(MagmaTable base, AbelianGroup2 fiber, EndoMatrix psi, Cocycle theta) {
        EndoMatrix phi = psi.one_minus();
        return ExtensionSpec{std::move(base), std::move(fiber), std::move(phi), std::move(psi), std::move(theta)};
    }
};

struct CocycleViolation {
    enum class Kind { PhiPlusPsi, DiagonalNonzero, LeftDistributive, Medial };
    Kind kind;
    std::vector<std::size_t> where;  // base elements (a,b,c) or (a,b,c,d)

    std::string describe() const {
        std::string s;
        switch (kind) {
            case Kind::PhiPlusPsi: s = "phi+psi!=1"; break;
            case Kind::DiagonalNonzero: s = "theta(a,a)!=0"; break;
            case Kind::LeftDistributive: s = "LD"; break;
            case Kind::Medial: s = "M"; break;
        }
        s += " at (";
        for (std::size_t i = 0; i < where.size(); ++i) s += (i ? "," : "") + std::to_string(where[i]);
        return s + ")";
    }
};

/// Precomputed index arithmetic for checking many cocycles against one
/// (Q, A, phi, psi).
class CocycleChecker {
  public:
    CocycleChecker(const MagmaTable& base, const AbelianGroup2& fiber, const EndoMatrix& phi, const EndoMatrix& psi)
        : base_(base), group_(fiber), phi_(phi.index_table()), psi_(psi.index_table()),
          phi_plus_psi_is_identity_(phi + psi == EndoMatrix::identity(fiber)) {
        if (!(phi.group() == fiber) || !(psi.group() == fiber)) throw std::invalid_argument("CocycleChecker: group mismatch");
    }

    CocycleChecker(const MagmaTable& base, const AbelianGroup2& fiber, const EndoMatrix& psi)
        : CocycleChecker(base, fiber, psi.one_minus(), psi) {}

    /// phi + psi = 1, theta(a,a) = 0 and
    /// psi(t(b,c)) + t(a,b*c) = psi(t(a,c)) + phi(t(a,b)) + t(a*b,a*c).
    std::optional<CocycleViolation> check_ld(const Cocycle& t) const {
        check_shape(t);
        if (!phi_plus_psi_is_identity_) return CocycleViolation{CocycleViolation::Kind::PhiPlusPsi, {}};
        const std::size_t n = base_.order();
        for (std::size_t a = 0; a < n; ++a)
            if (t.at(a, a) != 0) return CocycleViolation{CocycleViolation::Kind::DiagonalNonzero, {a}};
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const auto ab = base_.op(a, b);
                const auto phi_tab = phi_[t.at(a, b)];
                for (std::size_t c = 0; c < n; ++c) {
                    const auto lhs = group_.add(psi_[t.at(b, c)], t.at(a, base_.op(b, c)));
                    const auto rhs = group_.add(group_.add(psi_[t.at(a, c)], phi_tab), t.at(ab, base_.op(a, c)));
                    if (lhs != rhs) return CocycleViolation{CocycleViolation::Kind::LeftDistributive, {a, b, c}};
                }
            }
        return std::nullopt;
    }

    /// phi(t(a,b)) + psi(t(c,d)) + t(a*b,c*d) = phi(t(a,c)) + psi(t(b,d)) + t(a*c,b*d),
    /// lexicographically first failure.
    std::optional<CocycleViolation> check_m(const Cocycle& t) const {
        check_shape(t);
        const std::size_t n = base_.order();
        // side(x,y,u,v) = phi(t(x,y)) + psi(t(u,v)) + t(x*y, u*v); compare
        // side(a,b,c,d) with side(a,c,b,d).
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const auto ab = base_.op(a, b);
                const auto phi_ab = phi_[t.at(a, b)];
                for (std::size_t c = 0; c < n; ++c) {
                    const auto ac = base_.op(a, c);
                    const auto phi_ac = phi_[t.at(a, c)];
                    for (std::size_t d = 0; d < n; ++d) {
                        const auto lhs = group_.add(group_.add(phi_ab, psi_[t.at(c, d)]), t.at(ab, base_.op(c, d)));
                        const auto rhs = group_.add(group_.add(phi_ac, psi_[t.at(b, d)]), t.at(ac, base_.op(b, d)));
                        if (lhs != rhs) return CocycleViolation{CocycleViolation::Kind::Medial, {a, b, c, d}};
                    }
                }
            }
        return std::nullopt;
    }

    const IndexedGroup& group() const { return group_; }

  private:
    void check_shape(const Cocycle& t) const {
        if (t.base_order() != base_.order() || !(t.fiber() == group_.group()))
            throw std::invalid_argument("CocycleChecker: cocycle shape mismatch");
    }

    const MagmaTable& base_;
    IndexedGroup group_;
    std::vector<Element> phi_, psi_;
    bool phi_plus_psi_is_identity_;
};

inline std::optional<CocycleViolation> check_LD(const ExtensionSpec& e) {
    return CocycleChecker(e.base, e.fiber, e.phi, e.psi).check_ld(e.theta);
}

inline std::optional<CocycleViolation> check_M(const ExtensionSpec& e) {
    return CocycleChecker(e.base, e.fiber, e.phi, e.psi).check_m(e.theta);
}

/// Operation table of the extension. Throws if psi is not admissible.
inline MagmaTable build_extension(const ExtensionSpec& e) {
    if (!(e.psi.group() == e.fiber) || !(e.phi.group() == e.fiber)) throw std::invalid_argument("build_extension: group mismatch");
    if (!is_admissible(e.psi)) throw std::invalid_argument("build_extension: psi is not admissible");
    if (e.theta.base_order() != e.base.order() || !(e.theta.fiber() == e.fiber))
        throw std::invalid_argument("build_extension: cocycle shape mismatch");
    const IndexedGroup g(e.fiber);
    const auto phi = e.phi.index_table();
    const auto psi = e.psi.index_table();
    const std::size_t m = g.size();
    return MagmaTable::from_function(e.base.order() * m, [&](std::size_t x, std::size_t y) {
        const std::size_t a = x / m, s = x % m, b = y / m, t = y % m;
        return e.base.op(a, b) * m + g.add(g.add(phi[s], psi[t]), e.theta.at(a, b));
    });
}

/// Mediality witness of the built table obtained from an (M) failure at
/// (a,b,c,d): the quadruple (a,0),(b,0),(c,0),(d,0). Verified against the table.
inline std::optional<MedialityWitness> lifted_medial_witness(const ExtensionSpec& e, const MagmaTable& table) {
    const auto v = check_M(e);
    if (!v || v->kind != CocycleViolation::Kind::Medial) return std::nullopt;
    const std::size_t m = e.fiber.order();
    const MedialityWitness w{v->where[0] * m, v->where[1] * m, v->where[2] * m, v->where[3] * m};
    if (!w.holds_in(table)) return std::nullopt;
    return w;
}

/// theta(a, b) = mu(a, a+b, a+b) over Aff(O1) with fiber (O2, +).
inline Cocycle theta_from_mu(const OnoiMapping& m) {
    const std::size_t n = m.source().size();
    std::vector<Element> values(n * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) values[a * n + b] = m(a, a ^ b, a ^ b);
    return Cocycle(n, AbelianGroup2::elementary(m.target().dim()), std::move(values));
}

/// Aff(O1) x_{alpha2^2, alpha2, theta} (O2, +) for theta = theta_from_mu(m).
inline ExtensionSpec onoi_extension_spec(const OnoiMapping& m) {
    EndoMatrix psi = m.target().alpha_endo();
    return ExtensionSpec::make(aff_of_onoi(m.source()), AbelianGroup2::elementary(m.target().dim()), std::move(psi),
                               theta_from_mu(m));
}

inline MagmaTable quandle_QOOmu(const OnoiRing& o1, const OnoiRing& o2, const OnoiMapping& m) {
    if (!(m.source() == o1) || !(m.target() == o2)) throw std::invalid_argument("quandle_QOOmu: mapping does not match rings");
    return build_extension(onoi_extension_spec(m));
}

/// Transports the spec along an automorphism a of the fiber:
/// (a phi a^-1, a psi a^-1, a theta). The extensions are isomorphic through
/// (x, s) -> (x, a(s)).
inline ExtensionSpec conjugate_extension(const ExtensionSpec& e, const EndoMatrix& a) {
    if (!(a.group() == e.fiber)) throw std::invalid_argument("conjugate_extension: group mismatch");
    if (!is_bijective_endo(a)) throw std::invalid_argument("conjugate_extension: not an automorphism");
    const EndoMatrix ainv = inverse(a);
    const auto at = a.index_table();
    std::vector<Element> values(e.theta.values().size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = at[e.theta.values()[i]];
    return ExtensionSpec{e.base, e.fiber, a.compose(e.phi).compose(ainv), a.compose(e.psi).compose(ainv),
                         Cocycle(e.theta.base_order(), e.fiber, std::move(values))};
}

/// The map (x, s) -> (x, a(s)) on extension element indices.
inline std::vector<Element> fiber_transport_map(std::size_t base_order, const EndoMatrix& a) {
    const auto at = a.index_table();
    const std::size_t m = at.size();
    std::vector<Element> f(base_order * m);
    for (std::size_t x = 0; x < base_order; ++x)
        for (std::size_t s = 0; s < m; ++s) f[x * m + s] = static_cast<Element>(x * m + at[s]);
    return f;
}

}  // namespace latinq
