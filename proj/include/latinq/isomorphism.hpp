#pragma once

// Isomorphism testing for finite magmas.
//
// Elements of the source are visited as a generating sequence g1, g2, ...
// where each g_i lies outside the submagma generated by its predecessors.
// Choosing images for the generators determines the map on their closure,
// so the search only branches on generator images. Candidates are filtered
// by per-element invariants (idempotence, left translation cycle type).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "magma.hpp"

namespace latinq {

using Bijection = std::vector<Element>;

inline bool is_homomorphism(const MagmaTable& p, const MagmaTable& q, const Bijection& f) {
    if (f.size() != p.order()) return false;
    for (std::size_t a = 0; a < p.order(); ++a)
        for (std::size_t b = 0; b < p.order(); ++b)
            if (f[p.op(a, b)] != q.op(f[a], f[b])) return false;
    return true;
}

namespace detail {

inline std::vector<std::size_t> invariant_key(const MagmaTable& t, std::size_t a) {
    auto key = left_translation_cycle_type(t, a);
    key.push_back(t.op(a, a) == a ? 1 : 0);
    // Length of the orbit of a under x -> x*x.
    std::size_t len = 0;
    std::vector<std::uint8_t> seen(t.order(), 0);
    for (std::size_t x = a; !seen[x]; x = t.op(x, x)) {
        seen[x] = 1;
        ++len;
    }
    key.push_back(len);
    return key;
}

class IsoSearch {
  public:
    IsoSearch(const MagmaTable& p, const MagmaTable& q) : p_(p), q_(q), n_(static_cast<Element>(p.order())) {}

    std::optional<Bijection> run() {
        if (!align_invariants()) return std::nullopt;
        Bijection fwd(n_, kUnset), bwd(n_, kUnset);
        std::vector<Element> order;
        if (search(fwd, bwd, order)) return fwd;
        return std::nullopt;
    }

  private:
    static constexpr Element kUnset = static_cast<Element>(-1);

    bool align_invariants() {
        // Invariant ids drawn from one key space shared by both tables.
        std::map<std::vector<std::size_t>, std::size_t> ids;
        auto assign = [&](const MagmaTable& t, std::vector<std::size_t>& out) {
            out.assign(t.order(), 0);
            for (std::size_t a = 0; a < t.order(); ++a)
                out[a] = ids.emplace(invariant_key(t, a), ids.size()).first->second;
        };
        assign(p_, inv_p_);
        assign(q_, inv_q_);
        std::vector<std::size_t> cp(ids.size(), 0), cq(ids.size(), 0);
        for (auto v : inv_p_) ++cp[v];
        for (auto v : inv_q_) ++cq[v];
        return cp == cq;
    }

    // Extends fwd/bwd with x -> y and closes under products. Appends newly
    // mapped source elements to `order`. Returns false on conflict.
    bool assign(Bijection& fwd, Bijection& bwd, std::vector<Element>& order, Element x, Element y) const {
        std::vector<std::pair<Element, Element>> queue{{x, y}};
        std::size_t head = 0;
        while (head < queue.size()) {
            auto [a, b] = queue[head++];
            if (fwd[a] != kUnset) {
                if (fwd[a] != b) return false;
                continue;
            }
            if (bwd[b] != kUnset || inv_p_[a] != inv_q_[b]) return false;
            fwd[a] = b;
            bwd[b] = a;
            order.push_back(a);
            // Products of the new element with every mapped element.
            for (auto c : order) {
                queue.emplace_back(p_.op(a, c), q_.op(b, fwd[c]));
                if (c != a) queue.emplace_back(p_.op(c, a), q_.op(fwd[c], b));
            }
        }
        return true;
    }

    bool search(Bijection& fwd, Bijection& bwd, std::vector<Element>& order) const {
        // Next generator: the first unmapped source element.
        Element g = kUnset;
        for (Element a = 0; a < n_; ++a)
            if (fwd[a] == kUnset) {
                g = a;
                break;
            }
        if (g == kUnset) return is_homomorphism(p_, q_, fwd);
        for (Element y = 0; y < n_; ++y) {
            if (bwd[y] != kUnset || inv_p_[g] != inv_q_[y]) continue;
            Bijection f2 = fwd, b2 = bwd;
            std::vector<Element> o2 = order;
            if (!assign(f2, b2, o2, g, y)) continue;
            if (search(f2, b2, o2)) {
                fwd = std::move(f2);
                return true;
            }
        }
        return false;
    }

    const MagmaTable& p_;
    const MagmaTable& q_;
    Element n_;
    std::vector<std::size_t> inv_p_, inv_q_;
};

}  // namespace detail

/// An explicit isomorphism f with f(x*y) = f(x)*f(y), or none.
inline std::optional<Bijection> is_isomorphic(const MagmaTable& p, const MagmaTable& q) {
    if (p.order() != q.order()) return std::nullopt;
    return detail::IsoSearch(p, q).run();
}

}  // namespace latinq
