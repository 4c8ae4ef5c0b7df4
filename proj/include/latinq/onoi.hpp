#pragma once

// Onoi rings: characteristic-2 rings (not necessarily associative) with an
// automorphism alpha satisfying alpha^2 + alpha + 1 = 0 and
// alpha(a) b = a alpha(b); Onoi mappings between them.
//
// Elements of a ring of dimension d are d-bit integers. Coordinate i (in the
// lexicographic sense) is bit d-1-i, so element indices agree with
// AbelianGroup2::elementary(d) indexing. Addition is XOR.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelian_group.hpp"
#include "magma.hpp"

namespace latinq {

class OnoiRing {
  public:
    static constexpr int kMaxDim = 10;

    OnoiRing() : OnoiRing(0, {0}, {0}) {}

    /// Full multiplication table (row-major, 2^dim x 2^dim) and the table of
    /// alpha on all elements.
    OnoiRing(int dim, std::vector<Element> mul, std::vector<Element> alpha)
        : dim_(dim), mul_(std::move(mul)), alpha_(std::move(alpha)) {
        if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("OnoiRing: dimension out of range");
        const std::size_t n = size();
        if (mul_.size() != n * n || alpha_.size() != n) throw std::invalid_argument("OnoiRing: table size mismatch");
        for (auto v : mul_)
            if (v >= n) throw std::invalid_argument("OnoiRing: product out of range");
        for (auto v : alpha_)
            if (v >= n) throw std::invalid_argument("OnoiRing: alpha image out of range");
    }

    /// Ring determined by products of basis bits (basis[i*dim+j] = 2^i * 2^j)
    /// extended bilinearly, and alpha images of basis bits extended linearly.
    static OnoiRing from_basis(int dim, const std::vector<Element>& basis_products, const std::vector<Element>& alpha_bits) {
        if (basis_products.size() != static_cast<std::size_t>(dim * dim) || alpha_bits.size() != static_cast<std::size_t>(dim))
            throw std::invalid_argument("OnoiRing: basis data size mismatch");
        const std::size_t n = std::size_t{1} << dim;
        std::vector<Element> mul(n * n, 0), alpha(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            for (int i = 0; i < dim; ++i)
                if ((a >> i) & 1u) alpha[a] ^= alpha_bits[static_cast<std::size_t>(i)];
            for (std::size_t b = 0; b < n; ++b) {
                Element acc = 0;
                for (int i = 0; i < dim; ++i) {
                    if (!((a >> i) & 1u)) continue;
                    for (int j = 0; j < dim; ++j)
                        if ((b >> j) & 1u) acc ^= basis_products[static_cast<std::size_t>(i * dim + j)];
                }
                mul[a * n + b] = acc;
            }
        }
        return OnoiRing(dim, std::move(mul), std::move(alpha));
    }

    int dim() const { return dim_; }
    std::size_t size() const { return std::size_t{1} << dim_; }
    Element mul(Element a, Element b) const { return mul_[a * size() + b]; }
    Element alpha(Element a) const { return alpha_[a]; }
    const std::vector<Element>& mul_table() const { return mul_; }
    const std::vector<Element>& alpha_table() const { return alpha_; }

    /// alpha as a matrix over Z_2^dim: entry (i, j) is coordinate i of
    /// alpha(e_j).
    EndoMatrix alpha_endo() const {
        const auto g = AbelianGroup2::elementary(dim_);
        const std::size_t d = static_cast<std::size_t>(dim_);
        std::vector<std::int64_t> e(d * d, 0);
        for (std::size_t j = 0; j < d; ++j) {
            const Element img = alpha_[Element{1} << (d - 1 - j)];
            for (std::size_t i = 0; i < d; ++i) e[i * d + j] = (img >> (d - 1 - i)) & 1u;
        }
        return EndoMatrix(g, std::move(e));
    }

    friend bool operator==(const OnoiRing&, const OnoiRing&) = default;

  private:
    int dim_;
    std::vector<Element> mul_;
    std::vector<Element> alpha_;
};

struct OnoiViolation {
    std::string axiom;
    std::vector<Element> witness;
};

/// Checks every Onoi ring axiom exhaustively; reports the first failure.
inline std::optional<OnoiViolation> validate_onoi_ring(const OnoiRing& o) {
    const Element n = static_cast<Element>(o.size());
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (o.alpha(a ^ b) != (o.alpha(a) ^ o.alpha(b))) return OnoiViolation{"alpha additive", {a, b}};
    {
        std::vector<std::uint8_t> hit(n, 0);
        for (Element a = 0; a < n; ++a) {
            if (hit[o.alpha(a)]) return OnoiViolation{"alpha bijective", {a}};
            hit[o.alpha(a)] = 1;
        }
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c) {
                if (o.mul(a, b ^ c) != (o.mul(a, b) ^ o.mul(a, c))) return OnoiViolation{"left distributive", {a, b, c}};
                if (o.mul(a ^ b, c) != (o.mul(a, c) ^ o.mul(b, c))) return OnoiViolation{"right distributive", {a, b, c}};
            }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (o.alpha(o.mul(a, b)) != o.mul(o.alpha(a), o.alpha(b)))
                return OnoiViolation{"alpha multiplicative", {a, b}};
    for (Element a = 0; a < n; ++a)
        if ((o.alpha(o.alpha(a)) ^ o.alpha(a) ^ a) != 0) return OnoiViolation{"alpha^2 + alpha + 1 = 0", {a}};
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (o.mul(o.alpha(a), b) != o.mul(a, o.alpha(b))) return OnoiViolation{"alpha(a) b = a alpha(b)", {a, b}};
    // Consequences of the axioms above; kept as explicit checks.
    for (Element a = 1; a < n; ++a)
        if (o.alpha(a) == a) return OnoiViolation{"alpha fixes only 0", {a}};
    if ((n - 1) % 3 != 0) return OnoiViolation{"3 divides |O| - 1", {}};
    return std::nullopt;
}

/// The order-3 map 1 -> 2 -> 3 -> 1 on {0,1,2,3}.
inline std::vector<Element> four_element_alpha() { return {0, 2, 3, 1}; }

/// The four 4-element Onoi rings with alpha = (1 2 3): the zero ring and the
/// rings with tables .1, .2, .3.
inline std::vector<OnoiRing> four_element_rings() {
    const std::vector<std::vector<Element>> tables = {
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 3, 2, 0, 3, 2, 1, 0, 2, 1, 3},
        {0, 0, 0, 0, 0, 3, 2, 1, 0, 2, 1, 3, 0, 1, 3, 2},
        {0, 0, 0, 0, 0, 2, 1, 3, 0, 1, 3, 2, 0, 3, 2, 1},
    };
    std::vector<OnoiRing> out;
    for (const auto& t : tables) out.emplace_back(2, t, four_element_alpha());
    return out;
}

inline OnoiRing zero_onoi_ring(int dim, std::vector<Element> alpha) {
    const std::size_t n = std::size_t{1} << dim;
    return OnoiRing(dim, std::vector<Element>(n * n, 0), std::move(alpha));
}

namespace detail {

inline Element block(Element x, std::size_t c, std::size_t k, int d) {
    return (x >> ((k - 1 - c) * static_cast<std::size_t>(d))) & ((Element{1} << d) - 1);
}

inline Element place(Element v, std::size_t c, std::size_t k, int d) {
    return v << ((k - 1 - c) * static_cast<std::size_t>(d));
}

// Linear bijections f of Z_2^dim as element tables.
inline std::vector<std::vector<Element>> linear_bijections(int dim) {
    std::vector<std::vector<Element>> out;
    const std::size_t n = std::size_t{1} << dim;
    gf2::for_each_invertible(dim, [&](const gf2::SquareMatrix& m) {
        // Column j of the map is the image of bit j: bits of row masks.
        std::vector<Element> img(n, 0);
        for (std::size_t x = 0; x < n; ++x) {
            Element y = 0;
            for (int i = 0; i < dim; ++i)
                if (std::popcount(static_cast<unsigned>(m.rows[static_cast<std::size_t>(i)] & x)) & 1) y |= Element{1} << i;
            img[x] = y;
        }
        out.push_back(std::move(img));
    });
    return out;
}

inline bool transports(const OnoiRing& a, const OnoiRing& b, const std::vector<Element>& f, bool respect_alpha) {
    const Element n = static_cast<Element>(a.size());
    for (Element x = 0; x < n; ++x) {
        if (respect_alpha && f[a.alpha(x)] != b.alpha(f[x])) return false;
        for (Element y = 0; y < n; ++y)
            if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
    }
    return true;
}

inline std::vector<OnoiRing> dedupe_rings(const std::vector<OnoiRing>& rings, bool respect_alpha) {
    if (rings.empty()) return {};
    const auto maps = linear_bijections(rings.front().dim());
    std::vector<OnoiRing> reps;
    for (const auto& r : rings) {
        bool dup = false;
        for (const auto& s : reps) {
            for (const auto& f : maps)
                if (transports(r, s, f, respect_alpha)) {
                    dup = true;
                    break;
                }
            if (dup) break;
        }
        if (!dup) reps.push_back(r);
    }
    return reps;
}

}  // namespace detail

/// Onoi rings of dimension dim <= 2 up to isomorphisms commuting with alpha,
/// with alpha fixed to a single order-3 map. Sorted by multiplication table.
inline std::vector<OnoiRing> classify_onoi_rings(int dim) {
    if (dim < 0 || dim > 2) throw std::invalid_argument("classify_onoi_rings: dimension too large");
    if (dim == 0) return {OnoiRing()};
    if (dim == 1) return {};  // no fixed-point-free alpha on two elements
    const std::vector<Element> alpha_bits = {four_element_alpha()[1], four_element_alpha()[2]};
    const std::size_t slots = static_cast<std::size_t>(dim * dim);
    const std::size_t values = std::size_t{1} << dim;
    std::vector<OnoiRing> valid;
    std::vector<Element> basis(slots, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < slots; ++i) total *= values;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < slots; ++i) {
            basis[i] = static_cast<Element>(c % values);
            c /= values;
        }
        auto ring = OnoiRing::from_basis(dim, basis, alpha_bits);
        if (!validate_onoi_ring(ring)) valid.push_back(std::move(ring));
    }
    auto reps = detail::dedupe_rings(valid, true);
    std::sort(reps.begin(), reps.end(),
              [](const OnoiRing& a, const OnoiRing& b) { return a.mul_table() < b.mul_table(); });
    return reps;
}

/// Number of classes when alpha is ignored (plain ring isomorphisms).
inline std::size_t count_plain_ring_classes(const std::vector<OnoiRing>& rings) {
    return detail::dedupe_rings(rings, false).size();
}

/// O^sigma: k-fold power with (a . b)_i = a_{sigma(i)} . b_i (0-based sigma).
inline OnoiRing power_sigma(const OnoiRing& o, std::size_t k, const std::vector<std::size_t>& sigma) {
    if (sigma.size() != k) throw std::invalid_argument("power_sigma: permutation size mismatch");
    {
        auto s = sigma;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < k; ++i)
            if (s[i] != i) throw std::invalid_argument("power_sigma: not a permutation");
    }
    const int d = o.dim();
    const int dim = d * static_cast<int>(k);
    if (dim > OnoiRing::kMaxDim) throw std::invalid_argument("power_sigma: result too large");
    const std::size_t n = std::size_t{1} << dim;
    std::vector<Element> mul(n * n), alpha(n);
    for (Element a = 0; a < n; ++a) {
        Element al = 0;
        for (std::size_t c = 0; c < k; ++c) al |= detail::place(o.alpha(detail::block(a, c, k, d)), c, k, d);
        alpha[a] = al;
        for (Element b = 0; b < n; ++b) {
            Element p = 0;
            for (std::size_t c = 0; c < k; ++c)
                p |= detail::place(o.mul(detail::block(a, sigma[c], k, d), detail::block(b, c, k, d)), c, k, d);
            mul[a * n + b] = p;
        }
    }
    return OnoiRing(dim, std::move(mul), std::move(alpha));
}

/// M_n^sigma(O): n x n matrices, cell (i, j) stored as block i*n + j, with
/// (a . b)_{i,j} = sum_k a_{sigma(i,k)} . b_{k,j}. sigma maps cell indices.
inline OnoiRing matrix_ring(const OnoiRing& o, std::size_t n, const std::vector<std::size_t>& sigma) {
    const std::size_t cells = n * n;
    if (sigma.size() != cells) throw std::invalid_argument("matrix_ring: permutation size mismatch");
    {
        auto s = sigma;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < cells; ++i)
            if (s[i] != i) throw std::invalid_argument("matrix_ring: not a permutation");
    }
    const int d = o.dim();
    const int dim = d * static_cast<int>(cells);
    if (dim > OnoiRing::kMaxDim) throw std::invalid_argument("matrix_ring: result too large");
    const std::size_t size = std::size_t{1} << dim;
    std::vector<Element> mul(size * size), alpha(size);
    for (Element a = 0; a < size; ++a) {
        Element al = 0;
        for (std::size_t c = 0; c < cells; ++c) al |= detail::place(o.alpha(detail::block(a, c, cells, d)), c, cells, d);
        alpha[a] = al;
        for (Element b = 0; b < size; ++b) {
            Element p = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Element acc = 0;
                    for (std::size_t k = 0; k < n; ++k)
                        acc ^= o.mul(detail::block(a, sigma[i * n + k], cells, d), detail::block(b, k * n + j, cells, d));
                    p |= detail::place(acc, i * n + j, cells, d);
                }
            mul[a * size + b] = p;
        }
    }
    return OnoiRing(dim, std::move(mul), std::move(alpha));
}

/// Trilinear map mu: O1^3 -> O2 stored by its values on basis-bit triples.
class OnoiMapping {
  public:
    OnoiMapping(OnoiRing source, OnoiRing target, std::vector<Element> basis_values)
        : source_(std::move(source)), target_(std::move(target)), values_(std::move(basis_values)) {
        const std::size_t d = static_cast<std::size_t>(source_.dim());
        if (values_.size() != d * d * d) throw std::invalid_argument("OnoiMapping: basis value count mismatch");
        for (auto v : values_)
            if (v >= target_.size()) throw std::invalid_argument("OnoiMapping: value out of range");
    }

    /// Trilinear extension of f restricted to basis-bit triples.
    template <class F>
    static OnoiMapping from_function(OnoiRing source, OnoiRing target, F&& f) {
        const int d = source.dim();
        std::vector<Element> v;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int l = 0; l < d; ++l) v.push_back(static_cast<Element>(f(Element{1} << i, Element{1} << j, Element{1} << l)));
        return OnoiMapping(std::move(source), std::move(target), std::move(v));
    }

    const OnoiRing& source() const { return source_; }
    const OnoiRing& target() const { return target_; }

    Element operator()(Element a, Element b, Element c) const {
        const std::size_t d = static_cast<std::size_t>(source_.dim());
        Element acc = 0;
        for (Element x = a; x; x &= x - 1) {
            const std::size_t i = static_cast<std::size_t>(std::countr_zero(x));
            for (Element y = b; y; y &= y - 1) {
                const std::size_t j = static_cast<std::size_t>(std::countr_zero(y));
                const std::size_t base = (i * d + j) * d;
                for (Element z = c; z; z &= z - 1) acc ^= values_[base + static_cast<std::size_t>(std::countr_zero(z))];
            }
        }
        return acc;
    }

    bool is_zero() const {
        return std::all_of(values_.begin(), values_.end(), [](Element v) { return v == 0; });
    }

  private:
    OnoiRing source_;
    OnoiRing target_;
    std::vector<Element> values_;
};

/// Exhaustive trilinearity check of an arbitrary map O1^3 -> O2 (|O1| <= 16).
inline std::optional<std::vector<Element>> trilinearity_violation(
    const OnoiRing& source, const std::function<Element(Element, Element, Element)>& f) {
    const Element n = static_cast<Element>(source.size());
    if (n > 16) throw std::length_error("trilinearity_violation: ring too large");
    for (Element a = 0; a < n; ++a)
        for (Element a2 = 0; a2 < n; ++a2)
            for (Element b = 0; b < n; ++b)
                for (Element c = 0; c < n; ++c) {
                    if (f(a ^ a2, b, c) != (f(a, b, c) ^ f(a2, b, c))) return std::vector<Element>{0, a, a2, b, c};
                    if (f(b, a ^ a2, c) != (f(b, a, c) ^ f(b, a2, c))) return std::vector<Element>{1, b, a, a2, c};
                    if (f(b, c, a ^ a2) != (f(b, c, a) ^ f(b, c, a2))) return std::vector<Element>{2, b, c, a, a2};
                }
    return std::nullopt;
}

/// Checks (OM1)-(OM3): mu(aa,ab,ac) = alpha(mu(a,b,c)), mu(aa,b,c) = mu(a,ab,ac),
/// mu(a,ab,c) = mu(a,b,ac). Exhaustive over O1^3 when |O1| <= 16; otherwise
/// on basis triples, which suffices since both sides are trilinear.
inline std::optional<OnoiViolation> validate_onoi_mapping(const OnoiMapping& m) {
    const auto& s = m.source();
    const auto& t = m.target();
    if (auto v = validate_onoi_ring(s)) return OnoiViolation{"source: " + v->axiom, v->witness};
    if (auto v = validate_onoi_ring(t)) return OnoiViolation{"target: " + v->axiom, v->witness};
    std::vector<Element> probe;
    if (s.size() <= 16) {
        for (Element x = 0; x < s.size(); ++x) probe.push_back(x);
    } else {
        for (int i = 0; i < s.dim(); ++i) probe.push_back(Element{1} << i);
    }
    for (auto a : probe)
        for (auto b : probe)
            for (auto c : probe) {
                const Element aa = s.alpha(a), ab = s.alpha(b), ac = s.alpha(c);
                if (m(aa, ab, ac) != t.alpha(m(a, b, c))) return OnoiViolation{"OM1", {a, b, c}};
                if (m(aa, b, c) != m(a, ab, ac)) return OnoiViolation{"OM2", {a, b, c}};
                if (m(a, ab, c) != m(a, b, ac)) return OnoiViolation{"OM3", {a, b, c}};
            }
    return std::nullopt;
}

/// mu(a, b, c) = a (b c)
inline OnoiMapping canonical_mapping(const OnoiRing& o) {
    return OnoiMapping::from_function(o, o, [&](Element a, Element b, Element c) { return o.mul(a, o.mul(b, c)); });
}

/// The direct square O^2 (componentwise product).
inline OnoiRing direct_square(const OnoiRing& o) { return power_sigma(o, 2, {0, 1}); }

/// mu((a,b),(c,d),(u,v)) = b (d u), a map from O^2 to O.
inline OnoiMapping split_mapping(const OnoiRing& o) {
    const int d = o.dim();
    auto hi = [d](Element x) { return x >> d; };
    auto lo = [d](Element x) { return x & ((Element{1} << d) - 1); };
    return OnoiMapping::from_function(direct_square(o), o, [&](Element x, Element y, Element z) {
        return o.mul(lo(x), o.mul(lo(y), hi(z)));
    });
}

struct MuViolation {
    int identity;  // 1: mu(a,b,b) = mu(b,a,a); 2: mu(a,b,c) = mu(a,c,b)
    Element a, b, c;
};

/// Exhaustive check of mu(a,b,b) = mu(b,a,a) and mu(a,b,c) = mu(a,c,b);
/// lowest witness first. The second identity is trilinear, so rings above 16
/// elements are checked on basis triples.
inline std::optional<MuViolation> check_mu_identities(const OnoiMapping& m) {
    const Element n = static_cast<Element>(m.source().size());
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (m(a, b, b) != m(b, a, a)) return MuViolation{1, a, b, b};
    std::vector<Element> probe;
    if (n <= 16) {
        for (Element x = 0; x < n; ++x) probe.push_back(x);
    } else {
        for (int i = 0; i < m.source().dim(); ++i) probe.push_back(Element{1} << i);
    }
    for (auto a : probe)
        for (auto b : probe)
            for (auto c : probe)
                if (m(a, b, c) != m(a, c, b)) return MuViolation{2, a, b, c};
    return std::nullopt;
}

/// Lowest e with e (e e) != 0.
inline std::optional<Element> find_cube_nonzero(const OnoiRing& o) {
    for (Element e = 0; e < o.size(); ++e)
        if (o.mul(e, o.mul(e, e)) != 0) return e;
    return std::nullopt;
}

/// Aff(O): a * b = alpha^2(a) + alpha(b).
inline MagmaTable aff_of_onoi(const OnoiRing& o) {
    return MagmaTable::from_function(o.size(), [&](std::size_t a, std::size_t b) {
        return o.alpha(o.alpha(static_cast<Element>(a))) ^ o.alpha(static_cast<Element>(b));
    });
}

}  // namespace latinq
