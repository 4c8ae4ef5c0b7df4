#pragma once

// Z_LD(F, A, psi) as the kernel of a linear system over Z/2^e, e the
// exponent of A. Unknown (a, b, i) is coordinate i of theta(a, b), at
// column (a*|F| + b)*rank + i. A relation mod 2^{k_i} is scaled by
// 2^{e - k_i} so every row lives mod 2^e.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "abelian_group.hpp"
#include "extension.hpp"
#include "lifting.hpp"
#include "magma.hpp"
#include "mod_matrix.hpp"

namespace latinq {

struct LDSystem {
    MagmaTable base;
    AbelianGroup2 fiber;
    EndoMatrix psi;
    ModMatrix matrix;

    std::size_t unknowns() const { return matrix.cols(); }
};

namespace detail {

inline std::uint32_t ld_unknown(std::size_t n, std::size_t rank, std::size_t a, std::size_t b, std::size_t i) {
    return static_cast<std::uint32_t>((a * n + b) * rank + i);
}

}  // namespace detail

/// Rows: theta(a,a) = 0 for every a, then (LD) at every triple (a,b,c),
/// one row per fiber coordinate.
inline LDSystem assemble(const MagmaTable& f, const AbelianGroup2& a, const EndoMatrix& psi) {
    if (!(psi.group() == a)) throw std::invalid_argument("assemble: group mismatch");
    if (!is_admissible(psi)) throw std::invalid_argument("assemble: psi is not admissible");
    const std::size_t n = f.order(), r = a.rank();
    const int e = a.exponent();
    if (n * n * r > std::numeric_limits<std::uint32_t>::max()) throw std::length_error("assemble: too many unknowns");
    const EndoMatrix phi = psi.one_minus();
    std::vector<std::int64_t> scale(r);
    for (std::size_t i = 0; i < r; ++i) scale[i] = std::int64_t{1} << (e - a.signature()[i]);

    ModMatrix m(e, n * n * r);
    using detail::ld_unknown;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < r; ++i) m.add_sparse_row({{ld_unknown(n, r, x, x, i), scale[i]}});

    std::vector<ModMatrix::Entry> terms;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const auto yz = f.op(y, z), xy = f.op(x, y), xz = f.op(x, z);
                for (std::size_t i = 0; i < r; ++i) {
                    // psi(t(y,z)) + t(x,y*z) - psi(t(x,z)) - phi(t(x,y)) - t(x*y,x*z)
                    terms.clear();
                    const std::int64_t s = scale[i];
                    for (std::size_t j = 0; j < r; ++j) {
                        if (auto c = psi.at(i, j)) {
                            terms.emplace_back(ld_unknown(n, r, y, z, j), s * c);
                            terms.emplace_back(ld_unknown(n, r, x, z, j), -s * c);
                        }
                        if (auto c = phi.at(i, j)) terms.emplace_back(ld_unknown(n, r, x, y, j), -s * c);
                    }
                    terms.emplace_back(ld_unknown(n, r, x, yz, i), s);
                    terms.emplace_back(ld_unknown(n, r, xy, xz, i), -s);
                    m.add_sparse_row(terms);
                }
            }
    return LDSystem{f, a, psi, std::move(m)};
}

struct ZLDSolution {
    std::vector<Cocycle> generators;
    std::vector<ModVector> raw_kernel;  // kernel generators over Z/2^e before reshaping
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::size_t distinct_equations = 0;
    int log2_size = 0;                     // log2 |Z_LD|
    std::optional<bool> lifting_agrees;  // set when the lifting cross-check ran
};

struct SolveOptions {
    bool cross_check_lifting = false;
};

/// Embeds a cocycle into (Z/2^e)^{unknowns}, coordinate i scaled by
/// 2^{e - k_i}; injective, so spans keep their cardinality.
inline ModVector embed_cocycle(const Cocycle& t) {
    const auto& g = t.fiber();
    const std::size_t r = g.rank();
    const int e = g.exponent();
    ModVector v(t.values().size() * r, 0);
    for (std::size_t p = 0; p < t.values().size(); ++p) {
        const auto x = g.element(t.values()[p]);
        for (std::size_t i = 0; i < r; ++i) v[p * r + i] = x.coords[i] << (e - g.signature()[i]);
    }
    return v;
}

/// log2 of the size of the subgroup generated by the cocycles.
inline int cocycle_span_log2(const std::vector<Cocycle>& gens) {
    if (gens.empty()) return 0;
    std::vector<ModVector> vs;
    for (const auto& t : gens) vs.push_back(embed_cocycle(t));
    return span_log2(vs, gens.front().fiber().exponent());
}

inline Cocycle cocycle_from_vector(const LDSystem& s, const ModVector& v) {
    const std::size_t n = s.base.order(), r = s.fiber.rank();
    std::vector<Element> values(n * n);
    GroupElement x{std::vector<std::int64_t>(r)};
    for (std::size_t p = 0; p < n * n; ++p) {
        for (std::size_t i = 0; i < r; ++i) x.coords[i] = AbelianGroup2::mod(v[p * r + i], s.fiber.modulus(i));
        values[p] = static_cast<Element>(s.fiber.index(x));
    }
    return Cocycle(n, s.fiber, std::move(values));
}

/// Generating set of Z_LD(F, A, psi); zero and repeated generators removed.
inline ZLDSolution solve_ZLD(const LDSystem& s, const SolveOptions& opts = {}) {
    ZLDSolution out;
    out.unknowns = s.unknowns();
    out.equations = s.matrix.rows();
    const ModMatrix dedup = s.matrix.deduplicated();
    out.distinct_equations = dedup.rows();
    out.raw_kernel = kernel_basis(dedup);
    for (const auto& v : out.raw_kernel) {
        Cocycle t = cocycle_from_vector(s, v);
        if (t.is_zero()) continue;
        bool seen = false;
        for (const auto& g : out.generators) seen = seen || g == t;
        if (!seen) out.generators.push_back(std::move(t));
    }
    out.log2_size = cocycle_span_log2(out.generators);
    if (opts.cross_check_lifting)
        out.lifting_agrees = same_span(out.raw_kernel, kernel_by_lifting(dedup), dedup.cols(), dedup.exponent());
    return out;
}

struct NonmedialGenerator {
    std::size_t index;
    CocycleViolation witness;
};

/// First generator failing (M), with its witness quadruple.
inline std::optional<NonmedialGenerator> nonmedial_generator(const MagmaTable& f, const AbelianGroup2& a, const EndoMatrix& psi,
                                                             const std::vector<Cocycle>& gens) {
    if (gens.empty()) return std::nullopt;
    const CocycleChecker checker(f, a, psi);
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (auto w = checker.check_m(gens[i])) return NonmedialGenerator{i, *w};
    return std::nullopt;
}

/// Sum of the generators with the given integer coefficients.
inline Cocycle combine_cocycles(const std::vector<Cocycle>& gens, const std::vector<std::int64_t>& coeffs) {
    if (gens.empty() || gens.size() != coeffs.size()) throw std::invalid_argument("combine_cocycles: size mismatch");
    const auto& g = gens.front().fiber();
    std::vector<Element> values(gens.front().values().size(), 0);
    std::vector<GroupElement> acc(values.size(), g.zero());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (coeffs[k] == 0) continue;
        for (std::size_t p = 0; p < values.size(); ++p) {
            auto x = g.element(gens[k].values()[p]);
            for (std::size_t i = 0; i < x.coords.size(); ++i) x.coords[i] *= coeffs[k];
            acc[p] = g.add(acc[p], g.reduce(x));
        }
    }
    for (std::size_t p = 0; p < values.size(); ++p) values[p] = static_cast<Element>(g.index(acc[p]));
    return Cocycle(gens.front().base_order(), g, std::move(values));
}

}  // namespace latinq
