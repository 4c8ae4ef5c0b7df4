#pragma once

// Reference implementations used only by tests. Each one avoids the code
// path it checks: dense elimination instead of bitset/Howell, group-element
// arithmetic instead of index tables, exhaustive enumeration instead of
// linear algebra.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "latinq/abelian_group.hpp"
#include "latinq/extension.hpp"
#include "latinq/magma.hpp"
#include "latinq/mod_matrix.hpp"

namespace oracle {

using latinq::AbelianGroup2;
using latinq::Cocycle;
using latinq::EndoMatrix;
using latinq::GroupElement;
using latinq::MagmaTable;

/// All v in (Z/2^e)^cols with A v = 0, by enumeration.
inline std::vector<latinq::ModVector> brute_kernel(const latinq::ModMatrix& a) {
    const std::int64_t m = a.modulus();
    const std::size_t s = a.cols();
    std::vector<latinq::ModVector> out;
    latinq::ModVector v(s, 0);
    while (true) {
        if (a.annihilates(v)) out.push_back(v);
        std::size_t i = 0;
        while (i < s && ++v[i] == m) v[i++] = 0;
        if (i == s) break;
    }
    return out;
}

/// Every element of the subgroup generated by gens, by closure.
inline std::vector<latinq::ModVector> span_closure(const std::vector<latinq::ModVector>& gens, std::size_t width, int e) {
    const std::int64_t m = std::int64_t{1} << e;
    std::vector<latinq::ModVector> elems{latinq::ModVector(width, 0)};
    for (const auto& g : gens) {
        std::vector<latinq::ModVector> next = elems;
        for (const auto& x : elems) {
            auto y = x;
            for (std::int64_t c = 1; c < m; ++c) {
                for (std::size_t i = 0; i < width; ++i) y[i] = (y[i] + g[i]) % m;
                next.push_back(y);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        elems = std::move(next);
    }
    return elems;
}

/// Dense Gauss-Jordan over Z_2; returns rank.
inline std::size_t gf2_rank(std::vector<std::vector<std::uint8_t>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (std::size_t k = c; k < cols; ++k) rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

/// Dense nullspace over Z_2, one vector per free column.
inline std::vector<std::vector<std::uint8_t>> gf2_nullspace(std::vector<std::vector<std::uint8_t>> rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (std::size_t k = c; k < cols; ++k) rows[r][k] ^= rows[rank][k];
        pivots.push_back(c);
        ++rank;
    }
    std::vector<std::uint8_t> is_pivot(cols, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<std::uint8_t>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint8_t> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = rows[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

/// (LD) and theta(a,a) = 0 evaluated with GroupElement arithmetic; true iff
/// all hold.
inline bool ld_holds(const MagmaTable& q, const AbelianGroup2& g, const EndoMatrix& psi,
                     const std::vector<GroupElement>& theta) {
    const std::size_t n = q.order();
    const EndoMatrix phi = psi.one_minus();
    auto t = [&](std::size_t a, std::size_t b) -> const GroupElement& { return theta[a * n + b]; };
    for (std::size_t a = 0; a < n; ++a)
        if (!(t(a, a) == g.zero())) return false;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                auto lhs = g.add(psi.apply(t(b, c)), t(a, q.op(b, c)));
                auto rhs = g.add(g.add(psi.apply(t(a, c)), phi.apply(t(a, b))), t(q.op(a, b), q.op(a, c)));
                if (!(lhs == rhs)) return false;
            }
    return true;
}

/// Residual of the (LD) system at theta, one Z_2 entry per (row, coordinate),
/// for elementary fibers. Rows ordered: diagonals, then triples.
inline std::vector<std::uint8_t> ld_residual_gf2(const MagmaTable& q, const AbelianGroup2& g, const EndoMatrix& psi,
                                                 const std::vector<GroupElement>& theta) {
    const std::size_t n = q.order(), r = g.rank();
    const EndoMatrix phi = psi.one_minus();
    auto t = [&](std::size_t a, std::size_t b) -> const GroupElement& { return theta[a * n + b]; };
    std::vector<std::uint8_t> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < r; ++i) out.push_back(static_cast<std::uint8_t>(t(a, a).coords[i] & 1));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                auto lhs = g.add(psi.apply(t(b, c)), t(a, q.op(b, c)));
                auto rhs = g.add(g.add(psi.apply(t(a, c)), phi.apply(t(a, b))), t(q.op(a, b), q.op(a, c)));
                auto d = g.add(lhs, g.neg(rhs));
                for (std::size_t i = 0; i < r; ++i) out.push_back(static_cast<std::uint8_t>(d.coords[i] & 1));
            }
    return out;
}

/// Basis of Z_LD(q, g, psi) for elementary g: the residual map is linear, so
/// its matrix is assembled column by column from unit cocycles and its
/// nullspace taken by dense elimination.
inline std::vector<std::vector<GroupElement>> zld_basis_elementary(const MagmaTable& q, const AbelianGroup2& g,
                                                                   const EndoMatrix& psi) {
    const std::size_t n = q.order(), r = g.rank(), unknowns = n * n * r;
    std::vector<std::vector<std::uint8_t>> columns;
    for (std::size_t u = 0; u < unknowns; ++u) {
        std::vector<GroupElement> theta(n * n, g.zero());
        theta[u / r].coords[u % r] = 1;
        columns.push_back(ld_residual_gf2(q, g, psi, theta));
    }
    const std::size_t rows = columns.front().size();
    std::vector<std::vector<std::uint8_t>> mat(rows, std::vector<std::uint8_t>(unknowns));
    for (std::size_t u = 0; u < unknowns; ++u)
        for (std::size_t i = 0; i < rows; ++i) mat[i][u] = columns[u][i];
    std::vector<std::vector<GroupElement>> out;
    for (const auto& v : gf2_nullspace(std::move(mat), unknowns)) {
        std::vector<GroupElement> theta(n * n, g.zero());
        for (std::size_t u = 0; u < unknowns; ++u) theta[u / r].coords[u % r] = v[u];
        out.push_back(std::move(theta));
    }
    return out;
}

/// Extension table built straight from the defining formula.
inline MagmaTable extension_table(const MagmaTable& q, const AbelianGroup2& g, const EndoMatrix& psi,
                                  const std::vector<GroupElement>& theta) {
    const EndoMatrix phi = psi.one_minus();
    const std::size_t m = g.order(), n = q.order();
    return MagmaTable::from_function(n * m, [&](std::size_t x, std::size_t y) {
        const std::size_t a = x / m, b = y / m;
        auto s = g.element(x % m), t = g.element(y % m);
        auto v = g.add(g.add(phi.apply(s), psi.apply(t)), theta[a * n + b]);
        return q.op(a, b) * m + g.index(v);
    });
}

/// Number of theta with (LD) and zero diagonal, by depth-first enumeration
/// with pruning: a triple is checked as soon as its five pairs are assigned.
/// Pairs are assigned greedily in the order that completes the most triples.
inline std::uint64_t count_zld_brute(const MagmaTable& q, const AbelianGroup2& g, const EndoMatrix& psi) {
    const std::size_t n = q.order(), m = g.order(), pairs = n * n;
    const EndoMatrix phi = psi.one_minus();
    std::vector<GroupElement> elems;
    for (std::uint64_t v = 0; v < m; ++v) elems.push_back(g.element(v));
    std::vector<std::array<std::size_t, 3>> triples;
    std::vector<std::array<std::size_t, 5>> touches;
    std::vector<std::vector<std::size_t>> by_pair(pairs);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const std::array<std::size_t, 5> ps{b * n + c, a * n + q.op(b, c), a * n + c, a * n + b,
                                                    q.op(a, b) * n + q.op(a, c)};
                for (auto p : ps) by_pair[p].push_back(triples.size());
                triples.push_back({a, b, c});
                touches.push_back(ps);
            }
    std::vector<std::size_t> order;
    std::vector<bool> placed(pairs, false);
    std::vector<std::size_t> missing(triples.size());
    for (std::size_t t = 0; t < triples.size(); ++t) {
        std::vector<std::size_t> d(touches[t].begin(), touches[t].end());
        std::sort(d.begin(), d.end());
        missing[t] = static_cast<std::size_t>(std::unique(d.begin(), d.end()) - d.begin());
    }
    std::vector<std::vector<std::array<std::size_t, 3>>> due(pairs);
    auto place = [&](std::size_t p) {
        placed[p] = true;
        const std::size_t step = order.size();
        order.push_back(p);
        std::vector<std::size_t> ts = by_pair[p];
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        for (auto t : ts)
            if (--missing[t] == 0) due[step].push_back(triples[t]);
    };
    for (std::size_t a = 0; a < n; ++a) place(a * n + a);
    while (order.size() < pairs) {
        std::size_t best = pairs, best_done = 0, best_near = 0;
        for (std::size_t p = 0; p < pairs; ++p) {
            if (placed[p]) continue;
            std::size_t done = 0, near = 0;
            std::vector<std::size_t> ts = by_pair[p];
            std::sort(ts.begin(), ts.end());
            ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
            for (auto t : ts) {
                done += missing[t] == 1;
                near += missing[t] == 2;
            }
            if (best == pairs || done > best_done || (done == best_done && near > best_near)) {
                best = p;
                best_done = done;
                best_near = near;
            }
        }
        place(best);
    }
    // tables built from group-element arithmetic
    std::vector<std::uint32_t> add(m * m), psi_t(m), phi_t(m);
    for (std::uint64_t x = 0; x < m; ++x) {
        psi_t[x] = static_cast<std::uint32_t>(g.index(psi.apply(elems[x])));
        phi_t[x] = static_cast<std::uint32_t>(g.index(phi.apply(elems[x])));
        for (std::uint64_t y = 0; y < m; ++y) add[x * m + y] = static_cast<std::uint32_t>(g.index(g.add(elems[x], elems[y])));
    }
    std::vector<std::uint32_t> theta(pairs, 0);
    std::uint64_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t step) {
        if (step == pairs) {
            ++count;
            return;
        }
        const std::size_t p = order[step];
        const std::uint64_t lim = (p / n == p % n) ? 1 : m;
        for (std::uint32_t v = 0; v < lim; ++v) {
            theta[p] = v;
            bool ok = true;
            for (const auto& [a, b, c] : due[step]) {
                auto t = [&](std::size_t x, std::size_t y) { return theta[x * n + y]; };
                const auto lhs = add[psi_t[t(b, c)] * m + t(a, q.op(b, c))];
                const auto rhs = add[add[psi_t[t(a, c)] * m + phi_t[t(a, b)]] * m + t(q.op(a, b), q.op(a, c))];
                if (lhs != rhs) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(step + 1);
        }
        theta[p] = 0;
    };
    rec(0);
    return count;
}

inline std::vector<GroupElement> to_elements(const Cocycle& t) {
    std::vector<GroupElement> out;
    for (auto v : t.values()) out.push_back(t.fiber().element(v));
    return out;
}

inline Cocycle from_elements(std::size_t n, const AbelianGroup2& g, const std::vector<GroupElement>& theta) {
    std::vector<latinq::Element> values;
    for (const auto& x : theta) values.push_back(static_cast<latinq::Element>(g.index(x)));
    return Cocycle(n, g, std::move(values));
}

/// Latin quandle x*y = 2x - y on Z_3.
inline MagmaTable order3_quandle() {
    return MagmaTable::from_function(3, [](std::size_t x, std::size_t y) { return (2 * x + 2 * y) % 3; });
}

}  // namespace oracle
