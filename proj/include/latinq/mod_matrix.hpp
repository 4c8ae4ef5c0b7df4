#pragma once

// Matrices over Z/2^e and their kernels.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gf2.hpp"

namespace latinq {

using ModVector = std::vector<std::int64_t>;

/// Sparse row-major matrix with entries in Z/2^e. Rows keep their nonzero
/// entries sorted by column.
class ModMatrix {
  public:
    using Entry = std::pair<std::uint32_t, std::int64_t>;

    ModMatrix(int exponent, std::size_t cols) : exponent_(exponent), cols_(cols) {
        if (exponent < 1 || exponent > 30) throw std::invalid_argument("ModMatrix: exponent out of range");
    }

    static ModMatrix from_dense(int exponent, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& data) {
        if (data.size() != rows * cols) throw std::invalid_argument("ModMatrix: wrong number of entries");
        ModMatrix m(exponent, cols);
        for (std::size_t r = 0; r < rows; ++r)
            m.add_row(ModVector(data.begin() + static_cast<std::ptrdiff_t>(r * cols),
                                data.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols)));
        return m;
    }

    int exponent() const { return exponent_; }
    std::int64_t modulus() const { return std::int64_t{1} << exponent_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    std::int64_t reduce(std::int64_t v) const {
        v %= modulus();
        return v < 0 ? v + modulus() : v;
    }

    void add_row(const ModVector& dense) {
        if (dense.size() != cols_) throw std::invalid_argument("ModMatrix: row width mismatch");
        std::vector<Entry> row;
        for (std::size_t c = 0; c < cols_; ++c)
            if (auto v = reduce(dense[c])) row.emplace_back(static_cast<std::uint32_t>(c), v);
        rows_.push_back(std::move(row));
    }

    /// Adds a row from (column, coefficient) terms; repeated columns accumulate.
    void add_sparse_row(const std::vector<Entry>& terms) {
        std::map<std::uint32_t, std::int64_t> acc;
        for (auto [c, v] : terms) {
            if (c >= cols_) throw std::out_of_range("ModMatrix: column out of range");
            acc[c] += v;
        }
        std::vector<Entry> row;
        for (auto [c, v] : acc)
            if (auto r = reduce(v)) row.emplace_back(c, r);
        rows_.push_back(std::move(row));
    }

    const std::vector<Entry>& row(std::size_t r) const { return rows_.at(r); }

    std::int64_t at(std::size_t r, std::size_t c) const {
        const auto& row = rows_.at(r);
        auto it = std::lower_bound(row.begin(), row.end(), Entry{static_cast<std::uint32_t>(c), 0},
                                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
        return (it != row.end() && it->first == c) ? it->second : 0;
    }

    ModVector dense_row(std::size_t r) const {
        ModVector out(cols_, 0);
        for (auto [c, v] : rows_.at(r)) out[c] = v;
        return out;
    }

    ModVector multiply(const ModVector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("ModMatrix: vector width mismatch");
        ModVector out(rows_.size(), 0);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::int64_t acc = 0;
            for (auto [c, a] : rows_[r]) acc = (acc + a * reduce(v[c])) % modulus();
            out[r] = acc;
        }
        return out;
    }

    bool annihilates(const ModVector& v) const {
        auto p = multiply(v);
        return std::all_of(p.begin(), p.end(), [](std::int64_t x) { return x == 0; });
    }

    /// Copy without zero rows and with duplicate rows removed (row order sorted).
    ModMatrix deduplicated() const {
        std::vector<std::vector<Entry>> rs;
        for (const auto& r : rows_)
            if (!r.empty()) rs.push_back(r);
        std::sort(rs.begin(), rs.end());
        rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
        ModMatrix out(exponent_, cols_);
        out.rows_ = std::move(rs);
        return out;
    }

  private:
    int exponent_;
    std::size_t cols_;
    std::vector<std::vector<Entry>> rows_;
};

namespace detail {

inline std::int64_t mod_pow2(std::int64_t v, int e) {
    const std::int64_t m = std::int64_t{1} << e;
    v %= m;
    return v < 0 ? v + m : v;
}

// 2-adic valuation, capped at e for zero.
inline int valuation(std::int64_t v, int e) {
    if (v == 0) return e;
    int k = 0;
    while ((v & 1) == 0) {
        v >>= 1;
        ++k;
    }
    return std::min(k, e);
}

// Inverse of an odd number modulo 2^e (Newton iteration).
inline std::int64_t odd_inverse(std::int64_t u, int e) {
    std::int64_t x = 1;
    for (int i = 0; i < 6; ++i) x = mod_pow2(x * (2 - mod_pow2(u * x, e)), e);
    return x;
}

}  // namespace detail

/// Howell form over Z/2^e of the row span of `rows` (dense, equal widths).
/// Rows of the result have strictly increasing leading columns, leading
/// entries are powers of two, entries above a leading entry are reduced
/// below it, and the span of rows with leading column >= c equals the set of
/// span elements vanishing on columns < c.
inline std::vector<ModVector> howell_form(std::vector<ModVector> rows, int e) {
    const std::int64_t m = std::int64_t{1} << e;
    if (rows.empty()) return {};
    const std::size_t width = rows.front().size();
    for (auto& r : rows)
        for (auto& x : r) x = detail::mod_pow2(x, e);

    std::vector<ModVector> done;  // finished pivot rows, leading column ascending
    std::vector<ModVector> pool = std::move(rows);
    for (std::size_t c = 0; c < width; ++c) {
        // Combine every pool row with a nonzero entry in column c into one
        // pivot row using 2x2 unimodular steps. Over Z/2^e the entry of
        // least valuation divides the others.
        std::size_t best = pool.size();
        int best_val = e;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (pool[i][c] == 0) continue;
            int v = detail::valuation(pool[i][c], e);
            if (best == pool.size() || v < best_val) {
                best = i;
                best_val = v;
            }
        }
        if (best == pool.size()) continue;
        ModVector piv = std::move(pool[best]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        // Normalise leading entry to 2^val.
        const std::int64_t unit = piv[c] >> best_val;
        const std::int64_t uinv = detail::odd_inverse(unit, e);
        for (auto& x : piv) x = detail::mod_pow2(x * uinv, e);
        const std::int64_t lead = piv[c];
        for (auto& r : pool) {
            if (r[c] == 0) continue;
            const std::int64_t q = r[c] / lead;  // exact: lead has minimal valuation
            for (std::size_t j = c; j < width; ++j) r[j] = detail::mod_pow2(r[j] - q * piv[j], e);
        }
        // Annihilator multiple keeps the Howell property for later columns.
        if (lead != 1) {
            ModVector ann(width);
            const std::int64_t s = m / lead;
            bool nonzero = false;
            for (std::size_t j = 0; j < width; ++j) {
                ann[j] = detail::mod_pow2(piv[j] * s, e);
                nonzero = nonzero || ann[j] != 0;
            }
            if (nonzero) pool.push_back(std::move(ann));
        }
        std::erase_if(pool, [](const ModVector& r) {
            return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
        });
        // Reduce earlier pivot rows in column c.
        for (auto& r : done) {
            const std::int64_t q = r[c] / lead;
            if (q == 0) continue;
            for (std::size_t j = c; j < width; ++j) r[j] = detail::mod_pow2(r[j] - q * piv[j], e);
        }
        done.push_back(std::move(piv));
    }
    return done;
}

inline std::size_t leading_column(const ModVector& r) {
    for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j] != 0) return j;
    return r.size();
}

/// Reduces v against a Howell basis; v is in the span iff the result is 0.
inline ModVector howell_reduce(ModVector v, const std::vector<ModVector>& howell, int e) {
    for (auto& x : v) x = detail::mod_pow2(x, e);
    for (const auto& h : howell) {
        const std::size_t c = leading_column(h);
        if (v[c] == 0) continue;
        if (v[c] % h[c] != 0) return v;
        const std::int64_t q = v[c] / h[c];
        for (std::size_t j = c; j < v.size(); ++j) v[j] = detail::mod_pow2(v[j] - q * h[j], e);
    }
    return v;
}

inline bool howell_contains(const std::vector<ModVector>& howell, const ModVector& v, int e) {
    auto r = howell_reduce(v, howell, e);
    return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

/// log2 of the number of elements in the span of a Howell basis.
inline int howell_span_log2(const std::vector<ModVector>& howell, int e) {
    int bits = 0;
    for (const auto& h : howell) bits += e - detail::valuation(h[leading_column(h)], e);
    return bits;
}

/// log2 of |span(gens)| over Z/2^e.
inline int span_log2(const std::vector<ModVector>& gens, int e) { return howell_span_log2(howell_form(gens, e), e); }

namespace detail {

inline std::vector<ModVector> kernel_gf2(const ModMatrix& m) {
    gf2::EchelonBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        gf2::BitRow row(m.cols());
        for (auto [c, v] : m.row(r))
            if (v & 1) row.set(c);
        if (!row.none()) basis.insert(std::move(row));
    }
    std::vector<ModVector> out;
    for (const auto& v : basis.nullspace()) {
        ModVector d(m.cols(), 0);
        for (std::size_t c = 0; c < m.cols(); ++c) d[c] = v.get(c) ? 1 : 0;
        out.push_back(std::move(d));
    }
    return out;
}

inline std::vector<ModVector> kernel_howell(const ModMatrix& m) {
    const int e = m.exponent();
    const std::size_t s = m.cols();
    // Row-reduce A first; its Howell rows have the same kernel.
    std::vector<ModVector> dense;
    auto dd = m.deduplicated();
    for (std::size_t r = 0; r < dd.rows(); ++r) dense.push_back(dd.dense_row(r));
    auto h = howell_form(std::move(dense), e);
    // Howell form of [H^T | I]: rows vanishing on the H^T block carry the kernel.
    const std::size_t r = h.size();
    std::vector<ModVector> aug(s, ModVector(r + s, 0));
    for (std::size_t j = 0; j < s; ++j) {
        for (std::size_t i = 0; i < r; ++i) aug[j][i] = h[i][j];
        aug[j][r + j] = 1;
    }
    auto ah = howell_form(std::move(aug), e);
    std::vector<ModVector> out;
    for (const auto& row : ah) {
        if (leading_column(row) < r) continue;
        out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(r), row.end());
    }
    return out;
}

}  // namespace detail

/// Generating set of {v : m v = 0 mod 2^e}. No returned generator lies in
/// the span of the others.
inline std::vector<ModVector> kernel_basis(const ModMatrix& m) {
    if (m.exponent() == 1) return detail::kernel_gf2(m);
    auto gens = detail::kernel_howell(m);
    // Drop any generator already spanned by the rest.
    const int e = m.exponent();
    for (std::size_t i = gens.size(); i-- > 0;) {
        std::vector<ModVector> others;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        if (howell_contains(howell_form(others, e), gens[i], e)) gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return gens;
}

}  // namespace latinq
