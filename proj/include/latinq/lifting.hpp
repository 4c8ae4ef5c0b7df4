#pragma once

// Kernel over Z/m through an integer nullspace: A v = 0 over Z/m iff
// (A | m I)(v; x) = 0 over Z for some integer x. Independent of the Howell
// path and used to cross-check it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mod_matrix.hpp"

namespace latinq {

namespace lifting_detail {

using BigInt = boost::multiprecision::cpp_int;

// Z-basis of the integer kernel of `a` (rows x cols), by unimodular column
// operations (Euclid on each row in turn).
inline std::vector<std::vector<BigInt>> integer_kernel(const std::vector<std::vector<BigInt>>& a, std::size_t cols) {
    const std::size_t rows = a.size();
    // Columns are stored as (image under a, transform column).
    std::vector<std::vector<BigInt>> image(cols, std::vector<BigInt>(rows));
    std::vector<std::vector<BigInt>> transform(cols, std::vector<BigInt>(cols));
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t r = 0; r < rows; ++r) image[c][r] = a[r][c];
        transform[c][c] = 1;
    }
    std::vector<std::size_t> free_cols(cols);
    for (std::size_t c = 0; c < cols; ++c) free_cols[c] = c;

    auto axpy = [&](std::size_t dst, const BigInt& q, std::size_t src) {
        for (std::size_t r = 0; r < rows; ++r)
            if (!image[src][r].is_zero()) image[dst][r] -= q * image[src][r];
        for (std::size_t k = 0; k < cols; ++k)
            if (!transform[src][k].is_zero()) transform[dst][k] -= q * transform[src][k];
    };

    for (std::size_t r = 0; r < rows; ++r) {
        while (true) {
            // Smallest nonzero |entry| in row r among the free columns.
            std::size_t piv = cols;
            for (auto c : free_cols) {
                if (image[c][r].is_zero()) continue;
                if (piv == cols || abs(image[c][r]) < abs(image[piv][r])) piv = c;
            }
            if (piv == cols) break;
            bool others = false;
            for (auto c : free_cols) {
                if (c == piv || image[c][r].is_zero()) continue;
                BigInt q = image[c][r] / image[piv][r];
                if (!q.is_zero()) axpy(c, q, piv);
                others = others || !image[c][r].is_zero();
            }
            if (!others) {
                std::erase(free_cols, piv);
                break;
            }
        }
    }
    std::vector<std::vector<BigInt>> out;
    for (auto c : free_cols) out.push_back(transform[c]);
    return out;
}

}  // namespace lifting_detail

/// Generators of the kernel of m over Z/2^e computed through the integer
/// lift (A | 2^e I). Each generator is the projection of a Z-basis vector of
/// the integer kernel, reduced mod 2^e.
inline std::vector<ModVector> kernel_by_lifting(const ModMatrix& m) {
    using lifting_detail::BigInt;
    const auto dd = m.deduplicated();
    const std::size_t s = dd.cols(), r = dd.rows();
    const std::int64_t mod = dd.modulus();
    std::vector<std::vector<BigInt>> lifted(r, std::vector<BigInt>(s + r));
    for (std::size_t i = 0; i < r; ++i) {
        for (auto [c, v] : dd.row(i)) lifted[i][c] = v;
        lifted[i][s + i] = mod;
    }
    std::vector<ModVector> out;
    for (const auto& k : lifting_detail::integer_kernel(lifted, s + r)) {
        ModVector v(s);
        bool nonzero = false;
        for (std::size_t j = 0; j < s; ++j) {
            BigInt x = k[j] % mod;
            if (x < 0) x += mod;
            v[j] = static_cast<std::int64_t>(x);
            nonzero = nonzero || v[j] != 0;
        }
        if (nonzero) out.push_back(std::move(v));
    }
    return out;
}

/// Integer lattice L = span_Z(gens) + m Z^s kept as an exact upper
/// triangular (Hermite) basis. Used for membership and index computations
/// independent of the Howell code.
class ModLattice {
  public:
    using BigInt = lifting_detail::BigInt;

    ModLattice(const std::vector<ModVector>& gens, std::size_t width, std::int64_t modulus)
        : width_(width), m_(modulus), basis_(width, std::vector<BigInt>(width)) {
        for (std::size_t i = 0; i < width; ++i) basis_[i][i] = m_;
        for (const auto& g : gens) {
            if (g.size() != width) throw std::invalid_argument("ModLattice: width mismatch");
            insert(std::vector<BigInt>(g.begin(), g.end()));
        }
    }

    bool contains(const ModVector& x) const {
        std::vector<BigInt> v(x.begin(), x.end());
        for (std::size_t i = 0; i < width_; ++i) {
            if (v[i].is_zero()) continue;
            const BigInt r = v[i] % basis_[i][i];
            if (!r.is_zero()) return false;
            const BigInt q = v[i] / basis_[i][i];
            for (std::size_t j = i; j < width_; ++j) v[j] -= q * basis_[i][j];
        }
        return true;
    }

    /// log2 |L / m Z^s| for m a power of two.
    int span_log2() const {
        int bits = 0;
        for (std::size_t i = 0; i < width_; ++i) {
            BigInt d = BigInt(m_) / basis_[i][i];
            while (d > 1) {
                d >>= 1;
                ++bits;
            }
        }
        return bits;
    }

  private:
    void insert(std::vector<BigInt> v) {
        for (std::size_t i = 0; i < width_; ++i) {
            if (v[i].is_zero()) continue;
            auto& b = basis_[i];
            // Unimodular step on (b, v) leaving gcd on the diagonal and 0 in v.
            BigInt x, y;
            const BigInt g = ext_gcd(b[i], v[i], x, y);
            const BigInt bi = b[i] / g, vi = v[i] / g;
            for (std::size_t j = i; j < width_; ++j) {
                BigInt nb = x * b[j] + y * v[j];
                BigInt nv = bi * v[j] - vi * b[j];
                b[j] = std::move(nb);
                v[j] = std::move(nv);
            }
            if (b[i] < 0)
                for (std::size_t j = i; j < width_; ++j) b[j] = -b[j];
        }
        normalize();
    }

    // Reduce entries above each diagonal into [0, diagonal).
    void normalize() {
        for (std::size_t i = 0; i < width_; ++i) {
            for (std::size_t j = i + 1; j < width_; ++j) {
                const BigInt& d = basis_[j][j];
                BigInt q = basis_[i][j] / d;
                if (basis_[i][j] - q * d < 0) q -= 1;
                if (q.is_zero()) continue;
                for (std::size_t k = j; k < width_; ++k) basis_[i][k] -= q * basis_[j][k];
            }
        }
    }

    static BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
        BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
        while (!r.is_zero()) {
            BigInt q = old_r / r;
            BigInt tmp = old_r - q * r;
            old_r = std::move(r);
            r = std::move(tmp);
            tmp = old_s - q * s;
            old_s = std::move(s);
            s = std::move(tmp);
            tmp = old_t - q * t;
            old_t = std::move(t);
            t = std::move(tmp);
        }
        if (old_r < 0) {
            old_r = -old_r;
            old_s = -old_s;
            old_t = -old_t;
        }
        x = old_s;
        y = old_t;
        return old_r;
    }

    std::size_t width_;
    std::int64_t m_;
    std::vector<std::vector<BigInt>> basis_;
};

/// True iff the two generator sets span the same submodule of (Z/2^e)^width,
/// with spans built independently: Howell for `a`, the integer lattice for `b`.
inline bool same_span(const std::vector<ModVector>& a, const std::vector<ModVector>& b, std::size_t width, int e) {
    const auto ha = howell_form(a, e);
    const ModLattice lb(b, width, std::int64_t{1} << e);
    if (howell_span_log2(ha, e) != lb.span_log2()) return false;
    for (const auto& v : b)
        if (!howell_contains(ha, v, e)) return false;
    for (const auto& v : a)
        if (!lb.contains(v)) return false;
    return true;
}

}  // namespace latinq
