#pragma once

// Bit-packed linear algebra over the two-element field.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace latinq::gf2 {

/// Square matrix of size n <= 16; row i is a bitmask, bit j holds column j.
struct SquareMatrix {
    int n = 0;
    std::array<std::uint32_t, 16> rows{};

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
};

inline SquareMatrix identity(int n) {
    SquareMatrix m{n, {}};
    for (int i = 0; i < n; ++i) m.rows[i] = 1u << i;
    return m;
}

inline SquareMatrix add(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix c{a.n, {}};
    for (int i = 0; i < a.n; ++i) c.rows[i] = a.rows[i] ^ b.rows[i];
    return c;
}

// (a*b) row i = XOR of the rows of b selected by row i of a.
inline SquareMatrix multiply(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix c{a.n, {}};
    for (int i = 0; i < a.n; ++i) {
        std::uint32_t acc = 0;
        for (std::uint32_t bits = a.rows[i]; bits != 0; bits &= bits - 1)
            acc ^= b.rows[std::countr_zero(bits)];
        c.rows[i] = acc;
    }
    return c;
}

inline int rank(SquareMatrix m) {
    int r = 0;
    for (int col = 0; col < m.n; ++col) {
        const std::uint32_t bit = 1u << col;
        int pivot = -1;
        for (int i = r; i < m.n; ++i)
            if (m.rows[i] & bit) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(m.rows[r], m.rows[pivot]);
        for (int i = 0; i < m.n; ++i)
            if (i != r && (m.rows[i] & bit)) m.rows[i] ^= m.rows[r];
        ++r;
    }
    return r;
}

inline bool invertible(const SquareMatrix& m) { return rank(m) == m.n; }

inline std::optional<SquareMatrix> inverse(SquareMatrix m) {
    SquareMatrix inv = identity(m.n);
    for (int col = 0; col < m.n; ++col) {
        const std::uint32_t bit = 1u << col;
        int pivot = -1;
        for (int i = col; i < m.n; ++i)
            if (m.rows[i] & bit) { pivot = i; break; }
        if (pivot < 0) return std::nullopt;
        std::swap(m.rows[col], m.rows[pivot]);
        std::swap(inv.rows[col], inv.rows[pivot]);
        for (int i = 0; i < m.n; ++i) {
            if (i != col && (m.rows[i] & bit)) {
                m.rows[i] ^= m.rows[col];
                inv.rows[i] ^= inv.rows[col];
            }
        }
    }
    return inv;
}

/// Calls f(m) for every invertible n x n matrix, rows chosen in increasing
/// mask order.
template <class F>
void for_each_invertible(int n, F&& f) {
    if (n < 0 || n > 16) throw std::invalid_argument("gf2: dimension out of range");
    SquareMatrix m{n, {}};
    // span[d] lists the span of the first d rows.
    std::vector<std::vector<std::uint32_t>> span(n + 1);
    span[0] = {0};
    std::vector<std::uint8_t> member(std::size_t{1} << n, 0);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            f(static_cast<const SquareMatrix&>(m));
            return;
        }
        for (auto s : span[depth]) member[s] = 1;
        std::vector<std::uint32_t> excluded = span[depth];
        const std::uint32_t limit = 1u << n;
        for (std::uint32_t r = 1; r < limit; ++r) {
            if (member[r]) continue;
            m.rows[depth] = r;
            auto& next = span[depth + 1];
            next.clear();
            for (auto s : span[depth]) {
                next.push_back(s);
                next.push_back(s ^ r);
            }
            for (auto s : excluded) member[s] = 0;
            self(self, depth + 1);
            for (auto s : excluded) member[s] = 1;
        }
        for (auto s : excluded) member[s] = 0;
    };
    rec(rec, 0);
}

/// Dense bit row of arbitrary width.
class BitRow {
  public:
    BitRow() = default;
    explicit BitRow(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    std::size_t width() const { return width_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool v = true) {
        if (v) words_[i / 64] |= std::uint64_t{1} << (i % 64);
        else words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    BitRow& operator^=(const BitRow& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    /// Lowest set bit, or width() if none.
    std::size_t lowest() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return width_;
    }
    /// Lowest set bit at index >= from, or width().
    std::size_t next(std::size_t from) const {
        if (from >= width_) return width_;
        std::size_t w = from / 64;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from % 64));
        while (true) {
            if (word) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
            if (++w == words_.size()) return width_;
            word = words_[w];
        }
    }
    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const BitRow&, const BitRow&) = default;

  private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Incrementally built echelon basis of a row space. Each stored row has a
/// distinct lowest set bit (its pivot).
class EchelonBasis {
  public:
    explicit EchelonBasis(std::size_t width) : width_(width), pivot_row_(width, npos) {}

    /// Reduces r against the basis; returns true if it was independent and
    /// got inserted.
    bool insert(BitRow r) {
        for (std::size_t p = r.lowest(); p < width_; p = r.next(p + 1)) {
            if (pivot_row_[p] == npos) {
                pivot_row_[p] = rows_.size();
                rows_.push_back(std::move(r));
                return true;
            }
            r ^= rows_[pivot_row_[p]];
        }
        return false;
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    /// Basis of {v : <row, v> = 0 for every row}, one vector per free column.
    std::vector<BitRow> nullspace() const {
        // Back-substitute to reduced echelon form.
        std::vector<std::size_t> pivots;
        for (std::size_t c = 0; c < width_; ++c)
            if (pivot_row_[c] != npos) pivots.push_back(c);
        std::vector<BitRow> red(pivots.size());
        for (std::size_t k = pivots.size(); k-- > 0;) {
            BitRow r = rows_[pivot_row_[pivots[k]]];
            for (std::size_t q = k + 1; q < pivots.size(); ++q)
                if (r.get(pivots[q])) r ^= red[q];
            red[k] = std::move(r);
        }
        std::vector<BitRow> out;
        for (std::size_t free = 0; free < width_; ++free) {
            if (pivot_row_[free] != npos) continue;
            BitRow v(width_);
            v.set(free);
            for (std::size_t k = 0; k < pivots.size(); ++k)
                if (red[k].get(free)) v.set(pivots[k]);
            out.push_back(std::move(v));
        }
        return out;
    }

  private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t width_;
    std::vector<std::size_t> pivot_row_;
    std::vector<BitRow> rows_;
};

}  // namespace latinq::gf2
