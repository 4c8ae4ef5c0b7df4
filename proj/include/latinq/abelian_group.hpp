#pragma once

// Finite abelian 2-groups Z_{2^k1} x ... x Z_{2^kn} and their endomorphisms.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf2.hpp"

namespace latinq {

struct GroupElement {
    std::vector<std::int64_t> coords;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Product of cyclic 2-groups given by a non-increasing exponent signature.
/// Elements are indexed lexicographically with the first coordinate most
/// significant.
class AbelianGroup2 {
  public:
    AbelianGroup2() = default;

    explicit AbelianGroup2(std::vector<int> signature) : signature_(std::move(signature)) {
        for (std::size_t i = 0; i < signature_.size(); ++i) {
            if (signature_[i] < 1) throw std::invalid_argument("AbelianGroup2: exponents must be >= 1");
            if (i > 0 && signature_[i] > signature_[i - 1])
                throw std::invalid_argument("AbelianGroup2: signature must be non-increasing");
        }
        int bits = std::accumulate(signature_.begin(), signature_.end(), 0);
        if (bits > 62) throw std::invalid_argument("AbelianGroup2: group too large");
    }

    static AbelianGroup2 elementary(int rank) { return homocyclic(1, rank); }
    static AbelianGroup2 homocyclic(int exponent, int rank) {
        return AbelianGroup2(std::vector<int>(static_cast<std::size_t>(rank), exponent));
    }

    const std::vector<int>& signature() const { return signature_; }
    std::size_t rank() const { return signature_.size(); }
    int log2_order() const { return std::accumulate(signature_.begin(), signature_.end(), 0); }
    std::uint64_t order() const { return std::uint64_t{1} << log2_order(); }
    std::int64_t modulus(std::size_t i) const { return std::int64_t{1} << signature_[i]; }
    int exponent() const { return signature_.empty() ? 0 : signature_.front(); }
    bool is_homocyclic() const {
        return std::all_of(signature_.begin(), signature_.end(),
                           [&](int k) { return k == signature_.front(); });
    }
    bool is_elementary() const {
        return std::all_of(signature_.begin(), signature_.end(), [](int k) { return k == 1; });
    }

    GroupElement zero() const { return GroupElement{std::vector<std::int64_t>(rank(), 0)}; }

    bool contains(const GroupElement& x) const {
        if (x.coords.size() != rank()) return false;
        for (std::size_t i = 0; i < rank(); ++i)
            if (x.coords[i] < 0 || x.coords[i] >= modulus(i)) return false;
        return true;
    }

    GroupElement reduce(GroupElement x) const {
        check_dim(x);
        for (std::size_t i = 0; i < rank(); ++i) x.coords[i] = mod(x.coords[i], modulus(i));
        return x;
    }

    GroupElement add(const GroupElement& x, const GroupElement& y) const {
        check_dim(x);
        check_dim(y);
        GroupElement r = x;
        for (std::size_t i = 0; i < rank(); ++i) r.coords[i] = mod(x.coords[i] + y.coords[i], modulus(i));
        return r;
    }

    GroupElement neg(const GroupElement& x) const {
        check_dim(x);
        GroupElement r = x;
        for (std::size_t i = 0; i < rank(); ++i) r.coords[i] = mod(-x.coords[i], modulus(i));
        return r;
    }

    std::uint64_t index(const GroupElement& x) const {
        check_dim(x);
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            idx = idx * static_cast<std::uint64_t>(modulus(i)) +
                  static_cast<std::uint64_t>(mod(x.coords[i], modulus(i)));
        return idx;
    }

    GroupElement element(std::uint64_t idx) const {
        if (idx >= order()) throw std::out_of_range("AbelianGroup2: element index out of range");
        GroupElement x{std::vector<std::int64_t>(rank(), 0)};
        for (std::size_t i = rank(); i-- > 0;) {
            auto m = static_cast<std::uint64_t>(modulus(i));
            x.coords[i] = static_cast<std::int64_t>(idx % m);
            idx /= m;
        }
        return x;
    }

    /// Canonical generator e_i (1 in coordinate i).
    GroupElement basis(std::size_t i) const {
        GroupElement x = zero();
        x.coords.at(i) = 1;
        return x;
    }

    /// Human-readable name such as "Z4xZ2^2" ("Z1" for the trivial group).
    std::string name() const {
        if (signature_.empty()) return "Z1";
        std::ostringstream os;
        std::size_t i = 0;
        bool first = true;
        while (i < signature_.size()) {
            std::size_t j = i;
            while (j < signature_.size() && signature_[j] == signature_[i]) ++j;
            if (!first) os << 'x';
            os << 'Z' << (std::int64_t{1} << signature_[i]);
            if (j - i > 1) os << '^' << (j - i);
            first = false;
            i = j;
        }
        return os.str();
    }

    static std::int64_t mod(std::int64_t v, std::int64_t m) {
        v %= m;
        return v < 0 ? v + m : v;
    }

    friend bool operator==(const AbelianGroup2&, const AbelianGroup2&) = default;

  private:
    void check_dim(const GroupElement& x) const {
        if (x.coords.size() != rank()) throw std::invalid_argument("AbelianGroup2: dimension mismatch");
    }

    std::vector<int> signature_;
};

inline GroupElement group_add(const AbelianGroup2& g, const GroupElement& x, const GroupElement& y) {
    return g.add(x, y);
}

/// All exponent signatures (partitions of log2_order) in a fixed order:
/// elementary first, cyclic last.
inline std::vector<AbelianGroup2> groups_of_order_log2(int log2_order) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            parts.push_back(cur);
            return;
        }
        for (int p = 1; p <= std::min(remaining, max_part); ++p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, log2_order, log2_order);
    // rec emits non-increasing sequences ordered by first part ascending.
    std::vector<AbelianGroup2> out;
    for (auto& p : parts) out.emplace_back(p);
    return out;
}

/// Endomorphism of an AbelianGroup2 as an integer matrix acting on columns:
/// y_i = sum_j m(i,j) x_j mod 2^{k_i}. Entries are stored reduced mod the
/// row modulus; when k_i > k_j the entry must be a multiple of 2^{k_i-k_j}.
class EndoMatrix {
  public:
    EndoMatrix() = default;

    EndoMatrix(AbelianGroup2 group, std::vector<std::int64_t> entries)
        : group_(std::move(group)), entries_(std::move(entries)) {
        const std::size_t n = group_.rank();
        if (entries_.size() != n * n) throw std::invalid_argument("EndoMatrix: wrong number of entries");
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                auto& e = entries_[i * n + j];
                e = AbelianGroup2::mod(e, group_.modulus(i));
                const int ki = group_.signature()[i], kj = group_.signature()[j];
                if (ki > kj && e % (std::int64_t{1} << (ki - kj)) != 0)
                    throw std::invalid_argument("EndoMatrix: entry does not define a homomorphism");
            }
        }
    }

    static EndoMatrix identity(const AbelianGroup2& g) {
        const std::size_t n = g.rank();
        std::vector<std::int64_t> e(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
        return EndoMatrix(g, std::move(e));
    }
    static EndoMatrix zero(const AbelianGroup2& g) {
        return EndoMatrix(g, std::vector<std::int64_t>(g.rank() * g.rank(), 0));
    }

    const AbelianGroup2& group() const { return group_; }
    const std::vector<std::int64_t>& entries() const { return entries_; }
    std::int64_t at(std::size_t i, std::size_t j) const { return entries_.at(i * group_.rank() + j); }

    GroupElement apply(const GroupElement& x) const {
        const std::size_t n = group_.rank();
        if (x.coords.size() != n) throw std::invalid_argument("EndoMatrix: dimension mismatch");
        GroupElement y{std::vector<std::int64_t>(n, 0)};
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t acc = 0;
            const std::int64_t m = group_.modulus(i);
            for (std::size_t j = 0; j < n; ++j) acc = (acc + entries_[i * n + j] * x.coords[j]) % m;
            y.coords[i] = AbelianGroup2::mod(acc, m);
        }
        return y;
    }

    /// Table of apply() on element indices.
    std::vector<std::uint32_t> index_table() const {
        std::vector<std::uint32_t> t(group_.order());
        for (std::uint64_t v = 0; v < group_.order(); ++v)
            t[v] = static_cast<std::uint32_t>(group_.index(apply(group_.element(v))));
        return t;
    }

    /// this o other
    EndoMatrix compose(const EndoMatrix& other) const {
        check_same(other);
        const std::size_t n = group_.rank();
        std::vector<std::int64_t> e(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::int64_t acc = 0;
                for (std::size_t l = 0; l < n; ++l) acc += entries_[i * n + l] * other.entries_[l * n + j];
                e[i * n + j] = acc;
            }
        return EndoMatrix(group_, std::move(e));
    }

    EndoMatrix operator+(const EndoMatrix& o) const { return combine(o, 1); }
    EndoMatrix operator-(const EndoMatrix& o) const { return combine(o, -1); }

    /// 1 - this
    EndoMatrix one_minus() const { return identity(group_) - *this; }

    /// Entries packed most-significant-first with k_i bits per row-i entry,
    /// so integer order equals lexicographic order of entries(). Requires
    /// rank * log2_order <= 64.
    std::uint64_t packed_key() const {
        const std::size_t n = group_.rank();
        if (n * static_cast<std::size_t>(group_.log2_order()) > 64)
            throw std::length_error("EndoMatrix: too large to pack");
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                key = (key << group_.signature()[i]) | static_cast<std::uint64_t>(entries_[i * n + j]);
        return key;
    }

    static EndoMatrix from_packed_key(const AbelianGroup2& g, std::uint64_t key) {
        const std::size_t n = g.rank();
        std::vector<std::int64_t> e(n * n, 0);
        for (std::size_t idx = n * n; idx-- > 0;) {
            const int k = g.signature()[idx / n];
            e[idx] = static_cast<std::int64_t>(key & ((std::uint64_t{1} << k) - 1));
            key >>= k;
        }
        return EndoMatrix(g, std::move(e));
    }

    gf2::SquareMatrix to_gf2() const {
        if (!group_.is_elementary()) throw std::invalid_argument("EndoMatrix: not over an elementary group");
        gf2::SquareMatrix m{static_cast<int>(group_.rank()), {}};
        for (std::size_t i = 0; i < group_.rank(); ++i)
            for (std::size_t j = 0; j < group_.rank(); ++j)
                if (at(i, j)) m.rows[i] |= 1u << j;
        return m;
    }

    static EndoMatrix from_gf2(const AbelianGroup2& g, const gf2::SquareMatrix& m) {
        const std::size_t n = g.rank();
        std::vector<std::int64_t> e(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) e[i * n + j] = (m.rows[i] >> j) & 1u;
        return EndoMatrix(g, std::move(e));
    }

    /// "[[1,1],[1,0]]"
    std::string to_string() const {
        std::ostringstream os;
        const std::size_t n = group_.rank();
        os << '[';
        for (std::size_t i = 0; i < n; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < n; ++j) os << (j ? "," : "") << at(i, j);
            os << ']';
        }
        os << ']';
        return os.str();
    }

    friend bool operator==(const EndoMatrix& a, const EndoMatrix& b) {
        return a.group_ == b.group_ && a.entries_ == b.entries_;
    }
    friend bool operator<(const EndoMatrix& a, const EndoMatrix& b) { return a.entries_ < b.entries_; }

  private:
    void check_same(const EndoMatrix& o) const {
        if (!(group_ == o.group_)) throw std::invalid_argument("EndoMatrix: group mismatch");
    }
    EndoMatrix combine(const EndoMatrix& o, std::int64_t sign) const {
        check_same(o);
        std::vector<std::int64_t> e(entries_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = entries_[i] + sign * o.entries_[i];
        return EndoMatrix(group_, std::move(e));
    }

    AbelianGroup2 group_;
    std::vector<std::int64_t> entries_;
};

inline GroupElement endo_apply(const EndoMatrix& m, const GroupElement& x) { return m.apply(x); }

namespace detail {

// Elements of order dividing 2, minus zero: coordinates in {0, 2^{k_i-1}}.
inline std::vector<GroupElement> socle_nonzero(const AbelianGroup2& g) {
    std::vector<GroupElement> out;
    const std::size_t n = g.rank();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        GroupElement x = g.zero();
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) x.coords[i] = g.modulus(i) / 2;
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace detail

/// True iff the endomorphism permutes the group. Homocyclic groups use the
/// parity of the determinant; mixed signatures use injectivity on the
/// elements of order 2 (a nontrivial kernel always contains one).
inline bool is_bijective_endo(const EndoMatrix& m) {
    const auto& g = m.group();
    if (g.rank() == 0) return true;
    if (g.is_homocyclic()) {
        gf2::SquareMatrix r{static_cast<int>(g.rank()), {}};
        for (std::size_t i = 0; i < g.rank(); ++i)
            for (std::size_t j = 0; j < g.rank(); ++j)
                if (m.at(i, j) & 1) r.rows[i] |= 1u << j;
        return gf2::invertible(r);
    }
    const GroupElement zero = g.zero();
    for (const auto& x : detail::socle_nonzero(g))
        if (m.apply(x) == zero) return false;
    return true;
}

/// Exhaustive image-size check; reference implementation for small groups.
inline bool is_bijective_by_image(const EndoMatrix& m) {
    const auto& g = m.group();
    if (g.order() > (std::uint64_t{1} << 20)) throw std::length_error("is_bijective_by_image: group too large");
    std::vector<std::uint8_t> hit(g.order(), 0);
    for (std::uint64_t v = 0; v < g.order(); ++v) {
        auto img = g.index(m.apply(g.element(v)));
        if (hit[img]) return false;
        hit[img] = 1;
    }
    return true;
}

/// Automorphism inverse, computed from the action on elements.
inline EndoMatrix inverse(const EndoMatrix& m) {
    const auto& g = m.group();
    if (g.is_elementary()) {
        auto inv = gf2::inverse(m.to_gf2());
        if (!inv) throw std::invalid_argument("inverse: not an automorphism");
        return EndoMatrix::from_gf2(g, *inv);
    }
    if (g.order() > (std::uint64_t{1} << 20)) throw std::length_error("inverse: group too large");
    auto table = m.index_table();
    std::vector<std::int64_t> pre(g.order(), -1);
    for (std::uint64_t v = 0; v < g.order(); ++v) {
        if (pre[table[v]] >= 0) throw std::invalid_argument("inverse: not an automorphism");
        pre[table[v]] = static_cast<std::int64_t>(v);
    }
    const std::size_t n = g.rank();
    std::vector<std::int64_t> e(n * n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        auto col = g.element(static_cast<std::uint64_t>(pre[g.index(g.basis(j))]));
        for (std::size_t i = 0; i < n; ++i) e[i * n + j] = col.coords[i];
    }
    return EndoMatrix(g, std::move(e));
}

/// log2 of the number of endomorphisms: sum over entries of min(k_i, k_j).
inline int log2_endomorphism_count(const AbelianGroup2& g) {
    int bits = 0;
    for (int ki : g.signature())
        for (int kj : g.signature()) bits += std::min(ki, kj);
    return bits;
}

/// Calls f(EndoMatrix) for every endomorphism, in increasing packed-key order.
template <class F>
void for_each_endomorphism(const AbelianGroup2& g, F&& f) {
    if (log2_endomorphism_count(g) > 28) throw std::length_error("for_each_endomorphism: too many endomorphisms");
    const std::size_t n = g.rank();
    std::vector<std::int64_t> steps(n * n), limits(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int ki = g.signature()[i], kj = g.signature()[j];
            steps[i * n + j] = ki > kj ? (std::int64_t{1} << (ki - kj)) : 1;
            limits[i * n + j] = std::int64_t{1} << ki;
        }
    std::vector<std::int64_t> e(n * n, 0);
    while (true) {
        f(EndoMatrix(g, e));
        std::size_t pos = n * n;
        while (pos > 0) {
            --pos;
            e[pos] += steps[pos];
            if (e[pos] < limits[pos]) break;
            e[pos] = 0;
            if (pos == 0) return;
        }
        if (n == 0) return;
    }
}

/// Order of Aut(Z_2^n) = |GL(n,2)|.
inline std::uint64_t gl2_order(int n) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) r *= (std::uint64_t{1} << n) - (std::uint64_t{1} << i);
    return r;
}

inline constexpr std::uint64_t kMaxAutomorphismGroup = 10'000'000;

/// All automorphisms, sorted by entries. Throws if the group is too large
/// for exhaustive enumeration.
inline std::vector<EndoMatrix> automorphisms(const AbelianGroup2& g) {
    std::vector<EndoMatrix> out;
    if (g.is_elementary()) {
        if (gl2_order(static_cast<int>(g.rank())) > kMaxAutomorphismGroup)
            throw std::length_error("automorphisms: automorphism group too large");
        gf2::for_each_invertible(static_cast<int>(g.rank()),
                                 [&](const gf2::SquareMatrix& m) { out.push_back(EndoMatrix::from_gf2(g, m)); });
        std::sort(out.begin(), out.end());
        return out;
    }
    for_each_endomorphism(g, [&](EndoMatrix m) {
        if (is_bijective_endo(m)) out.push_back(std::move(m));
    });
    if (out.size() > kMaxAutomorphismGroup) throw std::length_error("automorphisms: automorphism group too large");
    return out;
}

inline bool is_admissible(const EndoMatrix& psi) {
    return is_bijective_endo(psi) && is_bijective_endo(psi.one_minus());
}

namespace detail {

inline gf2::SquareMatrix gf2_from_key(int n, std::uint64_t key) {
    gf2::SquareMatrix m{n, {}};
    for (int idx = n * n - 1; idx >= 0; --idx) {
        if (key & 1u) m.rows[idx / n] |= 1u << (idx % n);
        key >>= 1;
    }
    return m;
}

inline std::uint64_t gf2_key(const gf2::SquareMatrix& m) {
    std::uint64_t key = 0;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) key = (key << 1) | ((m.rows[i] >> j) & 1u);
    return key;
}

// Packed keys of all admissible automorphisms of an elementary group,
// sorted ascending.
inline std::vector<std::uint64_t> admissible_keys_elementary(const AbelianGroup2& g) {
    const int n = static_cast<int>(g.rank());
    if (gl2_order(n) > kMaxAutomorphismGroup)
        throw std::length_error("admissible_automorphisms: automorphism group too large");
    const auto id = gf2::identity(n);
    std::vector<std::uint64_t> keys;
    gf2::for_each_invertible(n, [&](const gf2::SquareMatrix& m) {
        if (gf2::invertible(gf2::add(m, id))) keys.push_back(gf2_key(m));
    });
    std::sort(keys.begin(), keys.end());
    return keys;
}

// Partitions sorted candidate keys into orbits of the group generated by
// `gens` acting through conj(key, gen). Returns the minimum key per orbit.
template <class Conj>
std::vector<std::uint64_t> orbit_minima(const std::vector<std::uint64_t>& sorted_keys, std::size_t num_gens,
                                        Conj&& conj) {
    std::vector<std::uint8_t> seen(sorted_keys.size(), 0);
    auto locate = [&](std::uint64_t key) -> std::size_t {
        auto it = std::lower_bound(sorted_keys.begin(), sorted_keys.end(), key);
        if (it == sorted_keys.end() || *it != key)
            throw std::invalid_argument("conjugacy_class_reps: candidates not closed under conjugation");
        return static_cast<std::size_t>(it - sorted_keys.begin());
    };
    std::vector<std::uint64_t> reps;
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < sorted_keys.size(); ++start) {
        if (seen[start]) continue;
        // Scanning in ascending order, the first unseen key is its orbit minimum.
        reps.push_back(sorted_keys[start]);
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::uint64_t key = sorted_keys[stack.back()];
            stack.pop_back();
            for (std::size_t gi = 0; gi < num_gens; ++gi) {
                const std::size_t pos = locate(conj(key, gi));
                if (!seen[pos]) {
                    seen[pos] = 1;
                    stack.push_back(pos);
                }
            }
        }
    }
    return reps;
}

// orbit_minima with membership and visited flags held in bitsets over the
// whole key space of `bits`-bit keys.
template <class Conj>
std::vector<std::uint64_t> orbit_minima_dense(const std::vector<std::uint64_t>& sorted_keys, int bits, std::size_t num_gens,
                                              Conj&& conj) {
    std::vector<bool> member(std::size_t{1} << bits, false), seen(std::size_t{1} << bits, false);
    for (auto k : sorted_keys) member[k] = true;
    std::vector<std::uint64_t> reps, stack;
    for (auto start : sorted_keys) {
        if (seen[start]) continue;
        reps.push_back(start);
        seen[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::uint64_t key = stack.back();
            stack.pop_back();
            for (std::size_t gi = 0; gi < num_gens; ++gi) {
                const auto c = conj(key, gi);
                if (!member[c]) throw std::invalid_argument("conjugacy_class_reps: candidates not closed under conjugation");
                if (!seen[c]) {
                    seen[c] = true;
                    stack.push_back(c);
                }
            }
        }
    }
    return reps;
}

inline std::vector<std::uint64_t> conjugacy_minima(const AbelianGroup2& g, std::vector<std::uint64_t> keys) {
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    if (g.is_elementary()) {
        const int n = static_cast<int>(g.rank());
        if (gl2_order(n) > kMaxAutomorphismGroup)
            throw std::length_error("conjugacy_class_reps: automorphism group too large");
        // t m t for t = I + E_ij: row i += row j, then column j += column i.
        // In a packed key row r is the n-bit field at (n-1-r)*n and column c
        // is bit n-1-c of that field.
        std::vector<std::pair<int, int>> gens;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) gens.emplace_back(i, j);
        const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
        auto conj = [&](std::uint64_t key, std::size_t gi) {
            const auto [i, j] = gens[gi];
            std::uint64_t rows[16];
            for (int r = 0; r < n; ++r) rows[r] = (key >> ((n - 1 - r) * n)) & mask;
            rows[i] ^= rows[j];
            const std::uint64_t ci = std::uint64_t{1} << (n - 1 - i), cj = std::uint64_t{1} << (n - 1 - j);
            std::uint64_t out = 0;
            for (int r = 0; r < n; ++r) out = (out << n) | ((rows[r] & ci) ? rows[r] ^ cj : rows[r]);
            return out;
        };
        if (n * n <= 25) return orbit_minima_dense(keys, n * n, gens.size(), conj);
        return orbit_minima(keys, gens.size(), conj);
    }
    const auto aut = automorphisms(g);
    std::vector<EndoMatrix> inv;
    inv.reserve(aut.size());
    for (const auto& a : aut) inv.push_back(inverse(a));
    return orbit_minima(keys, aut.size(), [&](std::uint64_t key, std::size_t gi) {
        return aut[gi].compose(EndoMatrix::from_packed_key(g, key)).compose(inv[gi]).packed_key();
    });
}

}  // namespace detail

/// Every automorphism psi with 1 - psi bijective, sorted by entries.
inline std::vector<EndoMatrix> admissible_automorphisms(const AbelianGroup2& g) {
    if (g.log2_order() > 10) throw std::length_error("admissible_automorphisms: group too large");
    std::vector<EndoMatrix> out;
    if (g.is_elementary()) {
        for (auto key : detail::admissible_keys_elementary(g)) out.push_back(EndoMatrix::from_packed_key(g, key));
        return out;
    }
    for (auto& a : automorphisms(g))
        if (is_bijective_endo(a.one_minus())) out.push_back(std::move(a));
    return out;
}

/// One representative per Aut(g)-conjugacy orbit among the candidates: the
/// lexicographically smallest member of each orbit, in ascending order.
inline std::vector<EndoMatrix> conjugacy_class_reps(const AbelianGroup2& g, const std::vector<EndoMatrix>& candidates) {
    std::vector<std::uint64_t> keys;
    keys.reserve(candidates.size());
    for (const auto& c : candidates) {
        if (!(c.group() == g)) throw std::invalid_argument("conjugacy_class_reps: group mismatch");
        keys.push_back(c.packed_key());
    }
    std::vector<EndoMatrix> out;
    for (auto key : detail::conjugacy_minima(g, std::move(keys))) out.push_back(EndoMatrix::from_packed_key(g, key));
    return out;
}

/// Conjugacy representatives of the admissible automorphisms, without
/// materialising the full admissible list for elementary groups.
inline std::vector<EndoMatrix> admissible_class_reps(const AbelianGroup2& g) {
    if (g.log2_order() > 10) throw std::length_error("admissible_class_reps: group too large");
    std::vector<std::uint64_t> keys;
    if (g.is_elementary()) {
        keys = detail::admissible_keys_elementary(g);
    } else {
        for (const auto& a : admissible_automorphisms(g)) keys.push_back(a.packed_key());
    }
    std::vector<EndoMatrix> out;
    for (auto key : detail::conjugacy_minima(g, std::move(keys))) out.push_back(EndoMatrix::from_packed_key(g, key));
    return out;
}

/// Some automorphism c with c*a = b*c, if a and b are conjugate.
inline std::optional<EndoMatrix> find_conjugator(const EndoMatrix& a, const EndoMatrix& b) {
    for (const auto& c : automorphisms(a.group()))
        if (c.compose(a) == b.compose(c)) return c;
    return std::nullopt;
}

}  // namespace latinq
