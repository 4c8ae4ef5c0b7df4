#pragma once

// Finite binary operation tables and the quandle predicate suite.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace latinq {

using Element = std::uint32_t;

/// Operation table of order n: op(a, b) = table[a*n + b].
class MagmaTable {
  public:
    MagmaTable() = default;

    MagmaTable(std::size_t order, std::vector<Element> table) : n_(order), table_(std::move(table)) {
        if (order == 0) throw std::invalid_argument("MagmaTable: order must be positive");
        if (table_.size() != order * order) throw std::invalid_argument("MagmaTable: table size mismatch");
        for (auto v : table_)
            if (v >= order) throw std::invalid_argument("MagmaTable: entry out of range");
    }

    /// Table filled from f(a, b).
    template <class F>
    static MagmaTable from_function(std::size_t order, F&& f) {
        std::vector<Element> t(order * order);
        for (std::size_t a = 0; a < order; ++a)
            for (std::size_t b = 0; b < order; ++b) t[a * order + b] = static_cast<Element>(f(a, b));
        return MagmaTable(order, std::move(t));
    }

    std::size_t order() const { return n_; }
    Element op(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
    const std::vector<Element>& table() const { return table_; }

    friend bool operator==(const MagmaTable&, const MagmaTable&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<Element> table_;
};

/// (a*b)*(c*d) != (a*c)*(b*d)
struct MedialityWitness {
    std::size_t a, b, c, d;

    bool holds_in(const MagmaTable& q) const {
        return q.op(q.op(a, b), q.op(c, d)) != q.op(q.op(a, c), q.op(b, d));
    }
    friend bool operator==(const MedialityWitness&, const MedialityWitness&) = default;
};

inline bool is_latin(const MagmaTable& q) {
    const std::size_t n = q.order();
    std::vector<std::uint32_t> seen(n, 0);
    std::uint32_t stamp = 0;
    for (std::size_t a = 0; a < n; ++a) {
        ++stamp;
        for (std::size_t b = 0; b < n; ++b) {
            auto v = q.op(a, b);
            if (seen[v] == stamp) return false;
            seen[v] = stamp;
        }
    }
    std::fill(seen.begin(), seen.end(), 0);
    stamp = 0;
    for (std::size_t b = 0; b < n; ++b) {
        ++stamp;
        for (std::size_t a = 0; a < n; ++a) {
            auto v = q.op(a, b);
            if (seen[v] == stamp) return false;
            seen[v] = stamp;
        }
    }
    return true;
}

inline bool is_idempotent(const MagmaTable& q) {
    for (std::size_t a = 0; a < q.order(); ++a)
        if (q.op(a, a) != a) return false;
    return true;
}

inline bool is_left_distributive(const MagmaTable& q) {
    const std::size_t n = q.order();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const auto xy = q.op(x, y);
            for (std::size_t z = 0; z < n; ++z)
                if (q.op(x, q.op(y, z)) != q.op(xy, q.op(x, z))) return false;
        }
    return true;
}

inline bool left_translations_bijective(const MagmaTable& q) {
    const std::size_t n = q.order();
    std::vector<std::uint8_t> seen(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t b = 0; b < n; ++b) {
            if (seen[q.op(a, b)]) return false;
            seen[q.op(a, b)] = 1;
        }
    }
    return true;
}

inline bool is_quandle(const MagmaTable& q) {
    return is_idempotent(q) && left_translations_bijective(q) && is_left_distributive(q);
}

/// Lexicographically first violation of the medial identity, if any.
inline std::optional<MedialityWitness> medial_witness(const MagmaTable& q) {
    const std::size_t n = q.order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const auto ab = q.op(a, b);
            for (std::size_t c = 0; c < n; ++c) {
                const auto ac = q.op(a, c);
                for (std::size_t d = 0; d < n; ++d)
                    if (q.op(ab, q.op(c, d)) != q.op(ac, q.op(b, d))) return MedialityWitness{a, b, c, d};
            }
        }
    return std::nullopt;
}

inline bool is_medial(const MagmaTable& q) { return !medial_witness(q).has_value(); }

/// Componentwise operation on pairs, (x, y) indexed x*|q| + y.
inline MagmaTable direct_product(const MagmaTable& p, const MagmaTable& q) {
    const std::size_t m = q.order();
    return MagmaTable::from_function(p.order() * m, [&](std::size_t a, std::size_t b) {
        return p.op(a / m, b / m) * m + q.op(a % m, b % m);
    });
}

/// Sorted cycle lengths of the permutation b -> a*b; empty if not a
/// permutation.
inline std::vector<std::size_t> left_translation_cycle_type(const MagmaTable& q, std::size_t a) {
    const std::size_t n = q.order();
    std::vector<std::uint8_t> seen(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
        if (seen[q.op(a, b)]) return {};
        seen[q.op(a, b)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<std::size_t> cycles;
    for (std::size_t b = 0; b < n; ++b) {
        if (seen[b]) continue;
        std::size_t len = 0;
        for (std::size_t x = b; !seen[x]; x = q.op(a, x)) {
            seen[x] = 1;
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

/// Isomorphism-invariant summary: the multiset of left-translation cycle
/// types, e.g. "16*[1,3^5]".
inline std::string fingerprint(const MagmaTable& q) {
    std::map<std::vector<std::size_t>, std::size_t> counts;
    for (std::size_t a = 0; a < q.order(); ++a) ++counts[left_translation_cycle_type(q, a)];
    std::ostringstream os;
    bool first = true;
    for (const auto& [type, count] : counts) {
        if (!first) os << '+';
        first = false;
        os << count << "*[";
        if (type.empty()) os << '-';
        for (std::size_t i = 0; i < type.size();) {
            std::size_t j = i;
            while (j < type.size() && type[j] == type[i]) ++j;
            if (i) os << ',';
            os << type[i];
            if (j - i > 1) os << '^' << (j - i);
            i = j;
        }
        os << ']';
    }
    return os.str();
}

}  // namespace latinq
