#pragma once

// Text formats.
//   quandle table:  "n", then n rows of n integers
//   mod matrix:     "mod 2^e rows cols", then row-major integers
//   cocycle:        "cocycle n", "signature k_1 ... k_r", then n^2 lines of r coordinates
//   onoi ring:      "dim n", n rows of the alpha matrix over Z_2, then the 2^n x 2^n table
//   endomorphism:   r rows of r integers
//   group:          "Z4xZ2^2", "Z2^3", "Z1"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelian_group.hpp"
#include "extension.hpp"
#include "magma.hpp"
#include "mod_matrix.hpp"
#include "onoi.hpp"

namespace latinq::io {

namespace detail {

inline std::int64_t read_int(std::istream& is, const char* what) {
    std::int64_t v;
    if (!(is >> v)) throw std::runtime_error(std::string("parse error: expected ") + what);
    return v;
}

inline void expect_word(std::istream& is, const std::string& word) {
    std::string w;
    if (!(is >> w) || w != word) throw std::runtime_error("parse error: expected '" + word + "'");
}

}  // namespace detail

inline void write_table(std::ostream& os, const MagmaTable& q) {
    os << q.order() << "\n";
    for (std::size_t a = 0; a < q.order(); ++a) {
        for (std::size_t b = 0; b < q.order(); ++b) os << (b ? " " : "") << q.op(a, b);
        os << "\n";
    }
}

inline MagmaTable read_table(std::istream& is) {
    const auto n = detail::read_int(is, "order");
    if (n <= 0 || n > (1 << 16)) throw std::runtime_error("parse error: order out of range");
    std::vector<Element> t(static_cast<std::size_t>(n * n));
    for (auto& v : t) {
        const auto x = detail::read_int(is, "table entry");
        if (x < 0 || x >= n) throw std::runtime_error("parse error: table entry out of range");
        v = static_cast<Element>(x);
    }
    return MagmaTable(static_cast<std::size_t>(n), std::move(t));
}

inline void write_mod_matrix(std::ostream& os, const ModMatrix& m) {
    os << "mod 2^" << m.exponent() << " " << m.rows() << " " << m.cols() << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.dense_row(r);
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
        os << "\n";
    }
}

inline ModMatrix read_mod_matrix(std::istream& is) {
    std::string word, mod;
    if (!(is >> word) || word != "mod" || !(is >> mod) || mod.rfind("2^", 0) != 0)
        throw std::runtime_error("parse error: expected 'mod 2^e'");
    const int e = std::stoi(mod.substr(2));
    const auto rows = detail::read_int(is, "row count");
    const auto cols = detail::read_int(is, "column count");
    if (rows < 0 || cols < 0) throw std::runtime_error("parse error: negative dimension");
    std::vector<std::int64_t> data(static_cast<std::size_t>(rows * cols));
    for (auto& v : data) v = detail::read_int(is, "matrix entry");
    return ModMatrix::from_dense(e, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), data);
}

/// Accepts names as produced by AbelianGroup2::name().
inline AbelianGroup2 parse_group(const std::string& s) {
    if (s == "Z1") return AbelianGroup2(std::vector<int>{});
    static const std::regex factor(R"(Z(\d+)(?:\^(\d+))?)");
    std::vector<int> sig;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, 'x')) {
        std::smatch m;
        if (!std::regex_match(part, m, factor)) throw std::runtime_error("parse error: bad group factor '" + part + "'");
        const long long mod = std::stoll(m[1]);
        const int reps = m[2].matched ? std::stoi(m[2]) : 1;
        int k = 0;
        while ((1LL << k) < mod) ++k;
        if (mod < 2 || (1LL << k) != mod || reps < 1) throw std::runtime_error("parse error: bad group factor '" + part + "'");
        sig.insert(sig.end(), static_cast<std::size_t>(reps), k);
    }
    std::sort(sig.rbegin(), sig.rend());
    return AbelianGroup2(std::move(sig));
}

inline void write_endo(std::ostream& os, const EndoMatrix& m) {
    const std::size_t r = m.group().rank();
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) os << (j ? " " : "") << m.at(i, j);
        os << "\n";
    }
}

inline EndoMatrix read_endo(std::istream& is, const AbelianGroup2& g) {
    std::vector<std::int64_t> e(g.rank() * g.rank());
    for (auto& v : e) v = detail::read_int(is, "matrix entry");
    return EndoMatrix(g, std::move(e));
}

inline void write_cocycle(std::ostream& os, const Cocycle& t) {
    os << "cocycle " << t.base_order() << "\nsignature";
    for (int k : t.fiber().signature()) os << " " << k;
    os << "\n";
    for (auto v : t.values()) {
        const auto x = t.fiber().element(v);
        for (std::size_t i = 0; i < x.coords.size(); ++i) os << (i ? " " : "") << x.coords[i];
        os << "\n";
    }
}

inline Cocycle read_cocycle(std::istream& is) {
    detail::expect_word(is, "cocycle");
    const auto n = detail::read_int(is, "base order");
    detail::expect_word(is, "signature");
    std::string line;
    std::getline(is, line);
    std::vector<int> sig;
    std::istringstream ls(line);
    for (int k; ls >> k;) sig.push_back(k);
    const AbelianGroup2 g(sig);
    std::vector<Element> values(static_cast<std::size_t>(n * n));
    GroupElement x{std::vector<std::int64_t>(g.rank())};
    for (auto& v : values) {
        for (auto& c : x.coords) c = detail::read_int(is, "cocycle coordinate");
        if (!g.contains(x)) throw std::runtime_error("parse error: cocycle coordinate out of range");
        v = static_cast<Element>(g.index(x));
    }
    return Cocycle(static_cast<std::size_t>(n), g, std::move(values));
}

inline void write_onoi_ring(std::ostream& os, const OnoiRing& o) {
    os << "dim " << o.dim() << "\n";
    const auto a = o.alpha_endo();
    write_endo(os, a);
    const std::size_t n = o.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) os << (y ? " " : "") << o.mul(x, y);
        os << "\n";
    }
}

inline OnoiRing read_onoi_ring(std::istream& is) {
    detail::expect_word(is, "dim");
    const auto d = detail::read_int(is, "dimension");
    if (d < 0 || d > OnoiRing::kMaxDim) throw std::runtime_error("parse error: dimension out of range");
    const int dim = static_cast<int>(d);
    const auto g = AbelianGroup2::elementary(dim);
    const EndoMatrix alpha = dim ? read_endo(is, g) : EndoMatrix::identity(g);
    const std::size_t n = std::size_t{1} << dim;
    std::vector<Element> alpha_table(n);
    for (std::size_t x = 0; x < n; ++x)
        alpha_table[x] = dim ? static_cast<Element>(g.index(alpha.apply(g.element(x)))) : 0;
    std::vector<Element> mul(n * n);
    for (auto& v : mul) {
        const auto x = detail::read_int(is, "product");
        if (x < 0 || static_cast<std::size_t>(x) >= n) throw std::runtime_error("parse error: product out of range");
        v = static_cast<Element>(x);
    }
    return OnoiRing(dim, std::move(mul), std::move(alpha_table));
}

}  // namespace latinq::io
