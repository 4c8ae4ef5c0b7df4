#pragma once

// Latin quandles of order 2^m, m <= 5, up to isomorphism. Every latin
// quandle of 2-power order below 64 is affine, so the affine ones over
// admissible (A, psi-class) pairs exhaust them.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelian_group.hpp"
#include "affine.hpp"
#include "isomorphism.hpp"
#include "magma.hpp"

namespace latinq {

struct LibraryEntry {
    std::string name;          // "<order>_<index>", index 1-based in library order
    MagmaTable table;
    AbelianGroup2 group;       // provenance: Aff(group, psi)
    EndoMatrix psi;
    std::string fingerprint;
    std::vector<std::string> products;  // e.g. "4_1x4_1" when isomorphic to that product

    std::string provenance() const {
        std::string s = order_one() ? "trivial" : "Aff(" + group.name() + "," + psi.to_string() + ")";
        for (const auto& p : products) s += "=" + p;
        return s;
    }
    bool order_one() const { return table.order() == 1; }
};

struct QuandleLibrary {
    std::size_t order = 0;
    std::vector<LibraryEntry> members;

    const LibraryEntry* find(const std::string& name) const {
        for (const auto& m : members)
            if (m.name == name) return &m;
        return nullptr;
    }
};

namespace detail {

inline std::optional<std::size_t> find_isomorphic(const std::vector<LibraryEntry>& members, const MagmaTable& t,
                                                  const std::string& fp) {
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i].fingerprint == fp && is_isomorphic(members[i].table, t)) return i;
    return std::nullopt;
}

}  // namespace detail

inline QuandleLibrary build_library(std::size_t order) {
    int m = 0;
    while ((std::size_t{1} << m) < order) ++m;
    if (order == 0 || (std::size_t{1} << m) != order || m > 5)
        throw std::invalid_argument("build_library: order must be 2^m with m <= 5");
    QuandleLibrary lib;
    lib.order = order;
    if (m == 0) {
        const AbelianGroup2 trivial(std::vector<int>{});
        lib.members.push_back(LibraryEntry{"1_1", MagmaTable(1, {0}), trivial, EndoMatrix::identity(trivial),
                                           fingerprint(MagmaTable(1, {0})), {}});
        return lib;
    }
    for (const auto& g : groups_of_order_log2(m)) {
        for (const auto& psi : admissible_class_reps(g)) {
            MagmaTable t = affine_quandle(g, psi);
            auto fp = fingerprint(t);
            if (detail::find_isomorphic(lib.members, t, fp)) continue;
            lib.members.push_back(LibraryEntry{std::to_string(order) + "_" + std::to_string(lib.members.size() + 1),
                                               std::move(t), g, psi, std::move(fp), {}});
        }
    }
    // Annotate members isomorphic to products of smaller libraries.
    for (int m1 = 2; 2 * m1 <= m; ++m1) {
        const auto left = build_library(std::size_t{1} << m1);
        const auto right = build_library(std::size_t{1} << (m - m1));
        for (std::size_t i = 0; i < left.members.size(); ++i)
            for (std::size_t j = (m1 == m - m1 ? i : 0); j < right.members.size(); ++j) {
                const auto p = direct_product(left.members[i].table, right.members[j].table);
                if (auto hit = detail::find_isomorphic(lib.members, p, fingerprint(p)))
                    lib.members[*hit].products.push_back(left.members[i].name + "x" + right.members[j].name);
            }
    }
    return lib;
}

}  // namespace latinq
