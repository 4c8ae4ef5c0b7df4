#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "abelian_group.hpp"
#include "magma.hpp"

namespace latinq {

/// Index-level arithmetic of a small AbelianGroup2: addition table and
/// endomorphism lookup tables.
class IndexedGroup {
  public:
    explicit IndexedGroup(AbelianGroup2 g) : group_(std::move(g)), size_(group_.order()) {
        if (size_ > (std::uint64_t{1} << 12)) throw std::length_error("IndexedGroup: group too large");
        add_.resize(size_ * size_);
        neg_.resize(size_);
        std::vector<GroupElement> elems;
        elems.reserve(size_);
        for (std::uint64_t v = 0; v < size_; ++v) elems.push_back(group_.element(v));
        for (std::uint64_t a = 0; a < size_; ++a) {
            neg_[a] = static_cast<Element>(group_.index(group_.neg(elems[a])));
            for (std::uint64_t b = 0; b < size_; ++b)
                add_[a * size_ + b] = static_cast<Element>(group_.index(group_.add(elems[a], elems[b])));
        }
    }

    const AbelianGroup2& group() const { return group_; }
    std::size_t size() const { return size_; }
    Element add(Element a, Element b) const { return add_[a * size_ + b]; }
    Element neg(Element a) const { return neg_[a]; }
    Element sub(Element a, Element b) const { return add(a, neg_[b]); }

  private:
    AbelianGroup2 group_;
    std::size_t size_;
    std::vector<Element> add_;
    std::vector<Element> neg_;
};

/// x*y = (1 - psi)(x) + psi(y), elements indexed lexicographically.
inline MagmaTable affine_quandle(const AbelianGroup2& g, const EndoMatrix& psi) {
    if (!(psi.group() == g)) throw std::invalid_argument("affine_quandle: group mismatch");
    if (!is_admissible(psi)) throw std::invalid_argument("affine_quandle: psi is not admissible");
    const IndexedGroup ig(g);
    const auto phi_t = psi.one_minus().index_table();
    const auto psi_t = psi.index_table();
    return MagmaTable::from_function(ig.size(), [&](std::size_t x, std::size_t y) {
        return ig.add(phi_t[x], psi_t[y]);
    });
}

}  // namespace latinq
