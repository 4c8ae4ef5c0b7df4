#include <gtest/gtest.h>

#include <random>
#include <set>

#include "latinq/abelian_group.hpp"

using namespace latinq;

namespace {

GroupElement el(std::vector<std::int64_t> c) { return GroupElement{std::move(c)}; }

std::vector<AbelianGroup2> groups_up_to(int log2_max) {
    std::vector<AbelianGroup2> out;
    for (int l = 1; l <= log2_max; ++l)
        for (auto& g : groups_of_order_log2(l)) out.push_back(g);
    return out;
}

EndoMatrix random_endo(const AbelianGroup2& g, std::mt19937_64& rng) {
    const std::size_t n = g.rank();
    std::vector<std::int64_t> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int ki = g.signature()[i], kj = g.signature()[j];
            const std::int64_t step = ki > kj ? (std::int64_t{1} << (ki - kj)) : 1;
            e[i * n + j] = step * static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(g.modulus(i) / step));
        }
    return EndoMatrix(g, std::move(e));
}

// Orbits of Aut(g) acting on the candidates by conjugation, one full orbit
// at a time.
std::size_t orbit_count_oracle(const AbelianGroup2& g, const std::vector<EndoMatrix>& candidates) {
    const auto aut = automorphisms(g);
    std::vector<EndoMatrix> inv;
    for (const auto& a : aut) inv.push_back(inverse(a));
    std::set<std::vector<std::int64_t>> pending;
    for (const auto& c : candidates) pending.insert(c.entries());
    std::size_t orbits = 0;
    while (!pending.empty()) {
        const EndoMatrix x(g, *pending.begin());
        for (std::size_t i = 0; i < aut.size(); ++i) pending.erase(aut[i].compose(x).compose(inv[i]).entries());
        ++orbits;
    }
    return orbits;
}

}  // namespace

TEST(GroupAdd, Examples) {
    const auto z2 = AbelianGroup2::elementary(2);
    EXPECT_EQ(group_add(z2, el({1, 0}), el({1, 1})), el({0, 1}));
    const auto z4 = AbelianGroup2::homocyclic(2, 2);
    EXPECT_EQ(group_add(z4, el({3, 2}), el({1, 2})), el({0, 0}));
    const AbelianGroup2 mixed({3, 1});
    for (std::uint64_t v = 0; v < mixed.order(); ++v) EXPECT_EQ(group_add(mixed, mixed.element(v), mixed.zero()), mixed.element(v));
}

TEST(GroupAdd, DimensionMismatchThrows) {
    const auto g = AbelianGroup2::elementary(2);
    EXPECT_THROW(group_add(g, el({1}), el({1, 0})), std::invalid_argument);
}

TEST(AbelianGroup2, GroupAxiomsAndIndexing) {
    for (const auto& g : groups_up_to(5)) {
        std::set<std::vector<std::int64_t>> seen;
        for (std::uint64_t v = 0; v < g.order(); ++v) {
            const auto x = g.element(v);
            EXPECT_TRUE(g.contains(x));
            EXPECT_EQ(g.index(x), v);
            EXPECT_EQ(g.add(x, g.neg(x)), g.zero());
            seen.insert(x.coords);
        }
        EXPECT_EQ(seen.size(), g.order());
        for (std::uint64_t a = 0; a < g.order(); ++a)
            for (std::uint64_t b = 0; b < g.order(); ++b) {
                const auto x = g.element(a), y = g.element(b);
                EXPECT_EQ(g.add(x, y), g.add(y, x));
            }
    }
}

TEST(AbelianGroup2, LexicographicIndexFirstCoordinateMostSignificant) {
    const AbelianGroup2 g({2, 1});
    EXPECT_EQ(g.element(1), el({0, 1}));
    EXPECT_EQ(g.element(2), el({1, 0}));
    EXPECT_EQ(g.element(7), el({3, 1}));
}

TEST(AbelianGroup2, RejectsIncreasingSignature) {
    EXPECT_THROW(AbelianGroup2({1, 2}), std::invalid_argument);
    EXPECT_THROW(AbelianGroup2({0}), std::invalid_argument);
}

TEST(AbelianGroup2, PartitionCounts) {
    const std::size_t expected[] = {1, 1, 2, 3, 5, 7, 11};
    for (int l = 0; l <= 6; ++l) EXPECT_EQ(groups_of_order_log2(l).size(), expected[l]) << l;
    for (const auto& g : groups_of_order_log2(6)) EXPECT_EQ(g.log2_order(), 6);
}

TEST(EndoApply, Examples) {
    const auto g = AbelianGroup2::elementary(2);
    const EndoMatrix psi(g, {1, 1, 1, 0});
    EXPECT_EQ(endo_apply(psi, el({1, 0})), el({1, 1}));
    EXPECT_EQ(endo_apply(psi, el({0, 1})), el({1, 0}));
    const auto id = EndoMatrix::identity(AbelianGroup2({3, 2, 1}));
    for (std::uint64_t v = 0; v < id.group().order(); ++v) EXPECT_EQ(endo_apply(id, id.group().element(v)), id.group().element(v));
    EXPECT_THROW(endo_apply(psi, el({1, 0, 0})), std::invalid_argument);
}

TEST(EndoMatrix, RejectsNonHomomorphicEntries) {
    const AbelianGroup2 g({2, 1});
    // entry (0,1) maps Z2 into Z4 and must be even
    EXPECT_THROW(EndoMatrix(g, {1, 1, 0, 1}), std::invalid_argument);
    EXPECT_NO_THROW(EndoMatrix(g, {1, 2, 1, 1}));
}

TEST(EndoMatrix, AdditiveOnAllPairs) {
    std::mt19937_64 rng(3);
    for (const auto& g : groups_up_to(6)) {
        const int samples = log2_endomorphism_count(g) <= 8 ? 0 : 12;
        std::vector<EndoMatrix> endos;
        if (samples == 0) for_each_endomorphism(g, [&](EndoMatrix m) { endos.push_back(std::move(m)); });
        else
            for (int s = 0; s < samples; ++s) endos.push_back(random_endo(g, rng));
        for (const auto& m : endos) {
            const auto t = m.index_table();
            for (std::uint64_t a = 0; a < g.order(); ++a)
                for (std::uint64_t b = 0; b < g.order(); ++b)
                    ASSERT_EQ(t[g.index(g.add(g.element(a), g.element(b)))], g.index(g.add(g.element(t[a]), g.element(t[b]))))
                        << g.name() << " " << m.to_string();
        }
    }
}

TEST(IsBijectiveEndo, Examples) {
    const auto g = AbelianGroup2::elementary(2);
    const EndoMatrix psi(g, {1, 1, 1, 0});
    EXPECT_TRUE(is_bijective_endo(psi));
    EXPECT_EQ(psi.one_minus(), EndoMatrix(g, {0, 1, 1, 1}));
    EXPECT_TRUE(is_bijective_endo(psi.one_minus()));
    for (const auto& h : groups_up_to(4)) EXPECT_FALSE(is_bijective_endo(EndoMatrix::identity(h).one_minus())) << h.name();
    const AbelianGroup2 z4({2});
    const EndoMatrix three(z4, {3});
    EXPECT_TRUE(is_bijective_endo(three));
    EXPECT_EQ(three.one_minus(), EndoMatrix(z4, {2}));
    EXPECT_FALSE(is_bijective_endo(three.one_minus()));
}

TEST(IsBijectiveEndo, AgreesWithImageSize) {
    std::mt19937_64 rng(5);
    for (const auto& g : groups_up_to(6)) {
        if (log2_endomorphism_count(g) <= 12) {
            for_each_endomorphism(g, [&](const EndoMatrix& m) { ASSERT_EQ(is_bijective_endo(m), is_bijective_by_image(m)) << m.to_string(); });
        } else {
            for (int s = 0; s < 300; ++s) {
                const auto m = random_endo(g, rng);
                ASSERT_EQ(is_bijective_endo(m), is_bijective_by_image(m)) << g.name() << m.to_string();
            }
        }
    }
}

TEST(Inverse, ComposesToIdentity) {
    for (const auto& g : {AbelianGroup2({2, 1}), AbelianGroup2::homocyclic(2, 2), AbelianGroup2::elementary(3)}) {
        for (const auto& a : automorphisms(g)) {
            const auto b = inverse(a);
            EXPECT_EQ(a.compose(b), EndoMatrix::identity(g));
            EXPECT_EQ(b.compose(a), EndoMatrix::identity(g));
        }
    }
}

TEST(Automorphisms, CountsForSmallGroups) {
    EXPECT_EQ(automorphisms(AbelianGroup2::elementary(2)).size(), 6u);
    EXPECT_EQ(automorphisms(AbelianGroup2::elementary(3)).size(), 168u);
    EXPECT_EQ(automorphisms(AbelianGroup2({2, 1})).size(), 8u);
    EXPECT_EQ(automorphisms(AbelianGroup2::homocyclic(2, 2)).size(), 96u);
    EXPECT_EQ(automorphisms(AbelianGroup2({3})).size(), 4u);
}

TEST(AdmissibleAutomorphisms, Examples) {
    EXPECT_TRUE(admissible_automorphisms(AbelianGroup2({2, 1})).empty());
    EXPECT_TRUE(admissible_automorphisms(AbelianGroup2({2, 2, 1})).empty());
    const auto g = AbelianGroup2::elementary(2);
    const auto adm = admissible_automorphisms(g);
    ASSERT_EQ(adm.size(), 2u);
    for (const auto& a : adm) {
        EXPECT_EQ(a.compose(a).compose(a), EndoMatrix::identity(g));
        EXPECT_FALSE(a == EndoMatrix::identity(g));
    }
}

TEST(AdmissibleAutomorphisms, MatchesDefinitionExhaustively) {
    for (const auto& g : groups_up_to(4)) {
        std::vector<EndoMatrix> expect;
        for (const auto& a : automorphisms(g))
            if (is_bijective_by_image(a) && is_bijective_by_image(a.one_minus())) expect.push_back(a);
        auto got = admissible_automorphisms(g);
        std::sort(expect.begin(), expect.end());
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expect) << g.name();
    }
}

TEST(AdmissibleAutomorphisms, EmptyWhenTopExponentIsUnique) {
    for (const auto& g : groups_up_to(5)) {
        const auto& s = g.signature();
        const bool unique_top = s.size() == 1 || s[0] > s[1];
        const bool empty = admissible_class_reps(g).empty();
        if (unique_top) { EXPECT_TRUE(empty) << g.name(); }
        if (s[0] == 1 && s.size() >= 2) { EXPECT_FALSE(empty) << g.name(); }
    }
    EXPECT_FALSE(admissible_automorphisms(AbelianGroup2::homocyclic(2, 2)).empty());
}

TEST(ConjugacyClassReps, Examples) {
    const auto g2 = AbelianGroup2::elementary(2);
    EXPECT_EQ(conjugacy_class_reps(g2, admissible_automorphisms(g2)).size(), 1u);
    const auto g3 = AbelianGroup2::elementary(3);
    EXPECT_EQ(conjugacy_class_reps(g3, admissible_automorphisms(g3)).size(), 2u);
    const auto single = std::vector<EndoMatrix>{EndoMatrix(g3, {0, 0, 1, 0, 1, 1, 1, 1, 0})};
    EXPECT_THROW(conjugacy_class_reps(g3, single), std::invalid_argument);
}

TEST(ConjugacyClassReps, OrbitCountsMatchFullConjugation) {
    for (const auto& g : {AbelianGroup2::elementary(2), AbelianGroup2::elementary(3), AbelianGroup2::elementary(4),
                          AbelianGroup2::homocyclic(2, 2)}) {
        const auto adm = admissible_automorphisms(g);
        EXPECT_EQ(admissible_class_reps(g).size(), orbit_count_oracle(g, adm)) << g.name();
        EXPECT_EQ(conjugacy_class_reps(g, adm), admissible_class_reps(g)) << g.name();
    }
}

TEST(ConjugacyClassReps, EveryCandidateHasExactlyOneConjugateRep) {
    for (const auto& g : {AbelianGroup2::elementary(2), AbelianGroup2::elementary(3), AbelianGroup2::homocyclic(2, 2)}) {
        const auto reps = admissible_class_reps(g);
        for (const auto& a : admissible_automorphisms(g)) {
            int hits = 0;
            for (const auto& r : reps) {
                if (auto c = find_conjugator(a, r)) {
                    ++hits;
                    EXPECT_TRUE(is_bijective_endo(*c));
                    EXPECT_EQ(c->compose(a), r.compose(*c));
                }
            }
            EXPECT_EQ(hits, 1) << g.name() << " " << a.to_string();
        }
    }
}

TEST(ConjugacyClassReps, RepresentativesAreOrbitMinima) {
    const auto g = AbelianGroup2::elementary(3);
    const auto reps = admissible_class_reps(g);
    for (const auto& r : reps)
        for (const auto& c : automorphisms(g)) EXPECT_FALSE(c.compose(r).compose(inverse(c)) < r);
}

TEST(ConjugacyClassReps, PublishedMatricesAreAdmissibleAndSeparated) {
    const auto g2 = AbelianGroup2::elementary(2);
    const EndoMatrix p2(g2, {1, 1, 1, 0});
    EXPECT_TRUE(is_admissible(p2));
    EXPECT_TRUE(find_conjugator(p2, admissible_class_reps(g2).front()));

    const auto g3 = AbelianGroup2::elementary(3);
    const EndoMatrix a(g3, {1, 0, 1, 1, 1, 1, 0, 1, 1});
    const EndoMatrix b(g3, {1, 0, 1, 1, 1, 0, 0, 1, 0});
    EXPECT_TRUE(is_admissible(a));
    EXPECT_TRUE(is_admissible(b));
    EXPECT_FALSE(find_conjugator(a, b));
}

TEST(PackedKey, RoundTrip) {
    std::mt19937_64 rng(9);
    for (const auto& g : {AbelianGroup2::elementary(4), AbelianGroup2::homocyclic(2, 2), AbelianGroup2({3, 1})}) {
        for (int s = 0; s < 50; ++s) {
            const auto m = random_endo(g, rng);
            EXPECT_EQ(EndoMatrix::from_packed_key(g, m.packed_key()), m);
        }
    }
}
