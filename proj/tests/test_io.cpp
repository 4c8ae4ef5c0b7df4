#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "latinq/io.hpp"
#include "latinq/library.hpp"

using namespace latinq;

TEST(Io, TableRoundTrip) {
    const auto q = build_library(8).members[1].table;
    std::stringstream ss;
    io::write_table(ss, q);
    EXPECT_EQ(io::read_table(ss), q);
}

TEST(Io, TableFormat) {
    std::stringstream ss;
    io::write_table(ss, MagmaTable(2, {0, 1, 1, 0}));
    EXPECT_EQ(ss.str(), "2\n0 1\n1 0\n");
}

TEST(Io, TableRejectsBadInput) {
    std::istringstream out_of_range("2\n0 1\n2 0\n");
    EXPECT_THROW(io::read_table(out_of_range), std::runtime_error);
    std::istringstream truncated("3\n0 1 2\n");
    EXPECT_THROW(io::read_table(truncated), std::runtime_error);
    std::istringstream garbage("x");
    EXPECT_THROW(io::read_table(garbage), std::runtime_error);
}

TEST(Io, ModMatrixRoundTrip) {
    const auto m = ModMatrix::from_dense(2, 2, 3, {1, 2, 3, 0, 3, 1});
    std::stringstream ss;
    io::write_mod_matrix(ss, m);
    EXPECT_EQ(ss.str().substr(0, 11), "mod 2^2 2 3");
    const auto r = io::read_mod_matrix(ss);
    EXPECT_EQ(r.exponent(), 2);
    EXPECT_EQ(r.rows(), 2u);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(r.dense_row(i), m.dense_row(i));
    std::istringstream bad("mod 3 1 1\n1\n");
    EXPECT_THROW(io::read_mod_matrix(bad), std::runtime_error);
}

TEST(Io, ParseGroup) {
    EXPECT_EQ(io::parse_group("Z2^3"), AbelianGroup2::elementary(3));
    EXPECT_EQ(io::parse_group("Z4xZ2^2"), AbelianGroup2({2, 1, 1}));
    EXPECT_EQ(io::parse_group("Z2xZ4"), AbelianGroup2({2, 1}));
    EXPECT_EQ(io::parse_group("Z1"), AbelianGroup2(std::vector<int>{}));
    for (int l = 1; l <= 6; ++l)
        for (const auto& g : groups_of_order_log2(l)) EXPECT_EQ(io::parse_group(g.name()), g);
    EXPECT_THROW(io::parse_group("Z3"), std::runtime_error);
    EXPECT_THROW(io::parse_group("Q8"), std::runtime_error);
}

TEST(Io, EndoRoundTrip) {
    const auto g = AbelianGroup2::homocyclic(2, 2);
    for (const auto& a : admissible_class_reps(g)) {
        std::stringstream ss;
        io::write_endo(ss, a);
        EXPECT_EQ(io::read_endo(ss, g), a);
    }
}

TEST(Io, CocycleRoundTrip) {
    std::mt19937_64 rng(1);
    const AbelianGroup2 g({2, 1});
    std::vector<Element> v(9);
    for (auto& x : v) x = static_cast<Element>(rng() % g.order());
    const Cocycle t(3, g, v);
    std::stringstream ss;
    io::write_cocycle(ss, t);
    EXPECT_EQ(ss.str().substr(0, 25), "cocycle 3\nsignature 2 1\n" + std::to_string(g.element(v[0]).coords[0]));
    EXPECT_EQ(io::read_cocycle(ss), t);
    std::istringstream bad("cocycle 1\nsignature 1\n2\n");
    EXPECT_THROW(io::read_cocycle(bad), std::runtime_error);
}

TEST(Io, OnoiRingRoundTrip) {
    for (const auto& o : four_element_rings()) {
        std::stringstream ss;
        io::write_onoi_ring(ss, o);
        EXPECT_EQ(io::read_onoi_ring(ss), o);
    }
    const auto sq = power_sigma(four_element_rings()[1], 2, {1, 0});
    std::stringstream ss;
    io::write_onoi_ring(ss, sq);
    EXPECT_EQ(io::read_onoi_ring(ss), sq);
}
