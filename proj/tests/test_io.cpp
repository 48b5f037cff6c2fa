#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "weyl/io.hpp"

using nlohmann::json;
using weyl::parse_matrix;

TEST(Json, MatrixDocument) {
    const auto M = parse_matrix("t, 1; t^-1, u(1/2)");
    const json j = weyl::to_json(M);
    EXPECT_EQ(j.at("rank"), 2);
    EXPECT_EQ(j.at("entries"), json({"t", "1", "t^-1", "u(1/2)"}));
    EXPECT_EQ(weyl::parse_matrix_document(j.dump()), M);
}

TEST(Json, MatrixFile) {
    const auto path = std::filesystem::temp_directory_path() / "weyl_io_matrix.json";
    {
        std::ofstream out(path);
        out << R"({"rank": 1, "entries": ["u(2/6)*x"]})";
    }
    EXPECT_EQ(weyl::read_matrix_file(path.string()), parse_matrix("u(1/3)*x"));
    std::filesystem::remove(path);
    EXPECT_THROW(weyl::read_matrix_file(path.string()), weyl::error);
}

TEST(Json, EntryErrorsNameTheEntry) {
    try {
        weyl::parse_matrix_document(R"j({"rank": 2, "entries": ["t", "1", "t^", "1"]})j");
        FAIL();
    } catch (const weyl::parse_error& e) {
        EXPECT_NE(std::string(e.what()).find("entry 3"), std::string::npos) << e.what();
    }
}

TEST(Json, TwistClass) {
    const json j = weyl::to_json(weyl::canonicalize(parse_matrix("t, s; s^-1*t^-1, t")));
    EXPECT_EQ(j.at("rank"), 2);
    EXPECT_EQ(j.at("diagonal"), json({"t", "t"}));
    ASSERT_EQ(j.at("products").size(), 1u);
    EXPECT_EQ(j.at("products")[0].at("i"), 1);
    EXPECT_EQ(j.at("products")[0].at("j"), 2);
    EXPECT_EQ(j.at("products")[0].at("value"), "t^-1");
}

TEST(Json, OrbitGraph) {
    const auto g = weyl::enumerate_orbit(parse_matrix("t, 1; t^-1, -1"));
    const json j = weyl::to_json(g);
    EXPECT_EQ(j.at("schema"), weyl::json_schema_version);
    EXPECT_EQ(j.at("status"), "complete");
    ASSERT_EQ(j.at("nodes").size(), 2u);
    EXPECT_EQ(j.at("edges").size(), 4u);
    for (const auto& e : j.at("edges")) {
        EXPECT_GE(e.at("vertex").get<int>(), 1);
        EXPECT_LE(e.at("target_vertex").get<int>(), 2);
        EXPECT_EQ(e.at("s").size(), 2u);
    }
    // node matrices parse back to their class
    for (const auto& n : j.at("nodes")) {
        const auto M = weyl::matrix_from_json(n.at("matrix"));
        EXPECT_EQ(weyl::to_json(weyl::canonicalize(M)), n.at("class"));
    }
}

TEST(Json, OrbitDeadEnds) {
    const json j = weyl::to_json(weyl::enumerate_orbit(parse_matrix("1, 1; t, -1")));
    ASSERT_FALSE(j.at("dead_ends").empty());
    EXPECT_EQ(j.at("dead_ends")[0].at("vertex"), 1);
}

TEST(Dot, OrbitGraph) {
    const std::string dot = weyl::to_dot(weyl::enumerate_orbit(parse_matrix("a, 1; 1, b")));
    EXPECT_EQ(dot.rfind("digraph", 0), 0u);
    EXPECT_NE(dot.find("n0 -> n0"), std::string::npos) << dot;
    EXPECT_EQ(dot.back(), '\n');
}
