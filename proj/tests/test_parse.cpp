#include <gtest/gtest.h>

#include "oracles.hpp"
#include "weyl/io.hpp"
#include "weyl/parse.hpp"

using weyl::parse_scalar;
using weyl::Scalar;

TEST(Parse, Atoms) {
    EXPECT_EQ(parse_scalar("1"), Scalar{});
    EXPECT_EQ(parse_scalar("-1"), Scalar::minus_one());
    EXPECT_EQ(parse_scalar("u(1/3)"), Scalar::root(1, 3));
    EXPECT_EQ(parse_scalar("u(-1/3)"), Scalar::root(2, 3));
    EXPECT_EQ(parse_scalar("u(4/12)"), Scalar::root(1, 3));
    EXPECT_EQ(parse_scalar("zeta0"), Scalar::parameter("zeta0"));
    EXPECT_EQ(parse_scalar("u"), Scalar::parameter("u"));
}

TEST(Parse, ProductsAndPowers) {
    EXPECT_EQ(parse_scalar("t^-1"), Scalar::parameter("t", -1));
    EXPECT_EQ(parse_scalar(" u(1/2) * t ^ 2 "), Scalar::minus_one() * Scalar::parameter("t", 2));
    EXPECT_EQ(parse_scalar("zeta*q0^-1"), Scalar::parameter("zeta") * Scalar::parameter("q0", -1));
    EXPECT_EQ(parse_scalar("(t*s)^2"), Scalar::parameter("t", 2) * Scalar::parameter("s", 2));
}

TEST(Parse, MinusBindsToTheAtom) {
    // signed_atom is raised to the power, so -t^2 = (-t)^2
    EXPECT_EQ(parse_scalar("-t^2"), Scalar::parameter("t", 2));
    EXPECT_EQ(parse_scalar("-(t^2)"), Scalar::minus_one() * Scalar::parameter("t", 2));
    EXPECT_EQ(parse_scalar("-(zeta^-1)"), Scalar::minus_one() * Scalar::parameter("zeta", -1));
    EXPECT_THROW(parse_scalar("--t"), weyl::parse_error);
}

TEST(Parse, RejectsIntegersOtherThanOne) {
    EXPECT_THROW(parse_scalar("2"), weyl::parse_error);
    EXPECT_THROW(parse_scalar("0"), weyl::parse_error);
    EXPECT_THROW(parse_scalar("t*3"), weyl::parse_error);
}

TEST(Parse, ErrorsCarryPosition) {
    try {
        parse_scalar("t * u(1/0)");
        FAIL() << "expected parse_error";
    } catch (const weyl::parse_error& e) {
        EXPECT_EQ(e.position(), 8u);
    }
    try {
        parse_scalar("t )");
        FAIL();
    } catch (const weyl::parse_error& e) {
        EXPECT_EQ(e.position(), 2u);
    }
    EXPECT_THROW(parse_scalar(""), weyl::parse_error);
    EXPECT_THROW(parse_scalar("t^"), weyl::parse_error);
    EXPECT_THROW(parse_scalar("u(1/2"), weyl::parse_error);
    EXPECT_THROW(parse_scalar("t $"), weyl::parse_error);
}

TEST(Parse, RenderingRoundTrips) {
    oracle::MatrixGenerator gen(7, 30, 4);
    for (int n = 0; n < 500; ++n) {
        Scalar s = gen.scalar();
        if (n % 3 == 0) s *= Scalar::parameter("a_1", n % 5 - 2);
        ASSERT_EQ(parse_scalar(s.to_string()), s) << s;
    }
}

TEST(ParseMatrix, Inline) {
    const auto M = weyl::parse_matrix("t, 1; t^-1, -1");
    ASSERT_EQ(M.rank(), 2u);
    EXPECT_EQ(M(1, 0), Scalar::parameter("t", -1));
    EXPECT_EQ(M(1, 1), Scalar::minus_one());
    EXPECT_EQ(weyl::parse_matrix("u(1/3)").rank(), 1u);
}

TEST(ParseMatrix, InlineErrors) {
    EXPECT_THROW(weyl::parse_matrix("t, 1; t"), weyl::parse_error);
    EXPECT_THROW(weyl::parse_matrix("t, 1"), weyl::parse_error);
    try {
        weyl::parse_matrix("t, 1; 2, t");
        FAIL();
    } catch (const weyl::parse_error& e) {
        EXPECT_EQ(e.position(), 6u);
    }
}

TEST(ParseMatrix, PrintedMatricesReparse) {
    oracle::MatrixGenerator gen(11, 30, 2);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int k = 0; k < 50; ++k) {
            const auto M = gen.matrix(n);
            ASSERT_EQ(weyl::parse_matrix(M.to_string()), M);
            ASSERT_EQ(weyl::matrix_from_json(weyl::to_json(M)), M);
        }
}

TEST(ParseMatrix, Document) {
    const auto M = weyl::parse_matrix_document(R"j({"rank": 2, "entries": ["t", "1", "t^-1", "u(1/2)"]})j");
    EXPECT_EQ(M, weyl::parse_matrix("t,1;t^-1,u(1/2)"));
    EXPECT_THROW(weyl::parse_matrix_document(R"j({"rank": 2, "entries": ["t"]})j"), weyl::parse_error);
    EXPECT_THROW(weyl::parse_matrix_document(R"j({"entries": []})j"), weyl::parse_error);
    EXPECT_THROW(weyl::parse_matrix_document(R"j({"rank": 1, "entries": ["3"]})j"), weyl::parse_error);
    EXPECT_THROW(weyl::parse_matrix_document("{not json"), weyl::parse_error);
}
