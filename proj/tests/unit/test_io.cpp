#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <bit>
#include <limits>

#include "avecond/error.hpp"
#include "avecond/io.hpp"
#include "generators.hpp"

namespace avecond {
namespace {

TEST(ParseMatrix, WorkedValues) {
  EXPECT_EQ(parse_matrix("2 2\n3 -1\n-1 3\n"), (Matrix{{3, -1}, {-1, 3}}));
  EXPECT_EQ(parse_vector("2\n1 1\n"), (Vector{1, 1}));
}

TEST(ParseMatrix, AcceptsFlexibleWhitespaceAndNotation) {
  EXPECT_EQ(parse_matrix("1 3\n1e2 +2.5 -3E-1"), (Matrix{{100, 2.5, -0.3}}));
  EXPECT_EQ(parse_matrix("2 2 1 2\n\n3\t4\r\n"), (Matrix{{1, 2}, {3, 4}}));
  EXPECT_EQ(parse_vector("3 0.5 -0 7"), (Vector{0.5, -0.0, 7}));
}

TEST(ParseMatrix, MissingEntryReportsPosition) {
  try {
    parse_matrix("2 2\n3 -1\n-1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_EQ(e.line(), 4U);
  }
}

TEST(ParseMatrix, BadTokensReportLineAndColumn) {
  try {
    parse_matrix("2 2\n3 x\n1 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_EQ(e.column(), 3U);
  }
  EXPECT_THROW(parse_matrix("2 2\n1 2 3 nan\n"), ParseError);
  EXPECT_THROW(parse_matrix("2 2\n1 2 3 inf\n"), ParseError);
  EXPECT_THROW(parse_matrix("0 2\n"), ParseError);
  EXPECT_THROW(parse_matrix("2\n2\n1 2 3 4\n"), ParseError);
  EXPECT_THROW(parse_matrix("-2 2\n"), ParseError);
  EXPECT_THROW(parse_matrix(""), ParseError);
  EXPECT_THROW(parse_vector("2.5\n1 2\n"), ParseError);
  EXPECT_THROW(parse_vector("2\n1 2,\n"), ParseError);
}

TEST(ParseMatrix, SurplusEntriesAreDimensionMismatch) {
  try {
    parse_matrix("1 1\n1 2\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
  try {
    parse_vector("1\n1 2\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Format, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(-2.5e-300), "-2.5e-300");
  EXPECT_EQ(format_vector(Vector{1, 0.5}), "2\n1 0.5\n");
  EXPECT_EQ(format_matrix(Matrix{{3, -1}, {-1, 3}}), "2 2\n3 -1\n-1 3\n");
}

TEST(Format, BitExactRoundTripOnRandomValues) {
  testing::Rng rng(91);
  std::uniform_int_distribution<int> exponent(-300, 300);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = testing::dim(rng, 1, 6);
    const std::size_t cols = testing::dim(rng, 1, 6);
    Matrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        a(i, j) = testing::uniform(rng, -1, 1) * std::pow(10.0, exponent(rng));
    a(0, 0) = std::numeric_limits<double>::denorm_min();
    const Matrix back = parse_matrix(format_matrix(a));
    ASSERT_EQ(back.rows(), rows);
    for (std::size_t k = 0; k < rows * cols; ++k) {
      EXPECT_EQ(std::bit_cast<std::uint64_t>(back.data()[k]), std::bit_cast<std::uint64_t>(a.data()[k]));
    }
    const Vector v = a.row(0).size() ? Vector(a.row(0).begin(), a.row(0).end()) : Vector{};
    EXPECT_EQ(parse_vector(format_vector(v)), v);
  }
}

TEST(Files, ReadBackWrittenFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "avecond_io_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "a.txt") << format_matrix(Matrix{{1, 2}, {3, 4}});
    std::ofstream(dir / "b.txt") << format_vector(Vector{5, 6});
  }
  EXPECT_EQ(read_matrix(dir / "a.txt"), (Matrix{{1, 2}, {3, 4}}));
  EXPECT_EQ(read_vector(dir / "b.txt"), (Vector{5, 6}));
  try {
    read_matrix(dir / "missing.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace avecond
