#include "totpos/io.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "gtest/gtest.h"

namespace totpos {

TEST(Csv, WritesTransferMatrices) {
  EXPECT_EQ(io::to_csv(build_w(4).entries), "1,4,6,4\n0,1,3,2\n");
  EXPECT_EQ(io::to_csv(build_m(1).entries), "2\n");
}

TEST(Csv, ReadsIntegersAndRationals) {
  std::istringstream in("1, 2/4\n-3,4\n\n");
  const auto m = io::read_csv_matrix(in);
  ASSERT_EQ(m.rows(), 2);
  ASSERT_EQ(m.cols(), 2);
  EXPECT_EQ(m(0, 1), Rational(1, 2));
  EXPECT_EQ(m(1, 0), -3);
}

TEST(Csv, RejectsMalformedInput) {
  std::istringstream ragged("1,2\n3\n");
  EXPECT_THROW(io::read_csv_matrix(ragged), std::invalid_argument);
  std::istringstream empty("");
  EXPECT_THROW(io::read_csv_matrix(empty), std::invalid_argument);
  std::istringstream junk("1,a\n");
  EXPECT_THROW(io::read_csv_matrix(junk), std::invalid_argument);
  std::istringstream zero("1/0\n");
  EXPECT_THROW(io::read_csv_matrix(zero), std::domain_error);
}

TEST(Csv, RoundTripsRandomRationalMatrices) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 9), dim(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    RationalMatrix m(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = make_rational(num(rng), den(rng));
    }
    std::istringstream in(io::to_csv(m));
    const auto back = io::read_csv_matrix(in);
    ASSERT_EQ(back.rows(), m.rows());
    ASSERT_EQ(back.cols(), m.cols());
    ASSERT_TRUE(back == m);
  }
}

TEST(Json, MatrixSchema) {
  EXPECT_EQ(io::to_json(build_m(3)).dump(), R"({"d":3,"rows":[[4,6,4],[1,3,2]]})");
  EXPECT_EQ(io::to_json(build_w(3)).dump(), R"({"n":3,"rows":[[1,3,3],[0,1,1]]})");
  const auto back = io::read_json_matrix(io::to_json(build_w(5)));
  EXPECT_TRUE(back == build_w(5).entries.cast<Rational>());
}

TEST(Json, ReadsStringEntriesAndRejectsFloats) {
  const auto m = io::read_json_matrix(nlohmann::json::parse(R"({"rows":[["1/3", 2]]})"));
  EXPECT_EQ(m(0, 0), Rational(1, 3));
  EXPECT_THROW(io::read_json_matrix(nlohmann::json::parse(R"({"rows":[[1.5]]})")),
               std::invalid_argument);
  EXPECT_THROW(io::read_json_matrix(nlohmann::json::parse(R"({"cols":[]})")),
               std::invalid_argument);
}

TEST(Json, LargeIntegersBecomeStrings) {
  EXPECT_EQ(io::json_number(Integer(42)), nlohmann::json(42));
  EXPECT_EQ(io::json_number(binomial(100, 50)), nlohmann::json("100891344545564193334812497256"));
  EXPECT_EQ(io::json_number(Rational(3, 6)), nlohmann::json("1/2"));
  const auto back = io::read_json_matrix({{"rows", {{io::json_number(binomial(100, 50))}}}});
  EXPECT_EQ(back(0, 0), Rational(binomial(100, 50)));
}

TEST(Json, TnnReportSchema) {
  RationalMatrix m(2, 2);
  m << 1, 2, 3, 4;
  const auto doc = io::to_json(is_totally_nonnegative(m));
  EXPECT_EQ(doc.dump(),
            R"({"is_tnn":false,"min_minor":-2,"minors_checked":5,)"
            R"("witness":{"cols":[0,1],"rows":[0,1],"value":-2}})");
  const auto ok = io::to_json(is_totally_nonnegative(build_m(2).entries));
  EXPECT_TRUE(ok["is_tnn"].get<bool>());
  EXPECT_TRUE(ok["witness"].is_null());
}

TEST(Json, VerdictSchemas) {
  std::vector<Integer> seq{1, 2, 4};
  EXPECT_EQ(io::to_json(is_m_sequence(seq)).dump(),
            R"({"boundary_value":3,"is_m_sequence":false,"previous":2,"witness_k":2})");
  IntegerRowVector f(3);
  f << 4, 6, 5;
  const auto verdict = io::to_json(is_polytopal_f(FVector(3, f)));
  EXPECT_FALSE(verdict["pass"].get<bool>());
  EXPECT_EQ(verdict["failed_condition"], "euler");
  EXPECT_TRUE(verdict["witness"].is_null());
  EXPECT_EQ(verdict["n"], 4);
}

TEST(Json, GraphSchema) {
  const auto doc = io::to_json(build_t(2));
  EXPECT_EQ(doc["n"], 2);
  EXPECT_EQ(doc["vertices"].dump(), "[[0,0],[0,1]]");
  EXPECT_EQ(doc["arcs"].dump(), R"([{"from":[0,0],"to":[0,1],"weight_den":1,"weight_num":2}])");
  EXPECT_EQ(doc["sources"].dump(), "[[0,0]]");
  const auto t5 = io::to_json(build_t(5));
  EXPECT_EQ(t5["arcs"].size(), build_t(5).arcs().size());
}

TEST(MatrixFile, DetectsFormat) {
  const std::string csv = ::testing::TempDir() + "totpos_io_test.csv";
  const std::string json = ::testing::TempDir() + "totpos_io_test.json";
  std::ofstream(csv) << "1,2\n3,4\n";
  std::ofstream(json) << "  {\"rows\": [[1, 2], [3, 4]]}";
  EXPECT_TRUE(io::read_matrix_file(csv) == io::read_matrix_file(json));
  EXPECT_THROW(io::read_matrix_file(::testing::TempDir() + "does/not/exist.csv"),
               std::runtime_error);
  std::remove(csv.c_str());
  std::remove(json.c_str());
}

TEST(Lists, ParseAndJoin) {
  const auto v = io::parse_integer_list("1,4, 10,20");
  EXPECT_EQ(io::join(v), "1,4,10,20");
  EXPECT_THROW(io::parse_integer_list("1,,2"), std::invalid_argument);
  EXPECT_THROW(io::parse_integer_list(""), std::invalid_argument);
}

}  // namespace totpos
