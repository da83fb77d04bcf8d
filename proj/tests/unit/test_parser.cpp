#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "borelgin/errors.hpp"
#include "borelgin/parser.hpp"

using namespace borelgin;

namespace {

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column, const std::string& what) {
  try {
    parse_ideal(text);
    ADD_FAILURE() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
    EXPECT_NE(std::string(e.what()).find(what), std::string::npos) << e.what();
  }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Parser, SpaceCurveExample) {
  IdealSource s = parse_ideal(
      "ring x1,x2,x3,x4; char 32003;\n"
      "ideal x3^3-x1*x4^2, x1^2*x3^2-x2^3*x4, x2^3*x3-x1^3*x4, x2^6-x1^5*x3;\n");
  ASSERT_EQ(s.generators.size(), 4u);
  std::vector<int> degrees;
  for (const Polynomial& f : s.generators) degrees.push_back(f.degree());
  EXPECT_EQ(degrees, (std::vector<int>{3, 4, 4, 6}));
  EXPECT_EQ(s.variables, (std::vector<std::string>{"x1", "x2", "x3", "x4"}));
  EXPECT_EQ(s.field, Field::prime());
}

TEST(Parser, ChardinDCruzGenerators) {
  IdealSource s = parse_ideal("ring x,y,z,t; ideal x^4*t - y^4*z, z^6 - x*t^5;");
  ASSERT_EQ(s.generators.size(), 2u);
  EXPECT_EQ(s.generators[0].degree(), 5);
  EXPECT_EQ(s.generators[1].degree(), 6);
}

TEST(Parser, ZeroIdealAndComments) {
  IdealSource s = parse_ideal("# nothing here\nring a,b,c; # three variables\nideal 0;");
  EXPECT_TRUE(s.generators.empty());
  EXPECT_EQ(s.ring().nvars, 3);
}

TEST(Parser, Arithmetic) {
  const std::vector<std::string> v{"x", "y", "z"};
  const Field q = Field::rationals();
  EXPECT_EQ(parse_polynomial("(x+y)^2 - x*(x + 2*y)", v, q), parse_polynomial("y^2", v, q));
  EXPECT_EQ(parse_polynomial("x/2 - -y", v, q), parse_polynomial("1/2*x + y", v, q));
  EXPECT_EQ(parse_polynomial("3*x - 32006*x", v, Field::prime()), parse_polynomial("0", v, Field::prime()));
  EXPECT_THROW(parse_polynomial("x/y", v, q), ParseError);
  EXPECT_THROW(parse_polynomial("x/0", v, q), ParseError);
}

TEST(Parser, CharacteristicAndOverride) {
  EXPECT_EQ(parse_ideal("ring x,y; char 0; ideal x*y;").field, Field::rationals());
  EXPECT_EQ(parse_ideal("ring x,y; char 101; ideal x*y;").field, Field::prime(101));
  EXPECT_EQ(parse_ideal("ring x,y; ideal x*y;", Field::rationals()).field, Field::rationals());
}

TEST(Parser, MetadataStatements) {
  IdealSource s = parse_ideal(
      "label ci444;\nring x,y,z,t;\nscheme ci 4,4,4 seed 21;\nscheme hypersurface_points 81 degree 2 seed 8;\n"
      "run reduction --s 2;\nexpect reduction.value 4;\nexpect gin.generators [\"x^2\"];\n");
  EXPECT_EQ(s.label, "ci444");
  ASSERT_EQ(s.schemes.size(), 2u);
  EXPECT_EQ(s.schemes[0].kind, "ci");
  EXPECT_EQ(s.schemes[0].args, (std::vector<unsigned>{4, 4, 4}));
  EXPECT_EQ(s.schemes[0].seed, 21u);
  EXPECT_EQ(s.schemes[1].args, (std::vector<unsigned>{81, 2}));
  EXPECT_EQ(s.run, (std::vector<std::string>{"reduction", "--s", "2"}));
  ASSERT_EQ(s.expectations.size(), 2u);
  EXPECT_EQ(s.expectations[0].key, "reduction.value");
  EXPECT_EQ(s.expectations[0].value, "4");
  EXPECT_EQ(s.expectations[1].value, "[\"x^2\"]");
}

TEST(ParserErrors, PositionsAreReported) {
  expect_parse_error("ring x,y;\nideal x^2 - y;", 2, 7, "inhomogeneous generator");
  expect_parse_error("ring x,y;\nideal x*w;", 2, 9, "unknown variable 'w'");
  expect_parse_error("ring x,y;\nideal x*;", 2, 9, "unexpected end of expression");
  expect_parse_error("ring x,x;", 1, 8, "declared twice");
  expect_parse_error("ideal x;", 1, 1, "ideal before ring");
  expect_parse_error("ring x,y;\n  ideal x", 2, 3, "missing ';'");
  expect_parse_error("ring x;\nchar 100;", 2, 6, "prime");
  expect_parse_error("ring x;\nfoo 1;", 2, 1, "unknown statement 'foo'");
  expect_parse_error("ring x,y;\nideal (x+y;", 2, 11, "expected ')'");
  expect_parse_error("ring x;\nexpect a.b {;", 2, 12, "not valid JSON");
  expect_parse_error("ring x;\nscheme lines 3;", 2, 8, "unknown scheme kind");
}

TEST(Parser, MissingRing) { EXPECT_THROW(parse_ideal("char 0;"), ParseError); }

TEST(Parser, RoundTrip) {
  const std::string text =
      "label demo;\nring x,y,z,t;\nchar 32003;\nideal 2*x^2 - y*z, x*t^3 + z^4;\n"
      "scheme points 5 seed 3;\nrun hilbert --tmax 8;\nexpect hilbert.values [1,4];\n";
  IdealSource a = parse_ideal(text);
  IdealSource b = parse_ideal(emit_source(a));
  EXPECT_EQ(a, b);
  EXPECT_EQ(emit_source(a), emit_source(b));
}

TEST(Parser, CorpusRoundTrips) {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(BORELGIN_CORPUS_DIR)) {
    if (entry.path().extension() != ".ideal") continue;
    const std::string text = slurp(entry.path());
    if (text.find("expect exit 2;") != std::string::npos) {
      EXPECT_THROW(parse_ideal(text), ParseError) << entry.path();
      continue;
    }
    ++seen;
    IdealSource a = parse_ideal(text);
    IdealSource b = parse_ideal(emit_source(a));
    EXPECT_EQ(a, b) << entry.path();
  }
  EXPECT_GT(seen, 0);
}
