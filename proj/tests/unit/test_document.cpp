#include <doctest.h>

#include <composita/document.hpp>
#include <composita/error.hpp>
#include <composita/evaluate.hpp>
#include <composita/parser.hpp>

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

using namespace composita;

namespace {

template <typename Fn>
errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const gf_error& e) {
    return e.code();
  }
  FAIL("expected gf_error");
  return errc::invalid_parameter;
}

OutputDocument sample_sequence() {
  return OutputDocument::from_series(
      TruncatedSeries(std::vector<Rational>{1, make_rational(-1, 2), 0, make_rational(5, 3)}),
      "1 - (1/2)*x + (5/3)*x^3");
}

OutputDocument sample_triangle() {
  return OutputDocument::from_triangle(
      evaluate_composita(*parse_expression("2*log1p(x) - x"), 4), "2*log1p(x) - x");
}

}  // namespace

TEST_CASE("from_series captures order, expression and coefficients") {
  const OutputDocument doc = sample_sequence();
  CHECK(doc.kind == OutputDocument::Kind::sequence);
  CHECK(doc.order == 3);
  CHECK(doc.expr == "1 - (1/2)*x + (5/3)*x^3");
  CHECK(doc.coefficients ==
        std::vector<Rational>{1, make_rational(-1, 2), 0, make_rational(5, 3)});
  CHECK(doc.rows.empty());
}

TEST_CASE("from_triangle captures every row") {
  const OutputDocument doc = sample_triangle();
  CHECK(doc.kind == OutputDocument::Kind::triangle);
  CHECK(doc.order == 4);
  REQUIRE(doc.rows.size() == 4);
  CHECK(doc.rows[0] == std::vector<Rational>{1});
  CHECK(doc.rows[1] == std::vector<Rational>{-1, 1});
  CHECK(doc.rows[2] == std::vector<Rational>{make_rational(2, 3), -2, 1});
  CHECK(doc.rows[3] == std::vector<Rational>{make_rational(-1, 2), make_rational(7, 3), -3, 1});
}

TEST_CASE("json keeps exact values as strings") {
  const OutputDocument seq = OutputDocument::from_series(x_series(1), "x");
  CHECK(seq.to_json() ==
        R"({"coefficients":[["0","0"],["1","1"]],"expr":"x","kind":"sequence","order":1})");

  const OutputDocument tri =
      OutputDocument::from_triangle(evaluate_composita(*parse_expression("x"), 2), "x");
  CHECK(tri.to_json() == R"({"expr":"x","kind":"triangle","order":2,"rows":[["1"],["0","1"]]})");

  // a third-party reader sees plain strings, nothing numeric
  const nlohmann::json j = nlohmann::json::parse(sample_sequence().to_json());
  CHECK(j.at("kind") == "sequence");
  CHECK(j.at("order") == 3);
  for (const auto& pair : j.at("coefficients")) {
    CHECK(pair.size() == 2);
    CHECK(pair.at(0).is_string());
    CHECK(pair.at(1).is_string());
  }
  CHECK(j.at("coefficients").at(1).at(1) == "-1/2");
}

TEST_CASE("json round trips both document kinds") {
  const OutputDocument seq = sample_sequence();
  CHECK(OutputDocument::from_json(seq.to_json()) == seq);

  const OutputDocument tri = sample_triangle();
  CHECK(OutputDocument::from_json(tri.to_json()) == tri);
}

TEST_CASE("from_json rejects malformed documents") {
  CHECK(code_of([] { OutputDocument::from_json("{nope"); }) == errc::invalid_parameter);
  CHECK(code_of([] { OutputDocument::from_json(R"({"kind":"matrix","order":1})"); }) ==
        errc::invalid_parameter);
  CHECK(code_of([] { OutputDocument::from_json(R"({"order":1,"coefficients":[]})"); }) ==
        errc::invalid_parameter);  // kind missing
  CHECK(code_of([] {
          OutputDocument::from_json(R"({"kind":"sequence","order":1,"coefficients":[["1","1"]]})");
        }) == errc::invalid_parameter);  // indices must start at 0
  CHECK(code_of([] {
          OutputDocument::from_json(
              R"({"kind":"sequence","order":1,"coefficients":[["0","1"],["0","2"]]})");
        }) == errc::invalid_parameter);  // duplicate index
  CHECK(code_of([] {
          OutputDocument::from_json(R"({"kind":"sequence","order":0,"coefficients":[["0",7]]})");
        }) == errc::invalid_parameter);  // value must be a string
  CHECK(code_of([] {
          OutputDocument::from_json(R"({"kind":"triangle","order":1,"rows":[["1/"]]})");
        }) == errc::invalid_parameter);  // value must parse as a rational
}

TEST_CASE("csv output is exact") {
  CHECK(OutputDocument::from_series(
            TruncatedSeries(std::vector<Rational>{1, make_rational(-1, 2)}), "f")
            .to_csv() == "n,value\n0,1\n1,-1/2\n");

  const OutputDocument tri =
      OutputDocument::from_triangle(evaluate_composita(*parse_expression("x + x^2"), 3), "x + x^2");
  CHECK(tri.to_csv() == "n,k,value\n1,1,1\n2,1,1\n2,2,1\n3,1,0\n3,2,2\n3,3,1\n");
}

TEST_CASE("table output is aligned") {
  CHECK(OutputDocument::from_series(
            TruncatedSeries(std::vector<Rational>{1, make_rational(-1, 2)}), "f")
            .to_table() == "a(0) = 1\na(1) = -1/2\n");

  CHECK(sample_triangle().to_table() ==
        "   1\n"
        "  -1     1\n"
        " 2/3    -2     1\n"
        "-1/2   7/3    -3     1\n");
}

TEST_CASE("render dispatches on the format name") {
  const OutputDocument doc = sample_sequence();
  CHECK(doc.render("table") == doc.to_table());
  CHECK(doc.render("json") == doc.to_json());
  CHECK(doc.render("csv") == doc.to_csv());
  CHECK(code_of([&] { doc.render("yaml"); }) == errc::invalid_parameter);
}

TEST_CASE("cli_exit_code maps error classes to exit codes") {
  CHECK(cli_exit_code(syntax_error(3, "a factor", "unexpected ')'")) == 2);
  CHECK(cli_exit_code(gf_error(errc::residual_nonzero, "candidate disagrees")) == 4);
  CHECK(cli_exit_code(gf_error(errc::zero_constant_term, "inv of zero")) == 3);
  CHECK(cli_exit_code(gf_error(errc::nonzero_constant, "rev of nonzero")) == 3);
  CHECK(cli_exit_code(gf_error(errc::invalid_parameter, "bad rows")) == 3);
  CHECK(cli_exit_code(std::runtime_error("io failure")) == 1);
  CHECK(cli_exit_code(std::logic_error("oops")) == 1);
}
