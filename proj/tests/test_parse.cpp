#include "doctest.h"

#include "qu2/errors.hpp"
#include "qu2/parse.hpp"

using namespace qu2;

namespace {

std::size_t error_position(const char* text) {
  try {
    parse_element(text);
  } catch (const UsageError& e) {
    return e.position();
  }
  return UsageError::npos;
}

}  // namespace

TEST_CASE("atoms") {
  CHECK(to_string(parse_element("U")) == "U");
  CHECK(to_string(parse_element("U^-4")) == "U^-4");
  CHECK(to_string(parse_element("U*")) == "U^-1");
  CHECK(to_string(parse_element("S[112] U^3 S*[21]")) == "S[112] U^3 S*[21]");
  CHECK(to_string(parse_element("S[2]")) == "S[2]");
  CHECK(to_string(parse_element("S2*")) == "S*[2]");
  CHECK(to_string(parse_element("1")) == "1");
  CHECK(to_string(parse_element("0")) == "0");
  CHECK(to_string(parse_element("P[12]")) == "S[12] S*[12]");
  CHECK(to_string(parse_element("S[e]")) == "1");
  CHECK(to_string(parse_element("S1")) == "S[1]");
}

TEST_CASE("sums, coefficients and postfix operators") {
  CHECK(to_string(parse_element("3/2*S[1] - U")) == "-U + 3/2*S[1]");
  CHECK(to_string(parse_element("-U + 2 U")) == "U");
  CHECK(to_string(parse_element("(S1 U)*")) == "U^-1 S*[1]");
  CHECK(to_string(parse_element("(U + U)^2")) == "4*U^2");
  CHECK(to_string(parse_element("phi^0(U)")) == "U");
  CHECK(to_string(parse_element("phi(1)")) == "S[1] S*[1] + S[2] S*[2]");
  CHECK(to_string(parse_element("U U")) == "U^2");
  CHECK(to_string(parse_element("S1 S2*")) == "S[1] S*[2]");
  CHECK(to_string(parse_element("(U)^-2")) == "U^-2");
}

TEST_CASE("errors carry the position") {
  CHECK(error_position("U + ") == 4);
  CHECK(error_position("U ? U") == 2);
  CHECK(error_position("S[13]") == 3);
  CHECK(error_position("S3") == 1);
  CHECK(error_position("(U") == 2);
  CHECK(error_position("U^x") == 2);
  CHECK(error_position("1/0") == 0);
  CHECK(error_position("Q") == 0);
}
