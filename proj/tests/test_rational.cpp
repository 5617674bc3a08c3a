#include <doctest.h>

#include "milnor/rational.hpp"

using namespace milnor;

TEST_CASE("rational arithmetic is canonical") {
  Rational a(2, 4);
  CHECK(a == Rational(1, 2));
  CHECK(to_string(a) == "1/2");
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(Rational(-4, 2)) == "-2");
}

TEST_CASE("parse_rational accepts the file grammar only") {
  CHECK(*parse_rational("3/4") == Rational(3, 4));
  CHECK(*parse_rational("-3/4") == Rational(-3, 4));
  CHECK(*parse_rational("12") == Rational(12));
  CHECK(*parse_rational("-12") == Rational(-12));
  CHECK(*parse_rational("0") == 0);
  CHECK(*parse_rational("6/4") == Rational(3, 2));

  CHECK(!parse_rational(""));
  CHECK(!parse_rational("-"));
  CHECK(!parse_rational("1/0"));
  CHECK(!parse_rational("1/-2"));
  CHECK(!parse_rational("0.5"));
  CHECK(!parse_rational("+1"));
  CHECK(!parse_rational("1/"));
  CHECK(!parse_rational("/2"));
  CHECK(!parse_rational(" 1"));
  CHECK(!parse_rational("1 "));
  CHECK(!parse_rational("1/2/3"));
  CHECK(!parse_rational("a"));
}

TEST_CASE("parse and print round-trip") {
  for (const char* s : {"0", "1", "-1", "22/7", "-22/7", "100000000000000000001/3"}) {
    auto r = parse_rational(s);
    REQUIRE(r);
    CHECK(to_string(*r) == s);
  }
}

TEST_CASE("exact_sqrt finds rational roots and only those") {
  CHECK(*exact_sqrt(Rational(0)) == 0);
  CHECK(*exact_sqrt(Rational(1)) == 1);
  CHECK(*exact_sqrt(Rational(4, 9)) == Rational(2, 3));
  CHECK(*exact_sqrt(Rational(225)) == 15);
  CHECK(*exact_sqrt(Rational(1, 4)) == Rational(1, 2));
  CHECK(!exact_sqrt(Rational(2)));
  CHECK(!exact_sqrt(Rational(1, 2)));
  CHECK(!exact_sqrt(Rational(8, 9)));
  CHECK(!exact_sqrt(Rational(-1)));
  CHECK(!exact_sqrt(Rational(-4)));
}

TEST_CASE("sign and double conversion helpers") {
  CHECK(sign_of(Rational(3, 7)) == 1);
  CHECK(sign_of(Rational(-3, 7)) == -1);
  CHECK(sign_of(Rational(0)) == 0);
  CHECK(to_double(Rational(1, 2)) == 0.5);
  CHECK(to_double(Rational(-7, 4)) == -1.75);
}
