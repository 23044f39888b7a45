#include <doctest.h>

#include "wendroff/errors.hpp"
#include "wendroff/serialize.hpp"

using namespace wendroff;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

WendroffSequence example() {
  WendroffConfig c;
  c.n = 5;
  c.k = 5;
  c.params = UltraParams::make(q(-5, 4));
  c.radius = interval_radius(c.params, radius::Auto{});
  return build(c);
}

}  // namespace

TEST_CASE("polynomial JSON") {
  const Polynomial p({1, 0, q(-12, 7), 0, q(4, 7)});
  const auto j = polynomial_to_json(p);
  CHECK(j.dump() == R"({"degree":4,"coeffs":["1","0","-12/7","0","4/7"]})");
  CHECK(polynomial_from_json(j) == p);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"degree":3,"coeffs":["1","0"]})")),
                  ParameterError);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"degree":1,"coeffs":["1","0.5"]})")),
                  ParameterError);
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"degree":1,"coeffs":[1,0]})")),
                  ParameterError);
}

TEST_CASE("sequence JSON round trip") {
  const auto seq = example();
  const auto j = sequence_to_json(seq);
  CHECK(j.at("a") == "2");
  CHECK(j.at("config").at("lambda") == "-5/4");
  CHECK(j.at("config").at("a_mode") == "A2");
  CHECK(j.at("ells").at("6") == "21/17");
  CHECK(j.at("polys").size() == 11);
  CHECK(j.at("polys")[10].at("coeffs")[10] == "-12/17");

  const auto back = sequence_from_json(Json::parse(j.dump()));
  CHECK(back.polys == seq.polys);
  CHECK(back.ells == seq.ells);
  CHECK(back.a == seq.a);
  CHECK(back.config.n == 5);
  CHECK(back.config.params.lambda() == q(-5, 4));
  CHECK(sequence_to_json(back).dump() == j.dump());

  auto broken = j;
  broken["polys"].erase(broken["polys"].size() - 1);
  CHECK_THROWS_AS(sequence_from_json(broken), ParameterError);
  CHECK_THROWS_AS(sequence_from_json(Json::parse("{}")), ParameterError);
}

TEST_CASE("root and report exports") {
  const auto seq = example();
  const auto z5 = solve(seq.polys[5], q(1, 1000000), "D5");
  const auto j = rootset_to_json(z5);
  CHECK(j.at("real_count") == 5);
  CHECK(j.at("roots")[2].at("value") == "0");
  CHECK(j.at("roots")[2].at("exact") == true);
  CHECK(j.at("roots")[4].at("decimal") == "1.41421");

  const auto csv = roots_csv({{5, z5}});
  CHECK(csv.rfind("degree,index,value,radius,exact\n", 0) == 0);
  CHECK(csv.find("5,2,-1,0,true\n") != std::string::npos);
  CHECK(csv.find("5,5,1.41421,") != std::string::npos);

  const auto report = verify_sequence(seq, q(1, 1000000));
  const auto rj = report_to_json(report);
  CHECK(rj.at("overall") == true);
  CHECK(rj.at("summary") == "OK: 11/11 degrees verified");
  CHECK(rj.at("degrees").size() == 11);

  const auto p = UltraParams::make(q(-5, 4));
  const auto cmp = compare(6, solve(seq.polys[6], q(1, 1000000)), solve(ultraspherical(6, p), q(1, 1000000)));
  const auto cj = comparison_to_json(cmp);
  CHECK(cj.at("degree") == 6);
  CHECK(cj.at("zeros_D")[5] == "1.7026");
  const auto ccsv = comparison_csv(cmp);
  CHECK(ccsv.rfind("index,zero_D,zero_C,delta\n", 0) == 0);
  CHECK(std::count(ccsv.begin(), ccsv.end(), '\n') == 1 + static_cast<long>(cmp.pairs.size()));
}
