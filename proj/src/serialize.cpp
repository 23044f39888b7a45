#include "wendroff/serialize.hpp"

#include <sstream>

#include "wendroff/errors.hpp"

namespace wendroff {

namespace {

Rational rational_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw ParameterError(std::string("missing fraction string field '") + key + "'");
  }
  try {
    return Rational::parse(j.at(key).get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParameterError(std::string("field '") + key + "': " + e.what());
  }
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParameterError(std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

}  // namespace

Json polynomial_to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return Json{{"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
    throw ParameterError("polynomial JSON needs a 'coeffs' array");
  }
  std::vector<Rational> c;
  for (const auto& v : j.at("coeffs")) {
    if (!v.is_string()) throw ParameterError("coefficients must be fraction strings");
    try {
      c.push_back(Rational::parse(v.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ParameterError(e.what());
    }
  }
  const int stated = int_field(j, "degree");
  Polynomial p(std::move(c));
  if (p.degree() != stated) {
    throw ParameterError("stated degree " + std::to_string(stated) + " but coefficients give " +
                         std::to_string(p.degree()));
  }
  return p;
}

Json sequence_to_json(const WendroffSequence& seq) {
  const auto& cfg = seq.config;
  Json config{{"n", cfg.n},
              {"k", cfg.k},
              {"lambda", cfg.params.lambda().str()},
              {"sigma", cfg.sigma.str()},
              {"a_mode", to_string(cfg.radius.mode)},
              {"a_slack", cfg.radius.slack.str()},
              {"tol", cfg.tol.str()}};
  if (!cfg.upward_ells.empty()) {
    Json ups = Json::array();
    for (const auto& e : cfg.upward_ells) ups.push_back(e.str());
    config["upward_ells"] = std::move(ups);
  }
  if (cfg.allow_degenerate) config["allow_degenerate"] = true;

  Json ells = Json::object();
  for (const auto& [m, ell] : seq.ells) ells[std::to_string(m)] = ell.str();
  Json polys = Json::array();
  for (const auto& p : seq.polys) polys.push_back(polynomial_to_json(p));
  return Json{{"config", std::move(config)},
              {"a", seq.a.str()},
              {"ells", std::move(ells)},
              {"polys", std::move(polys)}};
}

WendroffSequence sequence_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("config") || !j.contains("polys") || !j.contains("ells")) {
    throw ParameterError("sequence JSON needs 'config', 'ells' and 'polys'");
  }
  const Json& c = j.at("config");
  WendroffConfig cfg;
  cfg.n = int_field(c, "n");
  cfg.k = int_field(c, "k");
  cfg.params = UltraParams::make(rational_field(c, "lambda"));
  cfg.sigma = rational_field(c, "sigma");
  cfg.tol = rational_field(c, "tol");
  const Rational a = rational_field(j, "a");
  cfg.radius = {a,
                c.contains("a_mode") ? radius_mode_from_string(c.at("a_mode").get<std::string>())
                                     : RadiusMode::Explicit,
                c.contains("a_slack") ? rational_field(c, "a_slack") : Rational(0)};
  if (c.contains("upward_ells")) {
    for (const auto& v : c.at("upward_ells")) cfg.upward_ells.push_back(Rational::parse(v.get<std::string>()));
  }
  cfg.allow_degenerate = c.value("allow_degenerate", false);
  cfg.validate();

  WendroffSequence seq;
  seq.config = std::move(cfg);
  seq.a = a;
  for (const auto& [key, value] : j.at("ells").items()) {
    int m = 0;
    try {
      m = std::stoi(key);
    } catch (const std::exception&) {
      throw ParameterError("bad ells key '" + key + "'");
    }
    if (!value.is_string()) throw ParameterError("ells values must be fraction strings");
    seq.ells[m] = Rational::parse(value.get<std::string>());
  }
  for (const auto& p : j.at("polys")) seq.polys.push_back(polynomial_from_json(p));
  if (seq.top_degree() != seq.config.n + seq.config.k) {
    throw ParameterError("expected " + std::to_string(seq.config.n + seq.config.k + 1) +
                         " polynomials, got " + std::to_string(seq.polys.size()));
  }
  return seq;
}

Json rootset_to_json(const RootSet& set) {
  Json roots = Json::array();
  for (const auto& r : set.roots) {
    roots.push_back(Json{{"value", r.value.str()},
                         {"radius", r.radius.str()},
                         {"exact", r.exact},
                         {"decimal", format_significant(r.value)}});
  }
  return Json{{"poly", set.poly_id},
              {"tol", set.tol.str()},
              {"real_count", set.real_count()},
              {"sum_hint", set.sum_hint.str()},
              {"roots", std::move(roots)}};
}

Json report_to_json(const VerificationReport& report) {
  Json degrees = Json::array();
  for (const auto& d : report.degrees) {
    degrees.push_back(Json{{"degree", d.degree},
                           {"monic", d.monic},
                           {"symmetric", d.symmetric},
                           {"ell_positive", d.ell_positive},
                           {"recurrence_ok", d.recurrence_ok},
                           {"real_count_ok", d.real_count_ok},
                           {"contained_in_a", d.contained_in_a},
                           {"interlaces_predecessor", d.interlaces_predecessor}});
  }
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back(Json{{"degree", f.degree}, {"check", f.check}, {"detail", f.detail}});
  }
  return Json{{"overall", report.overall},
              {"summary", report.summary()},
              {"degrees", std::move(degrees)},
              {"failures", std::move(failures)}};
}

Json comparison_to_json(const ComparisonReport& report) {
  auto decimals = [](const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(format_significant(x));
    return out;
  };
  Json pairs = Json::array();
  for (const auto& p : report.pairs) {
    pairs.push_back(Json{{"index", p.index},
                         {"zero_D", format_significant(p.zero_d)},
                         {"zero_C", format_significant(p.zero_c)},
                         {"delta", format_significant(p.delta)}});
  }
  Json out{{"degree", report.degree},
           {"zeros_D", decimals(report.zeros_d)},
           {"zeros_C", decimals(report.zeros_c)},
           {"pairs", std::move(pairs)},
           {"max_delta", format_significant(report.max_delta)},
           {"count_mismatch", report.count_mismatch}};
  out["smallest_zero_delta"] =
      report.smallest_zero_delta ? Json(format_significant(*report.smallest_zero_delta)) : Json();
  out["largest_zero_delta"] =
      report.largest_zero_delta ? Json(format_significant(*report.largest_zero_delta)) : Json();
  return out;
}

std::string roots_csv(const std::vector<std::pair<int, RootSet>>& sets) {
  std::ostringstream out;
  out << "degree,index,value,radius,exact\n";
  for (const auto& [degree, set] : sets) {
    int index = 1;
    for (const auto& r : set.roots) {
      out << degree << ',' << index++ << ',' << format_significant(r.value) << ','
          << format_significant(r.radius) << ',' << (r.exact ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

std::string comparison_csv(const ComparisonReport& report) {
  std::ostringstream out;
  out << "index,zero_D,zero_C,delta\n";
  for (const auto& p : report.pairs) {
    out << p.index << ',' << format_significant(p.zero_d) << ',' << format_significant(p.zero_c)
        << ',' << format_significant(p.delta) << '\n';
  }
  return out.str();
}

}  // namespace wendroff
