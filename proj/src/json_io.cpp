#include "bqec/json_io.hpp"

#include "bqec/errors.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace bqec {

Json to_json(const Integer& z) { return z.get_str(); }

Json to_json(const Rational& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Json to_json(const Real& r) { return format_real(r, 30); }

Json to_json(const Curve& c) { return Json{{"a2", c.a2().get_str()}, {"b", c.b().get_str()}}; }

Json to_json(const Point& p) {
  if (p.is_identity())
    return Json{{"identity", true}};
  return Json{{"curve", to_json(p.curve())}, {"x", to_json(p.x())}, {"y", to_json(p.y())}};
}

Json to_json(const BivarPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back(Json{{"exp", {e.first, e.second}}, {"coef", c.get_str()}});
  return out;
}

Json to_json(const RatFunc& f) {
  return Json{{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}, {"pretty", f.pretty()}};
}

Json to_json(const HeightValue& h) {
  return Json{{"value", to_json(h.value)}, {"abs_error", format_real(h.abs_error, 6)}};
}

Json to_json(const RegulatorReport& r) {
  Json points = Json::array();
  for (const auto& p : r.gram.points)
    points.push_back(to_json(p));
  Json entries = Json::array();
  for (const auto& row : r.gram.entries) {
    Json jr = Json::array();
    for (const auto& v : row)
      jr.push_back(to_json(v));
    entries.push_back(std::move(jr));
  }
  return Json{{"points", std::move(points)},
              {"gram", std::move(entries)},
              {"entry_error", format_real(r.gram.entry_error, 6)},
              {"determinant", to_json(r.determinant)},
              {"error_bound", format_real(r.error_bound, 6)},
              {"tolerance", format_real(r.tolerance, 6)},
              {"independent", r.independent}};
}

Json to_json(const DescentReport& r) {
  Json e = Json::array(), e4 = Json::array();
  for (const auto& c : r.classes_E)
    e.push_back(c.to_string());
  for (const auto& c : r.classes_E4)
    e4.push_back(c.to_string());
  return Json{{"N", r.N.get_str()},
              {"bound", r.bound},
              {"classes_E", std::move(e)},
              {"classes_E4", std::move(e4)},
              {"s", r.s},
              {"s_prime", r.s_prime},
              {"rank_lower_bound", r.rank_lower_bound},
              {"solutions_E", r.solutions_E},
              {"solutions_E4", r.solutions_E4}};
}

Json to_json(const HomSpaceSolution& s) {
  return Json{{"d", s.d.get_str()}, {"u", s.u.get_str()}, {"v", s.v.get_str()},
              {"h", s.h.get_str()}};
}

Json to_json(const Representation& r) { return Json::array({r.a.get_str(), r.b.get_str()}); }

Json to_json(const TwinRecord& t) {
  Json reps = Json::array();
  for (const auto& r : t.reps)
    reps.push_back(to_json(r));
  return Json{{"N", t.N.get_str()}, {"reps", std::move(reps)},
              {"common_factor", t.common_factor.get_str()}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_string())
    return parse_integer(j.get<std::string>());
  if (j.is_number_integer())
    return Integer(std::to_string(j.get<long long>()), 10);
  throw ParseError("expected an integer (decimal string), got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("num") || !j.contains("den"))
      throw ParseError("rational object needs \"num\" and \"den\"");
    Integer den = integer_from_json(j.at("den"));
    if (den == 0)
      throw ParseError("rational with zero denominator");
    return make_rational(integer_from_json(j.at("num")), den);
  }
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(integer_from_json(j));
  throw ParseError("expected a rational, got " + j.dump());
}

Curve curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("b"))
    throw ParseError("curve object needs \"b\"");
  Integer a2 = j.contains("a2") ? integer_from_json(j.at("a2")) : Integer(0);
  try {
    return Curve(a2, integer_from_json(j.at("b")));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Point point_from_json(const Json& j, const std::optional<Curve>& fallback) {
  if (!j.is_object())
    throw ParseError("point must be a JSON object");
  std::optional<Curve> c;
  if (j.contains("curve"))
    c = curve_from_json(j.at("curve"));
  else
    c = fallback;
  if (!c)
    throw ParseError("point has no \"curve\" and none was given");
  if (j.value("identity", false))
    return Point::identity(*c);
  if (!j.contains("x") || !j.contains("y"))
    throw ParseError("point needs \"x\" and \"y\" (or \"identity\": true)");
  Point p = Point::affine(*c, rational_from_json(j.at("x")), rational_from_json(j.at("y")));
  if (!on_curve(p))
    throw ParseError("point " + p.to_string() + " is not on " + c->to_string());
  return p;
}

Point parse_point_text(const std::string& text, const Curve& c) {
  static const std::regex re(R"(^\s*\(\s*([^,\s]+)\s*,\s*([^,\s\)]+)\s*\)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw ParseError("expected a point \"(x,y)\", got '" + text + "'");
  Point p = Point::affine(c, parse_rational(m[1]), parse_rational(m[2]));
  if (!on_curve(p))
    throw ParseError("point " + p.to_string() + " is not on " + c.to_string());
  return p;
}

std::vector<Point> parse_points(const std::string& text, const std::optional<Curve>& fallback) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  std::vector<Point> out;
  if (first != std::string::npos && text[first] == '[') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("points file: ") + e.what());
    }
    for (std::size_t i = 0; i < doc.size(); ++i) {
      try {
        out.push_back(point_from_json(doc[i], fallback));
      } catch (const Error& e) {
        throw ParseError("points file entry " + std::to_string(i) + ": " + e.what());
      }
    }
    return out;
  }
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t s = line.find_first_not_of(" \t\r");
    if (s == std::string::npos || line[s] == '#')
      continue;
    try {
      out.push_back(point_from_json(Json::parse(line), fallback));
    } catch (const Json::exception& e) {
      throw ParseError("points file line " + std::to_string(lineno) + ": " + e.what());
    } catch (const Error& e) {
      throw ParseError("points file line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Point> load_points_file(const std::string& path, const std::optional<Curve>& fallback) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open points file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_points(ss.str(), fallback);
}

} // namespace bqec
