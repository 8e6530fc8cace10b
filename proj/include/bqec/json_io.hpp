#pragma once

// JSON interchange. Integers are decimal strings, rationals are
// {"num": "...", "den": "..."}, reals are decimal strings.

#include "bqec/descent.hpp"
#include "bqec/families.hpp"
#include "bqec/height.hpp"
#include "bqec/search.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bqec {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& z);
Json to_json(const Rational& q);
Json to_json(const Real& r);
Json to_json(const Curve& c);
/// {"curve": ..., "x": ..., "y": ...} or {"identity": true}.
Json to_json(const Point& p);
/// [{"exp": [i, j], "coef": "..."}, ...] in graded order.
Json to_json(const BivarPoly& p);
Json to_json(const RatFunc& f);
Json to_json(const HeightValue& h);
Json to_json(const RegulatorReport& r);
Json to_json(const DescentReport& r);
Json to_json(const HomSpaceSolution& s);
Json to_json(const Representation& r);
Json to_json(const TwinRecord& t);

/// Accepts a decimal string or a JSON integer.
Integer integer_from_json(const Json& j);
/// Accepts {"num","den"}, a string "p/q", or a JSON integer.
Rational rational_from_json(const Json& j);
Curve curve_from_json(const Json& j);

/// Parses a point object. A missing "curve" key falls back to `fallback`
/// when given. Throws ParseError; the point is checked to lie on its curve.
Point point_from_json(const Json& j, const std::optional<Curve>& fallback = std::nullopt);

/// "(x,y)" with rational coordinates, e.g. "(49/9, 224/27)".
Point parse_point_text(const std::string& text, const Curve& c);

/// A JSON array of points, or one point object per line (blank lines and
/// '#' comments skipped). Errors name the offending line.
std::vector<Point> parse_points(const std::string& text,
                                const std::optional<Curve>& fallback = std::nullopt);
std::vector<Point> load_points_file(const std::string& path,
                                    const std::optional<Curve>& fallback = std::nullopt);

} // namespace bqec
