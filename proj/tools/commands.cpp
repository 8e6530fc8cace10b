#include "commands.hpp"

#include "bqec/errors.hpp"

#include <algorithm>
#include <cmath>

namespace bqec::cli {

namespace {

// |h(2P) - 4 h(P)| allowed by the height command's self-check.
constexpr double kQuadraticityTolerance = 2e-3;

struct NamedPoint {
  std::string name;
  Point point;
};

Json points_json(const std::vector<NamedPoint>& pts) {
  Json out = Json::array();
  for (const auto& np : pts) {
    Json j = to_json(np.point);
    out.push_back(Json{{"name", np.name}, {"point", std::move(j)}});
  }
  return out;
}

Json on_curve_json(const std::vector<NamedPoint>& pts, bool& all) {
  Json out = Json::object();
  for (const auto& np : pts) {
    bool ok = on_curve(np.point);
    all = all && ok;
    out[np.name] = ok;
  }
  return out;
}

Json heights_json(const std::vector<NamedPoint>& pts) {
  Json out = Json::object();
  for (const auto& np : pts)
    out[np.name] = to_json(canonical_height(np.point));
  return out;
}

// Shared tail of the two theorem commands.
CommandResult theorem_payload(Json params, const Curve& curve, const std::vector<NamedPoint>& base,
                              const std::vector<NamedPoint>& assoc, unsigned long bound,
                              const std::optional<Factorization>& n_factorization,
                              const std::string& command) {
  Integer N = -curve.b();
  bool all_on_curve = true;
  Json on_curve_base = on_curve_json(base, all_on_curve);
  Json on_curve_assoc = on_curve_json(assoc, all_on_curve);

  std::vector<Point> base_points, extra;
  for (const auto& np : base) {
    base_points.push_back(np.point);
    extra.push_back(np.point);
  }
  for (const auto& np : assoc)
    extra.push_back(np.point);

  RegulatorReport reg = regulator(base_points);
  DescentReport descent = rank_lower_bound(N, bound, extra, n_factorization);
  long regulator_bound = reg.independent ? static_cast<long>(base_points.size()) : 0;

  CommandResult r;
  r.ok = all_on_curve;
  r.code = all_on_curve ? "ok" : "failed";
  r.payload = Json{{"command", command},
                   {"ok", r.ok},
                   {"params", std::move(params)},
                   {"N", N.get_str()},
                   {"curve", to_json(curve)},
                   {"associated_curve", to_json(associated_curve(curve))},
                   {"torsion", to_string(torsion_kind(curve.b()))},
                   {"points", points_json(base)},
                   {"associated_points", points_json(assoc)},
                   {"on_curve", {{"points", std::move(on_curve_base)},
                                 {"associated_points", std::move(on_curve_assoc)},
                                 {"all", all_on_curve}}},
                   {"heights", heights_json(base)},
                   {"regulator", to_json(reg)},
                   {"descent", to_json(descent)},
                   {"verdict",
                    {{"independent", reg.independent},
                     {"rank_lower_bound_regulator", regulator_bound},
                     {"rank_lower_bound_descent", descent.rank_lower_bound},
                     {"rank_at_least", std::max(regulator_bound, descent.rank_lower_bound)}}}};
  return r;
}

} // namespace

int exit_code(const CommandResult& r) {
  if (r.ok)
    return 0;
  if (r.code == "failed")
    return 1;
  if (r.code == "usage" || r.code == "parse")
    return 2;
  if (r.code == "domain" || r.code == "degenerate")
    return 3;
  return 4;
}

CommandResult error_result(const std::string& command, const std::string& code,
                           const std::string& message) {
  CommandResult r;
  r.ok = false;
  r.code = code;
  r.payload = Json{{"command", command},
                   {"ok", false},
                   {"error", {{"code", code}, {"message", message}}}};
  return r;
}

CommandResult guarded(const std::string& command, const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return error_result(command, e.code(), e.what());
  } catch (const std::exception& e) {
    return error_result(command, "internal", e.what());
  }
}

CommandResult cmd_verify_identities(const std::optional<std::string>& mutate) {
  return guarded("verify-identities", [&] {
    auto results = run_identity_suite(mutate ? std::string_view(*mutate) : std::string_view{});
    Json list = Json::array();
    std::size_t failed = 0;
    for (const auto& ir : results) {
      failed += ir.holds ? 0 : 1;
      list.push_back(Json{{"name", ir.name}, {"description", ir.description}, {"holds", ir.holds}});
    }
    CommandResult r;
    r.ok = failed == 0;
    r.code = r.ok ? "ok" : "failed";
    r.payload = Json{{"command", "verify-identities"},
                     {"ok", r.ok},
                     {"mutated", mutate ? Json(*mutate) : Json(nullptr)},
                     {"total", results.size()},
                     {"failed", failed},
                     {"identities", std::move(list)}};
    return r;
  });
}

CommandResult cmd_theorem1(const std::string& m_text, const std::string& n_text,
                           unsigned long bound) {
  return guarded("theorem1", [&] {
    Integer m = parse_integer(m_text), n = parse_integer(n_text);
    if (m == 0 || n == 0)
      throw DegenerateError("m n = 0: P1 is a point of order 2");
    if (m + n == 0)
      throw DegenerateError("m + n = 0: P2 and Q1 are undefined");
    Curve curve = general_curve(m, n);
    auto pts = general_family_points();
    std::vector<NamedPoint> base{{"P1", specialize_general(pts.P1, m, n)},
                                 {"P2", specialize_general(pts.P2, m, n)}};
    std::vector<NamedPoint> assoc{{"Q1", specialize_general(pts.Q1, m, n)}};
    return theorem_payload(Json{{"m", m.get_str()}, {"n", n.get_str()}}, curve, base, assoc,
                           bound, std::nullopt, "theorem1");
  });
}

CommandResult cmd_theorem2(const std::string& u_text, unsigned long bound) {
  return guarded("theorem2", [&] {
    Rational u = parse_rational(u_text);
    check_euler_parameter(u);
    Curve curve = euler_curve(u);
    Factorization fac = euler_N_factorization(u);
    auto pts = euler_family_points();
    std::vector<NamedPoint> base{{"P1", specialize_euler(pts.P1, u)},
                                 {"P2", specialize_euler(pts.P2, u)},
                                 {"P3", specialize_euler(pts.P3, u)},
                                 {"P4", specialize_euler(pts.P4, u)}};
    std::vector<NamedPoint> assoc{{"Q1", specialize_euler(pts.Q1, u)},
                                  {"Q2", specialize_euler(pts.Q2, u)}};
    return theorem_payload(Json{{"u", u.get_str()}}, curve, base, assoc, bound, fac, "theorem2");
  });
}

CommandResult cmd_search(std::uint64_t limit) {
  return guarded("search", [&] {
    auto records = twin_search(limit);
    Json list = Json::array();
    for (const auto& t : records)
      list.push_back(to_json(t));
    CommandResult r;
    r.payload = Json{{"command", "search"},
                     {"ok", true},
                     {"limit", limit},
                     {"count", records.size()},
                     {"records", std::move(list)}};
    return r;
  });
}

CommandResult cmd_descent(const std::string& N_text, unsigned long bound,
                          const std::optional<std::string>& points_file) {
  return guarded("descent", [&] {
    Integer N = parse_integer(N_text);
    std::vector<Point> extra;
    if (points_file)
      extra = load_points_file(*points_file);
    DescentReport rep = rank_lower_bound(N, bound, extra);
    CommandResult r;
    r.payload = to_json(rep);
    r.payload["command"] = "descent";
    r.payload["ok"] = true;
    r.payload["extra_points"] = extra.size();
    return r;
  });
}

CommandResult cmd_height(const std::string& b_text, const std::string& a2_text,
                         const std::optional<std::string>& point,
                         const std::optional<std::string>& points_file) {
  return guarded("height", [&] {
    if (point.has_value() == points_file.has_value())
      throw UsageError("give exactly one of --point and --points-file");
    Curve curve(parse_integer(a2_text), parse_integer(b_text));
    std::vector<Point> pts;
    if (point)
      pts.push_back(parse_point_text(*point, curve));
    else
      pts = load_points_file(*points_file, curve);
    if (pts.empty())
      throw UsageError("no points given");

    Json list = Json::array();
    bool all_ok = true;
    for (const auto& p : pts) {
      HeightValue h = canonical_height(p);
      HeightValue h2 = canonical_height(dbl(p));
      Real defect = abs(h2.value - 4 * h.value);
      bool ok = defect <= kQuadraticityTolerance;
      all_ok = all_ok && ok;
      list.push_back(Json{{"point", to_json(p)},
                          {"naive_height", to_json(naive_height(p))},
                          {"canonical_height", to_json(h)},
                          {"quadraticity",
                           {{"height_of_double", to_json(h2.value)},
                            {"defect", format_real(defect, 6)},
                            {"tolerance", kQuadraticityTolerance},
                            {"ok", ok}}}});
    }
    CommandResult r;
    r.ok = all_ok;
    r.code = all_ok ? "ok" : "failed";
    r.payload = Json{{"command", "height"},
                     {"ok", all_ok},
                     {"curve", to_json(curve)},
                     {"points", std::move(list)}};
    bool same_curve = std::all_of(pts.begin(), pts.end(),
                                  [&](const Point& p) { return p.curve() == pts[0].curve(); });
    if (pts.size() > 1 && same_curve)
      r.payload["regulator"] = to_json(regulator(pts));
    return r;
  });
}

CommandResult cmd_tables(const std::optional<std::string>& file) {
  return guarded("tables", [&] {
    auto rows = file ? load_table(*file) : load_table(default_table_path());
    auto results = verify_table(rows);
    Json list = Json::array();
    std::size_t failed = 0;
    for (const auto& res : results) {
      Json reps = Json::array();
      for (std::size_t i = 0; i < res.row.reps.size(); ++i)
        reps.push_back(Json{{"rep", to_json(res.row.reps[i])}, {"ok", bool(res.rep_ok[i])}});
      failed += res.ok() ? 0 : 1;
      list.push_back(Json{{"label", res.row.label},
                          {"N", res.row.N.get_str()},
                          {"line", res.row.line},
                          {"representations", std::move(reps)},
                          {"ok", res.ok()}});
    }
    CommandResult r;
    r.ok = failed == 0;
    r.code = r.ok ? "ok" : "failed";
    r.payload = Json{{"command", "tables"},
                     {"ok", r.ok},
                     {"rows", results.size()},
                     {"failed", failed},
                     {"results", std::move(list)}};
    return r;
  });
}

} // namespace bqec::cli
