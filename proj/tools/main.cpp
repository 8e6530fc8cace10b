#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace bqec;
using namespace bqec::cli;

int main(int argc, char** argv) {
  CLI::App app{"Rational points on y^2 = x^3 - N x for sums of two biquadrates"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  bool json_flag = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");
  app.add_flag("--json", json_flag, "JSON output (the default; accepted for scripts)");

  CommandResult result;
  bool jsonl = false;

  auto* ident = app.add_subcommand("verify-identities", "Run the symbolic identity suite");
  std::string mutate;
  auto* mutate_opt = ident->add_option("--mutate", mutate,
                                       "Perturb one identity (default: " +
                                           std::string(kDefaultMutation) + ")")
                         ->expected(0, 1);
  ident->callback([&] {
    std::optional<std::string> m;
    if (mutate_opt->count() > 0)
      m = mutate.empty() ? std::string(kDefaultMutation) : mutate;
    result = cmd_verify_identities(m);
  });

  auto* t1 = app.add_subcommand("theorem1", "Specialize the m^4 + n^4 family at (m, n)");
  std::string m_text, n_text;
  unsigned long t1_bound = kTheoremDescentBound;
  t1->add_option("--m", m_text, "m")->required();
  t1->add_option("--n", n_text, "n")->required();
  t1->add_option("--bound", t1_bound, "Homogeneous-space search bound");
  t1->callback([&] { result = cmd_theorem1(m_text, n_text, t1_bound); });

  auto* t2 = app.add_subcommand("theorem2", "Specialize the Euler family at u = p/q");
  std::string u_text;
  unsigned long t2_bound = kTheoremDescentBound;
  t2->add_option("--u", u_text, "u as an integer or p/q")->required();
  t2->add_option("--bound", t2_bound, "Homogeneous-space search bound");
  t2->callback([&] { result = cmd_theorem2(u_text, t2_bound); });

  auto* search = app.add_subcommand("search", "Integers with two representations a^4 + b^4");
  std::uint64_t limit = 0;
  search->add_option("--limit", limit, "Largest b")->required();
  search->add_flag("--jsonl", jsonl, "One record per line instead of one document");
  search->callback([&] { result = cmd_search(limit); });

  auto* descent = app.add_subcommand("descent", "2-isogeny descent rank lower bound");
  std::string N_text;
  unsigned long d_bound = 10;
  std::string d_points;
  descent->add_option("--N", N_text, "N in y^2 = x^3 - N x")->required();
  descent->add_option("--bound", d_bound, "Homogeneous-space search bound");
  auto* d_points_opt = descent->add_option("--points-file", d_points, "Extra points (JSON)");
  descent->callback([&] {
    result = cmd_descent(N_text, d_bound,
                         d_points_opt->count() ? std::optional(d_points) : std::nullopt);
  });

  auto* height = app.add_subcommand("height", "Canonical heights of points");
  std::string b_text, a2_text = "0", point_text, h_points;
  height->add_option("--curve", b_text, "b in y^2 = x^3 + a2 x^2 + b x")->required();
  height->add_option("--a2", a2_text, "a2 (default 0)");
  auto* point_opt = height->add_option("--point", point_text, "\"(x,y)\"");
  auto* h_points_opt = height->add_option("--points-file", h_points, "Points (JSON)");
  height->callback([&] {
    result = cmd_height(b_text, a2_text,
                        point_opt->count() ? std::optional(point_text) : std::nullopt,
                        h_points_opt->count() ? std::optional(h_points) : std::nullopt);
  });

  auto* tables = app.add_subcommand("tables", "Check the table of known biquadrate sums");
  std::string table_file;
  auto* table_opt = tables->add_option("--file", table_file, "Table file");
  tables->callback([&] {
    result = cmd_tables(table_opt->count() ? std::optional(table_file) : std::nullopt);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    result = error_result("cli", "usage", e.what());
  }

  const int indent = pretty ? 2 : -1;
  if (!result.ok && result.payload.contains("error"))
    std::cerr << "bqec: " << result.payload["error"]["message"].get<std::string>() << '\n';
  if (jsonl && result.ok) {
    for (const auto& rec : result.payload["records"])
      std::cout << rec.dump(indent) << '\n';
  } else {
    std::cout << result.payload.dump(indent) << '\n';
  }
  return exit_code(result);
}
