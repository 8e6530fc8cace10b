#include "bqec/errors.hpp"
#include "bqec/families.hpp"
#include "bqec/search.hpp"
#include "oracles/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace bqec;

namespace {

Representation rep(long a, long b) { return Representation::normalized(Integer(a), Integer(b)); }

void check_against_double_loop(const std::vector<TwinRecord>& got, unsigned limit) {
  auto want = oracle::twins_double_loop(limit);
  REQUIRE(got.size() == want.size());
  std::size_t i = 0;
  for (const auto& [value, pairs] : want) {
    const TwinRecord& r = got[i++];
    REQUIRE(r.N == oracle::from_u128(value));
    REQUIRE(r.reps.size() == pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
      REQUIRE(r.reps[k] == rep(pairs[k].first, pairs[k].second));
  }
}

} // namespace

TEST_CASE("representations") {
  CHECK(verify_representation(Integer("3534242722"), rep(83, 243)));
  CHECK(verify_representation(Integer("228746044559762"), rep(2387, 3743)));
  CHECK(verify_representation(Integer(17), rep(2, 1)));
  CHECK_FALSE(verify_representation(Integer(18), rep(1, 2)));
  Representation r = Representation::normalized(Integer(-5), Integer(3));
  CHECK(r.a == 3);
  CHECK(r.b == 5);
  CHECK(r.value() == 81 + 625);
  CHECK_THROWS_AS(Representation::normalized(Integer(0), Integer(3)), DomainError);
}

TEST_CASE("twin search at small limits") {
  CHECK(twin_search(50).empty());
  auto r = twin_search(200);
  REQUIRE(r.size() == 1);
  CHECK(r[0].N == 635318657);
  REQUIRE(r[0].reps.size() == 2);
  CHECK(r[0].reps[0] == rep(59, 158));
  CHECK(r[0].reps[1] == rep(133, 134));
  CHECK(r[0].common_factor == 1);
  CHECK_THROWS_AS(twin_search(1), DomainError);
  CHECK_THROWS_AS(twin_search(kMaxTwinLimit + 1), DomainError);
}

TEST_CASE("twin search agrees with the double loop") {
  for (unsigned limit : {2U, 150U, 400U, 900U})
    check_against_double_loop(twin_search(limit), limit);
}

TEST_CASE("twin search output does not depend on chunking or threads") {
  auto reference = twin_search(700, {1, std::size_t{1} << 22});
  for (std::size_t chunk : {std::size_t{2000}, std::size_t{30011}, std::size_t{77777}})
    for (unsigned threads : {1U, 3U, 8U}) {
      auto got = twin_search(700, {threads, chunk});
      REQUIRE(got.size() == reference.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        REQUIRE(got[i].N == reference[i].N);
        REQUIRE(got[i].reps == reference[i].reps);
      }
    }
}

TEST_CASE("twin search to 3500") {
  auto r = twin_search(3500);
  CHECK(r.size() == 74);
  auto it = std::find_if(r.begin(), r.end(),
                         [](const TwinRecord& t) { return t.N == Integer("155974778565937"); });
  REQUIRE(it != r.end());
  CHECK(it->reps == std::vector<Representation>{rep(1623, 3494), rep(2338, 3351)});
  std::set<Integer> seen;
  for (const auto& t : r) {
    CHECK(seen.insert(t.N).second);
    std::set<std::pair<Integer, Integer>> pairs;
    for (const auto& p : t.reps) {
      CHECK(p.a <= p.b);
      CHECK(verify_representation(t.N, p));
      CHECK(pairs.insert({p.a, p.b}).second);
    }
    // The only 2-torsion of y^2 = x^3 - N x is (0, 0) when N is not a square.
    CHECK_FALSE(is_perfect_square(t.N));
    Integer g4 = t.common_factor * t.common_factor * t.common_factor * t.common_factor;
    CHECK(t.N % g4 == 0);
  }
  CHECK(std::is_sorted(r.begin(), r.end(),
                       [](const TwinRecord& x, const TwinRecord& y) { return x.N < y.N; }));
}

TEST_CASE("Euler membership scan") {
  auto e = euler_membership_scan(2);
  REQUIRE(e.size() == 1);
  CHECK(e[0].N == 635318657);
  CHECK(e[0].reps == std::vector<Representation>{rep(59, 158), rep(133, 134)});
  // Every scanned value is a genuine twin, and the small ones appear in the
  // exhaustive search.
  auto scan = euler_membership_scan(6);
  auto all = twin_search(3500);
  for (const auto& t : scan) {
    REQUIRE(t.reps.size() == 2);
    for (const auto& p : t.reps)
      CHECK(verify_representation(t.N, p));
    bool small = std::all_of(t.reps.begin(), t.reps.end(),
                             [](const Representation& p) { return p.b <= 3500; });
    if (small)
      CHECK(std::any_of(all.begin(), all.end(), [&](const TwinRecord& x) { return x.N == t.N; }));
  }
}

TEST_CASE("table parsing") {
  auto rows = parse_table("# comment\n\nrank8 25792915457 = 326^4 + 347^4  # trailing\n"
                          "twin 2701104520630058561 = 2513^4 + 40540^4 = 11888^4 + 40465^4\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].label == "rank8");
  CHECK(rows[0].line == 3);
  CHECK(rows[0].N == Integer("25792915457"));
  CHECK(rows[1].reps.size() == 2);
  for (const auto& res : verify_table(rows))
    CHECK(res.ok());
  auto check_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_table(text);
      FAIL("no error for: " << text);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  check_error("ok 17 = 1^4 + 2^4\nbroken 17 = 1^4 +\n", "line 2");
  check_error("\n\n\nx 17\n", "line 4");
  check_error("x seventeen = 1^4 + 2^4\n", "line 1");
}

TEST_CASE("a corrupted row fails verification") {
  auto rows = parse_table("bad 3534242723 = 83^4 + 243^4\nhalf 635318657 = 59^4 + 158^4 = 133^4 + 135^4\n");
  auto res = verify_table(rows);
  CHECK_FALSE(res[0].ok());
  CHECK_FALSE(res[1].ok());
  CHECK(res[1].rep_ok == std::vector<bool>{true, false});
}

TEST_CASE("shipped tables") {
  auto res = verify_biquadrate_tables();
  CHECK(res.size() == 18);
  for (const auto& r : res) {
    INFO(r.row.label << " " << r.row.N.get_str());
    CHECK(r.ok());
  }
}
