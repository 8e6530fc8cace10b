#include "bqec/search.hpp"

#include "bqec/errors.hpp"
#include "bqec/families.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

namespace bqec {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u128 pow4(u64 x) {
  u128 sq = static_cast<u128>(x) * x;
  return sq * sq;
}

// floor(x^(1/4))
u64 root4_floor(u64 x) {
  u64 r = static_cast<u64>(std::pow(static_cast<long double>(x), 0.25L));
  while (r > 0 && pow4(r) > x)
    --r;
  while (pow4(r + 1) <= x)
    ++r;
  return r;
}

// ceil(x^(1/4))
u64 root4_ceil(u64 x) {
  u64 r = root4_floor(x);
  return pow4(r) < x ? r + 1 : r;
}

struct PairValue {
  u64 value;
  std::uint32_t a;
  std::uint32_t b;
};

// Inclusive b-range with lo <= a^4 + b^4 < hi, a <= b <= limit.
std::pair<u64, u64> b_range(u64 a, u64 limit, u64 lo, u64 hi) {
  u64 a4 = static_cast<u64>(pow4(a));
  u64 b_lo = a;
  if (lo > a4)
    b_lo = std::max(b_lo, root4_ceil(lo - a4));
  if (hi <= a4 + 1)
    return {1, 0};
  u64 b_hi = std::min(limit, root4_floor(hi - 1 - a4));
  return {b_lo, b_hi};
}

// Number of pairs with value < x.
u64 count_below(u64 limit, u64 x) {
  u64 total = 0;
  for (u64 a = 1; a <= limit && 2 * pow4(a) < x; ++a) {
    auto [lo, hi] = b_range(a, limit, 0, x);
    if (hi >= lo)
      total += hi - lo + 1;
  }
  return total;
}

std::vector<TwinRecord> scan_chunk(u64 limit, u64 lo, u64 hi) {
  std::vector<PairValue> pairs;
  for (u64 a = 1; a <= limit; ++a) {
    auto [b_lo, b_hi] = b_range(a, limit, lo, hi);
    for (u64 b = b_lo; b <= b_hi && b_hi >= b_lo; ++b)
      pairs.push_back({static_cast<u64>(pow4(a) + pow4(b)), static_cast<std::uint32_t>(a),
                       static_cast<std::uint32_t>(b)});
  }
  std::sort(pairs.begin(), pairs.end(), [](const PairValue& x, const PairValue& y) {
    return x.value != y.value ? x.value < y.value : x.a < y.a;
  });
  std::vector<TwinRecord> out;
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i + 1;
    while (j < pairs.size() && pairs[j].value == pairs[i].value)
      ++j;
    if (j - i >= 2) {
      TwinRecord rec;
      rec.N = Integer(std::to_string(pairs[i].value), 10);
      rec.common_factor = 0;
      for (std::size_t k = i; k < j; ++k) {
        rec.reps.push_back({Integer(pairs[k].a), Integer(pairs[k].b)});
        rec.common_factor = gcd(rec.common_factor, Integer(pairs[k].a));
        rec.common_factor = gcd(rec.common_factor, Integer(pairs[k].b));
      }
      out.push_back(std::move(rec));
    }
    i = j;
  }
  return out;
}

Integer parse_table_integer(const std::string& s, int line) {
  try {
    return parse_integer(s);
  } catch (const ParseError&) {
    throw ParseError("table line " + std::to_string(line) + ": bad integer '" + s + "'");
  }
}

} // namespace

Representation Representation::normalized(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  if (a == 0 || b == 0)
    throw DomainError("representation entries must be nonzero");
  if (a > b)
    std::swap(a, b);
  return {a, b};
}

Integer Representation::value() const {
  Integer a2 = a * a, b2 = b * b;
  return a2 * a2 + b2 * b2;
}

bool verify_representation(const Integer& N, const Representation& r) { return r.value() == N; }

unsigned default_thread_count() {
  if (const char* env = std::getenv("THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0)
      return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<TwinRecord> twin_search(std::uint64_t limit, const TwinSearchOptions& opts) {
  if (limit < 2 || limit > kMaxTwinLimit)
    throw DomainError("twin_search limit must lie in [2, " + std::to_string(kMaxTwinLimit) +
                      "], got " + std::to_string(limit));
  const u64 total = limit * (limit + 1) / 2;
  const u64 top = static_cast<u64>(2 * pow4(limit)) + 1;
  const u64 chunk_pairs = std::max<std::size_t>(opts.chunk_pairs, 1);
  const u64 chunks = (total + chunk_pairs - 1) / chunk_pairs;

  // Boundaries split the pair count evenly; found by bisection on the value.
  std::vector<u64> bounds{2};
  for (u64 k = 1; k < chunks; ++k) {
    u64 target = total / chunks * k;
    u64 lo = bounds.back(), hi = top;
    while (lo < hi) {
      u64 mid = lo + (hi - lo) / 2;
      if (count_below(limit, mid) < target)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo > bounds.back())
      bounds.push_back(lo);
  }
  bounds.push_back(top);

  const std::size_t n_chunks = bounds.size() - 1;
  std::vector<std::vector<TwinRecord>> per_chunk(n_chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n_chunks;)
      per_chunk[i] = scan_chunk(limit, bounds[i], bounds[i + 1]);
  };
  unsigned threads = opts.threads ? opts.threads : default_thread_count();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_chunks));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool)
    t.join();

  std::vector<TwinRecord> out;
  for (auto& chunk : per_chunk)
    for (auto& rec : chunk)
      out.push_back(std::move(rec));
  return out;
}

std::vector<TwinRecord> euler_membership_scan(unsigned long u_limit) {
  if (u_limit < 2)
    throw DomainError("euler_membership_scan requires u_limit >= 2");
  auto q = euler_quadruple();
  std::vector<TwinRecord> out;
  for (unsigned long u = 2; u <= u_limit; ++u) {
    Integer uz(u), one(1);
    Integer A = q.A.evaluate(uz, one), B = q.B.evaluate(uz, one);
    Integer C = q.C.evaluate(uz, one), D = q.D.evaluate(uz, one);
    if (A == 0 || B == 0 || C == 0 || D == 0)
      continue;
    Representation first = Representation::normalized(A, B);
    Representation second = Representation::normalized(C, D);
    if (first == second)
      continue;
    if (second.a < first.a)
      std::swap(first, second);
    TwinRecord rec{first.value(), {first, second}, gcd(gcd(A, B), gcd(C, D))};
    out.push_back(std::move(rec));
  }
  return out;
}

bool TableRowResult::ok() const {
  return !rep_ok.empty() && std::all_of(rep_ok.begin(), rep_ok.end(), [](bool b) { return b; });
}

std::vector<TableRow> parse_table(const std::string& text) {
  static const std::regex row_re(R"(^\s*(\S+)\s+(\S+)\s*=\s*(.+?)\s*$)");
  static const std::regex rep_re(R"(^\s*(\S+)\s*\^\s*4\s*\+\s*(\S+)\s*\^\s*4\s*$)");
  std::vector<TableRow> rows;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string content = raw.substr(0, raw.find('#'));
    if (content.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    std::smatch m;
    if (!std::regex_match(content, m, row_re))
      throw ParseError("table line " + std::to_string(line) + ": expected 'label N = a^4 + b^4'");
    TableRow row;
    row.label = m[1];
    row.N = parse_table_integer(m[2], line);
    row.line = line;
    std::string rest = m[3];
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t eq = rest.find('=', start);
      std::string part = rest.substr(start, eq == std::string::npos ? std::string::npos : eq - start);
      std::smatch rm;
      if (!std::regex_match(part, rm, rep_re))
        throw ParseError("table line " + std::to_string(line) + ": bad representation '" + part +
                         "'");
      row.reps.push_back(Representation::normalized(parse_table_integer(rm[1], line),
                                                    parse_table_integer(rm[2], line)));
      if (eq == std::string::npos)
        break;
      start = eq + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open table file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str());
}

std::filesystem::path default_table_path() {
  return std::filesystem::path(BQEC_DATA_DIR) / "biquadrate_tables.txt";
}

std::vector<TableRowResult> verify_table(const std::vector<TableRow>& rows) {
  std::vector<TableRowResult> out;
  for (const auto& row : rows) {
    TableRowResult r{row, {}};
    for (const auto& rep : row.reps)
      r.rep_ok.push_back(verify_representation(row.N, rep));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<TableRowResult> verify_biquadrate_tables() {
  return verify_table(load_table(default_table_path()));
}

} // namespace bqec
