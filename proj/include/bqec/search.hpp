#pragma once

// Integers that are sums of two fourth powers, and those with two
// essentially different representations.

#include "bqec/arith.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace bqec {

/// a^4 + b^4 with 1 <= a <= b.
struct Representation {
  Integer a;
  Integer b;

  /// Sorts and takes absolute values; throws DomainError on a zero entry.
  static Representation normalized(Integer a, Integer b);

  Integer value() const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

struct TwinRecord {
  Integer N;
  /// Distinct unordered pairs, sorted by a.
  std::vector<Representation> reps;
  /// gcd of every entry of every representation; g^4 divides N.
  Integer common_factor;
};

bool verify_representation(const Integer& N, const Representation& r);

/// Largest b for which twin_search keeps 2 b^4 inside 64 bits.
inline constexpr std::uint64_t kMaxTwinLimit = 55108;

struct TwinSearchOptions {
  /// 0: use the THREADS environment variable, else hardware concurrency.
  unsigned threads = 0;
  /// Target number of (a, b) pairs held in memory per value-range chunk.
  std::size_t chunk_pairs = std::size_t{1} << 22;
};

/// Every N with at least two distinct representations a^4 + b^4,
/// 1 <= a <= b <= limit, ascending in N. The value axis is cut into chunks
/// holding about `chunk_pairs` pairs each; chunks are enumerated (in
/// parallel), sorted, and scanned in order, so the output is deterministic.
/// Throws DomainError for limit < 2 or limit > kMaxTwinLimit.
std::vector<TwinRecord> twin_search(std::uint64_t limit, const TwinSearchOptions& opts = {});

/// Twins from Euler's quadruple at integer u in [2, u_limit] (w = 1),
/// skipping parameters where the two representations coincide.
std::vector<TwinRecord> euler_membership_scan(unsigned long u_limit);

/// One table row N = a^4 + b^4 [= c^4 + d^4], with a label.
struct TableRow {
  std::string label;
  Integer N;
  std::vector<Representation> reps;
  int line = 0;
};

struct TableRowResult {
  TableRow row;
  /// Per-representation verdicts, in row order.
  std::vector<bool> rep_ok;
  bool ok() const;
};

/// Parses "label N = a^4 + b^4 [= c^4 + d^4]" lines; '#' starts a comment.
/// Throws ParseError naming the line.
std::vector<TableRow> parse_table(const std::string& text);
std::vector<TableRow> load_table(const std::filesystem::path& path);

/// Location of the shipped biquadrate table.
std::filesystem::path default_table_path();

std::vector<TableRowResult> verify_table(const std::vector<TableRow>& rows);

/// Loads and checks the shipped table of known sums of two biquadrates.
std::vector<TableRowResult> verify_biquadrate_tables();

/// THREADS environment variable if set and positive, else hardware
/// concurrency (at least 1).
unsigned default_thread_count();

} // namespace bqec
