#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadclass/arith.hpp"
#include "quadclass/tables.hpp"

namespace quadclass {

enum class Suite { Units, Correspondence, Degrees, Uniqueness, Density, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

/// dmax used when none is given: 60 for units and correspondence, 500 for
/// degrees and uniqueness, and N = 10^6 for density.
long default_dmax(Suite suite);

/// Outcome of one family of checks. Only the first few failures are kept.
struct CheckResult {
  explicit CheckResult(std::string label = {}) : name(std::move(label)) {}

  std::string name;
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;

  bool passed() const { return failed == 0; }
  void expect(bool condition, const std::string& message);
};

/// For 4 <= d <= dmax, every conductor f' | f and every set of real places:
/// the scanned generator of the units = 1 mod d O' is eps_d^3, and eps_d^6
/// for the modulus 2d when d is even. Also checks the closed form of eps_d^3.
CheckResult check_unit_lemma(long dmax);

/// Square roots of eps_d^3: present exactly for d = a^2 - 1 (a >= 3) and
/// d = a^2 + 3, with the expected norm, and never = +-1 mod d.
CheckResult check_eps_cube_roots(long dmax);

/// |SL2 classes| = h * (2 if the order's fundamental unit has norm +1 else 1)
/// for every nonsquare discriminant 5 <= D <= disc_limit.
CheckResult check_narrow_wide(long disc_limit);

/// Matrix classes of trace d - 1: counts against the class monoid and a
/// direct enumeration, phi/psi round trips, pairwise non-conjugacy, and
/// `seeds` seeded equivariance checks per d.
CheckResult check_correspondence(long dmax, unsigned seeds = 50);

/// Exact division, both doubling laws, and divisibility of degrees along
/// inclusions of orders, for 4 <= d <= dmax.
CheckResult check_degree_laws(long dmax);

/// For comparable conductors f1 | f2, E_{d,f1} = E_{d,f2} exactly for the
/// pairs returned by degenerate_pairs, and these exist iff the predicate holds.
CheckResult check_degeneration(long dmax);

/// Regenerates a table and compares it with the embedded reference rows.
CheckResult check_golden(TableName name, long dmax);

/// s(d) = 1 exactly for d in {4, 5, 6, 10, 22} within 4 <= d <= dmax.
CheckResult check_uniqueness(long dmax);

/// Density scan up to N: the residue families 47, 83 mod 128 always satisfy
/// the predicate, members up to 500 match the degeneration table, and for
/// N >= 10^6 the ratio is within 0.002 of 1/48.
CheckResult check_density(long n);

/// Median of log s(d) / log d over dmin <= d <= dmax lies in [0.5, 1.5].
CheckResult check_growth_trend(long dmin, long dmax);

struct VerifyReport {
  std::vector<CheckResult> results;

  bool passed() const;
};

/// Runs a suite; `all` runs every suite with its default dmax unless one is
/// given. Throws std::invalid_argument for a dmax below 4.
VerifyReport run_verify(Suite suite, std::optional<long> dmax = std::nullopt);

}  // namespace quadclass
