#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quadclass/arith.hpp"
#include "quadclass/discdata.hpp"

namespace quadclass {

/// |(O_K / n O_K)^x| for the quadratic field of discriminant disc0:
/// n^2 prod_{p | n} (1 - 1/p)(1 - (disc0/p)/p).
Integer phi_K(const Integer& disc0, const Integer& n);

/// Field-level data shared by every ray class size in dimension d: the
/// class number of the maximal order and the exponent k with eps_d = eps_K^k.
/// The ratio log(eps_d) / Reg_K in the cardinality formula is exactly k.
struct RayClassField {
  DiscData data;
  Integer class_number_K;
  unsigned long unit_index = 1;

  static RayClassField for_dimension(const Integer& d);

  /// |Cl_{m O', Sigma}(O')| with m = d (or 2d when `doubled_modulus`) and
  /// O' of conductor f':
  ///   2^|Sigma| h_K phi_K(d f') / (c k phi(f')),  c = 9 if d = 3 mod 9 and 3 | f', else 6,
  /// doubled for the 2d modulus. Throws std::invalid_argument for f' not
  /// dividing f, more than two places, or a doubled modulus with odd d;
  /// throws InexactDivision if the quotient is not an integer.
  Integer ray_class_size(const Integer& conductor, unsigned num_places, bool doubled_modulus) const;

  /// [E_{d,f'} : K], the ray class field of modulus d O' ramified at both places.
  Integer degree_E(const Integer& conductor) const;
  /// [E~_{d,f'} : K], modulus d' O' with d' = d (d odd) or 2d (d even).
  Integer degree_Etilde(const Integer& conductor) const;
};

struct InexactDivision : std::logic_error {
  using std::logic_error::logic_error;
};

Integer ray_class_size(const Integer& d, const Integer& conductor, unsigned num_places, bool doubled_modulus);
Integer degree_E(const Integer& d, const Integer& conductor);
Integer degree_Etilde(const Integer& d, const Integer& conductor);

/// True iff the fundamental discriminant of (d+1)(d-3) is 1 mod 8, i.e. some
/// pair of distinct intermediate orders has equal ray class fields.
bool degeneration_predicate(const Integer& d);

/// Conductor pairs (f'', 2 f'') with 2 f'' | f and f'' odd for which
/// E_{d,f''} = E_{d,2f''}; empty unless the predicate holds. The degree
/// equality is re-checked numerically for each returned pair.
std::vector<std::pair<Integer, Integer>> degenerate_pairs(const Integer& d);

struct DensityScan {
  Integer limit;                  // N
  std::vector<Integer> members;   // 4 <= d <= N satisfying the predicate
  mpq_class ratio;                // |members| / N
  /// d = 47 or 83 mod 128 in range that fail the predicate (must be empty).
  std::vector<Integer> family_violations;
  std::size_t family_checked = 0;

  std::size_t count() const { return members.size(); }
};

DensityScan density_scan(const Integer& limit);

struct MultipletEntry {
  Integer conductor;  // f'
  Integer discriminant;
  Integer class_number;
  Integer degree_E;
  Integer degree_Etilde;
  std::optional<Integer> degenerate_with;
};

struct MultipletReport {
  Integer d;
  Integer delta;
  Integer delta0;
  Integer f;
  std::vector<MultipletEntry> entries;
  Integer total;
};

MultipletReport multiplet_report(const Integer& d);

/// All 4 <= d <= dmax with |ClM(O_delta)| = 1.
std::vector<Integer> smallest_monoid_scan(const Integer& dmax);

struct GrowthSample {
  Integer d;
  Integer monoid_size;
  double log_ratio;  // log s(d) / log d
};

std::vector<GrowthSample> brauer_siegel_trend(const Integer& dmin, const Integer& dmax);

}  // namespace quadclass
