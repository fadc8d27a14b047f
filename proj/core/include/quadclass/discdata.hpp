#pragma once

#include <vector>

#include "quadclass/arith.hpp"

namespace quadclass {

/// Decomposition (d+1)(d-3) = f^2 * delta0 attached to a dimension d >= 4.
struct DiscData {
  Integer d;
  Integer delta;   // (d+1)(d-3)
  Integer delta0;  // fundamental discriminant
  Integer f;       // conductor of Z[eps_d]
  Integer d_prime; // d if d odd, 2d if d even
  FactoredInteger f_factored;

  /// Positive divisors of f, ascending.
  std::vector<Integer> conductors() const { return divisors(f_factored); }
};

/// Throws std::domain_error for d <= 3; d = 3 gives discriminant 0 and a
/// continuous family rather than finitely many classes.
DiscData disc_data(const Integer& d);

}  // namespace quadclass
