#pragma once

#include <optional>
#include <string>
#include <utility>

#include "quadclass/arith.hpp"

namespace quadclass {

/// The element (x + y sqrt(D)) / 2 of the maximal order of Q(sqrt(D)), where
/// D is a positive fundamental discriminant. Integrality is the parity
/// condition x = y D (mod 2), checked on construction.
class QuadInt {
 public:
  QuadInt(Integer disc0, Integer x, Integer y);

  /// The rational integer n.
  static QuadInt integer(const Integer& disc0, const Integer& n) { return {disc0, 2 * n, 0}; }

  const Integer& disc0() const { return disc0_; }
  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }

  Integer trace() const { return x_; }
  Integer norm() const;
  QuadInt conjugate() const { return {disc0_, x_, -y_}; }

  QuadInt operator-() const { return {disc0_, -x_, -y_}; }
  QuadInt& operator+=(const QuadInt& rhs);
  QuadInt& operator-=(const QuadInt& rhs);
  QuadInt& operator*=(const QuadInt& rhs);

  friend QuadInt operator+(QuadInt lhs, const QuadInt& rhs) { return lhs += rhs; }
  friend QuadInt operator-(QuadInt lhs, const QuadInt& rhs) { return lhs -= rhs; }
  friend QuadInt operator*(QuadInt lhs, const QuadInt& rhs) { return lhs *= rhs; }
  friend bool operator==(const QuadInt& lhs, const QuadInt& rhs) {
    return lhs.disc0_ == rhs.disc0_ && lhs.x_ == rhs.x_ && lhs.y_ == rhs.y_;
  }
  friend bool operator!=(const QuadInt& lhs, const QuadInt& rhs) { return !(lhs == rhs); }

  QuadInt pow(unsigned long exponent) const;
  /// Inverse of a unit (norm +-1); throws otherwise.
  QuadInt unit_inverse() const;

  std::string str() const;

 private:
  void require_same_field(const QuadInt& rhs) const;

  Integer disc0_;
  Integer x_;
  Integer y_;
};

/// Signs of the images under the two real embeddings; the first sends
/// sqrt(D) to the positive root. Throws for the zero element.
std::pair<int, int> sign_at_embeddings(const QuadInt& alpha);

/// Exact comparison of real values under the first embedding.
int compare_real(const QuadInt& lhs, const QuadInt& rhs);

/// The order of discriminant conductor^2 * disc0.
struct OrderSpec {
  Integer disc0;
  Integer conductor{1};

  Integer discriminant() const { return conductor * conductor * disc0; }
  /// (x + y sqrt(D)) / 2 lies in the order iff conductor | y.
  bool contains(const QuadInt& alpha) const;
};

struct FundamentalUnit {
  QuadInt unit;
  int norm = 1;
};

/// Smallest unit > 1 of the maximal order, from the continued fraction of the
/// reduced irrational (b + sqrt(D)) / 2.
FundamentalUnit fundamental_unit(const Integer& disc0);

/// eps_d = (d - 1 + sqrt((d+1)(d-3))) / 2 written over the fundamental
/// discriminant of its field.
QuadInt epsilon_d(const Integer& d);

/// The exponent k with eps_d = eps_K^k. Throws if no k <= 64 works.
unsigned long unit_power_index(const QuadInt& eps_k, const QuadInt& eps_d);

struct OrderUnit {
  QuadInt unit;
  int norm = 1;
  unsigned long index = 1;  // unit = eps_K^index
};

/// Fundamental unit of a (possibly non-maximal) order: the least power of
/// eps_K lying in it.
OrderUnit fundamental_unit_of_order(const OrderSpec& order);

/// Whether alpha - 1 lies in modulus * O, decided by solving for integer
/// coordinates in the Z-basis {modulus, modulus * f' * omega}. alpha must
/// lie in O.
bool congruent_to_one(const QuadInt& alpha, const Integer& modulus, const OrderSpec& order);

/// A subset of the two real places.
struct PlaceSet {
  bool first = false;
  bool second = false;

  unsigned count() const { return (first ? 1u : 0u) + (second ? 1u : 0u); }
  static PlaceSet none() { return {}; }
  static PlaceSet both() { return {true, true}; }
};

/// Brute-force generator of {u in O^x : u = 1 mod (multiplier * d) O, u > 0 at
/// the places in `places`}. Scans +-eps'^n with eps' the order's fundamental
/// unit and asserts that the hits form a cyclic group. The order must contain
/// Z[eps_d]; `multiplier` is 1 or 2.
QuadInt unit_group_congruent_one(const Integer& d, const OrderSpec& order, PlaceSet places, unsigned multiplier = 1);

enum class SquareRootCase { AminusOne, AplusThree };

/// A unit eta~ with eta~^2 = eps_d^3, which exists exactly when d = a^2 - 1
/// (a >= 3) or d = a^2 + 3 (a >= 1). eta~ = eta * eps_d with
/// eta = (a + sqrt(a^2 -+ 4)) / 2.
struct EpsCubeRoot {
  Integer a;
  SquareRootCase kind;
  QuadInt eta;
  QuadInt eta_tilde;
};

std::optional<EpsCubeRoot> eps_cube_square_classification(const Integer& d);

/// log(eps_K) as a double; diagnostic use only.
double regulator(const Integer& disc0);

}  // namespace quadclass
