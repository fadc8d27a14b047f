#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "quadclass/arith.hpp"

namespace quadclass {

/// The binary quadratic form a x^2 + b x y + c y^2.
struct Form {
  Integer a, b, c;

  Integer discriminant() const { return b * b - 4 * a * c; }
  /// gcd(|a|, |b|, |c|).
  Integer content() const;
  bool is_primitive() const { return content() == 1; }

  /// Form with every coefficient multiplied by k.
  Form scaled(const Integer& k) const { return {a * k, b * k, c * k}; }

  std::string str() const;
};

bool operator==(const Form& lhs, const Form& rhs);
bool operator!=(const Form& lhs, const Form& rhs);
/// Lexicographic order on (a, b, c).
bool operator<(const Form& lhs, const Form& rhs);
std::ostream& operator<<(std::ostream& os, const Form& q);

enum class Primitivity { PrimitiveOnly, ImprimitiveOnly, All };
enum class ClassKind { SL2, TwistedGL2 };

/// A set of form classes of one discriminant, one representative per class.
/// `members[i]` lists the reduced forms belonging to class i; for twisted
/// classes this is the union of one or two rho-cycles.
struct FormClassSet {
  Integer discriminant;
  ClassKind kind = ClassKind::SL2;
  Primitivity primitivity = Primitivity::PrimitiveOnly;
  std::vector<Form> reps;
  std::vector<std::vector<Form>> members;

  std::size_t size() const { return reps.size(); }
};

/// Rejects nonpositive or square discriminants with std::invalid_argument.
void require_indefinite_discriminant(const Integer& disc);

/// 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b, evaluated exactly.
bool is_reduced(const Form& q, const Integer& disc);
bool is_reduced(const Form& q);

/// One step of the reduction operator rho:
/// (a, b, c) -> (c, b', (b'^2 - D) / 4c) with b' = -b mod 2|c| normalized into
/// (sqrt(D) - 2|c|, sqrt(D)) when |c| < sqrt(D) and into (-|c|, |c|] otherwise.
/// Preserves the SL2(Z) class. Throws std::invalid_argument when c = 0.
Form rho_step(const Form& q);

struct Reduction {
  Form form;
  std::size_t steps = 0;
};

/// Iterates rho until the form is reduced.
Reduction reduce(const Form& q);

/// The rho-cycle of a reduced form, starting at q.
std::vector<Form> rho_cycle(const Form& reduced);

/// The involution (a, b, c) -> (-a, b, -c), i.e. the twisted action of
/// diag(1, -1).
Form twist(const Form& q);

/// All reduced forms of discriminant `disc` with the requested primitivity,
/// in lexicographic order.
std::vector<Form> enumerate_reduced(const Integer& disc, Primitivity which);

/// Proper (SL2) classes: the rho-cycles of reduced forms. Each class is
/// represented by the lexicographically least form in its cycle.
FormClassSet sl2_classes(const Integer& disc, Primitivity which);

/// Twisted GL2 classes: orbits of the involution `twist` on SL2 classes,
/// represented by the lexicographically least member with a > 0.
FormClassSet twisted_gl2_classes(const Integer& disc, Primitivity which);

/// Order of the ring class group Cl(O_disc), i.e. the number of primitive
/// twisted GL2 classes.
Integer class_number(const Integer& disc);

/// |ClM(O_delta)| for delta = (d+1)(d-3) and explicit representatives.
struct ClassMonoid {
  Integer d;
  Integer delta;
  Integer delta0;
  Integer f;
  struct Part {
    Integer conductor;  // f'
    Integer class_number;
    std::vector<Form> reps;  // primitive reps of (f')^2 delta0, scaled by f / f'
  };
  std::vector<Part> parts;
  Integer size;

  /// All representatives, parts concatenated in conductor order.
  std::vector<Form> reps() const;
};

/// Throws std::domain_error for d <= 3.
ClassMonoid class_monoid(const Integer& d);
Integer class_monoid_size(const Integer& d);

bool sl2_equivalent(const Form& lhs, const Form& rhs);
bool gl2_twisted_equivalent(const Form& lhs, const Form& rhs);

}  // namespace quadclass
