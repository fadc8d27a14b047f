#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quadclass/arith.hpp"
#include "quadclass/qform.hpp"

namespace quadclass {

/// The integer matrix [[s, t], [u, v]].
struct Mat2 {
  Integer s, t, u, v;

  Integer det() const { return s * v - t * u; }
  Integer trace() const { return s + v; }

  static Mat2 identity() { return {1, 0, 0, 1}; }
  /// Inverse over Z; throws unless det = +-1.
  Mat2 inverse() const;
  Mat2 transpose() const { return {s, u, t, v}; }

  std::string str() const;
};

Mat2 operator*(const Mat2& lhs, const Mat2& rhs);
bool operator==(const Mat2& lhs, const Mat2& rhs);
bool operator!=(const Mat2& lhs, const Mat2& rhs);
std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// Twisted right action Q^R(x, y) = det(R) Q(s x + t y, u x + v y) for R in GL2(Z).
Form twisted_action(const Form& q, const Mat2& r);

/// phi(Q) = [[(b + d - 1)/2, -a], [c, (-b + d - 1)/2]], an element of SL2(Z)
/// of trace d - 1. Requires disc(Q) = (d+1)(d-3).
Mat2 form_to_matrix(const Form& q, const Integer& d);

/// psi(A) = -t x^2 + (s - v) x y + u y^2, of discriminant trace^2 - 4. Requires
/// det(A) = 1 and trace^2 - 4 a positive nonsquare.
Form matrix_to_form(const Mat2& a);

/// One representative per GL2(Z)-conjugacy class of SL2(Z) elements of trace
/// tau: phi applied to the class monoid representatives for d = tau + 1.
std::vector<Mat2> trace_class_representatives(const Integer& trace);

bool are_gl2_conjugate(const Mat2& lhs, const Mat2& rhs);

}  // namespace quadclass
