#include "quadclass/sl2corr.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace quadclass {

Mat2 Mat2::inverse() const {
  const Integer dt = det();
  if (dt == 1) return {v, -t, -u, s};
  if (dt == -1) return {-v, t, u, -s};
  throw std::domain_error("Mat2::inverse: determinant " + dt.get_str() + " is not a unit");
}

std::string Mat2::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

Mat2 operator*(const Mat2& lhs, const Mat2& rhs) {
  return {lhs.s * rhs.s + lhs.t * rhs.u, lhs.s * rhs.t + lhs.t * rhs.v, lhs.u * rhs.s + lhs.v * rhs.u,
          lhs.u * rhs.t + lhs.v * rhs.v};
}

bool operator==(const Mat2& lhs, const Mat2& rhs) {
  return lhs.s == rhs.s && lhs.t == rhs.t && lhs.u == rhs.u && lhs.v == rhs.v;
}
bool operator!=(const Mat2& lhs, const Mat2& rhs) { return !(lhs == rhs); }

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.s << ',' << m.t << "],[" << m.u << ',' << m.v << "]]";
}

Form twisted_action(const Form& q, const Mat2& r) {
  const Integer dt = r.det();
  if (dt != 1 && dt != -1) throw std::invalid_argument("twisted_action: matrix " + r.str() + " is not in GL2(Z)");
  const Integer a = q.a * r.s * r.s + q.b * r.s * r.u + q.c * r.u * r.u;
  const Integer b = 2 * q.a * r.s * r.t + q.b * (r.s * r.v + r.t * r.u) + 2 * q.c * r.u * r.v;
  const Integer c = q.a * r.t * r.t + q.b * r.t * r.v + q.c * r.v * r.v;
  return {dt * a, dt * b, dt * c};
}

Mat2 form_to_matrix(const Form& q, const Integer& d) {
  const Integer delta = (d + 1) * (d - 3);
  if (q.discriminant() != delta) {
    throw std::invalid_argument("form_to_matrix: " + q.str() + " does not have discriminant (d+1)(d-3) = " + delta.get_str());
  }
  // b^2 = (d-1)^2 mod 4 forces b = d - 1 mod 2.
  if (mod_floor(q.b - (d - 1), 2) != 0) throw std::logic_error("form_to_matrix: parity of b differs from d - 1");
  return {div_exact(q.b + d - 1, 2), -q.a, q.c, div_exact(-q.b + d - 1, 2)};
}

Form matrix_to_form(const Mat2& a) {
  if (a.det() != 1) throw std::invalid_argument("matrix_to_form: " + a.str() + " is not in SL2(Z)");
  const Integer tr = a.trace();
  require_indefinite_discriminant(tr * tr - 4);
  return {-a.t, a.s - a.v, a.u};
}

std::vector<Mat2> trace_class_representatives(const Integer& trace) {
  if (trace < 3) throw std::invalid_argument("trace_class_representatives: trace must be >= 3 (d >= 4)");
  const Integer d = trace + 1;
  std::vector<Mat2> out;
  for (const Form& q : class_monoid(d).reps()) out.push_back(form_to_matrix(q, d));
  return out;
}

bool are_gl2_conjugate(const Mat2& lhs, const Mat2& rhs) {
  if (lhs.trace() != rhs.trace()) return false;
  return gl2_twisted_equivalent(matrix_to_form(lhs), matrix_to_form(rhs));
}

}  // namespace quadclass
