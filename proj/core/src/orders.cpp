#include "quadclass/orders.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "quadclass/discdata.hpp"

namespace quadclass {
namespace {

int sgn_int(const Integer& v) { return sgn(v) > 0 ? 1 : (sgn(v) < 0 ? -1 : 0); }

// Sign of x + y sqrt(D) for nonsquare D > 0.
int sign_of(const Integer& x, const Integer& y, const Integer& disc0) {
  const int sx = sgn_int(x);
  const int sy = sgn_int(y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  return x * x > y * y * disc0 ? sx : sy;
}

}  // namespace

QuadInt::QuadInt(Integer disc0, Integer x, Integer y) : disc0_(std::move(disc0)), x_(std::move(x)), y_(std::move(y)) {
  if (disc0_ <= 1 || is_perfect_square(disc0_)) {
    throw std::invalid_argument("QuadInt: field discriminant must be a positive nonsquare, got " + disc0_.get_str());
  }
  if (mod_floor(x_ - y_ * disc0_, 2) != 0) {
    throw std::invalid_argument("QuadInt: (" + x_.get_str() + " + " + y_.get_str() + " sqrt(" + disc0_.get_str() +
                                "))/2 is not integral");
  }
}

Integer QuadInt::norm() const { return div_exact(x_ * x_ - y_ * y_ * disc0_, 4); }

void QuadInt::require_same_field(const QuadInt& rhs) const {
  if (disc0_ != rhs.disc0_) throw std::invalid_argument("QuadInt: mixing fields " + disc0_.get_str() + " and " + rhs.disc0_.get_str());
}

QuadInt& QuadInt::operator+=(const QuadInt& rhs) {
  require_same_field(rhs);
  x_ += rhs.x_;
  y_ += rhs.y_;
  return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& rhs) {
  require_same_field(rhs);
  x_ -= rhs.x_;
  y_ -= rhs.y_;
  return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& rhs) {
  require_same_field(rhs);
  Integer x = div_exact(x_ * rhs.x_ + y_ * rhs.y_ * disc0_, 2);
  Integer y = div_exact(x_ * rhs.y_ + y_ * rhs.x_, 2);
  x_ = std::move(x);
  y_ = std::move(y);
  return *this;
}

QuadInt QuadInt::pow(unsigned long exponent) const {
  QuadInt result = integer(disc0_, 1);
  QuadInt base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

QuadInt QuadInt::unit_inverse() const {
  const Integer n = norm();
  if (n == 1) return conjugate();
  if (n == -1) return -conjugate();
  throw std::domain_error("unit_inverse: " + str() + " is not a unit");
}

std::string QuadInt::str() const {
  std::ostringstream os;
  os << "(" << x_ << (sgn(y_) < 0 ? " - " : " + ") << abs(y_) << "*sqrt(" << disc0_ << "))/2";
  return os.str();
}

std::pair<int, int> sign_at_embeddings(const QuadInt& alpha) {
  if (alpha.x() == 0 && alpha.y() == 0) throw std::invalid_argument("sign_at_embeddings: zero element");
  return {sign_of(alpha.x(), alpha.y(), alpha.disc0()), sign_of(alpha.x(), -alpha.y(), alpha.disc0())};
}

int compare_real(const QuadInt& lhs, const QuadInt& rhs) {
  const QuadInt diff = lhs - rhs;
  return sign_of(diff.x(), diff.y(), diff.disc0());
}

bool OrderSpec::contains(const QuadInt& alpha) const { return alpha.disc0() == disc0 && divides(conductor, alpha.y()); }

FundamentalUnit fundamental_unit(const Integer& disc0) {
  if (disc0 <= 1 || !is_fundamental_discriminant(disc0)) {
    throw std::invalid_argument("fundamental_unit: not a positive fundamental discriminant: " + disc0.get_str());
  }
  const Integer root = isqrt(disc0);
  // Largest b < sqrt(D) with b = D mod 2, so (b + sqrt D)/2 is reduced and
  // Z + Z (b + sqrt D)/2 is the maximal order.
  Integer b = root;
  if (mod_floor(b - disc0, 2) != 0) b -= 1;

  const Integer p0 = b;
  const Integer q0 = 2;
  Integer p = p0;
  Integer q = q0;
  Integer q_prev2 = 1;  // convergent denominators q_{i-2}, q_{i-1}
  Integer q_prev1 = 0;
  const std::size_t cap = 16 + 4 * static_cast<std::size_t>(mpz_get_ui(root.get_mpz_t())) * mpz_sizeinbase(disc0.get_mpz_t(), 2);
  for (std::size_t i = 0; i < cap; ++i) {
    const Integer a = div_floor(p + root, q);
    const Integer q_cur = a * q_prev1 + q_prev2;
    const Integer p_next = a * q - p;
    const Integer q_next = div_exact(disc0 - p_next * p_next, q);
    if (p_next == p0 && q_next == q0) {
      // alpha_0 = [a_0; ..., a_{l-1}, alpha_0] gives eps = q_{l-1} alpha_0 + q_{l-2}.
      QuadInt unit(disc0, q_cur * b + 2 * q_prev1, q_cur);
      const Integer n = unit.norm();
      if (n != 1 && n != -1) throw std::logic_error("fundamental_unit: period product is not a unit for D=" + disc0.get_str());
      return {unit, static_cast<int>(n.get_si())};
    }
    q_prev2 = q_prev1;
    q_prev1 = q_cur;
    p = p_next;
    q = q_next;
  }
  throw std::logic_error("fundamental_unit: continued fraction period not found for D=" + disc0.get_str());
}

QuadInt epsilon_d(const Integer& d) {
  const DiscData data = disc_data(d);
  return {data.delta0, d - 1, data.f};
}

unsigned long unit_power_index(const QuadInt& eps_k, const QuadInt& eps_d) {
  const QuadInt one = QuadInt::integer(eps_k.disc0(), 1);
  if (compare_real(eps_k, one) <= 0 || compare_real(eps_d, one) <= 0) {
    throw std::invalid_argument("unit_power_index: units must exceed 1");
  }
  QuadInt power = eps_k;
  for (unsigned long k = 1; k <= 64; ++k) {
    const int cmp = compare_real(power, eps_d);
    if (cmp == 0) return k;
    if (cmp > 0) break;
    power *= eps_k;
  }
  throw std::domain_error("unit_power_index: " + eps_d.str() + " is not a power of " + eps_k.str() + " with exponent <= 64");
}

OrderUnit fundamental_unit_of_order(const OrderSpec& order) {
  if (order.conductor < 1) throw std::invalid_argument("fundamental_unit_of_order: conductor must be positive");
  const FundamentalUnit fu = fundamental_unit(order.disc0);
  const Integer& disc0 = order.disc0;
  const Integer& fp = order.conductor;

  // Work in the basis {1, omega}, omega = (D + sqrt D)/2, modulo f'; membership in
  // the order is f' | (omega coordinate).
  const Integer u0 = div_exact(fu.unit.x() - fu.unit.y() * disc0, 2);
  const Integer v0 = fu.unit.y();
  const Integer omega_const = div_exact(disc0 * disc0 - disc0, 4);  // omega^2 = D omega - omega_const
  Integer u = mod_floor(u0, fp);
  Integer v = mod_floor(v0, fp);
  unsigned long m = 1;
  const Integer cap = fp * fp + 1;  // |(O_K / f' O_K)^x| <= f'^2
  while (v != 0) {
    const Integer nu = mod_floor(u * u0 - v * v0 * omega_const, fp);
    const Integer nv = mod_floor(u * v0 + v * u0 + v * v0 * disc0, fp);
    u = nu;
    v = nv;
    if (Integer(++m) > cap) throw std::logic_error("fundamental_unit_of_order: no power of eps_K lies in the order");
  }
  OrderUnit out{fu.unit.pow(m), (fu.norm == -1 && (m % 2 == 1)) ? -1 : 1, m};
  if (!order.contains(out.unit)) throw std::logic_error("fundamental_unit_of_order: modular search disagrees with exact power");
  return out;
}

bool congruent_to_one(const QuadInt& alpha, const Integer& modulus, const OrderSpec& order) {
  if (modulus < 1) throw std::invalid_argument("congruent_to_one: modulus must be positive");
  if (!order.contains(alpha)) throw std::invalid_argument("congruent_to_one: " + alpha.str() + " is not in the order");
  // alpha - 1 = u * m + v * m f' omega  <=>  y = v m f',  x - 2 - y D = 2 u m.
  const Integer x = alpha.x() - 2;
  const Integer& y = alpha.y();
  if (!divides(modulus * order.conductor, y)) return false;
  return divides(2 * modulus, x - y * order.disc0);
}

QuadInt unit_group_congruent_one(const Integer& d, const OrderSpec& order, PlaceSet places, unsigned multiplier) {
  if (multiplier != 1 && multiplier != 2) throw std::invalid_argument("unit_group_congruent_one: multiplier must be 1 or 2");
  const DiscData data = disc_data(d);
  if (order.disc0 != data.delta0 || !divides(order.conductor, data.f)) {
    throw std::invalid_argument("unit_group_congruent_one: order does not contain Z[eps_d]");
  }
  const QuadInt eps_d = epsilon_d(d);
  const FundamentalUnit fu = fundamental_unit(data.delta0);
  const OrderUnit ou = fundamental_unit_of_order(order);
  const unsigned long k = unit_power_index(fu.unit, eps_d);
  if (k % ou.index != 0) throw std::logic_error("unit_group_congruent_one: eps_d is not in the order");
  // eps_d^6 = eps'^(6 k / index); scan twice that far to check cyclicity.
  const unsigned long bound = 6 * (k / ou.index);
  const unsigned long scan = 2 * bound;
  const Integer modulus = Integer(multiplier) * d;

  auto qualifies = [&](const QuadInt& u) {
    if (!congruent_to_one(u, modulus, order)) return false;
    const auto [s1, s2] = sign_at_embeddings(u);
    if (places.first && s1 < 0) return false;
    if (places.second && s2 < 0) return false;
    return true;
  };

  struct Hit {
    unsigned long n;
    int sign;
  };
  std::vector<Hit> hits;
  QuadInt power = ou.unit;
  for (unsigned long n = 1; n <= scan; ++n) {
    if (qualifies(power)) hits.push_back({n, 1});
    if (qualifies(-power)) hits.push_back({n, -1});
    power *= ou.unit;
  }
  if (hits.empty() || hits.front().n > bound) {
    throw std::logic_error("unit_group_congruent_one: no generator found within eps_d^6 for d=" + d.get_str());
  }
  const Hit gen = hits.front();
  // Cyclicity: the hits are exactly the powers gen^j.
  std::size_t j = 0;
  for (unsigned long n = gen.n; n <= scan; n += gen.n) {
    const unsigned long e = n / gen.n;
    const int expected_sign = (gen.sign == -1 && e % 2 == 1) ? -1 : 1;
    if (j >= hits.size() || hits[j].n != n || hits[j].sign != expected_sign) {
      throw std::logic_error("unit_group_congruent_one: scanned units are not cyclic over the first hit");
    }
    ++j;
  }
  if (j != hits.size()) throw std::logic_error("unit_group_congruent_one: extra units outside the cyclic group");
  QuadInt generator = ou.unit.pow(gen.n);
  return gen.sign < 0 ? -generator : generator;
}

std::optional<EpsCubeRoot> eps_cube_square_classification(const Integer& d) {
  const DiscData data = disc_data(d);
  Integer a;
  SquareRootCase kind;
  Integer radicand;  // a^2 - 4 or a^2 + 4
  if (is_perfect_square(d + 1) && isqrt(d + 1) >= 3) {
    a = isqrt(d + 1);
    kind = SquareRootCase::AminusOne;
    radicand = a * a - 4;
  } else if (is_perfect_square(d - 3) && isqrt(d - 3) >= 1) {
    a = isqrt(d - 3);
    kind = SquareRootCase::AplusThree;
    radicand = a * a + 4;
  } else {
    return std::nullopt;
  }
  // radicand = g^2 delta0, so sqrt(radicand) = g sqrt(delta0).
  const Integer g2 = div_exact(radicand, data.delta0);
  if (!is_perfect_square(g2)) throw std::logic_error("eps_cube_square_classification: radicand not in the field");
  const QuadInt eta(data.delta0, a, isqrt(g2));
  const QuadInt eps = epsilon_d(d);
  QuadInt eta_tilde = eta * eps;
  if (eta_tilde * eta_tilde != eps.pow(3)) {
    throw std::logic_error("eps_cube_square_classification: eta~^2 != eps_d^3 for d=" + d.get_str());
  }
  return EpsCubeRoot{a, kind, eta, eta_tilde};
}

double regulator(const Integer& disc0) {
  const FundamentalUnit fu = fundamental_unit(disc0);
  const mp_bitcnt_t prec = 64 + 2 * mpz_sizeinbase(fu.unit.x().get_mpz_t(), 2);
  mpf_class root(disc0, prec);
  root = sqrt(root);
  mpf_class value(fu.unit.x(), prec);
  value += mpf_class(fu.unit.y(), prec) * root;
  value /= 2;
  long exp = 0;
  const double mantissa = mpf_get_d_2exp(&exp, value.get_mpf_t());
  return std::log(mantissa) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace quadclass
