#include "quadclass/rayclass.hpp"

#include <cmath>
#include <stdexcept>

#include "quadclass/orders.hpp"
#include "quadclass/qform.hpp"

namespace quadclass {

Integer phi_K(const Integer& disc0, const Integer& n) {
  if (n < 1) throw std::invalid_argument("phi_K: n must be positive");
  Integer result = 1;
  for (const PrimePower& pe : factor(n).factors) {
    const Integer& p = pe.prime;
    Integer p_power;
    mpz_pow_ui(p_power.get_mpz_t(), p.get_mpz_t(), 2 * (pe.exponent - 1));
    result *= p_power * (p - 1) * (p - kronecker(disc0, p));
  }
  return result;
}

RayClassField RayClassField::for_dimension(const Integer& d) {
  RayClassField field;
  field.data = disc_data(d);
  field.class_number_K = class_number(field.data.delta0);
  const FundamentalUnit fu = fundamental_unit(field.data.delta0);
  field.unit_index = unit_power_index(fu.unit, epsilon_d(d));
  return field;
}

Integer RayClassField::ray_class_size(const Integer& conductor, unsigned num_places, bool doubled_modulus) const {
  const Integer& d = data.d;
  if (conductor < 1 || !divides(conductor, data.f)) {
    throw std::invalid_argument("ray_class_size: conductor " + conductor.get_str() + " does not divide f = " + data.f.get_str());
  }
  if (num_places > 2) throw std::invalid_argument("ray_class_size: at most two real places");
  if (doubled_modulus && mpz_odd_p(d.get_mpz_t()) != 0) {
    throw std::invalid_argument("ray_class_size: the 2d modulus is only defined for even d");
  }
  const bool nine = mod_floor(d, 9) == 3 && divides(3, conductor);
  const Integer c = nine ? 9 : 6;
  Integer numerator = class_number_K * phi_K(data.delta0, d * conductor);
  mpz_mul_2exp(numerator.get_mpz_t(), numerator.get_mpz_t(), num_places);
  const Integer denominator = c * Integer(unit_index) * euler_phi(conductor);
  if (!divides(denominator, numerator)) {
    throw InexactDivision("ray_class_size: " + numerator.get_str() + " / " + denominator.get_str() + " is not an integer (d=" +
                          d.get_str() + ", f'=" + conductor.get_str() + ")");
  }
  Integer size = numerator / denominator;
  if (doubled_modulus) size *= 2;
  return size;
}

Integer RayClassField::degree_E(const Integer& conductor) const { return ray_class_size(conductor, 2, false); }

Integer RayClassField::degree_Etilde(const Integer& conductor) const {
  return ray_class_size(conductor, 2, mpz_even_p(data.d.get_mpz_t()) != 0);
}

Integer ray_class_size(const Integer& d, const Integer& conductor, unsigned num_places, bool doubled_modulus) {
  return RayClassField::for_dimension(d).ray_class_size(conductor, num_places, doubled_modulus);
}

Integer degree_E(const Integer& d, const Integer& conductor) { return RayClassField::for_dimension(d).degree_E(conductor); }

Integer degree_Etilde(const Integer& d, const Integer& conductor) {
  return RayClassField::for_dimension(d).degree_Etilde(conductor);
}

bool degeneration_predicate(const Integer& d) {
  if (d < 4) throw std::domain_error("degeneration_predicate: d must be >= 4");
  const FactoredInteger delta = multiply(factor(d + 1), factor(d - 3));
  return mod_floor(fundamental_discriminant_decompose(delta).fundamental, 8) == 1;
}

std::vector<std::pair<Integer, Integer>> degenerate_pairs(const Integer& d) {
  std::vector<std::pair<Integer, Integer>> out;
  if (!degeneration_predicate(d)) return out;
  const RayClassField field = RayClassField::for_dimension(d);
  // The larger order must have discriminant 1 mod 8, so its conductor is odd.
  for (const Integer& small : field.data.conductors()) {
    if (mpz_even_p(small.get_mpz_t()) != 0) continue;
    const Integer large = 2 * small;
    if (!divides(large, field.data.f)) continue;
    if (field.degree_E(small) != field.degree_E(large) || field.degree_Etilde(small) != field.degree_Etilde(large)) {
      throw std::logic_error("degenerate_pairs: degrees differ for d=" + d.get_str() + " pair (" + small.get_str() + "," +
                             large.get_str() + ")");
    }
    out.emplace_back(small, large);
  }
  return out;
}

DensityScan density_scan(const Integer& limit) {
  if (limit < 4) throw std::invalid_argument("density_scan: N must be >= 4");
  DensityScan scan;
  scan.limit = limit;
  for (Integer d = 4; d <= limit; ++d) {
    const bool hit = degeneration_predicate(d);
    if (hit) scan.members.push_back(d);
    const Integer r = mod_floor(d, 128);
    if (r == 47 || r == 83) {
      ++scan.family_checked;
      if (!hit) scan.family_violations.push_back(d);
    }
  }
  scan.ratio = mpq_class(Integer(static_cast<unsigned long>(scan.members.size())), limit);
  scan.ratio.canonicalize();
  return scan;
}

MultipletReport multiplet_report(const Integer& d) {
  const RayClassField field = RayClassField::for_dimension(d);
  MultipletReport report;
  report.d = d;
  report.delta = field.data.delta;
  report.delta0 = field.data.delta0;
  report.f = field.data.f;
  report.total = 0;
  const auto pairs = degenerate_pairs(d);
  for (const Integer& fp : field.data.conductors()) {
    MultipletEntry entry;
    entry.conductor = fp;
    entry.discriminant = fp * fp * field.data.delta0;
    entry.class_number = class_number(entry.discriminant);
    entry.degree_E = field.degree_E(fp);
    entry.degree_Etilde = field.degree_Etilde(fp);
    for (const auto& [small, large] : pairs) {
      if (small == fp) entry.degenerate_with = large;
      if (large == fp) entry.degenerate_with = small;
    }
    report.total += entry.class_number;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::vector<Integer> smallest_monoid_scan(const Integer& dmax) {
  if (dmax < 4) throw std::invalid_argument("smallest_monoid_scan: dmax must be >= 4");
  std::vector<Integer> out;
  for (Integer d = 4; d <= dmax; ++d) {
    if (class_monoid_size(d) == 1) out.push_back(d);
  }
  return out;
}

std::vector<GrowthSample> brauer_siegel_trend(const Integer& dmin, const Integer& dmax) {
  if (dmin < 4 || dmax < dmin) throw std::invalid_argument("brauer_siegel_trend: need 4 <= dmin <= dmax");
  std::vector<GrowthSample> out;
  for (Integer d = dmin; d <= dmax; ++d) {
    const Integer s = class_monoid_size(d);
    out.push_back({d, s, std::log(s.get_d()) / std::log(d.get_d())});
  }
  return out;
}

}  // namespace quadclass
