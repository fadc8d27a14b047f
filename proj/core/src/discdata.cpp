#include "quadclass/discdata.hpp"

#include <stdexcept>

namespace quadclass {

DiscData disc_data(const Integer& d) {
  if (d == 3) {
    throw std::domain_error("d = 3 has discriminant 0: the forms of trace 2 form a continuous one-parameter family");
  }
  if (d < 4) throw std::domain_error("dimension must satisfy d >= 4, got " + d.get_str());

  DiscData out;
  out.d = d;
  out.delta = (d + 1) * (d - 3);
  // Factor the two linear factors separately; each is far smaller than delta.
  const FactoredInteger delta_factored = multiply(factor(d + 1), factor(d - 3));
  const FundamentalDecomposition fd = fundamental_discriminant_decompose(delta_factored);
  out.delta0 = fd.fundamental;
  out.f = fd.conductor;
  out.f_factored = factor(out.f);
  out.d_prime = mpz_odd_p(d.get_mpz_t()) != 0 ? d : Integer(2 * d);
  return out;
}

}  // namespace quadclass
