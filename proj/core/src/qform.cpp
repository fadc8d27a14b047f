#include "quadclass/qform.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "quadclass/discdata.hpp"

namespace quadclass {

Integer Form::content() const {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::string Form::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

bool operator==(const Form& lhs, const Form& rhs) { return lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c; }
bool operator!=(const Form& lhs, const Form& rhs) { return !(lhs == rhs); }

bool operator<(const Form& lhs, const Form& rhs) {
  if (lhs.a != rhs.a) return lhs.a < rhs.a;
  if (lhs.b != rhs.b) return lhs.b < rhs.b;
  return lhs.c < rhs.c;
}

std::ostream& operator<<(std::ostream& os, const Form& q) {
  return os << '(' << q.a << ',' << q.b << ',' << q.c << ')';
}

void require_indefinite_discriminant(const Integer& disc) {
  if (disc <= 0) throw std::invalid_argument("discriminant must be positive, got " + disc.get_str());
  if (is_perfect_square(disc)) throw std::invalid_argument("discriminant is a perfect square: " + disc.get_str());
}

bool is_reduced(const Form& q, const Integer& disc) {
  require_indefinite_discriminant(disc);
  if (q.discriminant() != disc) throw std::invalid_argument("form " + q.str() + " does not have discriminant " + disc.get_str());
  if (q.b <= 0 || q.b * q.b >= disc) return false;
  const Integer two_a = 2 * abs(q.a);
  const Integer upper = two_a + q.b;
  if (upper * upper <= disc) return false;
  if (two_a > q.b) {
    const Integer lower = two_a - q.b;
    if (lower * lower >= disc) return false;
  }
  return true;
}

bool is_reduced(const Form& q) { return is_reduced(q, q.discriminant()); }

Form rho_step(const Form& q) {
  if (q.c == 0) throw std::invalid_argument("rho_step: c = 0 (square discriminant) in " + q.str());
  const Integer disc = q.discriminant();
  const Integer root = isqrt(disc);
  const Integer abs_c = abs(q.c);
  const Integer modulus = 2 * abs_c;
  // The window top is floor(sqrt(D)) or |c|; b' is the unique value = -b mod 2|c| in
  // (top - 2|c|, top].
  const Integer top = abs_c <= root ? root : abs_c;
  const Integer b_next = top - mod_floor(top + q.b, modulus);
  const Integer c_next = div_exact(b_next * b_next - disc, 4 * q.c);
  return {q.c, b_next, c_next};
}

Reduction reduce(const Form& q) {
  require_indefinite_discriminant(q.discriminant());
  Reduction out{q, 0};
  // Reduction needs O(log(|c| / sqrt D)) steps; this cap only trips on a bug.
  const std::size_t cap = 64 + 8 * (mpz_sizeinbase(q.a.get_mpz_t(), 2) + mpz_sizeinbase(q.c.get_mpz_t(), 2));
  while (!is_reduced(out.form)) {
    out.form = rho_step(out.form);
    if (++out.steps > cap) throw std::logic_error("reduce: no reduced form reached from " + q.str());
  }
  return out;
}

std::vector<Form> rho_cycle(const Form& reduced) {
  if (!is_reduced(reduced)) throw std::invalid_argument("rho_cycle: form is not reduced: " + reduced.str());
  std::vector<Form> cycle{reduced};
  Form next = rho_step(reduced);
  while (next != reduced) {
    cycle.push_back(next);
    next = rho_step(next);
  }
  return cycle;
}

Form twist(const Form& q) { return {-q.a, q.b, -q.c}; }

std::vector<Form> enumerate_reduced(const Integer& disc, Primitivity which) {
  require_indefinite_discriminant(disc);
  const Integer r4 = mod_floor(disc, 4);
  if (r4 != 0 && r4 != 1) throw std::invalid_argument("discriminant must be 0 or 1 mod 4, got " + disc.get_str());

  auto wanted = [which](const Form& q) {
    switch (which) {
      case Primitivity::PrimitiveOnly: return q.is_primitive();
      case Primitivity::ImprimitiveOnly: return !q.is_primitive();
      case Primitivity::All: return true;
    }
    return true;
  };

  std::vector<Form> out;
  const Integer root = isqrt(disc);
  for (Integer b = (r4 == 1 ? 1 : 2); b <= root; b += 2) {
    const Integer n = (disc - b * b) / 4;  // = |a| |c|
    for (const Integer& a : divisors(n)) {
      Form pos{a, b, -(n / a)};
      if (!is_reduced(pos, disc)) continue;
      Form neg = twist(pos);
      if (wanted(pos)) {
        out.push_back(std::move(pos));
        out.push_back(std::move(neg));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FormClassSet sl2_classes(const Integer& disc, Primitivity which) {
  const std::vector<Form> forms = enumerate_reduced(disc, which);
  std::map<Form, bool> seen;
  for (const Form& q : forms) seen.emplace(q, false);

  std::vector<std::vector<Form>> cycles;
  for (const Form& q : forms) {
    if (seen.at(q)) continue;
    std::vector<Form> cycle = rho_cycle(q);
    for (const Form& member : cycle) {
      auto it = seen.find(member);
      if (it == seen.end()) throw std::logic_error("rho left the reduced set at " + member.str());
      it->second = true;
    }
    cycles.push_back(std::move(cycle));
  }

  FormClassSet out;
  out.discriminant = disc;
  out.kind = ClassKind::SL2;
  out.primitivity = which;
  for (auto& cycle : cycles) {
    const Form rep = *std::min_element(cycle.begin(), cycle.end());
    out.reps.push_back(rep);
    out.members.push_back(std::move(cycle));
  }
  // Deterministic order: by representative.
  std::vector<std::size_t> order(out.reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return out.reps[i] < out.reps[j]; });
  FormClassSet sorted = out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted.reps[i] = out.reps[order[i]];
    sorted.members[i] = out.members[order[i]];
  }
  return sorted;
}

FormClassSet twisted_gl2_classes(const Integer& disc, Primitivity which) {
  const FormClassSet narrow = sl2_classes(disc, which);
  std::map<Form, std::size_t> class_of;
  for (std::size_t i = 0; i < narrow.size(); ++i) {
    for (const Form& q : narrow.members[i]) class_of.emplace(q, i);
  }

  FormClassSet out;
  out.discriminant = disc;
  out.kind = ClassKind::TwistedGL2;
  out.primitivity = which;
  std::vector<bool> used(narrow.size(), false);
  for (std::size_t i = 0; i < narrow.size(); ++i) {
    if (used[i]) continue;
    const std::size_t j = class_of.at(twist(narrow.reps[i]));
    used[i] = used[j] = true;
    std::vector<Form> members = narrow.members[i];
    if (j != i) members.insert(members.end(), narrow.members[j].begin(), narrow.members[j].end());
    std::sort(members.begin(), members.end());
    auto rep = std::find_if(members.begin(), members.end(), [](const Form& q) { return q.a > 0; });
    if (rep == members.end()) throw std::logic_error("twisted class without a form having a > 0");
    out.reps.push_back(*rep);
    out.members.push_back(std::move(members));
  }
  return out;
}

Integer class_number(const Integer& disc) {
  return Integer(static_cast<unsigned long>(twisted_gl2_classes(disc, Primitivity::PrimitiveOnly).size()));
}

std::vector<Form> ClassMonoid::reps() const {
  std::vector<Form> out;
  for (const Part& part : parts) out.insert(out.end(), part.reps.begin(), part.reps.end());
  return out;
}

ClassMonoid class_monoid(const Integer& d) {
  const DiscData data = disc_data(d);
  ClassMonoid out;
  out.d = d;
  out.delta = data.delta;
  out.delta0 = data.delta0;
  out.f = data.f;
  out.size = 0;
  for (const Integer& fp : data.conductors()) {
    const FormClassSet classes = twisted_gl2_classes(fp * fp * data.delta0, Primitivity::PrimitiveOnly);
    ClassMonoid::Part part;
    part.conductor = fp;
    part.class_number = static_cast<unsigned long>(classes.size());
    const Integer scale = data.f / fp;
    for (const Form& q : classes.reps) part.reps.push_back(q.scaled(scale));
    out.size += part.class_number;
    out.parts.push_back(std::move(part));
  }
  return out;
}

Integer class_monoid_size(const Integer& d) { return class_monoid(d).size; }

bool sl2_equivalent(const Form& lhs, const Form& rhs) {
  const Integer disc = lhs.discriminant();
  if (rhs.discriminant() != disc) throw std::invalid_argument("forms have different discriminants");
  const Form target = reduce(rhs).form;
  const Form start = reduce(lhs).form;
  Form current = start;
  do {
    if (current == target) return true;
    current = rho_step(current);
  } while (current != start);
  return false;
}

bool gl2_twisted_equivalent(const Form& lhs, const Form& rhs) {
  return sl2_equivalent(lhs, rhs) || sl2_equivalent(twist(lhs), rhs);
}

}  // namespace quadclass
