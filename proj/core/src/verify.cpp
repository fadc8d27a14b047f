#include "quadclass/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "quadclass/discdata.hpp"
#include "quadclass/golden.hpp"
#include "quadclass/orders.hpp"
#include "quadclass/qform.hpp"
#include "quadclass/rayclass.hpp"
#include "quadclass/sl2corr.hpp"

namespace quadclass {
namespace {

constexpr std::size_t kKeptFailures = 10;
constexpr long kNarrowWideLimit = 50000;

std::string pair_str(const Integer& a, const Integer& b) { return "(" + a.get_str() + "," + b.get_str() + ")"; }

/// Runs `body` and records an exception as a failure instead of aborting the suite.
template <typename Body>
void guarded(CheckResult& result, const std::string& context, Body&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    result.expect(false, context + ": " + e.what());
  }
}

Mat2 random_word(std::mt19937_64& rng) {
  static const Mat2 generators[] = {
      {1, 1, 0, 1},   // T
      {1, -1, 0, 1},  // T^-1
      {0, -1, 1, 0},  // S
      {1, 0, 0, -1},  // diag(1, -1)
  };
  std::uniform_int_distribution<int> length(1, 12);
  std::uniform_int_distribution<int> pick(0, 3);
  Mat2 word = Mat2::identity();
  for (int i = length(rng); i > 0; --i) word = word * generators[pick(rng)];
  return word;
}

}  // namespace

void CheckResult::expect(bool condition, const std::string& message) {
  ++checks;
  if (condition) return;
  ++failed;
  if (failures.size() < kKeptFailures) failures.push_back(message);
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "units") return Suite::Units;
  if (name == "correspondence") return Suite::Correspondence;
  if (name == "degrees") return Suite::Degrees;
  if (name == "uniqueness") return Suite::Uniqueness;
  if (name == "density") return Suite::Density;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::Units: return "units";
    case Suite::Correspondence: return "correspondence";
    case Suite::Degrees: return "degrees";
    case Suite::Uniqueness: return "uniqueness";
    case Suite::Density: return "density";
    case Suite::All: return "all";
  }
  return "";
}

long default_dmax(Suite suite) {
  switch (suite) {
    case Suite::Units:
    case Suite::Correspondence: return 60;
    case Suite::Degrees:
    case Suite::Uniqueness: return 500;
    case Suite::Density: return 1000000;
    case Suite::All: return 0;
  }
  return 0;
}

CheckResult check_unit_lemma(long dmax) {
  CheckResult result{"unit lemma"};
  const PlaceSet place_sets[] = {PlaceSet::none(), {true, false}, {false, true}, PlaceSet::both()};
  for (long dd = 4; dd <= dmax; ++dd) {
    const Integer d = dd;
    guarded(result, "d=" + d.get_str(), [&] {
      const DiscData data = disc_data(d);
      const QuadInt eps = epsilon_d(d);
      const QuadInt cube = eps.pow(3);
      const QuadInt closed(data.delta0, (d - 1) * (d * d - 2 * d - 2), d * (d - 2) * data.f);
      result.expect(cube == closed, "d=" + d.get_str() + ": eps_d^3 = " + cube.str() + " differs from closed form");
      const bool even = mpz_even_p(d.get_mpz_t()) != 0;
      for (const Integer& fp : data.conductors()) {
        const OrderSpec order{data.delta0, fp};
        for (const PlaceSet& places : place_sets) {
          const std::string where = "d=" + d.get_str() + " f'=" + fp.get_str() + " |Sigma|=" + std::to_string(places.count());
          const QuadInt gen = unit_group_congruent_one(d, order, places, 1);
          result.expect(gen == cube, where + ": generator " + gen.str() + " is not eps_d^3");
          if (even) {
            const QuadInt gen2 = unit_group_congruent_one(d, order, places, 2);
            result.expect(gen2 == cube * cube, where + " modulus 2d: generator " + gen2.str() + " is not eps_d^6");
          }
        }
      }
    });
  }
  return result;
}

CheckResult check_eps_cube_roots(long dmax) {
  CheckResult result{"square roots of eps_d^3"};
  for (long dd = 4; dd <= dmax; ++dd) {
    const Integer d = dd;
    guarded(result, "d=" + d.get_str(), [&] {
      const auto root = eps_cube_square_classification(d);
      const bool minus_one = is_perfect_square(d + 1) && isqrt(d + 1) >= 3;
      const bool plus_three = is_perfect_square(d - 3);
      result.expect(root.has_value() == (minus_one || plus_three),
                    "d=" + d.get_str() + ": square root of eps_d^3 present=" + std::to_string(root.has_value()));
      if (!root) return;
      const QuadInt eps = epsilon_d(d);
      result.expect(root->eta_tilde * root->eta_tilde == eps.pow(3), "d=" + d.get_str() + ": eta~^2 != eps_d^3");
      result.expect(root->eta_tilde == root->eta.pow(3), "d=" + d.get_str() + ": eta~ != eta^3");
      const Integer want_norm = root->kind == SquareRootCase::AminusOne ? 1 : -1;
      result.expect(root->eta_tilde.norm() == want_norm, "d=" + d.get_str() + ": N(eta~) = " + root->eta_tilde.norm().get_str());
      const DiscData data = disc_data(d);
      for (const Integer& fp : data.conductors()) {
        const OrderSpec order{data.delta0, fp};
        if (!order.contains(root->eta_tilde)) continue;
        result.expect(!congruent_to_one(root->eta_tilde, d, order) && !congruent_to_one(-root->eta_tilde, d, order),
                      "d=" + d.get_str() + " f'=" + fp.get_str() + ": eta~ = +-1 mod d");
      }
      if (root->kind != SquareRootCase::AminusOne) return;
      const OrderSpec maximal{data.delta0, 1};
      const QuadInt shifted = root->eta_tilde + QuadInt::integer(data.delta0, root->a);
      result.expect(congruent_to_one(shifted + QuadInt::integer(data.delta0, 1), d, maximal),
                    "d=" + d.get_str() + ": eta~ is not = -a mod d");
    });
  }
  return result;
}

CheckResult check_narrow_wide(long disc_limit) {
  CheckResult result{"narrow/wide class counts"};
  for (long dd = 5; dd <= disc_limit; ++dd) {
    const long r = dd % 4;
    if (r != 0 && r != 1) continue;
    const Integer disc = dd;
    if (is_perfect_square(disc)) continue;
    guarded(result, "D=" + disc.get_str(), [&] {
      const auto [disc0, conductor] = fundamental_discriminant_decompose(disc);
      const OrderUnit unit = fundamental_unit_of_order({disc0, conductor});
      const Integer h = class_number(disc);
      const Integer narrow = sl2_classes(disc, Primitivity::PrimitiveOnly).size();
      const Integer want = unit.norm == 1 ? 2 * h : h;
      result.expect(narrow == want, "D=" + disc.get_str() + ": " + narrow.get_str() + " SL2 classes, h=" + h.get_str() +
                                        ", N(eps)=" + std::to_string(unit.norm));
    });
  }
  return result;
}

CheckResult check_correspondence(long dmax, unsigned seeds) {
  CheckResult result{"phi/psi correspondence"};
  for (long dd = 4; dd <= dmax; ++dd) {
    const Integer d = dd;
    guarded(result, "d=" + d.get_str(), [&] {
      const std::string at = "d=" + d.get_str();
      const Integer delta = (d + 1) * (d - 3);
      const std::vector<Mat2> mats = trace_class_representatives(d - 1);
      const std::vector<Form> forms = class_monoid(d).reps();
      result.expect(Integer(mats.size()) == class_monoid_size(d), at + ": matrix count differs from s(d)");
      result.expect(mats.size() == twisted_gl2_classes(delta, Primitivity::All).size(),
                    at + ": matrix count differs from the direct twisted enumeration");
      for (std::size_t i = 0; i < mats.size(); ++i) {
        const Mat2& m = mats[i];
        result.expect(m.det() == 1 && m.trace() == d - 1, at + ": " + m.str() + " is not in SL2 with trace d-1");
        result.expect(matrix_to_form(m) == forms[i], at + ": psi(phi(Q)) != Q for " + forms[i].str());
        result.expect(form_to_matrix(matrix_to_form(m), d) == m, at + ": phi(psi(A)) != A for " + m.str());
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
          result.expect(!are_gl2_conjugate(m, mats[j]), at + ": " + m.str() + " ~ " + mats[j].str());
        }
      }
      for (unsigned seed = 0; seed < seeds; ++seed) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(dd) * 1000003u + seed);
        const Form& q = forms[std::uniform_int_distribution<std::size_t>(0, forms.size() - 1)(rng)];
        const Mat2 r = random_word(rng);
        const Mat2 s = random_word(rng);
        const Form moved = twisted_action(q, r);
        const std::string where = at + " seed=" + std::to_string(seed) + " Q=" + q.str() + " R=" + r.str();
        // With Q^R(v) = det(R) Q(Rv) the intertwining automorphism is R -> R^-T.
        const Mat2 r_it = r.inverse().transpose();
        const Mat2 a = form_to_matrix(q, d);
        result.expect(form_to_matrix(moved, d) == r_it.inverse() * a * r_it, where + ": phi(Q^R) != R^T phi(Q) R^-T");
        result.expect(matrix_to_form(r.inverse() * a * r) == twisted_action(q, r_it), where + ": psi(R^-1 A R) != psi(A)^(R^-T)");
        result.expect(are_gl2_conjugate(a, form_to_matrix(moved, d)), where + ": phi(Q^R) not conjugate to phi(Q)");
        result.expect(twisted_action(moved, s) == twisted_action(q, r * s), where + ": (Q^R)^S != Q^(RS)");
        result.expect(gl2_twisted_equivalent(q, moved), where + ": Q^R not recognised as equivalent to Q");
      }
    });
  }
  return result;
}

CheckResult check_degree_laws(long dmax) {
  CheckResult result{"degree integrality and doubling"};
  for (long dd = 4; dd <= dmax; ++dd) {
    const Integer d = dd;
    guarded(result, "d=" + d.get_str(), [&] {
      const RayClassField field = RayClassField::for_dimension(d);
      const bool even = mpz_even_p(d.get_mpz_t()) != 0;
      const auto conductors = field.data.conductors();
      for (const Integer& fp : conductors) {
        const std::string at = "d=" + d.get_str() + " f'=" + fp.get_str();
        const Integer s0 = field.ray_class_size(fp, 0, false);
        const Integer s1 = field.ray_class_size(fp, 1, false);
        const Integer s2 = field.ray_class_size(fp, 2, false);
        result.expect(s1 == 2 * s0 && s2 == 2 * s1, at + ": place doubling fails");
        if (even) {
          for (unsigned places = 0; places <= 2; ++places) {
            result.expect(field.ray_class_size(fp, places, true) == 2 * field.ray_class_size(fp, places, false),
                          at + ": 2d modulus doubling fails");
          }
        }
        result.expect(field.degree_Etilde(fp) == (even ? 2 * s2 : s2), at + ": degree of E~ inconsistent");
        for (const Integer& larger : conductors) {
          if (larger == fp || !divides(fp, larger)) continue;
          result.expect(divides(field.degree_E(fp), field.degree_E(larger)) &&
                            divides(field.degree_Etilde(fp), field.degree_Etilde(larger)),
                        at + ": degree does not divide the degree at f'=" + larger.get_str());
        }
      }
    });
  }
  return result;
}

CheckResult check_degeneration(long dmax) {
  CheckResult result{"degeneration"};
  for (long dd = 4; dd <= dmax; ++dd) {
    const Integer d = dd;
    guarded(result, "d=" + d.get_str(), [&] {
      const bool predicate = degeneration_predicate(d);
      const auto pairs = degenerate_pairs(d);
      result.expect(predicate == !pairs.empty(), "d=" + d.get_str() + ": predicate disagrees with the pair list");
      const RayClassField field = RayClassField::for_dimension(d);
      const std::set<std::pair<Integer, Integer>> pair_set(pairs.begin(), pairs.end());
      const auto conductors = field.data.conductors();
      for (const Integer& small : conductors) {
        for (const Integer& large : conductors) {
          if (large == small || !divides(small, large)) continue;
          const bool equal = field.degree_E(small) == field.degree_E(large);
          result.expect(equal == pair_set.contains({small, large}),
                        "d=" + d.get_str() + " " + pair_str(small, large) + ": degree equality=" + std::to_string(equal));
        }
      }
    });
  }
  return result;
}

CheckResult check_golden(TableName name, long dmax) {
  CheckResult result{"golden " + std::string(table_name_str(name))};
  guarded(result, "table", [&] {
    const GoldenCheck check = compare_with_golden(name, build_table(name, dmax), dmax);
    for (const auto& m : check.mismatches) result.expect(false, m);
    result.checks += check.compared;
  });
  return result;
}

CheckResult check_uniqueness(long dmax) {
  CheckResult result{"uniqueness of trivial class monoids"};
  guarded(result, "scan", [&] {
    std::vector<Integer> want;
    for (long d : {4, 5, 6, 10, 22}) {
      if (d <= dmax) want.emplace_back(d);
    }
    const auto got = smallest_monoid_scan(dmax);
    std::string listed;
    for (const auto& d : got) listed += " " + d.get_str();
    result.expect(got == want, "d with s(d) = 1:" + listed);
  });
  return result;
}

CheckResult check_density(long n) {
  CheckResult result{"degeneration density"};
  guarded(result, "scan", [&] {
    const DensityScan scan = density_scan(n);
    result.expect(scan.family_checked > 0 || n < 47, "no d = 47, 83 mod 128 in range");
    for (const auto& d : scan.family_violations) result.expect(false, "d=" + d.get_str() + " is 47 or 83 mod 128 but fails");
    result.checks += scan.family_checked;
    if (n >= 500) {
      std::set<Integer> want;
      for (const auto& ref : golden_degeneration()) want.insert(ref.d);
      std::set<Integer> got;
      for (const auto& d : scan.members) {
        if (d <= 500) got.insert(d);
      }
      result.expect(got == want, "members with d <= 500 differ from the degeneration table");
    }
    if (n >= 1000000) {
      const double ratio = scan.ratio.get_d();
      result.expect(std::abs(ratio - 1.0 / 48.0) < 0.002,
                    "count/N = " + std::to_string(ratio) + " is not within 0.002 of 1/48");
    }
  });
  return result;
}

CheckResult check_growth_trend(long dmin, long dmax) {
  CheckResult result{"class monoid growth trend"};
  guarded(result, "trend", [&] {
    const auto samples = brauer_siegel_trend(dmin, dmax);
    std::vector<double> ratios;
    for (const auto& s : samples) ratios.push_back(s.log_ratio);
    std::sort(ratios.begin(), ratios.end());
    const std::size_t m = ratios.size();
    const double median = m % 2 == 1 ? ratios[m / 2] : (ratios[m / 2 - 1] + ratios[m / 2]) / 2;
    result.expect(median >= 0.5 && median <= 1.5, "median log s(d)/log d = " + std::to_string(median));
  });
  return result;
}

bool VerifyReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed(); });
}

VerifyReport run_verify(Suite suite, std::optional<long> dmax) {
  if (dmax && *dmax < 4) throw std::invalid_argument("dmax must be at least 4");
  VerifyReport report;
  auto limit = [&](Suite s) { return dmax ? *dmax : default_dmax(s); };
  auto run = [&](Suite s) {
    const long n = limit(s);
    switch (s) {
      case Suite::Units:
        report.results.push_back(check_unit_lemma(n));
        report.results.push_back(check_eps_cube_roots(n));
        report.results.push_back(check_narrow_wide(kNarrowWideLimit));
        break;
      case Suite::Correspondence: report.results.push_back(check_correspondence(n)); break;
      case Suite::Degrees:
        report.results.push_back(check_degree_laws(n));
        report.results.push_back(check_degeneration(n));
        report.results.push_back(check_golden(TableName::ClassField, std::min(n, kMaxTableDimension)));
        report.results.push_back(check_golden(TableName::Degeneration, std::min(n, kMaxTableDimension)));
        break;
      case Suite::Uniqueness:
        report.results.push_back(check_uniqueness(n));
        report.results.push_back(check_golden(TableName::ClassGroup, std::min(n, kMaxTableDimension)));
        if (n >= 500) report.results.push_back(check_growth_trend(400, 500));
        break;
      case Suite::Density: report.results.push_back(check_density(n)); break;
      case Suite::All: break;
    }
  };
  if (suite == Suite::All) {
    for (Suite s : {Suite::Units, Suite::Correspondence, Suite::Degrees, Suite::Uniqueness, Suite::Density}) run(s);
  } else {
    run(suite);
  }
  return report;
}

}  // namespace quadclass
