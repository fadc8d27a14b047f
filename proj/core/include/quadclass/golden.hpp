#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quadclass/arith.hpp"

namespace quadclass {

/// Reference rows of the class group table. The row d = 3 has no finite data
/// and is marked `infinite`. `sic_count` is external data, kept as text.
struct ClassGroupRef {
  Integer d;
  Integer delta0;
  std::vector<Integer> conductors;
  std::vector<Integer> class_numbers;
  bool infinite = false;
  std::string sic_count;
};

/// Reference rows of the degeneration table: E_{d,f'} = E_{d,2f'}.
struct DegenerationRef {
  Integer d;
  Integer delta0;
  Integer conductor;
  Integer doubled_conductor;
  Integer class_number;
  Integer degree_E;
};

/// Reference rows of the class field degree table. The multiplet label and
/// the two SIC field degrees are external data ("*" where unknown).
struct ClassFieldRef {
  Integer d;
  Integer conductor;
  Integer class_number;
  Integer degree_E;
  Integer degree_Etilde;
  std::string multiplet;
  std::string sic_degree_triple;
  std::string sic_degree_projective;
};

/// Raw embedded CSV text.
std::string_view golden_classgroup_csv();
std::string_view golden_degeneration_csv();
std::string_view golden_classfield_csv();

const std::vector<ClassGroupRef>& golden_classgroup();
const std::vector<DegenerationRef>& golden_degeneration();
const std::vector<ClassFieldRef>& golden_classfield();

}  // namespace quadclass
