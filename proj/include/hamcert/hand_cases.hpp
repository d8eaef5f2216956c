#pragma once

#include "hamcert/explicit_group.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hamcert {

struct HandCheck {
  std::string name;
  bool passed = false;
  std::string computed;
  std::string expected;
};

struct HandCaseReport {
  std::string case_id;
  int p = 0;
  int q = 0;
  std::vector<HandCheck> checks;

  bool ok() const;
};

/// Case identifiers accepted by verify_hand_case().
const std::vector<std::string>& hand_case_ids();

/// Builds the case's explicit group and generators for the given primes and
/// checks its hand-made cycles: closed and hamiltonian in the stated
/// quotient, voltage equal to the closed form, and FGL lifts that verify
/// in G whenever the voltage generates. Throws ConcreteError for an unknown
/// case or unusable primes; mismatches are reported as failed checks.
HandCaseReport verify_hand_case(std::string_view case_id, int p, int q);

/// Walk notation: (x, y)^k, the # operator, and concatenation.
std::vector<GElem> alternate(const GElem& x, const GElem& y, int k);
std::vector<GElem> drop_last(std::vector<GElem> w);
std::vector<GElem> repeat(const std::vector<GElem>& w, int k);
std::vector<GElem> concat(std::initializer_list<std::vector<GElem>> parts);

}  // namespace hamcert
