#pragma once

#include "hamcert/cyclotomic.hpp"
#include "hamcert/group_table.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hamcert {

/// A generator s = gbar * x_p^e * x_q^f of G, recorded by its image in the
/// quotient and which of x_p, x_q it involves (exponents normalized to 1).
///
/// `q_secondary` marks the one generator whose x_q exponent is an unknown i;
/// such a generator is excluded from the primary q-voltage and is the only
/// contributor to the secondary one.
struct GeneratorSpec {
  Elem gbar = 0;
  bool inv_p = false;
  bool inv_q = false;
  bool q_secondary = false;

  bool involved() const { return inv_p || inv_q; }
  auto operator<=>(const GeneratorSpec&) const = default;
};

std::string generator_label(const GroupTable& g, const GeneratorSpec& s);
/// Inverse of generator_label().
GeneratorSpec parse_generator(const GroupTable& g, std::string_view text);

/// A closed walk in the quotient, as signed 1-based indices into the
/// generator list: +k steps by generator k, -k by its inverse.
struct CodedCycle {
  std::vector<int> steps;
  bool operator==(const CodedCycle&) const = default;
};

enum class Prime { p, q };

/// Quotient elements visited by each step of the walk.
std::vector<Elem> project_steps(const GroupTable& g, const CodedCycle& c, std::span<const GeneratorSpec> gens);

/// Z-component of the walk's product in Z x| Gbar with
/// (g1, z1)(g2, z2) = (g1 g2, chi(g2) z1 + z2), where generator k is
/// (gbar_k, exponents[k]). Accumulated in the group ring of mu_m, then reduced.
CycInt walk_voltage(const GroupTable& g, const CodedCycle& c, std::span<const GeneratorSpec> gens,
                    std::span<const int> exponents, const Character& chi);

/// Same product, evaluated step by step with CycInt arithmetic. Slower; kept
/// as an independent route for re-verification.
CycInt walk_voltage_by_product(const GroupTable& g, const CodedCycle& c, std::span<const GeneratorSpec> gens,
                               std::span<const int> exponents, const Character& chi);

/// Voltage with generator k contributing exponent 1 exactly when it involves
/// the selected prime.
CycInt twisted_voltage(const GroupTable& g, const CodedCycle& c, std::span<const GeneratorSpec> gens,
                       const Character& chi, Prime which);

std::vector<int> involvement_exponents(std::span<const GeneratorSpec> gens, Prime which);

/// The q-voltages with respect to the two auxiliary connection sets: only the
/// primary q-generator involved, and only the secondary one.
struct DualVoltage {
  CycInt primary;
  CycInt secondary;
};
DualVoltage dual_voltage(const GroupTable& g, const CodedCycle& c, std::span<const GeneratorSpec> gens,
                         const Character& chi_q);

struct FglCertificate {
  std::size_t cycle_index = 0;
  BigInt norm_p;
  BigInt norm_q;
};

/// First cycle whose p- and q-voltages both have 5-smooth norms.
std::optional<FglCertificate> strategy_fgl(const GroupTable& g, std::span<const CodedCycle> cycles,
                                           std::span<const GeneratorSpec> gens, const Character& chi_p,
                                           const Character& chi_q);

/// Norm of the primary q-voltage when the secondary voltage vanishes and
/// that norm is 5-smooth.
std::optional<BigInt> strategy_single(const DualVoltage& v);
std::optional<BigInt> strategy_single(const GroupTable& g, const CodedCycle& c, std::span<const GeneratorSpec> gens,
                                      const Character& chi_q);

/// Norm of det [[v1.primary, v1.secondary], [v2.primary, v2.secondary]].
BigInt pair_determinant_norm(const DualVoltage& v1, const DualVoltage& v2);
/// That norm, when it is 5-smooth.
std::optional<BigInt> strategy_pair(const DualVoltage& v1, const DualVoltage& v2);
std::optional<BigInt> strategy_pair(const GroupTable& g, const CodedCycle& c1, const CodedCycle& c2,
                                    std::span<const GeneratorSpec> gens, const Character& chi_q);

}  // namespace hamcert
