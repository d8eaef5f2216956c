#include "hamcert/voltage.hpp"

#include <cstdlib>

namespace hamcert {

namespace {

constexpr std::string_view kSuffixP = "*xp";
constexpr std::string_view kSuffixQ = "*xq";
constexpr std::string_view kSuffixQi = "*xq^i";

const GeneratorSpec& step_generator(const CodedCycle& c, std::size_t i, std::span<const GeneratorSpec> gens) {
  const int s = c.steps[i];
  const auto k = static_cast<std::size_t>(std::abs(s));
  if (s == 0 || k > gens.size()) throw std::out_of_range("coded step " + std::to_string(s) + " out of range");
  return gens[k - 1];
}

void check_exponents(std::span<const GeneratorSpec> gens, std::span<const int> exponents) {
  if (gens.size() != exponents.size()) throw std::invalid_argument("one exponent per generator required");
}

}  // namespace

std::string generator_label(const GroupTable& g, const GeneratorSpec& s) {
  std::string out = g.label(s.gbar);
  if (s.inv_p) out += kSuffixP;
  if (s.inv_q) out += s.q_secondary ? kSuffixQi : kSuffixQ;
  return out;
}

GeneratorSpec parse_generator(const GroupTable& g, std::string_view text) {
  GeneratorSpec s;
  auto strip = [&text](std::string_view suffix) {
    if (text.size() >= suffix.size() && text.substr(text.size() - suffix.size()) == suffix) {
      text.remove_suffix(suffix.size());
      return true;
    }
    return false;
  };
  if (strip(kSuffixQi)) s.inv_q = s.q_secondary = true;
  else if (strip(kSuffixQ)) s.inv_q = true;
  s.inv_p = strip(kSuffixP);
  s.gbar = g.at(text);
  return s;
}

std::vector<Elem> project_steps(const GroupTable& g, const CodedCycle& c, std::span<const GeneratorSpec> gens) {
  std::vector<Elem> out;
  out.reserve(c.steps.size());
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const Elem x = step_generator(c, i, gens).gbar;
    out.push_back(c.steps[i] > 0 ? x : g.inv(x));
  }
  return out;
}

CycInt walk_voltage(const GroupTable& g, const CodedCycle& c, std::span<const GeneratorSpec> gens,
                    std::span<const int> exponents, const Character& chi) {
  check_exponents(gens, exponents);
  const int m = chi.conductor;
  std::vector<long long> counts(static_cast<std::size_t>(m), 0);
  // Walking backwards, `suffix` is the character exponent of the product of
  // the steps after the current one. A generator step (gbar, e) contributes
  // e * zeta^suffix; an inverse step contributes -e * zeta^(suffix + chi(gbar^-1)).
  int suffix = 0;
  for (std::size_t i = c.steps.size(); i-- > 0;) {
    const auto& gen = step_generator(c, i, gens);
    const int e = exponents[static_cast<std::size_t>(std::abs(c.steps[i]) - 1)];
    if (c.steps[i] > 0) {
      counts[static_cast<std::size_t>(suffix)] += e;
      suffix = (suffix + chi(gen.gbar)) % m;
    } else {
      suffix = (suffix + chi(g.inv(gen.gbar))) % m;
      counts[static_cast<std::size_t>(suffix)] -= e;
    }
  }
  return CycInt::from_group_ring(m, counts);
}

CycInt walk_voltage_by_product(const GroupTable& g, const CodedCycle& c, std::span<const GeneratorSpec> gens,
                               std::span<const int> exponents, const Character& chi) {
  check_exponents(gens, exponents);
  const int m = chi.conductor;
  Elem acc_g = 0;
  CycInt acc_z(m);
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& gen = step_generator(c, i, gens);
    const int e = exponents[static_cast<std::size_t>(std::abs(c.steps[i]) - 1)];
    Elem step_g = gen.gbar;
    CycInt step_z = CycInt::integer(m, e);
    if (c.steps[i] < 0) {
      step_g = g.inv(gen.gbar);
      step_z = -(CycInt::zeta_power(m, chi(step_g)) * step_z);
    }
    acc_z = CycInt::zeta_power(m, chi(step_g)) * acc_z + step_z;
    acc_g = g.mul(acc_g, step_g);
  }
  return acc_z;
}

std::vector<int> involvement_exponents(std::span<const GeneratorSpec> gens, Prime which) {
  std::vector<int> e;
  e.reserve(gens.size());
  for (const auto& s : gens) e.push_back((which == Prime::p ? s.inv_p : s.inv_q) ? 1 : 0);
  return e;
}

CycInt twisted_voltage(const GroupTable& g, const CodedCycle& c, std::span<const GeneratorSpec> gens,
                       const Character& chi, Prime which) {
  const auto e = involvement_exponents(gens, which);
  return walk_voltage(g, c, gens, e, chi);
}

DualVoltage dual_voltage(const GroupTable& g, const CodedCycle& c, std::span<const GeneratorSpec> gens,
                         const Character& chi_q) {
  std::vector<int> primary, secondary;
  for (const auto& s : gens) {
    primary.push_back(s.inv_q && !s.q_secondary ? 1 : 0);
    secondary.push_back(s.inv_q && s.q_secondary ? 1 : 0);
  }
  return {walk_voltage(g, c, gens, primary, chi_q), walk_voltage(g, c, gens, secondary, chi_q)};
}

std::optional<FglCertificate> strategy_fgl(const GroupTable& g, std::span<const CodedCycle> cycles,
                                           std::span<const GeneratorSpec> gens, const Character& chi_p,
                                           const Character& chi_q) {
  const auto ep = involvement_exponents(gens, Prime::p);
  const auto eq = involvement_exponents(gens, Prime::q);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    BigInt np = norm(walk_voltage(g, cycles[i], gens, ep, chi_p));
    if (!smooth5(np)) continue;
    BigInt nq = norm(walk_voltage(g, cycles[i], gens, eq, chi_q));
    if (!smooth5(nq)) continue;
    return FglCertificate{i, std::move(np), std::move(nq)};
  }
  return std::nullopt;
}

std::optional<BigInt> strategy_single(const DualVoltage& v) {
  if (!v.secondary.is_zero()) return std::nullopt;
  BigInt n = norm(v.primary);
  if (!smooth5(n)) return std::nullopt;
  return n;
}

std::optional<BigInt> strategy_single(const GroupTable& g, const CodedCycle& c, std::span<const GeneratorSpec> gens,
                                      const Character& chi_q) {
  return strategy_single(dual_voltage(g, c, gens, chi_q));
}

BigInt pair_determinant_norm(const DualVoltage& v1, const DualVoltage& v2) {
  return norm(v1.primary * v2.secondary - v1.secondary * v2.primary);
}

std::optional<BigInt> strategy_pair(const DualVoltage& v1, const DualVoltage& v2) {
  BigInt n = pair_determinant_norm(v1, v2);
  if (!smooth5(n)) return std::nullopt;
  return n;
}

std::optional<BigInt> strategy_pair(const GroupTable& g, const CodedCycle& c1, const CodedCycle& c2,
                                    std::span<const GeneratorSpec> gens, const Character& chi_q) {
  return strategy_pair(dual_voltage(g, c1, gens, chi_q), dual_voltage(g, c2, gens, chi_q));
}

}  // namespace hamcert
