#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamcert {

using BigInt = boost::multiprecision::cpp_int;

class CyclotomicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int euler_phi(int m);

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int m);

/// Largest conductor with a precomputed cyclotomic polynomial.
inline constexpr int kMaxConductor = 256;

/// An element of Z[zeta_m], stored as coordinates over 1, zeta, ...,
/// zeta^(phi(m)-1). Every operation reduces modulo the cyclotomic polynomial,
/// so equality is coordinatewise.
class CycInt {
 public:
  explicit CycInt(int conductor = 1);
  CycInt(int conductor, std::vector<BigInt> coeffs);

  static CycInt integer(int conductor, const BigInt& c);
  static CycInt zeta_power(int conductor, long long k);
  /// Sum over k of counts[k] * zeta^k, for counts of length m.
  static CycInt from_group_ring(int conductor, std::span<const long long> counts);

  int conductor() const { return conductor_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// True when the value is a rational integer.
  bool is_rational() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt operator-() const;
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  bool operator==(const CycInt&) const = default;

  /// Image under the Galois automorphism zeta -> zeta^k, gcd(k, m) = 1.
  CycInt conjugate(int k) const;

  std::string to_string() const;

 private:
  void require_same(const CycInt& o) const;

  int conductor_;
  std::vector<BigInt> coeffs_;
};

/// Field norm to Q as the product of all Galois conjugates.
BigInt norm(const CycInt& z);

/// Field norm as the resultant of the cyclotomic polynomial and the
/// coefficient polynomial (fraction-free Sylvester determinant).
BigInt norm_resultant(const CycInt& z);

/// Nonzero with no prime factor above 5.
bool smooth5(const BigInt& n);

}  // namespace hamcert
