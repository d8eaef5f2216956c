#include "hamcert/cyclotomic.hpp"

#include <array>
#include <numeric>

namespace hamcert {

int euler_phi(int m) {
  if (m < 1) throw CyclotomicError("conductor must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

using Poly = std::vector<long long>;

// Exact quotient of monic-divisor division; remainder must vanish.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long long c = num[i];
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

const std::array<Poly, kMaxConductor + 1>& cyclotomic_table() {
  static const auto table = [] {
    std::array<Poly, kMaxConductor + 1> t;
    for (int m = 1; m <= kMaxConductor; ++m) {
      Poly num(static_cast<std::size_t>(m + 1), 0);
      num[0] = -1;
      num[static_cast<std::size_t>(m)] = 1;
      for (int d = 1; d < m; ++d)
        if (m % d == 0) num = divide_exact(num, t[static_cast<std::size_t>(d)]);
      t[static_cast<std::size_t>(m)] = num;
    }
    return t;
  }();
  return table;
}

// Reduce a coefficient vector of arbitrary length modulo Phi_m in place and
// truncate it to phi(m) coordinates.
void reduce(std::vector<BigInt>& c, int m) {
  const Poly& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = c.size(); i-- > deg;) {
    if (c[i] == 0) continue;
    const BigInt lead = c[i];
    for (std::size_t j = 0; j <= deg; ++j)
      if (phi[j] != 0) c[i - deg + j] -= lead * phi[j];
  }
  c.resize(deg);
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int m) {
  if (m < 1 || m > kMaxConductor) throw CyclotomicError("conductor out of supported range: " + std::to_string(m));
  return cyclotomic_table()[static_cast<std::size_t>(m)];
}

CycInt::CycInt(int conductor) : conductor_(conductor), coeffs_(static_cast<std::size_t>(euler_phi(conductor))) {
  cyclotomic_polynomial(conductor);
}

CycInt::CycInt(int conductor, std::vector<BigInt> coeffs) : conductor_(conductor), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < static_cast<std::size_t>(euler_phi(conductor))) coeffs_.resize(static_cast<std::size_t>(euler_phi(conductor)));
  reduce(coeffs_, conductor_);
}

CycInt CycInt::integer(int conductor, const BigInt& c) {
  CycInt z(conductor);
  z.coeffs_[0] = c;
  return z;
}

CycInt CycInt::zeta_power(int conductor, long long k) {
  const long long e = ((k % conductor) + conductor) % conductor;
  std::vector<BigInt> c(static_cast<std::size_t>(std::max<long long>(e + 1, euler_phi(conductor))));
  c[static_cast<std::size_t>(e)] = 1;
  return CycInt(conductor, std::move(c));
}

CycInt CycInt::from_group_ring(int conductor, std::span<const long long> counts) {
  if (counts.size() != static_cast<std::size_t>(conductor)) throw CyclotomicError("group ring vector has wrong length");
  std::vector<BigInt> c(counts.begin(), counts.end());
  if (c.size() < static_cast<std::size_t>(euler_phi(conductor))) c.resize(static_cast<std::size_t>(euler_phi(conductor)));
  return CycInt(conductor, std::move(c));
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycInt::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void CycInt::require_same(const CycInt& o) const {
  if (conductor_ != o.conductor_)
    throw CyclotomicError("conductor mismatch: " + std::to_string(conductor_) + " vs " + std::to_string(o.conductor_));
}

CycInt& CycInt::operator+=(const CycInt& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  require_same(o);
  const std::size_t n = coeffs_.size();
  std::vector<BigInt> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  reduce(prod, conductor_);
  coeffs_ = std::move(prod);
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycInt CycInt::conjugate(int k) const {
  if (std::gcd(k, conductor_) != 1) throw CyclotomicError("conjugate exponent not coprime to conductor");
  std::vector<BigInt> c(static_cast<std::size_t>(conductor_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    c[static_cast<std::size_t>((static_cast<long long>(j) * k) % conductor_)] += coeffs_[j];
  return CycInt(conductor_, std::move(c));
}

std::string CycInt::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const std::string mag = BigInt(abs(coeffs_[i])).str();
    out += out.empty() ? (coeffs_[i] < 0 ? "-" : "") : (coeffs_[i] < 0 ? " - " : " + ");
    if (i == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag + "*";
      out += i == 1 ? "z" : "z^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

BigInt norm(const CycInt& z) {
  const int m = z.conductor();
  CycInt prod = CycInt::integer(m, 1);
  for (int k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) prod *= z.conjugate(k);
  if (!prod.is_rational()) throw CyclotomicError("conjugate product is not rational: " + prod.to_string());
  return prod.coeffs()[0];
}

BigInt norm_resultant(const CycInt& z) {
  const auto& phi = cyclotomic_polynomial(z.conductor());
  std::vector<BigInt> f = z.coeffs();
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.empty()) return 0;
  const std::size_t n = phi.size() - 1;  // degree of Phi_m
  const std::size_t d = f.size() - 1;    // degree of f
  if (d == 0) return pow(f[0], static_cast<unsigned>(n));
  // Sylvester matrix: d rows of Phi, n rows of f, coefficients highest first.
  const std::size_t size = n + d;
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t j = 0; j <= n; ++j) a[r][r + j] = phi[n - j];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= d; ++j) a[d + r][r + j] = f[d - j];
  // Bareiss fraction-free elimination.
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == size) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

bool smooth5(const BigInt& n) {
  if (n == 0) return false;
  BigInt r = abs(n);
  for (int p : {2, 3, 5})
    while (r % p == 0) r /= p;
  return r == 1;
}

}  // namespace hamcert
