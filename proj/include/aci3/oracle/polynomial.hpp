#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "aci3/monomial.hpp"
#include "aci3/oracle/fp.hpp"

namespace aci3::oracle {

/// Number of monomials of degree `deg` in x, y, z.
inline std::size_t monomial_count(int deg) {
  return deg < 0 ? 0 : static_cast<std::size_t>(deg + 1) * static_cast<std::size_t>(deg + 2) / 2;
}

/// Position of x^a y^b z^c among the degree a+b+c monomials, ordered by
/// descending powers of x, then of y.
std::size_t monomial_index(const Exponent& e);
Exponent monomial_at(int deg, std::size_t index);

/// Homogeneous polynomial of a fixed degree, stored densely over the
/// monomial basis of that degree. A negative degree denotes the zero
/// polynomial of an impossible degree.
class HomogeneousPoly {
 public:
  HomogeneousPoly() = default;
  explicit HomogeneousPoly(int degree)
      : degree_(degree), coeffs_(monomial_count(degree), 0) {}
  HomogeneousPoly(int degree, std::vector<Fp> coeffs);

  static HomogeneousPoly monomial(const Exponent& e, Fp coeff = 1);
  static HomogeneousPoly random(int degree, const PrimeField& f, std::mt19937_64& rng);

  int degree() const { return degree_; }
  const std::vector<Fp>& coeffs() const { return coeffs_; }
  std::vector<Fp>& coeffs() { return coeffs_; }
  bool is_zero() const;

  HomogeneousPoly times_monomial(const Exponent& e) const;

  friend bool operator==(const HomogeneousPoly&, const HomogeneousPoly&) = default;

 private:
  int degree_ = 0;
  std::vector<Fp> coeffs_;
};

HomogeneousPoly multiply(const HomogeneousPoly& a, const HomogeneousPoly& b, const PrimeField& f);
/// a + c * b, both of the same degree.
void add_scaled(HomogeneousPoly& a, const HomogeneousPoly& b, Fp c, const PrimeField& f);

std::string to_string(const HomogeneousPoly& poly);

}  // namespace aci3::oracle
