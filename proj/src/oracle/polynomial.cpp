#include "aci3/oracle/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aci3/error.hpp"

namespace aci3::oracle {

std::size_t monomial_index(const Exponent& e) {
  const int deg = total_degree(e);
  const auto k = static_cast<std::size_t>(deg - e[0]);
  return k * (k + 1) / 2 + (k - static_cast<std::size_t>(e[1]));
}

Exponent monomial_at(int deg, std::size_t index) {
  // k(k+1)/2 <= index < (k+1)(k+2)/2
  auto k = static_cast<std::size_t>((std::sqrt(8.0 * static_cast<double>(index) + 1.0) - 1.0) / 2.0);
  while (k * (k + 1) / 2 > index) --k;
  while ((k + 1) * (k + 2) / 2 <= index) ++k;
  const int a = deg - static_cast<int>(k);
  const int b = static_cast<int>(k) - static_cast<int>(index - k * (k + 1) / 2);
  return {a, b, deg - a - b};
}

HomogeneousPoly::HomogeneousPoly(int degree, std::vector<Fp> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != monomial_count(degree)) {
    throw Error(ErrorCode::InvalidArgument, "coefficient vector does not match degree");
  }
}

HomogeneousPoly HomogeneousPoly::monomial(const Exponent& e, Fp coeff) {
  HomogeneousPoly out(total_degree(e));
  out.coeffs_[monomial_index(e)] = coeff;
  return out;
}

HomogeneousPoly HomogeneousPoly::random(int degree, const PrimeField& f, std::mt19937_64& rng) {
  HomogeneousPoly out(degree);
  std::uniform_int_distribution<Fp> dist(0, f.p() - 1);
  for (auto& c : out.coeffs_) c = dist(rng);
  return out;
}

bool HomogeneousPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Fp c) { return c == 0; });
}

HomogeneousPoly HomogeneousPoly::times_monomial(const Exponent& e) const {
  if (degree_ < 0) return HomogeneousPoly(degree_ + total_degree(e));
  HomogeneousPoly out(degree_ + total_degree(e));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const Exponent m = monomial_at(degree_, k);
    out.coeffs_[monomial_index({m[0] + e[0], m[1] + e[1], m[2] + e[2]})] = coeffs_[k];
  }
  return out;
}

HomogeneousPoly multiply(const HomogeneousPoly& a, const HomogeneousPoly& b, const PrimeField& f) {
  HomogeneousPoly out(a.degree() + b.degree());
  if (a.degree() < 0 || b.degree() < 0) return HomogeneousPoly(-1);
  std::vector<Exponent> eb;
  std::vector<Fp> cb;
  for (std::size_t k = 0; k < b.coeffs().size(); ++k) {
    if (b.coeffs()[k] == 0) continue;
    eb.push_back(monomial_at(b.degree(), k));
    cb.push_back(b.coeffs()[k]);
  }
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Fp ca = a.coeffs()[i];
    if (ca == 0) continue;
    const Exponent ea = monomial_at(a.degree(), i);
    for (std::size_t j = 0; j < eb.size(); ++j) {
      const std::size_t idx =
          monomial_index({ea[0] + eb[j][0], ea[1] + eb[j][1], ea[2] + eb[j][2]});
      out.coeffs()[idx] = f.add(out.coeffs()[idx], f.mul(ca, cb[j]));
    }
  }
  return out;
}

void add_scaled(HomogeneousPoly& a, const HomogeneousPoly& b, Fp c, const PrimeField& f) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::InvalidArgument, "degree mismatch");
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    a.coeffs()[k] = f.add(a.coeffs()[k], f.mul(c, b.coeffs()[k]));
  }
}

std::string to_string(const HomogeneousPoly& poly) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < poly.coeffs().size(); ++k) {
    const Fp c = poly.coeffs()[k];
    if (c == 0) continue;
    const Exponent e = monomial_at(poly.degree(), k);
    os << (first ? "" : " + ") << c;
    const char names[] = {'x', 'y', 'z'};
    for (int v = 0; v < 3; ++v) {
      const int p = e[static_cast<std::size_t>(v)];
      if (p > 0) os << '*' << names[v] << (p > 1 ? "^" + std::to_string(p) : "");
    }
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace aci3::oracle
