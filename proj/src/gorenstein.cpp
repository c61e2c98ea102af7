#include "aci3/gorenstein.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "aci3/error.hpp"

namespace aci3 {

std::vector<int> ord(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  return values;
}

Triple ord(Triple values) {
  std::sort(values.begin(), values.end());
  return values;
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(ord(std::move(degrees))) {
  if (degrees_.size() < 3 || degrees_.size() % 2 == 0) {
    throw Error(ErrorCode::NotOddLength,
                "length " + std::to_string(degrees_.size()) + " is not odd >= 3");
  }
  if (degrees_.front() <= 0) {
    throw Error(ErrorCode::NonPositiveDegree, "entry " + std::to_string(degrees_.front()));
  }
}

std::string DegreeSequence::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < degrees_.size(); ++k) os << (k ? "," : "") << degrees_[k];
  os << ')';
  return os.str();
}

GorensteinShape validate_degree_sequence(std::vector<int> degrees) {
  DegreeSequence delta(std::move(degrees));
  const int n = delta.half();
  const long total = std::accumulate(delta.degrees().begin(), delta.degrees().end(), 0L);
  if (total % n != 0) {
    throw Error(ErrorCode::ThetaNotIntegral,
                "sum " + std::to_string(total) + " not divisible by n=" + std::to_string(n));
  }
  const int theta = static_cast<int>(total / n);
  // 1-based: theta > d_i + d_{2n+3-i}; 0-based indices i-1 and 2n+2-i.
  for (int i = 2; i <= n; ++i) {
    const int lhs = delta[static_cast<std::size_t>(i - 1)];
    const int rhs = delta[static_cast<std::size_t>(2 * n + 2 - i)];
    if (theta <= lhs + rhs) {
      throw Error(ErrorCode::GaetaViolation,
                  "i=" + std::to_string(i) + ": theta=" + std::to_string(theta) +
                      " <= " + std::to_string(lhs) + "+" + std::to_string(rhs));
    }
  }
  return GorensteinShape{std::move(delta), theta};
}

BettiTable gorenstein_betti_table(const GorensteinShape& shape) {
  FreeModuleShifts f1(shape.delta.degrees());
  return BettiTable(3, {f1, dual_twist(f1, shape.theta), FreeModuleShifts{shape.theta}});
}

std::optional<Triple> ClosedFormMinProvider::query(const GorensteinShape& shape) const {
  if (shape.delta.half() != 1) return std::nullopt;
  return Triple{shape.delta[0], shape.delta[1], shape.delta[2]};
}

std::optional<Triple> min_ci(const std::vector<int>& delta, const MinProvider& provider) {
  const GorensteinShape shape = validate_degree_sequence(delta);
  auto answer = provider.query(shape);
  if (answer) {
    if (!std::is_sorted(answer->begin(), answer->end()) || (*answer)[0] < shape.delta.front()) {
      throw Error(ErrorCode::ProviderContract,
                  provider.name() + " returned an unsorted triple or m_1 < d_1 for " +
                      shape.delta.to_string());
    }
  }
  return answer;
}

}  // namespace aci3
