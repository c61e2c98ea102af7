#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "aci3/betti.hpp"

namespace aci3 {

using Triple = std::array<int, 3>;

/// Sorted copy of `values`.
std::vector<int> ord(std::vector<int> values);
Triple ord(Triple values);

/// Sorted odd-length (>= 3) tuple of positive integers.
class DegreeSequence {
 public:
  /// Sorts its input; rejects even lengths and non-positive entries.
  explicit DegreeSequence(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  /// n in (d_1, ..., d_{2n+1}).
  int half() const { return static_cast<int>(degrees_.size() / 2); }
  int operator[](std::size_t i) const { return degrees_[i]; }
  int front() const { return degrees_.front(); }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  std::string to_string() const;

 private:
  std::vector<int> degrees_;
};

/// A degree sequence that passed integrality and the Gaeta conditions,
/// together with its socle shift theta = sum / n.
struct GorensteinShape {
  DegreeSequence delta;
  int theta;
};

/// Checks length, integrality of theta and theta > d_i + d_{2n+3-i} for
/// 2 <= i <= n (1-based), in that order.
GorensteinShape validate_degree_sequence(std::vector<int> degrees);

/// Self-dual resolution F_1 = {d_i}, F_2 = {theta - d_i}, F_3 = {theta}.
BettiTable gorenstein_betti_table(const GorensteinShape& shape);

/// Source of min(delta), the least degree triple of a regular sequence
/// contained in some Gorenstein ideal with generator degrees delta.
/// Implementations must tolerate concurrent queries.
class MinProvider {
 public:
  virtual ~MinProvider() = default;
  virtual std::optional<Triple> query(const GorensteinShape& shape) const = 0;
  virtual std::string name() const = 0;
};

/// Answers only the complete intersection case n = 1, where the minimum
/// is the degree sequence itself.
class ClosedFormMinProvider final : public MinProvider {
 public:
  std::optional<Triple> query(const GorensteinShape& shape) const override;
  std::string name() const override { return "ci"; }
};

/// Validates delta, asks the provider and checks its answer is a sorted
/// triple with m_1 >= d_1.
std::optional<Triple> min_ci(const std::vector<int>& delta, const MinProvider& provider);

}  // namespace aci3
