#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "aci3/aci.hpp"
#include "aci3/betti.hpp"

namespace aci3 {

using Exponent = std::array<int, 3>;

bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

/// Minimally generated monomial ideal in k[x, y, z].
class MonomialIdeal3 {
 public:
  /// Throws NonMinimalGenerators if one generator divides another (or is
  /// repeated), InvalidArgument on negative exponents or the unit monomial.
  explicit MonomialIdeal3(std::vector<Exponent> generators);

  /// Discards redundant generators instead of rejecting them.
  static MonomialIdeal3 minimalized(std::vector<Exponent> generators);

  const std::vector<Exponent>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  /// Contains a pure power of every variable.
  bool is_artinian() const;
  bool contains(const Exponent& monomial) const;

  friend bool operator==(const MonomialIdeal3&, const MonomialIdeal3&) = default;
  std::string to_string() const;

 private:
  std::vector<Exponent> gens_;  // sorted
};

/// Resolution of R/(x^a1, y^a2, z^a3, x^b1 y^b2) from its closed form.
BettiTable resolution_mont2(int a1, int a2, int a3, int b1, int b2);
/// Resolution of R/(x^a1, y^a2, z^a3, x^b1 y^b2 z^b3) from its closed form.
BettiTable resolution_mont3(int a1, int a2, int a3, int b1, int b2, int b3);

/// (v_1, v_2, v_3) = (a1+b2+b3, b1+a2+b3, b1+b2+a3): the twists whose
/// ordering is s for the mont3 family.
Triple mont3_v(int a1, int a2, int a3, int b1, int b2, int b3);

/// Monomial ideal (x^d2, y^d3, z^d*, x^(s2-d3) y^(s1-d2)) with the Betti
/// numbers of a type 2 shape. Throws NotType2 or CharacterizationFailed.
MonomialIdeal3 realize_t2(const AciShape& shape);

struct RealizeFailure {
  int index;         // 1-based i of the first violated inequality
  bool lower_bound;  // true: d* < s_i fails, false: s_i < d* + d_i fails
  std::string detail;
};

struct RealizeT3Result {
  std::optional<MonomialIdeal3> ideal;
  std::optional<RealizeFailure> failure;
};

/// Realizes a type 3 shape by (x^d1, y^d2, z^d3, x^(d*+d1-s1) y^.. z^..)
/// when d* < s_i < d* + d_i for all i. Throws NotType3.
RealizeT3Result realize_t3(const AciShape& shape);

/// Graded Betti table of R/J from the lcm lattice: beta_{i,m} is the
/// reduced homology H~_{i-2} of the Taylor faces whose lcm strictly
/// divides m, ranks computed over Q. At most 10 generators.
BettiTable minimal_resolution_oracle(const MonomialIdeal3& ideal, bool require_artinian = true);

}  // namespace aci3
