#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aci3/oracle/fp.hpp"
#include "aci3/oracle/polynomial.hpp"

namespace aci3::oracle {

/// Desk-scale limits. Graded pieces above `max_degree` are never built;
/// `max_entry` bounds the degree sequences the min provider accepts.
struct OracleLimits {
  int max_degree = 24;
  int max_entry = 8;
};

/// Homogeneous ideal of F_p[x, y, z]. The graded pieces I_j are computed on
/// demand, each stored in reduced row echelon form over the monomial basis
/// of R_j. Not safe for concurrent use (the piece cache is filled lazily).
class GradedIdealFp {
 public:
  explicit GradedIdealFp(std::vector<HomogeneousPoly> generators,
                         PrimeField field = PrimeField(), OracleLimits limits = {});

  /// Monomial ideal with unit coefficients.
  static GradedIdealFp from_monomials(const std::vector<Exponent>& gens,
                                      PrimeField field = PrimeField(), OracleLimits limits = {});

  const std::vector<HomogeneousPoly>& generators() const { return gens_; }
  const PrimeField& field() const { return field_; }
  const OracleLimits& limits() const { return limits_; }
  /// Least generator degree; a large value for the zero ideal.
  int initial_degree() const;

  /// RREF basis of I_j. Throws DegreeCapExceeded above the degree cap.
  const FpMatrix& piece(int j);
  const std::vector<std::size_t>& pivots(int j);
  std::size_t dim(int j);
  /// dim (R/I)_j.
  std::int64_t quotient_dim(int j);

  /// Monomial indices (in degree j) that are not leading terms of I_j; they
  /// form a basis of (R/I)_j.
  std::vector<std::size_t> standard_monomials(int j);
  /// Representative of f modulo I supported on the standard monomials.
  HomogeneousPoly normal_form(const HomogeneousPoly& f);
  bool contains(const HomogeneousPoly& f);

  /// Least j <= bound with (R/I)_j = 0, or -1 if none.
  int extinction_degree(int bound);

 private:
  void build_up_to(int j);

  std::vector<HomogeneousPoly> gens_;
  PrimeField field_;
  OracleLimits limits_;
  std::vector<FpMatrix> pieces_;
  std::vector<std::vector<std::size_t>> pivots_;
};

std::string to_string(const GradedIdealFp& ideal);

}  // namespace aci3::oracle
