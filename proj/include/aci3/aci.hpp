#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aci3/betti.hpp"
#include "aci3/gorenstein.hpp"

namespace aci3 {

/// Numerical data of a codimension 3 almost complete intersection:
/// generators of degrees d_1 <= d_2 <= d_3 and d*, Cohen-Macaulay type t
/// and the second-syzygy twists s_1 <= ... <= s_t.
///
/// Construction checks only the structural invariants (t >= 2, sorted,
/// positive, third-syzygy twists d - s_i >= 3). The sum identity is left to
/// sum_identity_holds() so that deliberately broken shapes can be built.
class AciShape {
 public:
  AciShape(Triple d, int dstar, std::vector<int> s);

  const Triple& d() const { return d_; }
  int dstar() const { return dstar_; }
  const std::vector<int>& s() const { return s_; }
  int t() const { return static_cast<int>(s_.size()); }
  bool t_even() const { return s_.size() % 2 == 0; }
  /// d_1 + d_2 + d_3 + d*.
  int dtotal() const { return d_[0] + d_[1] + d_[2] + dstar_; }
  long s_q() const;
  /// Sum of the twists of F_2': d + 2d* (t even) or 2(d - d*) (t odd).
  long u() const;
  /// s_Q = (t/2) d - d* for even t, ((t-1)/2) d + d* for odd t.
  long expected_s_q() const;
  bool sum_identity_holds() const { return s_q() == expected_s_q(); }

  friend bool operator==(const AciShape&, const AciShape&) = default;
  std::string to_string() const;

 private:
  Triple d_;
  int dstar_;
  std::vector<int> s_;
};

/// The parity-split resolution determined by a shape.
BettiTable aci_betti_table(const AciShape& shape);

struct DstarExtraction {
  int dstar;
  long u;
  int t;
  int dtotal;
};

/// Reads d* off a Betti table via u = s_(2) + s_(3) - t d.
DstarExtraction extract_dstar(const BettiTable& b);

struct ShapeDecomposition {
  AciShape shape;
  FreeModuleShifts f2_dual_part;  // F_3^v(-d)
  FreeModuleShifts f2_prime;      // F_2 minus the dual part
  std::vector<int> sprime;        // s'
  int p;                          // position of d* among (d*, d_2, d_3)
  Triple e;                       // ord(d*, d_2, d_3)

  /// Derived fields computed from a shape without any validity checks.
  static ShapeDecomposition from_shape(const AciShape& shape);
};

/// F_2' prescribed by the parity of t.
FreeModuleShifts expected_f2_prime(const Triple& d, int dstar, bool t_even);

/// p(d*) in {1, 2, 3}.
int dstar_position(const Triple& d, int dstar);

/// Full recognition of an ACI table. Throws NotAciRanks, NonIntegralDstar,
/// NonPositiveDstar, DualNotEmbedded, DstarNotAGenerator, F2PrimeMismatch or
/// SumIdentityViolation.
ShapeDecomposition decompose(const BettiTable& b);

enum class Verdict { Valid, Invalid, Inconclusive };

enum class VerdictReason {
  None,
  Decomposition,   // table is not of ACI shape at all
  SumIdentity,     // condition 1
  Gaeta,           // condition 2
  LinkedSequence,  // linked degrees are not a Gorenstein sequence
  MinCondition,    // condition 3
  MinUnknown,      // provider could not answer
};

std::string_view to_string(Verdict v);
std::string_view to_string(VerdictReason r);

struct CharacterizationResult {
  Verdict verdict = Verdict::Valid;
  VerdictReason reason = VerdictReason::None;
  std::string detail;
  std::optional<Triple> m;  // min(delta_G), when queried and known
  /// When condition 3 fails as stated but d* ties with another entry of e
  /// and placing d* at that position instead satisfies it: that position.
  /// Diagnostic only; the verdict follows p(d*) as defined.
  int tied_position = 0;
};

/// Evaluates the three conditions of the even/odd characterization. The
/// strictness of the min(delta_G) inequalities differs by parity:
/// even: m_p <= d*, m_i < e_i; odd: m_p < d*, m_i <= e_i.
CharacterizationResult check_characterization(const ShapeDecomposition& dec,
                                              const MinProvider& provider);

/// decompose() followed by check_characterization(); a failed sum identity
/// becomes Invalid(SumIdentity), any other decomposition error
/// Invalid(Decomposition).
CharacterizationResult check_table(const BettiTable& b, const MinProvider& provider);

struct LinkedDegrees {
  GorensteinShape gorenstein;  // delta_G and theta_G
  Triple ci_type;              // ord(d*, d_2, d_3)
};

/// delta_G = (s'_1 - d_1, ...), theta_G = d* + d_2 + d_3 - d_1. Throws
/// LinkedSequenceInvalid when delta_G is not a Gorenstein degree sequence.
LinkedDegrees linked_gorenstein_degrees(const ShapeDecomposition& dec);

}  // namespace aci3
