#pragma once

#include <optional>

#include "aci3/aci.hpp"
#include "aci3/betti.hpp"

namespace aci3 {

/// Data of a link inside a Gorenstein ideal I_Z of codimension c with socle
/// shift theta_Z, by an extra generator f of degree d*.
class LinkContext {
 public:
  /// Requires c >= 3 and 1 <= d* <= e = theta_Z - c.
  LinkContext(int theta_z, int dstar, int codim);

  int theta_z() const { return theta_z_; }
  int dstar() const { return dstar_; }
  int codim() const { return codim_; }
  int socle_degree() const { return theta_z_ - codim_; }
  int theta_g() const { return theta_z_ - dstar_; }
  /// 2 theta_Z - theta_G, which equals theta_Z + d* and theta_G + 2 d*.
  int dtotal() const { return 2 * theta_z_ - theta_g(); }

 private:
  int theta_z_;
  int dstar_;
  int codim_;
};

/// Resolution (not necessarily minimal) of A_Q from those of A_G and A_Z:
/// F_1 = {d*} + K_1, F_i = G_{i-1}(-d*) + K_i, F_c = G_{c-1}(-d*).
/// Tagged NotMinimal.
BettiTable mapping_cone_resolution(const BettiTable& g, const BettiTable& k,
                                   const LinkContext& ctx);

/// Minimal resolution of A_Q = R/(I_Z + (f)) when deg f = e, the socle
/// degree of A_Z, and I_Z is generated in degrees < e. When I_Z has a
/// linear generator the table is not minimal and is tagged NotMinimal.
BettiTable socle_degree_resolution(const BettiTable& k, int codim, int socle_degree);

struct FcSplit {
  FreeModuleShifts f2_dual_part;  // F_c^v(-d)
  FreeModuleShifts f2_prime;
};

/// Checks F_c^v(-d) embeds in F_2 with d the sum of the generator degrees.
FcSplit verify_fc_duality(const BettiTable& b);

struct LinkedGorenstein {
  BettiTable table;                      // after the canonical cancellations
  GorensteinShape shape;                 // delta_G, theta_G from the table
  Triple ci_type;                        // ord(d*, d_2, d_3)
  std::optional<BettiTable> same_betti_witness;  // only when d* = d_1, t even
  bool analogous_case = false;                   // t odd
};

/// Links an ACI to the Gorenstein ideal I_Z : I_Q inside a complete
/// intersection of type (d*, d_2, d_3), at the level of Betti tables.
///
/// t even, d* != d_1: the R(-d_2), R(-d_3) pair is cancelled.
/// t even, d* == d_1: no cancellation is forced; the raw table is returned
/// (tagged NotMinimal, since whether the pair cancels depends on the ideal)
/// with the t+1 generator table attached as `same_betti_witness`. `shape`
/// takes the raw generator degrees when they pass the Gaeta conditions and
/// delta_G otherwise.
/// t odd: the R(-d*) pair is cancelled, giving generator degrees s' - d_1.
LinkedGorenstein link_aci_to_gorenstein(const ShapeDecomposition& dec);

/// The table before any cancellation.
BettiTable raw_linked_table(const ShapeDecomposition& dec);

}  // namespace aci3
