#include "aci3/liaison.hpp"

#include "aci3/error.hpp"

namespace aci3 {

LinkContext::LinkContext(int theta_z, int dstar, int codim)
    : theta_z_(theta_z), dstar_(dstar), codim_(codim) {
  if (codim_ < 3) throw Error(ErrorCode::InvalidArgument, "codim must be >= 3");
  if (dstar_ < 1 || dstar_ > socle_degree()) {
    throw Error(ErrorCode::InvalidArgument,
                "need 1 <= d* <= e, got d*=" + std::to_string(dstar_) +
                    " e=" + std::to_string(socle_degree()));
  }
}

namespace {

int gorenstein_tail(const BettiTable& t, const char* name) {
  const auto& last = t.module(t.codim());
  if (last.rank() != 1) {
    throw Error(ErrorCode::NotGorensteinTail,
                std::string(name) + " ends in " + last.to_string());
  }
  return last.min();
}

}  // namespace

BettiTable mapping_cone_resolution(const BettiTable& g, const BettiTable& k,
                                   const LinkContext& ctx) {
  const int c = ctx.codim();
  if (g.codim() != c || k.codim() != c) {
    throw Error(ErrorCode::CodimMismatch, "G codim " + std::to_string(g.codim()) + ", K codim " +
                                              std::to_string(k.codim()) + ", context " +
                                              std::to_string(c));
  }
  if (gorenstein_tail(k, "K") != ctx.theta_z()) {
    throw Error(ErrorCode::ThetaMismatch, "K tail " + k.module(c).to_string() +
                                              " != theta_Z=" + std::to_string(ctx.theta_z()));
  }
  if (gorenstein_tail(g, "G") != ctx.theta_g()) {
    throw Error(ErrorCode::ThetaMismatch, "G tail " + g.module(c).to_string() +
                                              " != theta_Z - d*=" +
                                              std::to_string(ctx.theta_g()));
  }
  std::vector<FreeModuleShifts> mods;
  mods.push_back(direct_sum(FreeModuleShifts{ctx.dstar()}, k.module(1)));
  for (int i = 2; i <= c - 1; ++i) {
    mods.push_back(direct_sum(g.module(i - 1).shifted(ctx.dstar()), k.module(i)));
  }
  mods.push_back(g.module(c - 1).shifted(ctx.dstar()));
  return BettiTable(c, std::move(mods), Minimality::NotMinimal);
}

BettiTable socle_degree_resolution(const BettiTable& k, int codim, int socle_degree) {
  if (k.codim() != codim) {
    throw Error(ErrorCode::CodimMismatch,
                "K codim " + std::to_string(k.codim()) + " != " + std::to_string(codim));
  }
  const int theta = gorenstein_tail(k, "K");
  if (theta != socle_degree + codim) {
    throw Error(ErrorCode::ThetaMismatch, "theta_Z=" + std::to_string(theta) +
                                              " != e + c = " +
                                              std::to_string(socle_degree + codim));
  }
  if (k.module(1).max() >= socle_degree) {
    throw Error(ErrorCode::GeneratorDegreeTooHigh,
                "generator of degree " + std::to_string(k.module(1).max()) +
                    " >= e=" + std::to_string(socle_degree));
  }
  const int e = socle_degree;
  std::vector<FreeModuleShifts> mods;
  mods.push_back(direct_sum(k.module(1), FreeModuleShifts{e}));
  for (int i = 2; i <= codim - 1; ++i) {
    const auto extra =
        FreeModuleShifts::repeated(e + i - 1, static_cast<int>(binomial(codim, i - 1)));
    mods.push_back(direct_sum(k.module(i), extra));
  }
  mods.push_back(
      FreeModuleShifts::repeated(e + codim - 1, static_cast<int>(binomial(codim, codim - 1))));
  // A linear generator l puts R(-(theta_Z - 1)) in K_{c-1}, and the same
  // twist e + c - 1 heads F_c; the comparison map pairs them by a unit.
  const bool linear = k.module(1).min() == 1;
  return BettiTable(codim, std::move(mods), linear ? Minimality::NotMinimal : Minimality::Minimal);
}

FcSplit verify_fc_duality(const BettiTable& b) {
  if (b.codim() < 3) throw Error(ErrorCode::InvalidArgument, "codim must be >= 3");
  const int d = static_cast<int>(b.module(1).sum());
  const FreeModuleShifts dual = dual_twist(b.module(b.codim()), d);
  if (!b.module(2).contains(dual)) {
    throw Error(ErrorCode::DualNotEmbedded, "F_c^v(-" + std::to_string(d) + ")=" +
                                                dual.to_string() + " not inside F_2=" +
                                                b.module(2).to_string());
  }
  return FcSplit{dual, subtract(b.module(2), dual)};
}

BettiTable raw_linked_table(const ShapeDecomposition& dec) {
  const AciShape& shape = dec.shape;
  const Triple& d = shape.d();
  const int ds = shape.dstar();
  const int dt = shape.dtotal();
  const int theta_z = ds + d[1] + d[2];
  const int theta_g = theta_z - d[0];

  // F_3 of the ACI is {d - s_i}; F_3^v(-theta_Z) = {s_i - d_1}, F_3(d_1) = {d - s_i - d_1}.
  std::vector<int> f1;
  std::vector<int> f2;
  for (int si : shape.s()) {
    f1.push_back(si - d[0]);
    f2.push_back(dt - si - d[0]);
  }
  f1.insert(f1.end(), {ds, d[1], d[2]});
  for (int a : dec.f2_prime) f2.push_back(theta_z - a);
  return BettiTable(3, {FreeModuleShifts(f1), FreeModuleShifts(f2), FreeModuleShifts{theta_g}},
                    Minimality::NotMinimal);
}

LinkedGorenstein link_aci_to_gorenstein(const ShapeDecomposition& dec) {
  const AciShape& shape = dec.shape;
  const Triple& d = shape.d();
  const LinkedDegrees degrees = linked_gorenstein_degrees(dec);
  const BettiTable raw = raw_linked_table(dec);

  LinkedGorenstein out{raw, degrees.gorenstein, degrees.ci_type, std::nullopt, false};
  if (shape.t_even()) {
    if (shape.dstar() != d[0]) {
      out.table = cancel(cancel(raw, 1, d[1], 1), 1, d[2], 1).with_minimality(Minimality::Minimal);
    } else {
      out.same_betti_witness = gorenstein_betti_table(degrees.gorenstein);
      // Both R(-d_2) and R(-d_3) are kept, so F_1 has t + 3 entries. Whether
      // they cancel depends on the ideal, so the table stays NotMinimal.
      // Kept as the shape when its degrees satisfy the Gaeta conditions;
      // otherwise the pair must cancel in any actual ideal and delta_G stays.
      try {
        out.shape = validate_degree_sequence(raw.module(1).shifts());
      } catch (const Error& e) {
        if (e.code() != ErrorCode::GaetaViolation) throw;
      }
    }
  } else {
    out.analogous_case = true;
    out.table = cancel(raw, 1, shape.dstar(), 1).with_minimality(Minimality::Minimal);
  }
  if (out.table.module(2) != dual_twist(out.table.module(1), out.shape.theta)) {
    throw Error(ErrorCode::LinkedSequenceInvalid,
                "linked table " + out.table.to_string() + " is not self-dual");
  }
  return out;
}

}  // namespace aci3
