#include "aci3/aci.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "aci3/error.hpp"

namespace aci3 {

AciShape::AciShape(Triple d, int dstar, std::vector<int> s)
    : d_(ord(d)), dstar_(dstar), s_(ord(std::move(s))) {
  if (s_.size() < 2) throw Error(ErrorCode::InvalidArgument, "Cohen-Macaulay type t must be >= 2");
  if (d_[0] <= 0 || dstar_ <= 0) {
    throw Error(ErrorCode::InvalidArgument, "generator degrees must be positive");
  }
  const int total = dtotal();
  for (int si : s_) {
    if (total - si < 3) {
      throw Error(ErrorCode::InvalidArgument,
                  "third syzygy twist d - s_i = " + std::to_string(total - si) + " < 3");
    }
  }
}

long AciShape::s_q() const { return std::accumulate(s_.begin(), s_.end(), 0L); }

long AciShape::u() const {
  const long dt = dtotal();
  return t_even() ? dt + 2L * dstar_ : 2L * (dt - dstar_);
}

long AciShape::expected_s_q() const {
  const long dt = dtotal();
  const long tt = t();
  return t_even() ? (tt / 2) * dt - dstar_ : ((tt - 1) / 2) * dt + dstar_;
}

std::string AciShape::to_string() const {
  std::ostringstream os;
  os << "d=(" << d_[0] << ',' << d_[1] << ',' << d_[2] << ") d*=" << dstar_ << " s=(";
  for (std::size_t k = 0; k < s_.size(); ++k) os << (k ? "," : "") << s_[k];
  os << ')';
  return os.str();
}

FreeModuleShifts expected_f2_prime(const Triple& d, int dstar, bool t_even) {
  if (t_even) return FreeModuleShifts{d[0] + dstar, d[1] + dstar, d[2] + dstar};
  return FreeModuleShifts{d[0] + d[1], d[0] + d[2], d[1] + d[2]};
}

int dstar_position(const Triple& d, int dstar) {
  if (dstar <= d[1]) return 1;
  if (dstar <= d[2]) return 2;
  return 3;
}

BettiTable aci_betti_table(const AciShape& shape) {
  const int dt = shape.dtotal();
  FreeModuleShifts s(shape.s());
  FreeModuleShifts f1{shape.d()[0], shape.d()[1], shape.d()[2], shape.dstar()};
  FreeModuleShifts f2 = direct_sum(expected_f2_prime(shape.d(), shape.dstar(), shape.t_even()), s);
  return BettiTable(3, {f1, f2, dual_twist(s, dt)});
}

DstarExtraction extract_dstar(const BettiTable& b) {
  if (b.codim() != 3) throw Error(ErrorCode::NotAciRanks, "codim " + std::to_string(b.codim()));
  const auto& f1 = b.module(1);
  const auto& f2 = b.module(2);
  const auto& f3 = b.module(3);
  const int t = static_cast<int>(f3.rank());
  if (f1.rank() != 4 || t < 2 || f2.rank() != static_cast<std::size_t>(t) + 3) {
    throw Error(ErrorCode::NotAciRanks, "ranks " + std::to_string(f1.rank()) + "," +
                                            std::to_string(f2.rank()) + "," + std::to_string(t) +
                                            " are not 4, t+3, t with t >= 2");
  }
  const long d = f1.sum();
  const long u = f2.sum() + f3.sum() - static_cast<long>(t) * d;
  const long twice = (t % 2 == 0) ? u - d : 2 * d - u;
  if (twice % 2 != 0) {
    throw Error(ErrorCode::NonIntegralDstar, "d*=" + std::to_string(twice) + "/2");
  }
  if (twice <= 0) {
    throw Error(ErrorCode::NonPositiveDstar, "d*=" + std::to_string(twice / 2));
  }
  return DstarExtraction{static_cast<int>(twice / 2), u, t, static_cast<int>(d)};
}

ShapeDecomposition ShapeDecomposition::from_shape(const AciShape& shape) {
  const Triple& d = shape.d();
  std::vector<int> sprime = shape.s();
  if (shape.t_even()) {
    sprime.push_back(shape.dstar() + d[0]);
  } else {
    sprime.push_back(d[0] + d[1]);
    sprime.push_back(d[0] + d[2]);
  }
  return ShapeDecomposition{
      shape,
      FreeModuleShifts(shape.s()),
      expected_f2_prime(d, shape.dstar(), shape.t_even()),
      ord(std::move(sprime)),
      dstar_position(d, shape.dstar()),
      ord(Triple{shape.dstar(), d[1], d[2]}),
  };
}

ShapeDecomposition decompose(const BettiTable& b) {
  const DstarExtraction ex = extract_dstar(b);
  const auto& f1 = b.module(1);
  const auto& f2 = b.module(2);
  const auto& f3 = b.module(3);

  const FreeModuleShifts dual = dual_twist(f3, ex.dtotal);
  if (!f2.contains(dual)) {
    const FreeModuleShifts missing = [&] {
      std::vector<int> out;
      std::set_difference(dual.begin(), dual.end(), f2.begin(), f2.end(), std::back_inserter(out));
      return FreeModuleShifts(out);
    }();
    throw Error(ErrorCode::DualNotEmbedded, "F_3^v(-" + std::to_string(ex.dtotal) + ")=" +
                                                dual.to_string() + " misses shift " +
                                                std::to_string(missing.min()) + " in F_2");
  }
  const FreeModuleShifts f2_prime = subtract(f2, dual);

  if (f1.multiplicity(ex.dstar) == 0) {
    throw Error(ErrorCode::DstarNotAGenerator,
                "d*=" + std::to_string(ex.dstar) + " not in F_1=" + f1.to_string());
  }
  const auto rest = subtract(f1, FreeModuleShifts{ex.dstar}).shifts();
  const Triple d{rest[0], rest[1], rest[2]};

  const bool even = ex.t % 2 == 0;
  const FreeModuleShifts want = expected_f2_prime(d, ex.dstar, even);
  if (f2_prime != want) {
    for (std::size_t k = 0; k < want.rank(); ++k) {
      if (want.shifts()[k] != f2_prime.shifts()[k]) {
        throw Error(ErrorCode::F2PrimeMismatch,
                    "F_2'=" + f2_prime.to_string() + " expected " + want.to_string() +
                        "; first differing shift " + std::to_string(f2_prime.shifts()[k]));
      }
    }
  }

  std::vector<int> s;
  for (int g : f3) s.push_back(ex.dtotal - g);
  AciShape shape(d, ex.dstar, std::move(s));
  if (!shape.sum_identity_holds()) {
    throw Error(ErrorCode::SumIdentityViolation,
                "s_Q=" + std::to_string(shape.s_q()) + " expected " +
                    std::to_string(shape.expected_s_q()) + " (s_1=" +
                    std::to_string(shape.s().front()) + ")");
  }
  ShapeDecomposition out = ShapeDecomposition::from_shape(shape);
  out.f2_dual_part = dual;
  out.f2_prime = f2_prime;
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Valid: return "Valid";
    case Verdict::Invalid: return "Invalid";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string_view to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::None: return "None";
    case VerdictReason::Decomposition: return "Decomposition";
    case VerdictReason::SumIdentity: return "SumIdentity";
    case VerdictReason::Gaeta: return "Gaeta";
    case VerdictReason::LinkedSequence: return "LinkedSequence";
    case VerdictReason::MinCondition: return "MinCondition";
    case VerdictReason::MinUnknown: return "MinUnknown";
  }
  return "?";
}

namespace {

CharacterizationResult invalid(VerdictReason r, std::string detail) {
  return CharacterizationResult{Verdict::Invalid, r, std::move(detail), std::nullopt};
}

// Empty when condition 3 holds with d* placed at position p of e.
std::string min_condition_failure(const Triple& m, const Triple& e, int dstar, int p, bool even) {
  for (int i = 1; i <= 3; ++i) {
    const int mi = m[static_cast<std::size_t>(i - 1)];
    const int ei = e[static_cast<std::size_t>(i - 1)];
    if (i == p) {
      if (even ? mi <= dstar : mi < dstar) continue;
      return "m_" + std::to_string(i) + "=" + std::to_string(mi) + " fails" +
             (even ? " <= d*=" : " < d*=") + std::to_string(dstar);
    }
    if (even ? mi < ei : mi <= ei) continue;
    return "m_" + std::to_string(i) + "=" + std::to_string(mi) + " fails" +
           (even ? " < e_" : " <= e_") + std::to_string(i) + "=" + std::to_string(ei);
  }
  return "";
}

}  // namespace

CharacterizationResult check_characterization(const ShapeDecomposition& dec,
                                              const MinProvider& provider) {
  const AciShape& shape = dec.shape;
  const long dt = shape.dtotal();

  if (!shape.sum_identity_holds()) {
    return invalid(VerdictReason::SumIdentity, "sum s_i = " + std::to_string(shape.s_q()) +
                                                   ", required " +
                                                   std::to_string(shape.expected_s_q()));
  }

  // d > s'_i + s'_{L+2-i} for 2 <= i <= L, L = |s'|; each pair is visited
  // from both ends.
  const auto& sp = dec.sprime;
  const int len = static_cast<int>(sp.size());
  for (int i = 2; i <= len; ++i) {
    const int a = sp[static_cast<std::size_t>(i - 1)];
    const int b = sp[static_cast<std::size_t>(len + 1 - i)];
    if (dt <= a + b) {
      return invalid(VerdictReason::Gaeta, "i=" + std::to_string(i) + ": d=" +
                                               std::to_string(dt) + " <= s'_i + s'_j = " +
                                               std::to_string(a) + "+" + std::to_string(b));
    }
  }

  std::optional<LinkedDegrees> linked;
  try {
    linked = linked_gorenstein_degrees(dec);
  } catch (const Error& e) {
    return invalid(VerdictReason::LinkedSequence, e.what());
  }

  auto m = provider.query(linked->gorenstein);
  if (!m) {
    return CharacterizationResult{Verdict::Inconclusive, VerdictReason::MinUnknown,
                                  "min" + linked->gorenstein.delta.to_string() + " unknown to " +
                                      provider.name(),
                                  std::nullopt};
  }

  const bool even = shape.t_even();
  const auto failure = min_condition_failure(*m, dec.e, shape.dstar(), dec.p, even);
  if (!failure.empty()) {
    auto r = invalid(VerdictReason::MinCondition, failure);
    r.m = m;
    for (int q = 1; q <= 3; ++q) {
      if (q != dec.p && dec.e[static_cast<std::size_t>(q - 1)] == shape.dstar() &&
          min_condition_failure(*m, dec.e, shape.dstar(), q, even).empty()) {
        r.tied_position = q;
        break;
      }
    }
    return r;
  }
  return CharacterizationResult{Verdict::Valid, VerdictReason::None, "", m};
}

CharacterizationResult check_table(const BettiTable& b, const MinProvider& provider) {
  std::optional<ShapeDecomposition> dec;
  try {
    dec = decompose(b);
  } catch (const Error& e) {
    return invalid(e.code() == ErrorCode::SumIdentityViolation ? VerdictReason::SumIdentity
                                                               : VerdictReason::Decomposition,
                   e.what());
  }
  return check_characterization(*dec, provider);
}

LinkedDegrees linked_gorenstein_degrees(const ShapeDecomposition& dec) {
  const AciShape& shape = dec.shape;
  const Triple& d = shape.d();
  std::vector<int> delta;
  for (int v : dec.sprime) delta.push_back(v - d[0]);
  const int theta_g = shape.dstar() + d[1] + d[2] - d[0];
  try {
    GorensteinShape g = validate_degree_sequence(delta);
    if (g.theta != theta_g) {
      throw Error(ErrorCode::LinkedSequenceInvalid,
                  "theta of " + g.delta.to_string() + " is " + std::to_string(g.theta) +
                      ", expected d*+d_2+d_3-d_1=" + std::to_string(theta_g));
    }
    return LinkedDegrees{std::move(g), ord(Triple{shape.dstar(), d[1], d[2]})};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::LinkedSequenceInvalid) throw;
    throw Error(ErrorCode::LinkedSequenceInvalid, e.what());
  }
}

}  // namespace aci3
