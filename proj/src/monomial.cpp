#include "aci3/monomial.hpp"

#include <algorithm>
#include <sstream>

#include "aci3/error.hpp"

namespace aci3 {

bool divides(const Exponent& a, const Exponent& b) {
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
}

MonomialIdeal3::MonomialIdeal3(std::vector<Exponent> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw Error(ErrorCode::InvalidArgument, "no generators");
  for (const auto& g : gens_) {
    if (g[0] < 0 || g[1] < 0 || g[2] < 0) {
      throw Error(ErrorCode::InvalidArgument, "negative exponent");
    }
    if (total_degree(g) == 0) throw Error(ErrorCode::InvalidArgument, "unit ideal");
  }
  std::sort(gens_.begin(), gens_.end());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      if (i != j && divides(gens_[i], gens_[j])) {
        throw Error(ErrorCode::NonMinimalGenerators,
                    "generator " + std::to_string(j) + " is divisible by generator " +
                        std::to_string(i));
      }
    }
  }
}

MonomialIdeal3 MonomialIdeal3::minimalized(std::vector<Exponent> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<Exponent> kept;
  for (std::size_t j = 0; j < generators.size(); ++j) {
    bool redundant = false;
    for (std::size_t i = 0; i < generators.size() && !redundant; ++i) {
      redundant = i != j && divides(generators[i], generators[j]);
    }
    if (!redundant) kept.push_back(generators[j]);
  }
  return MonomialIdeal3(std::move(kept));
}

bool MonomialIdeal3::is_artinian() const {
  bool pure[3] = {false, false, false};
  for (const auto& g : gens_) {
    int nonzero = 0;
    int var = -1;
    for (int k = 0; k < 3; ++k) {
      if (g[static_cast<std::size_t>(k)] > 0) {
        ++nonzero;
        var = k;
      }
    }
    if (nonzero == 1) pure[var] = true;
  }
  return pure[0] && pure[1] && pure[2];
}

bool MonomialIdeal3::contains(const Exponent& monomial) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Exponent& g) { return divides(g, monomial); });
}

std::string MonomialIdeal3::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    if (k) os << ',';
    const auto& g = gens_[k];
    bool any = false;
    const char names[] = {'x', 'y', 'z'};
    for (int v = 0; v < 3; ++v) {
      const int e = g[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      os << names[v];
      if (e > 1) os << '^' << e;
      any = true;
    }
    if (!any) os << '1';
  }
  os << ')';
  return os.str();
}

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::PreconditionViolation, what);
}

}  // namespace

BettiTable resolution_mont2(int a1, int a2, int a3, int b1, int b2) {
  require(0 < b1 && b1 < a1, "0 < b1 < a1");
  require(0 < b2 && b2 < a2, "0 < b2 < a2");
  require(a3 > 0, "a3 > 0");
  return BettiTable(3, {
                           FreeModuleShifts{a1, a2, a3, b1 + b2},
                           FreeModuleShifts{b1 + a2, a1 + b2, a1 + a3, a2 + a3, b1 + b2 + a3},
                           FreeModuleShifts{a1 + b2 + a3, b1 + a2 + a3},
                       });
}

BettiTable resolution_mont3(int a1, int a2, int a3, int b1, int b2, int b3) {
  require(0 < b1 && b1 < a1, "0 < b1 < a1");
  require(0 < b2 && b2 < a2, "0 < b2 < a2");
  require(0 < b3 && b3 < a3, "0 < b3 < a3");
  return BettiTable(3, {
                           FreeModuleShifts{a1, a2, a3, b1 + b2 + b3},
                           FreeModuleShifts{b1 + b2 + a3, b1 + a2 + b3, a1 + b2 + b3, a1 + a2,
                                            a1 + a3, a2 + a3},
                           FreeModuleShifts{a1 + a2 + b3, a1 + b2 + a3, b1 + a2 + a3},
                       });
}

Triple mont3_v(int a1, int a2, int a3, int b1, int b2, int b3) {
  return {a1 + b2 + b3, b1 + a2 + b3, b1 + b2 + a3};
}

MonomialIdeal3 realize_t2(const AciShape& shape) {
  if (shape.t() != 2) {
    throw Error(ErrorCode::NotType2, "t=" + std::to_string(shape.t()));
  }
  const ClosedFormMinProvider ci;
  const auto verdict = check_characterization(ShapeDecomposition::from_shape(shape), ci);
  if (verdict.verdict != Verdict::Valid) {
    throw Error(ErrorCode::CharacterizationFailed,
                std::string(to_string(verdict.reason)) + ": " + verdict.detail);
  }
  const auto& d = shape.d();
  const auto& s = shape.s();
  const int ex = s[1] - d[2];
  const int ey = s[0] - d[1];
  if (ex <= 0 || ey <= 0) {
    throw Error(ErrorCode::CharacterizationFailed,
                "non-positive mixed exponent (" + std::to_string(ex) + "," + std::to_string(ey) +
                    ")");
  }
  return MonomialIdeal3({{d[1], 0, 0}, {0, d[2], 0}, {0, 0, shape.dstar()}, {ex, ey, 0}});
}

RealizeT3Result realize_t3(const AciShape& shape) {
  if (shape.t() != 3) {
    throw Error(ErrorCode::NotType3, "t=" + std::to_string(shape.t()));
  }
  const auto& d = shape.d();
  const auto& s = shape.s();
  const int ds = shape.dstar();
  for (int i = 0; i < 3; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const std::string idx = std::to_string(i + 1);
    if (!(ds < s[k])) {
      return {std::nullopt,
              RealizeFailure{i + 1, true,
                             "d* < s_" + idx + " fails: s_" + idx + "=" + std::to_string(s[k]) +
                                 " <= d*=" + std::to_string(ds)}};
    }
    if (!(s[k] < ds + d[k])) {
      return {std::nullopt,
              RealizeFailure{i + 1, false,
                             "s_" + idx + " < d*+d_" + idx + " fails: s_" + idx + "=" +
                                 std::to_string(s[k]) + " >= " + std::to_string(ds + d[k])}};
    }
  }
  const Exponent mixed{ds + d[0] - s[0], ds + d[1] - s[1], ds + d[2] - s[2]};
  // Four minimal generators: each mixed exponent is strictly below d_i.
  for (int k = 0; k < 3; ++k) {
    const auto u = static_cast<std::size_t>(k);
    if (mixed[u] <= 0 || mixed[u] >= d[u]) {
      throw Error(ErrorCode::PreconditionViolation, "mixed exponent out of range");
    }
  }
  return {MonomialIdeal3({{d[0], 0, 0}, {0, d[1], 0}, {0, 0, d[2]}, mixed}), std::nullopt};
}

}  // namespace aci3
