#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace aci3 {

/// Multiset of twists a, standing for the graded free module (+) R(-a).
/// Always kept sorted ascending, so equality is multiset equality.
class FreeModuleShifts {
 public:
  FreeModuleShifts() = default;
  FreeModuleShifts(std::initializer_list<int> shifts);
  explicit FreeModuleShifts(std::vector<int> shifts);

  /// `count` copies of the twist `a`.
  static FreeModuleShifts repeated(int a, int count);

  const std::vector<int>& shifts() const { return shifts_; }
  std::size_t rank() const { return shifts_.size(); }
  bool empty() const { return shifts_.empty(); }
  std::int64_t sum() const;
  int multiplicity(int a) const;
  int min() const;
  int max() const;

  /// Adds `delta` to every twist: M(-delta).
  FreeModuleShifts shifted(int delta) const;

  bool contains(const FreeModuleShifts& sub) const;

  auto begin() const { return shifts_.begin(); }
  auto end() const { return shifts_.end(); }

  friend bool operator==(const FreeModuleShifts&, const FreeModuleShifts&) = default;

  std::string to_string() const;

 private:
  std::vector<int> shifts_;
};

/// F^v(-d): the multiset {d - a}.
FreeModuleShifts dual_twist(const FreeModuleShifts& f, int d);
FreeModuleShifts direct_sum(const FreeModuleShifts& f, const FreeModuleShifts& g);
/// Multiset difference; throws NotSubmodule if g is not contained in f.
FreeModuleShifts subtract(const FreeModuleShifts& f, const FreeModuleShifts& g);

/// Whether a table is known to be a minimal resolution.
enum class Minimality {
  Minimal,
  NotMinimal,           // e.g. a raw mapping cone
  FormallyMinimalized,  // greedy cancellation, no semantic guarantee
};

/// Shift-level resolution 0 -> F_c -> ... -> F_1 -> R of an artinian cyclic
/// module. F_0 = R is implicit.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(int codim, std::vector<FreeModuleShifts> modules,
             Minimality minimality = Minimality::Minimal);

  int codim() const { return codim_; }
  /// F_i for 1 <= i <= codim.
  const FreeModuleShifts& module(int i) const;
  const std::vector<FreeModuleShifts>& modules() const { return modules_; }
  Minimality minimality() const { return minimality_; }
  bool is_minimal() const { return minimality_ == Minimality::Minimal; }

  BettiTable with_minimality(Minimality m) const;

  /// 1 - rank F_1 + rank F_2 - ...
  std::int64_t rank_alternating_sum() const;
  /// -sum(F_1) + sum(F_2) - ...
  std::int64_t shift_alternating_sum() const;
  /// Largest twist in the last module, or 0 for an empty tail.
  int top_shift() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.codim_ == b.codim_ && a.modules_ == b.modules_;
  }

  std::string to_string() const;

 private:
  int codim_ = 0;
  std::vector<FreeModuleShifts> modules_;
  Minimality minimality_ = Minimality::Minimal;
};

/// Koszul table of a regular sequence with the given degrees.
BettiTable koszul_table(const std::vector<int>& degrees);

/// C(n, k) with the convention C(n, k) = 0 for n < k or k < 0.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Hilbert function of R/I in degree j, from the alternating binomial sum.
/// Throws NegativeValue when the sum is negative.
std::int64_t hilbert_function(const BettiTable& b, int j);

/// Same sum without the sign check; used to test identities that may be
/// evaluated on inconsistent input.
std::int64_t hilbert_function_unchecked(const BettiTable& b, int j);

/// Removes `count` copies of twist `a` from both F_i and F_{i+1}.
BettiTable cancel(const BettiTable& b, int i, int a, int count);

/// Greedily cancels every twist shared by consecutive modules. The result
/// is labelled FormallyMinimalized: a formal cancellation need not be
/// realizable by an actual ideal.
BettiTable cancel_all(const BettiTable& b);

}  // namespace aci3
