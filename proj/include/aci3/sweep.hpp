#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "aci3/aci.hpp"
#include "aci3/gorenstein.hpp"
#include "aci3/oracle/fp.hpp"

namespace aci3 {

enum class SweepKind { Mont2, Mont3 };

std::string_view to_string(SweepKind kind);
SweepKind sweep_kind_from_string(std::string_view s);

/// Exponents (a1, a2, a3, b1, b2, b3); b3 = 0 for mont2.
using SweepTuple = std::array<int, 6>;

struct SweepParams {
  SweepKind kind = SweepKind::Mont3;
  int max_exponent = 3;  // at most 6
  /// Restricts the sweep to one tuple (reproduction of a single row).
  std::optional<SweepTuple> only;
};

enum class RowStatus { Pass, Fail, Inconclusive };
std::string_view to_string(RowStatus s);

/// -1 marks a check that does not apply to the row.
struct SweepRow {
  SweepTuple tuple{};
  int t = 0;
  int dstar = 0;
  int oracle_match = 0;        // closed form == lcm-lattice oracle
  int decomposes = 0;          // decompose() succeeds
  int sum_identity = 0;        // parity sum identity
  int dstar_expected = 0;      // d* = a3 (mont2) or b1+b2+b3 (mont3)
  int realize_inequality = -1; // mont3: d* < s_i < d* + d_i
  int realize_roundtrip = 0;   // realize(shape) resolves to the same table
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Triple> m;
  int tied_position = 0;
  RowStatus status = RowStatus::Fail;
  std::string detail;
  std::string reproduce;
};

struct SweepReport {
  SweepParams params;
  std::string provider;
  std::vector<SweepRow> rows;
  int pass = 0;
  int fail = 0;
  int inconclusive = 0;
  int total() const { return static_cast<int>(rows.size()); }
};

/// Parameter tuples in lexicographic order.
std::vector<SweepTuple> sweep_tuples(const SweepParams& params);

SweepRow evaluate_sweep_row(SweepKind kind, const SweepTuple& tuple, const MinProvider& provider);

/// Parallel evaluates rows with OpenMP; Serial is the reference. Both
/// return rows in tuple order. Throws InvalidArgument for max_exponent > 6.
SweepReport run_sweep(const SweepParams& params, const MinProvider& provider,
                      oracle::Execution exec = oracle::Execution::Parallel);

/// Header line plus one line per row; see docs/formats.md.
void write_sweep_csv(std::ostream& out, const SweepReport& report);

}  // namespace aci3
