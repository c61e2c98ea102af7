#include "aci3/sweep.hpp"

#include "aci3/error.hpp"
#include "aci3/monomial.hpp"

namespace aci3 {

std::string_view to_string(SweepKind kind) { return kind == SweepKind::Mont2 ? "mont2" : "mont3"; }

SweepKind sweep_kind_from_string(std::string_view s) {
  if (s == "mont2") return SweepKind::Mont2;
  if (s == "mont3") return SweepKind::Mont3;
  throw Error(ErrorCode::InvalidArgument, "unknown sweep kind '" + std::string(s) + "'");
}

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Fail: return "fail";
    case RowStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<SweepTuple> sweep_tuples(const SweepParams& params) {
  if (params.max_exponent > 6) {
    throw Error(ErrorCode::InvalidArgument,
                "max exponent " + std::to_string(params.max_exponent) + " > 6");
  }
  if (params.only) return {*params.only};
  const int n = params.max_exponent;
  std::vector<SweepTuple> out;
  for (int a1 = 2; a1 <= n; ++a1)
    for (int a2 = 2; a2 <= n; ++a2)
      for (int a3 = 1; a3 <= n; ++a3)
        for (int b1 = 1; b1 < a1; ++b1)
          for (int b2 = 1; b2 < a2; ++b2) {
            if (params.kind == SweepKind::Mont2) {
              out.push_back({a1, a2, a3, b1, b2, 0});
            } else {
              for (int b3 = 1; b3 < a3; ++b3) out.push_back({a1, a2, a3, b1, b2, b3});
            }
          }
  return out;
}

namespace {

std::string reproduce_command(SweepKind kind, const SweepTuple& t) {
  std::string only = std::to_string(t[0]);
  const int len = kind == SweepKind::Mont2 ? 5 : 6;
  for (int i = 1; i < len; ++i) only += "," + std::to_string(t[static_cast<std::size_t>(i)]);
  return "aci3 sweep " + std::string(to_string(kind)) + " --only " + only;
}

}  // namespace

SweepRow evaluate_sweep_row(SweepKind kind, const SweepTuple& tuple, const MinProvider& provider) {
  SweepRow row;
  row.tuple = tuple;
  row.reproduce = reproduce_command(kind, tuple);
  const auto [a1, a2, a3, b1, b2, b3] = tuple;
  const bool two = kind == SweepKind::Mont2;
  try {
    const BettiTable table =
        two ? resolution_mont2(a1, a2, a3, b1, b2) : resolution_mont3(a1, a2, a3, b1, b2, b3);
    const MonomialIdeal3 ideal =
        two ? MonomialIdeal3({{a1, 0, 0}, {0, a2, 0}, {0, 0, a3}, {b1, b2, 0}})
            : MonomialIdeal3({{a1, 0, 0}, {0, a2, 0}, {0, 0, a3}, {b1, b2, b3}});
    row.oracle_match = minimal_resolution_oracle(ideal) == table ? 1 : 0;

    const DstarExtraction ex = extract_dstar(table);
    row.t = ex.t;
    row.dstar = ex.dstar;
    row.dstar_expected = ex.dstar == (two ? a3 : b1 + b2 + b3) ? 1 : 0;

    std::optional<ShapeDecomposition> dec;
    try {
      dec = decompose(table);
      row.decomposes = 1;
    } catch (const Error& e) {
      row.detail = e.what();
    }
    if (dec) {
      const AciShape& shape = dec->shape;
      row.sum_identity = shape.sum_identity_holds() ? 1 : 0;
      if (shape.t() == 3) {
        bool ok = true;
        for (std::size_t i = 0; i < 3; ++i) {
          ok = ok && shape.dstar() < shape.s()[i] && shape.s()[i] < shape.dstar() + shape.d()[i];
        }
        row.realize_inequality = ok ? 1 : 0;
      }
      std::optional<MonomialIdeal3> realized;
      try {
        if (shape.t() == 2) {
          realized = realize_t2(shape);
        } else if (shape.t() == 3) {
          realized = realize_t3(shape).ideal;
        }
      } catch (const Error& e) {
        row.detail = e.what();
      }
      row.realize_roundtrip = realized && minimal_resolution_oracle(*realized) == table ? 1 : 0;

      const CharacterizationResult res = check_characterization(*dec, provider);
      row.verdict = res.verdict;
      row.m = res.m;
      row.tied_position = res.tied_position;
      if (res.verdict != Verdict::Valid && row.detail.empty()) {
        row.detail = std::string(to_string(res.reason)) + ": " + res.detail;
      }
    }
  } catch (const Error& e) {
    row.detail = e.what();
  }

  const bool hard_ok = row.oracle_match == 1 && row.decomposes == 1 && row.sum_identity == 1 &&
                       row.dstar_expected == 1 && row.realize_inequality != 0 &&
                       row.realize_roundtrip == 1;
  if (!hard_ok || row.verdict == Verdict::Invalid) {
    row.status = RowStatus::Fail;
  } else if (row.verdict == Verdict::Inconclusive) {
    row.status = RowStatus::Inconclusive;
  } else {
    row.status = RowStatus::Pass;
  }
  return row;
}

SweepReport run_sweep(const SweepParams& params, const MinProvider& provider,
                      oracle::Execution exec) {
  const auto tuples = sweep_tuples(params);
  SweepReport report;
  report.params = params;
  report.provider = provider.name();
  report.rows.resize(tuples.size());
  const auto n = static_cast<long>(tuples.size());
  if (exec == oracle::Execution::Serial) {
    for (long i = 0; i < n; ++i) {
      report.rows[static_cast<std::size_t>(i)] =
          evaluate_sweep_row(params.kind, tuples[static_cast<std::size_t>(i)], provider);
    }
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      report.rows[static_cast<std::size_t>(i)] =
          evaluate_sweep_row(params.kind, tuples[static_cast<std::size_t>(i)], provider);
    }
  }
  for (const auto& r : report.rows) {
    if (r.status == RowStatus::Pass) ++report.pass;
    if (r.status == RowStatus::Fail) ++report.fail;
    if (r.status == RowStatus::Inconclusive) ++report.inconclusive;
  }
  return report;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
  out << "kind,a1,a2,a3,b1,b2,b3,t,dstar,oracle_match,decomposes,sum_identity,dstar_expected,"
         "realize_inequality,realize_roundtrip,verdict,m1,m2,m3,tied_position,status,detail,reproduce\n";
  for (const auto& r : report.rows) {
    out << to_string(report.params.kind);
    for (int v : r.tuple) out << ',' << v;
    out << ',' << r.t << ',' << r.dstar << ',' << r.oracle_match << ',' << r.decomposes << ','
        << r.sum_identity << ',' << r.dstar_expected << ',' << r.realize_inequality << ','
        << r.realize_roundtrip << ',' << to_string(r.verdict);
    for (std::size_t i = 0; i < 3; ++i) out << ',' << (r.m ? (*r.m)[i] : -1);
    out << ',' << r.tied_position << ',' << to_string(r.status) << ',' << csv_field(r.detail) << ','
        << csv_field(r.status == RowStatus::Fail ? r.reproduce : "") << '\n';
  }
}

}  // namespace aci3
