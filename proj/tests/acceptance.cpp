// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "aci3/aci.hpp"
#include "aci3/error.hpp"
#include "aci3/gorenstein.hpp"
#include "aci3/io/json_io.hpp"
#include "aci3/liaison.hpp"
#include "aci3/monomial.hpp"
#include "aci3/oracle/lab.hpp"

using namespace aci3;
using namespace aci3::oracle;

namespace {

BettiTable load(const std::string& name) {
  return io::table_from_json(io::read_json_file(std::string(ACI3_TEST_DATA) + "/" + name));
}

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note << what;
    }
  }
};

int failures = 0;

void run(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.note << "exception: " << e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.ok) ++failures;
  std::cout << "criterion " << n << ": " << (out.ok ? "PASS" : "FAIL") << "  " << title;
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << secs;
  std::cout << " [" << t.str() << "s]";
  if (!out.note.str().empty()) std::cout << "  (" << out.note.str() << ")";
  std::cout << '\n' << std::flush;
}

template <class F>
void for_mont2(int max_a, F&& f) {
  for (int a1 = 2; a1 <= max_a; ++a1)
    for (int a2 = 2; a2 <= max_a; ++a2)
      for (int a3 = 1; a3 <= max_a; ++a3)
        for (int b1 = 1; b1 < a1; ++b1)
          for (int b2 = 1; b2 < a2; ++b2) f(a1, a2, a3, b1, b2);
}

template <class F>
void for_mont3(int max_a, F&& f) {
  for (int a1 = 2; a1 <= max_a; ++a1)
    for (int a2 = 2; a2 <= max_a; ++a2)
      for (int a3 = 2; a3 <= max_a; ++a3)
        for (int b1 = 1; b1 < a1; ++b1)
          for (int b2 = 1; b2 < a2; ++b2)
            for (int b3 = 1; b3 < a3; ++b3) f(a1, a2, a3, b1, b2, b3);
}

std::int64_t hf_or_zero(const BettiTable& b, int j) { return j < 0 ? 0 : hilbert_function(b, j); }

}  // namespace

int main() {
  run(1, "first worked table: analyze-betti", [](Outcome& o) {
    const auto dec = decompose(load("golden_a.json"));
    const auto ex = extract_dstar(load("golden_a.json"));
    o.require(dec.shape.dstar() == 14, "d*");
    o.require(dec.shape.d() == Triple{8, 9, 10}, "d");
    o.require(dec.shape.s() == std::vector<int>{19, 19, 19, 19, 20, 20, 20, 20, 21, 21, 21}, "s");
    o.require(dec.shape.t() == 11, "t");
    o.require(ex.u == 54 && dec.shape.u() == 54, "u");
    o.require(dec.shape.dtotal() == 41, "d");
    o.note << "d*=14 d=(8,9,10) t=11 u=54 d=41";
  });

  run(2, "second worked table: analyze, link, realize", [](Outcome& o) {
    const auto table = load("golden_b.json");
    const auto dec = decompose(table);
    o.require(dec.shape.dstar() == 4, "d*");
    const auto linked = link_aci_to_gorenstein(dec);
    o.require(linked.table.module(1) == FreeModuleShifts{3, 4, 6, 6, 7} &&
                  linked.table.module(2) == FreeModuleShifts{6, 7, 7, 9, 10} &&
                  linked.table.module(3) == FreeModuleShifts{13},
              "linked table " + linked.table.to_string());
    o.require(!linked.table.is_minimal(), "linked table must stay unminimalized");
    o.require(linked.same_betti_witness.has_value() &&
                  *linked.same_betti_witness ==
                      gorenstein_betti_table(validate_degree_sequence({3, 4, 6})),
              "witness table");
    const auto j = realize_t2(dec.shape);
    o.require(j == MonomialIdeal3({{6, 0, 0}, {0, 7, 0}, {0, 0, 4}, {3, 1, 0}}), j.to_string());
    o.require(minimal_resolution_oracle(j) == table, "lcm oracle table");
    auto fp = GradedIdealFp::from_monomials(j.generators());
    o.require(minimal_resolution_fp(fp) == table, "F_p oracle table");
    o.note << "J=" << j.to_string();
  });

  run(3, "third worked table: roundtrip is NotRealizable", [](Outcome& o) {
    const auto dec = decompose(load("golden_c.json"));
    o.require(dec.shape.dstar() == 5, "d*");
    o.require(dec.shape.s() == std::vector<int>{4, 6, 6}, "s");
    const auto r = realize_t3(dec.shape);
    o.require(!r.ideal && r.failure && r.failure->index == 1 && r.failure->lower_bound,
              "expected failure of d* < s_1");
    if (r.failure) o.note << r.failure->detail;
  });

  int mont2_count = 0, mont3_count = 0;
  run(4, "closed forms equal the lcm-lattice oracle (mont2 a<=5, mont3 a<=4)", [&](Outcome& o) {
    for_mont2(5, [&](int a1, int a2, int a3, int b1, int b2) {
      ++mont2_count;
      const auto closed = resolution_mont2(a1, a2, a3, b1, b2);
      const auto oracle = minimal_resolution_oracle(
          MonomialIdeal3({{a1, 0, 0}, {0, a2, 0}, {0, 0, a3}, {b1, b2, 0}}));
      o.require(closed == oracle, "mont2 mismatch at " + closed.to_string());
      o.require(extract_dstar(closed).dstar == a3, "mont2 d* != a3");
    });
    for_mont3(4, [&](int a1, int a2, int a3, int b1, int b2, int b3) {
      ++mont3_count;
      const auto closed = resolution_mont3(a1, a2, a3, b1, b2, b3);
      const auto oracle = minimal_resolution_oracle(
          MonomialIdeal3({{a1, 0, 0}, {0, a2, 0}, {0, 0, a3}, {b1, b2, b3}}));
      o.require(closed == oracle, "mont3 mismatch at " + closed.to_string());
      o.require(extract_dstar(closed).dstar == b1 + b2 + b3, "mont3 d* != b1+b2+b3");
    });
    o.note << mont2_count << " mont2 + " << mont3_count << " mont3 instances";
  });

  run(5, "every criterion-4 table decomposes and satisfies the sum identity", [](Outcome& o) {
    int n = 0;
    auto check = [&](const BettiTable& t) {
      ++n;
      try {
        const auto dec = decompose(t);
        o.require(dec.shape.sum_identity_holds(), "sum identity at " + t.to_string());
        o.require(dec.shape.s_q() == dec.shape.expected_s_q(), "s_Q");
      } catch (const Error& e) {
        o.require(false, std::string(e.what()));
      }
    };
    for_mont2(5, [&](int a1, int a2, int a3, int b1, int b2) {
      check(resolution_mont2(a1, a2, a3, b1, b2));
    });
    for_mont3(4, [&](int a1, int a2, int a3, int b1, int b2, int b3) {
      check(resolution_mont3(a1, a2, a3, b1, b2, b3));
    });
    o.note << n << " tables";
  });

  run(6, "Gorenstein tables for all valid delta with entries <= 8 are self-dual", [](Outcome& o) {
    int valid = 0;
    for (int len = 3; len <= 9; len += 2) {
      std::vector<int> v(static_cast<std::size_t>(len));
      std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == len) {
          GorensteinShape shape{DegreeSequence({1, 1, 1}), 3};
          try {
            shape = validate_degree_sequence(v);
          } catch (const Error&) {
            return;
          }
          ++valid;
          const auto b = gorenstein_betti_table(shape);
          o.require(b.module(2) == dual_twist(b.module(1), shape.theta), "duality " + b.to_string());
          o.require(b.rank_alternating_sum() == 0 && b.shift_alternating_sum() == 0,
                    "alternating sums " + b.to_string());
          return;
        }
        for (int x = lo; x <= 8; ++x) {
          v[static_cast<std::size_t>(pos)] = x;
          rec(pos + 1, x);
        }
      };
      rec(0, 1);
    }
    o.note << valid << " sequences of length 3..9";
  });

  run(7, "liaison Hilbert function identity HF(Q,j) = HF(Z,j) - HF(G, theta_Z - 3 - j)",
      [](Outcome& o) {
        // Z = (x^a, y^b, z^c), Q = Z + (f) with f random of degree d*, G = Z : Q.
        const PrimeField field;
        std::mt19937_64 rng(2718);
        int triples = 0, socle_cases = 0, socle_linear = 0;
        for (int a = 1; a <= 3; ++a)
          for (int b = a; b <= 3; ++b)
            for (int c = b; c <= 3; ++c) {
              const int theta_z = a + b + c;
              const int e = theta_z - 3;
              for (int ds = 1; ds <= e; ++ds) {
                const std::vector<Exponent> zgens{{a, 0, 0}, {0, b, 0}, {0, 0, c}};
                auto z = GradedIdealFp::from_monomials(zgens, field);
                std::vector<HomogeneousPoly> qgens;
                for (const auto& g : zgens) qgens.push_back(HomogeneousPoly::monomial(g));
                qgens.push_back(HomogeneousPoly::random(ds, field, rng));
                GradedIdealFp q(qgens, field);
                auto g = colon_ideal(z, q, theta_z + 2);
                const auto k_table = koszul_table({a, b, c});
                const auto g_table = minimal_resolution_fp(g);
                const auto q_table = mapping_cone_resolution(g_table, k_table, LinkContext(theta_z, ds, 3));
                ++triples;
                for (int j = 0; j <= e + 1; ++j) {
                  const auto rhs = hilbert_function(k_table, j) - hf_or_zero(g_table, theta_z - 3 - j);
                  o.require(hilbert_function_unchecked(q_table, j) == rhs, "cone table HF; ");
                  o.require(q.quotient_dim(j) == rhs, "actual quotient HF; ");
                }
                if (ds == e && k_table.module(1).max() < e) {
                  ++socle_cases;
                  const auto sq = socle_degree_resolution(k_table, 3, e);
                  const auto actual = minimal_resolution_fp(q);
                  const bool match = sq.is_minimal() ? sq == actual
                                                   : cancel(sq, 2, e + 2, k_table.module(1).multiplicity(1)) == actual;
                  o.require(match, "socle-degree table " + sq.to_string() + " vs oracle " +
                                       actual.to_string() + "; ");
                  if (!sq.is_minimal()) ++socle_linear;
                  for (int j = 0; j <= e + 1; ++j) {
                    o.require(hilbert_function(sq, j) ==
                                  hilbert_function(k_table, j) -
                                      hf_or_zero(koszul_table({1, 1, 1}), theta_z - 3 - j),
                              "socle-degree identity");
                  }
                }
              }
            }
        o.require(triples >= 25, "too few triples");
        o.note << triples << " triples, " << socle_cases << " socle-degree cases ("
                << socle_linear << " with a linear generator, minimal after cancellation)";
      });
  {
    // The identity with HF(G, theta_Z - j) in place of HF(G, theta_Z - 3 - j).
    const auto k = koszul_table({2, 2, 2});
    const auto g = koszul_table({1, 1, 1});
    const auto q = mapping_cone_resolution(g, k, LinkContext(6, 3, 3));
    const int j = 6;
    std::cout << "info: HF(G, theta_Z - j) form at Z=(x2,y2,z2), G=(x,y,z), d*=3, j=6: HF(Q)="
              << hilbert_function(q, j) << ", HF(Z) - HF(G, 0) = "
              << hilbert_function(k, j) - hilbert_function(g, 0) << '\n';
  }

  run(8, "F_p oracle: complete intersections, colon ideal, pfaffian samples", [](Outcome& o) {
    const PrimeField field;
    int cis = 0;
    std::mt19937_64 rng(31);
    for (int a = 1; a <= 5; ++a)
      for (int b = a; b <= 5; ++b)
        for (int c = b; c <= 5; ++c) {
          ++cis;
          auto mono = GradedIdealFp::from_monomials({{a, 0, 0}, {0, b, 0}, {0, 0, c}}, field);
          o.require(minimal_resolution_fp(mono) == koszul_table({a, b, c}), "monomial CI");
          GradedIdealFp generic({HomogeneousPoly::random(a, field, rng),
                                 HomogeneousPoly::random(b, field, rng),
                                 HomogeneousPoly::random(c, field, rng)},
                                field);
          o.require(minimal_resolution_fp(generic) == koszul_table({a, b, c}), "generic CI");
        }
    auto q = GradedIdealFp::from_monomials({{3, 0, 0}, {0, 4, 0}, {0, 0, 5}, {1, 2, 0}}, field);
    GradedIdealFp z(random_elements(q, {3, 4, 5}, rng), field);
    o.require(minimal_resolution_fp(z) == koszul_table({3, 4, 5}), "Z is not a CI");
    auto g = colon_ideal(z, q, 20);
    o.require(minimal_resolution_fp(g) == gorenstein_betti_table(validate_degree_sequence({2, 2, 5})),
              "colon table");
    const auto expected = gorenstein_betti_table(validate_degree_sequence({2, 2, 2, 2, 2}));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto p = pfaffian_gorenstein_sample({2, 2, 2, 2, 2}, seed, field);
      o.require(minimal_resolution_fp(p) == expected, "pfaffian seed " + std::to_string(seed));
    }
    o.note << cis << " CIs x 2, colon (2,2,5), 5 pfaffian seeds";
  });

  run(9, "characterization: worked tables Valid, mutants Invalid", [](Outcome& o) {
    const ClosedFormMinProvider ci;
    const ProbabilisticMinProvider wide(1, 3, 1, PrimeField(), OracleLimits{30, 13});
    const ProbabilisticMinProvider desk(2, 4, 1);
    const auto a = check_table(load("golden_a.json"), wide);
    o.require(a.verdict == Verdict::Valid, "A: " + std::string(to_string(a.verdict)) + " " + a.detail);
    const auto b = check_table(load("golden_b.json"), ci);
    o.require(b.verdict == Verdict::Valid, "B: " + b.detail);
    const auto c_null = check_table(load("golden_c.json"), ci);
    o.require(c_null.verdict == Verdict::Inconclusive, "C under ci provider");
    const auto c = check_table(load("golden_c.json"), desk);
    o.require(c.verdict == Verdict::Valid, "C: " + c.detail);
    const std::pair<const char*, VerdictReason> mutants[] = {
        {"mutated_sum.json", VerdictReason::SumIdentity},
        {"mutated_gaeta.json", VerdictReason::Gaeta},
        {"mutated_f2prime.json", VerdictReason::Decomposition},
    };
    for (const auto& [file, reason] : mutants) {
      const auto r = check_table(load(file), desk);
      o.require(r.verdict == Verdict::Invalid && r.reason == reason,
                std::string(file) + ": " + std::string(to_string(r.reason)));
    }
    auto fmt = [](const std::optional<Triple>& m) {
      return m ? "(" + std::to_string((*m)[0]) + "," + std::to_string((*m)[1]) + "," +
                     std::to_string((*m)[2]) + ")"
               : std::string("?");
    };
    o.note << "A min" << fmt(a.m) << ", B min" << fmt(b.m) << ", C min" << fmt(c.m)
           << " (Inconclusive under the ci provider), 3 mutants Invalid";
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail")
            << '\n';
  return failures == 0 ? 0 : 1;
}
