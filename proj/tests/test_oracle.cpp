#include <doctest.h>

#include <random>

#include "aci3/gorenstein.hpp"
#include "aci3/monomial.hpp"
#include "aci3/oracle/fp.hpp"
#include "aci3/oracle/graded_ideal.hpp"
#include "aci3/oracle/lab.hpp"
#include "aci3/oracle/polynomial.hpp"
#include "test_util.hpp"

using namespace aci3;
using namespace aci3::oracle;
using test::code_of;

namespace {

FpMatrix random_matrix(std::size_t rows, std::size_t cols, const PrimeField& f, std::mt19937_64& rng,
                       int zero_percent) {
  FpMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = static_cast<int>(rng() % 100) < zero_percent ? 0 : f.from_int(static_cast<std::int64_t>(rng() % f.p()));
  return m;
}

HomogeneousPoly x_pow(int a, int b, int c) { return HomogeneousPoly::monomial({a, b, c}); }

GradedIdealFp generic_ci(const std::vector<int>& degrees, std::uint64_t seed) {
  const PrimeField f;
  std::mt19937_64 rng(seed);
  std::vector<HomogeneousPoly> gens;
  for (int a : degrees) gens.push_back(HomogeneousPoly::random(a, f, rng));
  return GradedIdealFp(std::move(gens), f);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const PrimeField f;
  CHECK(f.p() == 32003);
  CHECK(f.from_int(-1) == 32002);
  CHECK(f.from_int(32003 * 5 + 7) == 7);
  for (Fp a = 1; a < 500; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.sub(3, 5) == 32001);
}

TEST_CASE("serial and parallel rref agree") {
  const PrimeField f;
  std::mt19937_64 rng(5);
  for (int k = 0; k < 6; ++k) {
    const std::size_t rows = 60 + rng() % 140, cols = 150 + rng() % 150;
    FpMatrix a = random_matrix(rows, cols, f, rng, k * 15);
    // Force dependent rows.
    for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = f.add(a(0, c), f.mul(3, a(1, c)));
    FpMatrix b = a;
    const auto pa = rref(a, f, Execution::Serial);
    const auto pb = rref(b, f, Execution::Parallel);
    CHECK(pa == pb);
    CHECK(a == b);
    CHECK(a.rows() == pa.size());
    for (std::size_t r = 0; r < a.rows(); ++r) {
      CHECK(a(r, pa[r]) == 1);
      for (std::size_t r2 = 0; r2 < a.rows(); ++r2)
        if (r2 != r) CHECK(a(r2, pa[r]) == 0);
    }
  }
}

TEST_CASE("null space") {
  const PrimeField f;
  std::mt19937_64 rng(9);
  for (int k = 0; k < 10; ++k) {
    const std::size_t rows = 5 + rng() % 20, cols = 5 + rng() % 20;
    const FpMatrix m = random_matrix(rows, cols, f, rng, 50);
    const FpMatrix n = null_space(m, f);
    CHECK(n.rows() + rank(m, f) == cols);
    CHECK(rank(n, f) == n.rows());
    for (std::size_t v = 0; v < n.rows(); ++v)
      for (std::size_t r = 0; r < rows; ++r) {
        Fp s = 0;
        for (std::size_t c = 0; c < cols; ++c) s = f.add(s, f.mul(m(r, c), n(v, c)));
        CHECK(s == 0);
      }
  }
}

TEST_CASE("echelon basis matches rref") {
  const PrimeField f;
  std::mt19937_64 rng(13);
  const FpMatrix m = random_matrix(30, 20, f, rng, 70);
  EchelonBasis basis(20, f);
  for (std::size_t r = 0; r < m.rows(); ++r)
    basis.insert(std::vector<Fp>(m.row(r).begin(), m.row(r).end()));
  FpMatrix reduced = m;
  std::vector<std::size_t> p1;
  const auto p2 = rref(reduced, f, Execution::Serial);
  CHECK(basis.to_rref(&p1) == reduced);
  CHECK(p1 == p2);
  std::vector<Fp> inside(m.row(3).begin(), m.row(3).end());
  basis.reduce(inside);
  CHECK(std::all_of(inside.begin(), inside.end(), [](Fp x) { return x == 0; }));
}

TEST_CASE("monomial indexing and products") {
  for (int d = 0; d <= 8; ++d)
    for (std::size_t i = 0; i < monomial_count(d); ++i) {
      const auto e = monomial_at(d, i);
      CHECK(total_degree(e) == d);
      CHECK(monomial_index(e) == i);
    }
  CHECK(monomial_at(2, 0) == Exponent{2, 0, 0});
  const PrimeField f;
  auto p = x_pow(1, 0, 0);
  add_scaled(p, x_pow(0, 1, 0), 1, f);  // x + y
  auto q = x_pow(1, 0, 0);
  add_scaled(q, x_pow(0, 1, 0), f.neg(1), f);  // x - y
  auto expected = x_pow(2, 0, 0);
  add_scaled(expected, x_pow(0, 2, 0), f.neg(1), f);
  CHECK(multiply(p, q, f) == expected);
  CHECK(x_pow(1, 2, 0).times_monomial({0, 1, 3}) == x_pow(1, 3, 3));
}

TEST_CASE("graded pieces of a monomial ideal") {
  auto i = GradedIdealFp::from_monomials({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  const std::vector<std::int64_t> hf{1, 3, 3, 1, 0, 0};
  for (int j = 0; j < 6; ++j) CHECK(i.quotient_dim(j) == hf[j]);
  CHECK(i.extinction_degree(10) == 4);
  CHECK(i.extinction_degree(3) == -1);
  CHECK(i.initial_degree() == 2);
  CHECK(i.contains(x_pow(1, 2, 0)));
  CHECK_FALSE(i.contains(x_pow(1, 1, 1)));
  CHECK(i.normal_form(x_pow(3, 0, 0)).is_zero());
  CHECK(i.standard_monomials(3).size() == 1);

  OracleLimits tight{6, 8};
  auto capped = GradedIdealFp::from_monomials({{1, 0, 0}}, PrimeField(), tight);
  CHECK(code_of([&] { capped.piece(7); }) == ErrorCode::DegreeCapExceeded);
}

TEST_CASE("minimal_resolution_fp on complete intersections of degree <= 5") {
  for (int a = 1; a <= 5; ++a)
    for (int b = a; b <= 5; ++b)
      for (int c = b; c <= 5; ++c) {
        auto mono = GradedIdealFp::from_monomials({{a, 0, 0}, {0, b, 0}, {0, 0, c}});
        CHECK(minimal_resolution_fp(mono) == koszul_table({a, b, c}));
        auto generic = generic_ci({a, b, c}, static_cast<std::uint64_t>(100 * a + 10 * b + c));
        CHECK(minimal_resolution_fp(generic) == koszul_table({a, b, c}));
      }
}

TEST_CASE("minimal_resolution_fp on monomial ACIs") {
  auto i = GradedIdealFp::from_monomials({{3, 0, 0}, {0, 4, 0}, {0, 0, 5}, {1, 2, 0}});
  CHECK(minimal_resolution_fp(i) == resolution_mont2(3, 4, 5, 1, 2));
  for (int a1 = 2; a1 <= 3; ++a1)
    for (int a2 = 2; a2 <= 3; ++a2)
      for (int a3 = 2; a3 <= 3; ++a3)
        for (int b1 = 1; b1 < a1; ++b1)
          for (int b2 = 1; b2 < a2; ++b2)
            for (int b3 = 1; b3 < a3; ++b3) {
              auto j = GradedIdealFp::from_monomials({{a1, 0, 0}, {0, a2, 0}, {0, 0, a3}, {b1, b2, b3}});
              CHECK(minimal_resolution_fp(j) == resolution_mont3(a1, a2, a3, b1, b2, b3));
            }
  auto b = GradedIdealFp::from_monomials({{6, 0, 0}, {0, 7, 0}, {0, 0, 4}, {3, 1, 0}});
  CHECK(minimal_resolution_fp(b) == test::table("golden_b.json"));

  CHECK(code_of([&] { minimal_resolution_fp(i, 8); }) == ErrorCode::BoundTooSmall);
  auto open = GradedIdealFp::from_monomials({{1, 0, 0}, {0, 1, 0}});
  CHECK(code_of([&] { minimal_resolution_fp(open, 10); }) == ErrorCode::NotArtinianWithinBound);
}

TEST_CASE("colon ideals") {
  const PrimeField f;
  auto q = GradedIdealFp::from_monomials({{3, 0, 0}, {0, 4, 0}, {0, 0, 5}, {1, 2, 0}});

  SUBCASE("Z = Q gives the unit ideal") {
    auto z = GradedIdealFp::from_monomials({{3, 0, 0}, {0, 4, 0}, {0, 0, 5}, {1, 2, 0}});
    auto g = colon_ideal(z, q, 20);
    CHECK(g.quotient_dim(0) == 0);
  }

  SUBCASE("generic complete intersection inside (x^3, y^4, z^5, xy^2)") {
    std::mt19937_64 rng(42);
    auto z = GradedIdealFp(random_elements(q, {3, 4, 5}, rng), f);
    auto g = colon_ideal(z, q, 20);
    const auto table = minimal_resolution_fp(g);
    CHECK(table == gorenstein_betti_table(validate_degree_sequence({2, 2, 5})));

    // Linking back inside the same complete intersection returns Q.
    auto back = colon_ideal(z, g, 20);
    CHECK(minimal_resolution_fp(back) == resolution_mont2(3, 4, 5, 1, 2));
    for (const auto& gen : back.generators()) CHECK(q.contains(gen));
  }

  SUBCASE("containment is required") {
    auto z = GradedIdealFp::from_monomials({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(code_of([&] { colon_ideal(z, q, 20); }) == ErrorCode::NotContained);
    auto big = GradedIdealFp::from_monomials({{6, 0, 0}, {0, 8, 0}, {0, 0, 10}});
    CHECK(code_of([&] { colon_ideal(big, q, 10); }) == ErrorCode::BoundTooSmall);
  }
}

TEST_CASE("colon ideal of example B: generic versus structured complete intersection") {
  const PrimeField f;
  auto q = GradedIdealFp::from_monomials({{6, 0, 0}, {0, 7, 0}, {0, 0, 4}, {3, 1, 0}});

  // A generic complete intersection of type (4, 6, 7) cancels R(-6) + R(-7).
  std::mt19937_64 rng(3);
  auto generic = GradedIdealFp(random_elements(q, {4, 6, 7}, rng), f);
  CHECK(minimal_resolution_fp(generic) == koszul_table({4, 6, 7}));
  auto g1 = colon_ideal(generic, q, 20);
  CHECK(minimal_resolution_fp(g1) == gorenstein_betti_table(validate_degree_sequence({3, 4, 6})));

  // (x^3 y, x^6 + q_2 z^4, y^7 + q_3 z^4) keeps them.
  std::mt19937_64 rng2(8);
  auto f2 = x_pow(6, 0, 0);
  add_scaled(f2, multiply(HomogeneousPoly::random(2, f, rng2), x_pow(0, 0, 4), f), 1, f);
  auto f3 = x_pow(0, 7, 0);
  add_scaled(f3, multiply(HomogeneousPoly::random(3, f, rng2), x_pow(0, 0, 4), f), 1, f);
  auto structured = GradedIdealFp({x_pow(3, 1, 0), f2, f3}, f);
  CHECK(minimal_resolution_fp(structured) == koszul_table({4, 6, 7}));
  auto g2 = colon_ideal(structured, q, 20);
  const auto printed = minimal_resolution_fp(g2);
  CHECK(printed.module(1) == FreeModuleShifts{3, 4, 6, 6, 7});
  CHECK(printed.module(2) == FreeModuleShifts{6, 7, 7, 9, 10});
  CHECK(printed.module(3) == FreeModuleShifts{13});
}

TEST_CASE("regular sequence test") {
  auto m = GradedIdealFp::from_monomials({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto yes = regular_sequence_test(m, {1, 1, 1}, 3, 1);
  CHECK(yes.yes);
  CHECK(verify_regular_sequence_witness(yes.witness, m.field()));

  auto codim2 = GradedIdealFp::from_monomials({{2, 0, 0}, {1, 1, 0}, {0, 2, 0}});
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    for (int k = 2; k <= 5; ++k) CHECK_FALSE(regular_sequence_test(codim2, {2, 2, k}, 4, seed).yes);

  auto squares = GradedIdealFp::from_monomials({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK(code_of([&] { regular_sequence_test(squares, {1, 2, 2}, 1, 0); }) ==
        ErrorCode::DegreeBelowIdeal);
  CHECK(regular_sequence_test(squares, {2, 2, 2}, 2, 0).yes);
  CHECK(regular_sequence_test(squares, {2, 3, 3}, 3, 0).yes);

  // Reproducible from the seed.
  const auto r1 = regular_sequence_test(squares, {2, 2, 3}, 2, 77);
  const auto r2 = regular_sequence_test(squares, {2, 2, 3}, 2, 77);
  CHECK(r1.witness == r2.witness);
}

TEST_CASE("pfaffian samples") {
  const auto expected = gorenstein_betti_table(validate_degree_sequence({2, 2, 2, 2, 2}));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = pfaffian_gorenstein_sample({2, 2, 2, 2, 2}, seed);
    const auto t = minimal_resolution_fp(g);
    CHECK(t == expected);
    CHECK(t.module(2) == dual_twist(t.module(1), 5));
  }
  const auto skew = skew_degree_matrix(validate_degree_sequence({2, 2, 2, 2, 2}));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j) CHECK(skew[i][j] == 1);

  auto ci = pfaffian_gorenstein_sample({1, 1, 1}, 4);
  CHECK(minimal_resolution_fp(ci) == koszul_table({1, 1, 1}));

  auto c = pfaffian_gorenstein_sample({2, 2, 2, 4, 4}, 11);
  CHECK(minimal_resolution_fp(c) == gorenstein_betti_table(validate_degree_sequence({2, 2, 2, 4, 4})));

  for (const auto& delta : std::vector<std::vector<int>>{{3, 4, 6, 6, 7}, {2, 2, 3, 3, 4}, {3, 3, 3, 3, 3, 3, 3}}) {
    auto s = pfaffian_gorenstein_sample(delta, 2);
    const auto t = minimal_resolution_fp(s);
    const auto shape = validate_degree_sequence(delta);
    CHECK(t == gorenstein_betti_table(shape));
    CHECK(t.module(2) == dual_twist(t.module(1), shape.theta));
  }

  CHECK(code_of([] { pfaffian_gorenstein_sample({2, 2, 2, 2, 3}, 1); }) == ErrorCode::ThetaNotIntegral);
}

TEST_CASE("probabilistic min provider") {
  const ProbabilisticMinProvider oracle(2, 4, 1);
  const ClosedFormMinProvider ci;
  for (const auto& delta : std::vector<std::vector<int>>{{1, 1, 1}, {2, 2, 5}, {3, 4, 6}, {1, 2, 4}}) {
    CHECK(min_ci(delta, oracle) == min_ci(delta, ci));
  }
  const auto shape = validate_degree_sequence({2, 2, 2, 4, 4});
  const auto m = oracle.query(shape);
  REQUIRE(m);
  CHECK(*m == Triple{2, 2, 4});
  const auto w = oracle.witness(shape);
  REQUIRE(w);
  CHECK(verify_regular_sequence_witness(*w, PrimeField()));

  // The minimum found does not depend on the seed.
  const ProbabilisticMinProvider other(1, 4, 99);
  CHECK(other.query(shape) == m);

  CHECK(code_of([&] { oracle.query(validate_degree_sequence({9, 9, 9})); }) ==
        ErrorCode::PreconditionViolation);
  CHECK(code_of([] { ProbabilisticMinProvider(0, 1, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("pfaffian samples are sound for every small Gorenstein sequence") {
  // All five-element sequences with entries <= 4 that pass validation.
  int count = 0;
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = b; c <= 4; ++c)
        for (int d = c; d <= 4; ++d)
          for (int e = d; e <= 4; ++e) {
            std::optional<GorensteinShape> shape;
            try {
              shape = validate_degree_sequence({a, b, c, d, e});
            } catch (const Error&) {
              continue;
            }
            try {
              auto g = pfaffian_gorenstein_sample(shape->delta.degrees(), 5);
              ++count;
              CHECK(minimal_resolution_fp(g) == gorenstein_betti_table(*shape));
            } catch (const Error& err) {
              CHECK(err.code() == ErrorCode::NoConsistentDegreeMatrix);
            }
          }
  CHECK(count > 5);
}
