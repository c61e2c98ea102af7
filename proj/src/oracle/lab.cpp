#include "aci3/oracle/lab.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "aci3/error.hpp"

namespace aci3::oracle {

int socle_degree(GradedIdealFp& ideal, int bound) {
  const int ext = ideal.extinction_degree(bound);
  if (ext < 0) {
    throw Error(ErrorCode::NotArtinianWithinBound,
                "R/I does not vanish in degrees <= " +
                    std::to_string(std::min(bound, ideal.limits().max_degree)));
  }
  if (ext == 0) throw Error(ErrorCode::InvalidArgument, "unit ideal");
  return ext - 1;
}

namespace {

// Quotient algebra A = R/I in degrees 0..e: standard monomial bases and the
// multiplication maps A_D -> A_{D+1} by x, y, z.
struct QuotientAlgebra {
  int top = -1;
  std::vector<std::vector<std::size_t>> basis;        // monomial indices per degree
  // mult[D][v][k]: sparse coordinates of x_v * basis[D][k] in A_{D+1}.
  std::vector<std::array<std::vector<std::vector<std::pair<std::size_t, Fp>>>, 3>> mult;

  std::size_t dim(int d) const {
    return d < 0 || d > top ? 0 : basis[static_cast<std::size_t>(d)].size();
  }
};

QuotientAlgebra quotient_algebra(GradedIdealFp& ideal, int e) {
  const PrimeField& f = ideal.field();
  QuotientAlgebra a;
  a.top = e;
  for (int d = 0; d <= e; ++d) a.basis.push_back(ideal.standard_monomials(d));
  a.mult.resize(static_cast<std::size_t>(e + 1));
  for (int d = 0; d <= e; ++d) {
    const bool last = d == e;
    std::vector<long> position;
    std::vector<long> pivot_row;
    if (!last) {
      const std::size_t n = monomial_count(d + 1);
      position.assign(n, -1);
      pivot_row.assign(n, -1);
      const auto& next = a.basis[static_cast<std::size_t>(d + 1)];
      for (std::size_t k = 0; k < next.size(); ++k) position[next[k]] = static_cast<long>(k);
      const auto& piv = ideal.pivots(d + 1);
      for (std::size_t r = 0; r < piv.size(); ++r) pivot_row[piv[r]] = static_cast<long>(r);
    }
    for (std::size_t v = 0; v < 3; ++v) {
      auto& out = a.mult[static_cast<std::size_t>(d)][v];
      out.resize(a.basis[static_cast<std::size_t>(d)].size());
      if (last) continue;
      const FpMatrix& next_piece = ideal.piece(d + 1);
      const auto& next = a.basis[static_cast<std::size_t>(d + 1)];
      for (std::size_t k = 0; k < out.size(); ++k) {
        Exponent m = monomial_at(d, a.basis[static_cast<std::size_t>(d)][k]);
        ++m[v];
        const std::size_t idx = monomial_index(m);
        if (position[idx] >= 0) {
          out[k].emplace_back(static_cast<std::size_t>(position[idx]), 1);
        } else {
          // Leading term of a row of the RREF basis: m = -(rest of the row) mod I.
          const auto row = next_piece.row(static_cast<std::size_t>(pivot_row[idx]));
          for (std::size_t s = 0; s < next.size(); ++s) {
            const Fp c = row[next[s]];
            if (c != 0) out[k].emplace_back(s, f.neg(c));
          }
        }
      }
    }
  }
  return a;
}

// Subsets of {0,1,2} of size i, as sorted index lists.
const std::vector<std::vector<int>>& wedge_basis(int i) {
  static const std::array<std::vector<std::vector<int>>, 4> basis = {{
      {{}},
      {{0}, {1}, {2}},
      {{0, 1}, {0, 2}, {1, 2}},
      {{0, 1, 2}},
  }};
  return basis[static_cast<std::size_t>(i)];
}

std::size_t wedge_position(int i, const std::vector<int>& s) {
  const auto& b = wedge_basis(i);
  return static_cast<std::size_t>(std::find(b.begin(), b.end(), s) - b.begin());
}

// Rank of the Koszul differential Lambda^i (x) A_{j-i} -> Lambda^{i-1} (x) A_{j-i+1}.
std::size_t koszul_rank(const QuotientAlgebra& a, int i, int j, const PrimeField& f) {
  if (i < 1 || i > 3) return 0;
  const int src_deg = j - i;
  const std::size_t src_dim = a.dim(src_deg);
  const std::size_t tgt_dim = a.dim(src_deg + 1);
  if (src_dim == 0 || tgt_dim == 0) return 0;
  const auto& src_wedge = wedge_basis(i);
  const std::size_t tgt_cols = wedge_basis(i - 1).size() * tgt_dim;
  FpMatrix m(src_wedge.size() * src_dim, tgt_cols);
  for (std::size_t w = 0; w < src_wedge.size(); ++w) {
    const auto& s = src_wedge[w];
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      std::vector<int> rest = s;
      rest.erase(rest.begin() + static_cast<long>(pos));
      const std::size_t block = wedge_position(i - 1, rest) * tgt_dim;
      const bool negative = pos % 2 == 1;
      const auto& mult = a.mult[static_cast<std::size_t>(src_deg)][static_cast<std::size_t>(s[pos])];
      for (std::size_t k = 0; k < src_dim; ++k) {
        const std::size_t row = w * src_dim + k;
        for (const auto& [col, c] : mult[k]) {
          Fp& cell = m(row, block + col);
          cell = negative ? f.sub(cell, c) : f.add(cell, c);
        }
      }
    }
  }
  return rank(std::move(m), f);
}

}  // namespace

BettiTable minimal_resolution_fp(GradedIdealFp& ideal, int degree_bound) {
  const int e = socle_degree(ideal, degree_bound);
  if (degree_bound < e + 3) {
    throw Error(ErrorCode::BoundTooSmall, "bound " + std::to_string(degree_bound) +
                                              " < socle degree + 3 = " + std::to_string(e + 3));
  }
  const PrimeField& f = ideal.field();
  const QuotientAlgebra a = quotient_algebra(ideal, e);
  std::array<std::vector<int>, 3> shifts;
  for (int j = 1; j <= e + 3; ++j) {
    std::array<std::size_t, 5> r{};
    for (int i = 1; i <= 3; ++i) r[static_cast<std::size_t>(i)] = koszul_rank(a, i, j, f);
    for (int i = 1; i <= 3; ++i) {
      const auto dim = static_cast<std::int64_t>(wedge_basis(i).size() * a.dim(j - i));
      const std::int64_t beta = dim - static_cast<std::int64_t>(r[static_cast<std::size_t>(i)]) -
                                static_cast<std::int64_t>(r[static_cast<std::size_t>(i + 1)]);
      for (std::int64_t k = 0; k < beta; ++k) shifts[static_cast<std::size_t>(i - 1)].push_back(j);
    }
  }
  return BettiTable(3, {FreeModuleShifts(shifts[0]), FreeModuleShifts(shifts[1]),
                        FreeModuleShifts(shifts[2])});
}

BettiTable minimal_resolution_fp(GradedIdealFp& ideal) {
  const int e = socle_degree(ideal, ideal.limits().max_degree);
  return minimal_resolution_fp(ideal, e + 3);
}

GradedIdealFp colon_ideal(GradedIdealFp& z, GradedIdealFp& q, int degree_bound) {
  if (z.field() != q.field()) throw Error(ErrorCode::InvalidArgument, "different fields");
  const PrimeField& f = z.field();
  for (const auto& g : z.generators()) {
    if (g.degree() > q.limits().max_degree || !q.contains(g)) {
      throw Error(ErrorCode::NotContained, "generator " + to_string(g) + " of Z is not in Q");
    }
  }
  const int ext = z.extinction_degree(degree_bound);
  if (ext < 0) {
    throw Error(ErrorCode::BoundTooSmall,
                "R/Z does not vanish in degrees <= " + std::to_string(degree_bound));
  }
  // Every form of degree >= ext lies in Z, so (Z : Q)_j = R_j from there on
  // and the generators live in degrees <= ext.
  std::vector<HomogeneousPoly> gens;
  FpMatrix previous;  // basis of (Z : Q)_{j-1}
  for (int j = 0; j <= ext; ++j) {
    const std::size_t n = monomial_count(j);
    FpMatrix conditions(0, n);
    for (const auto& qk : q.generators()) {
      const int d = j + qk.degree();
      if (d >= ext) continue;
      const auto std_monomials = z.standard_monomials(d);
      std::vector<std::vector<Fp>> images(n);
      for (std::size_t k = 0; k < n; ++k) {
        images[k] = z.normal_form(qk.times_monomial(monomial_at(j, k))).coeffs();
      }
      std::vector<Fp> row(n);
      for (std::size_t s : std_monomials) {
        for (std::size_t k = 0; k < n; ++k) row[k] = images[k][s];
        conditions.append_row(row);
      }
    }
    FpMatrix current = null_space(std::move(conditions), f);

    EchelonBasis lifted(n, f);
    if (j > 0) {
      for (std::size_t r = 0; r < previous.rows(); ++r) {
        const HomogeneousPoly p(j - 1, std::vector<Fp>(previous.row(r).begin(), previous.row(r).end()));
        for (int v = 0; v < 3; ++v) {
          Exponent m{0, 0, 0};
          m[static_cast<std::size_t>(v)] = 1;
          lifted.insert(p.times_monomial(m).coeffs());
        }
      }
    }
    for (std::size_t r = 0; r < current.rows(); ++r) {
      std::vector<Fp> v(current.row(r).begin(), current.row(r).end());
      if (lifted.insert(v)) gens.emplace_back(j, std::move(v));
    }
    previous = std::move(current);
  }
  return GradedIdealFp(std::move(gens), f, z.limits());
}

std::vector<HomogeneousPoly> random_elements(GradedIdealFp& ideal, const std::vector<int>& degrees,
                                             std::mt19937_64& rng) {
  const PrimeField& f = ideal.field();
  std::uniform_int_distribution<Fp> dist(0, f.p() - 1);
  std::vector<HomogeneousPoly> out;
  for (int a : degrees) {
    const FpMatrix& basis = ideal.piece(a);
    HomogeneousPoly g(a);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      const Fp c = dist(rng);
      const auto row = basis.row(r);
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k] != 0) g.coeffs()[k] = f.add(g.coeffs()[k], f.mul(c, row[k]));
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

// Whether the forms span all of R_N.
bool generates_degree(const std::vector<HomogeneousPoly>& forms, int n, const PrimeField& f) {
  EchelonBasis basis(monomial_count(n), f);
  for (const auto& g : forms) {
    const int k = n - g.degree();
    if (k < 0) continue;
    for (std::size_t i = 0; i < monomial_count(k) && !basis.full(); ++i) {
      basis.insert(g.times_monomial(monomial_at(k, i)).coeffs());
    }
  }
  return basis.full();
}

}  // namespace

RegularSequenceResult regular_sequence_test(GradedIdealFp& ideal, Triple degrees, int trials,
                                            std::uint64_t seed) {
  degrees = ord(degrees);
  if (degrees[0] <= 0) throw Error(ErrorCode::InvalidArgument, "degrees must be positive");
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (degrees[0] < ideal.initial_degree()) {
    throw Error(ErrorCode::DegreeBelowIdeal,
                "degree " + std::to_string(degrees[0]) + " below initial degree " +
                    std::to_string(ideal.initial_degree()));
  }
  const int n = degrees[0] + degrees[1] + degrees[2] - 2;
  if (n > ideal.limits().max_degree) {
    throw Error(ErrorCode::DegreeCapExceeded, "test degree " + std::to_string(n) + " above cap " +
                                                  std::to_string(ideal.limits().max_degree));
  }
  const PrimeField& f = ideal.field();
  RegularSequenceResult result;
  for (int t = 0; t < trials; ++t) {
    result.trials_used = t + 1;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(f.p())};
    std::mt19937_64 rng(seq);
    auto forms = random_elements(ideal, {degrees[0], degrees[1], degrees[2]}, rng);
    if (std::any_of(forms.begin(), forms.end(), [](const auto& g) { return g.is_zero(); })) {
      continue;
    }
    if (generates_degree(forms, n, f)) {
      result.yes = true;
      result.witness = std::move(forms);
      return result;
    }
  }
  return result;
}

bool verify_regular_sequence_witness(const std::vector<HomogeneousPoly>& witness,
                                     const PrimeField& field, OracleLimits limits) {
  if (witness.size() != 3) return false;
  std::vector<int> degrees;
  for (const auto& g : witness) degrees.push_back(g.degree());
  const int n = degrees[0] + degrees[1] + degrees[2] - 2;
  limits.max_degree = std::max(limits.max_degree, n);
  GradedIdealFp ideal(witness, field, limits);
  if (ideal.generators().size() != 3) return false;
  const BettiTable ci = koszul_table(degrees);
  for (int j = 0; j <= n; ++j) {
    if (ideal.quotient_dim(j) != hilbert_function(ci, j)) return false;
  }
  return true;
}

std::vector<std::vector<int>> skew_degree_matrix(const GorensteinShape& shape) {
  const auto& d = shape.delta.degrees();
  const std::size_t m = d.size();
  std::vector<std::vector<int>> e(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j) e[i][j] = shape.theta - d[i] - d[j];
    }
  }
  return e;
}

namespace {

using Mask = std::uint32_t;

int lowest(Mask s) { return __builtin_ctz(s); }

bool has_matching(Mask s, const std::vector<std::vector<int>>& e,
                  std::unordered_map<Mask, bool>& memo) {
  if (s == 0) return true;
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  const int i = lowest(s);
  bool found = false;
  for (int j = i + 1; j < 32 && !found; ++j) {
    if (!(s >> j & 1u)) continue;
    if (e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > 0) {
      found = has_matching(s & ~(1u << i) & ~(1u << j), e, memo);
    }
  }
  memo[s] = found;
  return found;
}

struct PfaffianEvaluator {
  const std::vector<std::vector<int>>& e;
  const std::vector<std::vector<HomogeneousPoly>>& a;  // a[i][j] for i < j
  const std::vector<int>& d;
  int theta;
  const PrimeField& f;
  std::unordered_map<Mask, HomogeneousPoly> memo;

  int degree(Mask s) const {
    int sum = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (s >> i & 1u) sum += d[i];
    }
    return __builtin_popcount(s) / 2 * theta - sum;
  }

  // Expansion along the least index i of S:
  // Pf(S) = sum_j (-1)^(pos(j) + 1) a_ij Pf(S \ {i, j}), pos counted from 0.
  const HomogeneousPoly& pf(Mask s) {
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    const int deg = degree(s);
    HomogeneousPoly out(deg < 0 ? -1 : deg);
    if (s == 0) {
      out = HomogeneousPoly(0, {1});
    } else if (deg >= 0) {
      const int i = lowest(s);
      int pos = 0;
      for (int j = i + 1; j < 32; ++j) {
        if (!(s >> j & 1u)) continue;
        ++pos;
        if (e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] <= 0) continue;
        const HomogeneousPoly& rest = pf(s & ~(1u << i) & ~(1u << j));
        if (rest.degree() < 0 || rest.is_zero()) continue;
        const HomogeneousPoly term =
            multiply(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], rest, f);
        add_scaled(out, term, pos % 2 == 1 ? 1 : f.neg(1), f);
      }
    }
    return memo.emplace(s, std::move(out)).first->second;
  }
};

}  // namespace

GradedIdealFp pfaffian_gorenstein_sample(const std::vector<int>& delta, std::uint64_t seed,
                                         PrimeField field, OracleLimits limits, int retries) {
  const GorensteinShape shape = validate_degree_sequence(delta);
  const auto& d = shape.delta.degrees();
  const std::size_t m = d.size();
  if (m > 31) throw Error(ErrorCode::InvalidArgument, "degree sequence too long");
  const auto e = skew_degree_matrix(shape);
  const Mask all = (1u << m) - 1;
  std::unordered_map<Mask, bool> matching;
  for (std::size_t i = 0; i < m; ++i) {
    if (!has_matching(all & ~(1u << i), e, matching)) {
      throw Error(ErrorCode::NoConsistentDegreeMatrix,
                  "no nonzero pfaffian of degree " + std::to_string(d[i]) + " for " +
                      shape.delta.to_string());
    }
  }
  const BettiTable expected = gorenstein_betti_table(shape);
  std::uniform_int_distribution<Fp> dist(0, field.p() - 1);
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(field.p())};
    std::mt19937_64 rng(seq);
    std::vector<std::vector<HomogeneousPoly>> a(m, std::vector<HomogeneousPoly>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (e[i][j] > 0) a[i][j] = HomogeneousPoly::random(e[i][j], field, rng);
      }
    }
    PfaffianEvaluator eval{e, a, d, shape.theta, field, {}};
    std::vector<HomogeneousPoly> gens;
    for (std::size_t i = 0; i < m; ++i) gens.push_back(eval.pf(all & ~(1u << i)));
    if (std::any_of(gens.begin(), gens.end(), [](const auto& g) { return g.is_zero(); })) continue;
    GradedIdealFp ideal(std::move(gens), field, limits);
    try {
      if (minimal_resolution_fp(ideal) == expected) return ideal;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NotArtinianWithinBound) throw;
    }
  }
  throw Error(ErrorCode::SamplingFailed, "no sample for " + shape.delta.to_string() + " in " +
                                             std::to_string(retries + 1) + " attempts");
}

ProbabilisticMinProvider::ProbabilisticMinProvider(int samples, int trials, std::uint64_t seed,
                                                   PrimeField field, OracleLimits limits)
    : samples_(samples), trials_(trials), seed_(seed), field_(field), limits_(limits) {
  if (samples < 1 || trials < 1) {
    throw Error(ErrorCode::InvalidArgument, "samples and trials must be >= 1");
  }
}

std::optional<Triple> ProbabilisticMinProvider::query(const GorensteinShape& shape) const {
  const auto& d = shape.delta.degrees();
  {
    std::lock_guard lock(mutex_);
    if (const auto it = answers_.find(d); it != answers_.end()) return it->second;
  }
  const auto answer = search(shape);
  std::lock_guard lock(mutex_);
  answers_[d] = answer;
  return answer;
}

std::optional<Triple> ProbabilisticMinProvider::search(const GorensteinShape& shape) const {
  const auto& d = shape.delta.degrees();
  if (d.back() > limits_.max_entry) {
    throw Error(ErrorCode::PreconditionViolation,
                "entry " + std::to_string(d.back()) + " above desk-scale limit " +
                    std::to_string(limits_.max_entry));
  }
  std::vector<GradedIdealFp> samples;
  for (int s = 0; s < samples_; ++s) {
    samples.push_back(pfaffian_gorenstein_sample(
        d, seed_ + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(s), field_, limits_));
  }
  const int lo = d.front();
  const int hi = shape.theta;
  for (int sum = 3 * lo; sum <= 3 * hi; ++sum) {
    if (sum - 2 > limits_.max_degree) return std::nullopt;
    for (int a1 = lo; a1 <= hi && 3 * a1 <= sum; ++a1) {
      for (int a2 = a1; a2 <= hi && a1 + 2 * a2 <= sum; ++a2) {
        const int a3 = sum - a1 - a2;
        if (a3 > hi) continue;
        const Triple t{a1, a2, a3};
        // Certified skip: I_v cannot hold more independent forms than its dimension.
        bool room = true;
        for (int v : {a1, a2, a3}) {
          const auto mult = static_cast<std::size_t>(std::count(t.begin(), t.end(), v));
          if (samples[0].dim(v) < mult) room = false;
        }
        if (!room) continue;
        std::vector<RegularSequenceResult> results(samples.size());
        const std::uint64_t tseed =
            seed_ ^ (static_cast<std::uint64_t>(a1) << 40 | static_cast<std::uint64_t>(a2) << 20 |
                     static_cast<std::uint64_t>(a3));
        const auto count = static_cast<long>(samples.size());
#pragma omp parallel for schedule(dynamic)
        for (long s = 0; s < count; ++s) {
          results[static_cast<std::size_t>(s)] =
              regular_sequence_test(samples[static_cast<std::size_t>(s)], t, trials_, tseed);
        }
        for (auto& r : results) {
          if (!r.yes) continue;
          std::lock_guard lock(mutex_);
          witnesses_[d] = std::move(r.witness);
          return t;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<HomogeneousPoly>> ProbabilisticMinProvider::witness(
    const GorensteinShape& shape) const {
  std::lock_guard lock(mutex_);
  const auto it = witnesses_.find(shape.delta.degrees());
  if (it == witnesses_.end()) return std::nullopt;
  return it->second;
}

}  // namespace aci3::oracle
