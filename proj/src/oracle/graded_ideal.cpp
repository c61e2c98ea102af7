#include "aci3/oracle/graded_ideal.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "aci3/error.hpp"

namespace aci3::oracle {

namespace {

// shift[v][k]: index in degree deg+1 of x_v times the k-th monomial of degree deg.
std::array<std::vector<std::size_t>, 3> multiplication_tables(int deg) {
  std::array<std::vector<std::size_t>, 3> out;
  const std::size_t n = monomial_count(deg);
  for (std::size_t v = 0; v < 3; ++v) {
    out[v].resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      Exponent e = monomial_at(deg, k);
      ++e[v];
      out[v][k] = monomial_index(e);
    }
  }
  return out;
}

}  // namespace

GradedIdealFp::GradedIdealFp(std::vector<HomogeneousPoly> generators, PrimeField field,
                             OracleLimits limits)
    : field_(field), limits_(limits) {
  for (auto& g : generators) {
    if (g.degree() < 0) throw Error(ErrorCode::InvalidArgument, "generator of negative degree");
    if (g.coeffs().size() != monomial_count(g.degree())) {
      throw Error(ErrorCode::InvalidArgument, "generator is not homogeneous");
    }
    for (auto& c : g.coeffs()) c %= field_.p();
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

GradedIdealFp GradedIdealFp::from_monomials(const std::vector<Exponent>& gens, PrimeField field,
                                            OracleLimits limits) {
  std::vector<HomogeneousPoly> polys;
  for (const auto& e : gens) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) {
      throw Error(ErrorCode::InvalidArgument, "negative exponent");
    }
    polys.push_back(HomogeneousPoly::monomial(e));
  }
  return GradedIdealFp(std::move(polys), field, limits);
}

int GradedIdealFp::initial_degree() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& g : gens_) m = std::min(m, g.degree());
  return m;
}

void GradedIdealFp::build_up_to(int j) {
  if (j > limits_.max_degree) {
    throw Error(ErrorCode::DegreeCapExceeded, "degree " + std::to_string(j) + " above cap " +
                                                  std::to_string(limits_.max_degree));
  }
  for (int k = static_cast<int>(pieces_.size()); k <= j; ++k) {
    const std::size_t n = monomial_count(k);
    if (k > 0 && pieces_.back().rows() == monomial_count(k - 1)) {
      // I_{k-1} = R_{k-1} forces I_k = R_k.
      FpMatrix id(n, n);
      std::vector<std::size_t> piv(n);
      for (std::size_t i = 0; i < n; ++i) {
        id(i, i) = 1;
        piv[i] = i;
      }
      pieces_.push_back(std::move(id));
      pivots_.push_back(std::move(piv));
      continue;
    }
    EchelonBasis basis(n, field_);
    if (k > 0) {
      const FpMatrix& prev = pieces_.back();
      const auto tables = multiplication_tables(k - 1);
      std::vector<Fp> v(n);
      for (std::size_t r = 0; r < prev.rows() && !basis.full(); ++r) {
        for (std::size_t var = 0; var < 3 && !basis.full(); ++var) {
          std::fill(v.begin(), v.end(), 0);
          const auto row = prev.row(r);
          for (std::size_t c = 0; c < row.size(); ++c) v[tables[var][c]] = row[c];
          basis.insert(v);
        }
      }
    }
    for (const auto& g : gens_) {
      if (g.degree() == k) basis.insert(g.coeffs());
    }
    std::vector<std::size_t> piv;
    pieces_.push_back(basis.to_rref(&piv));
    pivots_.push_back(std::move(piv));
  }
}

const FpMatrix& GradedIdealFp::piece(int j) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  build_up_to(j);
  return pieces_[static_cast<std::size_t>(j)];
}

const std::vector<std::size_t>& GradedIdealFp::pivots(int j) {
  piece(j);
  return pivots_[static_cast<std::size_t>(j)];
}

std::size_t GradedIdealFp::dim(int j) { return piece(j).rows(); }

std::int64_t GradedIdealFp::quotient_dim(int j) {
  return static_cast<std::int64_t>(monomial_count(j)) - static_cast<std::int64_t>(dim(j));
}

std::vector<std::size_t> GradedIdealFp::standard_monomials(int j) {
  const auto& piv = pivots(j);
  std::vector<bool> lead(monomial_count(j), false);
  for (auto c : piv) lead[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < lead.size(); ++k) {
    if (!lead[k]) out.push_back(k);
  }
  return out;
}

HomogeneousPoly GradedIdealFp::normal_form(const HomogeneousPoly& f) {
  if (f.degree() < 0) return f;
  const FpMatrix& m = piece(f.degree());
  const auto& piv = pivots(f.degree());
  HomogeneousPoly out = f;
  auto& v = out.coeffs();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Fp factor = v[piv[r]];
    if (factor == 0) continue;
    const Fp neg = field_.neg(factor);
    const auto row = m.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != 0) v[c] = field_.add(v[c], field_.mul(neg, row[c]));
    }
  }
  return out;
}

bool GradedIdealFp::contains(const HomogeneousPoly& f) { return normal_form(f).is_zero(); }

int GradedIdealFp::extinction_degree(int bound) {
  const int top = std::min(bound, limits_.max_degree);
  for (int j = 0; j <= top; ++j) {
    if (quotient_dim(j) == 0) return j;
  }
  return -1;
}

std::string to_string(const GradedIdealFp& ideal) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    os << (i ? ", " : "") << to_string(ideal.generators()[i]);
  }
  os << ')';
  return os.str();
}

}  // namespace aci3::oracle
