// Betti numbers of monomial ideals from the Taylor/lcm-lattice formula
//   beta_{i,m}(R/I) = dim H~_{i-2}(X_{<m}; Q),
// X_{<m} = { faces sigma of the Taylor simplex : lcm(sigma) strictly divides m }.
// Only multidegrees m in the lcm lattice can carry nonzero Betti numbers.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <vector>

#include "aci3/error.hpp"
#include "aci3/monomial.hpp"

namespace aci3 {

namespace {

// Rank of a dense rational matrix by Gaussian elimination.
int rational_rank(std::vector<std::vector<mpq_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][col]) == 0) continue;
      const mpq_class factor = rows[i][col] / rows[r][col];
      for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers dim H~_k for k = -1 .. maxdim of the simplicial
// complex whose faces (bitmasks, including the empty face) are given.
std::vector<int> reduced_homology(const std::vector<unsigned>& faces, int nverts) {
  std::vector<std::vector<unsigned>> by_dim(static_cast<std::size_t>(nverts) + 1);
  for (unsigned f : faces) by_dim[static_cast<std::size_t>(__builtin_popcount(f))].push_back(f);
  // by_dim[s] holds faces of size s, i.e. dimension s - 1.
  std::vector<int> rank_boundary(static_cast<std::size_t>(nverts) + 2, 0);
  for (std::size_t s = 1; s <= static_cast<std::size_t>(nverts); ++s) {
    const auto& hi = by_dim[s];
    const auto& lo = by_dim[s - 1];
    if (hi.empty() || lo.empty()) continue;
    std::map<unsigned, std::size_t> lo_index;
    for (std::size_t k = 0; k < lo.size(); ++k) lo_index[lo[k]] = k;
    std::vector<std::vector<mpq_class>> m(hi.size(), std::vector<mpq_class>(lo.size(), 0));
    for (std::size_t r = 0; r < hi.size(); ++r) {
      int sign = 1;
      for (int v = 0; v < nverts; ++v) {
        if (!(hi[r] & (1u << v))) continue;
        const auto it = lo_index.find(hi[r] & ~(1u << v));
        if (it != lo_index.end()) m[r][it->second] = sign;
        sign = -sign;
      }
    }
    rank_boundary[s] = rational_rank(std::move(m));
  }
  std::vector<int> out;
  for (std::size_t s = 0; s <= static_cast<std::size_t>(nverts); ++s) {
    const int dim_chain = static_cast<int>(by_dim[s].size());
    out.push_back(dim_chain - rank_boundary[s] - rank_boundary[s + 1]);
  }
  return out;  // out[s] = dim H~_{s-1}
}

}  // namespace

BettiTable minimal_resolution_oracle(const MonomialIdeal3& ideal, bool require_artinian) {
  const auto& gens = ideal.generators();
  const int n = static_cast<int>(gens.size());
  if (n > 10) throw Error(ErrorCode::TooManyGenerators, std::to_string(n) + " > 10");
  if (require_artinian && !ideal.is_artinian()) {
    throw Error(ErrorCode::NotArtinian, ideal.to_string());
  }

  const unsigned nsubsets = 1u << n;
  std::vector<Exponent> subset_lcm(nsubsets, Exponent{0, 0, 0});
  for (unsigned mask = 1; mask < nsubsets; ++mask) {
    const int low = __builtin_ctz(mask);
    subset_lcm[mask] = lcm(subset_lcm[mask & (mask - 1)], gens[static_cast<std::size_t>(low)]);
  }

  std::vector<Exponent> lattice(subset_lcm.begin() + 1, subset_lcm.end());
  std::sort(lattice.begin(), lattice.end());
  lattice.erase(std::unique(lattice.begin(), lattice.end()), lattice.end());

  std::vector<std::vector<int>> shifts(4);
  for (const Exponent& m : lattice) {
    std::vector<unsigned> faces;
    for (unsigned mask = 0; mask < nsubsets; ++mask) {
      const Exponent& l = subset_lcm[mask];
      if (divides(l, m) && l != m) faces.push_back(mask);
    }
    const auto h = reduced_homology(faces, n);
    for (std::size_t s = 0; s < h.size(); ++s) {
      const int i = static_cast<int>(s) + 1;  // H~_{s-1} = H~_{i-2}
      if (h[s] == 0) continue;
      if (i > 3) {
        throw Error(ErrorCode::InvalidArgument,
                    "nonzero Betti number in homological degree " + std::to_string(i));
      }
      for (int c = 0; c < h[s]; ++c) {
        shifts[static_cast<std::size_t>(i)].push_back(total_degree(m));
      }
    }
  }
  return BettiTable(3, {FreeModuleShifts(shifts[1]), FreeModuleShifts(shifts[2]),
                        FreeModuleShifts(shifts[3])});
}

}  // namespace aci3
