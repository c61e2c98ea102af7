#include "aci3/oracle/fp.hpp"

#include <algorithm>
#include <stdexcept>

#include "aci3/error.hpp"

namespace aci3::oracle {

PrimeField::PrimeField(Fp p) : p_(p) {
  if (p < 2 || p >= (1u << 31)) throw Error(ErrorCode::InvalidArgument, "prime out of range");
  for (Fp d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  }
}

Fp PrimeField::inv(Fp a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return from_int(t);
}

Fp PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Fp>(r);
}

void FpMatrix::append_row(std::span<const Fp> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void FpMatrix::truncate(std::size_t n) {
  rows_ = std::min(rows_, n);
  data_.resize(rows_ * cols_);
}

namespace {

// row_i -= row_i[c] * row_r on columns >= c. row_r has a 1 in column c and
// zeros before it.
inline void eliminate_row(FpMatrix& m, std::size_t i, std::size_t r, std::size_t c,
                          const PrimeField& f) {
  const Fp factor = m(i, c);
  if (factor == 0) return;
  const Fp neg = f.neg(factor);
  auto dst = m.row(i);
  auto src = m.row(r);
  const std::uint64_t p = f.p();
  for (std::size_t j = c; j < m.cols(); ++j) {
    if (src[j] == 0) continue;
    dst[j] = static_cast<Fp>((dst[j] + static_cast<std::uint64_t>(neg) * src[j]) % p);
  }
}

inline void normalize_row(FpMatrix& m, std::size_t r, std::size_t c, const PrimeField& f) {
  const Fp inv = f.inv(m(r, c));
  if (inv == 1) return;
  auto row = m.row(r);
  for (std::size_t j = c; j < m.cols(); ++j) row[j] = f.mul(row[j], inv);
}

inline std::size_t find_pivot(const FpMatrix& m, std::size_t from, std::size_t c) {
  for (std::size_t i = from; i < m.rows(); ++i) {
    if (m(i, c) != 0) return i;
  }
  return m.rows();
}

inline void swap_rows(FpMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

std::vector<std::size_t> rref_serial(FpMatrix& m, const PrimeField& f) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t piv = find_pivot(m, r, c);
    if (piv == m.rows()) continue;
    swap_rows(m, r, piv);
    normalize_row(m, r, c, f);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r) eliminate_row(m, i, r, c, f);
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate(r);
  return pivots;
}

std::vector<std::size_t> rref_parallel(FpMatrix& m, const PrimeField& f) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const auto nrows = static_cast<std::ptrdiff_t>(m.rows());
  // Small matrices are not worth a parallel region per pivot.
  const bool wide = m.rows() * m.cols() >= 16384;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t piv = find_pivot(m, r, c);
    if (piv == m.rows()) continue;
    swap_rows(m, r, piv);
    normalize_row(m, r, c, f);
#pragma omp parallel for schedule(static) if (wide)
    for (std::ptrdiff_t i = 0; i < nrows; ++i) {
      if (static_cast<std::size_t>(i) != r) eliminate_row(m, static_cast<std::size_t>(i), r, c, f);
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate(r);
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref(FpMatrix& m, const PrimeField& field, Execution exec) {
  return exec == Execution::Serial ? rref_serial(m, field) : rref_parallel(m, field);
}

std::size_t rank(FpMatrix m, const PrimeField& field, Execution exec) {
  return rref(m, field, exec).size();
}

FpMatrix null_space(FpMatrix m, const PrimeField& field, Execution exec) {
  const std::size_t ncols = m.cols();
  const auto pivots = rref(m, field, exec);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  FpMatrix out(0, ncols);
  std::vector<Fp> v(ncols);
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = field.neg(m(k, free));
    out.append_row(v);
  }
  return out;
}

void EchelonBasis::reduce(std::vector<Fp>& v) const {
  const std::uint64_t p = field_.p();
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t c = pivots_[k];
    if (v[c] == 0) continue;
    const std::uint64_t neg = field_.neg(v[c]);
    const auto& row = rows_[k];
    for (std::size_t j = c; j < cols_; ++j) {
      if (row[j] != 0) v[j] = static_cast<Fp>((v[j] + neg * row[j]) % p);
    }
  }
}

bool EchelonBasis::insert(std::vector<Fp> v) {
  if (v.size() != cols_) throw Error(ErrorCode::InvalidArgument, "vector length mismatch");
  if (full()) return false;
  reduce(v);
  const auto it = std::find_if(v.begin(), v.end(), [](Fp x) { return x != 0; });
  if (it == v.end()) return false;
  const auto c = static_cast<std::size_t>(it - v.begin());
  const Fp inv = field_.inv(v[c]);
  for (std::size_t j = c; j < cols_; ++j) v[j] = field_.mul(v[j], inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(c);
  return true;
}

FpMatrix EchelonBasis::to_rref(std::vector<std::size_t>* pivots, Execution exec) const {
  FpMatrix m(0, cols_);
  for (const auto& r : rows_) m.append_row(r);
  auto piv = rref(m, field_, exec);
  if (pivots != nullptr) *pivots = std::move(piv);
  return m;
}

}  // namespace aci3::oracle
