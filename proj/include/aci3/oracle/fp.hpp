#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace aci3::oracle {

using Fp = std::uint32_t;

inline constexpr Fp kDefaultPrime = 32003;

/// Arithmetic in Z/p for a prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(Fp p = kDefaultPrime);

  Fp p() const { return p_; }
  Fp add(Fp a, Fp b) const {
    const Fp s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + p_ - b; }
  Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
  Fp mul(Fp a, Fp b) const {
    return static_cast<Fp>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Fp inv(Fp a) const;
  /// Reduces an arbitrary signed integer into [0, p).
  Fp from_int(std::int64_t v) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Fp p_;
};

/// Dense row-major matrix over Z/p.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Fp& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fp operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Fp> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Fp> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Fp> values);
  /// Keeps the first `n` rows.
  void truncate(std::size_t n);

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fp> data_;
};

enum class Execution { Serial, Parallel };

/// Reduced row echelon form in place; zero rows are dropped, the returned
/// vector lists the pivot column of each remaining row.
///
/// Serial is the reference implementation. Parallel distributes the
/// per-pivot row updates with OpenMP and produces bit-identical output.
std::vector<std::size_t> rref(FpMatrix& m, const PrimeField& field,
                              Execution exec = Execution::Parallel);

std::size_t rank(FpMatrix m, const PrimeField& field, Execution exec = Execution::Parallel);

/// Basis of the right null space {v : M v = 0}, one vector per row.
FpMatrix null_space(FpMatrix m, const PrimeField& field, Execution exec = Execution::Parallel);

/// Row space grown one vector at a time. Each stored row is reduced
/// against the earlier ones, so reducing a vector by the rows in insertion
/// order leaves it zero iff it lies in the span.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t cols, const PrimeField& field) : cols_(cols), field_(field) {}

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  bool full() const { return pivots_.size() == cols_; }

  /// Reduces `v` in place against the stored rows.
  void reduce(std::vector<Fp>& v) const;
  /// Adds `v` if it is not in the span; returns whether it was added.
  bool insert(std::vector<Fp> v);

  /// The span as a matrix in reduced row echelon form.
  FpMatrix to_rref(std::vector<std::size_t>* pivots = nullptr,
                   Execution exec = Execution::Serial) const;

 private:
  std::size_t cols_;
  PrimeField field_;
  std::vector<std::vector<Fp>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace aci3::oracle
