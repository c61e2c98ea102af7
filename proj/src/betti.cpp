#include "aci3/betti.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "aci3/error.hpp"

namespace aci3 {

FreeModuleShifts::FreeModuleShifts(std::initializer_list<int> shifts)
    : shifts_(shifts) {
  std::sort(shifts_.begin(), shifts_.end());
}

FreeModuleShifts::FreeModuleShifts(std::vector<int> shifts)
    : shifts_(std::move(shifts)) {
  std::sort(shifts_.begin(), shifts_.end());
}

FreeModuleShifts FreeModuleShifts::repeated(int a, int count) {
  return FreeModuleShifts(std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), a));
}

std::int64_t FreeModuleShifts::sum() const {
  return std::accumulate(shifts_.begin(), shifts_.end(), std::int64_t{0});
}

int FreeModuleShifts::multiplicity(int a) const {
  auto [lo, hi] = std::equal_range(shifts_.begin(), shifts_.end(), a);
  return static_cast<int>(hi - lo);
}

int FreeModuleShifts::min() const {
  if (shifts_.empty()) throw Error(ErrorCode::InvalidArgument, "min of zero module");
  return shifts_.front();
}

int FreeModuleShifts::max() const {
  if (shifts_.empty()) throw Error(ErrorCode::InvalidArgument, "max of zero module");
  return shifts_.back();
}

FreeModuleShifts FreeModuleShifts::shifted(int delta) const {
  std::vector<int> out = shifts_;
  for (int& a : out) a += delta;
  return FreeModuleShifts(std::move(out));
}

bool FreeModuleShifts::contains(const FreeModuleShifts& sub) const {
  return std::includes(shifts_.begin(), shifts_.end(), sub.shifts_.begin(),
                       sub.shifts_.end());
}

std::string FreeModuleShifts::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < shifts_.size(); ++k) {
    if (k) os << ',';
    os << shifts_[k];
  }
  os << '}';
  return os.str();
}

FreeModuleShifts dual_twist(const FreeModuleShifts& f, int d) {
  std::vector<int> out;
  out.reserve(f.rank());
  for (int a : f) out.push_back(d - a);
  return FreeModuleShifts(std::move(out));
}

FreeModuleShifts direct_sum(const FreeModuleShifts& f, const FreeModuleShifts& g) {
  std::vector<int> out;
  out.reserve(f.rank() + g.rank());
  std::merge(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(out));
  return FreeModuleShifts(std::move(out));
}

FreeModuleShifts subtract(const FreeModuleShifts& f, const FreeModuleShifts& g) {
  std::vector<int> out;
  std::vector<int> missing;
  std::set_difference(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(out));
  std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(missing));
  if (!missing.empty()) {
    throw Error(ErrorCode::NotSubmodule,
                "shift " + std::to_string(missing.front()) + " of " + g.to_string() +
                    " exceeds its multiplicity in " + f.to_string());
  }
  return FreeModuleShifts(std::move(out));
}

BettiTable::BettiTable(int codim, std::vector<FreeModuleShifts> modules,
                       Minimality minimality)
    : codim_(codim), modules_(std::move(modules)), minimality_(minimality) {
  if (codim_ < 1) throw Error(ErrorCode::InvalidArgument, "codim must be positive");
  if (static_cast<int>(modules_.size()) != codim_) {
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(codim_) + " modules, got " +
                    std::to_string(modules_.size()));
  }
}

const FreeModuleShifts& BettiTable::module(int i) const {
  if (i < 1 || i > codim_) {
    throw Error(ErrorCode::InvalidArgument, "homological index " + std::to_string(i));
  }
  return modules_[static_cast<std::size_t>(i - 1)];
}

BettiTable BettiTable::with_minimality(Minimality m) const {
  BettiTable out = *this;
  out.minimality_ = m;
  return out;
}

std::int64_t BettiTable::rank_alternating_sum() const {
  std::int64_t total = 1;
  std::int64_t sign = -1;
  for (const auto& f : modules_) {
    total += sign * static_cast<std::int64_t>(f.rank());
    sign = -sign;
  }
  return total;
}

std::int64_t BettiTable::shift_alternating_sum() const {
  std::int64_t total = 0;
  std::int64_t sign = -1;
  for (const auto& f : modules_) {
    total += sign * f.sum();
    sign = -sign;
  }
  return total;
}

int BettiTable::top_shift() const {
  const auto& last = modules_.back();
  return last.empty() ? 0 : last.max();
}

std::string BettiTable::to_string() const {
  std::ostringstream os;
  os << "[c=" << codim_;
  for (const auto& f : modules_) os << ' ' << f.to_string();
  os << ']';
  return os.str();
}

BettiTable koszul_table(const std::vector<int>& degrees) {
  const int c = static_cast<int>(degrees.size());
  std::vector<std::vector<int>> mods(static_cast<std::size_t>(c));
  for (unsigned mask = 1; mask < (1u << c); ++mask) {
    int size = 0;
    int total = 0;
    for (int k = 0; k < c; ++k) {
      if (mask & (1u << k)) {
        ++size;
        total += degrees[static_cast<std::size_t>(k)];
      }
    }
    mods[static_cast<std::size_t>(size - 1)].push_back(total);
  }
  std::vector<FreeModuleShifts> out;
  for (auto& m : mods) out.emplace_back(std::move(m));
  return BettiTable(c, std::move(out));
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t hilbert_function_unchecked(const BettiTable& b, int j) {
  const int c = b.codim();
  auto free_dim = [c](std::int64_t deg) {
    return deg < 0 ? 0 : binomial(deg + c - 1, c - 1);
  };
  std::int64_t total = free_dim(j);
  std::int64_t sign = -1;
  for (const auto& f : b.modules()) {
    for (int a : f) total += sign * free_dim(static_cast<std::int64_t>(j) - a);
    sign = -sign;
  }
  return total;
}

std::int64_t hilbert_function(const BettiTable& b, int j) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  const std::int64_t v = hilbert_function_unchecked(b, j);
  if (v < 0) {
    throw Error(ErrorCode::NegativeValue,
                "HF(" + std::to_string(j) + ") = " + std::to_string(v) + " for " +
                    b.to_string());
  }
  return v;
}

BettiTable cancel(const BettiTable& b, int i, int a, int count) {
  if (count <= 0) throw Error(ErrorCode::InvalidArgument, "cancel count must be positive");
  if (i < 1 || i >= b.codim()) {
    throw Error(ErrorCode::CannotCancel, "no module pair at index " + std::to_string(i));
  }
  const auto& lo = b.module(i);
  const auto& hi = b.module(i + 1);
  if (lo.multiplicity(a) < count || hi.multiplicity(a) < count) {
    throw Error(ErrorCode::CannotCancel,
                "shift " + std::to_string(a) + " x" + std::to_string(count) + " not in both F_" +
                    std::to_string(i) + "=" + lo.to_string() + " and F_" +
                    std::to_string(i + 1) + "=" + hi.to_string());
  }
  auto mods = b.modules();
  const auto removed = FreeModuleShifts::repeated(a, count);
  mods[static_cast<std::size_t>(i - 1)] = subtract(lo, removed);
  mods[static_cast<std::size_t>(i)] = subtract(hi, removed);
  return BettiTable(b.codim(), std::move(mods), b.minimality());
}

BettiTable cancel_all(const BettiTable& b) {
  BettiTable cur = b;
  for (int i = 1; i < cur.codim(); ++i) {
    for (;;) {
      const auto& lo = cur.module(i).shifts();
      const auto& hi = cur.module(i + 1).shifts();
      std::vector<int> common;
      std::set_intersection(lo.begin(), lo.end(), hi.begin(), hi.end(),
                            std::back_inserter(common));
      if (common.empty()) break;
      cur = cancel(cur, i, common.front(), 1);
    }
  }
  return cur.with_minimality(Minimality::FormallyMinimalized);
}

}  // namespace aci3
