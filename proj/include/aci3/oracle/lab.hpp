#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "aci3/betti.hpp"
#include "aci3/gorenstein.hpp"
#include "aci3/oracle/graded_ideal.hpp"

namespace aci3::oracle {

/// Minimal graded Betti table of R/I, read off from the Koszul homology
/// Tor_i(R/I, k)_j = H_i(Lambda^i k^3 (x) (R/I)_{j-i}).
/// Requires (R/I)_j = 0 for some j <= bound and bound >= socle degree + 3.
BettiTable minimal_resolution_fp(GradedIdealFp& ideal, int degree_bound);

/// Same, with the bound set to socle degree + 3 (found by scanning the
/// Hilbert function up to the degree cap).
BettiTable minimal_resolution_fp(GradedIdealFp& ideal);

/// Top degree with (R/I)_j != 0. Throws NotArtinianWithinBound.
int socle_degree(GradedIdealFp& ideal, int bound);

/// (Z : Q), degree by degree up to the socle degree of R/Z plus one,
/// with minimal generators. Throws NotContained if Z is not inside Q and
/// BoundTooSmall if R/Z does not vanish by `degree_bound`.
GradedIdealFp colon_ideal(GradedIdealFp& z, GradedIdealFp& q, int degree_bound);

/// Uniformly random elements of I_{a_k} for each requested degree.
std::vector<HomogeneousPoly> random_elements(GradedIdealFp& ideal, const std::vector<int>& degrees,
                                             std::mt19937_64& rng);

struct RegularSequenceResult {
  bool yes = false;
  /// The three forms of the successful sample.
  std::vector<HomogeneousPoly> witness;
  int trials_used = 0;
};

/// Samples triples of elements of I with the given degrees. Yes when some
/// sample generates all of R in degree a_1 + a_2 + a_3 - 2, which happens
/// exactly when its Hilbert function is that of a complete intersection.
/// Otherwise ProbablyNo. Throws DegreeBelowIdeal.
RegularSequenceResult regular_sequence_test(GradedIdealFp& ideal, Triple degrees, int trials,
                                            std::uint64_t seed);

/// Recomputes the Hilbert function of the witness through degree
/// a_1 + a_2 + a_3 - 2 and compares it with the complete intersection.
bool verify_regular_sequence_witness(const std::vector<HomogeneousPoly>& witness,
                                     const PrimeField& field, OracleLimits limits = {});

/// Degree of entry (i, j) of the skew matrix whose submaximal pfaffians
/// have degrees delta: theta - d_i - d_j. Entries of degree <= 0 vanish.
std::vector<std::vector<int>> skew_degree_matrix(const GorensteinShape& shape);

/// Submaximal pfaffians of a random skew matrix with the degree pattern
/// above. The sample is accepted only if its resolution is the Gorenstein
/// table of delta; otherwise it is redrawn up to `retries` times.
/// Throws NoConsistentDegreeMatrix or SamplingFailed.
GradedIdealFp pfaffian_gorenstein_sample(const std::vector<int>& delta, std::uint64_t seed,
                                         PrimeField field = PrimeField(), OracleLimits limits = {},
                                         int retries = 8);

/// min(delta) by search: scans triples d_1 <= a_1 <= a_2 <= a_3 <= theta
/// in order of increasing sum and returns the first one for which some
/// pfaffian sample passes regular_sequence_test. Every triple below it
/// has a smaller sum and was already rejected, so it is the componentwise
/// minimum among the Yes answers. Membership is certified by the witness;
/// minimality only as far as ProbablyNo is right. Answers are cached per
/// degree sequence.
class ProbabilisticMinProvider final : public MinProvider {
 public:
  ProbabilisticMinProvider(int samples, int trials, std::uint64_t seed,
                           PrimeField field = PrimeField(), OracleLimits limits = {});

  std::optional<Triple> query(const GorensteinShape& shape) const override;
  std::string name() const override { return "oracle"; }

  /// Witness of the last Yes for `shape`, if any.
  std::optional<std::vector<HomogeneousPoly>> witness(const GorensteinShape& shape) const;

 private:
  std::optional<Triple> search(const GorensteinShape& shape) const;

  int samples_;
  int trials_;
  std::uint64_t seed_;
  PrimeField field_;
  OracleLimits limits_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<int>, std::vector<HomogeneousPoly>> witnesses_;
  mutable std::map<std::vector<int>, std::optional<Triple>> answers_;
};

}  // namespace aci3::oracle
