#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dgsk/classifier.hpp"
#include "dgsk/params.hpp"

namespace dgsk {

/**
 * Deterministic sampling utilities. The engine is the standard mt19937_64
 * (bit-exact across platforms); the bounded draw is hand-rolled rejection
 * sampling, because the library distributions are implementation-defined and
 * would break seed-for-seed reproducibility between compilers.
 */
class SampleSource {
public:
    explicit SampleSource(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [0, n); n > 0.
    std::uint64_t bounded(std::uint64_t n);

    /// Uniform integer in [lo, hi].
    long integer(long lo, long hi);

    /// Small rational: numerator in [-9, 9], denominator in [1, 9].
    Rational small_rational();

    /// Same, with numerator != 0.
    Rational small_nonzero_rational();

private:
    std::mt19937_64 rng_;
};

/// Rejection-samples a valid parameter point of the requested stratum. Each
/// stratum is the generic locus of its case: for AllNonzero the a = b line is
/// excluded, because that line carries the nine-dimensional matrix family
/// rather than the zero-only behaviour shared by the rest of the case.
SklyaninParams sample_stratum(SampleSource& src, CaseTag stratum);

struct SweepRecord {
    std::size_t index = 0;
    CaseTag stratum;
    DgClassification result;
};

/**
 * SweepReport: classifications of stratified random parameter points,
 * deterministic per seed. Anomalies list the indices whose classification
 * came back Undecided or whose solution dimension deviates from the expected
 * value of the stratum (0, or 3 on the anti-diagonal line, or 9 on the
 * diagonal line); the list is empty on a conforming build.
 */
struct SweepReport {
    std::uint64_t seed = 0;
    std::size_t sample_count = 0;
    std::optional<CaseTag> stratum;           // set when restricted to one case
    std::vector<SweepRecord> records;         // sorted by index
    std::array<std::size_t, 5> case_counts{}; // indexed by CaseTag value
    std::vector<std::size_t> anomalies;
};

/// Expected solution dimension on the sampled stratum of each case.
std::size_t expected_solution_dim(CaseTag tag);

/// Stratified sweep round-robining the five cases; sample_count > 0.
SweepReport sweep(std::size_t sample_count, std::uint64_t seed);

/// Sweep restricted to one case tag.
SweepReport sweep(std::size_t sample_count, std::uint64_t seed, CaseTag stratum);

}  // namespace dgsk
