#include "dgsk/sweep.hpp"

#include <stdexcept>

namespace dgsk {

std::uint64_t SampleSource::bounded(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("bounded draw from an empty range");
    }
    // Rejection sampling: accept r >= 2^64 mod n, then reduce. The threshold
    // is computed as (-n) mod n in uint64 arithmetic.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = rng_();
        if (r >= threshold) {
            return r % n;
        }
    }
}

long SampleSource::integer(long lo, long hi) {
    if (lo > hi) {
        throw std::invalid_argument("empty integer range");
    }
    return lo + static_cast<long>(bounded(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational SampleSource::small_rational() {
    const long num = integer(-9, 9);
    const long den = integer(1, 9);
    return Rational(Integer(num), Integer(den));
}

Rational SampleSource::small_nonzero_rational() {
    for (;;) {
        Rational r = small_rational();
        if (!r.is_zero()) {
            return r;
        }
    }
}

SklyaninParams sample_stratum(SampleSource& src, CaseTag stratum) {
    for (;;) {
        Rational a, b, c;
        switch (stratum) {
            case CaseTag::TwoNonzeroWithC:
                c = src.small_nonzero_rational();
                if (src.bounded(2) == 0) {
                    a = src.small_nonzero_rational();
                } else {
                    b = src.small_nonzero_rational();
                }
                break;
            case CaseTag::AllNonzero:
                a = src.small_nonzero_rational();
                b = src.small_nonzero_rational();
                c = src.small_nonzero_rational();
                if (a == b) {
                    // The a = b line inside this case carries the matrix
                    // family instead of the generic zero-only behaviour;
                    // the stratum samples the generic locus.
                    continue;
                }
                break;
            case CaseTag::CZeroDistinctSquares:
                a = src.small_nonzero_rational();
                b = src.small_nonzero_rational();
                if (a == b || a == -b) {
                    continue;
                }
                break;
            case CaseTag::CZeroAntiDiagonal:
                a = src.small_nonzero_rational();
                b = -a;
                break;
            case CaseTag::CZeroDiagonal:
                a = src.small_nonzero_rational();
                b = a;
                break;
        }
        const auto p = validate_quiet(a, b, c);
        if (p && case_of(*p) == stratum) {
            return *p;
        }
    }
}

std::size_t expected_solution_dim(CaseTag tag) {
    switch (tag) {
        case CaseTag::CZeroAntiDiagonal: return 3;
        case CaseTag::CZeroDiagonal: return 9;
        default: return 0;
    }
}

namespace {

const std::array<CaseTag, 5> kAllTags = {
    CaseTag::TwoNonzeroWithC,     CaseTag::AllNonzero, CaseTag::CZeroDistinctSquares,
    CaseTag::CZeroAntiDiagonal, CaseTag::CZeroDiagonal,
};

SweepReport run_sweep(std::size_t sample_count, std::uint64_t seed,
                      std::optional<CaseTag> stratum) {
    if (sample_count == 0) {
        throw std::invalid_argument("sample_count must be positive");
    }
    SweepReport report;
    report.seed = seed;
    report.sample_count = sample_count;
    report.stratum = stratum;

    SampleSource src(seed);
    for (std::size_t i = 0; i < sample_count; ++i) {
        const CaseTag tag = stratum ? *stratum : kAllTags[i % kAllTags.size()];
        const SklyaninParams p = sample_stratum(src, tag);
        SweepRecord rec{i, tag, classify(p)};
        report.case_counts[static_cast<std::size_t>(rec.result.tag)] += 1;
        const bool dim_off = rec.result.solution_dim != expected_solution_dim(rec.result.tag);
        if (rec.result.kind == ClassificationKind::Undecided || dim_off) {
            report.anomalies.push_back(i);
        }
        report.records.push_back(std::move(rec));
    }
    return report;
}

}  // namespace

SweepReport sweep(std::size_t sample_count, std::uint64_t seed) {
    return run_sweep(sample_count, seed, std::nullopt);
}

SweepReport sweep(std::size_t sample_count, std::uint64_t seed, CaseTag stratum) {
    return run_sweep(sample_count, seed, stratum);
}

}  // namespace dgsk
