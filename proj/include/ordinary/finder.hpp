#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordinary/select.hpp"

namespace ordinary {

// A found ordinary curve, self-contained enough to re-verify and reproduce:
// the curve, exactly which points of the input it passes through, the base
// set that anchored the parameter space, and how it was found.
struct Certificate {
    int degree = 0;
    std::vector<Int> coeffs;          // normalized, monomial order
    std::vector<int> incident;        // ascending; exactly degree*(degree+3)/2 entries
    std::vector<int> base;            // ascending; empty for oracle- and line-certificates
    std::string case_tag;
    std::string method;               // "pipeline" or "oracle"
    std::optional<Triple> dual_witness; // parameter-plane point for dual-search certificates

    bool operator==(const Certificate& o) const = default;
};

struct VerifyResult {
    bool ok = false;
    std::string reason;
};

// Line through exactly two points of A (requires A not all collinear).
Certificate find_ordinary_line_certificate(const PointSet& A, int threads = 0);

// Conic through exactly five points of A (requires A not on a conic).
Certificate find_ordinary_conic(const PointSet& A, int threads = 0);

// Cubic through exactly nine points of A (requires A not on a cubic). Base
// selection can legitimately fail below 250 points; with the fallback enabled
// the exhaustive search takes over, otherwise SelectionFailed propagates.
Certificate find_ordinary_cubic(const PointSet& A, bool allow_oracle_fallback, int threads = 0);

// Full independent incidence scan: the certificate's curve must pass through
// exactly the listed points and the right number of them.
VerifyResult verify_certificate(const PointSet& A, const Certificate& cert);

} // namespace ordinary
