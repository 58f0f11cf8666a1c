#pragma once

namespace sbolab::conventions {

/// Flat-space codifferential d* = codiff_sign * sum_a iota_a d_a. The
/// value below is the one under which the order-k operator family on
/// i-forms passes the full covariance suite; see docs/conventions.md.
inline constexpr int codiff_sign = -1;

/// Hodge star orientation: dx_1 ^ ... ^ dx_m positive.
inline constexpr int hodge_orientation = 1;

/// Covariant parameters of the restriction-of-d family E^i -> E^{i+1},
/// adjudicated by the nullspace oracle: (lambda, nu) = (0, 0) with even
/// parities on both sides.
inline constexpr int rest_d_lambda = 0;
inline constexpr int rest_d_nu = 0;

/// Identifies the pinned convention set; embedded in cache files so that
/// stale results are invalidated when a convention changes.
inline constexpr const char* tag =
    "codiff=-1;hodge=+1;action=L+lr;restd=0,0,+,+;star=src:l+2i-n,flip;"
    "tgt:n+2j-(n-1),flip";

}  // namespace sbolab::conventions
