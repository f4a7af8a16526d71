// Typed error hierarchy shared by every module. All contract violations
// surface as subclasses of spinver::error; internal invariant breakage uses
// assert and is considered a bug, never a recoverable condition.
#pragma once

#include <stdexcept>
#include <string>

namespace spinver {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic between scalars of different fields (Q vs F_p, or distinct p).
struct field_mismatch_error : error {
  using error::error;
};

// Division or inversion of zero.
struct division_by_zero_error : error {
  using error::error;
};

// Operation needs invertibility of small integers the characteristic kills
// (group-order division, eigenvalue splitting), or an unusable prime.
struct bad_characteristic_error : error {
  using error::error;
};

// A jet was requested at a point that is not a smooth curve point of the
// given equations (Jacobian corank != 1 in the chart).
struct singular_point_error : error {
  using error::error;
};

// A subspace handed to the representation machinery is not stable under the
// group action.
struct not_invariant_error : error {
  using error::error;
};

// A vanishing-locus computation met a positive-dimensional solution set
// where a finite one was required.
struct nonreduced_error : error {
  using error::error;
};

// A decision procedure exhausted its configured bound without an answer.
struct indeterminate_error : error {
  using error::error;
};

// A form handed to restriction machinery vanishes identically on the curve.
struct identically_zero_error : error {
  using error::error;
};

// Input violates trivially-checkable preconditions (sizes, degrees, flags).
struct invalid_argument_error : error {
  using error::error;
};

// A randomized search for a general-position instance hit its attempt cap.
// Pipeline boundaries catch this and mark the report exhausted rather than
// failed; partial check data is retained.
struct search_exhausted_error : error {
  using error::error;
};

}  // namespace spinver
