#pragma once

// Verification-only helpers: independent reference computations used by the
// identity suites and the test binaries. Everything here works straight on
// basis masks and signs, deliberately avoiding the composition-product code
// paths it is used to cross-check.

#include "dforms/double_form.hpp"

namespace dforms::testing {

// Derivation action of a (1,1) form on the left tensor factor, computed by
// the literal Leibniz sum over slots: each covector e^m of a left key is
// replaced by sum_k h(e_m, e_k) e^k in place.
DoubleForm leibniz_extend_left(const DoubleForm& h, const DoubleForm& omega);
DoubleForm leibniz_extend_right(const DoubleForm& h, const DoubleForm& omega);

// Value of a double form on tuples of basis vectors (1-based indices, any
// order, repeats give zero).
Scalar evaluate(const DoubleForm& omega, const std::vector<int>& left_args,
                const std::vector<int>& right_args);

}  // namespace dforms::testing
