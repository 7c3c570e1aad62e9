#pragma once

#include <cstdint>

#include "tabstat/operators.hpp"
#include "tabstat/trace.hpp"

namespace tabstat {

// kappa(sigma): sum over the rectangle blocks of quinv(block) - inv(block
// with rows reversed). Can be negative.
std::int64_t kappa(const Filling& f);

// theta, defined on rectangle shapes: reverse the rows, then run the phi
// cascade (pass j applies phi_i for i = n-1 down to j). Exchanges inv and
// quinv while fixing maj and the non-descent vector.
Filling theta(const Filling& f, Trace* trace = nullptr);

// gamma: the recursive row-stacking construction. Row-equivalent to the
// input, fixes maj, and satisfies quinv(gamma(f)) = inv(f) + kappa(gamma(f)).
Filling gamma(const Filling& f, Trace* trace = nullptr);

// varphi: gamma followed by the phi cascade inside each rectangle block of
// the image (equivalently, theta applied to each reversed block). Carries
// (inv, maj) to (quinv, maj).
Filling varphi(const Filling& f, Trace* trace = nullptr);

}  // namespace tabstat
