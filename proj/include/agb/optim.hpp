#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace agb {

// Per-parameter Adam moments. Moments are kept in double so long runs do not
// lose small gradient contributions to float rounding.
struct AdamState {
    std::vector<double> m;  // first moment
    std::vector<double> v;  // second moment
    int64_t t = 0;          // completed steps
};

// Standard bias-corrected Adam update, in place.
void adam_step(std::span<float> params, std::span<const float> grads, AdamState& state,
               double lr, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);

}  // namespace agb
