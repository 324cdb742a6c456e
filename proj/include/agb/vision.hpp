#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "agb/image.hpp"
#include "agb/rng.hpp"
#include "agb/tensor.hpp"

namespace agb::vision {

// Input-transform families used to simulate processing a frame may undergo
// before reaching a detector (expectation-over-transforms attacks).
enum class Family { Translate, DownUp, GaussNoise };

const char* family_name(Family f);

// A concrete transform instance with all parameters fixed.
struct TransformSpec {
    Family family = Family::Translate;
    int tx = 0, ty = 0;        // Translate
    double scale = 1.0;        // DownUp shrink factor r (down to 1/r, back up)
    double sigma = 0.0;        // GaussNoise standard deviation
    uint64_t noise_seed = 0;   // GaussNoise draw stream
    std::string describe() const;
};

// One sampled transform: a single spec normally, a chain when composition is
// enabled. An empty chain is the identity.
struct SampledTransform {
    std::vector<TransformSpec> chain;
    std::string describe() const;
};

// Parameter ranges for sampling. Defaults follow the transform table used
// throughout: translations in [-20,20] px, shrink factors in [2,5], noise
// sigma in [0.05,0.07], three samples per family.
struct TransformDistribution {
    std::vector<Family> families{Family::Translate, Family::DownUp, Family::GaussNoise};
    int samples_per_family = 3;
    int translate_lo = -20, translate_hi = 20;
    double scale_lo = 2.0, scale_hi = 5.0;
    double sigma_lo = 0.05, sigma_hi = 0.07;
    bool compose = false;  // chain one sample from every family instead
    int total_samples() const {
        return compose ? samples_per_family
                       : samples_per_family * static_cast<int>(families.size());
    }
};

// --- differentiable image ops (recorded on the tape) ------------------------
// out[c][i][j] = in[c][i+ty][j+tx]; zero where the source falls outside.
Tensor translate(Tape& tape, const Tensor& x, int tx, int ty);

// Bilinear resample to (out_h, out_w), half-pixel centers, edge-clamped taps.
Tensor bilinear_resize(Tape& tape, const Tensor& x, int out_h, int out_w);

// Shrink by factor r (floor dims; factors that leave less than 2x2 are
// rejected) then resample back to the original size; models a down/up-scaling
// round trip.
Tensor downsize_upsize(Tape& tape, const Tensor& x, double r);

// Adds sigma * N(0,1) noise drawn from the given stream. The noise tensor is
// a constant with respect to gradients.
Tensor gaussian_noise(Tape& tape, const Tensor& x, double sigma, uint64_t seed);

Tensor crop(Tape& tape, const Tensor& x, const Box& box);

Tensor apply_transform(Tape& tape, const Tensor& x, const TransformSpec& spec);
Tensor apply_transform(Tape& tape, const Tensor& x, const SampledTransform& t);

// --- sampling ----------------------------------------------------------------
std::vector<SampledTransform> sample_transforms(const TransformDistribution& dist, Rng& rng);

// --- detector input pipeline -------------------------------------------------
// Per-model normalization recipe.
struct Recipe {
    int input_side = 64;
    std::array<float, 3> mean{0.5f, 0.5f, 0.5f};
    std::array<float, 3> stdev{0.5f, 0.5f, 0.5f};
};

// Crop the given box, resize to the recipe's input side, then normalize each
// channel as (x - mean) / stdev.
Tensor preprocess(Tape& tape, const Tensor& frame, const Box& crop_box, const Recipe& recipe);

}  // namespace agb::vision
