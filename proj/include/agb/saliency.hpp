#pragma once

// Guided-backprop saliency maps: where does a detector look when it calls a
// frame fake? The backward pass keeps only gradients that are positive both
// upstream and at each rectifier input, giving sharp attribution maps over
// the model's input crop.

#include <filesystem>
#include <utility>

#include "agb/detector.hpp"
#include "agb/image.hpp"
#include "agb/tensor.hpp"

namespace agb::saliency {

struct SaliencyResult {
    Tensor map;         // (S,S), min-max scaled to [0,1]; 0.5 everywhere if constant
    Tensor input_crop;  // (3,S,S) pixel-space crop the model saw (pre-normalization)
    Box crop_box;       // frame-coordinate box the input was cropped from
    int input_side = 0;
    Label predicted = Label::Real;
};

// Gradient of the predicted class's logit with respect to the model's
// preprocessed input, taken with guided rectifier gradients, reduced over
// channels by max |.|. Untrained models are rejected unless explicitly
// allowed (their maps are meaningless noise).
SaliencyResult guided_saliency(const zoo::DetectorModel& model, const Frame& frame,
                               bool allow_untrained = false);

// Maps a frame-coordinate box into input-crop coordinates; degenerate results
// are clamped to zero size at the nearest edge.
Box map_box_to_input(const Box& box, const Box& crop_box, int input_side);

// (mean inside, mean outside) of the map over the given input-coordinate
// region. Throws if either side is empty.
std::pair<double, double> region_means(const Tensor& map, const Box& region);

// Red-heat overlay of the map on the input crop, half opacity.
void write_overlay_png(const std::filesystem::path& path, const SaliencyResult& result);

}  // namespace agb::saliency
