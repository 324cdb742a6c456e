#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "agb/image.hpp"
#include "agb/tensor.hpp"
#include "agb/vision.hpp"

namespace agb::zoo {

// How a detector turns the known face box into its crop. Different policies
// stand in for different face-tracking front ends.
struct CropPolicy {
    double margin = 0.1;    // fraction of the face box added on each side
    double jitter_x = 0.0;  // deterministic offset, fraction of box width
    double jitter_y = 0.0;  // deterministic offset, fraction of box height
    std::string policy_id = "default";

    // Deterministic: same face box and frame size always yield the same crop,
    // clipped to frame bounds.
    Box box_for(const Box& face_box, int frame_h, int frame_w) const;
};

struct LayerSpec {
    enum class Kind { Conv, Relu, MaxPool, Gap, Dense, Flatten };
    Kind kind = Kind::Relu;
    int out_ch = 0, k = 0, stride = 0, pad = 0;  // Conv / MaxPool (k, stride)
    int units = 0;                               // Dense
};

// Architecture ids: "shallow_a", "pool_b", "deep_c" are the zoo CNNs;
// "linear" (flatten + dense) exists for closed-form attack checks.
const std::vector<LayerSpec>& arch_layers(const std::string& arch_id);
std::vector<std::string> known_archs();

struct DetectorModel {
    std::string id;
    std::string arch_id;
    CropPolicy crop_policy;
    vision::Recipe recipe;
    std::map<std::string, Tensor> weights;  // name-ordered
    std::string aggregation = "mean";
    bool trained = false;

    // Full differentiable pipeline: crop -> resize -> normalize -> CNN.
    // Returns the 2-entry logits (index 0 = Real, 1 = Fake).
    Tensor logits(Tape& tape, const Tensor& frame_pixels, const Box& face_box) const;
    // CNN alone, applied to an already-preprocessed input.
    Tensor forward_cnn(Tape& tape, const Tensor& preprocessed) const;
};

DetectorModel build_detector(const std::string& id, const std::string& arch_id,
                             const CropPolicy& policy, const vision::Recipe& recipe,
                             uint64_t seed);

// The four default zoo members: three architectures, one reused with a
// different crop policy, normalization, and seed.
std::vector<DetectorModel> default_zoo(uint64_t seed);

struct TrainConfig {
    int epochs = 30;
    double lr = 2e-3;
    int batch = 32;
    uint64_t seed = 0;
    bool augment_noise = false;   // optional robustness ablation
    double noise_sigma = 0.02;
};

struct TrainMetrics {
    std::vector<double> epoch_loss;
    std::vector<double> heldout_auc;  // clip-level, after each epoch
};

// Frame-level cross-entropy training with Adam and horizontal-flip
// augmentation. Aborts with a diagnostic if the loss diverges. epochs == 0
// leaves the model untouched.
TrainMetrics train_detector(DetectorModel& model, const std::vector<Clip>& train_clips,
                            const std::vector<Clip>& heldout_clips, const TrainConfig& cfg);

struct FrameScore {
    std::array<float, 2> logits{};
    std::array<float, 2> probs{};
    Label label = Label::Real;
};

struct ClipScore {
    double fake_score = 0.0;  // aggregated Fake probability
    Label label = Label::Real;
    std::vector<float> frame_fake_probs;
};

FrameScore classify_frame(const DetectorModel& model, const Frame& frame);
ClipScore classify_clip(const DetectorModel& model, const Clip& clip);

// Aggregation rule used by classify_clip: mean over frames, Fake iff > 0.5.
double aggregate_scores(std::span<const float> frame_fake_probs);

// Persists weights (checkpoint) plus a JSON sidecar describing the model.
void save_model(const DetectorModel& model, const std::filesystem::path& dir);
DetectorModel load_model(const std::filesystem::path& dir, const std::string& id);

}  // namespace agb::zoo
