#pragma once

// Adversarial attacks against frame-level detectors: iterative gradient-sign
// attacks (plain and expectation-over-transforms) and universal perturbations.
//
// All attacks operate in frame pixel space ([0,1] floats) and keep every
// iterate inside both the L-inf ball around the original frame and the valid
// pixel range:
//   x_i = clamp01(x_0 + clip_eps(x_{i-1} - alpha * sign(grad) - x_0))
// with sign(0) = 0.

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "agb/detector.hpp"
#include "agb/image.hpp"
#include "agb/tensor.hpp"
#include "agb/vision.hpp"

namespace agb::attacks {

struct AttackConfig {
    double epsilon = 16.0 / 255.0;
    double alpha = 0.0;         // step size; <= 0 means epsilon / 8
    int max_iters = 100;        // default for the plain attack; use ~200 for EOT
    double target_conf = 0.99;  // plain attack succeeds once F(x)_target exceeds this
    uint64_t seed = 0;          // transform sampling stream (EOT)
    vision::TransformDistribution transforms;  // EOT only; empty families = identity
    bool freeze_transforms = false;  // sample transforms once instead of every iteration
};

// Called after every applied update with the 1-based update index and the new
// iterate; used for trace comparisons and debugging.
using IterateObserver = std::function<void(int iter, const Tensor& x)>;

struct FrameAttackResult {
    Tensor adv;             // perturbed frame, same shape as the input
    int iters = 0;          // number of updates actually applied
    bool success = false;   // attack-specific success criterion (see below)
    float final_conf = 0.0f;  // victim's target-class probability at the result
};

// Plain iterative attack on the hinge max(Z_other - Z_target, 0); success
// means F(x)_target > target_conf. Runs until success or max_iters; a zero
// gradient yields stationary updates rather than an early stop.
FrameAttackResult whitebox_attack_frame(const zoo::DetectorModel& victim, const Frame& frame,
                                        Label target, const AttackConfig& cfg,
                                        const IterateObserver& observer = {});

// Expectation-over-transforms attack: minimizes the mean hinge over sampled
// transforms (resampled every iteration unless frozen); success means
// F(t(x))_target > 0.5 for every transform sampled in that iteration.
FrameAttackResult eot_attack_frame(const zoo::DetectorModel& victim, const Frame& frame,
                                   Label target, const AttackConfig& cfg,
                                   const IterateObserver& observer = {});

struct ClipAttackResult {
    Clip adv;                     // same id/label/boxes, perturbed frames
    std::vector<int> frame_iters;
    std::vector<bool> frame_success;
    long long total_iters = 0;
    double mean_linf = 0.0;  // mean over frames of max absolute pixel change
};

// Attacks every frame toward the opposite of the clip's true label.
ClipAttackResult whitebox_attack_clip(const zoo::DetectorModel& victim, const Clip& clip,
                                      const AttackConfig& cfg);
ClipAttackResult eot_attack_clip(const zoo::DetectorModel& victim, const Clip& clip,
                                 const AttackConfig& cfg);

// --- universal perturbation --------------------------------------------------

struct UniversalConfig {
    double epsilon = 0.156;
    int iters = 900;
    int batch = 8;
    double lr = 0.001;
    double reg_c = 0.01;   // weight of the L2 size penalty on delta
    int param_side = 256;  // p is (3, param_side, param_side)
    uint64_t seed = 0;
    Label target = Label::Real;
    vision::TransformDistribution transforms;
    bool use_transforms = true;  // optimize the expectation over transforms
};

struct UniversalResult {
    Tensor p;                           // optimized parameters
    std::vector<double> loss_history;   // mean cross-entropy per iteration
    std::vector<double> reg_history;    // weighted L2 penalty per iteration
};

// Optimizes p so that delta = epsilon * tanh(p), resized to each frame,
// pushes the victim toward `target` on every training clip. Training clips
// must all carry the label opposite to the target.
UniversalResult train_universal(const zoo::DetectorModel& victim, std::span<const Clip> clips,
                                const UniversalConfig& cfg);

// epsilon * tanh(p), bilinearly resized to (h, w). |delta| < epsilon holds by
// construction.
Tensor realize_delta(const Tensor& p, double epsilon, int h, int w);

// clamp01(frame + delta) applied to every frame of the clip.
Clip apply_universal(const Clip& clip, const Tensor& p, double epsilon);

struct UniversalArtifact {
    Tensor p;
    double epsilon = 0.0;
    Label target = Label::Real;
};

void save_universal(const std::filesystem::path& dir, const std::string& name,
                    const UniversalArtifact& art);
UniversalArtifact load_universal(const std::filesystem::path& dir, const std::string& name);

}  // namespace agb::attacks
