#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "agb/image.hpp"

namespace agb::synth {

// Geometry of a single rendered clip.
struct ClipSpec {
    int num_frames = 16;
    int frame_side = 128;
};

// Renders one clip. Real clips are a textured background plus a parametric
// face that jitters frame to frame. Fake clips render the same scene but
// replace the inner face with a version produced at quarter resolution,
// color-shifted and upsampled, blended in under a soft elliptical mask --
// the kind of resampling/blending artifact face-swap pipelines leave behind.
Clip gen_clip(Label label, const ClipSpec& spec, uint64_t seed, const std::string& id = "");

// Region a fake clip's blend mask covers, derived from the frame's face box.
// Shared so analysis code can locate the manipulated area without extra
// metadata.
Box fake_blend_box(const Box& face_box);

struct DatasetConfig {
    int frames_per_clip = 16;
    int frame_side = 128;
    // Clips per label in each split.
    int train_per_label = 150;
    int eval_per_label = 100;
    int universal_per_label = 100;
};

struct ClipRecord {
    std::string id;
    Label label = Label::Real;
    uint64_t seed = 0;
    std::vector<std::string> frame_paths;  // relative to the dataset root
    std::vector<Box> face_boxes;
};

struct Manifest {
    DatasetConfig config;
    uint64_t seed = 0;
    // Split name -> records; names: "train", "attack_eval", "universal_train".
    std::map<std::string, std::vector<ClipRecord>> splits;
    std::filesystem::path root;  // directory the manifest was loaded from
};

// Renders every clip, writes frames as PNGs plus manifest.json under out_dir.
Manifest gen_dataset(const DatasetConfig& config, uint64_t seed,
                     const std::filesystem::path& out_dir);

Manifest load_manifest(const std::filesystem::path& dataset_dir);

// Reads a clip's frames back from disk.
Clip load_clip(const Manifest& manifest, const ClipRecord& record);

const std::vector<ClipRecord>& split_records(const Manifest& manifest, const std::string& name);

std::vector<Clip> load_split(const Manifest& manifest, const std::string& name);

}  // namespace agb::synth
