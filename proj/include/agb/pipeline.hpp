#pragma once

// End-to-end experiment orchestration shared by the CLI and the acceptance
// harness: dataset generation, zoo training, the white-box / EOT / universal
// attack sweeps, saliency rendering, and report generation.
//
// All experiment inputs are the PNG-quantized clips on disk (loaded on
// demand), so reruns see bit-identical data regardless of whether the run
// generated or reused the dataset. Adversarial outputs are quantized the same
// way before any test-model classification; distortion (L-inf) is always
// measured on the float attack outputs.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "agb/config.hpp"
#include "agb/detector.hpp"
#include "agb/eval.hpp"
#include "agb/synth.hpp"

namespace agb::pipeline {

struct Paths {
    std::filesystem::path root;
    std::filesystem::path data;
    std::filesystem::path models;
    std::filesystem::path attacks;
    std::filesystem::path universal;
    std::filesystem::path reports;
    std::filesystem::path saliency;
    std::filesystem::path samples;
};

Paths layout(const std::filesystem::path& out_root);

// Constraint bookkeeping over float attack outputs.
struct ConstraintTally {
    long long frames = 0;
    long long range_violations = 0;  // pixels outside [0,1]
    long long linf_violations = 0;   // frames with ||adv-orig||_inf > eps + 1e-6
    double max_linf = 0.0;
};

struct PhaseTimings {
    double gen_data = 0, train = 0, whitebox = 0, eot = 0, universal = 0, sweep = 0,
           saliency = 0, report = 0, total = 0;
};

struct RunResult {
    std::vector<eval::ClipOutcome> rows;
    PhaseTimings timings;
    std::map<std::string, ConstraintTally> constraints;  // keyed by attack kind
    std::vector<std::string> zoo_ids;
    std::map<std::string, double> eval_auc;  // per detector, full eval split
    Paths paths;
};

// --- CLI subcommand entry points ----------------------------------------------

void run_gen_data(const config::ExperimentConfig& cfg);
void run_train(const config::ExperimentConfig& cfg);

struct AttackRunOptions {
    std::string victim;            // empty = every zoo member
    std::string kind = "whitebox"; // "whitebox" | "eot"
    int clips_per_label = -1;      // -1: whitebox = whole eval split, eot = config value
};
// Runs attacks and persists adversarial frame PNGs plus per-clip result JSON.
void run_attack(const config::ExperimentConfig& cfg, const AttackRunOptions& opt);

// Trains and saves the universal perturbation at the configured epsilon.
void run_universal(const config::ExperimentConfig& cfg);

// Builds outcome rows from previously persisted attack/universal artifacts.
void run_eval(const config::ExperimentConfig& cfg);

// Renders saliency overlays for a sample of fake eval clips.
void run_saliency(const config::ExperimentConfig& cfg);

// Renders CSV/markdown reports from reports/outcomes.jsonl.
void run_report(const config::ExperimentConfig& cfg);

// The full experiment, in-memory (adversarial clips are not persisted except
// for `sample_clips` examples per victim). With `reproduce` set, re-rendered
// CSV hashes must match the checksums recorded by a previous run.
RunResult run_paper(const config::ExperimentConfig& cfg, bool reproduce = false);

}  // namespace agb::pipeline
