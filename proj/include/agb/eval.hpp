#pragma once

// Evaluation harness: ranking AUC, attack success rate, distortion metrics,
// persisted per-clip outcome rows, and the CSV/markdown report renderers.
// Reports are rendered purely from persisted rows so that an independent
// reader of the JSONL can reproduce every number exactly.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agb/detector.hpp"
#include "agb/image.hpp"

namespace agb::eval {

// Mann-Whitney rank AUC of `scores` against binary `labels` (1 = positive).
// Ties contribute 0.5. Throws if either class is absent.
double rank_auc(std::span<const double> scores, std::span<const int> labels);

struct SuccessRate {
    int counted = 0;  // originals the test model classified correctly
    int flipped = 0;  // counted clips whose adversarial version flips the label
    double percent() const { return counted == 0 ? 0.0 : 100.0 * flipped / counted; }
};

// Classifies aligned original/adversarial clip pairs with `test` and counts
// label flips among correctly-classified originals. Pairs must align by
// index, id, frame count, and frame shape.
SuccessRate success_rate(const zoo::DetectorModel& test, std::span<const Clip> originals,
                         std::span<const Clip> adversarials);

// Mean over frames of the max absolute per-pixel difference.
double clip_mean_linf(const Clip& orig, const Clip& adv);

// One persisted row per (attack, victim, test, clip).
struct ClipOutcome {
    std::string attack;  // "whitebox" | "eot" | "universal"
    double epsilon = 0.0;
    std::string victim_id;
    std::string test_id;
    std::string clip_id;
    std::string clip_label;  // "real" | "fake"
    std::string orig_pred;   // test model's label on the original clip
    std::string adv_pred;    // test model's label on the adversarial clip
    bool attacked = false;   // victim classified the original correctly, so an attack ran
    bool counted = false;    // orig_pred == clip_label
    bool flipped = false;    // counted && adv_pred != clip_label
    double mean_linf = 0.0;  // per-clip distortion of the float attack output
    long long iters = 0;     // attack iterations summed across frames
};

void write_outcomes_jsonl(const std::filesystem::path& path, std::span<const ClipOutcome> rows);
std::vector<ClipOutcome> read_outcomes_jsonl(const std::filesystem::path& path);

// Aggregates over rows matching (attack, victim, test, epsilon).
SuccessRate sr_cell(std::span<const ClipOutcome> rows, std::string_view attack,
                    std::string_view victim, std::string_view test, double epsilon);

// Mean per-clip distortion for a victim: averaged over attacked rows with
// test == victim so each clip contributes once.
double victim_mean_linf(std::span<const ClipOutcome> rows, std::string_view attack,
                        std::string_view victim, double epsilon);

// victim x test success-rate matrix with a trailing per-victim mean-L-inf column.
std::string render_matrix_csv(std::span<const ClipOutcome> rows, std::string_view attack,
                              std::span<const std::string> victims,
                              std::span<const std::string> tests, double epsilon);
std::string render_matrix_markdown(std::span<const ClipOutcome> rows, std::string_view attack,
                                   std::span<const std::string> victims,
                                   std::span<const std::string> tests, double epsilon);

// Per-epsilon success rates of one (attack, victim, test) cell.
std::string render_sweep_csv(std::span<const ClipOutcome> rows, std::string_view attack,
                             std::string_view victim, std::string_view test,
                             std::span<const std::pair<std::string, double>> epsilons);

}  // namespace agb::eval
