#ifndef GLYPHREC_REPORT_HPP
#define GLYPHREC_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace glyphrec {

// Configuration echoed into every report so runs are attributable.
struct RunConfig {
    std::string classifier = "svm"; // "svm" or "knn"
    double se_fraction = 0.7;
    double sigma = 0.6;
    double C = 10.0;
    int k = 3;
    std::uint64_t seed = 0;
    double split_fraction = 0.5;
    std::string op_order = "opening";
};

struct ClassResult {
    std::string label;
    std::int64_t trained = 0;
    std::int64_t tested = 0;
    double accuracy_percent = 0.0;
};

struct EvalReport {
    std::vector<ClassResult> per_class;
    double overall_percent = 0.0;
    // confusion[i][j] counts samples of true class i predicted as class j.
    std::vector<std::vector<std::int64_t>> confusion;
    RunConfig config;
};

// Builds the report from parallel true/predicted label sequences and checks
// the internal consistency rules (row sums, trace) before returning.
EvalReport build_eval_report(const std::vector<std::string>& classes,
                             const std::vector<std::int64_t>& trained_counts,
                             const std::vector<std::string>& true_labels,
                             const std::vector<std::string>& predicted_labels,
                             const RunConfig& config);

std::string render_eval_table(const EvalReport& report);
std::string encode_eval_report(const EvalReport& report); // structured text (JSON)

struct SweepEntry {
    double fraction = 0.0;
    double accuracy_percent = 0.0;
    bool ok = false;
    std::string error;
};

struct SweepReport {
    std::vector<SweepEntry> entries;
    double best_fraction = 0.0; // argmax accuracy, ties to the smaller fraction
    RunConfig config;
};

SweepReport build_sweep_report(std::vector<SweepEntry> entries, const RunConfig& config);

std::string render_sweep_table(const SweepReport& report);
// Two-column plot-ready data: fraction <TAB> accuracy, one row per entry.
std::string render_sweep_data(const SweepReport& report);
std::string encode_sweep_report(const SweepReport& report);

} // namespace glyphrec

#endif
