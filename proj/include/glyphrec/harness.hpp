#ifndef GLYPHREC_HARNESS_HPP
#define GLYPHREC_HARNESS_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "glyphrec/corpus.hpp"
#include "glyphrec/features.hpp"
#include "glyphrec/model_io.hpp"
#include "glyphrec/report.hpp"

namespace glyphrec {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitTraining = 3;

struct FeaturesOptions {
    std::filesystem::path manifest;
    double se_fraction = 0.7;
    std::string op_order = "opening";
    std::filesystem::path out;
    bool lenient = false;
};

struct TrainOptions {
    std::filesystem::path manifest;
    std::string classifier = "svm";
    double se_fraction = 0.7;
    double sigma = 0.6;
    double C = 10.0;
    int k = 3;
    std::uint64_t seed = 0;
    double split_fraction = 0.5;
    std::string op_order = "opening";
    std::filesystem::path model_out;
    std::optional<std::filesystem::path> report_out;
    bool lenient = false;
};

struct EvalOptions {
    std::filesystem::path model;
    std::filesystem::path manifest;
    std::optional<std::filesystem::path> report_out;
    bool lenient = false;
};

struct SweepOptions {
    std::filesystem::path manifest;
    std::vector<double> fractions = {0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
    std::string classifier = "svm";
    double sigma = 0.6;
    double C = 10.0;
    int k = 3;
    std::uint64_t seed = 0;
    double split_fraction = 0.5;
    std::string op_order = "opening";
    std::filesystem::path out; // plot-ready two-column data
    std::optional<std::filesystem::path> report_out;
    bool lenient = false;
};

int run_features(const FeaturesOptions& opts, std::ostream& out, std::ostream& err);
int run_train(const TrainOptions& opts, std::ostream& out, std::ostream& err);
int run_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err);
int run_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);

// Shared plumbing, also used by tests.
std::string feature_csv(const std::vector<Sample>& samples,
                        const std::vector<FeatureVector>& features);
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);
OpOrder op_order_from_string(const std::string& name);

} // namespace glyphrec

#endif
