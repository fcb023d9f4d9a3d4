#ifndef GLYPHREC_SVM_HPP
#define GLYPHREC_SVM_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "glyphrec/features.hpp"
#include "glyphrec/morphology.hpp"

namespace glyphrec {

enum class KernelKind { rbf, linear };

struct KernelParams {
    KernelKind kind = KernelKind::rbf;
    double sigma = 0.6; // RBF width, ignored by the linear kernel
};

double kernel_eval(std::span<const double> x, std::span<const double> y,
                   const KernelParams& p);

struct SmoConfig {
    double C = 10.0;
    double tol = 1e-3;
    // Budget of successful multiplier-pair updates before giving up.
    std::int64_t max_passes = 100000;
    std::uint64_t seed = 0;
    // Test hook, called after every pair update with the full alpha vector.
    std::function<void(std::span<const double>)> on_update;
};

// Soft-margin binary SVM in dual form. Only support vectors are stored.
struct BinarySvmModel {
    std::vector<std::vector<double>> support_vectors;
    std::vector<double> alphas;  // in (0, C]
    std::vector<int> signs;      // +1 / -1 per support vector
    double bias = 0.0;
    double C = 10.0;
    KernelParams kernel;
    bool converged = true;

    double decision(std::span<const double> x) const;
};

// Sequential minimal optimization. labels must contain both +1 and -1.
BinarySvmModel train_binary_svm(const std::vector<std::vector<double>>& samples,
                                const std::vector<int>& labels,
                                const KernelParams& kernel, const SmoConfig& cfg);

struct PairwiseModel {
    int class_a = 0; // index into MulticlassSvmModel::classes, votes on decision > 0
    int class_b = 0; // votes otherwise
    BinarySvmModel svm;
};

// One-vs-one ensemble over min-max normalized feature vectors.
struct MulticlassSvmModel {
    std::vector<std::string> classes;
    std::vector<std::int64_t> train_counts; // per class, same order
    std::vector<PairwiseModel> pairs;
    NormalizationStats normalization;
    double se_fraction = 0.7;
    OpOrder op_order = OpOrder::opening;
    KernelParams kernel;
    double C = 10.0;
};

MulticlassSvmModel train_multiclass(const std::vector<FeatureVector>& samples,
                                    const std::vector<std::string>& labels,
                                    const KernelParams& kernel, const SmoConfig& cfg,
                                    double se_fraction,
                                    OpOrder op_order = OpOrder::opening);

// Normalizes x with the model's stats, runs every pairwise vote, returns the
// majority class. Vote ties break by largest summed |decision|, then by
// class order.
std::string predict(const MulticlassSvmModel& m, const FeatureVector& x);

} // namespace glyphrec

#endif
