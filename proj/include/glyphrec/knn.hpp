#ifndef GLYPHREC_KNN_HPP
#define GLYPHREC_KNN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "glyphrec/features.hpp"
#include "glyphrec/morphology.hpp"

namespace glyphrec {

// Plain k-nearest-neighbor over min-max normalized feature vectors.
struct KnnModel {
    std::vector<std::string> classes;
    std::vector<std::int64_t> train_counts;
    std::vector<FeatureVector> vectors; // stored normalized
    std::vector<std::string> labels;    // parallel to vectors
    int k = 3;
    NormalizationStats normalization;
    double se_fraction = 0.7;
    OpOrder op_order = OpOrder::opening;
};

KnnModel build_knn(const std::vector<FeatureVector>& samples,
                   const std::vector<std::string>& labels, int k, double se_fraction,
                   OpOrder op_order = OpOrder::opening);

// Majority label among the k nearest by Euclidean distance. Distance ties
// break by training order, vote ties by smallest mean distance then class
// order.
std::string knn_classify(const KnnModel& m, const FeatureVector& x);

} // namespace glyphrec

#endif
