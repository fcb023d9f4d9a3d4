#ifndef GLYPHREC_MODEL_IO_HPP
#define GLYPHREC_MODEL_IO_HPP

#include <filesystem>
#include <string>
#include <variant>

#include "glyphrec/knn.hpp"
#include "glyphrec/svm.hpp"

namespace glyphrec {

inline constexpr int kModelFormatVersion = 1;

using TrainedModel = std::variant<MulticlassSvmModel, KnnModel>;

std::string encode_model(const TrainedModel& model);
TrainedModel decode_model(const std::string& bytes);

void save_model(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

const std::vector<std::string>& model_classes(const TrainedModel& model);
double model_se_fraction(const TrainedModel& model);
OpOrder model_op_order(const TrainedModel& model);
std::string predict_label(const TrainedModel& model, const FeatureVector& x);

} // namespace glyphrec

#endif
