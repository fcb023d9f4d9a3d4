#include "glyphrec/svm.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "glyphrec/errors.hpp"

namespace glyphrec {

double kernel_eval(std::span<const double> x, std::span<const double> y,
                   const KernelParams& p) {
    if (x.size() != y.size())
        throw InvalidParameterError("kernel_eval: dimension mismatch");
    if (p.kind == KernelKind::linear) {
        double dot = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * y[i];
        return dot;
    }
    if (!(p.sigma > 0.0))
        throw InvalidParameterError("kernel_eval: rbf sigma must be > 0");
    double d2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double d = x[i] - y[i];
        d2 += d * d;
    }
    return std::exp(-d2 / (2.0 * p.sigma * p.sigma));
}

double BinarySvmModel::decision(std::span<const double> x) const {
    double f = bias;
    for (std::size_t i = 0; i < support_vectors.size(); ++i)
        f += alphas[i] * signs[i] * kernel_eval(support_vectors[i], x, kernel);
    return f;
}

namespace {

// Platt-style SMO working state over a precomputed Gram matrix.
class SmoSolver {
public:
    SmoSolver(const std::vector<std::vector<double>>& x, const std::vector<int>& y,
              const KernelParams& kernel, const SmoConfig& cfg)
        : x_(x), y_(y), kernel_(kernel), cfg_(cfg), n_(x.size()),
          alpha_(x.size(), 0.0), error_(x.size()), rng_(cfg.seed) {
        gram_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            gram_[i].resize(n_);
            for (std::size_t j = 0; j <= i; ++j) {
                double k = kernel_eval(x_[i], x_[j], kernel_);
                gram_[i][j] = k;
                gram_[j][i] = k;
            }
        }
        // With all alphas zero, f(x) = b = 0, so E_i = -y_i.
        for (std::size_t i = 0; i < n_; ++i) error_[i] = -static_cast<double>(y_[i]);
    }

    bool solve() {
        bool examine_all = true;
        std::size_t num_changed = 0;
        while (num_changed > 0 || examine_all) {
            num_changed = 0;
            if (examine_all) {
                for (std::size_t i = 0; i < n_; ++i) num_changed += examine(i);
            } else {
                for (std::size_t i = 0; i < n_; ++i)
                    if (alpha_[i] > 0.0 && alpha_[i] < cfg_.C) num_changed += examine(i);
            }
            if (updates_ >= cfg_.max_passes) return false;
            if (examine_all)
                examine_all = false;
            else if (num_changed == 0)
                examine_all = true;
        }
        return true;
    }

    BinarySvmModel extract() const {
        BinarySvmModel m;
        m.C = cfg_.C;
        m.kernel = kernel_;
        m.bias = b_;
        for (std::size_t i = 0; i < n_; ++i) {
            if (alpha_[i] > 0.0) {
                m.support_vectors.push_back(x_[i]);
                m.alphas.push_back(alpha_[i]);
                m.signs.push_back(y_[i]);
            }
        }
        return m;
    }

private:
    std::size_t examine(std::size_t i2) {
        double y2 = y_[i2];
        double a2 = alpha_[i2];
        double e2 = error_[i2];
        double r2 = e2 * y2;
        bool violates = (r2 < -cfg_.tol && a2 < cfg_.C) || (r2 > cfg_.tol && a2 > 0.0);
        if (!violates) return 0;

        // Second-choice heuristic: maximize |E1 - E2| over the non-bound set.
        std::ptrdiff_t best = -1;
        double best_gap = -1.0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (alpha_[i] > 0.0 && alpha_[i] < cfg_.C) {
                double gap = std::fabs(error_[i] - e2);
                if (gap > best_gap) {
                    best_gap = gap;
                    best = static_cast<std::ptrdiff_t>(i);
                }
            }
        }
        if (best >= 0 && take_step(static_cast<std::size_t>(best), i2)) return 1;

        // Fall back to scanning the non-bound set, then everything, from a
        // seeded random start so ties do not bias toward low indices.
        std::size_t start = random_index();
        for (std::size_t k = 0; k < n_; ++k) {
            std::size_t i1 = (start + k) % n_;
            if (alpha_[i1] > 0.0 && alpha_[i1] < cfg_.C && take_step(i1, i2)) return 1;
        }
        start = random_index();
        for (std::size_t k = 0; k < n_; ++k) {
            std::size_t i1 = (start + k) % n_;
            if (take_step(i1, i2)) return 1;
        }
        return 0;
    }

    bool take_step(std::size_t i1, std::size_t i2) {
        if (i1 == i2) return false;
        double a1 = alpha_[i1], a2 = alpha_[i2];
        double y1 = y_[i1], y2 = y_[i2];
        double e1 = error_[i1], e2 = error_[i2];
        double s = y1 * y2;

        double lo, hi;
        if (s < 0.0) {
            lo = std::max(0.0, a2 - a1);
            hi = std::min(cfg_.C, cfg_.C + a2 - a1);
        } else {
            lo = std::max(0.0, a1 + a2 - cfg_.C);
            hi = std::min(cfg_.C, a1 + a2);
        }
        if (lo >= hi) return false;

        double k11 = gram_[i1][i1], k12 = gram_[i1][i2], k22 = gram_[i2][i2];
        double eta = k11 + k22 - 2.0 * k12;
        double a2_new;
        if (eta > 0.0) {
            a2_new = a2 + y2 * (e1 - e2) / eta;
            a2_new = std::clamp(a2_new, lo, hi);
        } else {
            // Degenerate curvature (duplicate points): evaluate the dual
            // objective at both clip ends and move to the better one.
            double f1 = y1 * e1 - a1 * k11 - s * a2 * k12;
            double f2 = y2 * e2 - a2 * k22 - s * a1 * k12;
            double l1 = a1 + s * (a2 - lo);
            double h1 = a1 + s * (a2 - hi);
            double obj_lo = l1 * f1 + lo * f2 + 0.5 * l1 * l1 * k11 +
                            0.5 * lo * lo * k22 + s * lo * l1 * k12;
            double obj_hi = h1 * f1 + hi * f2 + 0.5 * h1 * h1 * k11 +
                            0.5 * hi * hi * k22 + s * hi * h1 * k12;
            if (obj_lo < obj_hi - 1e-12)
                a2_new = lo;
            else if (obj_lo > obj_hi + 1e-12)
                a2_new = hi;
            else
                return false;
        }
        if (std::fabs(a2_new - a2) < 1e-12 * (a2_new + a2 + 1e-12)) return false;

        double a1_new = a1 + s * (a2 - a2_new);
        // Guard the equality constraint against rounding drift at the box.
        if (a1_new < 0.0) a1_new = 0.0;
        if (a1_new > cfg_.C) a1_new = cfg_.C;

        double d1 = y1 * (a1_new - a1);
        double d2 = y2 * (a2_new - a2);
        double b1 = b_ - e1 - d1 * k11 - d2 * k12;
        double b2 = b_ - e2 - d1 * k12 - d2 * k22;
        double b_new;
        if (a1_new > 0.0 && a1_new < cfg_.C)
            b_new = b1;
        else if (a2_new > 0.0 && a2_new < cfg_.C)
            b_new = b2;
        else
            b_new = 0.5 * (b1 + b2);

        double db = b_new - b_;
        for (std::size_t i = 0; i < n_; ++i)
            error_[i] += d1 * gram_[i1][i] + d2 * gram_[i2][i] + db;

        alpha_[i1] = a1_new;
        alpha_[i2] = a2_new;
        b_ = b_new;
        ++updates_;
        if (cfg_.on_update) cfg_.on_update(std::span<const double>(alpha_));
        return true;
    }

    std::size_t random_index() {
        // mt19937_64 output reduced by rejection keeps runs reproducible
        // across standard libraries.
        const std::uint64_t bound = n_;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = rng_();
        } while (v >= limit);
        return static_cast<std::size_t>(v % bound);
    }

    const std::vector<std::vector<double>>& x_;
    const std::vector<int>& y_;
    KernelParams kernel_;
    SmoConfig cfg_;
    std::size_t n_;
    std::vector<double> alpha_;
    std::vector<double> error_; // E_i = f(x_i) - y_i
    std::vector<std::vector<double>> gram_;
    double b_ = 0.0;
    std::int64_t updates_ = 0;
    std::mt19937_64 rng_;
};

} // namespace

BinarySvmModel train_binary_svm(const std::vector<std::vector<double>>& samples,
                                const std::vector<int>& labels,
                                const KernelParams& kernel, const SmoConfig& cfg) {
    if (samples.size() != labels.size() || samples.empty())
        throw InvalidParameterError("train_binary_svm: bad sample/label sizes");
    if (!(cfg.C > 0.0) || !(cfg.tol > 0.0))
        throw InvalidParameterError("train_binary_svm: C and tol must be > 0");
    bool has_pos = false, has_neg = false;
    for (int y : labels) {
        if (y == 1)
            has_pos = true;
        else if (y == -1)
            has_neg = true;
        else
            throw InvalidParameterError("train_binary_svm: labels must be +1/-1");
    }
    if (!has_pos || !has_neg)
        throw InvalidParameterError("train_binary_svm: need samples of both signs");
    const std::size_t dim = samples.front().size();
    for (const auto& s : samples)
        if (s.size() != dim)
            throw InvalidParameterError("train_binary_svm: ragged sample dimensions");

    SmoSolver solver(samples, labels, kernel, cfg);
    bool converged = solver.solve();
    BinarySvmModel m = solver.extract();
    m.converged = converged;
    return m;
}

MulticlassSvmModel train_multiclass(const std::vector<FeatureVector>& samples,
                                    const std::vector<std::string>& labels,
                                    const KernelParams& kernel, const SmoConfig& cfg,
                                    double se_fraction, OpOrder op_order) {
    if (samples.size() != labels.size() || samples.empty())
        throw InvalidParameterError("train_multiclass: bad sample/label sizes");

    MulticlassSvmModel model;
    model.kernel = kernel;
    model.C = cfg.C;
    model.se_fraction = se_fraction;
    model.op_order = op_order;

    // Class order: first appearance in the training sequence.
    for (const std::string& label : labels) {
        if (std::find(model.classes.begin(), model.classes.end(), label) ==
            model.classes.end())
            model.classes.push_back(label);
    }
    if (model.classes.size() < 2)
        throw InvalidParameterError("train_multiclass: need at least 2 classes");

    model.normalization = fit_normalization(samples);
    std::vector<std::vector<double>> normalized(samples.size());
    std::vector<int> class_of(samples.size());
    model.train_counts.assign(model.classes.size(), 0);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        auto a = apply_normalization(samples[i], model.normalization).as_array();
        normalized[i].assign(a.begin(), a.end());
        auto it = std::find(model.classes.begin(), model.classes.end(), labels[i]);
        class_of[i] = static_cast<int>(it - model.classes.begin());
        ++model.train_counts[class_of[i]];
    }

    const int k = static_cast<int>(model.classes.size());
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            std::vector<std::vector<double>> x;
            std::vector<int> y;
            for (std::size_t i = 0; i < normalized.size(); ++i) {
                if (class_of[i] == a) {
                    x.push_back(normalized[i]);
                    y.push_back(+1);
                } else if (class_of[i] == b) {
                    x.push_back(normalized[i]);
                    y.push_back(-1);
                }
            }
            try {
                PairwiseModel pm;
                pm.class_a = a;
                pm.class_b = b;
                pm.svm = train_binary_svm(x, y, kernel, cfg);
                model.pairs.push_back(std::move(pm));
            } catch (const Error& e) {
                throw TrainingError("pair (" + model.classes[a] + ", " +
                                    model.classes[b] + "): " + e.what());
            }
        }
    }
    return model;
}

std::string predict(const MulticlassSvmModel& m, const FeatureVector& x) {
    auto a = apply_normalization(x, m.normalization).as_array();
    std::vector<double> v(a.begin(), a.end());

    std::vector<int> votes(m.classes.size(), 0);
    std::vector<double> strength(m.classes.size(), 0.0);
    for (const PairwiseModel& pm : m.pairs) {
        double d = pm.svm.decision(v);
        int winner = d > 0.0 ? pm.class_a : pm.class_b;
        ++votes[winner];
        strength[winner] += std::fabs(d);
    }

    int best = 0;
    for (std::size_t c = 1; c < m.classes.size(); ++c) {
        if (votes[c] > votes[best] ||
            (votes[c] == votes[best] && strength[c] > strength[best]))
            best = static_cast<int>(c);
    }
    return m.classes[best];
}

} // namespace glyphrec
