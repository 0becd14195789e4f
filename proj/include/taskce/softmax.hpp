#ifndef TASKCE_SOFTMAX_HPP
#define TASKCE_SOFTMAX_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "taskce/label_data.hpp"
#include "taskce/types.hpp"

namespace taskce {

/// Feature matrix: one row per input, aligned with the label sequences of
/// a task table. All entries must be finite.
struct Dataset {
  Matrix features;

  Index rows() const { return features.rows(); }
  Index dim() const { return features.cols(); }
};

Dataset make_dataset(Matrix features);
Dataset subset(const Dataset& data, const std::vector<Index>& rows);

/// Linear representation r = map * x mapping inputs to embed_dim space.
struct Representation {
  Matrix map;  // embed_dim x input_dim

  Index embed_dim() const { return map.rows(); }
  /// Apply to a batch: returns rows() x embed_dim.
  Matrix apply(const Matrix& features) const { return features * map.transpose(); }
};

/// Affine softmax classifier over representations.
struct SoftmaxHead {
  Matrix weights;  // classes x embed_dim
  Vector bias;     // classes

  int classes() const { return static_cast<int>(weights.rows()); }
  /// Log-softmax outputs for a batch of representations, stabilized with
  /// the log-sum-exp shift (safe for logits up to ~1e300).
  Matrix log_probabilities(const Matrix& reps) const;
  Matrix probabilities(const Matrix& reps) const;
};

/// Classifier built from a source softmax head and a conversion matrix of
/// empirical conditionals: output(y) = sum_z P(y|z) * source(z).
struct ExpectationHead {
  Matrix conversion;  // target classes x source classes, columns sum to 1
  SoftmaxHead source;

  int classes() const { return static_cast<int>(conversion.rows()); }
  Matrix probabilities(const Matrix& reps) const;
};

using Head = std::variant<SoftmaxHead, ExpectationHead>;

int head_classes(const Head& head);
Matrix head_probabilities(const Head& head, const Matrix& reps);
/// Per-sample log probability of the observed label.
Vector head_label_log_probs(const Head& head, const Matrix& reps, const IntVector& labels);

struct TrainConfig {
  Scalar learning_rate = 1.0;
  int max_iters = 500;
  Scalar grad_tol = 1e-7;  // on the max-norm of the full gradient
  std::uint64_t seed = 0;  // initialization only
};

struct TrainResult {
  Representation rep;
  SoftmaxHead head;
  Scalar log_likelihood = 0;  // mean log p of the training labels, <= 0
  bool converged = false;     // gradient tolerance reached (vs. iteration cap)
  int iterations = 0;
  std::vector<Scalar> loss_trace;  // loss before each accepted step, then final
};

/// Jointly fit the linear representation and softmax head by full-batch
/// gradient descent with step halving whenever a step would increase the
/// loss. Deterministic under cfg.seed: weights start uniform in
/// [-0.01, 0.01], biases at zero.
TrainResult train_source(const Dataset& data, const LabelSequence& labels,
                         Index embed_dim, const TrainConfig& cfg);

struct HeadTrainResult {
  SoftmaxHead head;
  Scalar log_likelihood = 0;
  bool converged = false;
  int iterations = 0;
  std::vector<Scalar> loss_trace;
};

/// Fit a fresh softmax head on a frozen representation (convex).
HeadTrainResult train_target_head(const Representation& rep, const Dataset& data,
                                  const LabelSequence& labels, const TrainConfig& cfg);

/// Build the expectation classifier for a target task from the source head
/// and the empirical joint of (target, source) labels. Throws ZeroMarginal
/// if some source class has no observations (its conditional is undefined),
/// and AlignmentError if the head's class count does not match the joint.
ExpectationHead construct_kbar(const SoftmaxHead& source_head, const JointDistribution& joint);

struct HeadSelection {
  Head head;
  Scalar log_likelihood = 0;
  bool chose_expectation = false;
};

/// Pick whichever candidate scores the higher training log-likelihood on
/// the target labels; exact ties go to the expectation head.
HeadSelection select_target_head(const Head& trained, const ExpectationHead& expectation,
                                 const Representation& rep, const Dataset& data,
                                 const LabelSequence& labels);

/// Mean log probability of the labels under the model, in nats (<= 0).
Scalar log_likelihood(const Representation& rep, const Head& head, const Dataset& data,
                      const LabelSequence& labels);

/// Fraction of argmax predictions matching the labels; argmax ties resolve
/// to the lowest class code.
Scalar accuracy(const Representation& rep, const Head& head, const Dataset& data,
                const LabelSequence& labels);

}  // namespace taskce

#endif  // TASKCE_SOFTMAX_HPP
