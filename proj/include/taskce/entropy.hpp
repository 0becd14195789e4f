#ifndef TASKCE_ENTROPY_HPP
#define TASKCE_ENTROPY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "taskce/label_data.hpp"
#include "taskce/types.hpp"

namespace taskce {

/// Conditional entropy H(target | source) in nats, computed by two passes
/// over the aligned sequences: one to build the joint counts, one to
/// average -log of the per-sample conditional probability.
Scalar conditional_entropy(const LabelSequence& target, const LabelSequence& source);

/// Same quantity evaluated directly on the joint distribution,
/// -sum_{y,z} P(y,z) log(P(y,z)/P(z)), with the 0 log 0 = 0 convention
/// for unobserved cells. Kept as an independent algebraic route; the two
/// evaluations agree to within summation error.
Scalar conditional_entropy_direct(const JointDistribution& joint);

/// Marginal label entropy of the task, equal to the conditional entropy
/// given the trivial (constant) task. Upper-bounds the optimal training
/// loss of any classifier for the task.
Scalar hardness(const LabelSequence& task);

/// All ordered-pair conditional entropies over a task table.
/// values(t, s) = H(task t | task s); the diagonal is zero.
struct CEMatrix {
  std::vector<std::string> task_names;
  Matrix values;
};

CEMatrix ce_matrix(const TaskTable& table);

struct SourceRank {
  std::string source;
  Scalar ce;
};

/// Sources ordered by ascending H(target | source); ties broken by source
/// name; the target itself is excluded. Note: this ranking uses the CE
/// term only, which orders transfers exactly when source optimal
/// likelihoods are comparable (see README).
std::vector<SourceRank> rank_sources(const CEMatrix& matrix, std::string_view target);

struct HardnessEntry {
  std::string task;
  Scalar hardness;
  int classes;
};

/// Per-task hardness in nats, sorted ascending, ties broken by task name.
struct HardnessReport {
  std::vector<HardnessEntry> entries;
};

HardnessReport hardness_report(const TaskTable& table);

}  // namespace taskce

#endif  // TASKCE_ENTROPY_HPP
