#ifndef TASKCE_LABEL_DATA_HPP
#define TASKCE_LABEL_DATA_HPP

#include <string>
#include <string_view>
#include <vector>

#include "taskce/types.hpp"

namespace taskce {

/// Dense-coded discrete labels for one task. Codes are first-appearance
/// indices into `vocab`, so decoding code i yields vocab[i].
struct LabelSequence {
  IntVector codes;
  std::vector<std::string> vocab;

  Index size() const { return codes.size(); }
  int class_count() const { return static_cast<int>(vocab.size()); }
  const std::string& decode(int code) const { return vocab.at(static_cast<std::size_t>(code)); }

  /// Single-class sequence of length n (the trivial task).
  static LabelSequence constant(Index n);
};

/// Encode raw string labels by first appearance. Deterministic: the first
/// distinct value gets code 0, the second code 1, and so on.
LabelSequence encode_labels(const std::vector<std::string>& raw);

/// Same as encode_labels but for integer-valued raw labels; vocab entries
/// are the decimal forms of the original values.
LabelSequence encode_codes(const std::vector<int>& raw);

/// Restrict a sequence to the given row indices, keeping the vocabulary.
LabelSequence subset(const LabelSequence& seq, const std::vector<Index>& rows);

struct IngestOptions {
  bool drop_incomplete_rows = false;
};

/// Multi-task label table over a shared input index. One LabelSequence per
/// task, all of length n.
struct TaskTable {
  std::vector<std::string> names;
  std::vector<LabelSequence> tasks;

  Index rows() const { return tasks.empty() ? 0 : tasks.front().size(); }
  Index task_count() const { return static_cast<Index>(tasks.size()); }
  Index find(std::string_view name) const;  // -1 when absent
  const LabelSequence& task(std::string_view name) const;
};

/// Parse a label table from CSV text. First row holds task names, each
/// following row holds one label per task. Cells are bare tokens (no
/// quoting); surrounding whitespace is trimmed and blank lines skipped.
///
/// Errors: ragged row -> ParseError with its 1-based data row index;
/// no data rows -> EmptyInput; empty cell -> MissingLabel, unless
/// options.drop_incomplete_rows is set, in which case the whole row is
/// removed from every task so columns stay aligned.
TaskTable parse_label_table(std::string_view text, const IngestOptions& options = {});

/// Empirical joint distribution of an ordered pair of aligned label
/// sequences. Counts stay exact integers; probabilities are derived on
/// demand as counts / n.
struct JointDistribution {
  CountMatrix counts;  // |Y| x |Z|
  Index n = 0;
  std::vector<std::string> y_vocab;
  std::vector<std::string> z_vocab;

  Matrix probabilities() const;
  CountVector y_counts() const { return counts.rowwise().sum(); }
  CountVector z_counts() const { return counts.colwise().sum().transpose(); }
};

JointDistribution joint_distribution(const LabelSequence& y, const LabelSequence& z);

enum class Axis { Y, Z };

struct Marginal {
  Vector probs;
  std::vector<std::string> vocab;
};

Marginal marginal(const JointDistribution& joint, Axis axis);

}  // namespace taskce

#endif  // TASKCE_LABEL_DATA_HPP
