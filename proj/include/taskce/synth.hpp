#ifndef TASKCE_SYNTH_HPP
#define TASKCE_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "taskce/label_data.hpp"
#include "taskce/softmax.hpp"
#include "taskce/types.hpp"

namespace taskce {

enum class ToyCaseId { A, B, C, D, E };

ToyCaseId parse_toy_case_id(char c);
char toy_case_letter(ToyCaseId id);

/// A (target, source) label pair with an analytically known conditional
/// entropy. Constructions (n must be a multiple of 16):
///   a, b: constant source, target uniform over 16 classes -> 4 ln 2
///         (a lays classes out in blocks, b interleaves them)
///   c:    balanced binary source, target identical       -> 0
///   d:    balanced binary source, each source class split
///         evenly over two binary target values            -> ln 2
///   e:    balanced binary source, each source class split
///         evenly over two of four target values           -> ln 2
struct ToyCase {
  ToyCaseId id;
  Index n;
  LabelSequence target;
  LabelSequence source;
  Scalar expected_ce;
};

ToyCase toy_case(ToyCaseId id, Index n);

/// Configuration for a synthetic multi-target task family over shared
/// Gaussian-cluster inputs. Target j is a deterministic function of the
/// source class, with each label independently resampled uniformly with
/// probability noise_levels[j].
struct SynthFamilyConfig {
  Index n = 400;
  Index d = 6;
  int source_classes = 4;
  int targets = 8;
  std::vector<Scalar> noise_levels;  // size == targets; values in [0, 1]
  std::uint64_t seed = 0;
  Scalar cluster_radius = 4.0;
  Scalar feature_noise = 1.0;

  void validate() const;
  /// Fill noise_levels with an even ramp over [0, 0.9] when unset.
  void default_noise_ramp();
};

struct FamilyData {
  Dataset data;
  LabelSequence source;
  std::vector<LabelSequence> targets;
  std::vector<std::string> target_names;
  std::string source_name = "source";
};

FamilyData random_family(const SynthFamilyConfig& cfg);

}  // namespace taskce

#endif  // TASKCE_SYNTH_HPP
