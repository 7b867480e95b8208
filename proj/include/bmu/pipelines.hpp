#pragma once

#include "bmu/instance_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bmu {

inline constexpr const char* kToolVersion = "bmu 0.1.0";

enum class Verdict { Pass, Fail, NotEvaluated };

struct CheckLine {
  std::string name;
  std::string anchor;  // the identity being tested, in operator notation
  std::optional<double> value;
  double tol = 0;
  Verdict verdict = Verdict::Fail;
  std::string note;
  double wall_ms = 0;
};

struct Certificate {
  std::string instance_id;
  nlohmann::json provenance = nlohmann::json::object();
  std::string pipeline;
  std::vector<CheckLine> checks;
  std::string version = kToolVersion;
  std::string error;  // pipeline-level failure, empty when every stage ran

  bool all_pass() const;
  const CheckLine* find(const std::string& name) const;
  /// Byte-stable unless `timing` adds the per-check wall clock.
  nlohmann::json to_json(bool timing = false) const;
  std::string to_text(bool timing = false) const;
};

struct PipelineOptions {
  std::optional<double> tol;  // overrides every per-check tolerance
  double input_tol = kDefaultTol;
};

const std::vector<std::string>& pipeline_names();
bool pipeline_applies(const std::string& pipeline, const std::string& kind);

/// Throws IllFormedInput for unknown pipelines or a kind that does not match.
Certificate run_pipeline(const Instance& inst, const std::string& pipeline, const PipelineOptions& opts = {});

}  // namespace bmu
