#pragma once

#include "bmu/pipelines.hpp"

#include <map>
#include <string>
#include <vector>

namespace bmu {

/// Integer parameters of a generator family, e.g. {"n": 3} or {"k": 3, "g": 2, "a": -1}.
using GenParams = std::map<std::string, int>;

struct FamilyInfo {
  std::string name;
  std::string summary;
  GenParams defaults;
  bool negative_control = false;  // emitted without passing its pipelines
};

const std::vector<FamilyInfo>& generator_families();

/// Builds a named instance; meta records the family and the full parameter set.
/// Throws IllFormedInput for unknown families or bad parameters.
Instance generate_instance(const std::string& family, const GenParams& params = {});

/// Pipelines that apply to the instance's kind, in fixed order.
std::vector<std::string> applicable_pipelines(const Instance& inst);

/// The fixed corpus: group instances, duals, braided instances and negative controls.
std::vector<Instance> standard_corpus();

}  // namespace bmu
