#pragma once

#include "bmu/generators.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace bmu {

/// Serializable instance: { kind, dims, operators, maps, meta }.
struct Instance {
  struct MapData {
    std::vector<Mat> inputs;
    std::vector<Mat> images;
  };

  std::string id;
  std::string kind;  // "mu", "drinfeld_pair" or "braided_mu"
  int dH = 1;
  int dL = 1;
  std::map<std::string, Mat> operators;
  std::map<std::string, MapData> maps;
  nlohmann::json meta = nlohmann::json::object();

  bool has(const std::string& op) const { return operators.count(op) > 0; }
  const Mat& op(const std::string& name) const;
};

/// Complex matrices as row-major arrays of [re, im] pairs.
nlohmann::json matrix_to_json(const Mat& m);
/// Throws IllFormedInput naming the JSON pointer of the offending entry.
Mat matrix_from_json(const nlohmann::json& j, const std::string& pointer);

nlohmann::json to_json(const Instance& inst);
/// Validates structure, sizes and unitarity (NotUnitary, DimensionMismatch, IllFormedInput).
Instance instance_from_json(const nlohmann::json& j, double tol = kDefaultTol);

Instance load_instance(const std::string& path, double tol = kDefaultTol);
void save_instance(const Instance& inst, const std::string& path);

Instance instance_from_group(const GroupInstance& gi, const std::string& id);
Instance instance_from_braided(const BraidedInstance& bi, const std::string& id);

/// Typed views; the antipodes fall back to the Kac-type candidates when absent.
QuantumGroupData quantum_group_of(const Instance& inst, double tol = kDefaultTol);
LinearMap antipode_of(const Instance& inst, const QuantumGroupData& qg, bool dual);
DrinfeldPair pair_of(const Instance& inst);
BraidedMU braided_of(const Instance& inst, const QuantumGroupData& qg, double tol = kDefaultTol);

}  // namespace bmu
