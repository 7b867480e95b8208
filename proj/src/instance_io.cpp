#include "bmu/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace bmu {

using nlohmann::json;

namespace {

int positive_int(const json& j, const std::string& pointer) {
  if (!j.is_number_integer() || j.get<long>() < 1) throw IllFormedInput(pointer + ": expected a positive integer");
  return j.get<int>();
}

void require_size(const Mat& m, int n, const std::string& pointer) {
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream os;
    os << pointer << ": expected a " << n << "x" << n << " matrix, got " << m.rows() << "x" << m.cols();
    throw DimensionMismatch(os.str());
  }
}

void require_unitary(const Mat& m, double tol, const std::string& pointer) {
  const double r = unitarity_residual(m);
  if (r > tol) {
    std::ostringstream os;
    os << pointer << ": operator is not unitary (residual " << r << ")";
    throw NotUnitary(os.str());
  }
}

}  // namespace

const Mat& Instance::op(const std::string& name) const {
  auto it = operators.find(name);
  if (it == operators.end()) throw IllFormedInput("/operators/" + name + ": missing operator");
  return it->second;
}

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& j, const std::string& pointer) {
  if (!j.is_array() || j.empty()) throw IllFormedInput(pointer + ": expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) throw IllFormedInput(pointer + "/0: expected an array");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Mat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[r];
    const std::string rp = pointer + "/" + std::to_string(r);
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw IllFormedInput(rp + ": ragged row");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& z = row[c];
      const std::string cp = rp + "/" + std::to_string(c);
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw IllFormedInput(cp + ": expected [re, im]");
      m(r, c) = cplx(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

json to_json(const Instance& inst) {
  json j;
  j["id"] = inst.id;
  j["kind"] = inst.kind;
  j["dims"] = {{"H", inst.dH}, {"L", inst.dL}};
  json ops = json::object();
  for (const auto& [name, m] : inst.operators) ops[name] = matrix_to_json(m);
  j["operators"] = ops;
  json maps = json::object();
  for (const auto& [name, md] : inst.maps) {
    json in = json::array(), out = json::array();
    for (const Mat& m : md.inputs) in.push_back(matrix_to_json(m));
    for (const Mat& m : md.images) out.push_back(matrix_to_json(m));
    maps[name] = {{"inputs", in}, {"images", out}};
  }
  j["maps"] = maps;
  j["meta"] = inst.meta;
  return j;
}

Instance instance_from_json(const json& j, double tol) {
  if (!j.is_object()) throw IllFormedInput("/: expected an object");
  Instance inst;
  if (!j.contains("kind") || !j["kind"].is_string()) throw IllFormedInput("/kind: missing or not a string");
  inst.kind = j["kind"].get<std::string>();
  if (inst.kind != "mu" && inst.kind != "drinfeld_pair" && inst.kind != "braided_mu")
    throw IllFormedInput("/kind: must be mu, drinfeld_pair or braided_mu");
  inst.id = j.value("id", std::string("unnamed"));
  if (!j.contains("dims") || !j["dims"].is_object()) throw IllFormedInput("/dims: missing");
  const json& dims = j["dims"];
  if (!dims.contains("H")) throw IllFormedInput("/dims/H: missing");
  inst.dH = positive_int(dims["H"], "/dims/H");
  inst.dL = dims.contains("L") ? positive_int(dims["L"], "/dims/L") : 1;
  if (!j.contains("operators") || !j["operators"].is_object()) throw IllFormedInput("/operators: missing");
  for (const auto& [name, m] : j["operators"].items())
    inst.operators[name] = matrix_from_json(m, "/operators/" + name);
  if (j.contains("maps")) {
    if (!j["maps"].is_object()) throw IllFormedInput("/maps: expected an object");
    for (const auto& [name, md] : j["maps"].items()) {
      const std::string p = "/maps/" + name;
      if (!md.is_object() || !md.contains("inputs") || !md.contains("images"))
        throw IllFormedInput(p + ": expected inputs and images");
      Instance::MapData data;
      for (std::size_t k = 0; k < md["inputs"].size(); ++k)
        data.inputs.push_back(matrix_from_json(md["inputs"][k], p + "/inputs/" + std::to_string(k)));
      for (std::size_t k = 0; k < md["images"].size(); ++k)
        data.images.push_back(matrix_from_json(md["images"][k], p + "/images/" + std::to_string(k)));
      if (data.inputs.size() != data.images.size() || data.inputs.empty())
        throw IllFormedInput(p + ": inputs and images must be non-empty and of equal length");
      for (std::size_t k = 0; k < data.inputs.size(); ++k) {
        require_size(data.inputs[k], inst.dH, p + "/inputs/" + std::to_string(k));
        require_size(data.images[k], inst.dH, p + "/images/" + std::to_string(k));
      }
      inst.maps[name] = std::move(data);
    }
  }
  if (j.contains("meta")) inst.meta = j["meta"];

  const int d = inst.dH, n = inst.dL;
  require_size(inst.op("W"), d * d, "/operators/W");
  require_unitary(inst.op("W"), tol, "/operators/W");
  if (inst.has("Q")) require_size(inst.op("Q"), d, "/operators/Q");
  if (inst.kind != "mu") {
    for (const char* name : {"U", "V"}) {
      const std::string p = std::string("/operators/") + name;
      require_size(inst.op(name), n * d, p);
      require_unitary(inst.op(name), tol, p);
    }
  }
  if (inst.kind == "braided_mu") {
    require_size(inst.op("F"), n * n, "/operators/F");
    require_unitary(inst.op("F"), tol, "/operators/F");
    if (inst.has("Qprime")) require_size(inst.op("Qprime"), n, "/operators/Qprime");
  }
  return inst;
}

Instance load_instance(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) throw IllFormedInput(path + ": cannot open");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw IllFormedInput(path + ": " + e.what());
  }
  return instance_from_json(j, tol);
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IllFormedInput(path + ": cannot write");
  out << to_json(inst).dump(1) << "\n";
}

Instance instance_from_group(const GroupInstance& gi, const std::string& id) {
  Instance inst;
  inst.id = id;
  inst.kind = "mu";
  inst.dH = gi.qg.d();
  inst.operators["W"] = gi.qg.W();
  inst.operators["Q"] = gi.qg.Q;
  auto map_data = [](const LinearMap& m) {
    Instance::MapData d;
    d.inputs = m.domain.basis();
    d.images = m.images;
    return d;
  };
  inst.maps["R"] = map_data(gi.R);
  inst.maps["Rhat"] = map_data(gi.Rhat);
  inst.meta = {{"generator", "group_mu"}, {"group", gi.group.name}, {"order", gi.group.n}};
  return inst;
}

Instance instance_from_braided(const BraidedInstance& bi, const std::string& id) {
  Instance inst = instance_from_group(bi.base, id);
  inst.kind = "braided_mu";
  inst.dL = bi.bmu.dL();
  inst.operators["U"] = bi.bmu.pair.U.U;
  inst.operators["V"] = bi.bmu.pair.V.U;
  inst.operators["F"] = bi.bmu.F;
  inst.operators["Qprime"] = identity(inst.dL);
  inst.meta = {{"generator", bi.name}, {"group", bi.base.group.name}};
  return inst;
}

QuantumGroupData quantum_group_of(const Instance& inst, double tol) {
  std::optional<Mat> Q;
  if (inst.has("Q")) Q = inst.op("Q");
  return make_quantum_group(inst.op("W"), inst.dH, Q, tol);
}

LinearMap antipode_of(const Instance& inst, const QuantumGroupData& qg, bool dual) {
  const auto it = inst.maps.find(dual ? "Rhat" : "R");
  if (it != inst.maps.end()) return LinearMap::from_pairs(it->second.inputs, it->second.images);
  return dual ? kac_dual_antipode(qg) : kac_antipode(qg);
}

DrinfeldPair pair_of(const Instance& inst) { return make_pair(inst.op("U"), inst.op("V"), inst.dL); }

BraidedMU braided_of(const Instance& inst, const QuantumGroupData& qg, double tol) {
  BraidedMU b = make_braided_mu(pair_of(inst), inst.op("F"), qg, tol);
  if (inst.has("Qprime")) b.Qprime = inst.op("Qprime");
  return b;
}

}  // namespace bmu
