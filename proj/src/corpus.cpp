#include "bmu/corpus.hpp"

#include <sstream>

namespace bmu {

namespace {

int param(const GenParams& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw IllFormedInput("missing generator parameter '" + key + "'");
  return it->second;
}

GenParams merged(const FamilyInfo& f, const GenParams& given) {
  GenParams out = f.defaults;
  for (const auto& [k, v] : given) {
    if (!out.count(k)) throw IllFormedInput("family '" + f.name + "' has no parameter '" + k + "'");
    out[k] = v;
  }
  return out;
}

std::string label(const std::string& family, const GenParams& p) {
  std::ostringstream os;
  os << family;
  for (const auto& [k, v] : p) os << "_" << k << v;
  return os.str();
}

Instance dual_of(const GroupInstance& gi, const std::string& id) {
  Instance inst = instance_from_group(gi, id);
  inst.operators["W"] = dualize(gi.qg.W(), gi.qg.d());
  std::swap(inst.maps["R"], inst.maps["Rhat"]);
  return inst;
}

// Group W with one column negated: still unitary, no longer multiplicative.
Instance corrupted_phase(int n, const std::string& id) {
  Instance inst = instance_from_group(group_mu(cyclic_group(n)), id);
  Mat W = inst.operators["W"];
  W.col(1) *= -1.0;
  inst.operators["W"] = W;
  inst.maps.clear();
  return inst;
}

}  // namespace

const std::vector<FamilyInfo>& generator_families() {
  static const std::vector<FamilyInfo> fams{
      {"cyclic", "group unitary of Z/n", {{"n", 3}}, false},
      {"s3", "group unitary of the symmetric group on three letters", {}, false},
      {"semidirect", "group unitary of Z/k x| Z/g acting by x -> a x", {{"k", 3}, {"g", 2}, {"a", -1}}, false},
      {"dual-cyclic", "dual unitary Sigma W* Sigma of Z/n", {{"n", 3}}, false},
      {"dual-s3", "dual unitary of the symmetric group on three letters", {}, false},
      {"trivial", "identity operator on H (x) H", {{"n", 2}}, false},
      {"graded-pair", "Drinfeld pair over Z/n on C^n: characters of index m, grading of index k",
       {{"n", 2}, {"k", 1}, {"m", 1}}, false},
      {"trivial-group", "braided unitary over the trivial group with F the group unitary of Z/n", {{"n", 3}}, false},
      {"trivial-b", "braided unitary on L = C over Z/n (or S3 when s3 = 1)", {{"n", 3}, {"s3", 0}}, false},
      {"action", "braided unitary of Z/k over Z/g, U from x -> a x", {{"k", 3}, {"g", 2}, {"a", -1}}, false},
      {"grading", "braided unitary of Z/k over Z/g, V from eigenspaces of x -> a x",
       {{"k", 3}, {"g", 2}, {"a", -1}}, false},
      {"graded-identity", "F = 1 over the graded pair", {{"n", 2}, {"k", 1}, {"m", 1}}, false},
      {"flip", "the flip operator Sigma (negative control)", {{"n", 2}}, true},
      {"corrupted-phase", "group unitary of Z/n with one column negated (negative control)", {{"n", 3}}, true},
      {"action-and-grading", "action and grading both switched on (negative control)",
       {{"k", 3}, {"g", 2}, {"a", -1}}, true},
  };
  return fams;
}

Instance generate_instance(const std::string& family, const GenParams& given) {
  const auto& fams = generator_families();
  auto it = std::find_if(fams.begin(), fams.end(), [&](const FamilyInfo& f) { return f.name == family; });
  if (it == fams.end()) throw IllFormedInput("unknown generator family '" + family + "'");
  const GenParams p = merged(*it, given);
  const std::string id = label(family, p);

  Instance inst;
  if (family == "cyclic") {
    inst = instance_from_group(group_mu(cyclic_group(param(p, "n"))), id);
  } else if (family == "s3") {
    inst = instance_from_group(group_mu(symmetric3()), id);
  } else if (family == "semidirect") {
    inst = instance_from_group(group_mu(semidirect_group(param(p, "k"), param(p, "g"), param(p, "a"))), id);
  } else if (family == "dual-cyclic") {
    inst = dual_of(group_mu(cyclic_group(param(p, "n"))), id);
  } else if (family == "dual-s3") {
    inst = dual_of(group_mu(symmetric3()), id);
  } else if (family == "trivial") {
    const int n = param(p, "n");
    if (n < 1) throw IllFormedInput("n must be positive");
    inst.id = id;
    inst.kind = "mu";
    inst.dH = n;
    inst.operators["W"] = identity(n * n);
  } else if (family == "graded-pair") {
    const GroupInstance gi = group_mu(cyclic_group(param(p, "n")));
    const DrinfeldPair pair = graded_drinfeld_pair(param(p, "n"), param(p, "k"), param(p, "m"));
    inst = instance_from_group(gi, id);
    inst.kind = "drinfeld_pair";
    inst.dL = pair.dL;
    inst.operators["U"] = pair.U.U;
    inst.operators["V"] = pair.V.U;
  } else if (family == "trivial-group") {
    inst = instance_from_braided(trivial_group_braided(param(p, "n")), id);
  } else if (family == "trivial-b") {
    inst = instance_from_braided(trivial_B_braided(param(p, "s3") ? symmetric3() : cyclic_group(param(p, "n"))), id);
  } else if (family == "action") {
    inst = instance_from_braided(semidirect_action_instance(param(p, "k"), param(p, "g"), param(p, "a")), id);
  } else if (family == "grading") {
    inst = instance_from_braided(semidirect_grading_instance(param(p, "k"), param(p, "g"), param(p, "a")), id);
  } else if (family == "graded-identity") {
    inst = instance_from_braided(graded_identity_instance(param(p, "n"), param(p, "k"), param(p, "m")), id);
  } else if (family == "flip") {
    const int n = param(p, "n");
    inst.id = id;
    inst.kind = "mu";
    inst.dH = n;
    inst.operators["W"] = flip(n, n);
  } else if (family == "corrupted-phase") {
    inst = corrupted_phase(param(p, "n"), id);
  } else {
    const int k = param(p, "k"), g = param(p, "g");
    const GroupInstance gi = group_mu(cyclic_group(g));
    const DrinfeldPair pair = automorphism_pair(k, g, param(p, "a"), true, true);
    inst = instance_from_group(gi, id);
    inst.kind = "braided_mu";
    inst.dL = k;
    inst.operators["U"] = pair.U.U;
    inst.operators["V"] = pair.V.U;
    inst.operators["F"] = group_unitary(cyclic_group(k));
  }
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : p) params[k] = v;
  inst.meta = {{"generator", family}, {"params", params}, {"negative_control", it->negative_control}};
  return inst;
}

std::vector<std::string> applicable_pipelines(const Instance& inst) {
  std::vector<std::string> out;
  for (const auto& name : pipeline_names())
    if (pipeline_applies(name, inst.kind)) out.push_back(name);
  return out;
}

std::vector<Instance> standard_corpus() {
  std::vector<Instance> out;
  for (int n = 1; n <= 6; ++n) out.push_back(generate_instance("cyclic", {{"n", n}}));
  out.push_back(generate_instance("s3"));
  out.push_back(generate_instance("dual-cyclic", {{"n", 3}}));
  out.push_back(generate_instance("dual-s3"));
  out.push_back(generate_instance("trivial", {{"n", 2}}));
  out.push_back(generate_instance("graded-pair"));
  out.push_back(generate_instance("trivial-group"));
  out.push_back(generate_instance("trivial-b", {{"s3", 1}}));
  out.push_back(generate_instance("graded-identity"));
  out.push_back(generate_instance("action"));
  out.push_back(generate_instance("grading"));
  out.push_back(generate_instance("flip"));
  out.push_back(generate_instance("corrupted-phase"));
  out.push_back(generate_instance("action-and-grading"));
  return out;
}

}  // namespace bmu
