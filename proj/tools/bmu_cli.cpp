#include "bmu/corpus.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct OutputOptions {
  std::string out;
  std::string format = "text";
  bool timing = false;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw bmu::IllFormedInput(path + ": cannot write");
  f << text;
}

std::string render(const bmu::Certificate& c, const OutputOptions& o) {
  return o.format == "json" ? c.to_json(o.timing).dump(2) + "\n" : c.to_text(o.timing);
}

bmu::GenParams parse_params(const std::vector<std::string>& kv) {
  bmu::GenParams p;
  for (const auto& s : kv) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw bmu::IllFormedInput("parameter '" + s + "' is not key=value");
    try {
      p[s.substr(0, eq)] = std::stoi(s.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw bmu::IllFormedInput("parameter '" + s + "' has a non-integer value");
    }
  }
  return p;
}

bool negative_control(const bmu::Instance& inst) { return inst.meta.value("negative_control", false); }

int cmd_gen(const std::string& family, const std::vector<std::string>& kv, const std::string& out, bool list) {
  if (list) {
    for (const auto& f : bmu::generator_families()) {
      std::cout << f.name;
      for (const auto& [k, v] : f.defaults) std::cout << " " << k << "=" << v;
      std::cout << "  " << f.summary << "\n";
    }
    return kExitPass;
  }
  const bmu::Instance inst = bmu::generate_instance(family, parse_params(kv));
  if (!negative_control(inst)) {
    for (const auto& p : bmu::applicable_pipelines(inst)) {
      const auto cert = bmu::run_pipeline(inst, p);
      if (!cert.all_pass()) {
        std::cerr << "generated instance fails its checks; not written\n" << cert.to_text();
        return kExitFail;
      }
    }
  }
  emit(bmu::to_json(inst).dump(1) + "\n", out);
  if (!out.empty()) std::cerr << "wrote " << inst.id << " to " << out << "\n";
  return kExitPass;
}

int cmd_verify(const std::string& pipeline, const std::string& file, const bmu::PipelineOptions& po,
               const OutputOptions& o) {
  const bmu::Instance inst = bmu::load_instance(file, po.input_tol);
  const auto cert = bmu::run_pipeline(inst, pipeline, po);
  emit(render(cert, o), o.out);
  return cert.all_pass() ? kExitPass : kExitFail;
}

int cmd_report(const std::vector<std::string>& files, const OutputOptions& o) {
  bool all = true;
  json merged = json::array();
  std::string text;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw bmu::IllFormedInput(f + ": cannot open");
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw bmu::IllFormedInput(f + ": " + e.what());
    }
    if (!j.contains("checks") || !j.contains("verdict")) throw bmu::IllFormedInput(f + ": not a certificate");
    const bool pass = j["verdict"] == "pass";
    all = all && pass;
    merged.push_back(j);
    int failed = 0, skipped = 0;
    for (const auto& c : j["checks"]) {
      failed += c["verdict"] == "fail";
      skipped += c["verdict"] == "not_evaluated";
    }
    text += (pass ? "PASS " : "FAIL ") + j.value("pipeline", std::string("?")) + " " +
            j.value("instance", std::string("?")) + ": " + std::to_string(j["checks"].size()) + " checks, " +
            std::to_string(failed) + " failed, " + std::to_string(skipped) + " not evaluated\n";
  }
  emit(o.format == "json" ? merged.dump(2) + "\n" : text, o.out);
  return all ? kExitPass : kExitFail;
}

int cmd_corpus_gen(const std::string& dir) {
  fs::create_directories(dir);
  for (const auto& inst : bmu::standard_corpus()) {
    const fs::path p = fs::path(dir) / (inst.id + ".json");
    bmu::save_instance(inst, p.string());
    std::cout << p.string() << "\n";
  }
  return kExitPass;
}

// A negative control is expected to fail; the run passes when every regular instance
// passes and every negative control fails somewhere.
int cmd_corpus_run(const std::string& dir, const bmu::PipelineOptions& po, const OutputOptions& o) {
  if (!fs::is_directory(dir)) throw bmu::IllFormedInput(dir + ": not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (!o.out.empty()) fs::create_directories(o.out);

  bool ok = true, input_error = false;
  for (const auto& f : files) {
    bmu::Instance inst;
    try {
      inst = bmu::load_instance(f.string(), po.input_tol);
    } catch (const bmu::Error& e) {
      std::cout << "INPUT-ERROR " << f.filename().string() << ": " << e.what() << "\n";
      input_error = true;
      continue;
    }
    bool any_fail = false;
    for (const auto& p : bmu::applicable_pipelines(inst)) {
      const auto cert = bmu::run_pipeline(inst, p, po);
      any_fail = any_fail || !cert.all_pass();
      std::cout << (cert.all_pass() ? "  pass " : "  fail ") << p << " " << inst.id << "\n";
      if (!o.out.empty())
        emit(cert.to_json(o.timing).dump(2) + "\n", (fs::path(o.out) / (inst.id + "." + p + ".json")).string());
    }
    const bool expected = negative_control(inst) ? any_fail : !any_fail;
    ok = ok && expected;
    std::cout << (expected ? "OK   " : "BAD  ") << inst.id << (negative_control(inst) ? " (negative control)" : "")
              << "\n";
  }
  if (input_error) return kExitInput;
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of braided multiplicative unitaries"};
  app.require_subcommand(1);

  bmu::PipelineOptions po;
  OutputOptions oo;
  double tol = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", tol, "override every check tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--out", oo.out, "output path");
    sub->add_option("--format", oo.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", oo.timing, "add per-check wall-clock times");
  };

  std::string family;
  std::vector<std::string> params;
  bool list = false;
  auto* gen = app.add_subcommand("gen", "write a generated instance");
  gen->add_option("family", family, "generator family");
  gen->add_option("--param,-p", params, "key=value generator parameter");
  gen->add_option("--out", oo.out, "output path");
  gen->add_flag("--list", list, "list the generator families");

  std::string pipeline, file;
  auto* verify = app.add_subcommand("verify", "run a pipeline on an instance");
  verify->add_option("pipeline", pipeline, "pipeline name")->required()->check(CLI::IsMember(bmu::pipeline_names()));
  verify->add_option("file", file, "instance JSON")->required();
  add_common(verify);

  std::vector<std::string> certs;
  auto* report = app.add_subcommand("report", "summarize certificates");
  report->add_option("certificates", certs, "certificate JSON files")->required();
  report->add_option("--out", oo.out, "output path");
  report->add_option("--format", oo.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string dir;
  auto* corpus = app.add_subcommand("corpus", "work on a directory of instances");
  corpus->require_subcommand(1);
  auto* crun = corpus->add_subcommand("run", "run every applicable pipeline on every instance");
  crun->add_option("dir", dir, "corpus directory")->required();
  add_common(crun);
  auto* cgen = corpus->add_subcommand("gen", "write the standard corpus");
  cgen->add_option("dir", dir, "corpus directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }
  if (tol > 0) po.tol = tol;

  try {
    if (*gen) {
      if (!list && family.empty()) throw bmu::IllFormedInput("gen needs a family (see --list)");
      return cmd_gen(family, params, oo.out, list);
    }
    if (*verify) return cmd_verify(pipeline, file, po, oo);
    if (*report) return cmd_report(certs, oo);
    if (*crun) return cmd_corpus_run(dir, po, oo);
    if (*cgen) return cmd_corpus_gen(dir);
  } catch (const bmu::Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
