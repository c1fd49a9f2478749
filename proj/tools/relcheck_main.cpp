#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "relcheck/axioms.hpp"
#include "relcheck/errors.hpp"
#include "relcheck/noftl.hpp"
#include "relcheck/scene.hpp"

namespace {

using namespace relcheck;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
  if (!out) throw ParseError("failed while writing file: " + path);
}

std::optional<FieldMode> modeOverrideFrom(const std::string& flag) {
  if (flag.empty()) return std::nullopt;
  if (flag == "rational") return FieldMode::rational;
  return FieldMode::euclidean;  // CLI11 restricts the flag to these two
}

void printReport(const Report& r, const std::string& format) {
  std::cout << (format == "text" ? reportToText(r) : reportToJson(r));
}

/// "w.json" -> "w-3.json"; extensionless paths get the suffix appended.
std::string indexedPath(const std::string& path, size_t i) {
  const size_t slash = path.find_last_of('/');
  const size_t dot = path.find_last_of('.');
  const std::string suffix = "-" + std::to_string(i);
  if (dot == std::string::npos ||
      (slash != std::string::npos && dot < slash)) {
    return path + suffix;
  }
  return path.substr(0, dot) + suffix + path.substr(dot);
}

struct CommonFlags {
  std::string scenePath;
  std::string format = "json";
  std::string modeFlag;
  long long seed = -1;
  long long gridRadius = -1;
  long long randomCount = -1;
  std::string outPath;
  std::vector<std::string> certPaths;
};

int runAudit(const CommonFlags& flags) {
  SceneFile scene =
      parseScene(readFile(flags.scenePath), modeOverrideFrom(flags.modeFlag));
  SamplingConfig cfg = scene.sampling;
  if (flags.seed >= 0) cfg.seed = static_cast<uint64_t>(flags.seed);
  if (flags.gridRadius >= 0) cfg.gridRadius = static_cast<int>(flags.gridRadius);
  if (flags.randomCount >= 0) {
    cfg.randomCount = static_cast<int>(flags.randomCount);
  }

  Report r;
  r.command = "audit";
  r.mode = scene.mode;
  r.sceneDigest = scene.digest;
  r.sampling = cfg;
  r.samplingUsed = true;
  r.axioms = auditAll(scene.model, cfg);
  r.overall = overallPass(r.axioms);
  printReport(r, flags.format);
  return r.overall ? 0 : 1;
}

int runNoftl(const CommonFlags& flags) {
  SceneFile scene =
      parseScene(readFile(flags.scenePath), modeOverrideFrom(flags.modeFlag));

  Report r;
  r.command = "noftl";
  r.mode = scene.mode;
  r.sceneDigest = scene.digest;
  for (const NoFTLCheck& check : scene.noftlChecks) {
    NoFTLResult result =
        checkNoFTL(scene.model, check.m, check.k, check.e, check.f);
    r.overall = r.overall && result.pass;
    r.noftlResults.push_back({check, result});
  }
  printReport(r, flags.format);
  return r.overall ? 0 : 1;
}

int runWitness(const CommonFlags& flags) {
  SceneFile scene =
      parseScene(readFile(flags.scenePath), modeOverrideFrom(flags.modeFlag));

  Report r;
  r.command = "witness";
  r.mode = scene.mode;
  r.sceneDigest = scene.digest;
  for (const FTLHypothesis& h : scene.hypotheses) {
    ContradictionCertificate cert = buildFTLWitness(h, scene.mode);
    std::string why;
    const bool valid = validateCertificate(cert, h, &why);
    const bool violated = std::holds_alternative<AxiomViolated>(cert.verdict);
    r.overall = r.overall && valid && violated;
    r.certEntries.push_back({std::move(cert), h, valid, std::move(why)});
  }
  if (!flags.outPath.empty()) {
    for (size_t i = 0; i < r.certEntries.size(); ++i) {
      const std::string path = r.certEntries.size() == 1
                                   ? flags.outPath
                                   : indexedPath(flags.outPath, i);
      writeFile(path, certificateToJson(r.certEntries[i].cert,
                                        r.certEntries[i].hypothesis, r.mode));
    }
  }
  printReport(r, flags.format);
  return r.overall ? 0 : 1;
}

int runValidate(const CommonFlags& flags) {
  Report r;
  r.command = "validate";
  bool modeSet = false;
  for (const std::string& path : flags.certPaths) {
    CertificateFile file = certificateFromJson(readFile(path));
    if (!modeSet) {
      r.mode = file.mode;
      modeSet = true;
    }
    std::string why;
    const bool valid =
        validateCertificate(file.cert, file.hypothesis, &why);
    r.overall = r.overall && valid;
    r.validations.push_back({path, valid, std::move(why)});
  }
  printReport(r, flags.format);
  return r.overall ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "relcheck — exact audits of observer worldview models: axiom "
      "checking, the no-faster-than-light inequality, and replayable "
      "contradiction certificates for faster-than-light hypotheses"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CommonFlags flags;

  const auto addFormat = [&](CLI::App* cmd) {
    cmd->add_option("--format", flags.format,
                    "report format: json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));
  };
  const auto addMode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", flags.modeFlag,
                    "override the scene's field mode")
        ->check(CLI::IsMember({"rational", "euclidean"}));
  };

  CLI::App* audit = app.add_subcommand(
      "audit", "evaluate every axiom against the scene's model");
  audit->add_option("scene", flags.scenePath, "scene JSON file")->required();
  audit->add_option("--seed", flags.seed, "sampling seed (overrides scene)")
      ->check(CLI::NonNegativeNumber);
  audit
      ->add_option("--grid-radius", flags.gridRadius,
                   "integer grid radius (overrides scene)")
      ->check(CLI::Range(0, 8));
  audit
      ->add_option("--random-count", flags.randomCount,
                   "random instances per batch (overrides scene)")
      ->check(CLI::Range(0, 1000000));
  addMode(audit);
  addFormat(audit);

  CLI::App* noftl = app.add_subcommand(
      "noftl", "check the sighting-pair speed inequality for the scene's "
               "noftl entries");
  noftl->add_option("scene", flags.scenePath, "scene JSON file")->required();
  addMode(noftl);
  addFormat(noftl);

  CLI::App* witness = app.add_subcommand(
      "witness", "run the contradiction construction for the scene's "
                 "witness hypotheses");
  witness->add_option("scene", flags.scenePath, "scene JSON file")->required();
  witness->add_option("--out", flags.outPath,
                      "write certificate JSON here (indexed when several)");
  addMode(witness);
  addFormat(witness);

  CLI::App* validate = app.add_subcommand(
      "validate", "re-check contradiction certificate files from scratch");
  validate->add_option("certificate", flags.certPaths,
                       "certificate JSON files")
      ->required();
  addFormat(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (audit->parsed()) return runAudit(flags);
    if (noftl->parsed()) return runNoftl(flags);
    if (witness->parsed()) return runWitness(flags);
    return runValidate(flags);
  } catch (const Error& err) {
    std::cerr << "relcheck: error: " << err.what() << std::endl;
    return 2;
  }
}
