#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relcheck/axioms.hpp"
#include "relcheck/noftl.hpp"
#include "relcheck/worldview.hpp"

namespace relcheck {

inline constexpr const char* kToolVersion = "relcheck 0.1.0";

/// One requested inequality check: observer m's two sightings of body k.
struct NoFTLCheck {
  std::string m, k;
  Point e, f;
};

/// A parsed scene: the model to work on plus the optional check blocks.
struct SceneFile {
  FieldMode mode = FieldMode::rational;
  Model model;
  SamplingConfig sampling;
  std::vector<NoFTLCheck> noftlChecks;
  std::vector<FTLHypothesis> hypotheses;
  std::string digest;  // fnv1a64:<16 hex digits> over the raw input bytes
};

/// Strict scene parse: every scalar is read exactly from its literal
/// (decimal floats are rejected), unknown fields are rejected with their
/// path, and the model is assembled from boost shorthands, bodies, frames,
/// and light speeds. modeOverride replaces the scene's fieldMode before the
/// model is built. Throws ParseError / SchemaError (and field errors such
/// as NotEuclidean for mode-mismatched literals).
SceneFile parseScene(const std::string& bytes,
                     std::optional<FieldMode> modeOverride = std::nullopt);

/// FNV-1a 64-bit digest, formatted "fnv1a64:<16 hex digits>".
std::string fnv1a64Hex(const std::string& bytes);

/// Self-contained certificate file: the trace plus the hypothesis it
/// refutes and the field mode its literals live in.
struct CertificateFile {
  ContradictionCertificate cert;
  FTLHypothesis hypothesis;
  FieldMode mode = FieldMode::euclidean;
};

/// Serialize with full scalar-literal fidelity: parsing back yields the
/// exact same values.
std::string certificateToJson(const ContradictionCertificate& cert,
                              const FTLHypothesis& hypothesis,
                              FieldMode mode);
CertificateFile certificateFromJson(const std::string& bytes);

/// Assembled command output. The machine form is deterministic JSON (no
/// timestamps, fixed key order); the text form lists every fail and
/// notCheckable with its witness data.
struct Report {
  std::string command;
  FieldMode mode = FieldMode::rational;
  std::string sceneDigest;
  SamplingConfig sampling;
  bool samplingUsed = false;  // audit uses sampling; other commands do not

  std::vector<AxiomReport> axioms;

  struct NoFTLEntry {
    NoFTLCheck check;
    NoFTLResult result;
  };
  std::vector<NoFTLEntry> noftlResults;

  struct CertEntry {
    ContradictionCertificate cert;
    FTLHypothesis hypothesis;
    bool valid = false;
    std::string mismatch;
  };
  std::vector<CertEntry> certEntries;

  struct ValidationEntry {
    std::string file;
    bool valid = false;
    std::string mismatch;
  };
  std::vector<ValidationEntry> validations;

  bool overall = true;
};

std::string reportToJson(const Report& r);
std::string reportToText(const Report& r);

}  // namespace relcheck
