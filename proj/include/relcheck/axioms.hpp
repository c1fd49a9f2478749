#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relcheck/sampling.hpp"
#include "relcheck/worldview.hpp"

namespace relcheck {

/// The audited axioms, in the fixed order used by auditAll.
enum class AxiomId {
  AxPh,
  AxEv,
  AxSelf,
  AxSym,
  AxWVT,
  AxWVTSym,
  AxLines,
  AxPlanes,
  AxCones,
  AxEuclidean,
  AxTangentBase,
  AxTangentVertex,
  AxConeTangent,
  AxParallelCones,
  AxParallelConesE,
};

inline constexpr std::array<AxiomId, 15> kAllAxioms = {
    AxiomId::AxPh,          AxiomId::AxEv,
    AxiomId::AxSelf,        AxiomId::AxSym,
    AxiomId::AxWVT,         AxiomId::AxWVTSym,
    AxiomId::AxLines,       AxiomId::AxPlanes,
    AxiomId::AxCones,       AxiomId::AxEuclidean,
    AxiomId::AxTangentBase, AxiomId::AxTangentVertex,
    AxiomId::AxConeTangent, AxiomId::AxParallelCones,
    AxiomId::AxParallelConesE,
};

std::string axiomName(AxiomId id);
std::optional<AxiomId> axiomFromName(const std::string& name);

enum class Verdict { pass, fail, notCheckable };
std::string verdictName(Verdict v);

/// A failed instance: the instantiating data as named exact literals
/// (re-parseable with parseScalar), so the violation can be re-checked
/// independently of this library's internals.
struct Counterexample {
  std::string description;
  std::vector<std::pair<std::string, std::string>> data;

  void add(const std::string& name, const Scalar& value);
  void add(const std::string& name, const std::string& value);
  void addPoint(const std::string& name, const Point& p);
  /// Value recorded under the given name, if any.
  std::optional<std::string> find(const std::string& name) const;
  /// Point recorded as name.t/.x/.y/.z, re-parsed exactly.
  std::optional<Point> findPoint(const std::string& name,
                                 FieldMode mode) const;
};

struct AxiomReport {
  AxiomId axiom = AxiomId::AxPh;
  Verdict verdict = Verdict::pass;
  long instancesChecked = 0;
  std::optional<Counterexample> counterexample;
  std::string note;  // sub-check outcomes, notCheckable reasons
};

/// Whether instance batches are evaluated by the parallel kernel or the
/// serial reference loop. Both produce identical reports: instances are
/// generated up front in a fixed order, every instance is evaluated (the
/// evaluations are pure), and the counterexample is taken from the lowest
/// failing index.
enum class ExecPolicy { serial, parallel };

/// Evaluate one axiom against the model on grid plus seeded-random
/// instances. The sampling stream is derived from (cfg.seed, axiom), so
/// per-axiom results do not depend on which other axioms run or in what
/// order. Throws NotApplicable when the model lacks the structure the
/// axiom speaks about (e.g. no observers).
AxiomReport checkAxiom(const Model& model, AxiomId axiom,
                       const SamplingConfig& cfg,
                       ExecPolicy policy = ExecPolicy::parallel);

/// Run every axiom in kAllAxioms order. NotApplicable axioms come back
/// notCheckable with the reason in the note.
std::vector<AxiomReport> auditAll(const Model& model,
                                  const SamplingConfig& cfg,
                                  ExecPolicy policy = ExecPolicy::parallel);

/// Overall verdict: pass iff no report failed.
bool overallPass(const std::vector<AxiomReport>& reports);

}  // namespace relcheck
