#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lics/model.hpp"
#include "lics/stirap.hpp"

namespace lics {

enum class SystemKind { TwoLevelCyclic, Multilevel, ThreeWave };

/// Initial state: a basis index, a named superposition ("darkR",
/// "brightL"), or an explicit amplitude list. Exactly one is set.
struct InitialStateSpec {
  std::optional<int> basis;
  std::optional<std::string> named;
  std::vector<Complex> amplitudes;
};

/// One enantiomer branch of a run. For the cyclic and three-wave kinds
/// the sign selects the enantiomer; Stark shifts may differ per branch
/// (the control field shifts them enantiospecifically). For the
/// multilevel kind branches differ by their initial state.
struct Branch {
  std::string label;
  int sign = +1;
  std::optional<double> s_g;
  std::optional<double> s_e;
  std::optional<InitialStateSpec> initial;
};

struct TimeGridSpec {
  double start = 0.0;
  double stop = 1.0;
  int points = 500;
};

struct ScanBlock {
  std::string axis = "delta";  // "delta" or "time"
  double lo = 0.0;
  double hi = 1.0;
  int points = 500;
  double probe_time = 0.0;
};

struct StirapBlock {
  PulseSpec pump;
  PulseSpec stokes;
  double phi_p = 0.0;
  double phi_s = M_PI / 2.0;
  double t_start = 0.0;
  double t_end = 1.0;
};

struct Scenario {
  SystemKind kind = SystemKind::TwoLevelCyclic;
  CyclicLicsParams cyclic;  // kind == TwoLevelCyclic
  MultiLicsParams multi;    // kind == Multilevel
  StirapBlock stirap;       // kind == ThreeWave
  std::vector<Branch> branches;
  InitialStateSpec initial;
  TimeGridSpec time;
  std::optional<ScanBlock> scan;
  std::string hash;  // content hash of the scenario document

  int dim() const;
};

// Parse a scenario JSON document; throws ScenarioError with the failing
// field path. The hash is FNV-1a over the raw document bytes.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

// Resolve an initial-state spec to a normalized amplitude vector.
// Renormalizations beyond 1e-6 are reported on stderr.
StateVector make_initial_state(const InitialStateSpec& spec, int dim);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace lics
