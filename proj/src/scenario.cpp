#include "lics/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lics/errors.hpp"

namespace lics {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ScenarioError("scenario error at " + path + ": " + what);
}

double get_num(const json& j, const std::string& path, const char* key,
               std::optional<double> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    fail(path + "." + key, "missing required number");
  }
  if (!j[key].is_number()) fail(path + "." + key, "expected a number");
  return j[key].get<double>();
}

int get_int(const json& j, const std::string& path, const char* key,
            std::optional<int> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    fail(path + "." + key, "missing required integer");
  }
  if (!j[key].is_number_integer()) fail(path + "." + key, "expected an integer");
  return j[key].get<int>();
}

InitialStateSpec parse_initial(const json& j, const std::string& path) {
  InitialStateSpec spec;
  if (!j.is_object()) fail(path, "expected an object");
  int set = 0;
  if (j.contains("basis")) {
    spec.basis = get_int(j, path, "basis");
    ++set;
  }
  if (j.contains("named")) {
    if (!j["named"].is_string()) fail(path + ".named", "expected a string");
    spec.named = j["named"].get<std::string>();
    ++set;
  }
  if (j.contains("amplitudes")) {
    if (!j["amplitudes"].is_array())
      fail(path + ".amplitudes", "expected an array of [re, im] pairs");
    for (const auto& a : j["amplitudes"]) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_number() ||
          !a[1].is_number())
        fail(path + ".amplitudes", "entries must be [re, im] pairs");
      spec.amplitudes.emplace_back(a[0].get<double>(), a[1].get<double>());
    }
    ++set;
  }
  if (set != 1)
    fail(path, "exactly one of basis / named / amplitudes must be given");
  return spec;
}

PulseSpec parse_pulse(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  PulseSpec p;
  p.peak = get_num(j, path, "peak");
  p.center = get_num(j, path, "center");
  p.width = get_num(j, path, "width");
  try {
    p.validate();
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  return p;
}

}  // namespace

int Scenario::dim() const {
  switch (kind) {
    case SystemKind::TwoLevelCyclic:
      return 2;
    case SystemKind::Multilevel:
      return multi.dim();
    case SystemKind::ThreeWave:
      return 3;
  }
  return 0;
}

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ScenarioError("scenario error at $: expected an object");

  Scenario sc;
  sc.hash = fnv1a_hex(text);

  if (!j.contains("kind") || !j["kind"].is_string())
    fail("$.kind", "missing system kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "two-level-cyclic")
    sc.kind = SystemKind::TwoLevelCyclic;
  else if (kind == "multilevel")
    sc.kind = SystemKind::Multilevel;
  else if (kind == "three-wave")
    sc.kind = SystemKind::ThreeWave;
  else
    fail("$.kind", "expected two-level-cyclic | multilevel | three-wave");

  const json params = j.value("params", json::object());
  const std::string pp = "$.params";
  try {
    switch (sc.kind) {
      case SystemKind::TwoLevelCyclic: {
        auto& p = sc.cyclic;
        p.gamma_g = get_num(params, pp, "gamma_g");
        p.gamma_e = get_num(params, pp, "gamma_e");
        p.q = get_num(params, pp, "q", 0.0);
        p.s_g = get_num(params, pp, "s_g", 0.0);
        p.s_e = get_num(params, pp, "s_e", 0.0);
        p.delta = get_num(params, pp, "delta", 0.0);
        p.omega_c = get_num(params, pp, "omega_c", 0.0);
        p.validate();
        break;
      }
      case SystemKind::Multilevel: {
        auto& p = sc.multi;
        p.n_g = get_int(params, pp, "n_g", 5);
        p.n_e = get_int(params, pp, "n_e", 5);
        p.gamma_g = get_num(params, pp, "gamma_g");
        p.gamma_e = get_num(params, pp, "gamma_e");
        p.q_gg = get_num(params, pp, "q_gg", 0.0);
        p.q_ee = get_num(params, pp, "q_ee", 0.0);
        p.q_ge = get_num(params, pp, "q_ge", 0.0);
        p.s_g = get_num(params, pp, "s_g", 0.0);
        p.s_e = get_num(params, pp, "s_e", 0.0);
        p.delta = get_num(params, pp, "delta", 0.0);
        p.validate();
        break;
      }
      case SystemKind::ThreeWave: {
        auto& s = sc.stirap;
        if (!params.contains("pump")) fail(pp + ".pump", "missing pulse");
        if (!params.contains("stokes")) fail(pp + ".stokes", "missing pulse");
        s.pump = parse_pulse(params["pump"], pp + ".pump");
        s.stokes = parse_pulse(params["stokes"], pp + ".stokes");
        s.phi_p = get_num(params, pp, "phi_p", 0.0);
        s.phi_s = get_num(params, pp, "phi_s", M_PI / 2.0);
        s.t_start = get_num(params, pp, "t_start", 0.0);
        s.t_end = get_num(params, pp, "t_end", 1.0);
        if (!(s.t_end > s.t_start)) fail(pp, "t_end must exceed t_start");
        break;
      }
    }
  } catch (const std::invalid_argument& e) {
    fail(pp, e.what());
  }

  if (j.contains("branches")) {
    if (!j["branches"].is_array()) fail("$.branches", "expected an array");
    int idx = 0;
    for (const auto& b : j["branches"]) {
      const std::string bp = "$.branches[" + std::to_string(idx++) + "]";
      if (!b.is_object()) fail(bp, "expected an object");
      Branch br;
      br.label = b.value("label", std::string("branch") + std::to_string(idx));
      br.sign = get_int(b, bp, "sign", +1);
      if (br.sign != +1 && br.sign != -1) fail(bp + ".sign", "must be +1 or -1");
      if (b.contains("s_g")) br.s_g = get_num(b, bp, "s_g");
      if (b.contains("s_e")) br.s_e = get_num(b, bp, "s_e");
      if (b.contains("initial"))
        br.initial = parse_initial(b["initial"], bp + ".initial");
      sc.branches.push_back(std::move(br));
    }
  }
  if (sc.branches.empty()) {
    // Default: the two enantiomer branches of the shared parameter set.
    sc.branches.push_back({"L", +1, {}, {}, {}});
    sc.branches.push_back({"R", -1, {}, {}, {}});
  }

  if (j.contains("initial"))
    sc.initial = parse_initial(j["initial"], "$.initial");
  else
    sc.initial.basis = 0;

  if (j.contains("time")) {
    const json& t = j["time"];
    const std::string tp = "$.time";
    sc.time.start = get_num(t, tp, "start", 0.0);
    sc.time.stop = get_num(t, tp, "stop");
    sc.time.points = get_int(t, tp, "points", 500);
    if (sc.time.points < 1) fail(tp + ".points", "must be >= 1");
    if (sc.time.start < 0.0) fail(tp + ".start", "must be >= 0");
    if (!(sc.time.stop >= sc.time.start)) fail(tp + ".stop", "must be >= start");
  }

  if (j.contains("scan")) {
    const json& s = j["scan"];
    const std::string sp = "$.scan";
    ScanBlock sb;
    sb.axis = s.value("axis", std::string("delta"));
    if (sb.axis != "delta" && sb.axis != "time")
      fail(sp + ".axis", "expected delta | time");
    if (!s.contains("range") || !s["range"].is_array() ||
        s["range"].size() != 2)
      fail(sp + ".range", "expected [lo, hi]");
    sb.lo = s["range"][0].get<double>();
    sb.hi = s["range"][1].get<double>();
    sb.points = get_int(s, sp, "points", 500);
    if (sb.points < 1) fail(sp + ".points", "must be >= 1");
    sb.probe_time = get_num(s, sp, "probe_time", 0.0);
    sc.scan = sb;
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

StateVector make_initial_state(const InitialStateSpec& spec, int dim) {
  StateVector c = StateVector::Zero(dim);
  if (spec.basis) {
    if (*spec.basis < 0 || *spec.basis >= dim)
      throw ScenarioError("initial basis index out of range");
    c[*spec.basis] = 1.0;
    return c;
  }
  if (spec.named) {
    const std::string& name = *spec.named;
    if (dim < 3)
      throw ScenarioError("named state '" + name +
                          "' needs at least three ground states");
    const double r = 1.0 / std::sqrt(2.0);
    if (name == "darkR") {  // (c_g3 - c_g1)/sqrt(2)
      c[0] = -r;
      c[2] = r;
    } else if (name == "brightL") {  // (c_g3 + c_g1)/sqrt(2)
      c[0] = r;
      c[2] = r;
    } else {
      throw ScenarioError("unknown named state '" + name +
                          "' (expected darkR or brightL)");
    }
    return c;
  }
  if (static_cast<int>(spec.amplitudes.size()) != dim)
    throw ScenarioError("amplitude list length does not match system size");
  for (int i = 0; i < dim; ++i) c[i] = spec.amplitudes[i];
  const double norm = c.norm();
  if (norm <= 0.0) throw ScenarioError("initial amplitudes are all zero");
  if (std::abs(norm - 1.0) > 1e-6)
    std::cerr << "warning: initial state renormalized (norm was " << norm
              << ")\n";
  return c / norm;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lics
