#include "nonstatic/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "nonstatic/errors.hpp"
#include "nonstatic/version.hpp"
#include "nonstatic/wavefunctions.hpp"

namespace nonstatic::cli {

namespace {

using json = nlohmann::json;

enum class Kind { kReal, kCount, kText };

struct Key {
  const char* name;
  Kind kind;
  const char* help;
};

constexpr Key kKeys[] = {
    {"c1", Kind::kReal, "nonstaticity constant c1 (> 0)"},
    {"c2", Kind::kReal, "nonstaticity constant c2 (> 0, c1*c2 >= 1)"},
    {"c3-sign", Kind::kText, "sign of c3: + or -"},
    {"omega", Kind::kReal, "angular frequency"},
    {"epsilon", Kind::kReal, "permittivity"},
    {"hbar", Kind::kReal, "reduced Planck constant"},
    {"a0", Kind::kReal, "coherent amplitude modulus A0 (>= 0)"},
    {"theta", Kind::kReal, "coherent amplitude phase"},
    {"phi", Kind::kReal, "phase of f, reduced into [-pi/2, pi/2)"},
    {"t0", Kind::kReal, "initial time"},
    {"t-from", Kind::kReal, "first sample time (default t0)"},
    {"t-to", Kind::kReal, "last sample time (default t-from + 2 pi/omega)"},
    {"nt", Kind::kCount, "number of time samples (>= 2)"},
    {"qmin", Kind::kReal, "lower q bound (default: auto)"},
    {"qmax", Kind::kReal, "upper q bound (default: auto)"},
    {"nq", Kind::kCount, "q grid points"},
    {"pmin", Kind::kReal, "lower p bound (default: auto)"},
    {"pmax", Kind::kReal, "upper p bound (default: auto)"},
    {"np", Kind::kCount, "p grid points"},
    {"fock-n", Kind::kCount, "Fock level for fock-density"},
    {"out", Kind::kText, "output path; a manifest is written to PATH.manifest.json"},
    {"format", Kind::kText, "csv or json"},
    {"tol-scale", Kind::kReal, "multiplier applied to every tolerance"},
    {"threads", Kind::kCount, "worker threads"},
};

const Key* find_key(std::string_view name) {
  for (const Key& k : kKeys) {
    if (name == k.name) return &k;
  }
  return nullptr;
}

[[noreturn]] void usage(const std::string& flag, const std::string& message) {
  throw CliError(kExitUsage, "usage", flag, message);
}

std::string flag_of(std::string_view key) { return "--" + std::string(key); }

double real(const json& v, const char* key) {
  if (!v.is_number()) usage(flag_of(key), flag_of(key) + " expects a number");
  return v.get<double>();
}

std::size_t count(const json& v, const char* key) {
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0) return v.get<std::size_t>();
  usage(flag_of(key), flag_of(key) + " expects a non-negative integer");
}

std::string text(const json& v, const char* key) {
  if (!v.is_string()) usage(flag_of(key), flag_of(key) + " expects a string");
  return v.get<std::string>();
}

void require_finite(double v, const char* key) {
  if (!std::isfinite(v)) usage(flag_of(key), flag_of(key) + " must be finite");
}

}  // namespace

nlohmann::ordered_json CliError::to_json() const {
  nlohmann::ordered_json j;
  j["error"] = kind_;
  if (!flag_.empty()) j["flag"] = flag_;
  j["message"] = what();
  j["exit_code"] = exit_code_;
  return j;
}

const std::vector<std::string>& subjects() {
  static const std::vector<std::string> list{
      "density-q", "density-p",  "fock-density", "energies", "fluctuations",
      "wigner",    "ellipse",    "mandel-q",     "nonstaticity", "validate"};
  return list;
}

nlohmann::ordered_json Scenario::to_json() const {
  nlohmann::ordered_json j;
  j["subject"] = subject;
  j["c1"] = params.c1;
  j["c2"] = params.c2;
  j["c3-sign"] = params.c3_sign == C3Sign::kPositive ? "+" : "-";
  j["omega"] = params.omega;
  j["epsilon"] = params.epsilon;
  j["hbar"] = params.hbar;
  j["a0"] = a0;
  j["theta"] = theta;
  j["phi"] = params.phi;
  j["t0"] = params.t0;
  j["t-from"] = t_from;
  j["t-to"] = t_to;
  j["nt"] = nt;
  j["qmin"] = q_min;
  j["qmax"] = q_max;
  j["nq"] = nq;
  j["pmin"] = p_min;
  j["pmax"] = p_max;
  j["np"] = np;
  j["fock-n"] = fock_n;
  j["out"] = out;
  j["format"] = format == Format::kCsv ? "csv" : "json";
  j["tol-scale"] = tol_scale;
  j["threads"] = threads;
  return j;
}

Scenario resolve_scenario(const nlohmann::json& values) {
  if (!values.is_object()) usage("--config", "configuration must be a JSON object");
  for (const auto& [key, value] : values.items()) {
    if (key != "subject" && !find_key(key)) usage(flag_of(key), "unknown option " + flag_of(key));
  }

  Scenario s;
  if (!values.contains("subject")) usage("subject", "missing subject");
  s.subject = text(values["subject"], "subject");
  const auto& names = subjects();
  if (std::find(names.begin(), names.end(), s.subject) == names.end()) {
    usage("subject", "unknown subject '" + s.subject + "'");
  }

  const auto get_real = [&](const char* key, double fallback) {
    if (!values.contains(key)) return fallback;
    const double v = real(values[key], key);
    require_finite(v, key);
    return v;
  };
  const auto get_count = [&](const char* key, std::size_t fallback) {
    return values.contains(key) ? count(values[key], key) : fallback;
  };

  ModelParams& p = s.params;
  p.c1 = get_real("c1", 1.0);
  p.c2 = get_real("c2", 1.0);
  p.omega = get_real("omega", 1.0);
  p.epsilon = get_real("epsilon", 1.0);
  p.hbar = get_real("hbar", 1.0);
  p.phi = wrap_phase(get_real("phi", 0.0));
  p.t0 = get_real("t0", 0.0);
  if (values.contains("c3-sign")) {
    const std::string sign = text(values["c3-sign"], "c3-sign");
    if (sign == "+") {
      p.c3_sign = C3Sign::kPositive;
    } else if (sign == "-") {
      p.c3_sign = C3Sign::kNegative;
    } else {
      usage("--c3-sign", "--c3-sign must be + or -");
    }
  }
  try {
    p.validate();
  } catch (const ParameterError& e) {
    throw CliError(kExitUsage, "parameter_domain", flag_of(e.field()), e.what());
  }

  s.a0 = get_real("a0", 1.0);
  if (s.a0 < 0) usage("--a0", "--a0 must be >= 0");
  s.theta = get_real("theta", 0.0);

  s.t_from = get_real("t-from", p.t0);
  if (s.t_from < p.t0) usage("--t-from", "--t-from must not precede --t0");
  s.t_to = get_real("t-to", s.t_from + 2 * kPi / p.omega);
  if (!(s.t_to > s.t_from)) usage("--t-to", "--t-to must exceed --t-from");
  s.nt = get_count("nt", s.subject == "wigner" ? 9 : 101);
  if (s.nt < 2) usage("--nt", "--nt must be >= 2");

  s.fock_n = static_cast<int>(std::min<std::size_t>(get_count("fock-n", 5), 1u << 20));
  if (s.fock_n > kDefaultFockMax) {
    usage("--fock-n", "--fock-n above " + std::to_string(kDefaultFockMax) + " is not supported");
  }

  // Grids cover the packet at every time; Fock levels use their classical
  // turning point in place of the displacement.
  const bool wigner = s.subject == "wigner";
  const double reach = s.subject == "fock-density" ? std::sqrt(2.0 * s.fock_n + 1.0) : s.a0;
  const double qb = wigner ? auto_bound(p, reach, Axis::kQ, 6.0, 0.0) : auto_bound(p, reach, Axis::kQ);
  const double pb = wigner ? auto_bound(p, reach, Axis::kP, 6.0, 0.0) : auto_bound(p, reach, Axis::kP);
  s.q_min = get_real("qmin", -qb);
  s.q_max = get_real("qmax", qb);
  s.p_min = get_real("pmin", -pb);
  s.p_max = get_real("pmax", pb);
  // Line grids keep at least four points per narrowest width.
  const auto points = [&](double span, double sigma_min) -> std::size_t {
    if (wigner) return 301;
    return std::max<std::size_t>(1601, static_cast<std::size_t>(std::ceil(4 * span / sigma_min)) + 1);
  };
  const double ew = p.epsilon * p.omega;
  s.nq = get_count("nq", points(s.q_max - s.q_min, std::sqrt(p.hbar * f_min(p) / (2 * ew))));
  s.np = get_count("np", points(s.p_max - s.p_min, std::sqrt(p.hbar * ew / (2 * f_max(p)))));
  if (!(s.q_max > s.q_min)) usage("--qmax", "--qmax must exceed --qmin");
  if (!(s.p_max > s.p_min)) usage("--pmax", "--pmax must exceed --pmin");
  if (s.nq < 3) usage("--nq", "--nq must be >= 3");
  if (s.np < 3) usage("--np", "--np must be >= 3");

  if (values.contains("out")) s.out = text(values["out"], "out");
  if (values.contains("format")) {
    const std::string f = text(values["format"], "format");
    if (f == "csv") {
      s.format = Format::kCsv;
    } else if (f == "json") {
      s.format = Format::kJson;
    } else {
      usage("--format", "--format must be csv or json");
    }
  }
  s.tol_scale = get_real("tol-scale", 1.0);
  if (!(s.tol_scale > 0)) usage("--tol-scale", "--tol-scale must be > 0");
  const std::size_t threads = get_count("threads", 1);
  if (threads < 1 || threads > 1024) usage("--threads", "--threads must be in [1, 1024]");
  s.threads = static_cast<unsigned>(threads);
  return s;
}

bool parse_scenario(const std::vector<std::string>& args, Scenario& out, std::string& info) {
  CLI::App app{"Closed-form nonstatic coherent light waves", "nonstatic"};
  app.set_version_flag("--version", std::string(kVersion));

  std::string subject;
  std::string subject_help = "one of:";
  for (const auto& s : subjects()) subject_help += " " + s;
  app.add_option("subject", subject, subject_help);
  std::string config;
  app.add_option("--config", config, "JSON scenario or manifest; flags override its values");

  std::vector<std::pair<const Key*, CLI::Option*>> options;
  for (const Key& k : kKeys) options.emplace_back(&k, app.add_option(flag_of(k.name), k.help));

  // Name unknown flags ourselves so the error points at them.
  for (const auto& a : args) {
    if (a.rfind("--", 0) != 0 || a.size() == 2) continue;
    const std::string name = a.substr(2, a.find('=') - 2);
    if (name != "help" && name != "version" && name != "config" && !find_key(name)) {
      usage("--" + name, "unknown flag --" + name);
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    info = app.help();
    return false;
  } catch (const CLI::CallForVersion&) {
    info = std::string(kVersion) + "\n";
    return false;
  } catch (const CLI::ParseError& e) {
    usage("", e.what());
  }

  json values = json::object();
  if (!config.empty()) {
    std::ifstream in(config);
    if (!in) usage("--config", "cannot read " + config);
    try {
      in >> values;
    } catch (const json::exception& e) {
      usage("--config", config + ": " + e.what());
    }
    if (values.is_object() && values.contains("scenario")) values = values["scenario"];
  }
  if (!subject.empty()) values["subject"] = subject;
  for (const auto& [key, opt] : options) {
    if (opt->count() == 0) continue;
    const std::string raw = opt->as<std::string>();
    try {
      switch (key->kind) {
        case Kind::kReal: {
          std::size_t used = 0;
          const double v = std::stod(raw, &used);
          if (used != raw.size()) throw std::invalid_argument(raw);
          values[key->name] = v;
          break;
        }
        case Kind::kCount: {
          std::size_t used = 0;
          const long long v = std::stoll(raw, &used);
          if (used != raw.size() || v < 0) throw std::invalid_argument(raw);
          values[key->name] = static_cast<std::size_t>(v);
          break;
        }
        case Kind::kText:
          values[key->name] = raw;
          break;
      }
    } catch (const std::logic_error&) {
      usage(flag_of(key->name), "invalid value '" + raw + "' for " + flag_of(key->name));
    }
  }
  out = resolve_scenario(values);
  return true;
}

}  // namespace nonstatic::cli
