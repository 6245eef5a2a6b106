#include "nonstatic/run.hpp"

#include <fstream>
#include <memory>

#include "nonstatic/errors.hpp"
#include "nonstatic/observables.hpp"
#include "nonstatic/parallel.hpp"
#include "nonstatic/table.hpp"
#include "nonstatic/validate.hpp"
#include "nonstatic/version.hpp"
#include "nonstatic/wavefunctions.hpp"
#include "nonstatic/wigner.hpp"

namespace nonstatic::cli {

namespace {

using Columns = std::vector<std::string>;

Columns columns_for(const std::string& subject) {
  if (subject == "density-q" || subject == "fock-density") return {"t", "q", "density"};
  if (subject == "density-p") return {"t", "p", "density"};
  if (subject == "energies") return {"t", "Ek", "Ep", "Etot"};
  if (subject == "fluctuations") return {"t", "dq", "dp", "product"};
  if (subject == "wigner") return {"t", "q", "p", "W"};
  if (subject == "ellipse") {
    return {"t", "center_q", "center_p", "angle", "radius_major", "radius_minor"};
  }
  if (subject == "mandel-q") return {"t", "mean", "variance", "Q"};
  if (subject == "nonstaticity") return {"t", "f", "fdot", "fddot", "T", "zeta", "kind"};
  return {"check", "value", "tolerance", "status"};
}

// Densities for every time, computed in parallel and written in order.
template <class Field>
void write_fields(const Scenario& s, const std::vector<double>& times, const QuadratureGrid& grid,
                  Field field, TableWriter& table) {
  std::vector<std::vector<double>> dens(times.size());
  parallel_for(times.size(), s.threads, [&](std::size_t k) { dens[k] = field(times[k]).density(); });
  for (std::size_t k = 0; k < times.size(); ++k) {
    for (std::size_t i = 0; i < grid.size(); ++i) table.row({times[k], grid[i], dens[k][i]});
  }
}

struct Outcome {
  int exit_code = kExitOk;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

Outcome produce(const Scenario& s, TableWriter& table) {
  const ModelParams& p = s.params;
  const auto times = time_grid(s.t_from, s.t_to, s.nt);
  const QuadratureGrid qg(Axis::kQ, s.q_min, s.q_max, s.nq);
  const QuadratureGrid pg(Axis::kP, s.p_min, s.p_max, s.np);
  const auto amp_at = [&](double t) { return amplitude(p, s.a0, s.theta, t); };
  Outcome outcome;

  if (s.subject == "density-q") {
    write_fields(s, times, qg, [&](double t) { return coherent_q(p, amp_at(t), qg, t); }, table);
  } else if (s.subject == "density-p") {
    write_fields(s, times, pg, [&](double t) { return coherent_p(p, amp_at(t), pg, t); }, table);
  } else if (s.subject == "fock-density") {
    write_fields(s, times, qg, [&](double t) { return fock_q(p, s.fock_n, qg, t); }, table);
  } else if (s.subject == "energies" || s.subject == "fluctuations") {
    const ObservableSeries o = observable_series(p, s.a0, s.theta, times, s.threads);
    for (std::size_t k = 0; k < times.size(); ++k) {
      if (s.subject == "energies") {
        table.row({times[k], o.Ek[k], o.Ep[k], o.Etot[k]});
      } else {
        table.row({times[k], o.dq[k], o.dp[k], o.product[k]});
      }
    }
  } else if (s.subject == "mandel-q") {
    for (double t : times) {
      const auto amp = amp_at(t);
      const PhotonStatistics st = photon_statistics(bogoliubov(p, t), amp.value);
      table.row({t, st.mean, st.variance, mandel_q(p, amp, t)});
    }
  } else if (s.subject == "nonstaticity") {
    for (double t : times) {
      const NonstaticSample x = eval_f(p, t);
      table.row({t, x.f, x.fdot, x.fddot, x.T, x.zeta, std::string(to_string(x.kind))});
    }
  } else if (s.subject == "wigner") {
    PhaseSpaceGrid frame;
    frame.q_min = s.q_min;
    frame.q_max = s.q_max;
    frame.p_min = s.p_min;
    frame.p_max = s.p_max;
    frame.nq = s.nq;
    frame.np = s.np;
    for (double t : times) {
      frame.t = t;
      const PhaseSpaceGrid w = wigner_closed(p, amp_at(t), frame, s.threads);
      for (std::size_t i = 0; i < w.nq; ++i) {
        for (std::size_t j = 0; j < w.np; ++j) table.row({t, w.q(i), w.p(j), w.at(i, j)});
      }
    }
  } else if (s.subject == "ellipse") {
    for (const EllipseSummary& e : ellipse_track(p, s.a0, s.theta, times)) {
      const Cell angle = e.angle ? Cell(*e.angle) : Cell();
      table.row({e.t, e.center_q, e.center_p, angle, e.radius_major, e.radius_minor});
    }
    if (s.a0 > 0 && !p.is_static()) {
      const RotationPeriods r = rotation_periods(p, s.a0, s.theta);
      outcome.extra["rotation_period_center"] = r.center;
      outcome.extra["rotation_period_bar"] = r.bar;
      outcome.extra["rotation_sense"] = r.bar_sense < 0 ? "clockwise" : "counterclockwise";
    }
  } else {
    bool failed = false;
    for (const CheckResult& c : validate_scenario(s)) {
      table.row({c.name, c.value, c.tolerance, std::string(to_string(c.status))});
      failed = failed || c.status == CheckStatus::kFail;
    }
    outcome.extra["passed"] = !failed;
    if (failed) outcome.exit_code = kExitValidation;
  }
  return outcome;
}

}  // namespace

nlohmann::ordered_json manifest(const Scenario& s, const std::vector<std::string>& columns,
                                std::size_t rows) {
  nlohmann::ordered_json m;
  m["schema_version"] = 1;
  m["library"] = "nonstatic";
  m["library_version"] = kVersion;
  m["scenario"] = s.to_json();
  m["derived"] = {{"c3", s.params.c3()},
                  {"D", nonstaticity_measure(s.params)},
                  {"f_min", f_min(s.params)},
                  {"f_max", f_max(s.params)}};
  m["output"] = {{"format", s.format == Format::kCsv ? "csv" : "json"},
                 {"columns", columns},
                 {"rows", rows}};
  return m;
}

int run(const Scenario& s, std::ostream& data) {
  std::unique_ptr<std::ofstream> file;
  if (!s.out.empty()) {
    file = std::make_unique<std::ofstream>(s.out, std::ios::binary | std::ios::trunc);
    if (!*file) throw CliError(kExitUsage, "io", "--out", "cannot write " + s.out);
  }
  std::ostream& os = file ? *file : data;
  const Columns columns = columns_for(s.subject);
  Outcome outcome;
  std::size_t rows = 0;
  try {
    TableWriter table(os, s.format == Format::kJson, s.subject, columns);
    outcome = produce(s, table);
    table.finish();
    rows = table.rows();
  } catch (const AccuracyError& e) {
    throw CliError(kExitAccuracy, to_string(e.kind()), "", e.what());
  } catch (const Error& e) {
    throw CliError(kExitUsage, to_string(e.kind()), "", e.what());
  }
  os.flush();
  if (!os) throw CliError(kExitUsage, "io", "--out", "write failed");

  if (file) {
    auto m = manifest(s, columns, rows);
    for (const auto& [key, value] : outcome.extra.items()) m["derived"][key] = value;
    std::ofstream mf(s.out + ".manifest.json", std::ios::binary | std::ios::trunc);
    mf << m.dump(2) << '\n';
    if (!mf) throw CliError(kExitUsage, "io", "--out", "cannot write manifest for " + s.out);
  }
  return outcome.exit_code;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Scenario s;
    std::string info;
    if (!parse_scenario(args, s, info)) {
      out << info;
      return kExitOk;
    }
    const int code = run(s, out);
    if (code == kExitValidation) {
      err << CliError(code, "validation", "", "one or more invariants failed").to_json().dump() << '\n';
    }
    return code;
  } catch (const CliError& e) {
    err << e.to_json().dump() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << CliError(kExitUsage, "internal", "", e.what()).to_json().dump() << '\n';
    return kExitUsage;
  }
}

}  // namespace nonstatic::cli
