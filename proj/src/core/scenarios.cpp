#include "core/scenarios.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "core/dynamics.hpp"
#include "core/lindblad.hpp"
#include "core/topo_bath.hpp"
#include "core/units.hpp"

namespace skyrmech {

namespace u = units;
using nlohmann::ordered_json;

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"fig2", "fig3", "fig4", "fig5b", "fig6",
                                              "fig7", "fig8", "budget"};
  return names;
}

SkyrmionMaterial material_from(const Config& c) {
  SkyrmionMaterial m;
  m.j1_mev = c.number("material.j1_mev");
  m.j2_mev = c.number("material.j2_mev");
  m.lattice_a_nm = c.number("material.lattice_a_nm");
  m.field_h_tesla = c.number("material.field_h_t");
  m.anisotropy_k_mev = c.number("material.anisotropy_k_mev");
  m.spin_sbar = c.number("material.spin_sbar");
  m.efield_v_per_m = c.number("material.efield_v_per_m");
  m.polarization_c_per_m = c.number("material.polarization_c_per_m");
  m.lande_g = c.number("material.lande_g");
  return m;
}

CoefficientOptions coefficient_options_from(const Config& c) {
  CoefficientOptions o;
  const auto& conv = c.text("material.kappa_convention");
  o.kappa_convention = conv == "literal"      ? KappaConvention::Literal
                       : conv == "area_ratio" ? KappaConvention::AreaRatio
                                              : KappaConvention::Numeric;
  o.kappa_numeric = u::two_pi * 1e9 * c.number("material.kappa_numeric_ghz");
  o.measure = c.text("material.radial_measure") == "area" ? RadialMeasure::Area
                                                         : RadialMeasure::Radial;
  o.quadrature_cutoff = c.number("material.quadrature_cutoff");
  return o;
}

TipGeometry tip_from(const Config& c) {
  TipGeometry t;
  t.r_a = c.number("tip.r_a_nm") * u::nm;
  t.r_b = c.number("tip.r_b_nm") * u::nm;
  t.h_tip = c.number("tip.h_tip_nm") * u::nm;
  t.s_nm = c.number("tip.s_nm") * u::nm;
  t.mu0_ms = c.number("tip.mu0_ms_t");
  return t;
}

CantileverGeometry cantilever_from(const Config& c) {
  CantileverGeometry g;
  g.length_l = c.number("cantilever.length_um") * u::um;
  g.width_w = c.number("cantilever.width_um") * u::um;
  g.thickness_t = c.number("cantilever.thickness_um") * u::um;
  g.density = c.number("cantilever.density_kg_per_m3");
  g.youngs = c.number("cantilever.youngs_pa");
  return g;
}

MassConvention mass_convention_from(const Config& c) {
  return c.text("cantilever.mass_convention") == "geometric" ? MassConvention::Geometric
                                                             : MassConvention::TipModal;
}

DriveElectrode electrode_from(const Config& c, double omega_m) {
  DriveElectrode e;
  e.area_s = c.number("electrode.area_um2") * u::um * u::um;
  e.gap_d = c.number("electrode.gap_nm") * u::nm;
  e.eps_r = c.number("electrode.eps_r");
  e.v0 = c.number("electrode.v0_v");
  e.vp = c.number("electrode.vp_v");
  e.omega_e = omega_m;
  return e;
}

namespace {

double hop_at(const Config& c, double z0, double voltage, double r = 0.0) {
  return hopping_rate(voltage, c.number("hopping.cap_c_ff") * u::femtofarad,
                      wire_capacitance(c.number("hopping.spacing_um") * u::um),
                      c.number("hopping.gap_h_nm") * u::nm, z0, r)
      .bare_g;
}

}  // namespace

CouplingBudget coupling_budget(const Config& c, MassConvention convention) {
  CouplingBudget b;
  const auto cant = cantilever_from(c);
  b.f_m_hz = cantilever_frequency(cant);
  b.omega_m = u::two_pi * b.f_m_hz;
  const auto zpm = zero_point_motion(cant, b.omega_m, convention);
  b.mass = zpm.mass;
  b.z0 = zpm.z0;
  const auto tip = tip_from(c);
  const double z = c.number("tip.h_ts_nm") * u::nm;
  b.bz = bz_on_axis(tip, z);
  b.gradient = std::abs(gradient_on_axis(tip, z));
  b.lambda = bare_coupling(b.z0, b.gradient, c.number("material.spin_sbar"),
                           c.number("material.lande_g"));
  b.cooperativity = cooperativity(b.lambda, u::mhz_to_angular(c.number("budget.gamma_m_mhz")),
                                  u::mhz_to_angular(c.number("budget.gamma_sky_mhz")));
  b.hop_g_1v = hop_at(c, b.z0, 1.0);
  b.hop_g_10v = hop_at(c, b.z0, 10.0);
  b.hop_g = hop_at(c, b.z0, c.number("hopping.voltage_u_v"));
  return b;
}

std::vector<double> parse_value_spec(const std::string& spec) {
  auto bad = [&] { fail(ErrorCode::ConfigError, "bad value list '" + spec + "'"); };
  auto to_d = [&](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) bad();
    return v;
  };
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(p);
    if (parts.size() != 3) bad();
    const double a = to_d(parts[0]), b = to_d(parts[1]);
    char* end = nullptr;
    const long n = std::strtol(parts[2].c_str(), &end, 10);
    if (parts[2].empty() || *end != '\0' || n < 1 || n > 100000) bad();
    if (n == 1) return {a};
    for (long i = 0; i < n; ++i) out.push_back(a + (b - a) * i / (n - 1));
    return out;
  }
  std::stringstream ss(spec);
  std::string p;
  while (std::getline(ss, p, ',')) out.push_back(to_d(p));
  if (out.empty()) bad();
  return out;
}

namespace {

std::vector<double> linspace(double a, double b, long n) {
  require(n >= 1, "linspace: need at least one point");
  if (n == 1) return {a};
  std::vector<double> v(n);
  for (long i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

struct Context {
  const Config& cfg;
  std::string out_dir;
  RunManifest manifest;
  ordered_json settings = ordered_json::object();

  Context(const Config& c, std::string dir) : cfg(c), out_dir(std::move(dir)) {}
  void emit(const CsvTable& table) {
    write_artifact(out_dir, table.name + ".csv", table.render(), manifest);
  }
  void emit_json(const std::string& name, const ordered_json& j) {
    write_artifact(out_dir, name, j.dump(2) + "\n", manifest);
  }
  void note(std::string w) { manifest.warnings.push_back(std::move(w)); }
};

// ---------------------------------------------------------------- fig2

double lambda_for(const TipGeometry& tip, double z, double z0, const Config& c) {
  return bare_coupling(z0, std::abs(gradient_on_axis(tip, z)), c.number("material.spin_sbar"),
                       c.number("material.lande_g"));
}

void fig2a_rows(Context& ctx, const std::vector<double>& h_ts_nm) {
  const auto& c = ctx.cfg;
  const auto tip = tip_from(c);
  const auto cant = cantilever_from(c);
  const double omega_m = u::two_pi * cantilever_frequency(cant);
  const double z0 = zero_point_motion(cant, omega_m, mass_convention_from(c)).z0;
  const double gm = u::two_pi * 1e3 * c.number("fig2.gamma_m_khz");
  const double gs = u::mhz_to_angular(c.number("fig2.gamma_sky_mhz"));
  std::vector<std::array<double, 3>> rows(h_ts_nm.size());
  parallel_for(static_cast<int>(h_ts_nm.size()), [&](int i) {
    const double lam = lambda_for(tip, h_ts_nm[i] * u::nm, z0, c);
    rows[i] = {h_ts_nm[i], u::angular_to_hz(lam), cooperativity(lam, gm, gs)};
  });
  CsvTable t{"fig2a", {"h_ts_nm", "lambda_ts_hz", "cooperativity"}, {"nm", "Hz", "1"}, {}};
  for (const auto& r : rows) t.add({r[0], r[1], r[2]});
  ctx.emit(t);
  ctx.settings["fig2_gamma_m_hz"] = c.number("fig2.gamma_m_khz") * 1e3;
  ctx.settings["fig2_gamma_sky_hz"] = c.number("fig2.gamma_sky_mhz") * 1e6;
  ctx.settings["quadrature_rel_tol"] = 1e-9;
}

void fig2_shape(Context& ctx) {
  const auto& c = ctx.cfg;
  const auto base = tip_from(c);
  const auto cant = cantilever_from(c);
  const double omega_m = u::two_pi * cantilever_frequency(cant);
  const double z0 = zero_point_motion(cant, omega_m, mass_convention_from(c)).z0;
  const double z = c.number("tip.h_ts_nm") * u::nm;
  const long n = c.integer("fig2.shape_points");
  const auto ra = linspace(c.number("fig2.r_a_min_nm"), c.number("fig2.r_a_max_nm"), n);
  const auto ht = linspace(c.number("fig2.h_tip_min_nm"), c.number("fig2.h_tip_max_nm"), n);
  const auto rb = linspace(c.number("fig2.r_b_min_nm"), c.number("fig2.r_b_max_nm"), n);

  std::vector<double> grid_b(n * n, NAN), grid_c(n * n, NAN);
  parallel_for(static_cast<int>(n * n), [&](int k) {
    const long i = k / n, j = k % n;
    TipGeometry t = base;
    t.r_a = ra[i] * u::nm;
    t.h_tip = ht[j] * u::nm;
    if (t.r_a <= t.r_b) grid_b[k] = u::angular_to_hz(lambda_for(t, z, z0, c));
    t = base;
    t.r_a = ra[i] * u::nm;
    t.r_b = rb[j] * u::nm;
    if (t.r_a <= t.r_b) grid_c[k] = u::angular_to_hz(lambda_for(t, z, z0, c));
  });
  CsvTable b{"fig2b", {"r_a_nm", "h_tip_nm", "lambda_ts_hz"}, {"nm", "nm", "Hz"}, {}};
  CsvTable cc{"fig2c", {"r_a_nm", "r_b_nm", "lambda_ts_hz"}, {"nm", "nm", "Hz"}, {}};
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      b.add({ra[i], ht[j], grid_b[i * n + j]});
      cc.add({ra[i], rb[j], grid_c[i * n + j]});
    }
  ctx.emit(b);
  ctx.emit(cc);
}

void run_fig2(Context& ctx) {
  const auto& c = ctx.cfg;
  fig2a_rows(ctx, linspace(c.number("fig2.h_ts_min_nm"), c.number("fig2.h_ts_max_nm"),
                           c.integer("fig2.h_ts_points")));
  fig2_shape(ctx);
}

// ---------------------------------------------------------------- fig3

IntegratorOptions integrator_from(const Config& c) {
  IntegratorOptions o;
  o.rtol = c.number("dynamics.rtol");
  o.atol = c.number("dynamics.atol");
  return o;
}

CsvTable rabi_trace(const Config& c, const std::string& name, double r, bool rwa) {
  const double dm = c.number("dynamics.fig3_delta_m_over_lambda");
  const auto frame = squeeze_frame_from_r(dm, r, 1.0);
  const int n_max = static_cast<int>(c.integer("dynamics.fig3_n_max"));
  LindbladSpec spec;
  spec.hamiltonian =
      build_rabi_hamiltonian(frame.delta_m_eff, frame.delta_m_eff, frame.lambda_eff, n_max, rwa);
  const std::vector<int> dims{2, n_max};
  DenseVec psi = DenseVec::Zero(2 * n_max);
  psi(0) = 1.0;  // |e, 0>
  const std::vector<Observable> obs{{"p_e", embed(excited_projector(), 0, dims)},
                                    {"n_phonon", embed(number_op(n_max), 1, dims)}};
  const auto times =
      linspace(0.0, c.number("dynamics.fig3_t_max"), c.integer("dynamics.fig3_points"));
  const auto res = lindblad_evolve(spec, pure_state(psi), times, obs, integrator_from(c));
  CsvTable t{name, {"t", "p_e", "n_phonon"}, {"1/lambda_bar", "1", "1"}, {}};
  for (size_t i = 0; i < times.size(); ++i)
    t.add({times[i], res.trace("p_e")[i], res.trace("n_phonon")[i]});
  return t;
}

void run_fig3(Context& ctx) {
  const auto& c = ctx.cfg;
  const double dm = c.number("dynamics.fig3_delta_m_over_lambda");
  CsvTable a{"fig3a",
             {"r", "lambda_eff", "delta_m_eff", "lambda_eff_over_g_c", "regime"},
             {"1", "lambda_bar", "lambda_bar", "1", "-"},
             {}};
  for (double r : linspace(0.0, c.number("squeeze.r_max"), c.integer("squeeze.r_points"))) {
    const auto f = squeeze_frame_from_r(dm, r, 1.0);
    const double gc = critical_coupling(f.delta_m_eff, f.delta_m_eff);
    a.add({r, f.lambda_eff, f.delta_m_eff, f.lambda_eff / gc,
           std::string(to_string(coupling_regime(f.lambda_eff, f.delta_m_eff, f.delta_m_eff)))});
  }
  ctx.emit(a);

  CsvTable b{"fig3b", {"omega_e_over_delta_m", "r"}, {"1", "1"}, {}};
  for (double x : linspace(-0.99, 0.99, c.integer("squeeze.ratio_points")))
    b.add({x, squeeze_frame(1.0, x, 1.0).r});
  ctx.emit(b);

  std::vector<CsvTable> panels(2);
  parallel_for(2, [&](int i) {
    panels[i] = i == 0 ? rabi_trace(c, "fig3c", c.number("dynamics.fig3c_r"), true)
                       : rabi_trace(c, "fig3d", c.number("dynamics.fig3d_r"), false);
  });
  for (const auto& p : panels) ctx.emit(p);
  ctx.settings["rtol"] = c.number("dynamics.rtol");
  ctx.settings["atol"] = c.number("dynamics.atol");
  ctx.settings["fock_n_max"] = c.integer("dynamics.fig3_n_max");
  ctx.settings["fig3c_coupling"] = "rwa";
  ctx.settings["fig3d_coupling"] = "full_rabi";
  ctx.settings["initial_state"] = "|e,0>";
}

// ---------------------------------------------------------------- fig4

CsvTable fig4_trace(const Config& c, const std::string& name, double r, bool dephasing) {
  const double lam = squeeze_frame_from_r(1.0, r, 1.0).lambda_eff;
  const double dm_eff = c.number("dynamics.fig4_delta_m_over_lambda_eff") * lam;
  const int n_max = static_cast<int>(c.integer("dynamics.fig4_n_max"));
  const double gs = c.number("dynamics.fig4_gamma_sky_over_lambda");
  const double gm = c.number("dynamics.fig4_gamma_m_over_lambda");
  const std::vector<int> dims{2, 2, n_max};
  LindbladSpec spec;
  spec.hamiltonian = build_two_qubit_hamiltonian(0.0, dm_eff, lam, n_max);
  spec.collapse_ops = {{embed(annihilation(n_max), 2, dims), gm},
                       {embed(sigma_minus(), 0, dims), gs},
                       {embed(sigma_minus(), 1, dims), gs}};
  if (dephasing) {
    spec.collapse_ops.push_back({embed(sigma_z(), 0, dims), gs});
    spec.collapse_ops.push_back({embed(sigma_z(), 1, dims), gs});
  }
  const bool eg = c.text("dynamics.fig4_initial") == "eg";
  DenseVec psi = DenseVec::Zero(4 * n_max);
  psi((eg ? 1 : 2) * n_max) = 1.0;  // qubit index (q1, q2) -> 2 q1 + q2; 0 = e
  const std::vector<Observable> obs{{"p_e1", embed(excited_projector(), 0, dims)},
                                    {"p_e2", embed(excited_projector(), 1, dims)},
                                    {"n_phonon", embed(number_op(n_max), 2, dims)}};
  const auto times =
      linspace(0.0, c.number("dynamics.fig4_t_max"), c.integer("dynamics.fig4_points"));
  const auto res = lindblad_evolve(spec, pure_state(psi), times, obs, integrator_from(c));
  CsvTable t{name, {"t", "p_e1", "p_e2", "n_phonon"}, {"1/lambda_bar", "1", "1", "1"}, {}};
  for (size_t i = 0; i < times.size(); ++i)
    t.add({times[i], res.trace("p_e1")[i], res.trace("p_e2")[i], res.trace("n_phonon")[i]});
  return t;
}

void fig4b_rows(Context& ctx, const std::vector<double>& rs) {
  const double ratio = ctx.cfg.number("dynamics.fig4_delta_m_over_lambda_eff");
  CsvTable t{"fig4b", {"r", "lambda_eff", "lambda_ss"}, {"1", "lambda_bar", "lambda_bar"}, {}};
  for (double r : rs) {
    const double lam = squeeze_frame_from_r(1.0, r, 1.0).lambda_eff;
    t.add({r, lam, sw_effective_two_qubit(lam, ratio * lam).lambda_ss});
  }
  ctx.emit(t);
}

void run_fig4(Context& ctx) {
  const auto& c = ctx.cfg;
  fig4b_rows(ctx, linspace(0.0, c.number("squeeze.r_max"), c.integer("squeeze.r_points")));
  const double rc = c.number("dynamics.fig4c_r"), rd = c.number("dynamics.fig4d_r");
  std::vector<CsvTable> panels(4);
  parallel_for(4, [&](int i) {
    const bool deph = i < 2;
    const std::string suffix = deph ? "" : "-nodephasing";
    panels[i] = fig4_trace(c, (i % 2 == 0 ? "fig4c" : "fig4d") + suffix, i % 2 == 0 ? rc : rd,
                           deph);
  });
  for (const auto& p : panels) ctx.emit(p);
  ctx.settings["rtol"] = c.number("dynamics.rtol");
  ctx.settings["atol"] = c.number("dynamics.atol");
  ctx.settings["fock_n_max"] = c.integer("dynamics.fig4_n_max");
  ctx.settings["initial_state"] = c.text("dynamics.fig4_initial") == "eg" ? "|e,g,0>" : "|g,e,0>";
  ctx.settings["dephasing_variants"] = "fig4c/fig4d include D[sigma_z] at gamma_sky; "
                                       "*-nodephasing omit it";
}

// ---------------------------------------------------------------- fig5b

void fig5b_rows(Context& ctx, const std::vector<double>& volts) {
  const auto& c = ctx.cfg;
  const auto cant = cantilever_from(c);
  const double omega_m = u::two_pi * cantilever_frequency(cant);
  const double z0 = zero_point_motion(cant, omega_m, mass_convention_from(c)).z0;
  const double r = c.number("squeeze.r");
  CsvTable t{"fig5b", {"voltage_u_v", "g_hz", "dressed_g_hz"}, {"V", "Hz", "Hz"}, {}};
  for (double v : volts) {
    const auto link = hopping_rate(v, c.number("hopping.cap_c_ff") * u::femtofarad,
                                   wire_capacitance(c.number("hopping.spacing_um") * u::um),
                                   c.number("hopping.gap_h_nm") * u::nm, z0, r);
    t.add({v, u::angular_to_hz(link.bare_g), u::angular_to_hz(link.dressed_g)});
  }
  ctx.emit(t);
  ctx.settings["z0_m"] = z0;
  ctx.settings["squeeze_r"] = r;
}

void run_fig5b(Context& ctx) {
  const auto& c = ctx.cfg;
  fig5b_rows(ctx, linspace(c.number("hopping.u_min_v"), c.number("hopping.u_max_v"),
                           c.integer("hopping.u_points")));
}

// ---------------------------------------------------------------- fig6

SSHChain chain_from(const Config& c) {
  SSHChain ch;
  ch.hop_g = 1.0;
  ch.dimerization = c.number("ssh.delta");
  ch.validate();
  return ch;
}

void run_fig6(Context& ctx) {
  const auto& c = ctx.cfg;
  const SSHChain base = chain_from(c);
  const auto ks = linspace(-u::pi, u::pi, c.integer("ssh.k_points"));
  CsvTable a{"fig6a", {"k", "omega_plus", "omega_minus"}, {"1/cell", "G", "G"}, {}};
  for (double k : ks) {
    const auto [p, m] = dispersion(base, k);
    a.add({k, p, m});
  }
  ctx.emit(a);

  CsvTable b{"fig6b", {"r", "k", "omega_plus", "omega_minus"}, {"1", "1/cell", "G", "G"}, {}};
  for (double r : linspace(0.0, c.number("ssh.fig6b_r_max"), c.integer("ssh.fig6b_r_count"))) {
    const SSHChain sq = squeezed_chain(base, r);
    for (double k : ks) {
      const auto [p, m] = dispersion(sq, k);
      b.add({r, k, p, m});
    }
  }
  ctx.emit(b);

  if (base.dimerization == 0.0) {
    ctx.note("fig6: delta = 0 is gapless; zero-energy bound-state and vacancy profiles skipped");
    return;
  }
  const int ext = static_cast<int>(c.integer("ssh.j_extent"));
  const double g = c.number("ssh.coupling_over_g");
  QuadratureOptions q;
  q.n_k = static_cast<int>(c.integer("ssh.quadrature_points"));
  CsvTable cd{"fig6cd", {"attach", "j", "sublattice", "abs_c_sq"}, {"-", "cell", "-", "1"}, {}};
  for (Sublattice at : {Sublattice::A, Sublattice::B}) {
    const auto bs = bound_state_quadrature(base, g, 0.0, at, -ext, ext, q);
    for (size_t i = 0; i < bs.cells.size(); ++i) {
      cd.add({std::string(to_string(at)), static_cast<double>(bs.cells[i]), std::string("A"),
              std::norm(bs.amp_a[i])});
      cd.add({std::string(to_string(at)), static_cast<double>(bs.cells[i]), std::string("B"),
              std::norm(bs.amp_b[i])});
    }
  }
  ctx.emit(cd);

  // Vacancy mapping: open chain, A site of the middle cell removed.
  SSHChain open = base;
  open.boundary = Boundary::Open;
  open.n_cells = static_cast<int>(c.integer("ssh.vacancy_cells"));
  const int mid = open.n_cells / 2;
  const auto vac = vacancy_edge_state(open, {mid, Sublattice::A});
  const auto bs = bound_state_quadrature(base, g, 0.0, Sublattice::A, -mid, open.n_cells - 1 - mid, q);
  const double site_norm = 1.0 - std::norm(bs.qubit_amplitude);
  CsvTable ef{"fig6ef",
              {"j", "sublattice", "vacancy_weight", "bound_state_weight"},
              {"cell", "-", "1", "1"},
              {}};
  for (size_t i = 0; i < vac.sites.size(); ++i) {
    const auto& s = vac.sites[i];
    const size_t bi = static_cast<size_t>(s.cell);
    const double bw =
        (s.sub == Sublattice::A ? std::norm(bs.amp_a[bi]) : std::norm(bs.amp_b[bi])) / site_norm;
    ef.add({static_cast<double>(s.cell - mid), std::string(to_string(s.sub)),
            vac.amplitudes(static_cast<Eigen::Index>(i)) * vac.amplitudes(static_cast<Eigen::Index>(i)),
            bw});
  }
  ctx.emit(ef);
  ctx.settings["quadrature_points"] = q.n_k;
  ctx.settings["coupling_over_g"] = g;
  ctx.settings["vacancy_cells"] = open.n_cells;
}

// ---------------------------------------------------------------- fig7

void run_fig7(Context& ctx) {
  const auto& c = ctx.cfg;
  SSHChain base = chain_from(c);
  base.n_cells = static_cast<int>(c.integer("fig7.ring_cells"));
  const double e = c.number("fig7.energy_over_g");
  const double g0 = c.number("ssh.coupling_over_g");
  struct Panel {
    const char* label;
    double e, r;
  };
  const Panel panels[] = {{"a", e, c.number("fig7.r_low")},
                          {"b", e, c.number("fig7.r_high")},
                          {"c", -e, c.number("fig7.r_low")},
                          {"d", -e, c.number("fig7.r_high")}};
  CsvTable prof{"fig7",
                {"panel", "r", "e_bs", "j", "sublattice", "abs_c_sq"},
                {"-", "1", "G0", "cell", "-", "1"},
                {}};
  CsvTable chi{"fig7-chirality", {"panel", "r", "e_bs", "chirality"}, {"-", "1", "G0", "1"}, {}};
  for (const auto& p : panels) {
    const SSHChain ch = squeezed_chain(base, p.r);
    const auto bs = bound_state_ring(ch, g0 * std::exp(p.r), p.e, Sublattice::A);
    for (size_t i = 0; i < bs.cells.size(); ++i) {
      prof.add({std::string(p.label), p.r, p.e, static_cast<double>(bs.cells[i]), std::string("A"),
                std::norm(bs.amp_a[i])});
      prof.add({std::string(p.label), p.r, p.e, static_cast<double>(bs.cells[i]), std::string("B"),
                std::norm(bs.amp_b[i])});
    }
    chi.add({std::string(p.label), p.r, p.e, bs.chirality});
  }
  ctx.emit(prof);
  ctx.emit(chi);
  ctx.settings["ring_cells"] = base.n_cells;
  ctx.settings["protocol"] = "G = G0 exp(2r), coupling = coupling0 exp(r), E_BS fixed in G0 units";
}

// ---------------------------------------------------------------- fig8

std::vector<SiteRef> fig8_placements(const std::string& which) {
  if (which == "a") return {{2, Sublattice::B}, {3, Sublattice::A}, {4, Sublattice::B}};
  return {{2, Sublattice::A}, {3, Sublattice::B}, {4, Sublattice::A}};
}

std::string site_label(SiteRef s) { return std::string(to_string(s.sub)) + std::to_string(s.cell); }

void run_fig8(Context& ctx) {
  const auto& c = ctx.cfg;
  SSHChain ch = chain_from(c);
  ch.n_cells = static_cast<int>(c.integer("fig8.n_cells"));
  const std::string which = c.text("fig8.case");
  const auto places = fig8_placements(which);
  const double g = c.number("fig8.coupling_over_g");
  const bool negative = ch.dimerization < 0.0;
  const std::string panel = which == "a" ? (negative ? "e" : "c") : (negative ? "f" : "d");

  SpaceSpec space{3, std::vector<int>(ch.n_sites(), 2), Restriction::SingleExcitation};
  const auto h = build_array_hamiltonian(ch, places, g, 0.0, space);
  DenseVec psi = DenseVec::Zero(h.dim());
  psi(2) = 1.0;  // Sky2 excited
  const auto times = linspace(0.0, c.number("fig8.t_max"), c.integer("fig8.points"));
  const auto res = single_excitation_evolve(h.dense(), psi, times);
  CsvTable t{"fig8" + panel, {"t", "p_sky1", "p_sky2", "p_sky3"}, {"1/G", "1", "1", "1"}, {}};
  for (size_t i = 0; i < times.size(); ++i)
    t.add({times[i], res.populations[1][i], res.populations[2][i], res.populations[3][i]});
  ctx.emit(t);

  if (ch.dimerization == 0.0) {
    ctx.note("fig8: delta = 0 has no Markovian exchange table; fig8-effective skipped");
  } else {
    CsvTable e{"fig8-effective",
               {"qubit_i", "qubit_j", "site_i", "site_j", "g_ij", "exchange_half_period"},
               {"-", "-", "-", "-", "G", "1/G"},
               {}};
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const double gij = effective_coupling(ch, g, places[i], places[j]);
        e.add({static_cast<double>(i + 1), static_cast<double>(j + 1), site_label(places[i]),
               site_label(places[j]), gij,
               gij == 0.0 ? INFINITY : u::pi / (2.0 * std::abs(gij))});
      }
    ctx.emit(e);
  }
  ctx.settings["panel"] = panel;
  ctx.settings["space"] = "single_excitation";
  ctx.settings["dissipation"] = "none";
  ctx.settings["initial_state"] = "|g,e,g>|vac>";
}

// ---------------------------------------------------------------- budget

void run_budget(Context& ctx) {
  const auto& c = ctx.cfg;
  const auto conv = mass_convention_from(c);
  const auto b = coupling_budget(c, conv);
  const auto other = coupling_budget(
      c, conv == MassConvention::TipModal ? MassConvention::Geometric : MassConvention::TipModal);
  const std::string other_tag = conv == MassConvention::TipModal ? "geometric" : "tip_modal";

  CsvTable t{"budget",
             {"quantity", "value", "unit", "paper_target", "ratio"},
             {"-", "-", "-", "-", "1"},
             {}};
  auto row = [&](const std::string& q, double v, const std::string& unit, double target) {
    if (std::isnan(target))
      t.add({q, v, unit, std::string(""), std::string("")});
    else
      t.add({q, v, unit, target, v / target});
  };
  row("f_m", b.f_m_hz, "Hz", 10e6);
  row("mass", b.mass, "kg", NAN);
  row("z0", b.z0, "m", NAN);
  row("bz", b.bz, "T", NAN);
  row("gradient", b.gradient, "T/m", 1.74e7);
  row("lambda_ts", u::angular_to_hz(b.lambda), "Hz", 3.56e6);
  row("cooperativity", b.cooperativity, "1", 507.0);
  row("hopping_g_1v", u::angular_to_hz(b.hop_g_1v), "Hz", 0.12e6);
  row("hopping_g_10v", u::angular_to_hz(b.hop_g_10v), "Hz", 12.33e6);
  row("mass_" + other_tag, other.mass, "kg", NAN);
  row("z0_" + other_tag, other.z0, "m", NAN);
  row("lambda_ts_" + other_tag, u::angular_to_hz(other.lambda), "Hz", 3.56e6);
  row("hopping_g_1v_" + other_tag, u::angular_to_hz(other.hop_g_1v), "Hz", 0.12e6);
  const auto material = material_from(c);
  row("skyrmion_radius", skyrmion_radius_nm(material), "nm", 3.0);
  ctx.emit(t);

  ordered_json q;
  try {
    Warnings w;
    const auto coeffs = qubit_coefficients(material, coefficient_options_from(c), &w);
    const auto spec = diagonalize_qubit(coeffs, static_cast<int>(c.integer("material.s_max")));
    std::vector<double> e_hz;
    for (double e : spec.energies) e_hz.push_back(u::angular_to_hz(e));
    q["status"] = "ok";
    q["kappa_hz"] = u::angular_to_hz(coeffs.kappa);
    q["hz_hz"] = u::angular_to_hz(coeffs.hz);
    q["eps_hz"] = u::angular_to_hz(coeffs.eps);
    q["energies_hz"] = e_hz;
    q["omega_q_hz"] = u::angular_to_hz(spec.omega_q);
    q["omega_ex_hz"] = u::angular_to_hz(spec.omega_ex);
    q["anharmonic"] = spec.anharmonic;
    q["paper_target_omega_q_hz"] = 2e9;
    for (auto& s : w) ctx.note("qubit: " + s);
  } catch (const Error& e) {
    q["status"] = "unavailable";
    q["error"] = std::string(to_string(e.code()));
    q["reason"] = e.what();
    ctx.note(std::string("qubit spectrum not computed: ") + e.what());
  }
  ctx.emit_json("qubit.json", q);
  ctx.settings["mass_convention"] = c.text("cantilever.mass_convention");
  ctx.settings["tip_distance_nm"] = c.number("tip.h_ts_nm");
  ctx.settings["quadrature_rel_tol"] = 1e-9;
}

using Runner = void (*)(Context&);

Runner runner_for(const std::string& scenario) {
  if (scenario == "fig2") return run_fig2;
  if (scenario == "fig3") return run_fig3;
  if (scenario == "fig4") return run_fig4;
  if (scenario == "fig5b") return run_fig5b;
  if (scenario == "fig6") return run_fig6;
  if (scenario == "fig7") return run_fig7;
  if (scenario == "fig8") return run_fig8;
  if (scenario == "budget") return run_budget;
  std::string all;
  for (const auto& n : scenario_names()) all += (all.empty() ? "" : ", ") + n;
  fail(ErrorCode::ConfigError, "unknown scenario '" + scenario + "' (expected one of " + all + ")");
}

template <class F>
void guarded(const std::string& scenario, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigError || e.code() == ErrorCode::IoError ||
        e.code() == ErrorCode::ScenarioFailure)
      throw;
    fail(ErrorCode::ScenarioFailure,
         scenario + ": " + std::string(to_string(e.code())) + ": " + e.what());
  }
}

void finish(Context& ctx, const std::string& scenario,
            std::chrono::steady_clock::time_point start) {
  ctx.manifest.scenario = scenario;
  ctx.manifest.version = SKYRMECH_VERSION;
  ctx.manifest.config_json = ctx.cfg.to_json_text();
  ctx.manifest.config_hash = ctx.cfg.hash();
  ctx.manifest.settings_json = ctx.settings.dump();
  ctx.manifest.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  RunManifest copy = ctx.manifest;
  write_artifact(ctx.out_dir, "manifest.json", copy.to_json_text(), copy);
}

}  // namespace

RunManifest run_scenario(const Config& config, const std::string& scenario,
                         const std::string& out_dir) {
  const auto start = std::chrono::steady_clock::now();
  const Runner runner = runner_for(scenario);
  Context ctx(config, out_dir);
  guarded(scenario, [&] { runner(ctx); });
  finish(ctx, scenario, start);
  return ctx.manifest;
}

RunManifest run_sweep(const Config& config, const std::string& scenario, const std::string& axis,
                      const std::vector<double>& values, const std::string& out_dir) {
  const auto start = std::chrono::steady_clock::now();
  runner_for(scenario);
  if (!config.is_numeric(axis))
    fail(ErrorCode::ConfigError, "sweep axis '" + axis + "' is not a numeric config key");
  if (values.empty()) fail(ErrorCode::ConfigError, "sweep needs at least one value");
  for (double v : values) Config(config).set_number(axis, v);  // validates integrality

  Context ctx(config, out_dir);
  ctx.settings["axis"] = axis;
  ctx.settings["values"] = values;
  const bool native = (scenario == "fig2" && axis == "tip.h_ts_nm") ||
                      (scenario == "fig5b" && axis == "hopping.voltage_u_v") ||
                      (scenario == "fig4" && axis == "squeeze.r");
  guarded(scenario, [&] {
    if (native) {
      ctx.settings["mode"] = "rows";
      if (scenario == "fig2") fig2a_rows(ctx, values);
      if (scenario == "fig5b") fig5b_rows(ctx, values);
      if (scenario == "fig4") fig4b_rows(ctx, values);
      return;
    }
    ctx.settings["mode"] = "subdirectories";
    for (double v : values) {
      Config point = config;
      point.set_number(axis, v);
      const std::string sub = axis + "=" + format_real(v);
      const auto m = run_scenario(point, scenario, (std::filesystem::path(out_dir) / sub).string());
      for (const auto& f : m.files) ctx.manifest.files.push_back({sub + "/" + f.name, f.sha256, f.bytes});
      for (const auto& w : m.warnings) ctx.note(sub + ": " + w);
    }
  });
  finish(ctx, scenario, start);
  return ctx.manifest;
}

}  // namespace skyrmech
