#include "core/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "core/output.hpp"

namespace skyrmech {

namespace {

ParamSpec num(const char* key, double v, const char* help) {
  return {key, ParamKind::Number, v, {}, help};
}
ParamSpec integer(const char* key, long v, const char* help) {
  return {key, ParamKind::Integer, v, {}, help};
}
ParamSpec text(const char* key, const char* v, std::vector<std::string> choices, const char* help) {
  return {key, ParamKind::Text, std::string(v), std::move(choices), help};
}

std::vector<ParamSpec> build_schema() {
  return {
      num("material.j1_mev", 1.0, "nearest-neighbour exchange J1"),
      num("material.j2_mev", 20.0, "frustrating exchange J2 (sets ell = sqrt(J2/J1))"),
      num("material.lattice_a_nm", 0.5, "lattice constant"),
      num("material.field_h_t", 0.035, "applied field along z"),
      num("material.anisotropy_k_mev", 0.15, "easy-axis anisotropy K"),
      num("material.spin_sbar", 20.0, "effective spin S"),
      num("material.efield_v_per_m", 80.0, "electric field amplitude"),
      num("material.polarization_c_per_m", 0.2, "polarization P_E"),
      num("material.lande_g", 2.0, "g factor"),
      text("material.kappa_convention", "literal", {"literal", "area_ratio", "numeric"},
           "kappa normalization"),
      num("material.kappa_numeric_ghz", 0.0, "kappa/2pi when kappa_convention = numeric"),
      text("material.radial_measure", "area", {"area", "radial"}, "measure of radial integrals"),
      num("material.quadrature_cutoff", 200.0, "upper limit of radial integrals (rho units)"),
      integer("material.s_max", 20, "charge-basis truncation"),

      num("tip.r_a_nm", 40.0, "upper (sample-side) radius"),
      num("tip.r_b_nm", 160.0, "lower radius"),
      num("tip.h_tip_nm", 180.0, "magnetized height"),
      num("tip.s_nm", 10.0, "non-magnetic cap"),
      num("tip.mu0_ms_t", 2.4, "mu0 Ms"),
      num("tip.h_ts_nm", 20.0, "tip to skyrmion distance"),

      num("cantilever.length_um", 5.6, "length l"),
      num("cantilever.width_um", 0.05, "width w"),
      num("cantilever.thickness_um", 0.04, "thickness t"),
      num("cantilever.density_kg_per_m3", 2329.0, "mass density"),
      num("cantilever.youngs_pa", 1.3e11, "Young's modulus"),
      text("cantilever.mass_convention", "tip_modal", {"tip_modal", "geometric"},
           "mass entering z0"),

      num("budget.gamma_m_mhz", 0.1, "phonon loss gamma_m/2pi (squeeze-amplified)"),
      num("budget.gamma_sky_mhz", 1.0, "qubit loss gamma_sky/2pi"),

      num("fig2.gamma_m_khz", 1.0, "phonon loss used for the Fig. 2 cooperativity"),
      num("fig2.gamma_sky_mhz", 1.0, "qubit loss used for the Fig. 2 cooperativity"),
      num("fig2.h_ts_min_nm", 10.0, "distance sweep start"),
      num("fig2.h_ts_max_nm", 100.0, "distance sweep end"),
      integer("fig2.h_ts_points", 91, "distance sweep points"),
      num("fig2.r_a_min_nm", 10.0, "r_a sweep start"),
      num("fig2.r_a_max_nm", 80.0, "r_a sweep end"),
      num("fig2.h_tip_min_nm", 60.0, "h_tip sweep start"),
      num("fig2.h_tip_max_nm", 300.0, "h_tip sweep end"),
      num("fig2.r_b_min_nm", 80.0, "r_b sweep start"),
      num("fig2.r_b_max_nm", 240.0, "r_b sweep end"),
      integer("fig2.shape_points", 15, "points per shape axis"),

      num("electrode.area_um2", 1.0, "electrode area S"),
      num("electrode.gap_nm", 100.0, "electrode gap d"),
      num("electrode.eps_r", 1.0, "relative permittivity"),
      num("electrode.v0_v", 1.0, "static voltage V0"),
      num("electrode.vp_v", 0.0, "pump voltage amplitude Vp"),

      num("squeeze.r", 0.0, "squeeze parameter for single-point outputs"),
      num("squeeze.r_max", 5.0, "upper end of r axes"),
      integer("squeeze.r_points", 51, "points on r axes"),
      integer("squeeze.ratio_points", 199, "points on the Omega_E/Delta_m axis"),

      num("dynamics.rtol", 1e-9, "integrator relative tolerance"),
      num("dynamics.atol", 1e-11, "integrator absolute tolerance"),
      integer("dynamics.fig3_n_max", 40, "Fock truncation for Fig. 3"),
      num("dynamics.fig3_delta_m_over_lambda", 20.0, "Delta_m in units of lambda_bar"),
      num("dynamics.fig3_t_max", 20.0, "window in 1/lambda_bar"),
      integer("dynamics.fig3_points", 401, "output points"),
      num("dynamics.fig3c_r", 0.0, "squeeze for panel c (RWA)"),
      num("dynamics.fig3d_r", 1.5, "squeeze for panel d (full Rabi)"),
      integer("dynamics.fig4_n_max", 6, "Fock truncation for Fig. 4"),
      num("dynamics.fig4_delta_m_over_lambda_eff", 10.0, "Delta_m_eff in units of lambda_eff"),
      num("dynamics.fig4_gamma_sky_over_lambda", 0.5, "gamma_sky in units of lambda_bar"),
      num("dynamics.fig4_gamma_m_over_lambda", 0.1, "gamma_m in units of lambda_bar"),
      num("dynamics.fig4_t_max", 5.0, "window in 1/lambda_bar"),
      integer("dynamics.fig4_points", 401, "output points"),
      num("dynamics.fig4c_r", 0.0, "squeeze for panel c"),
      num("dynamics.fig4d_r", 4.0, "squeeze for panel d"),
      text("dynamics.fig4_initial", "eg", {"eg", "ge"}, "initial qubit pair state"),

      num("hopping.voltage_u_v", 1.0, "coupling voltage U"),
      num("hopping.cap_c_ff", 0.1, "electrode capacitance C"),
      num("hopping.spacing_um", 100.0, "resonator spacing (C_W = eps0 * spacing)"),
      num("hopping.gap_h_nm", 100.0, "electrode gap h"),
      num("hopping.u_min_v", 1.0, "voltage sweep start"),
      num("hopping.u_max_v", 10.0, "voltage sweep end"),
      integer("hopping.u_points", 10, "voltage sweep points"),

      num("ssh.delta", 0.25, "dimerization"),
      num("ssh.coupling_over_g", 0.4, "qubit-site coupling in units of G"),
      integer("ssh.k_points", 201, "k grid for dispersion output"),
      integer("ssh.quadrature_points", 4096, "k points of bound-state integrals"),
      integer("ssh.j_extent", 10, "cells either side of the attachment in profiles"),
      integer("ssh.vacancy_cells", 40, "open-chain length for the vacancy mapping"),
      num("ssh.fig6b_r_max", 1.0, "largest r in the Fig. 6(b) dispersion family"),
      integer("ssh.fig6b_r_count", 3, "number of r values in Fig. 6(b)"),

      num("fig7.energy_over_g", 1.1, "|E_BS| in units of the unsqueezed G"),
      num("fig7.r_low", 0.0, "squeeze for panels a, c"),
      num("fig7.r_high", 2.0, "squeeze for panels b, d"),
      integer("fig7.ring_cells", 21, "ring length for the finite-ring eigenstate"),

      text("fig8.case", "a", {"a", "b"}, "placement case: a = B2,A3,B4; b = A2,B3,A4"),
      integer("fig8.n_cells", 10, "chain cells"),
      num("fig8.coupling_over_g", 0.1, "qubit-site coupling in units of G"),
      num("fig8.t_max", 1500.0, "window in 1/G"),
      integer("fig8.points", 1501, "output points"),
  };
}

[[noreturn]] void config_error(const std::string& msg) { fail(ErrorCode::ConfigError, msg); }

const ParamSpec& spec_or_throw(const std::string& key) {
  const ParamSpec* p = find_param(key);
  if (!p) config_error("unknown config key '" + key + "'");
  return *p;
}

double parse_double(const std::string& key, const std::string& s) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
    config_error("key '" + key + "': expected a finite number, got '" + s + "'");
  return v;
}

long parse_long(const std::string& key, const std::string& s) {
  errno = 0;
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE)
    config_error("key '" + key + "': expected an integer, got '" + s + "'");
  return v;
}

ConfigValue parse_value(const ParamSpec& p, const std::string& s) {
  switch (p.kind) {
    case ParamKind::Number: return parse_double(p.key, s);
    case ParamKind::Integer: return parse_long(p.key, s);
    case ParamKind::Text:
      if (!p.choices.empty() &&
          std::find(p.choices.begin(), p.choices.end(), s) == p.choices.end()) {
        std::string all;
        for (const auto& c : p.choices) all += (all.empty() ? "" : ", ") + c;
        config_error("key '" + p.key + "': '" + s + "' is not one of {" + all + "}");
      }
      return s;
  }
  config_error("unreachable");
}

}  // namespace

const std::vector<ParamSpec>& config_schema() {
  static const std::vector<ParamSpec> schema = build_schema();
  return schema;
}

const ParamSpec* find_param(const std::string& key) {
  for (const auto& p : config_schema())
    if (p.key == key) return &p;
  return nullptr;
}

Config::Config() {
  for (const auto& p : config_schema()) values_[p.key] = p.default_value;
}

void Config::set(const std::string& key, const std::string& value) {
  values_[key] = parse_value(spec_or_throw(key), value);
}

void Config::set_number(const std::string& key, double value) {
  const ParamSpec& p = spec_or_throw(key);
  if (!std::isfinite(value)) config_error("key '" + key + "': value must be finite");
  if (p.kind == ParamKind::Number) {
    values_[key] = value;
  } else if (p.kind == ParamKind::Integer) {
    if (value != std::round(value))
      config_error("key '" + key + "': integer key given non-integer value");
    values_[key] = static_cast<long>(value);
  } else {
    config_error("key '" + key + "' is not numeric");
  }
}

double Config::number(const std::string& key) const {
  spec_or_throw(key);
  const auto* v = std::get_if<double>(&values_.at(key));
  if (!v) config_error("key '" + key + "' is not a real number");
  return *v;
}

long Config::integer(const std::string& key) const {
  spec_or_throw(key);
  const auto* v = std::get_if<long>(&values_.at(key));
  if (!v) config_error("key '" + key + "' is not an integer");
  return *v;
}

const std::string& Config::text(const std::string& key) const {
  spec_or_throw(key);
  const auto* v = std::get_if<std::string>(&values_.at(key));
  if (!v) config_error("key '" + key + "' is not text");
  return *v;
}

bool Config::is_numeric(const std::string& key) const {
  const ParamSpec* p = find_param(key);
  return p && p->kind != ParamKind::Text;
}

double Config::numeric(const std::string& key) const {
  const ParamSpec& p = spec_or_throw(key);
  if (p.kind == ParamKind::Number) return number(key);
  if (p.kind == ParamKind::Integer) return static_cast<double>(integer(key));
  config_error("key '" + key + "' is not numeric");
}

namespace {

std::pair<std::string, std::string> split_key(const std::string& key) {
  const auto dot = key.find('.');
  return {key.substr(0, dot), key.substr(dot + 1)};
}

}  // namespace

std::string Config::to_json_text(int indent) const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [key, value] : values_) {
    const auto [section, name] = split_key(key);
    std::visit([&, &section = section, &name = name](const auto& v) { j[section][name] = v; },
               value);
  }
  return j.dump(indent);
}

std::string Config::hash() const { return sha256_hex(to_json_text()); }

Config Config::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    config_error(std::string("config JSON: ") + e.what());
  }
  if (!j.is_object()) config_error("config JSON: top level must be an object");
  Config cfg;
  for (const auto& [section, body] : j.items()) {
    if (!body.is_object()) config_error("config JSON: section '" + section + "' must be an object");
    for (const auto& [name, v] : body.items()) {
      const std::string key = section + "." + name;
      const ParamSpec& p = spec_or_throw(key);
      if (p.kind == ParamKind::Number && v.is_number()) {
        cfg.values_[key] = v.get<double>();
      } else if (p.kind == ParamKind::Integer && v.is_number_integer()) {
        cfg.values_[key] = v.get<long>();
      } else if (p.kind == ParamKind::Text && v.is_string()) {
        cfg.values_[key] = parse_value(p, v.get<std::string>());
      } else {
        config_error("config JSON: key '" + key + "' has the wrong type");
      }
    }
  }
  return cfg;
}

Config Config::from_yaml_text(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    config_error(std::string("config YAML: ") + e.what());
  }
  Config cfg;
  if (root.IsNull()) return cfg;
  if (!root.IsMap()) config_error("config YAML: top level must be a mapping of sections");
  for (const auto& section : root) {
    const std::string sname = section.first.as<std::string>();
    if (!section.second.IsMap())
      config_error("config YAML: section '" + sname + "' must be a mapping");
    for (const auto& entry : section.second) {
      const std::string key = sname + "." + entry.first.as<std::string>();
      const ParamSpec& p = spec_or_throw(key);
      if (!entry.second.IsScalar()) config_error("config YAML: key '" + key + "' must be a scalar");
      cfg.values_[key] = parse_value(p, entry.second.Scalar());
    }
  }
  return cfg;
}

Config Config::from_yaml_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_yaml_text(ss.str());
}

}  // namespace skyrmech
