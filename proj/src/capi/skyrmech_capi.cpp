#include "skyrmech/skyrmech.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/config.hpp"
#include "core/device.hpp"
#include "core/qubit_spectrum.hpp"
#include "core/scenarios.hpp"
#include "core/tip_field.hpp"
#include "core/topo_bath.hpp"

struct skm_config {
  skyrmech::Config cfg;
};

struct skm_manifest {
  skyrmech::RunManifest m;
};

namespace {

thread_local std::string g_last_error;

skm_status map_code(skyrmech::ErrorCode c) {
  using skyrmech::ErrorCode;
  switch (c) {
    case ErrorCode::InvalidArgument: return SKM_INVALID_ARGUMENT;
    case ErrorCode::NonConvergedQuadrature: return SKM_NON_CONVERGED_QUADRATURE;
    case ErrorCode::TruncationNotConverged: return SKM_TRUNCATION_NOT_CONVERGED;
    case ErrorCode::OutOfSlab: return SKM_OUT_OF_SLAB;
    case ErrorCode::ModulusOutOfRange: return SKM_MODULUS_OUT_OF_RANGE;
    case ErrorCode::SqueezeDiverges: return SKM_SQUEEZE_DIVERGES;
    case ErrorCode::InvalidRegimeInput: return SKM_INVALID_REGIME_INPUT;
    case ErrorCode::PlacementCollision: return SKM_PLACEMENT_COLLISION;
    case ErrorCode::StepSizeUnderflow: return SKM_STEP_SIZE_UNDERFLOW;
    case ErrorCode::TraceDrift: return SKM_TRACE_DRIFT;
    case ErrorCode::NotExcitationConserving: return SKM_NOT_EXCITATION_CONSERVING;
    case ErrorCode::EnergyInBand: return SKM_ENERGY_IN_BAND;
    case ErrorCode::ConfigError: return SKM_CONFIG;
    case ErrorCode::ScenarioFailure: return SKM_SCENARIO;
    case ErrorCode::IoError: return SKM_IO;
  }
  return SKM_INTERNAL;
}

template <class F>
skm_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return SKM_OK;
  } catch (const skyrmech::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SKM_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SKM_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return SKM_INTERNAL;
  }
}

skm_status null_arg(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return SKM_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

skyrmech::TipGeometry to_tip(const skm_tip_geometry* t) {
  skyrmech::TipGeometry g;
  g.r_a = t->r_a;
  g.r_b = t->r_b;
  g.h_tip = t->h_tip;
  g.s_nm = t->s_cap;
  g.mu0_ms = t->mu0_ms;
  return g;
}

skyrmech::Sublattice to_sub(int s) {
  skyrmech::require(s == 0 || s == 1, "sublattice must be 0 (A) or 1 (B)");
  return s == 0 ? skyrmech::Sublattice::A : skyrmech::Sublattice::B;
}

}  // namespace

extern "C" {

const char* skm_version(void) { return SKYRMECH_VERSION; }

const char* skm_last_error(void) { return g_last_error.c_str(); }

const char* skm_status_name(skm_status status) {
  switch (status) {
    case SKM_OK: return "OK";
    case SKM_INVALID_ARGUMENT: return "InvalidArgument";
    case SKM_CONFIG: return "ConfigError";
    case SKM_SCENARIO: return "ScenarioFailure";
    case SKM_NON_CONVERGED_QUADRATURE: return "NonConvergedQuadrature";
    case SKM_TRUNCATION_NOT_CONVERGED: return "TruncationNotConverged";
    case SKM_OUT_OF_SLAB: return "OutOfSlab";
    case SKM_MODULUS_OUT_OF_RANGE: return "ModulusOutOfRange";
    case SKM_SQUEEZE_DIVERGES: return "SqueezeDiverges";
    case SKM_INVALID_REGIME_INPUT: return "InvalidRegimeInput";
    case SKM_PLACEMENT_COLLISION: return "PlacementCollision";
    case SKM_STEP_SIZE_UNDERFLOW: return "StepSizeUnderflow";
    case SKM_TRACE_DRIFT: return "TraceDrift";
    case SKM_NOT_EXCITATION_CONSERVING: return "NotExcitationConserving";
    case SKM_ENERGY_IN_BAND: return "EnergyInBand";
    case SKM_IO: return "IoError";
    case SKM_INTERNAL: return "Internal";
  }
  return "Unknown";
}

void skm_string_free(char* s) { std::free(s); }

skm_status skm_config_create(skm_config** out) {
  if (!out) return null_arg("out");
  return guard([&] { *out = new skm_config{}; });
}

skm_status skm_config_load_file(const char* path, skm_config** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  return guard([&] { *out = new skm_config{skyrmech::Config::from_yaml_file(path)}; });
}

skm_status skm_config_load_string(const char* text, skm_config** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return guard([&] { *out = new skm_config{skyrmech::Config::from_yaml_text(text)}; });
}

skm_status skm_config_clone(const skm_config* cfg, skm_config** out) {
  if (!cfg) return null_arg("cfg");
  if (!out) return null_arg("out");
  return guard([&] { *out = new skm_config{cfg->cfg}; });
}

void skm_config_destroy(skm_config* cfg) { delete cfg; }

skm_status skm_config_set(skm_config* cfg, const char* key, const char* value) {
  if (!cfg) return null_arg("cfg");
  if (!key) return null_arg("key");
  if (!value) return null_arg("value");
  return guard([&] { cfg->cfg.set(key, value); });
}

skm_status skm_config_get_number(const skm_config* cfg, const char* key, double* out) {
  if (!cfg) return null_arg("cfg");
  if (!key) return null_arg("key");
  if (!out) return null_arg("out");
  return guard([&] { *out = cfg->cfg.numeric(key); });
}

skm_status skm_config_to_json(const skm_config* cfg, char** out_json) {
  if (!cfg) return null_arg("cfg");
  if (!out_json) return null_arg("out_json");
  return guard([&] { *out_json = dup_string(cfg->cfg.to_json_text(2)); });
}

skm_status skm_config_hash(const skm_config* cfg, char out_hex[65]) {
  if (!cfg) return null_arg("cfg");
  if (!out_hex) return null_arg("out_hex");
  return guard([&] {
    const std::string h = cfg->cfg.hash();
    std::memcpy(out_hex, h.c_str(), 65);
  });
}

int skm_config_equal(const skm_config* a, const skm_config* b) {
  return a && b && a->cfg == b->cfg ? 1 : 0;
}

size_t skm_config_key_count(void) { return skyrmech::config_schema().size(); }

skm_status skm_config_key(size_t index, const char** key, const char** help) {
  const auto& schema = skyrmech::config_schema();
  if (index >= schema.size()) {
    g_last_error = "config key index out of range";
    return SKM_INVALID_ARGUMENT;
  }
  if (key) *key = schema[index].key.c_str();
  if (help) *help = schema[index].help.c_str();
  return SKM_OK;
}

size_t skm_scenario_count(void) { return skyrmech::scenario_names().size(); }

const char* skm_scenario_name(size_t index) {
  const auto& names = skyrmech::scenario_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

skm_status skm_run_scenario(const skm_config* cfg, const char* scenario, const char* out_dir,
                            skm_manifest** out) {
  if (!cfg) return null_arg("cfg");
  if (!scenario) return null_arg("scenario");
  if (!out_dir) return null_arg("out_dir");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = new skm_manifest{skyrmech::run_scenario(cfg->cfg, scenario, out_dir)};
  });
}

skm_status skm_sweep(const skm_config* cfg, const char* scenario, const char* axis,
                     const double* values, size_t n_values, const char* out_dir,
                     skm_manifest** out) {
  if (!cfg) return null_arg("cfg");
  if (!scenario) return null_arg("scenario");
  if (!axis) return null_arg("axis");
  if (!values && n_values) return null_arg("values");
  if (!out_dir) return null_arg("out_dir");
  if (!out) return null_arg("out");
  return guard([&] {
    std::vector<double> v(values, values + n_values);
    *out = new skm_manifest{skyrmech::run_sweep(cfg->cfg, scenario, axis, v, out_dir)};
  });
}

skm_status skm_parse_values(const char* spec, double* values, size_t capacity, size_t* count) {
  if (!spec) return null_arg("spec");
  if (!count) return null_arg("count");
  return guard([&] {
    const auto v = skyrmech::parse_value_spec(spec);
    *count = v.size();
    if (values)
      for (size_t i = 0; i < v.size() && i < capacity; ++i) values[i] = v[i];
  });
}

skm_status skm_manifest_to_json(const skm_manifest* m, char** out_json) {
  if (!m) return null_arg("manifest");
  if (!out_json) return null_arg("out_json");
  return guard([&] { *out_json = dup_string(m->m.to_json_text()); });
}

size_t skm_manifest_file_count(const skm_manifest* m) { return m ? m->m.files.size() : 0; }

skm_status skm_manifest_file(const skm_manifest* m, size_t index, const char** name,
                             const char** sha256) {
  if (!m) return null_arg("manifest");
  if (index >= m->m.files.size()) {
    g_last_error = "manifest file index out of range";
    return SKM_INVALID_ARGUMENT;
  }
  if (name) *name = m->m.files[index].name.c_str();
  if (sha256) *sha256 = m->m.files[index].sha256.c_str();
  return SKM_OK;
}

size_t skm_manifest_warning_count(const skm_manifest* m) { return m ? m->m.warnings.size() : 0; }

const char* skm_manifest_warning(const skm_manifest* m, size_t index) {
  return m && index < m->m.warnings.size() ? m->m.warnings[index].c_str() : nullptr;
}

void skm_manifest_destroy(skm_manifest* m) { delete m; }

skm_status skm_tip_bz_on_axis(const skm_tip_geometry* tip, double z, double* out) {
  if (!tip) return null_arg("tip");
  if (!out) return null_arg("out");
  return guard([&] { *out = skyrmech::bz_on_axis(to_tip(tip), z); });
}

skm_status skm_tip_gradient_on_axis(const skm_tip_geometry* tip, double z, double* out) {
  if (!tip) return null_arg("tip");
  if (!out) return null_arg("out");
  return guard([&] { *out = skyrmech::gradient_on_axis(to_tip(tip), z); });
}

skm_status skm_tip_bz_off_axis(const skm_tip_geometry* tip, double rho, double z, double* out) {
  if (!tip) return null_arg("tip");
  if (!out) return null_arg("out");
  return guard([&] { *out = skyrmech::bz_off_axis(to_tip(tip), rho, z); });
}

skm_status skm_squeeze_frame(double delta_m, double omega_e, double lambda_bar, skm_squeeze* out) {
  if (!out) return null_arg("out");
  return guard([&] {
    const auto f = skyrmech::squeeze_frame(delta_m, omega_e, lambda_bar);
    *out = {f.r, f.delta_m_eff, f.lambda_eff};
  });
}

skm_status skm_qubit_spectrum(double kappa, double hz, double eps, int s_max, double* energies,
                              size_t capacity, size_t* count) {
  if (!count) return null_arg("count");
  return guard([&] {
    const auto s = skyrmech::diagonalize_qubit({kappa, hz, eps}, s_max);
    *count = s.energies.size();
    if (energies)
      for (size_t i = 0; i < s.energies.size() && i < capacity; ++i) energies[i] = s.energies[i];
  });
}

skm_status skm_ssh_dispersion(double hop_g, double delta, double k, double* omega_plus,
                              double* omega_minus) {
  if (!omega_plus) return null_arg("omega_plus");
  if (!omega_minus) return null_arg("omega_minus");
  return guard([&] {
    skyrmech::SSHChain c;
    c.hop_g = hop_g;
    c.dimerization = delta;
    const auto [p, m] = skyrmech::dispersion(c, k);
    *omega_plus = p;
    *omega_minus = m;
  });
}

skm_status skm_ssh_effective_coupling(double hop_g, double delta, double coupling, int cell_i,
                                      int sub_i, int cell_j, int sub_j, double* out) {
  if (!out) return null_arg("out");
  return guard([&] {
    skyrmech::SSHChain c;
    c.hop_g = hop_g;
    c.dimerization = delta;
    *out = skyrmech::effective_coupling(c, coupling, {cell_i, to_sub(sub_i)},
                                        {cell_j, to_sub(sub_j)});
  });
}

}  // extern "C"
