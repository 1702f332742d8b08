/* skyrmech.h: C interface to the skyrmion-mechanics simulation library.
 *
 * All functions return an skm_status; on failure skm_last_error() holds a
 * message for the calling thread. Objects are opaque and owned by the
 * caller once created; release them with the matching *_destroy function.
 * Strings returned through char** are released with skm_string_free.
 */
#ifndef SKYRMECH_SKYRMECH_H
#define SKYRMECH_SKYRMECH_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef SKYRMECH_BUILDING_LIBRARY
#    define SKM_API __declspec(dllexport)
#  else
#    define SKM_API __declspec(dllimport)
#  endif
#else
#  define SKM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum skm_status {
  SKM_OK = 0,
  SKM_INVALID_ARGUMENT = 1,
  SKM_CONFIG = 2,
  SKM_SCENARIO = 3,
  SKM_NON_CONVERGED_QUADRATURE = 4,
  SKM_TRUNCATION_NOT_CONVERGED = 5,
  SKM_OUT_OF_SLAB = 6,
  SKM_MODULUS_OUT_OF_RANGE = 7,
  SKM_SQUEEZE_DIVERGES = 8,
  SKM_INVALID_REGIME_INPUT = 9,
  SKM_PLACEMENT_COLLISION = 10,
  SKM_STEP_SIZE_UNDERFLOW = 11,
  SKM_TRACE_DRIFT = 12,
  SKM_NOT_EXCITATION_CONSERVING = 13,
  SKM_ENERGY_IN_BAND = 14,
  SKM_IO = 15,
  SKM_INTERNAL = 16
} skm_status;

typedef struct skm_config skm_config;
typedef struct skm_manifest skm_manifest;

SKM_API const char* skm_version(void);
SKM_API const char* skm_last_error(void);
SKM_API const char* skm_status_name(skm_status status);
SKM_API void skm_string_free(char* s);

/* ---- configuration ---- */
SKM_API skm_status skm_config_create(skm_config** out);
SKM_API skm_status skm_config_load_file(const char* path, skm_config** out);
/* YAML text; JSON produced by skm_config_to_json is accepted as well. */
SKM_API skm_status skm_config_load_string(const char* text, skm_config** out);
SKM_API skm_status skm_config_clone(const skm_config* cfg, skm_config** out);
SKM_API void skm_config_destroy(skm_config* cfg);
/* key is "section.name"; value is parsed according to the schema. */
SKM_API skm_status skm_config_set(skm_config* cfg, const char* key, const char* value);
SKM_API skm_status skm_config_get_number(const skm_config* cfg, const char* key, double* out);
SKM_API skm_status skm_config_to_json(const skm_config* cfg, char** out_json);
/* 64 hex digits plus terminator. */
SKM_API skm_status skm_config_hash(const skm_config* cfg, char out_hex[65]);
/* 1 if both configs hold identical values, 0 otherwise. */
SKM_API int skm_config_equal(const skm_config* a, const skm_config* b);
SKM_API size_t skm_config_key_count(void);
/* Key name and help text of schema entry `index`. */
SKM_API skm_status skm_config_key(size_t index, const char** key, const char** help);

/* ---- scenarios ---- */
SKM_API size_t skm_scenario_count(void);
SKM_API const char* skm_scenario_name(size_t index);
SKM_API skm_status skm_run_scenario(const skm_config* cfg, const char* scenario,
                                    const char* out_dir, skm_manifest** out);
SKM_API skm_status skm_sweep(const skm_config* cfg, const char* scenario, const char* axis,
                             const double* values, size_t n_values, const char* out_dir,
                             skm_manifest** out);
/* Parses "a:b:n" or "v1,v2,..."; call with values = NULL to get the count. */
SKM_API skm_status skm_parse_values(const char* spec, double* values, size_t capacity,
                                    size_t* count);

SKM_API skm_status skm_manifest_to_json(const skm_manifest* m, char** out_json);
SKM_API size_t skm_manifest_file_count(const skm_manifest* m);
SKM_API skm_status skm_manifest_file(const skm_manifest* m, size_t index, const char** name,
                                     const char** sha256);
SKM_API size_t skm_manifest_warning_count(const skm_manifest* m);
SKM_API const char* skm_manifest_warning(const skm_manifest* m, size_t index);
SKM_API void skm_manifest_destroy(skm_manifest* m);

/* ---- direct evaluators (SI units, angular frequencies) ---- */
typedef struct skm_tip_geometry {
  double r_a, r_b, h_tip, s_cap, mu0_ms;
} skm_tip_geometry;

SKM_API skm_status skm_tip_bz_on_axis(const skm_tip_geometry* tip, double z, double* out);
SKM_API skm_status skm_tip_gradient_on_axis(const skm_tip_geometry* tip, double z, double* out);
SKM_API skm_status skm_tip_bz_off_axis(const skm_tip_geometry* tip, double rho, double z,
                                       double* out);

typedef struct skm_squeeze {
  double r, delta_m_eff, lambda_eff;
} skm_squeeze;

SKM_API skm_status skm_squeeze_frame(double delta_m, double omega_e, double lambda_bar,
                                     skm_squeeze* out);

/* Lowest `capacity` charge-basis energies; *count receives 2*s_max+1. */
SKM_API skm_status skm_qubit_spectrum(double kappa, double hz, double eps, int s_max,
                                      double* energies, size_t capacity, size_t* count);

SKM_API skm_status skm_ssh_dispersion(double hop_g, double delta, double k, double* omega_plus,
                                      double* omega_minus);
/* sublattice: 0 = A, 1 = B. */
SKM_API skm_status skm_ssh_effective_coupling(double hop_g, double delta, double coupling,
                                              int cell_i, int sub_i, int cell_j, int sub_j,
                                              double* out);

#ifdef __cplusplus
}
#endif

#endif
