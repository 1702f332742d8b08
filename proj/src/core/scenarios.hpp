// scenarios.hpp: named figure scenarios and sweeps driven by a Config.

#pragma once

#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/device.hpp"
#include "core/output.hpp"
#include "core/qubit_spectrum.hpp"
#include "core/tip_field.hpp"

namespace skyrmech {

const std::vector<std::string>& scenario_names();

/// Writes the scenario's CSV/JSON files plus manifest.json into out_dir.
/// Numeric failures surface as ErrorCode::ScenarioFailure naming the
/// scenario and the original failure class.
RunManifest run_scenario(const Config& config, const std::string& scenario,
                         const std::string& out_dir);

/// One row (native axes) or one sub-directory per value.
RunManifest run_sweep(const Config& config, const std::string& scenario, const std::string& axis,
                      const std::vector<double>& values, const std::string& out_dir);

/// "a:b:n" (n evenly spaced points, inclusive) or "v1,v2,...".
std::vector<double> parse_value_spec(const std::string& spec);

SkyrmionMaterial material_from(const Config& config);
CoefficientOptions coefficient_options_from(const Config& config);
TipGeometry tip_from(const Config& config);
CantileverGeometry cantilever_from(const Config& config);
MassConvention mass_convention_from(const Config& config);
DriveElectrode electrode_from(const Config& config, double omega_m);

/// Section VI coupling budget (angular frequencies, SI lengths).
struct CouplingBudget {
  double f_m_hz = 0.0;
  double omega_m = 0.0;
  double mass = 0.0;
  double z0 = 0.0;
  double bz = 0.0;
  double gradient = 0.0;
  double lambda = 0.0;
  double cooperativity = 0.0;
  double hop_g_1v = 0.0;
  double hop_g_10v = 0.0;
  double hop_g = 0.0;  // at hopping.voltage_u_v
};

CouplingBudget coupling_budget(const Config& config, MassConvention convention);

}  // namespace skyrmech
