// skyrmech: scenario runner. Only the public C interface is used here.

#include <skyrmech/skyrmech.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct ConfigDeleter {
  void operator()(skm_config* c) const { skm_config_destroy(c); }
};
struct ManifestDeleter {
  void operator()(skm_manifest* m) const { skm_manifest_destroy(m); }
};
using ConfigPtr = std::unique_ptr<skm_config, ConfigDeleter>;
using ManifestPtr = std::unique_ptr<skm_manifest, ManifestDeleter>;

// Exit codes: 0 ok, 2 config/usage, 3 numeric/scenario failure, 4 io, 1 other.
int exit_code(skm_status s) {
  switch (s) {
    case SKM_OK: return 0;
    case SKM_CONFIG:
    case SKM_INVALID_ARGUMENT: return 2;
    case SKM_IO: return 4;
    case SKM_INTERNAL: return 1;
    default: return 3;
  }
}

int report(skm_status s, const char* what) {
  std::fprintf(stderr, "skyrmech: %s failed [%s]: %s\n", what, skm_status_name(s),
               skm_last_error());
  return exit_code(s);
}

struct Common {
  std::string config_path;
  std::vector<std::string> sets;
  std::string out_dir;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("-c,--config", c.config_path, "YAML config file");
  cmd->add_option("--set", c.sets, "override, key=value (repeatable)");
  cmd->add_option("-o,--out", c.out_dir, "output directory (default out/<scenario>)");
}

skm_status build_config(const Common& c, ConfigPtr& out) {
  skm_config* raw = nullptr;
  skm_status s = c.config_path.empty() ? skm_config_create(&raw)
                                       : skm_config_load_file(c.config_path.c_str(), &raw);
  if (s != SKM_OK) return s;
  out.reset(raw);
  for (const auto& kv : c.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::fprintf(stderr, "skyrmech: --set expects key=value, got '%s'\n", kv.c_str());
      return SKM_CONFIG;
    }
    s = skm_config_set(out.get(), kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
    if (s != SKM_OK) return s;
  }
  return SKM_OK;
}

void summarize(const skm_manifest* m, const std::string& dir) {
  const size_t n = skm_manifest_file_count(m);
  for (size_t i = 0; i < n; ++i) {
    const char* name = nullptr;
    const char* sha = nullptr;
    skm_manifest_file(m, i, &name, &sha);
    std::printf("%s/%s  %.12s\n", dir.c_str(), name, sha);
  }
  std::printf("%s/manifest.json\n", dir.c_str());
  for (size_t i = 0; i < skm_manifest_warning_count(m); ++i)
    std::fprintf(stderr, "warning: %s\n", skm_manifest_warning(m, i));
}

std::string self_dir(const char* argv0) {
  std::error_code ec;
  auto p = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (ec) p = std::filesystem::absolute(argv0, ec);
  return p.parent_path().string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skyrmion qubit / nanomechanics scenario runner"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(skm_version()));

  Common run_opts;
  std::string run_scenario;
  std::string delta, fig8_case;
  auto* run = app.add_subcommand("run", "run one scenario");
  run->add_option("scenario", run_scenario, "fig2|fig3|fig4|fig5b|fig6|fig7|fig8|budget")
      ->required();
  add_common(run, run_opts);
  run->add_option("--delta", delta, "shortcut for --set ssh.delta=<value>");
  run->add_option("--case", fig8_case, "shortcut for --set fig8.case=<a|b>");

  Common sweep_opts;
  std::string sweep_scenario, axis, values_spec;
  auto* sweep = app.add_subcommand("sweep", "sweep one numeric config key");
  sweep->add_option("scenario", sweep_scenario, "scenario to sweep")->required();
  sweep->add_option("--axis", axis, "config key, e.g. tip.h_ts_nm")->required();
  sweep->add_option("--values", values_spec, "a:b:n or v1,v2,...")->required();
  add_common(sweep, sweep_opts);

  std::string acceptance_path;
  auto* check = app.add_subcommand("check", "run the acceptance suite");
  check->add_option("--binary", acceptance_path, "path to skyrmech_acceptance");

  auto* keys = app.add_subcommand("keys", "list configuration keys");

  CLI11_PARSE(app, argc, argv);

  if (*run) {
    if (!delta.empty()) run_opts.sets.push_back("ssh.delta=" + delta);
    if (!fig8_case.empty()) run_opts.sets.push_back("fig8.case=" + fig8_case);
    ConfigPtr cfg;
    if (auto s = build_config(run_opts, cfg); s != SKM_OK) return report(s, "config");
    const std::string out = run_opts.out_dir.empty() ? "out/" + run_scenario : run_opts.out_dir;
    skm_manifest* raw = nullptr;
    if (auto s = skm_run_scenario(cfg.get(), run_scenario.c_str(), out.c_str(), &raw); s != SKM_OK)
      return report(s, "run");
    ManifestPtr m(raw);
    summarize(m.get(), out);
    return 0;
  }

  if (*sweep) {
    ConfigPtr cfg;
    if (auto s = build_config(sweep_opts, cfg); s != SKM_OK) return report(s, "config");
    size_t n = 0;
    if (auto s = skm_parse_values(values_spec.c_str(), nullptr, 0, &n); s != SKM_OK)
      return report(s, "--values");
    std::vector<double> values(n);
    skm_parse_values(values_spec.c_str(), values.data(), n, &n);
    const std::string out =
        sweep_opts.out_dir.empty() ? "out/sweep-" + sweep_scenario : sweep_opts.out_dir;
    skm_manifest* raw = nullptr;
    if (auto s = skm_sweep(cfg.get(), sweep_scenario.c_str(), axis.c_str(), values.data(), n,
                           out.c_str(), &raw);
        s != SKM_OK)
      return report(s, "sweep");
    ManifestPtr m(raw);
    summarize(m.get(), out);
    return 0;
  }

  if (*check) {
    const std::string bin =
        acceptance_path.empty() ? self_dir(argv[0]) + "/skyrmech_acceptance" : acceptance_path;
    if (!std::filesystem::exists(bin)) {
      std::fprintf(stderr, "skyrmech: acceptance binary not found at %s\n", bin.c_str());
      return 4;
    }
    const std::string cmd = "'" + bin + "'";
    const int rc = std::system(cmd.c_str());
    if (rc == -1) return 4;
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : 1;
  }

  if (*keys) {
    for (size_t i = 0; i < skm_config_key_count(); ++i) {
      const char* key = nullptr;
      const char* help = nullptr;
      skm_config_key(i, &key, &help);
      std::printf("%-40s %s\n", key, help);
    }
    return 0;
  }
  return 0;
}
