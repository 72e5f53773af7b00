// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qnmlab/errors.hpp"
#include "qnmlab/greens.hpp"
#include "qnmlab/modevol.hpp"
#include "qnmlab/parallel.hpp"
#include "qnmlab/qnm1d.hpp"
#include "qnmlab/qnm2d.hpp"
#include "qnmlab/structures.hpp"

namespace qnmlab::cli
{

namespace
{

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int default_resolution = 16;
constexpr int ldos_points = 201;

struct RunConfig
{
  std::vector<StructureSpec> structures;
  std::optional<int> resolution;
  std::optional<cplx> guess;
  std::optional<std::vector<double>> radii;
  Point2 probe{};
  std::optional<std::pair<double, double>> nu_range;
  fs::path out = ".";
};

// Raw command-line values before they are merged with a config file.
struct Flags
{
  std::string config;
  std::vector<std::string> presets;
  std::string out = ".";
  std::optional<int> resolution;
  std::string guess, radii, probe, nu_range;
  std::optional<int> threads;
};

std::vector<double> parse_list(const std::string &text, const char *what)
{
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
  {
    const char *begin = item.c_str();
    char *end = nullptr;
    const double v = std::strtod(begin, &end);
    while (end && *end == ' ')
    {
      ++end;
    }
    if (end == begin || *end != '\0')
    {
      throw ConfigError(std::string("cannot parse ") + what + " '" + text + "'");
    }
    values.push_back(v);
  }
  return values;
}

std::vector<double> parse_fixed(const std::string &text, const char *what, std::size_t n)
{
  auto v = parse_list(text, what);
  if (v.size() != n)
  {
    throw ConfigError(std::string(what) + " expects " + std::to_string(n) +
                      " comma-separated numbers");
  }
  return v;
}

std::vector<double> json_numbers(const json &j, const char *key)
{
  try
  {
    return j.at(key).get<std::vector<double>>();
  }
  catch (const json::exception &)
  {
    throw ConfigError(std::string("config field '") + key + "' must be a list of numbers");
  }
}

std::string read_file(const fs::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ConfigError("cannot read config file '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A config file is either a bare structure description or a run description with a
// "structure" object or "preset" name plus optional solver parameters.
void apply_config_file(const fs::path &path, RunConfig &cfg)
{
  const std::string text = read_file(path);
  json j;
  try
  {
    j = json::parse(text);
  }
  catch (const json::parse_error &e)
  {
    throw ConfigError("malformed config JSON: " + std::string(e.what()));
  }
  if (!j.is_object())
  {
    throw ConfigError("config must be a JSON object");
  }
  if (j.contains("type"))
  {
    cfg.structures.push_back(structure_from_json(text));
    return;
  }
  if (j.contains("structure"))
  {
    cfg.structures.push_back(structure_from_json(j.at("structure").dump()));
  }
  if (j.contains("preset"))
  {
    if (!j.at("preset").is_string())
    {
      throw ConfigError("config field 'preset' must be a string");
    }
    cfg.structures.push_back(preset(j.at("preset").get<std::string>()));
  }
  if (j.contains("resolution"))
  {
    if (!j.at("resolution").is_number_integer())
    {
      throw ConfigError("config field 'resolution' must be an integer");
    }
    cfg.resolution = j.at("resolution").get<int>();
  }
  if (j.contains("guess"))
  {
    const auto g = json_numbers(j, "guess");
    if (g.size() != 2)
    {
      throw ConfigError("config field 'guess' must be [re, im]");
    }
    cfg.guess = cplx(g[0], g[1]);
  }
  if (j.contains("radii"))
  {
    cfg.radii = json_numbers(j, "radii");
  }
  if (j.contains("probe"))
  {
    const auto p = json_numbers(j, "probe");
    if (p.size() != 2)
    {
      throw ConfigError("config field 'probe' must be [x, y]");
    }
    cfg.probe = {p[0], p[1]};
  }
  if (j.contains("nu_range"))
  {
    const auto r = json_numbers(j, "nu_range");
    if (r.size() != 2)
    {
      throw ConfigError("config field 'nu_range' must be [lo, hi]");
    }
    cfg.nu_range = std::make_pair(r[0], r[1]);
  }
}

RunConfig build_config(const Flags &flags)
{
  RunConfig cfg;
  if (!flags.config.empty())
  {
    apply_config_file(flags.config, cfg);
  }
  for (const auto &name : flags.presets)
  {
    cfg.structures.push_back(preset(name));
  }
  if (cfg.structures.empty())
  {
    throw ConfigError("no structure given: use --preset NAME or --config PATH");
  }
  if (flags.resolution)
  {
    cfg.resolution = flags.resolution;
  }
  if (cfg.resolution && *cfg.resolution < 1)
  {
    throw ConfigError("--resolution must be a positive integer");
  }
  if (!flags.guess.empty())
  {
    const auto g = parse_list(flags.guess, "--guess");
    if (g.empty() || g.size() > 2)
    {
      throw ConfigError("--guess expects RE or RE,IM");
    }
    cfg.guess = cplx(g[0], g.size() == 2 ? g[1] : 0.0);
  }
  if (flags.radii != "\x01")
  {
    cfg.radii = flags.radii.empty() ? std::vector<double>{} : parse_list(flags.radii, "--radii");
  }
  if (!flags.probe.empty())
  {
    const auto p = parse_fixed(flags.probe, "--probe", 2);
    cfg.probe = {p[0], p[1]};
  }
  if (!flags.nu_range.empty())
  {
    const auto r = parse_fixed(flags.nu_range, "--nu-range", 2);
    cfg.nu_range = std::make_pair(r[0], r[1]);
  }
  if (cfg.nu_range && !(cfg.nu_range->second > cfg.nu_range->first && cfg.nu_range->first > 0.0))
  {
    throw ConfigError("frequency range must satisfy 0 < lo < hi");
  }
  cfg.out = flags.out;
  return cfg;
}

// ---------------------------------------------------------------------------------------
// Output helpers.

std::string sci(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

class CsvWriter
{
public:
  CsvWriter(const fs::path &path, const std::string &header) : path_(path), out_(path)
  {
    if (!out_)
    {
      throw ConfigError("cannot write '" + path.string() + "'");
    }
    out_ << header << '\n';
  }

  void row(std::initializer_list<double> values)
  {
    bool first = true;
    for (double v : values)
    {
      out_ << (first ? "" : ",") << sci(v);
      first = false;
    }
    out_ << '\n';
  }

  const fs::path &path() const { return path_; }

private:
  fs::path path_;
  std::ofstream out_;
};

void write_json(const fs::path &path, const json &j)
{
  std::ofstream out(path);
  if (!out)
  {
    throw ConfigError("cannot write '" + path.string() + "'");
  }
  out << j.dump(2) << '\n';
}

void prepare_dir(const fs::path &dir)
{
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
  {
    throw ConfigError("cannot create output directory '" + dir.string() + "'");
  }
}

json frequency_json(const Qnm2D &mode)
{
  const cplx nu = mode.normalized_frequency();
  return {{"nu_re", nu.real()},
          {"nu_im", nu.imag()},
          {"omega_re", mode.omega.omega.real()},
          {"omega_im", mode.omega.omega.imag()},
          {"q_factor", mode.omega.q_factor()}};
}

// ---------------------------------------------------------------------------------------
// Solver pipelines shared by the commands.

const RodLattice2D &require_lattice(const StructureSpec &spec, const char *command)
{
  if (!spec.is_2d())
  {
    throw ConfigError(std::string(command) + " requires a rod_lattice structure");
  }
  return spec.lattice();
}

struct Solved2D
{
  std::shared_ptr<const ScattererMesh> mesh;
  Qnm2D mode;
};

Solved2D solve_crystallite(const RunConfig &cfg, const RodLattice2D &lattice)
{
  auto mesh = std::make_shared<const ScattererMesh>(lattice, cfg.resolution.value_or(default_resolution));
  const cplx guess = cfg.guess ? *cfg.guess : cplx(seed_scan_2d(lattice, *mesh, SymmetrySector::A1));
  auto mode = find_qnm_2d(lattice, guess, mesh);
  return {mesh, std::move(mode)};
}

int cmd_slab_qnm(const RunConfig &cfg, const StructureSpec &spec, const fs::path &dir,
                 std::ostream &out)
{
  if (!spec.is_1d())
  {
    throw ConfigError("slab-qnm requires a layered_stack structure");
  }
  const auto &stack = spec.stack();
  cplx guess;
  if (cfg.guess)
  {
    guess = *cfg.guess;
  }
  else
  {
    double optical = 0.0;
    for (const auto &l : stack.layers())
    {
      optical += l.thickness * std::sqrt(l.eps);
    }
    const auto seeds = scan_qnm_guesses_1d(stack, 4.0 * pi / std::max(optical, 1e-12));
    if (seeds.empty())
    {
      throw NoConvergence("no resonance found on the real-frequency scan", 0.0, INFINITY);
    }
    guess = seeds.front();
  }
  const auto mode = find_qnm_1d(stack, guess);
  const auto antinode = find_antinode(mode);
  const auto volume = quasinormal_mode_volume(mode, antinode);

  prepare_dir(dir);
  write_json(dir / "qnm.json", {{"command", "slab-qnm"},
                                {"structure", spec.name},
                                {"omega_re", mode.omega.omega.real()},
                                {"omega_im", mode.omega.omega.imag()},
                                {"q_factor", mode.omega.q_factor()},
                                {"antinode", antinode.position},
                                {"n_c", antinode.index},
                                {"v_q_re", volume.v_q.real()},
                                {"v_q_im", volume.v_q.imag()},
                                {"l_eff", volume.v_eff_q}});
  CsvWriter csv(dir / "field.csv", "x,re_f,im_f,abs_f");
  const double len = stack.length();
  constexpr int samples = 401;
  for (int i = 0; i < samples; ++i)
  {
    const double x = -0.5 * len + 2.0 * len * i / (samples - 1);
    const cplx f = mode.value(x);
    csv.row({x, f.real(), f.imag(), std::abs(f)});
  }
  out << (dir / "qnm.json").string() << '\n' << csv.path().string() << '\n';
  return kSuccess;
}

int cmd_crystallite_qnm(const RunConfig &cfg, const StructureSpec &spec, const fs::path &dir,
                        std::ostream &out)
{
  const auto &lattice = require_lattice(spec, "crystallite-qnm");
  const auto solved = solve_crystallite(cfg, lattice);
  const auto &mode = solved.mode;
  const auto antinode = find_antinode(mode);
  const auto volume = quasinormal_mode_volume(mode, antinode);
  const double a = lattice.lattice_constant();

  prepare_dir(dir);
  json j = {{"command", "crystallite-qnm"},
            {"structure", spec.name},
            {"resolution", solved.mesh->resolution()},
            {"cells", solved.mesh->size()},
            {"normalization_radius", mode.normalization_radius},
            {"eigen_residual", mode.eigen_residual},
            {"antinode", {antinode.position.x, antinode.position.y}},
            {"n_c", antinode.index},
            {"v_q_re", volume.v_q.real()},
            {"v_q_im", volume.v_q.imag()},
            {"v_eff_q", volume.v_eff_q},
            {"warnings", mode.warnings}};
  j.update(frequency_json(mode));
  write_json(dir / "qnm.json", j);

  std::vector<Point2> axis;
  constexpr int axis_samples = 481;
  for (int i = 0; i < axis_samples; ++i)
  {
    axis.push_back({a * (-12.0 + 24.0 * i / (axis_samples - 1)), 0.0});
  }
  const auto fx = evaluate_qnm_field(mode, axis);
  CsvWriter xcsv(dir / "field_xaxis.csv", "x_over_a,abs_f");
  for (std::size_t i = 0; i < axis.size(); ++i)
  {
    xcsv.row({axis[i].x / a, std::abs(fx[i])});
  }

  std::vector<Point2> plane;
  constexpr int plane_samples = 61;
  const double extent = lattice.circumradius() + a;
  for (int i = 0; i < plane_samples; ++i)
  {
    for (int k = 0; k < plane_samples; ++k)
    {
      plane.push_back({extent * (-1.0 + 2.0 * k / (plane_samples - 1)),
                       extent * (-1.0 + 2.0 * i / (plane_samples - 1))});
    }
  }
  const auto fxy = evaluate_qnm_field(mode, plane);
  CsvWriter pcsv(dir / "field_xy.csv", "x,y,re_f,im_f,abs_f");
  for (std::size_t i = 0; i < plane.size(); ++i)
  {
    pcsv.row({plane[i].x, plane[i].y, fxy[i].real(), fxy[i].imag(), std::abs(fxy[i])});
  }
  out << (dir / "qnm.json").string() << '\n'
      << xcsv.path().string() << '\n'
      << pcsv.path().string() << '\n';
  return kSuccess;
}

int cmd_mode_volume_sweep(const RunConfig &cfg, const StructureSpec &spec, const fs::path &dir,
                          std::ostream &out)
{
  const auto &lattice = require_lattice(spec, "mode-volume-sweep");
  const auto radii = cfg.radii ? *cfg.radii : default_sweep_radii(lattice);
  if (radii.empty())
  {
    throw ConfigError("sweep radii list is empty");
  }
  for (std::size_t i = 0; i < radii.size(); ++i)
  {
    if (i > 0 && !(radii[i] > radii[i - 1]))
    {
      throw ConfigError("sweep radii must be strictly increasing");
    }
    if (!(radii[i] > lattice.circumradius()))
    {
      throw ConfigError("sweep radii must enclose the crystallite (radius > " +
                        sci(lattice.circumradius()) + ")");
    }
  }
  const auto solved = solve_crystallite(cfg, lattice);
  const auto &mode = solved.mode;
  const auto report = mode_volume_report(mode, radii, true);

  prepare_dir(dir);
  CsvWriter csv(dir / "sweep.csv", "radius,Veff_N,Veff_Q,vQ_re,vQ_im");
  for (const auto &r : report.sweep)
  {
    csv.row({r.radius, r.v_eff_n, r.v_eff_q, r.v_q.real(), r.v_q.imag()});
  }
  // (λ_c/n_c)² in lattice units, λ_c = 2πc/Re ω̃.
  const double lambda = 2.0 * pi / mode.omega.omega.real() / report.antinode.index;
  const double area = lambda * lambda;
  json j = {{"command", "mode-volume-sweep"},
            {"structure", spec.name},
            {"resolution", solved.mesh->resolution()},
            {"antinode", {report.antinode.position.x, report.antinode.position.y}},
            {"n_c", report.antinode.index},
            {"v_q_re", report.volume.v_q.real()},
            {"v_q_im", report.volume.v_q.imag()},
            {"v_eff_q", report.volume.v_eff_q},
            {"v_eff_tot", report.ldos.v_eff_tot},
            {"v_eff_q_lambda_units", report.volume.v_eff_q / area},
            {"v_eff_tot_lambda_units", report.ldos.v_eff_tot / area},
            {"ldos_full", report.ldos.f_full},
            {"ldos_single", report.ldos.f_single},
            // Enhancements over the background rate, single-mode and full Green's function.
            {"purcell_single", report.ldos.f_single},
            {"purcell_full", report.ldos.f_full},
            {"purcell_ratio", report.ldos.f_single / report.ldos.f_full},
            {"radii", radii},
            {"warnings", mode.warnings}};
  j.update(frequency_json(mode));
  write_json(dir / "summary.json", j);
  out << csv.path().string() << '\n' << (dir / "summary.json").string() << '\n';
  return kSuccess;
}

int cmd_ldos(const RunConfig &cfg, const StructureSpec &spec, const fs::path &dir,
             std::ostream &out)
{
  const auto &lattice = require_lattice(spec, "ldos");
  if (lattice.rod_containing(cfg.probe) >= 0)
  {
    throw InvalidGeometry("ldos: the probe lies inside a rod; emitters must sit in the background");
  }
  const double a = lattice.lattice_constant();
  auto frequencies_in = [&](double lo, double hi)
  {
    std::vector<double> w(ldos_points);
    for (int i = 0; i < ldos_points; ++i)
    {
      const double nu = lo + (hi - lo) * i / (ldos_points - 1);
      w[i] = ComplexFrequency::from_normalized(nu, a).omega.real();
    }
    return w;
  };

  std::shared_ptr<const ScattererMesh> mesh;
  std::optional<Qnm2D> mode;
  std::vector<double> freqs;
  if (lattice.delta_eps() == 0.0)
  {
    // No resonance to centre on.
    mesh = std::make_shared<const ScattererMesh>(lattice, cfg.resolution.value_or(default_resolution));
    const auto range = cfg.nu_range.value_or(std::make_pair(0.40, 0.44));
    freqs = frequencies_in(range.first, range.second);
  }
  else
  {
    auto solved = solve_crystallite(cfg, lattice);
    mesh = solved.mesh;
    mode = std::move(solved.mode);
    freqs = cfg.nu_range ? frequencies_in(cfg.nu_range->first, cfg.nu_range->second)
                         : default_ldos_frequencies(mode->omega, ldos_points);
  }
  const auto spectrum = ldos_spectrum(lattice, mesh, cfg.probe, freqs, mode ? &*mode : nullptr);

  prepare_dir(dir);
  CsvWriter csv(dir / "ldos.csv", "omega,F_full,F_single");
  for (std::size_t i = 0; i < freqs.size(); ++i)
  {
    csv.row({freqs[i] * a / (2.0 * pi), spectrum.enhancement_full[i],
             spectrum.enhancement_single[i]});
  }
  out << csv.path().string() << '\n';
  return kSuccess;
}

using Command = int (*)(const RunConfig &, const StructureSpec &, const fs::path &,
                        std::ostream &);

int dispatch(Command command, const Flags &flags, std::ostream &out)
{
  const RunConfig cfg = build_config(flags);
  const bool batch = cfg.structures.size() > 1;
  for (const auto &spec : cfg.structures)
  {
    const int code = command(cfg, spec, batch ? cfg.out / spec.name : cfg.out, out);
    if (code != kSuccess)
    {
      return code;
    }
  }
  return kSuccess;
}

void apply_threads(const std::optional<int> &flag)
{
  if (flag)
  {
    set_max_threads(*flag);
    return;
  }
  if (const char *env = std::getenv("QNMLAB_THREADS"))
  {
    char *end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 1)
    {
      throw ConfigError("QNMLAB_THREADS must be a positive integer");
    }
    set_max_threads(int(n));
  }
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Quasinormal modes, mode volumes and LDOS of open dielectric resonators"};
  app.require_subcommand(1);
  Flags flags;
  flags.radii = "\x01";  // sentinel: --radii not given

  auto add_common = [&](CLI::App *sub)
  {
    sub->add_option("--config", flags.config, "JSON structure or run description");
    sub->add_option("--preset", flags.presets, "Named structure (repeatable for batch runs)");
    sub->add_option("--out", flags.out, "Output directory")->capture_default_str();
    sub->add_option("--resolution", flags.resolution, "Pixels per rod diameter");
    sub->add_option("--guess", flags.guess,
                    "Initial frequency RE,IM (ωa/2πc for crystallites, ω for slabs)");
    sub->add_option("--threads", flags.threads, "Worker threads (default: QNMLAB_THREADS)");
  };

  Command command = nullptr;
  auto *slab = app.add_subcommand("slab-qnm", "Quasinormal mode of a layered slab");
  add_common(slab);
  slab->callback([&] { command = cmd_slab_qnm; });

  auto *crystal = app.add_subcommand("crystallite-qnm", "Defect mode of a rod crystallite");
  add_common(crystal);
  crystal->callback([&] { command = cmd_crystallite_qnm; });

  auto *sweep = app.add_subcommand("mode-volume-sweep",
                                   "Mode volumes against the calculation-domain radius");
  add_common(sweep);
  sweep->add_option("--radii", flags.radii, "Comma-separated disk radii (lattice units)");
  sweep->callback([&] { command = cmd_mode_volume_sweep; });

  auto *ldos = app.add_subcommand("ldos", "LDOS enhancement spectrum at a probe point");
  add_common(ldos);
  ldos->add_option("--probe", flags.probe, "Probe position X,Y (default: origin)");
  ldos->add_option("--nu-range", flags.nu_range, "Frequency window LO,HI in ωa/2πc");
  ldos->callback([&] { command = cmd_ldos; });

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kConfigError;
  }

  try
  {
    apply_threads(flags.threads);
    return dispatch(command, flags, out);
  }
  catch (const NoConvergence &e)
  {
    err << "error: " << e.what() << '\n';
    return kNoConvergence;
  }
  catch (const std::invalid_argument &e)
  {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }
  catch (const std::exception &e)
  {
    err << "error: " << e.what() << '\n';
    return kNoConvergence;
  }
}

}  // namespace qnmlab::cli
