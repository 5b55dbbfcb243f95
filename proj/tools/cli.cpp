#include "cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <json.hpp>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "ccdgf/ccdgf.hpp"

namespace ccdgf::cli {
namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Which optional knobs a filter subcommand exposes. Anything not listed is
// rejected by the parser as an unexpected argument.
enum Knob : unsigned {
  kGuidance = 1u << 0,
  kAnchor = 1u << 1,
  kLambda = 1u << 2,
  kBeta = 1u << 3,
  kEps2 = 1u << 4,
  kTau = 1u << 5,
  kIters = 1u << 6,
  kBoundary = 1u << 7,
  kGuidanceOut = 1u << 8,
};

struct Options {
  std::string input;
  std::string output;
  std::string guidance;
  std::string anchor;
  std::string guidance_output;
  std::string metrics_against;
  int radius = 10;
  double eps = 0.1;
  double eps2 = 0.1;
  double lambda = 0.0;
  double beta = 0.0;
  double tau = 1.0;
  int iters = 1;
  std::string boundary = "truncate";
  bool dump_iterates = false;
  unsigned knobs = 0;
};

struct Loaded {
  std::vector<Image> channels;
  int maxval = 255;
};

Loaded load(const std::string& path) {
  PnmImage img = read_pnm_file(path);
  return {std::move(img.channels), img.maxval};
}

int output_maxval(int input_maxval) { return input_maxval == 255 ? 255 : 65535; }

void save(const fs::path& path, const std::vector<Image>& channels, int maxval) {
  write_pnm_file(path, channels, maxval);
}

fs::path iterate_path(const fs::path& output, int n) {
  char tag[16];
  std::snprintf(tag, sizeof tag, ".iter%03d", n);
  return output.parent_path() / (output.stem().string() + tag + output.extension().string());
}

Boundary parse_boundary(const std::string& name) {
  return name == "periodic" ? Boundary::Periodic : Boundary::Truncate;
}

json metrics_json(const std::vector<Image>& x, const std::vector<Image>& y) {
  json m;
  const double e = mse(std::span<const Image>(x), std::span<const Image>(y));
  const double p = psnr_from_mse(e);
  m["mse"] = e;
  if (std::isinf(p)) {
    m["psnr_db"] = "inf";
  } else {
    m["psnr_db"] = p;
  }
  m["ssim"] = ssim(std::span<const Image>(x), std::span<const Image>(y));
  return m;
}

std::vector<Image> quantized(const std::vector<Image>& channels, int maxval) {
  std::vector<Image> out;
  for (const Image& c : channels) out.push_back(map(c, [maxval](double v) { return quantize(v, maxval); }));
  return out;
}

// Channel c of a bundle, or the single channel broadcast to every c.
const Image& channel(const std::vector<Image>& bundle, std::size_t c, const char* what) {
  if (bundle.size() == 1) return bundle.front();
  if (c < bundle.size()) return bundle[c];
  throw ShapeError(std::string(what) + ": channel count does not match the input");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// One filter subcommand: its knobs, defaults, and the per-channel iteration.
// The guidance is the luma of the guidance image; the anchor is per channel.
struct FilterCommand {
  std::string name;
  std::string help;
  Options defaults;
  // Returns iterates q^1..q^iters for one channel.
  std::function<std::vector<Image>(const Image& p, const Image& guide, const Image& anchor,
                                   const Options& o, std::vector<Image>* G_out)>
      iterate;
};

std::vector<FilterCommand> filter_commands() {
  std::vector<FilterCommand> cmds;
  auto window = [](const Options& o) { return WindowSpec{o.radius, parse_boundary(o.boundary)}; };

  {
    Options d;
    d.radius = 10;
    d.eps = 0.1;
    d.knobs = kGuidance | kIters | kBoundary;
    cmds.push_back({"gf", "guided filter (rolling when --iters > 1)", d,
                    [=](const Image& p, const Image& I, const Image&, const Options& o, std::vector<Image>*) {
                      return gf_roll(p, I, window(o), o.eps, o.iters);
                    }});
  }
  {
    Options d;
    d.radius = 10;
    d.eps = 0.01;
    d.lambda = 45.0;
    d.boundary = "periodic";
    d.knobs = kGuidance | kLambda | kIters;
    cmds.push_back({"tvgf", "total-variation guided filter (periodic windows)", d,
                    [](const Image& p, const Image& I, const Image&, const Options& o, std::vector<Image>*) {
                      return tvgf_roll(p, I, {o.radius, Boundary::Periodic}, o.eps, o.lambda, o.iters);
                    }});
  }
  {
    Options d;
    d.radius = 6;
    d.eps = 0.001;
    d.lambda = 0.01;
    d.knobs = kGuidance | kAnchor | kLambda | kIters | kBoundary;
    cmds.push_back({"cgf", "conservative guided filter; anchor defaults to the input", d,
                    [=](const Image& p, const Image& I, const Image& g, const Options& o, std::vector<Image>*) {
                      return cgf_roll(p, I, g, window(o), o.eps, o.lambda, o.iters);
                    }});
  }
  {
    Options d;
    d.radius = 10;
    d.eps = 0.1;
    d.knobs = kGuidance | kBoundary;
    cmds.push_back({"igf",
                    "inverse guided filter; the guidance is the prior G0 (standalone output is "
                    "rarely meaningful)",
                    d, [=](const Image& p, const Image& G0, const Image&, const Options& o, std::vector<Image>*) {
                      return std::vector<Image>{igf(p, G0, window(o), o.eps)};
                    }});
  }
  {
    Options d;
    d.radius = 10;
    d.eps = 0.1;
    d.lambda = 0.01;
    d.knobs = kGuidance | kAnchor | kLambda | kBoundary;
    cmds.push_back({"icgf", "inverse conservative guided filter; anchor defaults to the guidance", d,
                    [=](const Image& p, const Image& G0, const Image& g, const Options& o, std::vector<Image>*) {
                      return std::vector<Image>{icgf(p, G0, g, window(o), o.eps, o.lambda)};
                    }});
  }
  {
    Options d;
    d.radius = 6;
    d.eps = 0.001;
    d.eps2 = 0.001;
    d.iters = 10;
    d.knobs = kGuidance | kEps2 | kIters | kBoundary | kGuidanceOut;
    cmds.push_back({"rmsf-gf", "rolling mutual-structure filter, guided-filter form", d,
                    [=](const Image& p, const Image& I, const Image&, const Options& o, std::vector<Image>* G) {
                      std::vector<MutualState> snaps;
                      const MutualState s = gf_rmsf(p, I, o.eps, o.eps2, window(o), o.iters, &snaps);
                      if (G != nullptr) G->push_back(s.G);
                      std::vector<Image> qs;
                      for (MutualState& m : snaps) qs.push_back(std::move(m.q));
                      return qs;
                    }});
  }
  {
    Options d;
    d.radius = 6;
    d.eps = 0.001;
    d.eps2 = 0.001;
    d.lambda = 0.01;
    d.beta = 0.01;
    d.iters = 10;
    d.knobs = kGuidance | kEps2 | kLambda | kBeta | kIters | kBoundary | kGuidanceOut;
    cmds.push_back({"rmsf-cgf", "rolling mutual-structure filter, conservative form", d,
                    [=](const Image& p, const Image& I, const Image&, const Options& o, std::vector<Image>* G) {
                      std::vector<MutualState> snaps;
                      const MutualState s =
                          cgf_rmsf(p, I, o.eps, o.eps2, o.lambda, o.beta, window(o), o.iters, &snaps);
                      if (G != nullptr) G->push_back(s.G);
                      std::vector<Image> qs;
                      for (MutualState& m : snaps) qs.push_back(std::move(m.q));
                      return qs;
                    }});
  }
  {
    Options d;
    d.radius = 6;
    d.eps = 0.01;
    d.iters = 10;
    d.knobs = kGuidance | kIters | kBoundary | kGuidanceOut;
    cmds.push_back({"roll37", "naive cross rolling of input and guidance (detail-losing baseline)", d,
                    [=](const Image& p, const Image& I, const Image&, const Options& o, std::vector<Image>* G) {
                      std::vector<MutualState> snaps;
                      const MutualState s = naive_roll37(p, I, o.eps, window(o), o.iters, &snaps);
                      if (G != nullptr) G->push_back(s.G);
                      std::vector<Image> qs;
                      for (MutualState& m : snaps) qs.push_back(std::move(m.q));
                      return qs;
                    }});
  }
  {
    Options d;
    d.radius = 4;
    d.eps = 0.01;
    d.lambda = 0.5;
    d.iters = 5;
    d.knobs = kGuidance | kLambda | kIters | kBoundary;
    cmds.push_back({"rfnf-seo",
                    "flash/no-flash detail-transfer rolling; --input is the no-flash image, "
                    "--guidance the flash image, --lambda the detail gain",
                    d, [=](const Image& n, const Image& f, const Image&, const Options& o, std::vector<Image>*) {
                      std::vector<Image> qs;
                      Image q = n;
                      for (int k = 0; k < o.iters; ++k) {
                        q = rfnf_seo(q, f, window(o), o.eps, o.lambda, 1);
                        qs.push_back(q);
                      }
                      return qs;
                    }});
  }
  {
    Options d;
    d.radius = 4;
    d.eps = 0.01;
    d.lambda = 1.0;
    d.tau = 2.0;
    d.iters = 5;
    d.knobs = kGuidance | kLambda | kTau | kIters | kBoundary;
    cmds.push_back({"rfnf-gen",
                    "anchored flash/no-flash rolling; --input is the no-flash image, --guidance the "
                    "flash image",
                    d, [=](const Image& n, const Image& f, const Image&, const Options& o, std::vector<Image>*) {
                      std::vector<Image> qs;
                      Image q = n;
                      for (int k = 0; k < o.iters; ++k) {
                        q = rfnf_gen(q, f, window(o), o.eps, o.lambda, o.tau, 1);
                        qs.push_back(q);
                      }
                      return qs;
                    }});
  }
  return cmds;
}

CLI::App* add_filter(CLI::App& app, const FilterCommand& cmd, Options& o) {
  o = cmd.defaults;
  CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
  sub->add_option("--input", o.input, "input image (PGM/PPM)")->required();
  sub->add_option("--output", o.output, "output image")->required();
  sub->add_option("--radius", o.radius, "window radius")->capture_default_str()->check(CLI::NonNegativeNumber);
  sub->add_option("--eps", o.eps, "regularizer of the (a, b) fit")->capture_default_str();
  if (o.knobs & kGuidance) {
    sub->add_option("--guidance,--flash", o.guidance, "guidance image (defaults to the input)");
  }
  if (o.knobs & kAnchor) sub->add_option("--anchor", o.anchor, "anchor image g");
  if (o.knobs & kLambda) sub->add_option("--lambda", o.lambda)->capture_default_str();
  if (o.knobs & kBeta) sub->add_option("--beta", o.beta)->capture_default_str();
  if (o.knobs & kEps2) sub->add_option("--eps2", o.eps2, "regularizer of the (c, d) fit")->capture_default_str();
  if (o.knobs & kTau) sub->add_option("--tau", o.tau, "detail gain of the enhanced flash image")->capture_default_str();
  if (o.knobs & kIters) {
    sub->add_option("--iters", o.iters, "rolling iterations")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_flag("--dump-iterates", o.dump_iterates, "write every iterate as <output>.iterNNN (16-bit)");
  }
  if (o.knobs & kBoundary) {
    sub->add_option("--boundary", o.boundary)
        ->capture_default_str()
        ->check(CLI::IsMember({"truncate", "periodic"}));
  }
  if (o.knobs & kGuidanceOut) sub->add_option("--guidance-output", o.guidance_output, "write the filtered guidance track");
  sub->add_option("--metrics-against", o.metrics_against, "reference image for mse / psnr / ssim");
  return sub;
}

json parameters(const Options& o) {
  json p;
  p["radius"] = o.radius;
  p["eps"] = o.eps;
  if (o.knobs & kEps2) p["eps2"] = o.eps2;
  if (o.knobs & kLambda) p["lambda"] = o.lambda;
  if (o.knobs & kBeta) p["beta"] = o.beta;
  if (o.knobs & kTau) p["tau"] = o.tau;
  p["iters"] = o.iters;
  p["boundary"] = o.boundary;
  return p;
}

json run_filter(const FilterCommand& cmd, const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const Loaded in = load(o.input);
  const Loaded guide = o.guidance.empty() ? in : load(o.guidance);
  const Image guide_luma = luma(guide.channels);
  // icgf anchors to its prior by default, everything else to the input.
  const std::vector<Image>& default_anchor = cmd.name == "icgf" ? std::vector<Image>{guide_luma} : in.channels;
  const Loaded anchor = o.anchor.empty() ? Loaded{default_anchor, in.maxval} : load(o.anchor);

  std::vector<std::vector<Image>> iterates;  // [channel][n]
  std::vector<Image> G_track;
  for (std::size_t c = 0; c < in.channels.size(); ++c) {
    iterates.push_back(cmd.iterate(in.channels[c], guide_luma, channel(anchor.channels, c, "anchor"), o,
                                   o.guidance_output.empty() ? nullptr : &G_track));
  }

  std::vector<Image> result;
  for (auto& per_channel : iterates) result.push_back(per_channel.back());
  const int maxval = output_maxval(in.maxval);
  save(o.output, result, maxval);

  json report;
  report["command"] = cmd.name;
  report["parameters"] = parameters(o);
  json inputs;
  inputs["input"] = o.input;
  if (!o.guidance.empty()) inputs["guidance"] = o.guidance;
  if (!o.anchor.empty()) inputs["anchor"] = o.anchor;
  report["inputs"] = inputs;
  report["image"] = {{"width", result.front().width()},
                     {"height", result.front().height()},
                     {"channels", result.size()},
                     {"maxval", maxval}};
  json outputs = json::array({o.output});
  if (!o.guidance_output.empty()) {
    save(o.guidance_output, G_track, maxval);
    outputs.push_back(o.guidance_output);
  }
  if (o.dump_iterates) {
    for (int n = 0; n < o.iters; ++n) {
      std::vector<Image> it;
      for (auto& per_channel : iterates) it.push_back(per_channel[static_cast<std::size_t>(n)]);
      const fs::path p = iterate_path(o.output, n + 1);
      save(p, it, 65535);
      outputs.push_back(p.string());
    }
  }
  report["outputs"] = outputs;
  bool finite = true;
  for (const Image& c : result) finite = finite && all_finite(c);
  report["finite"] = finite;
  if (!o.metrics_against.empty()) {
    const Loaded ref = load(o.metrics_against);
    report["metrics"] = metrics_json(quantized(result, maxval), ref.channels);
  }
  report["wall_time_s"] = seconds_since(t0);
  return report;
}

struct MetricsOptions {
  std::string input;
  std::string against;
  std::string format = "json";
};

struct BenchOptions {
  int width = 1000;
  int height = 1000;
  std::string filter = "gf";
  int radius = 10;
  double eps = 0.1;
  double lambda = 45.0;
  int repeat = 5;
  std::string exec = "parallel";
  std::uint64_t seed = 1;
};

json run_bench(const BenchOptions& b) {
  const Image p = synth::generate(synth::Kind::Noise, b.seed, b.width, b.height)[1].image;
  const Exec exec = b.exec == "serial" ? Exec::Serial : Exec::Parallel;
  const WindowSpec truncate{b.radius, Boundary::Truncate};
  const WindowSpec periodic{b.radius, Boundary::Periodic};
  std::function<void()> job;
  if (b.filter == "box") {
    job = [&] { box_sum(p, truncate, exec); };
  } else if (b.filter == "gf") {
    job = [&] { gf(p, p, truncate, b.eps, exec); };
  } else if (b.filter == "tvgf") {
    job = [&] { tvgf(p, p, periodic, b.eps, b.lambda); };
  } else if (b.filter == "cgf") {
    job = [&] { cgf(p, p, p, truncate, b.eps, b.lambda); };
  } else if (b.filter == "igf") {
    job = [&] { igf(p, p, truncate, b.eps); };
  } else {
    job = [&] { icgf(p, p, p, truncate, b.eps, b.lambda); };
  }
  std::vector<double> times;
  for (int i = 0; i < b.repeat; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    job();
    times.push_back(seconds_since(t0));
  }
  std::vector<double> sorted = times;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size() / 2;
  const double median = sorted.size() % 2 == 1 ? sorted[m] : 0.5 * (sorted[m - 1] + sorted[m]);

  json report;
  report["command"] = "bench";
  report["parameters"] = {{"width", b.width},   {"height", b.height}, {"filter", b.filter},
                          {"radius", b.radius}, {"eps", b.eps},       {"lambda", b.lambda},
                          {"repeat", b.repeat}, {"exec", b.exec},     {"seed", b.seed}};
  report["threads"] = exec == Exec::Serial ? 1 : omp_get_max_threads();
  report["megapixels"] = static_cast<double>(b.width) * b.height / 1e6;
  report["times_s"] = times;
  report["median_s"] = median;
  report["wall_time_s"] = std::accumulate(times.begin(), times.end(), 0.0);
  return report;
}

struct SynthOptions {
  std::string kind;
  std::uint64_t seed = 0;
  int width = 256;
  int height = 256;
  double sigma = 0.05;
  std::string output;
};

json run_synth(const SynthOptions& s) {
  const auto t0 = std::chrono::steady_clock::now();
  const synth::Kind kind = synth::parse_kind(s.kind);
  json outputs = json::array();
  for (const synth::NamedImage& img : synth::generate(kind, s.seed, s.width, s.height, s.sigma)) {
    const std::string path = s.output + "_" + img.name + ".pgm";
    save(path, {img.image}, 65535);
    outputs.push_back(path);
  }
  json report;
  report["command"] = "synth";
  report["parameters"] = {{"kind", s.kind},   {"seed", s.seed},   {"width", s.width},
                          {"height", s.height}, {"sigma", s.sigma}};
  report["outputs"] = outputs;
  report["wall_time_s"] = seconds_since(t0);
  return report;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Guided-filter family: filtering, metrics, benchmarks and synthetic data", "ccdgf"};
  app.require_subcommand(1);
  int threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--threads", threads, "worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber);

  const std::vector<FilterCommand> filters = filter_commands();
  std::map<std::string, Options> filter_opts;
  std::vector<std::pair<CLI::App*, const FilterCommand*>> filter_subs;
  for (const FilterCommand& cmd : filters) {
    filter_subs.emplace_back(add_filter(app, cmd, filter_opts[cmd.name]), &cmd);
  }

  MetricsOptions mo;
  CLI::App* metrics = app.add_subcommand("metrics", "mse, psnr and ssim of two images");
  metrics->add_option("--input", mo.input)->required();
  metrics->add_option("--metrics-against", mo.against)->required();
  metrics->add_option("--format", mo.format)->capture_default_str()->check(CLI::IsMember({"json", "csv"}));

  BenchOptions bo;
  CLI::App* bench = app.add_subcommand("bench", "median wall time of one filter on a synthetic image");
  bench->add_option("--width", bo.width)->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--height", bo.height)->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--filter", bo.filter)
      ->capture_default_str()
      ->check(CLI::IsMember({"box", "gf", "tvgf", "cgf", "igf", "icgf"}));
  bench->add_option("--radius", bo.radius)->capture_default_str()->check(CLI::NonNegativeNumber);
  bench->add_option("--eps", bo.eps)->capture_default_str();
  bench->add_option("--lambda", bo.lambda)->capture_default_str();
  bench->add_option("--repeat", bo.repeat)->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--exec", bo.exec)->capture_default_str()->check(CLI::IsMember({"parallel", "serial"}));
  bench->add_option("--seed", bo.seed)->capture_default_str();

  SynthOptions so;
  CLI::App* synth_cmd = app.add_subcommand("synth", "deterministic synthetic test images (16-bit PGM)");
  synth_cmd->add_option("--kind", so.kind)
      ->required()
      ->check(CLI::IsMember({"noise", "piecewise", "texture", "flash-pair"}));
  synth_cmd->add_option("--seed", so.seed)->capture_default_str();
  synth_cmd->add_option("--width", so.width)->capture_default_str()->check(CLI::PositiveNumber);
  synth_cmd->add_option("--height", so.height)->capture_default_str()->check(CLI::PositiveNumber);
  synth_cmd->add_option("--sigma", so.sigma)->capture_default_str()->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--output", so.output, "output prefix; writes <prefix>_<name>.pgm")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  omp_set_num_threads(threads);

  try {
    json report;
    bool csv = false;
    if (metrics->parsed()) {
      const Loaded x = load(mo.input);
      const Loaded y = load(mo.against);
      report["command"] = "metrics";
      report["inputs"] = {{"input", mo.input}, {"metrics_against", mo.against}};
      report["metrics"] = metrics_json(x.channels, y.channels);
      csv = mo.format == "csv";
    } else if (bench->parsed()) {
      report = run_bench(bo);
    } else if (synth_cmd->parsed()) {
      report = run_synth(so);
    } else {
      for (auto& [sub, cmd] : filter_subs) {
        if (sub->parsed()) report = run_filter(*cmd, filter_opts[cmd->name]);
      }
    }
    if (csv) {
      const json& m = report["metrics"];
      out << "mse,psnr_db,ssim\n";
      out << m["mse"].dump() << "," << (m["psnr_db"].is_string() ? "inf" : m["psnr_db"].dump()) << ","
          << m["ssim"].dump() << "\n";
    } else {
      out << report.dump(2) << "\n";
    }
    return kOk;
  } catch (const PnmError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
}

}  // namespace ccdgf::cli
