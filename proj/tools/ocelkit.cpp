// ocelkit: command-line front-end for the OCEL filtering and sampling library.
//
//   ocelkit stats     LOG [--json] [--matrix]
//   ocelkit validate  LOG
//   ocelkit filter    LOG [step flags... | --pipeline FILE] [-o OUT] [--json]
//   ocelkit sample    LOG --strategy events|objects|types|connected [--k K] [--seed S] [--out-dir DIR]
//   ocelkit flatten   LOG --type TYPE [--format csv|jsonocel-flat] [-o OUT]
//   ocelkit gen       [--orders N ...] [-o OUT]
//   ocelkit serve     [--port P] [--session-ttl S] [--static-dir DIR]
//
// Exit status: 0 success, 1 invalid log content, 2 usage or I/O error.
// OCELKIT_OUT_DIR sets the directory for outputs not given explicitly.

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ocelkit/errors.hpp"
#include "ocelkit/generator.hpp"
#include "ocelkit/io.hpp"
#include "ocelkit/model.hpp"
#include "ocelkit/pipeline.hpp"
#include "ocelkit/sampling.hpp"
#include "ocelkit/stats.hpp"
#ifdef OCELKIT_WITH_SERVICE
#include "ocelkit/service.hpp"
#endif

namespace fs = std::filesystem;
using namespace ocelkit;

namespace {

enum Exit { kOk = 0, kDomain = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path out_dir() {
  if (const char* d = std::getenv("OCELKIT_OUT_DIR"); d && *d) return d;
  return fs::current_path();
}

OcelLog load(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec)) throw UsageError("file not found: " + path.string());
  Warnings warnings;
  OcelLog log = read_ocel_file(path, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  return log;
}

std::uint64_t to_count(const std::string& flag, const std::string& text) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || p != text.data() + text.size())
    throw UsageError("invalid threshold for " + flag + ": '" + text + "' (expected a non-negative integer)");
  return v;
}

double to_ratio(const std::string& flag, const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !(v >= 0.0 && v <= 1.0))
    throw UsageError("invalid threshold for " + flag + ": '" + text + "' (expected a ratio in [0, 1])");
  return v;
}

void write_output(const fs::path& path, std::string_view content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  write_text_file(path, content);
}

// --------------------------------------------------------------------------

struct StatsArgs {
  std::string input;
  bool json = false;
  bool matrix = false;
};

int cmd_stats(const StatsArgs& a) {
  const OcelLog log = load(a.input);
  const LogSummary s = summarize(log);
  if (a.json) {
    auto j = nlohmann::ordered_json::parse(to_json(s));
    if (a.matrix) j["matrix"] = nlohmann::ordered_json::parse(to_json(relation_matrix(log)));
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << to_text(s);
  if (a.matrix) {
    std::cout << "relations (type, activity: unique/incidences)\n";
    for (const auto& c : relation_matrix(log).cells)
      if (c.co_occurs) std::cout << "  " << c.type << ", " << c.activity << ": " << c.unique_objects << '/' << c.incidences << '\n';
  }
  return kOk;
}

int cmd_validate(const std::string& input) {
  const ValidationReport r = validate(load(input));
  for (const auto& v : r.violations) std::cout << to_string(v.kind) << ": " << v.subject << ": " << v.message << '\n';
  if (r.ok()) std::cout << "ok\n";
  return r.ok() ? kOk : kDomain;
}

// --------------------------------------------------------------------------

struct FilterArgs {
  std::string input;
  std::string output;
  std::string pipeline_file;
  std::string save_pipeline;
  bool json = false;
  std::vector<std::string> ot_min_objects, ot_min_events, ot_min_ratio, ev_min_count, rel_min_ratio;
  CLI::Option* o_ot_min_objects = nullptr;
  CLI::Option* o_ot_min_events = nullptr;
  CLI::Option* o_ot_min_ratio = nullptr;
  CLI::Option* o_ev_min_count = nullptr;
  CLI::Option* o_ev_essential = nullptr;
  CLI::Option* o_rel_min_ratio = nullptr;
  CLI::Option* o_drop_empty = nullptr;
  CLI::Option* o_drop_orphan = nullptr;
};

/// Builds the pipeline from step flags in command-line order. The event
/// count flag and --ev-essential together form one OE3 step at the position
/// of whichever came first.
FilterPipeline steps_from_flags(const CLI::App& app, const FilterArgs& a) {
  FilterPipeline p;
  std::size_t i_objects = 0, i_events = 0, i_ratio = 0, i_count = 0, i_rel = 0;
  const bool merge_oe3 = a.o_ev_min_count->count() > 0 && a.o_ev_essential->count() > 0;
  if (merge_oe3 && (a.o_ev_min_count->count() > 1 || a.o_ev_essential->count() > 1))
    throw UsageError("--ev-min-activity-count together with --ev-essential may be given only once");
  bool oe3_emitted = false;

  for (const CLI::Option* opt : app.parse_order()) {
    FilterStep s;
    if (opt == a.o_ot_min_objects) {
      s.kind = StepKind::OTF1;
      s.n = to_count("--ot-min-objects", a.ot_min_objects.at(i_objects++));
    } else if (opt == a.o_ot_min_events) {
      s.kind = StepKind::OTF2;
      s.n = to_count("--ot-min-events", a.ot_min_events.at(i_events++));
    } else if (opt == a.o_ot_min_ratio) {
      s.kind = StepKind::OTF3;
      s.r = to_ratio("--ot-min-activity-ratio", a.ot_min_ratio.at(i_ratio++));
    } else if (opt == a.o_rel_min_ratio) {
      s.kind = StepKind::OA_RATIO;
      s.r = to_ratio("--rel-min-unique-ratio", a.rel_min_ratio.at(i_rel++));
    } else if (opt == a.o_drop_empty) {
      s.kind = StepKind::DROP_EMPTY_EVENTS;
    } else if (opt == a.o_drop_orphan) {
      s.kind = StepKind::DROP_ORPHAN_OBJECTS;
    } else if (opt == a.o_ev_min_count || opt == a.o_ev_essential) {
      if (merge_oe3) {
        if (oe3_emitted) continue;
        oe3_emitted = true;
        s.kind = StepKind::OE3;
        s.n = to_count("--ev-min-activity-count", a.ev_min_count.at(0));
      } else if (opt == a.o_ev_min_count) {
        s.kind = StepKind::OE1;
        s.n = to_count("--ev-min-activity-count", a.ev_min_count.at(i_count++));
      } else {
        s.kind = StepKind::OE2;
      }
    } else {
      continue;
    }
    p.steps.push_back(std::move(s));
  }
  return p;
}

bool same_file(const fs::path& a, const fs::path& b) {
  std::error_code ec;
  if (fs::exists(b, ec) && fs::equivalent(a, b, ec)) return true;
  return fs::weakly_canonical(a, ec) == fs::weakly_canonical(b, ec);
}

int cmd_filter(const CLI::App& app, const FilterArgs& a) {
  FilterPipeline p = steps_from_flags(app, a);
  if (!a.pipeline_file.empty()) {
    if (!p.steps.empty()) throw UsageError("--pipeline cannot be combined with step flags");
    std::string text;
    try {
      text = read_text_file(a.pipeline_file);
    } catch (const std::system_error&) {
      throw UsageError("file not found: " + a.pipeline_file);
    }
    try {
      p = parse_pipeline(text);
    } catch (const InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }
  fs::path out = a.output.empty() ? out_dir() / (fs::path(a.input).stem().string() + ".filtered.jsonocel")
                                  : fs::path(a.output);
  if (out != "-" && same_file(a.input, out)) throw UsageError("output path would overwrite the input: " + out.string());

  const OcelLog log = load(a.input);
  const PipelineResult result = apply_pipeline(log, p);
  const bool to_stdout = out == "-";
  if (to_stdout) {
    std::cout << write_json_ocel(result.log);
  } else {
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    write_ocel_file(result.log, out);
  }
  if (!a.save_pipeline.empty()) write_output(a.save_pipeline, write_pipeline(p));
  std::ostream& report = to_stdout ? std::cerr : std::cout;

  if (a.json) {
    auto j = nlohmann::ordered_json::parse(to_json(result.diff));
    j["output"] = out.string();
    report << j.dump(2) << '\n';
  } else {
    for (const auto& step : result.diff.steps) report << to_text(step);
    const LogSummary s = summarize(result.log);
    report << "wrote " << out.string() << ": " << s.events << " events, " << s.objects << " objects, "
              << s.object_types << " object types\n";
  }
  return kOk;
}

// --------------------------------------------------------------------------

struct SampleArgs {
  std::string input;
  std::string strategy;
  std::optional<std::uint64_t> k;
  std::uint64_t seed = 0;
  std::string out_dir;
};

int cmd_sample(const SampleArgs& a) {
  const fs::path dir = a.out_dir.empty() ? out_dir() : fs::path(a.out_dir);
  const std::string stem = fs::path(a.input).stem().string();
  auto log = std::make_shared<const OcelLog>(load(a.input));
  fs::create_directories(dir);

  nlohmann::ordered_json manifest = {{"input", a.input}, {"strategy", a.strategy}};
  if (a.strategy == "connected") {
    const SamplePartition part = connected_event_samples(log);
    nlohmann::ordered_json files = nlohmann::ordered_json::array();
    const int width = std::max<int>(4, static_cast<int>(std::to_string(part.size()).size()));
    for (std::size_t i = 0; i < part.size(); ++i) {
      std::string num = std::to_string(i + 1);
      num.insert(0, static_cast<std::size_t>(width) - num.size(), '0');
      const fs::path file = dir / (stem + ".block-" + num + ".jsonocel");
      write_ocel_file(part.block_log(i), file);
      files.push_back(file.filename().string());
    }
    manifest["blocks"] = part.size();
    manifest["block_sizes"] = part.block_sizes();
    manifest["files"] = std::move(files);
    std::cout << part.size() << " blocks";
    if (part.size() <= 20) {
      std::cout << ", sizes";
      for (auto s : part.block_sizes()) std::cout << ' ' << s;
    }
    std::cout << '\n';
  } else {
    if (!a.k) throw UsageError("--k is required for strategy '" + a.strategy + "'");
    OcelLog sample;
    if (a.strategy == "events") sample = sample_events(*log, *a.k, a.seed);
    else if (a.strategy == "objects") sample = sample_objects(*log, *a.k, a.seed);
    else sample = sample_object_types(*log, *a.k, a.seed);
    const fs::path file = dir / (stem + ".sample.jsonocel");
    write_ocel_file(sample, file);
    manifest["k"] = *a.k;
    manifest["seed"] = a.seed;
    manifest["files"] = {file.filename().string()};
    std::cout << to_text(summarize(sample));
  }
  write_text_file(dir / (stem + ".manifest.json"), manifest.dump(2) + "\n");
  std::cout << "wrote " << (dir / (stem + ".manifest.json")).string() << '\n';
  return kOk;
}

// --------------------------------------------------------------------------

struct FlattenArgs {
  std::string input;
  std::string type;
  std::string format = "csv";
  std::string output;
};

int cmd_flatten(const FlattenArgs& a) {
  const OcelLog log = load(a.input);
  const auto t = log.lookup_object_type(a.type);
  if (!t || !log.has_object_type(*t)) {
    std::vector<std::string> names;
    for (auto x : log.object_types()) names.push_back(log.name(x));
    std::sort(names.begin(), names.end());
    std::string valid;
    for (const auto& n : names) valid += (valid.empty() ? "" : ", ") + n;
    throw UsageError("unknown object type '" + a.type + "'; valid types: " + valid);
  }
  const FlatLog flat = flatten(log, *t);
  write_output(a.output, a.format == "csv" ? write_flat_csv(flat) : write_flat_json(flat));
  if (!a.output.empty() && a.output != "-")
    std::cout << flat.cases.size() << " cases, " << flat.event_count() << " events -> " << a.output << '\n';
  return kOk;
}

int cmd_gen(const GenParams& p, const std::string& output) {
  try {
    check(p);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  const OcelLog log = generate_o2c(p);
  if (output.empty() || output == "-") {
    std::cout << write_json_ocel(log);
  } else {
    fs::path out(output);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    write_ocel_file(log, out);
    std::cerr << log.event_count() << " events, " << log.object_count() << " objects -> " << output << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Filtering and sampling for object-centric event logs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ocelkit 0.3.0");

  StatsArgs stats;
  auto* c_stats = app.add_subcommand("stats", "Print counts per log, object type and activity");
  c_stats->add_option("log", stats.input, "JSON-OCEL or XML-OCEL file")->required();
  c_stats->add_flag("--json", stats.json, "Machine-readable output");
  c_stats->add_flag("--matrix", stats.matrix, "Include the object type x activity relation matrix");

  std::string validate_input;
  auto* c_validate = app.add_subcommand("validate", "Check the log invariants");
  c_validate->add_option("log", validate_input)->required();

  FilterArgs filter;
  auto* c_filter = app.add_subcommand("filter", "Apply filters in the order given and report retention per step");
  c_filter->add_option("log", filter.input)->required();
  c_filter->add_option("-o,--output", filter.output, "Output file (.jsonocel or .xmlocel)");
  c_filter->add_option("--pipeline", filter.pipeline_file, "Pipeline descriptor (JSON)");
  c_filter->add_option("--save-pipeline", filter.save_pipeline, "Write the pipeline built from the flags");
  c_filter->add_flag("--json", filter.json, "Machine-readable diff report");
  const auto step_option = [&](const char* name, std::vector<std::string>& into, const char* help) {
    return c_filter->add_option(name, into, help)->expected(1)->allow_extra_args(false)->take_all();
  };
  filter.o_ot_min_objects = step_option("--ot-min-objects", filter.ot_min_objects, "OTF1: keep types with >= N objects");
  filter.o_ot_min_events = step_option("--ot-min-events", filter.ot_min_events, "OTF2: keep types related to >= N events");
  filter.o_ot_min_ratio = step_option("--ot-min-activity-ratio", filter.ot_min_ratio,
                                      "OTF3: keep types whose unique-activity ratio is >= R");
  filter.o_ev_min_count = step_option("--ev-min-activity-count", filter.ev_min_count,
                                      "OE1: keep events whose activity occurs >= N times");
  filter.o_ev_essential = c_filter->add_flag("--ev-essential", "OE2: keep essential events (OE3 with the count flag)");
  filter.o_rel_min_ratio = step_option("--rel-min-unique-ratio", filter.rel_min_ratio,
                                       "Keep (type, activity) relations with unique/incidences >= R");
  filter.o_drop_empty = c_filter->add_flag("--drop-empty-events", "Remove events without objects");
  filter.o_drop_orphan = c_filter->add_flag("--drop-orphan-objects", "Remove objects without events");

  SampleArgs sample;
  auto* c_sample = app.add_subcommand("sample", "Draw samples of events, objects, types or connected components");
  c_sample->add_option("log", sample.input)->required();
  c_sample->add_option("--strategy", sample.strategy)
      ->required()
      ->check(CLI::IsMember({"events", "objects", "types", "connected"}));
  c_sample->add_option("--k", sample.k, "Sample size (events, objects, types)");
  c_sample->add_option("--seed", sample.seed, "Random seed")->capture_default_str();
  c_sample->add_option("--out-dir", sample.out_dir, "Output directory");

  FlattenArgs flat;
  auto* c_flatten = app.add_subcommand("flatten", "Convert to a case-based log using one object type as case notion");
  c_flatten->add_option("log", flat.input)->required();
  c_flatten->add_option("--type", flat.type, "Object type used as case notion")->required();
  c_flatten->add_option("--format", flat.format)->check(CLI::IsMember({"csv", "jsonocel-flat"}))->capture_default_str();
  c_flatten->add_option("-o,--output", flat.output, "Output file (default: standard output)");

  GenParams gen;
  std::string gen_output;
  auto* c_gen = app.add_subcommand("gen", "Generate a synthetic order-to-cash log");
  c_gen->add_option("--orders", gen.orders)->capture_default_str();
  c_gen->add_option("--items-min", gen.items_min)->capture_default_str();
  c_gen->add_option("--items-max", gen.items_max)->capture_default_str();
  c_gen->add_option("--deliveries-min", gen.deliveries_min)->capture_default_str();
  c_gen->add_option("--deliveries-max", gen.deliveries_max)->capture_default_str();
  c_gen->add_option("--global-object-rate", gen.global_object_rate, "Share of events linked to the 'Normal' object")
      ->capture_default_str();
  c_gen->add_option("--goods-issue-rate", gen.goods_issue_rate, "Share of items with a goods issue event")
      ->capture_default_str();
  c_gen->add_option("--seed", gen.seed)->capture_default_str();
  c_gen->add_option("-o,--output", gen_output, "Output file (default: standard output)");

#ifdef OCELKIT_WITH_SERVICE
  int port = 8080;
  std::string host = "127.0.0.1";
  std::uint64_t ttl_seconds = 3600;
  ServiceOptions service_options;
  std::string static_dir;
  auto* c_serve = app.add_subcommand("serve", "Run the HTTP API");
  c_serve->add_option("--port", port)->capture_default_str();
  c_serve->add_option("--host", host)->capture_default_str();
  c_serve->add_option("--session-ttl", ttl_seconds, "Idle session lifetime in seconds")->capture_default_str();
  c_serve->add_option("--max-depth", service_options.max_depth, "Snapshots kept per session")->capture_default_str();
  c_serve->add_option("--static-dir", static_dir, "Directory served under /");
#endif

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c_stats) return cmd_stats(stats);
    if (*c_validate) return cmd_validate(validate_input);
    if (*c_filter) return cmd_filter(*c_filter, filter);
    if (*c_sample) return cmd_sample(sample);
    if (*c_flatten) return cmd_flatten(flat);
    if (*c_gen) return cmd_gen(gen, gen_output);
#ifdef OCELKIT_WITH_SERVICE
    if (*c_serve) {
      service_options.session_ttl = std::chrono::seconds(ttl_seconds);
      service_options.static_dir = static_dir;
      Service service(service_options);
      const int bound = service.bind(host, port);
      if (bound < 0) throw UsageError("cannot listen on " + host + ":" + std::to_string(port));
      std::cerr << "listening on http://" << host << ':' << bound << '\n';
      return service.run() ? kOk : kUsage;
    }
#endif
  } catch (const UsageError& e) {
    std::cerr << "ocelkit: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "ocelkit: invalid log: " << e.what() << '\n';
    return kDomain;
  } catch (const InconsistentSummary& e) {
    std::cerr << "ocelkit: " << e.what() << '\n';
    return kDomain;
  } catch (const InvalidArgument& e) {
    std::cerr << "ocelkit: " << e.what() << '\n';
    return kUsage;
  } catch (const std::system_error& e) {
    std::cerr << "ocelkit: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
