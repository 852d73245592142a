#include "stabcv/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "stabcv/engine.hpp"
#include "stabcv/error.hpp"
#include "stabcv/json_io.hpp"
#include "stabcv/limit_series.hpp"
#include "stabcv/presets.hpp"
#include "stabcv/pyramid.hpp"
#include "stabcv/stabilize.hpp"
#include "stabcv/verify.hpp"

namespace stabcv {

std::pair<std::size_t, std::size_t> parse_subsample(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidInput("subsample must look like offset:stride");
  try {
    std::size_t used = 0;
    const auto offset = std::stoul(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const auto stride = std::stoul(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument(text);
    if (stride == 0) throw InvalidInput("subsample stride must be at least 1");
    return {offset, stride};
  } catch (const std::logic_error&) {
    throw InvalidInput("subsample must look like offset:stride, got '" + text + "'");
  }
}

std::vector<std::size_t> parse_sequence(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw InvalidInput("bad vertex '" + item + "' in sequence");
    }
  }
  if (out.empty()) throw InvalidInput("mutation sequence is empty");
  return out;
}

namespace {

// What to run: the preset, or a quiver file with an explicit sequence.
struct Source {
  const Preset* preset = nullptr;
  std::optional<Quiver> quiver;
  std::vector<std::size_t> sequence;
  TwoCyclePolicy policy = TwoCyclePolicy::CancelTwoCycles;
};

Source resolve_source(const CommandConfig& c) {
  if (c.preset.has_value() == c.quiver_path.has_value())
    throw InvalidInput("give exactly one of --preset or --quiver");
  Source s;
  if (c.preset) {
    s.preset = &preset(*c.preset);
    s.quiver = s.preset->quiver();
    s.sequence = s.preset->sequence;
    s.policy = s.preset->policy;
    if (c.two_cycles) throw InvalidInput("--two-cycles applies to --quiver only");
  } else {
    std::ifstream in(*c.quiver_path);
    if (!in) throw InvalidInput("cannot read quiver file " + *c.quiver_path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("quiver file is not JSON: ") + e.what());
    }
    s.quiver = quiver_from_json(j);
    if (!c.sequence) throw InvalidInput("--quiver needs --sequence");
    if (c.two_cycles) s.policy = parse_two_cycle_policy(*c.two_cycles);
  }
  if (c.sequence) s.sequence = *c.sequence;
  return s;
}

std::size_t require_steps(const CommandConfig& c) {
  if (!c.steps) throw InvalidInput("--steps is required");
  return *c.steps;
}

// The run, subsampled as requested (presets carry a default for stabilize).
MutationTrace traced(const CommandConfig& c, const Source& s, bool preset_subsample) {
  MutationTrace t = run(*s.quiver, s.sequence, s.policy, require_steps(c));
  if (c.subsample) return subsample(t, c.subsample->first, c.subsample->second);
  if (preset_subsample && s.preset && s.preset->subsample_stride != 1)
    return subsample(t, s.preset->subsample_offset, s.preset->subsample_stride);
  return t;
}

std::string text_of(const Json& j) { return j.dump(2) + "\n"; }

std::string do_mutate(const CommandConfig& c) {
  const Source s = resolve_source(c);
  const MutationTrace t = traced(c, s, false);
  if (c.format == OutputFormat::Json) return text_of(to_json(t, true));
  std::ostringstream os;
  for (const auto& rec : t.records()) {
    os << "k=" << rec.k;
    if (rec.vertex) os << " vertex=" << *rec.vertex;
    os << "\n  arrows=" << rec.quiver.arrow_matrix().to_string() << "\n  C=" << rec.c.to_string()
       << "\n";
  }
  return os.str();
}

std::string do_fpoly(const CommandConfig& c) {
  const Source s = resolve_source(c);
  const MutationTrace t = traced(c, s, false);
  const StepRecord& last = t[t.steps()];
  if (c.format == OutputFormat::Json) return text_of(c.all_steps ? to_json(t, false) : to_json(last.f));
  if (!c.all_steps) return canonical_text(last.f) + "\n";
  std::ostringstream os;
  for (const auto& rec : t.records()) os << "F_" << rec.k << " = " << canonical_text(rec.f) << "\n";
  return os.str();
}

std::string do_stabilize(const CommandConfig& c) {
  const Source s = resolve_source(c);
  const MutationTrace t = traced(c, s, true);
  StableSeriesOptions opts{.period = 1, .window = c.window, .degree_cap = c.degree, .normalization = {}};
  if (c.normalize_parity) {
    if (!s.preset && s.quiver->mutable_count() != 2)
      throw InvalidInput("--normalize-parity needs a preset unless the quiver has two vertices");
    opts.normalization = Normalization{
        s.preset ? s.preset->normalization() : MonomialSubstitution::swap(2, 0, 1), Parity::Even};
  } else {
    opts.period = s.preset ? s.preset->period : 2;
  }
  if (c.period) opts.period = *c.period;
  const StableReport r = stable_series(t, opts);
  if (c.format == OutputFormat::Json) return text_of(to_json(r));
  std::ostringstream os;
  os << "degree_cap=" << r.degree_cap << " period=" << r.period << " window=" << r.window
     << " horizon=" << r.horizon << " terms=" << r.terms.size() << "\n";
  for (const auto& term : r.terms)
    os << canonical_text(Polynomial::monomial(term.exponent, term.coefficient))
       << "  first_stable_step=" << term.first_stable_step << "\n";
  os << "series: " << canonical_text(r.series()) << "\n";
  return os.str();
}

std::string monomial_text(const ExponentVector& e) { return canonical_text(Polynomial::monomial(e)); }

std::string do_pyramid(const CommandConfig& c) {
  if (c.limit) {
    if (c.shape || c.k) throw InvalidInput("--limit does not take --shape or --k");
    if (c.degree < 0) throw InvalidInput("--degree must be nonnegative");
    Polynomial p;
    if (*c.limit == "S")
      p = limit_series_S(c.degree);
    else if (*c.limit == "T")
      p = limit_series_T(c.degree, 2);
    else if (*c.limit == "T4")
      p = limit_series_T(c.degree, 4);
    else
      throw InvalidInput("--limit must be S, T or T4");
    return c.format == OutputFormat::Json ? text_of(to_json(p)) : canonical_text(p) + "\n";
  }
  if (!c.shape || !c.k) throw InvalidInput("pyramid needs --shape and --k, or --limit");
  const PyramidShape shape = build_shape(*c.shape, *c.k);
  const ColorScheme scheme = ColorScheme::for_kind(*c.shape);
  if (c.dump_shape) return text_of(to_json(shape, scheme));
  if (!c.simple) {
    const Polynomial p = partition_function(shape, scheme);
    return c.format == OutputFormat::Json ? text_of(to_json(p)) : canonical_text(p) + "\n";
  }
  const auto parts = enumerate_simple_partitions(shape, scheme);
  if (c.format == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& sp : parts) {
      Json rows = Json::array();
      for (const auto& r : sp.rows)
        rows.push_back(Json{{"j", r.layer}, {"r", r.row}, {"left_kept", r.kept.left_kept},
                            {"right_kept", r.kept.right_kept}});
      const ExponentVector lim = limit_exponent(sp.stats, scheme.nvars());
      arr.push_back(Json{{"rows", std::move(rows)},
                         {"weight", std::vector<std::int64_t>(sp.weight.begin(), sp.weight.end())},
                         {"limit_exp", std::vector<std::int64_t>(lim.begin(), lim.end())}});
    }
    return text_of(Json{{"count", parts.size()}, {"partitions", std::move(arr)}});
  }
  std::ostringstream os;
  os << "simple partitions: " << parts.size() << "\n";
  for (const auto& sp : parts) {
    os << "rows=";
    if (sp.rows.empty()) os << "none";
    for (std::size_t i = 0; i < sp.rows.size(); ++i) {
      const auto& r = sp.rows[i];
      os << (i ? ";" : "") << "(" << r.layer << "," << r.row << ":" << r.kept.left_kept << ","
         << r.kept.right_kept << ")";
    }
    os << " weight=" << monomial_text(sp.weight)
       << " limit=" << monomial_text(limit_exponent(sp.stats, scheme.nvars())) << "\n";
  }
  return os.str();
}

CommandResult do_verify(const CommandConfig& c) {
  const Source s = resolve_source(c);
  const auto results = s.preset && !c.sequence
                           ? verify_preset(*s.preset, c.max_k)
                           : verify_quiver(*s.quiver, s.sequence, s.policy, c.steps.value_or(c.max_k));
  std::size_t failed = 0;
  Json arr = Json::array();
  std::ostringstream os;
  for (const auto& r : results) {
    failed += r.passed ? 0 : 1;
    os << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) os << ": " << r.detail;
    os << "\n";
    arr.push_back(Json{{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  os << results.size() - failed << "/" << results.size() << " checks passed\n";
  CommandResult out;
  out.exit_code = failed == 0 ? 0 : 1;
  out.output = c.format == OutputFormat::Json
                   ? text_of(Json{{"passed", failed == 0}, {"checks", std::move(arr)}})
                   : os.str();
  return out;
}

bool is_input_error(const Error& e) {
  return dynamic_cast<const InvalidInput*>(&e) || dynamic_cast<const ParseError*>(&e) ||
         dynamic_cast<const VariableCountMismatch*>(&e) || dynamic_cast<const IndexOutOfRange*>(&e) ||
         dynamic_cast<const SelfLoopInInput*>(&e) || dynamic_cast<const FrozenVertexMutation*>(&e) ||
         dynamic_cast<const InvalidQuiver*>(&e) || dynamic_cast<const InvalidSize*>(&e) ||
         dynamic_cast<const InsufficientTrace*>(&e) || dynamic_cast<const ShapeTooLarge*>(&e);
}

}  // namespace

CommandResult dispatch(const CommandConfig& config) {
  CommandResult result;
  try {
    switch (config.command) {
      case Command::Mutate: result.output = do_mutate(config); break;
      case Command::Fpoly: result.output = do_fpoly(config); break;
      case Command::Stabilize: result.output = do_stabilize(config); break;
      case Command::Pyramid: result.output = do_pyramid(config); break;
      case Command::Verify: result = do_verify(config); break;
    }
  } catch (const Error& e) {
    result.exit_code = is_input_error(e) ? 2 : 1;
    result.error = e.what();
  }
  return result;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable cluster variables: quiver mutation, F-polynomials and pyramid oracles"};
  app.require_subcommand(1);
  CommandConfig config;
  std::string format = "text", subsample_text, sequence_text, shape_text;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", config.out, "write output to this file");
  };
  auto source = [&](CLI::App* sub) {
    auto* p = sub->add_option("--preset", config.preset, "kronecker, conifold or f0");
    auto* q = sub->add_option("--quiver", config.quiver_path, "JSON quiver file");
    p->excludes(q);
    sub->add_option("--sequence", sequence_text, "comma-separated mutable vertices");
    sub->add_option("--two-cycles", config.two_cycles, "cancel or keep (quiver files)");
    sub->add_option("--subsample", subsample_text, "offset:stride");
  };

  auto* mutate = app.add_subcommand("mutate", "run mutations and print quivers and C-matrices");
  auto* fpoly = app.add_subcommand("fpoly", "print the F-polynomial of the last step");
  auto* stabilize = app.add_subcommand("stabilize", "report the stable terms of a run");
  auto* pyramid = app.add_subcommand("pyramid", "pyramid partition functions and limit series");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  for (auto* sub : {mutate, fpoly, stabilize, verify}) {
    source(sub);
    common(sub);
    sub->add_option("--steps", config.steps, "number of mutations");
  }
  fpoly->add_flag("--all", config.all_steps, "print every step");
  stabilize->add_option("--degree", config.degree, "total degree cap");
  stabilize->add_option("--period", config.period, "stride between compared steps");
  stabilize->add_option("--window", config.window, "agreements required");
  stabilize->add_flag("--normalize-parity", config.normalize_parity, "permute even steps");
  verify->add_option("--max-k", config.max_k, "largest step checked");
  common(pyramid);
  pyramid->add_option("--shape", shape_text, "row, ad2 or ad4");
  pyramid->add_option("--k", config.k, "pyramid size");
  pyramid->add_flag("--simple", config.simple, "list simple partitions");
  pyramid->add_flag("--dump-shape", config.dump_shape, "print stones and supports as JSON");
  pyramid->add_option("--limit", config.limit, "S, T or T4");
  pyramid->add_option("--degree", config.degree, "total degree cap for --limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  CommandResult result;
  try {
    if (mutate->parsed()) config.command = Command::Mutate;
    if (fpoly->parsed()) config.command = Command::Fpoly;
    if (stabilize->parsed()) config.command = Command::Stabilize;
    if (pyramid->parsed()) config.command = Command::Pyramid;
    if (verify->parsed()) config.command = Command::Verify;
    config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
    if (!subsample_text.empty()) config.subsample = parse_subsample(subsample_text);
    if (!sequence_text.empty()) config.sequence = parse_sequence(sequence_text);
    if (!shape_text.empty()) config.shape = parse_shape_kind(shape_text);
    result = dispatch(config);
  } catch (const Error& e) {
    result.exit_code = 2;
    result.error = e.what();
  }

  if (!result.error.empty()) err << "error: " << result.error << "\n";
  if (config.out && result.exit_code != 2) {
    std::ofstream file(*config.out);
    if (!file) {
      err << "error: cannot write " << *config.out << "\n";
      return 2;
    }
    file << result.output;
  } else {
    out << result.output;
  }
  return result.exit_code;
}

}  // namespace stabcv
