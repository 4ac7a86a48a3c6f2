#include "nonroot/cli.hpp"

#include "nonroot/errors.hpp"
#include "nonroot/json_io.hpp"
#include "nonroot/example_suite.hpp"
#include "nonroot/plot.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

namespace nonroot {

namespace {

struct Options {
  std::string input;
  std::string format;  // empty: json, except text for verify-paper
  std::size_t order = 2;
  std::string epsilon;
  std::string domain;
  std::uint64_t budget = kDefaultSearchBudget;
  bool all = false;
  std::string trace;
  std::uint64_t seed = SuiteOptions{}.seed;
  std::string corpus = "corpus";
  std::string output;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string outcome_line(const CertifyOutcome& o, const LabeledEndofunction* names) {
  if (o.certificate) {
    const Json c = encode(*o.certificate, names);
    return "certificate " + c["case"].get<std::string>() + " at x0=" + c["x0"].dump() + ": " +
           std::string(kCertificateScope);
  }
  return "abstain (" + std::string(to_string(o.abstention->reason)) + "): " + o.abstention->detail;
}

int report_outcome(const CertifyOutcome& o, const Options& opt, std::ostream& out,
                   const LabeledEndofunction* names = nullptr) {
  if (opt.format == "text")
    out << outcome_line(o, names) << '\n';
  else
    emit(out, encode(o, names));
  return o.certificate ? kExitOk : kExitAbstain;
}

int cmd_certify(const Options& opt, std::ostream& out) {
  const LabeledEndofunction f = decode_endo(read_json_file(opt.input));
  return report_outcome(certify_finite(f.map), opt, out, &f);
}

MapKind continuous_kind(const Json& j, const std::string& domain) {
  if (domain == "interval") return MapKind::interval;
  if (domain == "circle") return MapKind::circle;
  const MapKind kind = detect_kind(j);
  if (kind != MapKind::interval && kind != MapKind::circle)
    throw InputError("expected an interval map ('pieces') or a circle map ('partition')");
  return kind;
}

int cmd_certify_pl(const Options& opt, std::ostream& out) {
  const Json j = read_json_file(opt.input);
  if (continuous_kind(j, opt.domain) == MapKind::interval) return report_outcome(certify_pl(decode_interval(j)), opt, out);
  return report_outcome(certify_circle(decode_circle(j)), opt, out);
}

int cmd_find_root(const Options& opt, std::ostream& out) {
  const LabeledEndofunction f = decode_endo(read_json_file(opt.input));
  RootQuery q{f.map, opt.order, opt.all ? SearchMode::count_all : SearchMode::first_witness, opt.budget};
  try {
    const RootResult r = find_root(q);
    Json j = encode(r);
    if (r.witness && !f.labels.empty()) j["witness"]["labels"] = f.labels;
    if (opt.format == "text") {
      out << (r.status == RootStatus::found ? "root of order " + std::to_string(opt.order) + " found"
                                            : "no root of order " + std::to_string(opt.order) + " (exhaustive)");
      if (r.witness) out << ": g = " << j["witness"]["map"].dump();
      if (opt.all) out << "; " << r.count << " roots";
      out << " [" << r.explored << " nodes]\n";
    } else {
      emit(out, j);
    }
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    if (opt.format == "text")
      out << "budget exceeded after " << e.explored() << " nodes\n";
    else
      emit(out, {{"status", "budget_exceeded"}, {"witness", nullptr}, {"explored", e.explored()}});
    return kExitBudget;
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

int cmd_construct(const Options& opt, std::ostream& out, std::ostream& err) {
  const Json j = read_json_file(opt.input);
  if (opt.epsilon.empty()) throw InputError("--epsilon is required");
  const Rational eps = parse_rational(opt.epsilon);
  if (eps <= 0 || eps >= 1) throw InputError("--epsilon must lie in (0,1)");
  try {
    Json result;
    Json trace;
    if (continuous_kind(j, opt.domain) == MapKind::circle) {
      const AdmissibleCircleMap h = decode_circle(j);
      const CircleConstruction built = construct_non_iterate(h, eps);
      const ComparableReal dist = sup_distance_circle(built.map, h);
      result = {{"f", encode(built.map)},
                {"certificate", encode(built.certificate)},
                {"sup_distance", {{"angular", to_string(dist.angular())}, {"approx", dist.approx()}}}};
      trace = encode(built.trace);
    } else {
      const IntervalConstruction built = construct_non_iterate_interval(decode_interval(j), eps);
      result = {{"f", encode(built.map)},
                {"certificate", encode(built.certificate)},
                {"sup_distance", to_string(built.distance)}};
      trace = encode(built);
    }
    if (!opt.trace.empty()) write_file(opt.trace, trace.dump(2) + "\n");
    if (opt.format == "text")
      out << "constructed map certified " << result["certificate"]["case"].get<std::string>() << " at x0="
          << result["certificate"]["x0"].get<std::string>() << '\n';
    else
      emit(out, result);
    return kExitOk;
  } catch (const ConstructionFailure& e) {
    err << "construction failed at step '" << e.step() << "': " << e.what() << '\n';
    return kExitAbstain;
  }
}

int cmd_verify_paper(const Options& opt, std::ostream& out) {
  SuiteOptions so;
  so.corpus_dir = opt.corpus;
  so.seed = opt.seed;
  const auto results = verify_paper(so);
  const bool all = std::all_of(results.begin(), results.end(), [](const AnchorResult& r) { return r.passed; });
  if (opt.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back({{"anchor", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    emit(out, {{"anchors", arr}, {"all_passed", all}});
  } else {
    for (const auto& r : results) out << (r.passed ? "PASS " : "FAIL ") << r.name << " -- " << r.detail << '\n';
    out << (all ? "all anchors passed" : "some anchors FAILED") << '\n';
  }
  return all ? kExitOk : kExitAnchorFailed;
}

int cmd_export_plot(const Options& opt, std::ostream& out) {
  const Json j = read_json_file(opt.input);
  const std::string svg = continuous_kind(j, opt.domain) == MapKind::interval ? svg_interval(decode_interval(j))
                                                                              : svg_circle(decode_circle(j));
  if (opt.output.empty())
    out << svg;
  else
    write_file(opt.output, svg);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify that self-maps have no iterative roots, search finite roots, construct non-iterates"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto* certify = app.add_subcommand("certify", "Certify a finite map (C1)");
  certify->add_option("--input", opt.input, "Endofunction JSON")->required();
  add_format(certify);

  auto* certify_pl_cmd = app.add_subcommand("certify-pl", "Certify a piecewise-affine interval or circle map");
  certify_pl_cmd->add_option("--input", opt.input, "Map JSON")->required();
  certify_pl_cmd->add_option("--domain", opt.domain, "interval|circle (default: detect)")
      ->check(CLI::IsMember({"interval", "circle"}));
  add_format(certify_pl_cmd);

  auto* find = app.add_subcommand("find-root", "Exhaustive search for g with g^n = f");
  find->add_option("--input", opt.input, "Endofunction JSON")->required();
  find->add_option("--order", opt.order, "Root order n >= 2")->check(CLI::Range(2, 64));
  find->add_option("--budget", opt.budget, "Search node budget");
  find->add_flag("--all", opt.all, "Count every root");
  add_format(find);

  auto* construct = app.add_subcommand("construct", "Build a certified non-iterate within epsilon of a map");
  construct->add_option("--input", opt.input, "Map JSON")->required();
  construct->add_option("--epsilon", opt.epsilon, "Distance bound p/q in (0,1)")->required();
  construct->add_option("--domain", opt.domain, "circle|interval (default: detect)")
      ->check(CLI::IsMember({"interval", "circle"}));
  construct->add_option("--trace", opt.trace, "Write the construction trace JSON here");
  add_format(construct);

  auto* verify = app.add_subcommand("verify-paper", "Replay every worked example");
  verify->add_option("--corpus", opt.corpus, "Corpus directory");
  verify->add_option("--seed", opt.seed, "Seed of the soundness spot check");
  add_format(verify);

  auto* plot = app.add_subcommand("export-plot", "SVG graph of an interval or circle map");
  plot->add_option("--input", opt.input, "Map JSON")->required();
  plot->add_option("--domain", opt.domain, "interval|circle (default: detect)")
      ->check(CLI::IsMember({"interval", "circle"}));
  plot->add_option("--output", opt.output, "SVG file (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  if (opt.format.empty()) opt.format = *verify ? "text" : "json";
  try {
    if (*certify) return cmd_certify(opt, out);
    if (*certify_pl_cmd) return cmd_certify_pl(opt, out);
    if (*find) return cmd_find_root(opt, out);
    if (*construct) return cmd_construct(opt, out, err);
    if (*verify) return cmd_verify_paper(opt, out);
    if (*plot) return cmd_export_plot(opt, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const AdmissibilityError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace nonroot
