// Command-line front end: run scripts, single propositions, suites and
// strategy comparisons.
//
// Exit status: 0 success, 1 a failed assertion, claim or construction,
// 2 usage, input or parse errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "euclid/dsl/script.hpp"
#include "euclid/error.hpp"
#include "euclid/render/svg.hpp"
#include "euclid/verify/verify.hpp"

using namespace euclid;

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;

/// Thrown for conditions that exit with kUsage.
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Usage("cannot write " + path);
}

std::uint64_t seed_from(std::uint64_t flag) {
  const char* env = std::getenv("EUCLID_SEED");
  if (!env || !*env) return flag;
  char* end = nullptr;
  std::uint64_t v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw Usage(std::string("EUCLID_SEED is not a number: ") + env);
  return v;
}

std::optional<geom::Side> side_from(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "left") return geom::Side::Left;
  if (s == "right") return geom::Side::Right;
  throw Usage("--side takes left or right, not " + s);
}

/// Full id with an optional strategy; unknown ids or strategies are usage errors.
std::string resolve(const std::string& id, const std::string& strategy) {
  std::string full = strategy.empty() ? id : id + "." + strategy;
  try {
    if (!elements::find_signature(full)) throw Usage("unknown proposition " + id);
  } catch (const StrategyInapplicable& e) {
    throw Usage(e.what());
  }
  return full;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

verify::Instance instance_for(const std::string& id, const std::string& input, std::optional<geom::Side> side,
                              std::uint64_t seed) {
  verify::Instance inst;
  if (input.empty()) {
    std::string strategy;
    const auto* sig = elements::find_signature(id, &strategy);
    auto rng = verify::instance_rng(seed, 0, sig->id);
    try {
      inst = verify::generate(sig->id, rng);
    } catch (const UnknownProposition&) {
      throw Usage(sig->id + " has no instance generator; give --input");
    }
  } else {
    try {
      inst.args = dsl::read_instance(slurp(input));
    } catch (const ParseError& e) {
      throw Usage(input + ":\n" + e.what());
    }
  }
  if (side) inst.side = side;
  return inst;
}

render::Scene scene_of(const dsl::Run& run) {
  render::Scene s;
  for (const auto& [n, o] : run.objects) {
    if (const auto* p = std::get_if<geom::Point>(&o)) {
      s.labels.emplace_back(n, *p);
      continue;
    }
    render::Role role = render::Role::Construction;
    if (std::holds_alternative<geom::Circle>(o)) role = render::Role::Auxiliary;
    if (std::holds_alternative<geom::Figure>(o)) role = render::Role::Result;
    s.items.push_back({n, o, role});
  }
  for (const auto& [n, r] : run.results) {
    for (const auto& [k, o] : r.objects) {
      if (!std::holds_alternative<geom::Point>(o)) s.items.push_back({n + "." + k, o, render::Role::Result});
    }
  }
  return s;
}

void write_svg(const std::string& path, const render::Scene& scene, const std::string& title) {
  render::Options o;
  o.title = title;
  spit(path, render::render(scene, o));
}

// ---------------------------------------------------------------- commands

int cmd_run(const std::string& path, bool trace, const std::string& svg) {
  std::string text = slurp(path);
  std::vector<dsl::Diagnostic> diags;
  dsl::Run run = dsl::run_text(text, diags);
  if (!diags.empty()) {
    for (const auto& d : diags) std::cerr << dsl::format(d, path) << "\n";
    return kUsage;
  }
  std::cout << run.report();
  if (trace) std::cout << run.trace.serialize();
  if (run.failure) std::cerr << dsl::format(*run.failure, path) << " [" << run.failure_kind << "]\n";
  if (!svg.empty() && !run.failure) write_svg(svg, scene_of(run), path);
  return run.ok() ? 0 : kFailure;
}

int cmd_prop(const std::string& id, const std::string& strategy, const std::string& input, const std::string& side,
             std::uint64_t seed, bool trace, const std::string& svg) {
  std::string full = resolve(id, strategy);
  verify::Instance inst = instance_for(full, input, side_from(side), seed);
  elements::PropositionResult r;
  try {
    r = elements::invoke(full, inst.args, inst.side);
  } catch (const Error& e) {
    std::cerr << full << ": " << e.kind() << ": " << e.what() << "\n";
    return kFailure;
  }
  std::cout << r.id << "\n";
  for (const auto& [n, o] : r.givens) std::cout << "given " << n << " = " << elements::describe(o) << "\n";
  std::cout << r.report();
  for (const auto& [n, o] : r.objects) std::cout << "output " << n << " = " << elements::describe(o) << "\n";
  for (const auto& [k, v] : r.metrics) std::cout << k << ": " << v << "\n";
  auto c = r.trace.total();
  std::cout << "postulate 1: " << c.joins << "  postulate 2: " << c.extends << "  postulate 3: " << c.circles
            << "  superpositions: " << c.superpositions << "  max radical depth: " << c.max_radical_depth << "\n";
  if (trace) std::cout << r.trace.serialize();
  if (!svg.empty()) write_svg(svg, render::scene_of(r), r.id);
  bool ok = std::all_of(r.verification.begin(), r.verification.end(), [](const elements::Claim& k) { return k.pass; });
  return ok ? 0 : kFailure;
}

int cmd_suite(const std::string& id, int n, std::uint64_t seed, const std::string& strategies, unsigned threads,
              bool records) {
  if (n < 1) throw Usage("--n must be positive");
  std::vector<std::string> ids;
  if (id == "all") {
    if (!strategies.empty()) throw Usage("--strategies needs a single proposition");
    ids = verify::suite_ids();
  } else {
    resolve(id, "");
    ids = {id};
  }
  bool ok = true;
  for (const auto& one : ids) {
    verify::SuiteReport rep;
    try {
      rep = verify::run_suite(one, n, seed, split_list(strategies), threads);
    } catch (const StrategyInapplicable& e) {
      throw Usage(e.what());
    } catch (const UnknownProposition& e) {
      throw Usage(e.what());
    }
    std::cout << (records ? rep.records() : rep.text());
    ok = ok && rep.ok();
  }
  return ok ? 0 : kFailure;
}

int cmd_compare(const std::string& id, const std::string& strategies, const std::string& input,
                const std::string& side, std::uint64_t seed, bool records) {
  std::vector<std::string> names = split_list(strategies);
  resolve(id, "");
  for (const auto& s : names) resolve(id, s);
  verify::Instance inst = instance_for(id, input, side_from(side), seed);
  auto rep = verify::compare(id, names, inst);
  std::cout << (records ? rep.records() : rep.text());
  return rep.ok() ? 0 : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact straightedge-and-compass constructions of Elements Book I"};
  app.require_subcommand(1);

  std::string script, svg, id, strategy, strategies, input, side;
  bool trace = false;
  bool records = false;
  std::uint64_t seed = 1;
  int n = 100;
  unsigned threads = 0;

  auto* run = app.add_subcommand("run", "Parse, check and interpret a .euc script");
  run->add_option("script", script, "Script file")->required();
  run->add_flag("--trace", trace, "Print the construction trace");
  run->add_option("--svg", svg, "Write the figure as SVG");

  auto* prop = app.add_subcommand("prop", "Run one proposition on a described or generated instance");
  prop->add_option("id", id, "Proposition id, e.g. I.44 or I.44.alnayrizi")->required();
  prop->add_option("--strategy", strategy, "Strategy name");
  prop->add_option("--input", input, "Instance file: object declarations in script syntax");
  prop->add_option("--side", side, "left or right, for propositions that take a side");
  prop->add_option("--seed", seed, "Seed of the generated instance when no --input is given");
  prop->add_flag("--trace", trace, "Print the construction trace");
  prop->add_option("--svg", svg, "Write the figure as SVG");

  auto* suite = app.add_subcommand("suite", "Run verification suites over random instances");
  suite->add_option("id", id, "Proposition id or 'all'")->required();
  suite->add_option("--n", n, "Instances per strategy");
  suite->add_option("--seed", seed, "Seed (EUCLID_SEED overrides)");
  suite->add_option("--strategies", strategies, "Comma-separated strategies (default: all)");
  suite->add_option("--threads", threads, "Worker threads (default: hardware)");
  suite->add_flag("--records", records, "key=value records instead of text");

  auto* cmp = app.add_subcommand("compare", "Run several strategies on one instance");
  cmp->add_option("id", id, "Proposition id")->required();
  cmp->add_option("--strategies", strategies, "Comma-separated strategies (default: all)");
  cmp->add_option("--input", input, "Instance file: object declarations in script syntax");
  cmp->add_option("--side", side, "left or right");
  cmp->add_option("--seed", seed, "Seed of the generated instance when no --input is given");
  cmp->add_flag("--records", records, "key=value records instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*run) return cmd_run(script, trace, svg);
    if (*prop) return cmd_prop(id, strategy, input, side, seed_from(seed), trace, svg);
    if (*suite) return cmd_suite(id, n, seed_from(seed), strategies, threads, records);
    if (*cmp) return cmd_compare(id, strategies, input, side, seed_from(seed), records);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
