// defperm: exact tools for deformed permutahedra and the submodular cone.
//
// Exit codes: 0 success, 1 negative verdict, 2 input error, 3 guard exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "defperm/grower.hpp"
#include "defperm/io.hpp"
#include "defperm/raycone.hpp"

namespace {

using namespace defperm;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kGuard = 3;

struct Config {
  int jobs = 1;
  int max_n = 10;
  bool full = false;
  std::size_t sample = 10000;
  std::uint64_t seed = 0x5eed;

  VerifyOptions verify() const {
    VerifyOptions o;
    o.full = full;
    o.sample_pairs = sample;
    o.sample_members = 100;
    o.seed = seed;
    o.jobs = jobs;
    o.max_n = max_n;
    return o;
  }
};

// Guards abort with exit 3; every other domain error is a negative verdict.
int verdict_code(const std::domain_error& e) {
  const std::string msg = e.what();
  for (const char* guard : {"ground set too large", "sc_facets: n out of range",
                            "n = 5 requires the long-run flag", "ambient dimension exceeds guard"})
    if (msg.rfind(guard, 0) == 0) return kGuard;
  return kNegative;
}

void emit(const Json& j, const std::string& output) {
  if (output.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(output, j);
}

int cmd_check(const std::string& input, const std::string& output, const Config& cfg) {
  const SetFunction f = load_polytope(read_json_file(input), cfg.max_n);
  Json rep;
  rep["n"] = f.n();
  if (auto t = f.first_violated_triple()) {
    rep["submodular"] = false;
    rep["violated_triple"] = Json{{"s", t->s}, {"y", t->y + 1}, {"z", t->z + 1}};
    emit(rep, output);
    return kNegative;
  }
  rep["submodular"] = true;
  rep["tight_count"] = tight_set(f).size();
  rep["defo_dim"] = defo_dim(f);
  if (f.is_modular()) {
    rep["point"] = true;
    rep["indecomposable"] = false;
  } else {
    rep["indecomposable"] = is_indecomposable(f).indecomposable;
  }
  emit(rep, output);
  return kOk;
}

int cmd_fertile(const std::string& a, const std::string& b, const std::string& output,
                const Config& cfg) {
  const SetFunction p = load_polytope(read_json_file(a), cfg.max_n);
  const SetFunction q = load_polytope(read_json_file(b), cfg.max_n);
  if (!is_indecomposable(p).indecomposable || !is_indecomposable(q).indecomposable)
    throw std::domain_error("fertility is defined for indecomposable non-points");
  const SeedReport rep = seed_report(p, q);
  emit(to_json(rep), output);
  return rep.fertile ? kOk : kNegative;
}

int cmd_compose(const std::string& a, const std::string& b, const std::string& output,
                const Config& cfg) {
  const SetFunction p = load_polytope(read_json_file(a), cfg.max_n);
  const SetFunction q = load_polytope(read_json_file(b), cfg.max_n);
  if (!is_indecomposable(p).indecomposable || !is_indecomposable(q).indecomposable)
    throw std::domain_error("fertility is defined for indecomposable non-points");
  const ComposeResult r = compose(p, q);
  Json rep;
  rep["lambda"] = to_string(r.lambda);
  rep["mu"] = "1";
  Json shift = Json::array();
  for (const Rat& x : r.shift) shift.push_back(to_string(x));
  rep["shift"] = std::move(shift);
  rep["defo_dim"] = r.certificate->defo_dim;
  rep["indecomposable"] = r.certificate->indecomposable;
  std::cout << rep.dump(2) << "\n";
  if (!output.empty()) write_json_file(output, to_json(r.lifted));
  return kOk;
}

int cmd_vertices(const std::string& input, const std::string& output, const Config& cfg) {
  const SetFunction f = load_polytope(read_json_file(input), cfg.max_n);
  emit(to_json(f.n(), VertexTable(f, cfg.max_n).distinct()), output);
  return kOk;
}

int cmd_enumerate(int n, const std::string& output, bool long_run,
                  const std::string& checkpoint) {
  EnumerateOptions opts;
  opts.long_run = long_run;
  opts.checkpoint_path = checkpoint;
  if (long_run)
    opts.progress = [](std::size_t done, std::size_t total, std::size_t rays) {
      std::cerr << "facets " << done << "/" << total << ", rays " << rays << "\n";
    };
  const RaySet rs = enumerate_rays(sc_facets(n), opts);
  if (output.empty()) {
    write_ray_set(std::cout, rs);
  } else {
    std::ofstream out(output);
    if (!out) throw std::invalid_argument("cannot write " + output);
    write_ray_set(out, rs);
  }
  return kOk;
}

std::string level_path(std::string prefix, int level) {
  const std::string suffix = ".json";
  if (prefix.size() >= suffix.size() &&
      prefix.compare(prefix.size() - suffix.size(), suffix.size(), suffix) == 0)
    prefix.resize(prefix.size() - suffix.size());
  return prefix + "-n" + std::to_string(level) + ".json";
}

int cmd_grow(const std::string& input, const std::string& output, int steps, const Config& cfg) {
  Family fam = family_from_json(read_json_file(input), cfg.max_n);
  const std::string prefix = output.empty() ? input : output;
  for (int step = 0; step < steps; ++step) {
    if (fam.n + 1 > cfg.max_n) throw std::domain_error("ground set too large");
    fam = grow_once(fam, cfg.verify());
    write_json_file(level_path(prefix, fam.n), to_json(fam));
    std::cout << "n=" << fam.n << " members=" << fam.members.size() << " -> "
              << level_path(prefix, fam.n) << "\n";
  }
  return kOk;
}

int cmd_verify_family(const std::string& input, const std::string& output, const Config& cfg) {
  Family fam = family_from_json(read_json_file(input), cfg.max_n);
  const FamilyReport rep = verify_family(fam, cfg.verify());
  std::cout << to_json(rep).dump(2) << "\n";
  if (!output.empty()) write_json_file(output, to_json(fam));
  return rep.pass() ? kOk : kNegative;
}

int cmd_bounds(int k, const std::string& p, int n, const std::string& output) {
  Int p_val;
  try {
    p_val = Int(p);
  } catch (const std::exception&) {
    throw std::invalid_argument("family size is not an integer: " + p);
  }
  emit(to_json(bound_report(k, p_val, n)), output);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for deformed permutahedra and the submodular cone"};
  app.require_subcommand(1);

  Config cfg;
  std::string input, output, second;
  int steps = 1, level = 0;
  bool long_run = false;
  std::string checkpoint, pk = "11";
  int bk = 4, bn = 5;

  auto add_common = [&](CLI::App* sub, bool with_verify) {
    sub->add_option("-o,--output", output, "Output file (default: stdout)");
    sub->add_option("--max-n", cfg.max_n, "Ground set size guard")
        ->envname("DEFPERM_MAX_N")
        ->check(CLI::Range(1, 12));
    if (with_verify) {
      sub->add_option("--jobs", cfg.jobs, "Worker threads")
          ->envname("DEFPERM_JOBS")
          ->check(CLI::PositiveNumber);
      sub->add_flag("--full", cfg.full, "Force full verification at n >= 6")
          ->envname("DEFPERM_FULL");
      sub->add_option("--sample", cfg.sample, "Sampled pair count at n >= 6")
          ->envname("DEFPERM_SAMPLE");
      sub->add_option("--seed", cfg.seed, "PRNG seed for sampled verification")
          ->envname("DEFPERM_SEED");
    }
  };

  CLI::App* check = app.add_subcommand("check", "Submodularity and indecomposability report");
  check->add_option("-i,--input", input, "SetFunction or polytope file")->required();
  add_common(check, false);

  CLI::App* fertile = app.add_subcommand("fertile", "Seed report for an ordered pair");
  fertile->add_option("first", input, "P file")->required();
  fertile->add_option("second", second, "Q file")->required();
  add_common(fertile, false);

  CLI::App* comp = app.add_subcommand("compose", "Compose a fertile pair one level up");
  comp->add_option("first", input, "P file")->required();
  comp->add_option("second", second, "Q file")->required();
  add_common(comp, false);

  CLI::App* verts = app.add_subcommand("vertices", "Vertex list of a deformed permutahedron");
  verts->add_option("-i,--input", input, "SetFunction or polytope file")->required();
  add_common(verts, false);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Extreme rays of the submodular cone");
  enumerate->add_option("n", level, "Ground set size")->required();
  enumerate->add_flag("--long-run", long_run, "Allow the hours-scale n = 5 run")
      ->envname("DEFPERM_LONG_RUN");
  enumerate->add_option("--checkpoint", checkpoint, "Checkpoint file, written every 10 facets");
  add_common(enumerate, false);

  CLI::App* grow = app.add_subcommand("grow", "Grow a pairwise-fertile family");
  grow->add_option("-i,--input", input, "Family file")->required();
  grow->add_option("--steps", steps, "Growth steps")->check(CLI::PositiveNumber);
  add_common(grow, true);

  CLI::App* verify = app.add_subcommand("verify-family", "Re-verify a family file");
  verify->add_option("-i,--input", input, "Family file")->required();
  add_common(verify, true);

  CLI::App* bounds = app.add_subcommand("bounds", "Ray count bounds from a family");
  bounds->add_option("k", bk, "Family level")->required();
  bounds->add_option("p", pk, "Family size (big integer)")->required();
  bounds->add_option("n", bn, "Target level")->required();
  add_common(bounds, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(check)) return cmd_check(input, output, cfg);
    if (app.got_subcommand(fertile)) return cmd_fertile(input, second, output, cfg);
    if (app.got_subcommand(comp)) return cmd_compose(input, second, output, cfg);
    if (app.got_subcommand(verts)) return cmd_vertices(input, output, cfg);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(level, output, long_run, checkpoint);
    if (app.got_subcommand(grow)) return cmd_grow(input, output, steps, cfg);
    if (app.got_subcommand(verify)) return cmd_verify_family(input, output, cfg);
    if (app.got_subcommand(bounds)) return cmd_bounds(bk, pk, bn, output);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    const int code = verdict_code(e);
    std::cerr << (code == kGuard ? "guard: " : "verdict: ") << e.what() << "\n";
    return code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kGuard;
  }
  return kInputError;
}
