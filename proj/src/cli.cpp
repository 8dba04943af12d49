#include "relgroup/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "relgroup/error.hpp"
#include "relgroup/etperm.hpp"
#include "relgroup/fingroup.hpp"
#include "relgroup/freegroup.hpp"
#include "relgroup/graph_op.hpp"
#include "relgroup/relation.hpp"
#include "relgroup/scenarios.hpp"
#include "relgroup/serialize.hpp"

namespace relgroup::cli {

namespace {

using nlohmann::json;

struct Flags {
  std::size_t n = 0;
  std::string poset;
  std::string start = "forward";
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t pairs = 200;
  std::vector<std::string> in;
  std::string out;
  std::string format = "json";
  std::size_t m = 0;
  std::size_t lo = 0, hi = 0;
  std::string graph;
  std::string spec;
  std::string group;
  std::string subset;
  std::string subgroup;
  std::string rho, sigma;
  std::string point;
  std::string kind;
  std::size_t i = 0, j = 0;
  std::size_t budget = 4;
};

struct Outcome {
  json value;
  int code = kOk;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json load(std::string const& path) { return parse_json(read_file(path), path); }

// Prefixes format errors with the file they came from.
template <typename F>
auto from_file(std::string const& path, F&& parse) {
  json const j = load(path);
  try {
    return parse(j);
  } catch (FormatError const& e) {
    throw FormatError(path + ": " + e.what());
  }
}

ChainStart start_of(Flags const& f) {
  return f.start == "converse" ? ChainStart::converse : ChainStart::forward;
}

// The relation named by --poset/--n, or read from the first --in file.
Relation relation_arg(Flags const& f) {
  if (!f.poset.empty()) {
    if (f.n == 0) throw FormatError("--poset needs --n");
    return named_relation(f.poset, f.n);
  }
  if (f.in.empty()) throw FormatError("expected --poset or --in");
  return from_file(f.in.front(), relation_from_json);
}

std::vector<FiniteGroup::Element> id_list(std::string const& text, char const* flag) {
  std::vector<FiniteGroup::Element> out;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      unsigned long const v = std::stoul(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(static_cast<FiniteGroup::Element>(v));
    } catch (std::logic_error const&) {
      throw FormatError(std::string(flag) + ": bad element id '" + token + "'");
    }
  }
  return out;
}

GroupPtr group_arg(Flags const& f) {
  if (!f.group.empty()) {
    if (f.n == 0) throw FormatError("--group needs --n");
    return group_make(f.group == "symmetric" ? GroupKind::symmetric : GroupKind::cyclic, f.n);
  }
  if (f.in.empty()) throw FormatError("expected --group or --in");
  return from_file(f.in.front(), group_from_json);
}

GroupSubset subset_arg(GroupPtr const& g, std::string const& text, char const* flag) {
  if (text.empty()) throw FormatError(std::string(flag) + " is required");
  auto const ids = id_list(text, flag);
  for (auto id : ids)
    if (id >= g->order()) throw FormatError(std::string(flag) + ": id out of range");
  return GroupSubset(g, ids);
}

EventualPermutation perm_arg(Flags const& f, std::size_t k) {
  if (f.in.size() <= k) throw FormatError("expected " + std::to_string(k + 1) + " --in file(s)");
  return from_file(f.in[k], permutation_from_json);
}

Outcome report_outcome(ScenarioReport const& r) {
  return {r.to_json(), r.all_pass() ? kOk : kClaimFailed};
}

void add_relation_source(CLI::App* cmd, Flags& f) {
  cmd->add_option("--poset", f.poset, "named relation")
      ->check(CLI::IsMember({"fence", "crown", "k135"}));
  cmd->add_option("--n", f.n, "size parameter of the named relation (k135: 1, 3 or 5)");
  cmd->add_option("--in", f.in, "relation JSON file");
}

void add_start(CLI::App* cmd, Flags& f) {
  cmd->add_option("--start", f.start, "first factor of the chain")
      ->check(CLI::IsMember({"forward", "converse"}));
}

void add_group_source(CLI::App* cmd, Flags& f) {
  cmd->add_option("--group", f.group, "group family")
      ->check(CLI::IsMember({"cyclic", "symmetric"}));
  cmd->add_option("--n", f.n, "family parameter");
  cmd->add_option("--in", f.in, "group JSON file");
}

void add_range(CLI::App* cmd, Flags& f) {
  cmd->add_option("--lo", f.lo, "smallest n");
  cmd->add_option("--hi", f.hi, "largest n");
  cmd->add_option("--n", f.n, "single n (sets --lo and --hi)");
}

std::pair<std::size_t, std::size_t> range_of(Flags const& f, std::size_t lo, std::size_t hi) {
  if (f.n) return {f.n, f.n};
  return {f.lo ? f.lo : lo, f.hi ? f.hi : hi};
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Relation algebras, their group embeddings, and worked examples", "relgroup"};
  app.require_subcommand(1);
  app.add_option("--out", f.out, "write the result to this file")->expected(1);
  app.add_option("--format", f.format, "output format")->check(CLI::IsMember({"json"}));
  app.fallthrough();

  auto* compose_cmd = app.add_subcommand("compose", "compose two relations from --in files");
  compose_cmd->add_option("--in", f.in, "relation JSON files")->required()->expected(2);

  auto* chain_cmd = app.add_subcommand("chain", "m-factor alternating chain");
  add_relation_source(chain_cmd, f);
  add_start(chain_cmd, f);
  chain_cmd->add_option("--m", f.m, "number of factors")->required();

  auto* minlen_cmd = app.add_subcommand("minlen", "least chain length reaching total");
  add_relation_source(minlen_cmd, f);
  add_start(minlen_cmd, f);

  auto* classify_cmd = app.add_subcommand("classify", "reflexive / preorder / equivalence");
  add_relation_source(classify_cmd, f);

  auto* graphop_cmd = app.add_subcommand("graphop", "evaluate a graph-defined operation");
  graphop_cmd->add_option("--graph", f.graph, "named graph")
      ->check(CLI::IsMember({"Q", "intersect", "compose", "converse", "diagonal", "total"}));
  graphop_cmd->add_option("--spec", f.spec, "graph JSON file");
  graphop_cmd->add_option("--in", f.in, "argument relation files, in slot order");
  graphop_cmd->add_option("--n", f.n, "size, for graphs without arguments");

  auto* fence_cmd = app.add_subcommand("fence", "fence product lengths");
  add_range(fence_cmd, f);
  auto* asym_cmd = app.add_subcommand("asymmetry", "forward/converse lengths, fences and crowns");
  add_range(asym_cmd, f);
  auto* abc_cmd = app.add_subcommand("abc", "the three chain orders on six elements");

  auto* layers_cmd = app.add_subcommand("layers", "layer behaviour under right multiplication");
  add_relation_source(layers_cmd, f);
  layers_cmd->add_option("--seed", f.seed, "random seed");
  layers_cmd->add_option("--trials", f.trials, "pairs per layer");

  auto* suite_cmd = app.add_subcommand("theorem-suite", "embedding theorem batches");
  suite_cmd->add_option("--n", f.n, "largest index-set size (default 5)");
  suite_cmd->add_option("--seed", f.seed, "random seed");
  suite_cmd->add_option("--trials", f.trials, "samples per relation pair");
  suite_cmd->add_option("--pairs", f.pairs, "random relation pairs per size");

  auto* cayley_cmd = app.add_subcommand("cayley", "relation of a group subset");
  add_group_source(cayley_cmd, f);
  cayley_cmd->add_option("--subset", f.subset, "comma-separated element ids")->required();

  auto* coset_cmd = app.add_subcommand("coset-embed", "coset relation of a bi-invariant subset");
  add_group_source(coset_cmd, f);
  coset_cmd->add_option("--subgroup", f.subgroup, "comma-separated element ids")->required();
  coset_cmd->add_option("--subset", f.subset, "comma-separated element ids")->required();

  auto* free_cmd = app.add_subcommand("free-counterexample", "double cosets in a free group");

  auto* perm_cmd = app.add_subcommand("perm", "eventually-translation permutations");
  perm_cmd->require_subcommand(1);
  auto* p_apply = perm_cmd->add_subcommand("apply", "image of a point");
  p_apply->add_option("--in", f.in, "permutation file")->required()->expected(1);
  p_apply->add_option("--point", f.point, "block,offset")->required();
  auto* p_compose = perm_cmd->add_subcommand("compose", "first --in, then second --in");
  p_compose->add_option("--in", f.in, "permutation files")->required()->expected(2);
  auto* p_invert = perm_cmd->add_subcommand("invert", "inverse permutation");
  p_invert->add_option("--in", f.in, "permutation file")->required()->expected(1);
  auto* p_validate = perm_cmd->add_subcommand("validate", "bijectivity check");
  p_validate->add_option("--in", f.in, "permutation file")->required()->expected(1);
  auto* p_factor = perm_cmd->add_subcommand("factorize", "split along rho . sigma");
  p_factor->add_option("--in", f.in, "permutation file")->required()->expected(1);
  p_factor->add_option("--rho", f.rho, "relation file")->required();
  p_factor->add_option("--sigma", f.sigma, "relation file")->required();
  auto* p_generator = perm_cmd->add_subcommand("generator", "a named generator");
  p_generator->add_option("--kind", f.kind, "generator kind")
      ->required()
      ->check(CLI::IsMember({"shift", "unshift", "swap", "transfer"}));
  p_generator->add_option("--n", f.n, "number of blocks")->required();
  p_generator->add_option("--i", f.i, "block");
  p_generator->add_option("--j", f.j, "target block (transfer)");
  auto* p_sample = perm_cmd->add_subcommand("sample", "pseudorandom element respecting a relation");
  add_relation_source(p_sample, f);
  p_sample->add_option("--seed", f.seed, "random seed");
  p_sample->add_option("--budget", f.budget, "size bound");
  auto* p_minlen = perm_cmd->add_subcommand("minlen", "least product length containing f");
  p_minlen->add_option("--in", f.in, "permutation file, then optionally a relation file");
  p_minlen->add_option("--poset", f.poset, "named relation")
      ->check(CLI::IsMember({"fence", "crown", "k135"}));
  p_minlen->add_option("--n", f.n, "size parameter of the named relation");
  add_start(p_minlen, f);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Outcome result;
  try {
    if (compose_cmd->parsed()) {
      Relation const a = from_file(f.in[0], relation_from_json);
      Relation const b = from_file(f.in[1], relation_from_json);
      result.value = to_json(compose(a, b));
    } else if (chain_cmd->parsed()) {
      result.value = to_json(alternating_chain(relation_arg(f), f.m, start_of(f)));
    } else if (minlen_cmd->parsed()) {
      auto const m = min_length_to_total(relation_arg(f), start_of(f));
      result.value = {{"length", m ? json(*m) : json(nullptr)}};
    } else if (classify_cmd->parsed()) {
      result.value = {{"class", std::string(to_string(classify(relation_arg(f))))}};
    } else if (graphop_cmd->parsed()) {
      if (f.graph.empty() == f.spec.empty())
        throw FormatError("graphop: give exactly one of --graph and --spec");
      GraphOpSpec const spec = f.graph.empty() ? from_file(f.spec, graph_spec_from_json)
                                               : graphs::by_name(f.graph);
      std::vector<Relation> args_in;
      for (auto const& path : f.in) args_in.push_back(from_file(path, relation_from_json));
      std::size_t const n = args_in.empty() ? f.n : args_in.front().size();
      if (n == 0) throw FormatError("graphop: --n is required when there are no arguments");
      result.value = to_json(graph_op_eval(spec, args_in, n));
    } else if (fence_cmd->parsed()) {
      auto const [lo, hi] = range_of(f, 2, 8);
      result = report_outcome(fence_report(lo, hi));
    } else if (asym_cmd->parsed()) {
      auto const [lo, hi] = range_of(f, 2, 8);
      result = report_outcome(asymmetry_report(lo, hi));
    } else if (abc_cmd->parsed()) {
      result = report_outcome(abc_report());
    } else if (layers_cmd->parsed()) {
      result = report_outcome(layer_report(relation_arg(f), f.seed, f.trials));
    } else if (suite_cmd->parsed()) {
      result = report_outcome(theorem_suite(f.n ? f.n : 5, f.seed, f.trials, f.pairs));
    } else if (cayley_cmd->parsed()) {
      GroupPtr const g = group_arg(f);
      result.value = to_json(cayley_embed(subset_arg(g, f.subset, "--subset")));
    } else if (coset_cmd->parsed()) {
      GroupPtr const g = group_arg(f);
      Subgroup const h(subset_arg(g, f.subgroup, "--subgroup"));
      Relation const r = coset_embed(subset_arg(g, f.subset, "--subset"), h);
      json cosets = json::array();
      for (auto const& c : left_cosets(h)) cosets.push_back(c);
      result.value = {{"cosets", cosets}, {"relation", to_json(r)}};
    } else if (free_cmd->parsed()) {
      result = report_outcome(verify_counterexample());
    } else if (p_apply->parsed()) {
      EventualPermutation const p = perm_arg(f, 0);
      auto const coords = [&] {
        std::istringstream in(f.point);
        std::string a, b;
        std::getline(in, a, ',');
        std::getline(in, b);
        try {
          std::size_t ua = 0, ub = 0;
          long long const block = std::stoll(a, &ua), offset = std::stoll(b, &ub);
          if (ua != a.size() || ub != b.size() || block < 0) throw std::invalid_argument(f.point);
          return Point{static_cast<std::size_t>(block), offset};
        } catch (std::logic_error const&) {
          throw FormatError("--point: expected block,offset but got '" + f.point + "'");
        }
      }();
      result.value = {{"point", point_to_json(apply(p, coords))}};
    } else if (p_compose->parsed()) {
      result.value = to_json(compose(perm_arg(f, 0), perm_arg(f, 1)));
    } else if (p_invert->parsed()) {
      result.value = to_json(invert(perm_arg(f, 0)));
    } else if (p_validate->parsed()) {
      Validation const v = validate(perm_arg(f, 0));
      result.value = {{"valid", v.ok}, {"reason", v.reason}};
      result.code = v.ok ? kOk : kClaimFailed;
    } else if (p_factor->parsed()) {
      EventualPermutation const p = perm_arg(f, 0);
      Relation const rho = from_file(f.rho, relation_from_json);
      Relation const sigma = from_file(f.sigma, relation_from_json);
      auto const [left, right] = factorize(p, rho, sigma);
      result.value = {{"left", to_json(left)}, {"right", to_json(right)}};
    } else if (p_generator->parsed()) {
      Generator const kind = f.kind == "shift"     ? Generator::shift
                             : f.kind == "unshift" ? Generator::unshift
                             : f.kind == "swap"    ? Generator::swap
                                                   : Generator::transfer_origin;
      result.value = to_json(generator(kind, f.n, f.i, f.j));
    } else if (p_sample->parsed()) {
      result.value = {{"seed", f.seed},
                      {"budget", f.budget},
                      {"permutation", to_json(sample(relation_arg(f), f.seed, f.budget))}};
    } else if (p_minlen->parsed()) {
      EventualPermutation const p = perm_arg(f, 0);
      Relation const rho = !f.poset.empty() ? named_relation(f.poset, f.n)
                           : f.in.size() > 1 ? from_file(f.in[1], relation_from_json)
                                             : throw FormatError("expected --poset or a second --in");
      auto const m = min_product_length(p, rho, start_of(f));
      result.value = {{"length", m ? json(*m) : json(nullptr)}};
    }
  } catch (FormatError const& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (std::length_error const& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::string const text = result.value.dump(2) + "\n";
  if (f.out.empty()) {
    out << text;
  } else {
    std::ofstream file(f.out);
    if (!file || !(file << text)) {
      err << "cannot write '" << f.out << "'\n";
      return kUsage;
    }
  }
  return result.code;
}

}  // namespace relgroup::cli
