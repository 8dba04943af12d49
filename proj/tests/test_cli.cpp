#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "relgroup/cli.hpp"
#include "relgroup/error.hpp"
#include "relgroup/etperm.hpp"
#include "relgroup/fingroup.hpp"
#include "relgroup/serialize.hpp"

using namespace relgroup;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result run(std::vector<std::string> const& args) {
  std::ostringstream out, err;
  int const code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// A scratch directory removed at scope exit.
class Scratch {
 public:
  Scratch() {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("relgroup-cli-" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  std::string write(std::string const& name, std::string const& text) const {
    auto const path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(std::string const& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("documented examples") {
  auto const r = run({"minlen", "--poset", "fence", "--n", "5", "--start", "converse"});
  CHECK(r.code == cli::kOk);
  CHECK(r.json() == nlohmann::json{{"length", 4}});

  auto const abc = run({"abc"});
  CHECK(abc.code == cli::kOk);
  int composites = 0;
  auto const abc_json = abc.json();
  for (auto const& c : abc_json["claims"])
    if (c["computed"].is_object() && c["computed"].contains("missing")) ++composites;
  CHECK(composites == 6);

  auto const free = run({"free-counterexample"});
  CHECK(free.code == cli::kOk);
  auto const free_json = free.json();
  CHECK(free_json["claims"].size() == 4);
  for (auto const& c : free_json["claims"]) CHECK(c["pass"] == true);
}

TEST_CASE("relation subcommands") {
  Scratch tmp;
  auto const a = tmp.write("a.json", R"({"n": 3, "pairs": [[0, 1]]})");
  auto const b = tmp.write("b.json", R"({"n": 3, "pairs": [[1, 2]]})");
  auto const c = run({"compose", "--in", a, b});
  REQUIRE(c.code == cli::kOk);
  CHECK(relation_from_json(c.json()) ==
        unite(diagonal(3), Relation(3, {{0, 1}, {1, 2}, {0, 2}})));

  CHECK(run({"classify", "--poset", "crown", "--n", "3"}).json()["class"] == "preorder");
  CHECK(run({"classify", "--in", a}).json()["class"] == "preorder");
  CHECK(run({"minlen", "--in", a}).json()["length"].is_null());
  CHECK(run({"minlen", "--poset", "fence", "--n", "4"}).json()["length"] == 4);

  auto const ch = run({"chain", "--poset", "fence", "--n", "3", "--m", "2"});
  CHECK(relation_from_json(ch.json()) ==
        compose(fence(3), converse(fence(3))));

  auto const q = run({"graphop", "--graph", "compose", "--in", a, b});
  CHECK(relation_from_json(q.json()) == relation_from_json(c.json()));
  auto const one = run({"graphop", "--graph", "total", "--n", "2"});
  CHECK(relation_from_json(one.json()) == total(2));
  auto const spec = tmp.write("spec.json", to_json(graphs::converse()).dump());
  auto const conv = run({"graphop", "--spec", spec, "--in", a});
  CHECK(relation_from_json(conv.json()) == unite(diagonal(3), Relation(3, {{1, 0}})));
}

TEST_CASE("group subcommands") {
  auto const r = run({"cayley", "--group", "cyclic", "--n", "3", "--subset", "0,1"});
  REQUIRE(r.code == cli::kOk);
  CHECK(relation_from_json(r.json()) ==
        unite(diagonal(3), Relation(3, {{0, 1}, {1, 2}, {2, 0}})));

  auto const c = run({"coset-embed", "--group", "symmetric", "--n", "3", "--subgroup", "0,1",
                      "--subset", "0,1"});
  REQUIRE(c.code == cli::kOk);
  CHECK(c.json()["cosets"].size() == 3);
  CHECK(relation_from_json(c.json()["relation"]) == diagonal(3));

  auto const bad = run({"coset-embed", "--group", "symmetric", "--n", "3", "--subgroup", "0,1",
                        "--subset", "0,2"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.find("not in S") != std::string::npos);
}

TEST_CASE("permutation subcommands") {
  Scratch tmp;
  auto const swap = run({"perm", "generator", "--kind", "swap", "--n", "2", "--i", "0"});
  REQUIRE(swap.code == cli::kOk);
  auto const sfile = tmp.write("swap.json", swap.out);
  auto const shift = run({"perm", "generator", "--kind", "shift", "--n", "2", "--i", "1"});
  auto const tfile = tmp.write("shift.json", shift.out);

  auto const ap = run({"perm", "apply", "--in", sfile, "--point", "0,0"});
  CHECK(ap.json()["point"] == point_to_json(Point{0, 1}));

  auto const comp = run({"perm", "compose", "--in", sfile, tfile});
  auto const f = permutation_from_json(comp.json());
  CHECK(f == compose(permutation_from_json(swap.json()), permutation_from_json(shift.json())));

  auto const inv = run({"perm", "invert", "--in", tfile});
  CHECK(permutation_from_json(inv.json()) == invert(permutation_from_json(shift.json())));

  auto const ok = run({"perm", "validate", "--in", sfile});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.json()["valid"] == true);

  // All tails fixed but one point sent across blocks: the flow does not balance.
  auto const broken = tmp.write(
      "broken.json", R"({"n":2,"top":[0,0],"bottom":[0,0],"exceptions":[[[0,0],[1,0]]]})");
  auto const v = run({"perm", "validate", "--in", broken});
  CHECK(v.code == cli::kClaimFailed);
  CHECK(v.json()["valid"] == false);
  CHECK_FALSE(v.json()["reason"].get<std::string>().empty());

  std::vector<std::pair<Point, Point>> const moves{{Point{0, 0}, Point{1, 0}},
                                                   {Point{1, 0}, Point{0, 0}}};
  auto const cross = tmp.write("cross.json", to_json(transfer(2, moves)).dump());
  auto const rho = tmp.write("rho.json", R"({"n":2,"pairs":[[1,0]]})");
  auto const sigma = tmp.write("sigma.json", R"({"n":2,"pairs":[[0,1]]})");
  auto const fac = run({"perm", "factorize", "--in", cross, "--rho", rho, "--sigma", sigma});
  REQUIRE(fac.code == cli::kOk);
  auto const left = permutation_from_json(fac.json()["left"]);
  auto const right = permutation_from_json(fac.json()["right"]);
  CHECK(respects(left, Relation(2, {{0, 0}, {1, 1}, {1, 0}})));
  CHECK(respects(right, Relation(2, {{0, 0}, {1, 1}, {0, 1}})));
  CHECK(compose(left, right) == permutation_from_json(nlohmann::json::parse(
                                    std::ifstream(cross))));

  auto const smp = run({"perm", "sample", "--poset", "fence", "--n", "3", "--seed", "4"});
  REQUIRE(smp.code == cli::kOk);
  CHECK(smp.json()["seed"] == 4);
  CHECK(respects(permutation_from_json(smp.json()["permutation"]), fence(3)));

  auto const ml = run({"perm", "minlen", "--in", cross, "--poset", "fence", "--n", "2"});
  CHECK(ml.code == cli::kOk);
  CHECK(ml.json()["length"].is_number_integer());
}

TEST_CASE("reports, exit codes and --out") {
  Scratch tmp;
  CHECK(run({"fence", "--lo", "2", "--hi", "8"}).code == cli::kOk);
  CHECK(run({"asymmetry", "--n", "5"}).code == cli::kOk);
  CHECK(run({"layers", "--poset", "fence", "--n", "4", "--trials", "10"}).code == cli::kOk);
  CHECK(run({"theorem-suite", "--n", "3", "--trials", "5", "--pairs", "5"}).code == cli::kOk);

  auto const out = tmp.path("fence.json");
  auto const r = run({"--out", out, "fence", "--n", "3"});
  CHECK(r.code == cli::kOk);
  std::ifstream in(out);
  auto const j = nlohmann::json::parse(in);
  CHECK(j["scenario"] == "fence");
  CHECK(j["claims"].size() == 3);
}

TEST_CASE("identical arguments give byte-identical output") {
  std::vector<std::vector<std::string>> const cases{
      {"layers", "--poset", "fence", "--n", "5", "--seed", "9", "--trials", "10"},
      {"theorem-suite", "--n", "3", "--seed", "2", "--trials", "4", "--pairs", "4"},
      {"perm", "sample", "--poset", "crown", "--n", "4", "--seed", "17"},
      {"abc"}};
  for (auto const& args : cases) {
    auto const a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  // Seeds default to 0 and appear in the output.
  auto const d = run({"layers", "--poset", "fence", "--n", "3", "--trials", "3"});
  CHECK(d.json()["params"]["seed"] == 0);
}

TEST_CASE("usage and input errors exit with code 2") {
  Scratch tmp;
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"nonsense"}).code == cli::kUsage);
  auto const flag = run({"abc", "--bogus"});
  CHECK(flag.code == cli::kUsage);
  CHECK(flag.err.find("--bogus") != std::string::npos);
  CHECK(run({"fence", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"minlen", "--poset", "lattice", "--n", "3"}).code == cli::kUsage);
  CHECK(run({"graphop", "--graph", "Q", "--n", "2"}).code == cli::kUsage);

  auto const range = tmp.write("range.json", R"({"n": 2, "pairs": [[0, 7]]})");
  auto const r1 = run({"classify", "--in", range});
  CHECK(r1.code == cli::kUsage);
  CHECK(r1.err.find("relation.pairs[0]") != std::string::npos);

  auto const syntax = tmp.write("syntax.json", "{\"n\": 2,\n");
  auto const r2 = run({"classify", "--in", syntax});
  CHECK(r2.code == cli::kUsage);
  CHECK(r2.err.find("line 2") != std::string::npos);

  auto const missing = tmp.write("missing.json", R"({"pairs": []})");
  auto const r3 = run({"classify", "--in", missing});
  CHECK(r3.code == cli::kUsage);
  CHECK(r3.err.find("missing field 'n'") != std::string::npos);

  auto const r4 = run({"classify", "--in", tmp.path("absent.json")});
  CHECK(r4.code == cli::kUsage);

  auto const perm = tmp.write("perm.json", R"({"n": 1, "top": [0], "bottom": [0], "exceptions": [[[0, 0], "x"]]})");
  auto const r5 = run({"perm", "invert", "--in", perm});
  CHECK(r5.code == cli::kUsage);
  CHECK(r5.err.find("exceptions[0]") != std::string::npos);
}

TEST_CASE("serialized values round-trip") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    std::size_t const n = 1 + t % 5;
    auto const r = Relation::from_predicate(n, [&](std::size_t, std::size_t) { return rng() % 2; });
    CHECK(relation_from_json(to_json(r)) == r);
    auto const rr = unite(r, diagonal(n));
    CHECK(to_json(rr)["reflexive"] == true);
    CHECK(relation_from_json(nlohmann::json::parse(to_json(rr).dump())) == rr);
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto const f = sample(crown(4), seed, 6);
    CHECK(permutation_from_json(nlohmann::json::parse(to_json(f).dump())) == f);
  }
  for (Point p : {Point{0, 0}, Point{3, -17}}) CHECK(point_from_json(point_to_json(p), "p") == p);

  auto const s3 = group_make(GroupKind::symmetric, 3);
  auto const g = group_from_json(to_json(*s3));
  CHECK(*g == *s3);
  GroupSubset const s(s3, {0, 3, 4});
  CHECK(subset_from_json(s3, to_json(s)) == s);
  for (auto const& name : {"intersect", "compose", "converse", "diagonal", "total", "Q"}) {
    auto const spec = graphs::by_name(name);
    CHECK(graph_spec_from_json(to_json(spec)) == spec);
  }

  CHECK_THROWS_AS(relation_from_json(nlohmann::json::parse(R"({"n": 0, "pairs": []})")), FormatError);
  CHECK_THROWS_AS(subset_from_json(s3, nlohmann::json::parse("[1, 2]")), FormatError);
  CHECK_THROWS_AS(group_from_json(nlohmann::json::parse(R"({"order": 2, "table": [[0,1],[1,1]]})")),
                  FormatError);
  CHECK_THROWS_AS(parse_json("[1,", "x"), FormatError);
}
