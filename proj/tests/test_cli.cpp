#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "chowforge/cli.hpp"
#include "chowforge/corpus.hpp"
#include "chowforge/io.hpp"

using namespace chowforge;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("chowforge_test_" + name)).string();
}

}  // namespace

TEST_CASE("chow hilbert") {
  auto r = run({"chow", "hilbert", "--uniform", "3,3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("1 + 4t + t^2") != std::string::npos);
  auto a = run({"achow", "hilbert", "--uniform", "2,3"});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("1 + 4t + t^2") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"chow", "hilbert", "--uniform", "3"}).code == kExitUsage);
  CHECK(run({"chow", "frobnicate"}).code == kExitUsage);
  CHECK(run({"chow", "hilbert", "--corpus", "nope"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("koszul certify") {
  auto r = run({"koszul", "certify", "--uniform", "3,3", "--imax", "3"});
  CHECK(r.code == kExitOk);
  CHECK(run({"koszul", "certify", "--uniform", "3,3", "--imax", "3", "--field", "7"}).code == kExitOk);
  CHECK(run({"koszul", "certify", "--uniform", "4,5", "--imax", "4", "--budget", "100"}).code == kExitBudget);
}

TEST_CASE("dlg certify finds the witness") {
  std::string path = temp_path("b3.json");
  write_json_file(path, lattice_to_json(Lattice::of_flats(Matroid::uniform(3, 3))));
  auto r = run({"dlg", "certify", "--lattice", path, "--building", "1,2,3,123", "--imax", "3"});
  CHECK(r.code == kExitFail);
  CHECK(r.out.find("witness: beta_{2,3}=1") != std::string::npos);
  CHECK(run({"dlg", "certify", "--lattice", path, "--building", "1,2,3,12,13", "--imax", "3"}).code == kExitFail);
  CHECK(run({"dlg", "build", "--lattice", path, "--building", "max"}).code == kExitOk);
  std::filesystem::remove(path);
}

TEST_CASE("lattice order for U34 plus a coloop") {
  auto r = run({"lattice", "order", "--corpus", "fig2"});
  CHECK(r.code == kExitOk);
  auto v = run({"lattice", "verify-order", "--corpus", "fig2"});
  CHECK(v.code == kExitOk);
}

TEST_CASE("multiply and colon") {
  auto m = run({"chow", "multiply", "--uniform", "3,3", "--a", "x_12", "--b", "x_12"});
  CHECK(m.code == kExitOk);
  CHECK(m.out.find("-x_123^2") != std::string::npos);
  auto c = run({"chow", "colon", "--uniform", "5,6", "--ideal", "1234", "--by", "1256"});
  CHECK(c.code == kExitOk);
}

TEST_CASE("matroid JSON round trip through the CLI") {
  std::string mpath = temp_path("fig2.json");
  write_json_file(mpath, matroid_to_json(figure2_matroid()));
  auto a = run({"chow", "hilbert", "--matroid", mpath, "--json", "-"});
  auto b = run({"chow", "hilbert", "--corpus", "fig2", "--json", "-"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  auto j = Json::parse(a.out);
  CHECK(j.is_object());
  std::filesystem::remove(mpath);
}

TEST_CASE("presentation round trip") {
  std::string ppath = temp_path("pres.json");
  ChowRing r(Matroid::uniform(3, 4));
  write_json_file(ppath, presentation_to_json(r.presentation()));
  auto back = presentation_from_json(read_json_file(ppath));
  CHECK(back.variables == r.presentation().variables);
  CHECK(back.relations == r.presentation().relations);
  auto k = run({"koszul", "betti", "--presentation", ppath, "--imax", "2"});
  CHECK(k.code == kExitOk);
  std::filesystem::remove(ppath);
}

TEST_CASE("deterministic output") {
  auto a = run({"koszul", "filtration", "--uniform", "3,4", "--samples", "5", "--seed", "3"});
  auto b = run({"koszul", "filtration", "--uniform", "3,4", "--samples", "5", "--seed", "3"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(run({"koszul", "filtration", "--uniform", "3,4", "--max-nodes", "2"}).code == kExitBudget);
}
