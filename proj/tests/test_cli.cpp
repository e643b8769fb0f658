#include <doctest.h>

#include <cstdlib>
#include <map>

#include "fixtures.hpp"
#include "flagslice/cli.hpp"

using namespace flagslice;
using nlohmann::json;

namespace {

RunConfig config(Command command, RealForm form) {
  RunConfig c;
  c.command = command;
  c.form = form;
  return c;
}

RunConfig slnr(Command command, int n) {
  auto c = config(command, RealForm::slnr);
  c.n = n;
  return c;
}

RunConfig supq(Command command, int p, int q) {
  auto c = config(command, RealForm::supq);
  c.p = p;
  c.q = q;
  return c;
}

json run_json(const RunConfig& c) {
  const auto r = run(c);
  REQUIRE(r.exit_code == 0);
  return json::parse(r.output);
}

}  // namespace

TEST_CASE("command names") {
  for (auto c : {Command::enumerate, Command::points, Command::count, Command::homology, Command::verify})
    CHECK(parse_command(to_string(c)) == c);
  CHECK_THROWS_AS(parse_command("list"), ConfigError);
}

TEST_CASE("enumerate") {
  const auto a = run_json(slnr(Command::enumerate, 6));
  CHECK(a["rows"].size() == 15);
  CHECK(a["columns"] == json({"index", "word", "blocks", "length"}));
  CHECK(a["context"]["form"] == "slnr");
  auto h = config(Command::enumerate, RealForm::slmh);
  h.n = 8;
  const auto b = run_json(h);
  CHECK(b["rows"].size() == 24);
  std::set<Permutation> words;
  for (const auto& row : b["rows"]) words.insert(parse_permutation(row["word"].get<std::string>()));
  CHECK(words == fixtures::parse_plain(fixtures::quaternionic_n8));
  const auto c = run_json(supq(Command::enumerate, 3, 2));
  CHECK(c["rows"].size() == 8);
  for (const auto& row : c["rows"]) CHECK(row["length"] == 6);
  // one orbit
  auto o = supq(Command::enumerate, 7, 4);
  o.orbit = "3,1:2,5";
  const auto d = run_json(o);
  CHECK(d["rows"].size() == 3);
  CHECK(d["columns"][1] == "orbit");
  auto partial = slnr(Command::enumerate, 8);
  partial.dims = "2,1,2,1,2";
  const auto e = run_json(partial);
  CHECK(e["rows"].size() == 45);
  CHECK(e["context"]["dims"] == json({2, 1, 2, 1, 2}));
}

TEST_CASE("count") {
  CHECK(run_json(slnr(Command::count, 10))["rows"][0]["count"] == 945);
  auto h = config(Command::count, RealForm::slmh);
  h.n = 10;
  CHECK(run_json(h)["rows"][0]["count"] == 120);
  CHECK(run_json(supq(Command::count, 5, 3))["rows"][0]["count"] == 105);
  // formula agrees with enumeration
  for (int n = 2; n <= 8; ++n) {
    const auto counted = run_json(slnr(Command::count, n))["rows"][0]["count"];
    CHECK(counted == run_json(slnr(Command::enumerate, n))["rows"].size());
  }
  auto partial = slnr(Command::count, 8);
  partial.dims = "3,3,2";
  const auto r = run_json(partial)["rows"][0];
  CHECK(r["method"] == "enumeration");
  CHECK(r["count"] == 6);
}

TEST_CASE("points") {
  const auto a = run_json(slnr(Command::points, 5));
  std::map<int, int> per_variety;
  for (const auto& row : a["rows"]) ++per_variety[row["index"].get<int>()];
  CHECK(per_variety.size() == 8);
  for (const auto& [i, k] : per_variety) CHECK(k == 4);
  const auto b = run_json(supq(Command::points, 2, 1));
  CHECK(b["rows"].size() == 4);
  std::set<std::string> orbits;
  for (const auto& row : b["rows"]) orbits.insert(row["orbit"].get<std::string>());
  CHECK(orbits.size() == 3);
  const auto flag = b["rows"][0]["flag"];
  CHECK(flag.is_object());
}

TEST_CASE("homology") {
  auto c = slnr(Command::homology, 5);
  const auto h = run_json(c);
  CHECK(h["coefficient"] == 4);
  CHECK(h["classes"].size() == 8);
  const auto t = run_json(supq(Command::homology, 3, 2));
  CHECK(t["coefficient"] == 4);
  auto one = supq(Command::homology, 3, 2);
  one.orbit = "+-+-+";
  CHECK(run_json(one)["coefficient"] == 1);
  c.format = OutputFormat::csv;
  const auto r = run(c);
  CHECK(r.output.rfind("coefficient,class\n4,", 0) == 0);
}

TEST_CASE("config errors exit 2") {
  std::vector<RunConfig> bad;
  bad.push_back(config(Command::enumerate, RealForm::slnr));  // no n
  bad.push_back(slnr(Command::enumerate, 1));
  auto odd = config(Command::enumerate, RealForm::slmh);
  odd.n = 5;
  bad.push_back(odd);
  bad.push_back(supq(Command::enumerate, 1, 2));
  bad.push_back(supq(Command::enumerate, 3, 0));
  auto mixed = slnr(Command::enumerate, 4);
  mixed.p = 2;
  bad.push_back(mixed);
  auto sum = slnr(Command::enumerate, 6);
  sum.dims = "2,2";
  bad.push_back(sum);
  auto single = slnr(Command::enumerate, 4);
  single.dims = "4";
  bad.push_back(single);
  auto real_orbit = slnr(Command::enumerate, 4);
  real_orbit.orbit = "+-";
  bad.push_back(real_orbit);
  auto wrong_sig = supq(Command::enumerate, 3, 2);
  wrong_sig.orbit = "++-";
  bad.push_back(wrong_sig);
  auto clash = supq(Command::enumerate, 3, 2);
  clash.orbit = "(+-)(+-+)";
  clash.dims = "3,2";
  bad.push_back(clash);
  auto garbled = supq(Command::enumerate, 3, 2);
  garbled.orbit = "1,x:1,1";
  bad.push_back(garbled);
  auto partial_h = supq(Command::homology, 3, 2);
  partial_h.dims = "2,3";
  bad.push_back(partial_h);
  auto fault = config(Command::verify, RealForm::slnr);
  fault.inject_fault = "everything";
  bad.push_back(fault);
  for (const auto& c : bad) {
    const auto r = run(c);
    CHECK(r.exit_code == 2);
    CHECK(r.output.rfind("error: ", 0) == 0);
  }
}

TEST_CASE("csv round trip") {
  for (auto c : {slnr(Command::enumerate, 6), slnr(Command::points, 4), supq(Command::points, 3, 2),
                 supq(Command::count, 4, 2)}) {
    const auto r = resolve(c);
    const Table t = c.command == Command::enumerate ? cmd_enumerate(r)
                    : c.command == Command::points  ? cmd_points(r)
                                                    : cmd_count(r);
    CHECK(parse_csv(render_csv(t), t.columns) == t.rows);
    c.format = OutputFormat::csv;
    CHECK(run(c).output == render_csv(t));
    const auto j = json::parse(render_json(t));
    REQUIRE(j["rows"].size() == t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      for (std::size_t k = 0; k < t.columns.size(); ++k) CHECK(j["rows"][i][t.columns[k].name] == t.rows[i][k]);
  }
  Table quoted;
  quoted.columns = {{"a", CellKind::text}, {"b", CellKind::json}};
  quoted.rows = {{"x,\"y\"\nz", json{{"k", {1, 2}}}}};
  CHECK(parse_csv(render_csv(quoted), quoted.columns) == quoted.rows);
}

TEST_CASE("output does not depend on thread count") {
  std::vector<std::string> outputs;
  for (const char* threads : {"1", "4"}) {
    setenv("FLAGSLICE_THREADS", threads, 1);
    auto c = slnr(Command::points, 6);
    outputs.push_back(run(c).output);
    auto partial = supq(Command::points, 4, 2);
    partial.dims = "2,2,2";
    outputs.push_back(run(partial).output);
  }
  unsetenv("FLAGSLICE_THREADS");
  CHECK(outputs[0] == outputs[2]);
  CHECK(outputs[1] == outputs[3]);
}
