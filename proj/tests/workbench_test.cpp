#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gwb/workbench/cli.hpp"

using namespace gwb;

namespace {

const std::string data_dir = GWB_DATA_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run gwb_run(std::vector<std::string> args) {
  args.insert(args.begin(), "gwb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& f) { return data_dir + "/" + f; }

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / ("gwb_wb_" + name);
  std::ofstream(p) << body;
  return p;
}

bool no_numbers(const json& j) {
  if (j.is_number()) return false;
  for (const auto& v : j)
    if ((v.is_array() || v.is_object() || v.is_number()) && !no_numbers(v)) return false;
  return true;
}

}  // namespace

TEST(Parsing, Window) {
  EXPECT_EQ(cli::parse_window("-20..20"), (std::pair<long, long>{-20, 20}));
  EXPECT_EQ(cli::parse_window("3..3"), (std::pair<long, long>{3, 3}));
  EXPECT_THROW(cli::parse_window("5..2"), InputError);
  EXPECT_THROW(cli::parse_window("1-5"), InputError);
  EXPECT_THROW(cli::parse_window("a..3"), InputError);
  EXPECT_THROW(cli::parse_window("1..3x"), InputError);
}

TEST(Parsing, List) {
  EXPECT_EQ(cli::split_list("x+y, z"), (std::vector<std::string>{"x+y", "z"}));
  EXPECT_THROW(cli::split_list("x,,y"), InputError);
  EXPECT_THROW(cli::split_list(""), InputError);
}

TEST(Parsing, LedgerEntry) {
  auto e = cli::parse_shift_entry("ko:-6=-4+-2");
  EXPECT_EQ(e.name, "ko");
  EXPECT_EQ(e.total, -6);
  EXPECT_EQ(e.base, -4);
  EXPECT_EQ(e.relative, -2);
  EXPECT_THROW(cli::parse_shift_entry("ko=-4+-2"), InputError);
  EXPECT_THROW(cli::parse_shift_entry("ko:-6=-4"), InputError);
  EXPECT_THROW(cli::parse_shift_entry("ko:x=-4+1"), InputError);
}

TEST(Io, RingRoundTrip) {
  const auto r = ring_from_json(load_json_file(data("sd16.json")));
  EXPECT_EQ(r.field.p, 2u);
  ASSERT_EQ(r.vars.size(), 4u);
  EXPECT_EQ(r.vars[3].name, "t");
  EXPECT_EQ(r.vars[3].codegree, 4);
  EXPECT_EQ(r.relations.size(), 4u);
  const auto back = ring_from_json(ring_to_json(r));
  EXPECT_EQ(back.relations, r.relations);
  EXPECT_EQ(back.vars.size(), r.vars.size());
  const auto q = ring_from_json(load_json_file(data("rational_x.json")));
  EXPECT_EQ(q.field.kind, FieldSpec::Kind::rationals);
}

TEST(Io, RingErrors) {
  EXPECT_THROW(load_json_file(data("nope.json")), InputError);
  EXPECT_THROW(load_json_file(temp_file("broken.json", "{\"char\": ").string()), InputError);
  EXPECT_THROW(ring_from_json(json::array()), InputError);
  EXPECT_THROW(ring_from_json(json::parse(R"({"vars": [{"name": "x", "codegree": 1}]})")), InputError);
  EXPECT_THROW(ring_from_json(json::parse(R"({"char": 2, "vars": []})")), InputError);
  EXPECT_THROW(ring_from_json(json::parse(R"({"char": 2, "vars": [{"name": "x", "codegree": "1"}]})")), InputError);
  EXPECT_THROW(ring_from_json(json::parse(R"({"char": -3, "vars": [{"name": "x", "codegree": 1}]})")), InputError);
  EXPECT_THROW(ring_from_json(json::parse(R"({"char": 2, "vars": [{"name": "x", "codegree": 1}], "relations": [3]})")), InputError);
}

TEST(Io, ModuleResolvesRelativeRing) {
  const auto m = module_from_json(load_json_file(data("g32n7_summand.json")), data_dir);
  ASSERT_TRUE(m.ring.has_value());
  EXPECT_EQ(m.ring->vars.size(), 3u);
  EXPECT_EQ(m.module.gens, std::vector<long>{1});
  EXPECT_EQ(m.module.rels.size(), 2u);
}

TEST(Io, ModuleColumnLength) {
  EXPECT_THROW(module_from_json(json::parse(R"({"gens": [0, 1], "rels": [["x"]]})")), InputError);
  EXPECT_THROW(module_from_json(json::parse(R"({"gens": []})")), InputError);
  EXPECT_THROW(module_from_json(json::parse(R"({"gens": [0], "rels": ["x"]})")), InputError);
}

TEST(Io, GroupFileMatchesBuiltin) {
  const auto in = group_from_json(load_json_file(data("a4_group.json")));
  const auto G = builtin_group("a4");
  EXPECT_EQ(in.group.order(), 12u);
  EXPECT_EQ(in.group.table(), G.table());
  EXPECT_EQ(in.field.degree, 2u);
  const auto back = group_from_json(group_to_json(G, in.field));
  EXPECT_EQ(back.group.table(), G.table());
  EXPECT_THROW(group_from_json(json::parse(R"({"order": 2, "table": [[0, 1]], "char": 2})")), InputError);
  EXPECT_THROW(group_from_json(json::parse(R"({"order": 2, "table": [[0, 1], [1, 0]], "char": 0})")), InputError);
}

TEST(Cli, MissingFileIsInputError) {
  const auto r = gwb_run({"hilbert", "missing.json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("missing.json"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(gwb_run({}).code, 2);
  EXPECT_EQ(gwb_run({"bogus"}).code, 2);
  EXPECT_EQ(gwb_run({"hilbert", data("d8.json"), "--no-such-flag"}).code, 2);
  EXPECT_EQ(gwb_run({"functional-eq", "--series", "1/(1-t)"}).code, 2);
  EXPECT_EQ(gwb_run({"functional-eq", "--series", "1/(1-t)", "--dim", "1", "--shift", "0", "--expect", "gorenstein"}).code, 2);
  EXPECT_EQ(gwb_run({"preset", "run", "nope"}).code, 2);
  EXPECT_EQ(gwb_run({"localcoh", data("d8.json"), "--ideal", "z", "--method", "magic"}).code, 2);
  EXPECT_EQ(gwb_run({"localcoh", data("d8.json"), "--ideal", "z", "--window", "4..1"}).code, 2);
  EXPECT_EQ(gwb_run({"localcoh", data("d8.json"), "--ideal", "q"}).code, 2);
  EXPECT_EQ(gwb_run({"localcoh", data("d8.json"), "--ideal", "z", "--dim", "2"}).code, 2);
}

TEST(Cli, HelpAndVersion) {
  auto h = gwb_run({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("localcoh"), std::string::npos);
  auto v = gwb_run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("0.1.0"), std::string::npos);
}

TEST(Cli, FunctionalEquationLine) {
  const auto r = gwb_run({"functional-eq", "--series", "1/((1-t)^2*(1+t^2))", "--dim", "2", "--shift", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "CM: fail; almost-CM: pass, q = t^2/((1-t)*(1+t^2))");
}

TEST(Cli, FunctionalEquationExpect) {
  const std::vector<std::string> base{"functional-eq", "--series", "1/((1-t)^2*(1+t^2))", "--dim", "2", "--shift", "0", "--expect"};
  auto with = [&](const std::string& e) {
    auto a = base;
    a.push_back(e);
    return gwb_run(a).code;
  };
  EXPECT_EQ(with("almost-cm"), 0);
  EXPECT_EQ(with("cm"), 1);
  EXPECT_EQ(gwb_run({"functional-eq", "--series", "1/(1-t)^2", "--dim", "2", "--shift", "0", "--expect", "cm"}).code, 0);
  EXPECT_EQ(gwb_run({"functional-eq", "--series", "1/(1-t)^2", "--dim", "2", "--shift", "0", "--expect", "neither"}).code, 1);
}

TEST(Cli, PresetRunDihedral) {
  const auto r = gwb_run({"preset", "run", "d8"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("[pass] cech-matches-duality"), std::string::npos);
  EXPECT_NE(r.out.find("result: pass"), std::string::npos);
}

TEST(Cli, PresetList) {
  const auto r = gwb_run({"preset", "list"});
  EXPECT_EQ(r.code, 0);
  for (const auto& p : preset_catalog()) EXPECT_NE(r.out.find(p.name), std::string::npos) << p.name;
}

TEST(Cli, JsonReportShape) {
  const auto r = gwb_run({"localcoh", data("rational_x.json"), "--ideal", "v", "--window", "-12..12", "--method", "both", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["tool"], "gwb");
  EXPECT_EQ(j["version"], "0.1.0");
  EXPECT_EQ(j["command"], "localcoh");
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_TRUE(j["timing_ms"].is_string());
  EXPECT_TRUE(no_numbers(j["results"]));
  EXPECT_TRUE(no_numbers(j["inputs"]));
  ASSERT_EQ(j["results"]["tables"].size(), 2u);
  // H^0 of Q[u,v,p]/(u^2,uv,up,p^2) with respect to v is spanned by u
  const auto& cech = j["results"]["tables"][0];
  EXPECT_EQ(cech["method"], "cech");
  const auto& h0 = cech["rows"][0]["dims"];
  ASSERT_EQ(h0.size(), 25u);
  for (long n = -12; n <= 12; ++n) EXPECT_EQ(h0[static_cast<std::size_t>(n + 12)], n == 2 ? "1" : "0") << n;
}

TEST(Cli, LocalcohModuleWithVanishing) {
  const auto r = gwb_run({"localcoh", data("g32n7_base.json"), "--module", data("g32n7_summand.json"), "--ideal", "z,x,s", "--window",
                          "-16..4", "--method", "both", "--dim", "1", "--depth", "1"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("H^1: -15:1 -11:1 -7:1 -3:1"), std::string::npos) << r.out;
  // wrong depth must be reported as a failed assertion
  const auto w = gwb_run({"localcoh", data("g32n7_base.json"), "--module", data("g32n7_summand.json"), "--ideal", "z,x,s", "--window",
                          "-16..4", "--dim", "1", "--depth", "0"});
  EXPECT_EQ(w.code, 1);
}

TEST(Cli, HilbertSeriesMismatch) {
  EXPECT_EQ(gwb_run({"hilbert", data("d8.json"), "--series", "1/(1-t)^2"}).code, 0);
  const auto r = gwb_run({"hilbert", data("d8.json"), "--series", "1/(1-t)^3", "--window", "0..6"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("first mismatch at codegree 1"), std::string::npos) << r.out;
}

TEST(Cli, KoszulRegularSequence) {
  auto yes = gwb_run({"koszul", data("d8.json"), "--elems", "x+y,z", "--json"});
  EXPECT_EQ(json::parse(yes.out)["results"]["regular_sequence"], "true");
  auto no = gwb_run({"koszul", data("d8.json"), "--elems", "x,z", "--json"});
  EXPECT_EQ(json::parse(no.out)["results"]["regular_sequence"], "false");
}

TEST(Cli, ResolutionDefaultsToResidueField) {
  const auto r = gwb_run({"resolution", data("poly_xy.json"), "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  const auto& b = j["results"]["betti"];
  ASSERT_EQ(b.size(), 13u);
  EXPECT_EQ(b[0], "1");
  EXPECT_EQ(b[1], "2");
  EXPECT_EQ(b[2], "1");
  for (std::size_t i = 3; i < b.size(); ++i) EXPECT_EQ(b[i], "0");
  EXPECT_EQ(j["results"]["growth"], "finite");
}

TEST(Cli, Hypersurface) {
  const auto r = gwb_run({"hypersurface", data("poly_xy.json"), "--f", "x*y", "--module", data("hyp_x.json"), "--mf", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["results"]["gulliksen"]["operator_codegree"], "4");
  EXPECT_EQ(j["results"]["gulliksen"]["onset"], "0");
  EXPECT_EQ(j["results"]["gulliksen"]["periodic"], "true");
  // the module is S/(x), so A = (x) and B = (y)
  EXPECT_EQ(j["results"]["matrix_factorization"]["A"], json::parse(R"([["x"]])"));
  EXPECT_EQ(j["results"]["matrix_factorization"]["B"], json::parse(R"([["y"]])"));
  // S/(x+y, xy) has projective dimension 2 over S: the splice works, the factorization does not
  EXPECT_EQ(gwb_run({"hypersurface", data("poly_xy.json"), "--f", "x*y", "--module", data("hyp_cyclic.json")}).code, 0);
  EXPECT_EQ(gwb_run({"hypersurface", data("poly_xy.json"), "--f", "x*y", "--module", data("hyp_cyclic.json"), "--mf"}).code, 2);
  EXPECT_EQ(gwb_run({"hypersurface", data("d8.json"), "--f", "x*y", "--module", data("hyp_x.json")}).code, 2);
}

TEST(Cli, SqueezedFromFileAndName) {
  const auto a = gwb_run({"squeezed", "--group", "a4", "--char", "2", "--field-degree", "2", "--steps", "6", "--json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(json::parse(a.out)["results"]["homology"], json::parse(R"(["1","1","2","2","2","2","2"])"));
  const auto f = gwb_run({"squeezed", "--group", data("a4_group.json"), "--steps", "6", "--json"});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(json::parse(f.out)["results"]["homology"], json::parse(a.out)["results"]["homology"]);
  // F_2 lacks cube roots of unity
  EXPECT_EQ(gwb_run({"squeezed", "--group", "a4", "--char", "2", "--field-degree", "1"}).code, 2);
  EXPECT_EQ(gwb_run({"squeezed", "--group", "a4", "--char", "3", "--field-degree", "1"}).code, 2);
  EXPECT_EQ(gwb_run({"squeezed", "--group", "nope"}).code, 2);
  // S_3 at p = 2: the Sylow subgroup is not normal
  const auto s3 = temp_file("s3.json", R"({"order": 6, "char": 2, "table": [
    [0,1,2,3,4,5],[1,2,0,5,3,4],[2,0,1,4,5,3],[3,4,5,0,1,2],[4,5,3,2,0,1],[5,3,4,1,2,0]]})");
  const auto s = gwb_run({"squeezed", "--group", s3.string()});
  EXPECT_EQ(s.code, 2);
  EXPECT_NE(s.err.find("unsupported"), std::string::npos) << s.err;
}

TEST(Cli, ShiftLedger) {
  EXPECT_EQ(gwb_run({"shift-ledger"}).code, 0);
  const auto bad = gwb_run({"shift-ledger", "--entry", "ko:-5=-4+-2"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("-5 = -4 + -2 fails"), std::string::npos);
  EXPECT_EQ(gwb_run({"shift-ledger", "--entry", "ko:-6"}).code, 2);
}

TEST(Cli, StrictlyCommutativeFlag) {
  // over F_3 an odd-codegree variable squares to zero unless the ring is declared commutative
  const auto graded = temp_file("f3_graded.json", R"({"char": 3, "vars": [{"name": "x", "codegree": 1}]})");
  const auto plain = temp_file("f3_plain.json", R"({"char": 3, "vars": [{"name": "x", "codegree": 1}], "strictly_commutative": true})");
  const auto a = gwb_run({"hilbert", graded.string(), "--window", "0..3", "--json"});
  const auto b = gwb_run({"hilbert", plain.string(), "--window", "0..3", "--json"});
  EXPECT_EQ(json::parse(a.out)["results"]["dims"], json::parse(R"(["1","1","0","0"])"));
  EXPECT_EQ(json::parse(b.out)["results"]["dims"], json::parse(R"(["1","1","1","1"])"));
  EXPECT_EQ(ring_from_json(load_json_file(plain.string())).strictly_commutative, true);
  EXPECT_THROW(ring_from_json(json::parse(R"({"char": 3, "vars": [{"name": "x", "codegree": 1}], "strictly_commutative": 1})")), InputError);
}

TEST(Cli, NeitherEquationHolds) {
  // p = 1 with r = 0, a = 1: the bracket 1 - t does not vanish at t = -1
  const auto r = gwb_run({"functional-eq", "--series", "1", "--dim", "0", "--shift", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.substr(0, r.out.find(';')), "CM: fail");
  EXPECT_NE(r.out.find("almost-CM: fail"), std::string::npos);
  EXPECT_EQ(gwb_run({"functional-eq", "--series", "1", "--dim", "0", "--shift", "1", "--expect", "neither"}).code, 0);
}
