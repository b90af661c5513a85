#pragma once

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gwb/graded/presentation.hpp"
#include "gwb/graded/resolution.hpp"
#include "gwb/hilbert/functional.hpp"
#include "gwb/hypersurface/factorization.hpp"
#include "gwb/localcoh/checks.hpp"
#include "gwb/localcoh/duality.hpp"
#include "gwb/localcoh/koszul.hpp"
#include "gwb/modrep/squeezed.hpp"
#include "gwb/presets/ledger.hpp"
#include "gwb/presets/run.hpp"
#include "gwb/workbench/io.hpp"

namespace gwb::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Copy of j with every number replaced by its decimal string.
inline json stringify_numbers(const json& j) {
  if (j.is_number()) return j.dump();
  if (j.is_array() || j.is_object()) {
    json out = j;
    for (auto& v : out) v = stringify_numbers(v);
    return out;
  }
  return j;
}

/// Output of one command. Numbers in the JSON form are strings.
struct Report {
  std::string command;
  json inputs = json::object();
  std::vector<Assertion> assertions;
  json results = json::object();
  std::ostringstream text;
  long long elapsed_ms = 0;

  bool passed() const {
    for (const auto& a : assertions)
      if (!a.passed) return false;
    return true;
  }
  void add(std::string name, bool ok, std::string detail = {}) { assertions.push_back({std::move(name), ok, std::move(detail)}); }

  json to_json() const {
    json j;
    j["tool"] = "gwb";
    j["version"] = kVersion;
    j["command"] = command;
    j["inputs"] = stringify_numbers(inputs);
    j["assertions"] = json::array();
    for (const auto& a : assertions) j["assertions"].push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
    j["results"] = stringify_numbers(results);
    j["passed"] = passed();
    j["timing_ms"] = std::to_string(elapsed_ms);
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << text.str();
    for (const auto& a : assertions) os << (a.passed ? "[pass] " : "[FAIL] ") << a.name << (a.detail.empty() ? "" : ": " + a.detail) << '\n';
    if (!assertions.empty()) os << "result: " << (passed() ? "pass" : "fail") << '\n';
    return os.str();
  }
};

template <class T>
std::string str(const T& v) {
  return std::to_string(v);
}

template <class T>
json str_array(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(std::to_string(x));
  return a;
}

/// "a..b" with optional signs.
inline std::pair<long, long> parse_window(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw InputError("window must look like a..b, got '" + s + "'");
  try {
    std::size_t used = 0;
    const long a = std::stol(s.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("");
    const std::string rest = s.substr(dots + 2);
    const long b = std::stol(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
    if (a > b) throw InputError("window " + s + " is empty");
    return {a, b};
  } catch (const std::logic_error&) {
    throw InputError("window must look like a..b, got '" + s + "'");
  }
}

/// Comma-separated list, blanks trimmed, empty items rejected.
inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty item in list '" + s + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw InputError("empty list");
  return out;
}

inline json table_json(const CohomologyTable& T) {
  json j;
  j["method"] = T.method;
  j["n_min"] = str(T.n_min);
  j["n_max"] = str(T.n_max);
  j["rows"] = json::array();
  for (std::size_t i = 0; i < T.indices(); ++i) {
    json row;
    row["index"] = str(i);
    row["dims"] = str_array(T.dims[i]);
    row["flags"] = json::array();
    for (auto f : T.flags[i]) row["flags"].push_back(to_string(f));
    j["rows"].push_back(row);
  }
  return j;
}

/// One line per index listing the nonzero cells; uncertain cells get a '?'.
inline std::string table_text(const CohomologyTable& T) {
  std::ostringstream os;
  os << T.method << " table, codegrees " << T.n_min << ".." << T.n_max << '\n';
  for (std::size_t i = 0; i < T.indices(); ++i) {
    os << "  H^" << i << ":";
    bool any = false;
    for (long n = T.n_min; n <= T.n_max; ++n) {
      const auto f = T.flag(i, n);
      if (T.dim(i, n) == 0 && f == CellFlag::exact) continue;
      os << ' ' << n << ':' << T.dim(i, n) << (f == CellFlag::exact ? "" : "?");
      any = true;
    }
    if (!any) os << " 0";
    os << '\n';
  }
  return os.str();
}

struct Common {
  bool json_out = false;
  std::string window;
  std::size_t hmax = 12;
  long stab_bound = 16;
};

namespace detail {

struct RingModuleInput {
  RingPayload ring;
  std::optional<ModulePayload> module;
};

inline RingModuleInput load_ring_and_module(const std::string& ring_path, const std::string& module_path) {
  RingModuleInput in;
  in.ring = ring_from_json(load_json_file(ring_path));
  if (!module_path.empty()) {
    auto m = module_from_json(load_json_file(module_path), std::filesystem::path(module_path).parent_path());
    in.module = std::move(m.module);
  }
  return in;
}

template <ExactField F>
std::vector<Poly<F>> parse_list(const RingPresentation<F>& R, const std::vector<std::string>& items) {
  std::vector<Poly<F>> out;
  for (const auto& s : items) out.push_back(R.parse(s));
  return out;
}

template <ExactField F>
ModulePtr<F> module_of(const RingPresentation<F>& R, const std::optional<ModulePayload>& m) {
  if (!m) return R.ring;
  return make_module(R, m->gens, m->rels);
}

}  // namespace detail

// ---- hilbert

struct HilbertArgs {
  std::string ring, module, series;
};

inline void cmd_hilbert(const HilbertArgs& a, const Common& c, Report& rep) {
  const auto in = detail::load_ring_and_module(a.ring, a.module);
  auto [lo, hi] = c.window.empty() ? std::pair<long, long>{0, 24} : parse_window(c.window);
  rep.inputs = {{"ring", ring_to_json(in.ring)}, {"window", str(lo) + ".." + str(hi)}};
  if (!a.module.empty()) rep.inputs["module"] = a.module;
  with_field(in.ring.field, [&](auto f) {
    auto R = make_ring(f, in.ring.vars, in.ring.relations, in.ring.strictly_commutative);
    auto M = detail::module_of(R, in.module);
    const auto d = dims(*M, lo, hi);
    rep.results["dims"] = str_array(d);
    rep.text << "dims on codegrees " << lo << ".." << hi << ":";
    for (auto x : d) rep.text << ' ' << x;
    rep.text << '\n';
    if (!a.series.empty()) {
      rep.inputs["series"] = a.series;
      const auto s = parse_series(a.series);
      const auto e = s.expand(lo, hi);
      bool ok = true;
      long first = 0;
      for (long n = lo; n <= hi && ok; ++n)
        if (e.coeffs[static_cast<std::size_t>(n - lo)] != mpq_class(static_cast<unsigned long>(d[static_cast<std::size_t>(n - lo)]))) {
          ok = false;
          first = n;
        }
      rep.add("series-match", ok, ok ? "expansion agrees on the window" : "first mismatch at codegree " + str(first));
    }
  });
}

// ---- functional-eq

struct FunctionalArgs {
  std::string series, expect;
  long dim = 0, shift = 0;
};

inline void cmd_functional(const FunctionalArgs& a, const Common&, Report& rep) {
  rep.inputs = {{"series", a.series}, {"dim", str(a.dim)}, {"shift", str(a.shift)}};
  const auto p = parse_series(a.series);
  const DualityParams d{a.dim, a.shift};
  const bool cm = check_cm_functional_equation(p, d);
  const auto al = solve_almost_cm(p, d);
  std::string line = std::string("CM: ") + (cm ? "pass" : "fail") + "; almost-CM: " + (al.ok() ? "pass" : "fail");
  if (al.q) line += ", q = " + al.q->to_factored_string();
  if (!al.ok()) line += " (" + al.message + ")";
  rep.text << line << '\n';
  rep.results["cm"] = cm;
  rep.results["almost_cm"] = al.ok();
  rep.results["q"] = al.q ? json(al.q->to_factored_string()) : json(nullptr);
  rep.results["summary"] = line;
  if (a.expect.empty()) {
    rep.add("some-equation-holds", cm || al.ok(), cm ? "CM" : al.ok() ? "almost-CM" : "neither equation holds");
  } else {
    rep.inputs["expect"] = a.expect;
    const std::string got = cm ? "cm" : al.ok() ? "almost-cm" : "neither";
    rep.add("expected-class", got == a.expect, "found " + got + ", expected " + a.expect);
  }
}

// ---- localcoh

struct LocalcohArgs {
  std::string ring, module, ideal, method = "cech";
  long dim = -1, depth = -1;
};

inline void cmd_localcoh(const LocalcohArgs& a, const Common& c, Report& rep) {
  const auto in = detail::load_ring_and_module(a.ring, a.module);
  auto [lo, hi] = c.window.empty() ? std::pair<long, long>{-20, 20} : parse_window(c.window);
  if (a.method != "cech" && a.method != "duality" && a.method != "both") throw InputError("--method must be cech, duality or both");
  const auto items = split_list(a.ideal);
  rep.inputs = {{"ring", ring_to_json(in.ring)}, {"ideal", items}, {"window", str(lo) + ".." + str(hi)}, {"method", a.method},
                {"stab_bound", str(c.stab_bound)}};
  if (!a.module.empty()) rep.inputs["module"] = a.module;
  with_field(in.ring.field, [&](auto f) {
    using F = decltype(f);
    auto R = make_ring(f, in.ring.vars, in.ring.relations, in.ring.strictly_commutative);
    auto M = detail::module_of(R, in.module);
    const auto I = detail::parse_list(R, items);
    std::vector<CohomologyTable> tables;
    if (a.method != "duality") tables.push_back(local_cohomology_cech(M, I, {lo, hi, c.stab_bound}));
    if (a.method != "cech") {
      // restrict to k[theta_j] with theta_j acting as the j-th ideal element
      std::vector<Variable> theta;
      for (std::size_t j = 0; j < I.size(); ++j) {
        auto cd = I[j].homogeneous_codegree();
        if (!cd || *cd <= 0) throw InputError("ideal element " + items[j] + " must be homogeneous of positive codegree");
        theta.push_back({"theta" + std::to_string(j + 1), *cd});
      }
      ModulePtr<F> onP = std::make_shared<const RestrictedModule<F>>(M, std::make_shared<const PolyRing<F>>(f, theta), I);
      tables.push_back(local_cohomology_duality(onP, {lo, hi, 0}));
    }
    rep.results["tables"] = json::array();
    for (const auto& T : tables) {
      rep.results["tables"].push_back(table_json(T));
      rep.text << table_text(T);
      rep.add(T.method + "-certified", T.all_exact(), T.all_exact() ? "every cell exact" : "some cells uncertified or window-clipped");
    }
    if (tables.size() == 2) {
      bool same = true;
      std::string where;
      const std::size_t m = std::max(tables[0].indices(), tables[1].indices());
      for (std::size_t i = 0; i < m && same; ++i)
        for (long n = lo; n <= hi && same; ++n)
          if (tables[0].dim(i, n) != tables[1].dim(i, n)) {
            same = false;
            where = "first difference at H^" + str(i) + " codegree " + str(n);
          }
      rep.add("methods-agree", same, same ? "identical on the window" : where);
    }
    if (a.dim >= 0 || a.depth >= 0) {
      if (a.dim < 0 || a.depth < 0) throw InputError("--dim and --depth go together");
      rep.inputs["dim"] = str(a.dim);
      rep.inputs["depth"] = str(a.depth);
      const auto v = grothendieck_vanishing_check(tables[0], static_cast<std::size_t>(a.dim), static_cast<std::size_t>(a.depth));
      rep.add("grothendieck-vanishing", v.ok, v.ok ? "zero outside [depth, dim], nonzero at depth" : v.violations.front());
    }
  });
}

// ---- koszul

struct KoszulArgs {
  std::string ring, module, elems;
};

inline void cmd_koszul(const KoszulArgs& a, const Common& c, Report& rep) {
  const auto in = detail::load_ring_and_module(a.ring, a.module);
  auto [lo, hi] = c.window.empty() ? std::pair<long, long>{0, 12} : parse_window(c.window);
  const auto items = split_list(a.elems);
  rep.inputs = {{"ring", ring_to_json(in.ring)}, {"elements", items}, {"window", str(lo) + ".." + str(hi)}};
  if (!a.module.empty()) rep.inputs["module"] = a.module;
  with_field(in.ring.field, [&](auto f) {
    auto R = make_ring(f, in.ring.vars, in.ring.relations, in.ring.strictly_commutative);
    auto M = detail::module_of(R, in.module);
    KoszulComplex K(M, detail::parse_list(R, items));
    const auto H = koszul_homology(K, lo, hi);
    rep.results["homology"] = json::array();
    rep.text << "Koszul homology, codegrees " << lo << ".." << hi << '\n';
    for (std::size_t i = 0; i < H.size(); ++i) {
      rep.results["homology"].push_back({{"index", str(i)}, {"dims", str_array(H[i])}});
      rep.text << "  H_" << i << ":";
      for (auto d : H[i]) rep.text << ' ' << d;
      rep.text << '\n';
    }
    const auto v = is_regular_sequence(K, hi);
    rep.results["regular_sequence"] = to_string(v);
    rep.text << "regular sequence: " << to_string(v) << '\n';
    bool complex = true;
    for (long n = lo; n <= hi; ++n) complex = complex && K.is_complex_at(n);
    rep.add("d-squared-zero", complex, "on the window");
  });
}

// ---- resolution

struct ResolutionArgs {
  std::string ring, module;
  long codegree_max = 24;
};

inline void cmd_resolution(const ResolutionArgs& a, const Common& c, Report& rep) {
  const auto in = detail::load_ring_and_module(a.ring, a.module);
  rep.inputs = {{"ring", ring_to_json(in.ring)}, {"hmax", str(c.hmax)}, {"codegree_max", str(a.codegree_max)}};
  rep.inputs["module"] = a.module.empty() ? json("residue field") : json(a.module);
  with_field(in.ring.field, [&](auto f) {
    using F = decltype(f);
    auto R = make_ring(f, in.ring.vars, in.ring.relations, in.ring.strictly_commutative);
    ModulePtr<F> M = in.module ? detail::module_of(R, in.module) : ModulePtr<F>(residue_field<F>(R.ring));
    MinimalResolution<F> res(R.ring, M, {a.codegree_max, c.hmax, 0});
    const auto b = res.betti_totals();
    rep.results["betti"] = str_array(b);
    rep.text << "Betti numbers:";
    for (auto x : b) rep.text << ' ' << x;
    rep.text << '\n';
    rep.results["graded"] = json::array();
    for (std::size_t i = 0; i < res.length(); ++i) {
      std::map<long, std::size_t> counts;
      for (long s : res.generator_codegrees(i)) ++counts[s];
      json g = json::object();
      rep.text << "  F_" << i << ":";
      for (const auto& [s, k] : counts) {
        g[str(s)] = str(k);
        rep.text << ' ' << k << "@" << s;
      }
      rep.text << '\n';
      rep.results["graded"].push_back(g);
    }
    const auto clipped = res.first_clipped_stage();
    rep.results["first_clipped_stage"] = clipped ? json(str(*clipped)) : json(nullptr);
    if (clipped) rep.text << "stages from " << *clipped << " on may be cut off by the codegree bound\n";
    std::vector<std::size_t> reliable = b;
    if (clipped) reliable.resize(*clipped);
    const auto g = ext_growth_class(reliable);
    rep.results["growth"] = g.to_string();
    rep.text << "growth: " << g.to_string() << '\n';
    rep.add("minimal", res.is_minimal());
    rep.add("complex", res.is_complex());
    rep.add("exact", res.is_exact(), "on the codegree window");
  });
}

// ---- hypersurface

struct HypersurfaceArgs {
  std::string ring, f, module;
  bool mf = false;
};

inline void cmd_hypersurface(const HypersurfaceArgs& a, const Common& c, Report& rep) {
  const auto S = ring_from_json(load_json_file(a.ring));
  if (!S.relations.empty()) throw InputError("the hypersurface base ring must be a polynomial ring (no relations)");
  const auto m = module_from_json(load_json_file(a.module), std::filesystem::path(a.module).parent_path()).module;
  rep.inputs = {{"ring", ring_to_json(S)}, {"f", a.f}, {"module", a.module}, {"hmax", str(c.hmax)}, {"mf", a.mf}};
  with_field(S.field, [&](auto fld) {
    using F = decltype(fld);
    auto P = make_ring(fld, S.vars, {}, S.strictly_commutative);
    Hypersurface<F> h(P.poly, P.parse(a.f));
    std::vector<std::vector<Poly<F>>> cols;
    for (const auto& col : m.rels) cols.push_back(detail::parse_list(P, col));
    ModulePtr<F> M = std::make_shared<const PresentedModule<F>>(h.quotient(), m.gens, std::move(cols));
    SplicedResolution<F> G(h, M, c.hmax);
    rep.results["base_length"] = str(G.base_length());
    rep.results["splice_betti"] = str_array(G.betti());
    rep.text << "resolution over the base has length " << G.base_length() << '\n';
    rep.text << "spliced ranks:";
    for (auto x : G.betti()) rep.text << ' ' << x;
    rep.text << '\n';
    rep.add("homotopies", G.homotopies_hold(), "sum of sigma_a sigma_b is f in the first slot and 0 beyond");
    rep.add("complex", G.is_complex());
    rep.add("exact", G.is_exact(), "on the codegree window");
    rep.results["splice_minimal"] = G.is_minimal();
    const auto per = gulliksen_periodicity_check(h, M, c.hmax);
    rep.results["gulliksen"] = {{"operator_codegree", str(per.operator_codegree)},
                                {"betti", str_array(per.betti)},
                                {"onset", per.onset ? json(str(*per.onset)) : json(nullptr)},
                                {"period", str(per.period)},
                                {"periodic", to_string(per.periodic)}};
    rep.text << "minimal Betti numbers over R:";
    for (auto x : per.betti) rep.text << ' ' << x;
    rep.text << "\nGulliksen operator codegree " << per.operator_codegree << ", period 2 "
             << (per.onset ? "from " + str(*per.onset) : std::string("not established")) << " (" << to_string(per.periodic) << ")\n";
    if (a.mf) {
      const auto mf = matrix_factorization(h, M);
      auto mat = [](const PolyMatrix<F>& X) {
        json j = json::array();
        for (const auto& row : X) {
          json r = json::array();
          for (const auto& p : row) r.push_back(p.to_string());
          j.push_back(r);
        }
        return j;
      };
      rep.results["matrix_factorization"] = {{"A", mat(mf.A)}, {"B", mat(mf.B)}};
      rep.text << "A = " << mat(mf.A).dump() << "\nB = " << mat(mf.B).dump() << '\n';
      rep.add("matrix-factorization", mf.verify(), "A B = B A = f I");
    }
  });
}

// ---- squeezed

struct SqueezedArgs {
  std::string group = "a4";
  long characteristic = -1;
  long field_degree = -1;
  std::size_t steps = 6;
};

inline void cmd_squeezed(const SqueezedArgs& a, const Common&, Report& rep) {
  std::shared_ptr<const GroupTable> G;
  FieldSpec spec;
  if (a.group.size() > 5 && a.group.substr(a.group.size() - 5) == ".json") {
    auto in = group_from_json(load_json_file(a.group));
    spec = in.field;
    G = std::make_shared<const GroupTable>(std::move(in.group));
    if (a.characteristic >= 0 || a.field_degree >= 0) {
      spec = FieldSpec::from_char(a.characteristic >= 0 ? static_cast<std::uint64_t>(a.characteristic) : spec.p,
                                  a.field_degree >= 0 ? static_cast<unsigned>(a.field_degree) : spec.degree);
    }
  } else {
    G = std::make_shared<const GroupTable>(builtin_group(a.group));
    const auto p = a.characteristic >= 0 ? static_cast<std::uint64_t>(a.characteristic) : G->prime();
    spec = FieldSpec::from_char(p, a.field_degree >= 0 ? static_cast<unsigned>(a.field_degree) : 1);
  }
  if (spec.kind == FieldSpec::Kind::rationals) throw InputError("squeezed resolutions need a positive characteristic");
  if (a.steps < 1) throw InputError("--steps must be at least 1");
  rep.inputs = {{"group", a.group}, {"char", str(spec.p)}, {"field_degree", str(spec.degree)}, {"steps", str(a.steps)}};
  GroupAlgebra A(G, FiniteField(spec));
  const auto r = squeezed_resolution(A, a.steps);
  rep.results["homology"] = str_array(r.homology);
  rep.results["projective_dims"] = str_array(r.dims());
  json stages = json::array();
  for (const auto& s : r.stages)
    stages.push_back({{"dim", str(s.P.dim())}, {"pim_multiplicities", str_array(s.multiplicities)}, {"kernel_dim", str(s.kernel_dim)},
                      {"tower", str_array(s.tower.dims)}});
  rep.results["stages"] = stages;
  rep.text << "group order " << G->order() << ", Sylow order " << G->sylow().size() << ", over " << A.field().name() << '\n';
  rep.text << "homology dims:";
  for (auto x : r.homology) rep.text << ' ' << x;
  rep.text << "\nprojective dims:";
  for (auto x : r.dims()) rep.text << ' ' << x;
  rep.text << '\n';
  bool covers = true, towers = true;
  for (std::size_t i = 0; i < r.stages.size(); ++i) {
    covers = covers && r.stages[i].cover_surjective && r.stages[i].cover_minimal;
    if (i + 1 < r.stages.size()) towers = towers && r.stages[i].tower.hom_vanishes && r.stages[i].tower.layers_trivial;
  }
  rep.add("complex", r.is_complex, "consecutive composites vanish");
  rep.add("covers-minimal", covers, "surjective with kernel in the radical");
  rep.add("coradical-certificates", towers, "Hom(M_i, k) = 0 and trivial layers");
}

// ---- preset

inline void render_preset(const PresetReport& pr, Report& rep) {
  rep.inputs = {{"preset", pr.preset}};
  for (const auto& a : pr.assertions) rep.assertions.push_back(a);
  rep.results["tables"] = json::array();
  for (const auto& T : pr.tables) {
    rep.results["tables"].push_back(table_json(T));
    rep.text << table_text(T);
  }
  if (!pr.betti.empty()) {
    rep.results["betti"] = str_array(pr.betti);
    rep.text << "Betti numbers:";
    for (auto x : pr.betti) rep.text << ' ' << x;
    rep.text << '\n';
  }
  if (!pr.homology.empty()) {
    rep.results["homology"] = str_array(pr.homology);
    rep.text << "squeezed homology dims:";
    for (auto x : pr.homology) rep.text << ' ' << x;
    rep.text << '\n';
  }
}

// ---- shift-ledger

inline ShiftEntry parse_shift_entry(const std::string& s) {
  // name:total=base+relative
  const auto colon = s.find(':');
  const auto eq = s.find('=', colon == std::string::npos ? 0 : colon);
  if (colon == std::string::npos || eq == std::string::npos) throw InputError("ledger entry must look like name:total=base+relative");
  ShiftEntry e;
  e.name = s.substr(0, colon);
  const std::string rhs = s.substr(eq + 1);
  std::size_t plus = std::string::npos;
  for (std::size_t i = 1; i < rhs.size(); ++i)
    if (rhs[i] == '+' && rhs[i - 1] != 'e') {
      plus = i;
      break;
    }
  if (plus == std::string::npos) throw InputError("ledger entry must look like name:total=base+relative");
  try {
    std::size_t used = 0;
    const std::string t = s.substr(colon + 1, eq - colon - 1), b = rhs.substr(0, plus), r = rhs.substr(plus + 1);
    e.total = std::stol(t, &used);
    if (used != t.size()) throw std::invalid_argument("");
    e.base = std::stol(b, &used);
    if (used != b.size()) throw std::invalid_argument("");
    e.relative = std::stol(r, &used);
    if (used != r.size()) throw std::invalid_argument("");
  } catch (const std::logic_error&) {
    throw InputError("ledger entry '" + s + "' has a malformed integer");
  }
  return e;
}

inline void cmd_shift_ledger(const std::vector<std::string>& entries, Report& rep) {
  ShiftLedger L = entries.empty() ? default_shift_ledger() : ShiftLedger{};
  for (const auto& s : entries) L.push_back(parse_shift_entry(s));
  rep.inputs = {{"entries", entries.empty() ? json("default") : json(entries)}};
  rep.results["entries"] = json::array();
  for (const auto& e : L) {
    rep.results["entries"].push_back({{"name", e.name}, {"total", str(e.total)}, {"base", str(e.base)}, {"relative", str(e.relative)}});
    const bool ok = e.total == e.base + e.relative;
    rep.add(e.name, ok, str(e.total) + " = " + str(e.base) + " + " + str(e.relative) + (ok ? "" : " fails"));
  }
}

}  // namespace gwb::cli

namespace gwb {

/// Runs the workbench. Exit codes: 0 all assertions pass, 1 some assertion
/// fails, 2 bad input or usage.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using namespace cli;
  // "--window -20..20" would read as a flag; glue it to its option
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string s = argv[i];
    if ((s == "--window") && i + 1 < argc) {
      args.push_back(s + "=" + argv[++i]);
      continue;
    }
    args.push_back(s);
  }
  std::reverse(args.begin(), args.end());

  CLI::App app{"gwb: exact graded commutative algebra workbench", "gwb"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Common common;
  auto common_flags = [&](CLI::App* s) {
    s->add_flag("--json", common.json_out, "machine-readable output");
  };

  HilbertArgs ha;
  auto* hil = app.add_subcommand("hilbert", "degreewise dimensions of a ring or module");
  hil->add_option("ring", ha.ring, "ring JSON file")->required();
  hil->add_option("--module", ha.module, "module JSON file");
  hil->add_option("--series", ha.series, "series to compare with");
  hil->add_option("--window", common.window, "codegree window a..b (default 0..24)");
  common_flags(hil);

  FunctionalArgs fa;
  auto* fun = app.add_subcommand("functional-eq", "CM and almost-CM functional equations of a Hilbert series");
  fun->add_option("--series", fa.series, "rational function in t")->required();
  fun->add_option("--dim", fa.dim, "Krull dimension r")->required();
  fun->add_option("--shift", fa.shift, "duality shift a")->required();
  fun->add_option("--expect", fa.expect, "cm, almost-cm or neither")->check(CLI::IsMember({"cm", "almost-cm", "neither"}));
  common_flags(fun);

  LocalcohArgs la;
  auto* loc = app.add_subcommand("localcoh", "local cohomology tables");
  loc->add_option("ring", la.ring, "ring JSON file")->required();
  loc->add_option("--module", la.module, "module JSON file");
  loc->add_option("--ideal", la.ideal, "comma-separated ideal generators")->required();
  loc->add_option("--method", la.method, "cech, duality or both");
  loc->add_option("--window", common.window, "codegree window a..b (default -20..20)");
  loc->add_option("--stab-bound", common.stab_bound, "stabilization bound for the Cech colimit");
  loc->add_option("--dim", la.dim, "expected dimension, enables the vanishing check");
  loc->add_option("--depth", la.depth, "expected depth, enables the vanishing check");
  common_flags(loc);

  KoszulArgs ka;
  auto* kos = app.add_subcommand("koszul", "Koszul homology and regular sequences");
  kos->add_option("ring", ka.ring, "ring JSON file")->required();
  kos->add_option("--module", ka.module, "module JSON file");
  kos->add_option("--elems", ka.elems, "comma-separated elements")->required();
  kos->add_option("--window", common.window, "codegree window a..b (default 0..12)");
  common_flags(kos);

  ResolutionArgs ra;
  auto* res = app.add_subcommand("resolution", "minimal free resolution (default module: the residue field)");
  res->add_option("ring", ra.ring, "ring JSON file")->required();
  res->add_option("--module", ra.module, "module JSON file");
  res->add_option("--hmax", common.hmax, "number of stages");
  res->add_option("--codegree-max", ra.codegree_max, "codegree bound");
  common_flags(res);

  HypersurfaceArgs hy;
  auto* hyp = app.add_subcommand("hypersurface", "periodic resolutions and matrix factorizations over S/(f)");
  hyp->add_option("ring", hy.ring, "polynomial ring JSON file")->required();
  hyp->add_option("--f", hy.f, "the hypersurface equation")->required();
  hyp->add_option("--module", hy.module, "module JSON file over S/(f)")->required();
  hyp->add_option("--hmax", common.hmax, "number of stages");
  hyp->add_flag("--mf", hy.mf, "also compute the matrix factorization");
  common_flags(hyp);

  SqueezedArgs sa;
  auto* sq = app.add_subcommand("squeezed", "squeezed resolution of k over a group algebra");
  sq->add_option("--group", sa.group, "built-in group name or group JSON file");
  sq->add_option("--char", sa.characteristic, "field characteristic");
  sq->add_option("--field-degree", sa.field_degree, "field degree over F_p");
  sq->add_option("--steps", sa.steps, "homological degrees to compute");
  common_flags(sq);

  auto* pre = app.add_subcommand("preset", "built-in example catalog");
  pre->require_subcommand(1);
  auto* pre_list = pre->add_subcommand("list", "list presets");
  common_flags(pre_list);
  std::string preset_name;
  auto* pre_run = pre->add_subcommand("run", "run the checks of one preset");
  pre_run->add_option("name", preset_name, "preset name")->required();
  common_flags(pre_run);

  std::vector<std::string> ledger_entries;
  auto* led = app.add_subcommand("shift-ledger", "check Gorenstein shift arithmetic");
  led->add_option("--entry", ledger_entries, "name:total=base+relative (replaces the default ledger)");
  common_flags(led);

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  }

  Report rep;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (*hil) {
      rep.command = "hilbert";
      cmd_hilbert(ha, common, rep);
    } else if (*fun) {
      rep.command = "functional-eq";
      cmd_functional(fa, common, rep);
    } else if (*loc) {
      rep.command = "localcoh";
      cmd_localcoh(la, common, rep);
    } else if (*kos) {
      rep.command = "koszul";
      cmd_koszul(ka, common, rep);
    } else if (*res) {
      rep.command = "resolution";
      cmd_resolution(ra, common, rep);
    } else if (*hyp) {
      rep.command = "hypersurface";
      cmd_hypersurface(hy, common, rep);
    } else if (*sq) {
      rep.command = "squeezed";
      cmd_squeezed(sa, common, rep);
    } else if (*pre_list) {
      rep.command = "preset list";
      rep.results["presets"] = json::array();
      for (const auto& p : preset_catalog()) {
        rep.results["presets"].push_back({{"name", p.name}, {"description", p.description}});
        rep.text << p.name << "  " << p.description << '\n';
      }
    } else if (*pre_run) {
      rep.command = "preset run";
      render_preset(preset_run(preset_name), rep);
    } else if (*led) {
      rep.command = "shift-ledger";
      cmd_shift_ledger(ledger_entries, rep);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "unsupported input: " << e.what() << '\n';
    return 2;
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  if (common.json_out)
    out << rep.to_json().dump(2) << '\n';
  else
    out << rep.to_text();
  return rep.passed() ? 0 : 1;
}

}  // namespace gwb
