// Command-line front end. Every subcommand writes one JSON document to
// stdout (or --out). Exit codes: 0 pass, 1 a check failed, 2 usage or input
// error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brokencycle/consheaf.hpp"
#include "brokencycle/equivalence.hpp"
#include "brokencycle/error.hpp"
#include "brokencycle/fspace.hpp"
#include "brokencycle/json_io.hpp"
#include "brokencycle/paracat.hpp"
#include "brokencycle/preord.hpp"
#include "brokencycle/sdot.hpp"
#include "criteria.hpp"

namespace {

using bc::json::Json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  int m = 1;
  int n = 1;
  std::string kind = "all";
  std::string sizes;
  std::string gaps;
  std::int64_t field = 101;
  int N = 2;
  std::string variant = "para";
  std::uint64_t seed = bc::acceptance::kDefaultSeed;
  std::string out;
  std::size_t cap = bc::kDefaultHomCap;
  std::string in;
  std::string upset;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> parse_ints(const std::string& s, const char* flag) {
  std::vector<int> out;
  for (const auto& item : split(s, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      bc::raise(bc::ErrorCode::kParseError, std::string(flag) + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

bc::ParaPreorder sizes_flag(const Options& o) {
  if (o.sizes.empty()) bc::raise(bc::ErrorCode::kInvalidArgument, "--sizes is required");
  return bc::ParaPreorder(parse_ints(o.sizes, "--sizes"));
}

Json read_input(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream f(path);
    if (!f) bc::raise(bc::ErrorCode::kParseError, "cannot open " + path);
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    bc::raise(bc::ErrorCode::kParseError, e.what());
  }
}

struct Outcome {
  Json doc;
  int code = kExitPass;
};

// ---------------------------------------------------------------------------

Outcome hom_count(const Options& o) {
  if (o.m < 0 || o.n < 0) bc::raise(bc::ErrorCode::kInvalidArgument, "--m and --n must be >= 0");
  bc::HomKind kind = bc::parse_hom_kind(o.kind);
  auto maps = bc::enumerate_hom(o.m, o.n, kind, o.cap);
  Json list = Json::array();
  for (const auto& h : maps) list.push_back(bc::json::write(h.rep()));
  return {{{"m", o.m}, {"n", o.n}, {"kind", bc::to_string(kind)}, {"count", maps.size()}, {"maps", list}}};
}

Outcome dualize(const Options& o) {
  std::vector<bc::ParaMap> maps;
  if (!o.in.empty()) {
    maps.push_back(bc::json::read_para_map(read_input(o.in)));
  } else {
    for (const auto& h : bc::enumerate_hom(o.m, o.n, bc::HomKind::kAll, o.cap)) maps.push_back(h.rep());
  }
  Json list = Json::array();
  bool all = true;
  for (const auto& f : maps) {
    bc::ParaMap d = bc::dualize_map(f);
    bool dd = bc::double_dual_transport(f) == f;
    all = all && dd;
    list.push_back({{"map", bc::json::write(f)},
                    {"dual", bc::json::write(d)},
                    {"class", bc::to_string(bc::classify(f))},
                    {"dual_class", bc::to_string(bc::classify(d))},
                    {"double_dual_is_identity", dd}});
  }
  return {{{"pass", all}, {"count", maps.size()}, {"maps", list}}, all ? kExitPass : kExitFail};
}

Outcome conv(const Options& o) {
  bc::ParaPreorder p = sizes_flag(o);
  bc::ConvPoset poset = bc::enumerate_conv(p);
  Json rels = Json::array();
  for (const auto& e : poset.elements) {
    Json r = bc::json::write(e);
    r["n_quotient"] = e.n_quotient();
    rels.push_back(r);
  }
  Json covers = Json::array();
  for (const auto& [lo, up] : poset.covers) {
    covers.push_back({{"from", poset.elements[lo].gaps()}, {"to", poset.elements[up].gaps()}});
  }
  return {{{"base", bc::json::write(p)}, {"count", poset.size()}, {"relations", rels}, {"covers", covers}}};
}

Outcome point(const Options& o) {
  bc::FPoint p = [&] {
    if (!o.in.empty()) return bc::json::read_point(read_input(o.in));
    std::vector<bc::ExtRealUpper> gaps;
    for (const auto& g : split(o.gaps, ',')) gaps.emplace_back(bc::ExtReal::parse(g));
    return bc::validate_point(sizes_flag(o), std::move(gaps));
  }();
  bc::FiberInvariants inv = bc::fiber_invariants(p);
  Json sections = Json::array();
  for (std::int64_t i = 0; i < p.base().period(); ++i) sections.push_back(bc::json::write(bc::section_point(p, i)));
  return {{{"point", bc::json::write(p)},
           {"stratum", bc::json::write(bc::stratum_of(p))},
           {"fiber", {{"n", inv.n}, {"fixed_points_per_period", inv.fixed_points_per_period}}},
           {"section_points", sections}}};
}

Outcome strata(const Options& o) {
  bc::ParaPreorder p = sizes_flag(o);
  Json list = Json::array();
  for (const auto& e : bc::enumerate_conv(p).elements) {
    bc::FPoint w = bc::witness_point(e);
    list.push_back({{"relation", bc::json::write(e)},
                    {"witness", bc::json::write(w)},
                    {"fixed_points_per_period", bc::fiber_invariants(w).fixed_points_per_period}});
  }
  return {{{"base", bc::json::write(p)}, {"count", list.size()}, {"strata", list}}};
}

bc::StratSheaf sheaf_input(const Options& o) {
  if (!o.in.empty()) return bc::json::read_sheaf(read_input(o.in));
  std::mt19937_64 rng(o.seed);
  return bc::random_sheaf(sizes_flag(o), bc::Field(o.field), 3, rng);
}

// --upset "0,1;2" is the up-set generated by the relations with gaps {0,1}
// and {2}; empty means all of Conv(I).
bc::UpSet upset_flag(const Options& o, const bc::StratSheaf& f) {
  if (o.upset.empty()) return bc::UpSet::all(f.poset());
  std::vector<bc::ConvexRelation> gens;
  for (const auto& g : split(o.upset, ';')) gens.emplace_back(f.base(), parse_ints(g, "--upset"));
  return bc::UpSet::generated_by(f.poset(), gens);
}

Outcome sections(const Options& o) {
  bc::StratSheaf f = sheaf_input(o);
  bc::UpSet u = upset_flag(o, f);
  bc::Sections s = bc::sections(f, u);
  Json members = Json::array();
  for (std::size_t i : u.indices()) members.push_back(f.poset().elements[i].gaps());
  return {{{"sheaf", bc::json::write(f)},
           {"upset", members},
           {"dim", s.dim},
           {"ambient", s.ambient},
           {"basis", bc::json::write(s.basis)}}};
}

Outcome stalk(const Options& o) {
  bc::StratSheaf f = sheaf_input(o);
  if (o.gaps.empty()) bc::raise(bc::ErrorCode::kInvalidArgument, "--gaps names the stratum");
  bc::ConvexRelation e(f.base(), parse_ints(o.gaps, "--gaps"));
  return {{{"relation", bc::json::write(e)}, {"dim", bc::stalk(f, e).dim}, {"field", f.field().characteristic()}}};
}

Outcome check_adjunction(const Options& o) {
  bc::Variant v = bc::parse_variant(o.variant);
  bc::ConvTilde c = bc::build_conv_tilde(o.N, v);
  bc::AdjunctionReport rep = bc::check_localization_adjunction(c);
  bool pass = rep.pass();
  return {{{"pass", pass},
           {"N", o.N},
           {"variant", bc::to_string(v)},
           {"objects", c.objects.size()},
           {"edges", c.edges.size()},
           {"cartesian_edges", c.cartesian_count()},
           {"triangles", bc::json::write(rep.triangles)},
           {"unit_naturality", bc::json::write(rep.unit_naturality)},
           {"hom_bijection", bc::json::write(rep.hom_bijection)},
           {"fully_faithful", bc::json::write(rep.fully_faithful)},
           {"cartesian", bc::json::write(rep.cartesian)}},
          pass ? kExitPass : kExitFail};
}

Outcome roundtrip(const Options& o) {
  bc::Variant v = bc::parse_variant(o.variant);
  bc::ParaRep g = [&] {
    if (!o.in.empty()) return bc::json::read_rep(read_input(o.in));
    if (o.N < 0 || o.N > bc::kMaxConvTildeN) {
      bc::raise(bc::ErrorCode::kResourceBound, "--N must lie in 0.." + std::to_string(bc::kMaxConvTildeN));
    }
    std::mt19937_64 rng(o.seed);
    return bc::random_rep(o.N, bc::Field(o.field), 4, v, rng);
  }();
  if (g.N > bc::kMaxConvTildeN) bc::raise(bc::ErrorCode::kResourceBound, "rep truncation too large");
  bc::CheckReport valid = bc::validate_rep(g, v);
  if (!valid.pass) return {{{"pass", false}, {"rep_check", bc::json::write(valid)}}, kExitFail};
  bc::SheafSystem s = bc::realize_system(g, bc::build_skeleton(g.N + 1));
  bc::CheckReport system = bc::validate_system(s);
  bool recovered = bc::recover_rep(s, g.N) == g;
  bool stalks = true;
  for (const auto& sheaf : s.sheaves) {
    for (const auto& e : sheaf.poset().elements) {
      stalks = stalks && bc::stalk(sheaf, e).dim == g.dims[static_cast<std::size_t>(e.n_quotient())];
    }
  }
  bool pass = system.pass && recovered && stalks;
  return {{{"pass", pass},
           {"variant", bc::to_string(v)},
           {"rep", bc::json::write(g)},
           {"sheaves", s.sheaves.size()},
           {"system_check", bc::json::write(system)},
           {"recovered", recovered},
           {"stalks_match", stalks}},
          pass ? kExitPass : kExitFail};
}

Outcome sdot_rotate(const Options& o) {
  bc::FilteredObject f = [&] {
    if (!o.in.empty()) return bc::json::read_filtration(read_input(o.in));
    if (o.n < 0) bc::raise(bc::ErrorCode::kInvalidArgument, "--n must be >= 0");
    std::mt19937_64 rng(o.seed);
    return bc::random_filtration(bc::Field(o.field), static_cast<std::size_t>(o.n), 4, rng);
  }();
  bc::FilteredObject r = bc::rotate(f);
  bc::PeriodicityReport rep = bc::rotation_periodicity_check(f);
  return {{{"pass", rep.pass},
           {"input", bc::json::write(f)},
           {"rotated", bc::json::write(r)},
           {"periodicity", {{"n", rep.n},
                            {"fingerprint_match", rep.fingerprint_match},
                            {"explicit_equivalence", rep.explicit_equivalence},
                            {"detail", rep.detail}}}},
          rep.pass ? kExitPass : kExitFail};
}

Outcome selftest(const Options& o) {
  auto results = bc::acceptance::run_suite(o.seed, [](const bc::acceptance::CriterionResult& r) {
    std::cerr << bc::acceptance::format_line(r) << std::endl;
  });
  Json doc = bc::acceptance::to_json(results);
  doc["seed"] = o.seed;
  return {doc, doc["pass"].get<bool>() ? kExitPass : kExitFail};
}

int emit(const Json& doc, const std::string& out) {
  std::string text = doc.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out);
  if (!f) {
    std::cerr << "cannot write " << out << "\n";
    return 1;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paracyclic and cyclic categories, broken paracycles and their sheaves"};
  app.require_subcommand(1);
  Options o;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--out", o.out, "Write JSON here instead of stdout");
    sub->add_option("--seed", o.seed, "Seed for randomized inputs");
    return sub;
  };
  auto* hc = add("hom-count", "Enumerate Hom_cyc(Par(m), Par(n))");
  hc->add_option("--m", o.m)->capture_default_str();
  hc->add_option("--n", o.n)->capture_default_str();
  hc->add_option("--kind", o.kind, "all, inj or surj")->capture_default_str();
  hc->add_option("--cap", o.cap, "Refuse enumerations larger than this");
  auto* du = add("dualize", "Dualize one map (--in) or every map Par(m) -> Par(n)");
  du->add_option("--m", o.m);
  du->add_option("--n", o.n);
  du->add_option("--in", o.in, "Map JSON file, - for stdin");
  du->add_option("--cap", o.cap);
  auto* cv = add("conv", "List Conv(I) for I given by class sizes");
  cv->add_option("--sizes", o.sizes, "Comma-separated class sizes, e.g. 2,1")->required();
  auto* pt = add("point", "Describe a point of F^(I)");
  pt->add_option("--sizes", o.sizes);
  pt->add_option("--gaps", o.gaps, "Gap vector, e.g. 0,inf,1/2");
  pt->add_option("--in", o.in, "Point JSON file");
  auto* st = add("strata", "Witness points of every stratum of F^(I)");
  st->add_option("--sizes", o.sizes)->required();
  auto* se = add("sections", "Sections of a sheaf over an up-set");
  se->add_option("--in", o.in, "Sheaf JSON file; otherwise a random sheaf on --sizes");
  se->add_option("--sizes", o.sizes);
  se->add_option("--field", o.field);
  se->add_option("--upset", o.upset, "Generators as gap sets, e.g. \"0,1;2\"");
  auto* sk = add("stalk", "Stalk of a sheaf at the stratum given by --gaps");
  sk->add_option("--in", o.in);
  sk->add_option("--sizes", o.sizes);
  sk->add_option("--field", o.field);
  sk->add_option("--gaps", o.gaps)->required();
  auto* ca = add("check-adjunction", "Verify the localization adjunction on Conv~");
  ca->add_option("--N", o.N)->capture_default_str();
  ca->add_option("--variant", o.variant, "para or cyc")->capture_default_str();
  auto* rt = add("roundtrip", "Realize a rep as a sheaf system and recover it");
  rt->add_option("--N", o.N)->capture_default_str();
  rt->add_option("--variant", o.variant)->capture_default_str();
  rt->add_option("--field", o.field);
  rt->add_option("--in", o.in, "Rep JSON file");
  auto* sd = add("sdot-rotate", "Rotate a filtration and check periodicity");
  sd->add_option("--in", o.in, "Filtration JSON file; otherwise random of length --n");
  sd->add_option("--n", o.n);
  sd->add_option("--field", o.field);
  auto* sf = add("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  const std::vector<std::pair<CLI::App*, Outcome (*)(const Options&)>> table = {
      {hc, hom_count}, {du, dualize},   {cv, conv},         {pt, point},
      {st, strata},    {se, sections},  {sk, stalk},        {ca, check_adjunction},
      {rt, roundtrip}, {sd, sdot_rotate}, {sf, selftest},
  };
  for (const auto& [sub, fn] : table) {
    if (!sub->parsed()) continue;
    try {
      Outcome r = fn(o);
      if (emit(r.doc, o.out) != 0) return kExitUsage;
      return r.code;
    } catch (const bc::Error& e) {
      emit(bc::json::write_error(e), o.out);
      return kExitUsage;
    }
  }
  return kExitUsage;
}
