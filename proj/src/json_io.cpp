#include "brokencycle/json_io.hpp"

#include <sstream>

namespace bc::json {

namespace {

// Runs a reader, turning library-level type errors into ParseError.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::kParseError, std::string(what) + ": " + e.what());
  }
}

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) raise(ErrorCode::kParseError, std::string("missing \"") + key + "\"");
  return j.at(key);
}

Field read_field(const Json& j) { return Field(field_of(j, "field").get<std::int64_t>()); }

std::string gap_key(const ConvexRelation& e) {
  std::ostringstream os;
  auto gaps = e.gaps();
  for (std::size_t i = 0; i < gaps.size(); ++i) os << (i ? "," : "") << gaps[i];
  return os.str();
}

std::vector<int> parse_gap_key(const std::string& key) {
  std::vector<int> out;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      raise(ErrorCode::kParseError, "bad gap set key '" + key + "'");
    }
  }
  return out;
}

}  // namespace

Json write(const Matrix& m) { return Json(m.to_rows()); }

Matrix read_matrix(const Json& j, Field field, std::size_t rows, std::size_t cols) {
  return guarded("matrix", [&] {
    if (!j.is_array()) raise(ErrorCode::kParseError, "matrix must be an array of rows");
    auto data = j.get<std::vector<std::vector<std::int64_t>>>();
    if (data.size() != rows) {
      raise(ErrorCode::kDimensionMismatch, "expected " + std::to_string(rows) + " rows, got " +
                                               std::to_string(data.size()));
    }
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (data[r].size() != cols) {
        raise(ErrorCode::kDimensionMismatch, "row " + std::to_string(r) + " has " +
                                                 std::to_string(data[r].size()) + " entries, expected " +
                                                 std::to_string(cols));
      }
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, data[r][c]);
    }
    return m;
  });
}

Json write(const ExtReal& x) { return x.to_string(); }

ExtReal read_extreal(const Json& j) {
  return guarded("extended real", [&] {
    if (j.is_number_integer()) return ExtReal(static_cast<long long>(j.get<std::int64_t>()));
    return ExtReal::parse(j.get<std::string>());
  });
}

Json write(const Parasimplex& p) { return {{"n", p.n}}; }

Parasimplex read_parasimplex(const Json& j) {
  return guarded("parasimplex", [&] {
    int n = field_of(j, "n").get<int>();
    if (n < 0) raise(ErrorCode::kInvalidArgument, "n must be >= 0");
    return Parasimplex{n};
  });
}

Json write(const ParaMap& f) {
  Json values = Json::array();
  for (const auto& c : f.canonical().codes()) values.push_back({c.period, c.slot});
  return {{"m", f.m()}, {"n", f.n()}, {"values", values}, {"shift", f.shift()}};
}

ParaMap read_para_map(const Json& j) {
  return guarded("map", [&] {
    int m = field_of(j, "m").get<int>();
    int n = field_of(j, "n").get<int>();
    std::vector<ElementCode> codes;
    for (const auto& v : field_of(j, "values")) codes.push_back({v.at(0).get<std::int64_t>(), v.at(1).get<int>()});
    std::int64_t shift = j.value("shift", std::int64_t{0});
    if (m < 0 || n < 0) raise(ErrorCode::kInvalidArgument, "m and n must be >= 0");
    for (const auto& c : codes) {
      if (c.slot < 0 || c.slot > n) raise(ErrorCode::kInvalidArgument, "slot out of range");
    }
    return shift_action(ParaMap::from_codes(m, n, codes), shift);
  });
}

Json write(const ParaPreorder& p) { return {{"sizes", p.sizes()}}; }

ParaPreorder read_preorder(const Json& j) {
  return guarded("preorder", [&] { return ParaPreorder(field_of(j, "sizes").get<std::vector<int>>()); });
}

Json write(const ConvexRelation& e) { return {{"sizes", e.base().sizes()}, {"gaps", e.gaps()}}; }

ConvexRelation read_relation(const Json& j) {
  return guarded("relation", [&] {
    auto gaps = field_of(j, "gaps").get<std::vector<int>>();
    return ConvexRelation(read_preorder(j), gaps);
  });
}

Json write(const PreordMap& r) {
  return {{"src", write(r.src())}, {"tgt", write(r.tgt())}, {"values", r.values()}};
}

PreordMap read_preord_map(const Json& j) {
  return guarded("morphism", [&] {
    auto values = field_of(j, "values").get<std::vector<std::int64_t>>();
    return is_valid_morphism(read_preorder(field_of(j, "src")), read_preorder(field_of(j, "tgt")), values);
  });
}

Json write(const FPoint& p) {
  Json gaps = Json::array();
  for (const auto& g : p.gaps()) gaps.push_back(g.get().to_string());
  return {{"base", write(p.base())}, {"gaps", gaps}};
}

FPoint read_point(const Json& j) {
  return guarded("point", [&] {
    std::vector<ExtRealUpper> gaps;
    for (const auto& g : field_of(j, "gaps")) gaps.emplace_back(read_extreal(g));
    return validate_point(read_preorder(field_of(j, "base")), std::move(gaps));
  });
}

Json write(const BetaPoint& b) {
  Json coords = Json::array();
  for (const auto& c : b.coords()) coords.push_back(c.to_string());
  return {{"point", write(b.base())}, {"window", {b.lo(), b.hi()}}, {"coords", coords}};
}

BetaPoint read_beta(const Json& j) {
  return guarded("beta", [&] {
    const Json& window = field_of(j, "window");
    std::int64_t lo = window.at(0).get<std::int64_t>();
    std::int64_t hi = window.at(1).get<std::int64_t>();
    std::vector<ExtReal> coords;
    for (const auto& c : field_of(j, "coords")) coords.push_back(read_extreal(c));
    if (hi - lo + 1 != static_cast<std::int64_t>(coords.size())) {
      raise(ErrorCode::kParseError, "window and coords disagree in length");
    }
    return BetaPoint(read_point(field_of(j, "point")), lo, std::move(coords));
  });
}

Json write(const StratSheaf& f) {
  Json values = Json::object();
  for (const auto& e : f.poset().elements) values[gap_key(e)] = f.dim(e);
  Json maps = Json::array();
  for (const auto& [key, m] : f.data().maps) {
    ConvexRelation lo = ConvexRelation::from_mask(f.base(), key.first);
    ConvexRelation up = ConvexRelation::from_mask(f.base(), key.second);
    maps.push_back({{"from", lo.gaps()}, {"to", up.gaps()}, {"matrix", write(m)}});
  }
  return {{"base", write(f.base())},
          {"field", f.field().characteristic()},
          {"values", values},
          {"maps", maps}};
}

StratSheaf read_sheaf(const Json& j) {
  return guarded("sheaf", [&] {
    ParaPreorder base = read_preorder(field_of(j, "base"));
    Field field = read_field(j);
    ConvPoset poset = enumerate_conv(base);
    StratSheafData data{base, field, std::vector<std::size_t>(poset.size(), 0), {}};
    std::vector<bool> seen(poset.size(), false);
    for (const auto& [key, dim] : field_of(j, "values").items()) {
      auto gaps = parse_gap_key(key);
      ConvexRelation e(base, gaps);
      data.dims[e.mask() - 1] = dim.get<std::size_t>();
      seen[e.mask() - 1] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (!seen[i]) raise(ErrorCode::kParseError, "no value at " + poset.elements[i].to_string());
    }
    for (const auto& m : field_of(j, "maps")) {
      auto from = field_of(m, "from").get<std::vector<int>>();
      auto to = field_of(m, "to").get<std::vector<int>>();
      ConvexRelation lo(base, from);
      ConvexRelation up(base, to);
      data.maps.emplace(std::pair{lo.mask(), up.mask()},
                        read_matrix(field_of(m, "matrix"), field, data.dims[up.mask() - 1],
                                    data.dims[lo.mask() - 1]));
    }
    return validate_sheaf(std::move(data));
  });
}

Json write(const ParaRep& g) {
  Json spaces = Json::object();
  for (std::size_t n = 0; n < g.dims.size(); ++n) spaces[std::to_string(n)] = g.dims[n];
  Json gens = Json::array();
  for (const auto& [f, m] : g.gen_maps) gens.push_back({{"map", write(f)}, {"matrix", write(m)}});
  Json shifts = Json::array();
  for (const auto& t : g.shifts) shifts.push_back(write(t));
  return {{"N", g.N}, {"field", g.field.characteristic()}, {"spaces", spaces}, {"gen_maps", gens}, {"shifts", shifts}};
}

ParaRep read_rep(const Json& j) {
  return guarded("rep", [&] {
    ParaRep g;
    g.N = field_of(j, "N").get<int>();
    if (g.N < 0) raise(ErrorCode::kInvalidArgument, "N must be >= 0");
    g.field = read_field(j);
    const Json& spaces = field_of(j, "spaces");
    for (int n = 0; n <= g.N; ++n) {
      auto key = std::to_string(n);
      if (!spaces.contains(key)) raise(ErrorCode::kParseError, "no space at " + key);
      g.dims.push_back(spaces.at(key).get<std::size_t>());
    }
    const Json& shifts = field_of(j, "shifts");
    if (shifts.size() != g.dims.size()) raise(ErrorCode::kParseError, "expected one shift per space");
    for (std::size_t n = 0; n < g.dims.size(); ++n) {
      g.shifts.push_back(read_matrix(shifts.at(n), g.field, g.dims[n], g.dims[n]));
    }
    for (const auto& entry : field_of(j, "gen_maps")) {
      ParaMap f = read_para_map(field_of(entry, "map"));
      if (f.m() > g.N || f.n() > g.N) raise(ErrorCode::kTruncationExceeded, f.to_string() + " exceeds N");
      g.gen_maps.emplace(f, read_matrix(field_of(entry, "matrix"), g.field,
                                        g.dims[static_cast<std::size_t>(f.n())],
                                        g.dims[static_cast<std::size_t>(f.m())]));
    }
    return g;
  });
}

Json write(const TwoPeriodicComplex& x) {
  return {{"field", x.field().characteristic()},
          {"dims", {x.dim(0), x.dim(1)}},
          {"d0", write(x.d(0))},
          {"d1", write(x.d(1))}};
}

TwoPeriodicComplex read_complex(const Json& j) {
  return guarded("complex", [&] {
    Field field = read_field(j);
    auto dims = field_of(j, "dims").get<std::vector<std::size_t>>();
    if (dims.size() != 2) raise(ErrorCode::kParseError, "dims must have two entries");
    return TwoPeriodicComplex(read_matrix(field_of(j, "d0"), field, dims[1], dims[0]),
                              read_matrix(field_of(j, "d1"), field, dims[0], dims[1]));
  });
}

Json write(const FilteredObject& f) {
  Json objects = Json::array();
  for (const auto& x : f.objects()) objects.push_back(write(x));
  Json maps = Json::array();
  for (const auto& m : f.maps()) maps.push_back({{"f0", write(m.f(0))}, {"f1", write(m.f(1))}});
  return {{"field", f.field().characteristic()}, {"objects", objects}, {"maps", maps}};
}

FilteredObject read_filtration(const Json& j) {
  return guarded("filtration", [&] {
    std::vector<TwoPeriodicComplex> objects;
    for (const auto& o : field_of(j, "objects")) objects.push_back(read_complex(o));
    if (objects.empty()) return FilteredObject(j.contains("field") ? read_field(j) : Field());
    const Json& maps_json = field_of(j, "maps");
    if (maps_json.size() + 1 != objects.size()) raise(ErrorCode::kParseError, "need one map per link");
    std::vector<ComplexMap> maps;
    for (std::size_t i = 0; i < maps_json.size(); ++i) {
      const auto& a = objects[i];
      const auto& b = objects[i + 1];
      Field field = a.field();
      maps.emplace_back(a, b, read_matrix(field_of(maps_json[i], "f0"), field, b.dim(0), a.dim(0)),
                        read_matrix(field_of(maps_json[i], "f1"), field, b.dim(1), a.dim(1)));
    }
    return FilteredObject(std::move(objects), std::move(maps));
  });
}

Json write(const CheckReport& r) {
  return {{"pass", r.pass}, {"checks", r.checks}, {"violations", r.violations}, {"messages", r.messages}};
}

Json write(const HomologyDims& h) { return {h.h0, h.h1}; }

Json write_error(const Error& e) {
  return {{"error", std::string(error_name(e.code()))}, {"message", e.what()}};
}

}  // namespace bc::json
