#ifndef BROKENCYCLE_JSON_IO_HPP
#define BROKENCYCLE_JSON_IO_HPP

#include <cstddef>

#include "json.hpp"

#include "brokencycle/consheaf.hpp"
#include "brokencycle/equivalence.hpp"
#include "brokencycle/error.hpp"
#include "brokencycle/fspace.hpp"
#include "brokencycle/linalg.hpp"
#include "brokencycle/paracat.hpp"
#include "brokencycle/preord.hpp"
#include "brokencycle/sdot.hpp"

namespace bc::json {

using Json = nlohmann::json;

// Every reader throws ParseError on malformed input and lets domain errors
// from the validating constructors through.

/// Rows of entries; the shape is passed in so empty matrices survive.
Json write(const Matrix& m);
Matrix read_matrix(const Json& j, Field field, std::size_t rows, std::size_t cols);

Json write(const ExtReal& x);
ExtReal read_extreal(const Json& j);

/// {"n": 2}
Json write(const Parasimplex& p);
Parasimplex read_parasimplex(const Json& j);
/// {"m":1,"n":1,"values":[[0,0],[0,1]],"shift":0}, values as [period, slot].
Json write(const ParaMap& f);
ParaMap read_para_map(const Json& j);

/// {"sizes":[2,1]}
Json write(const ParaPreorder& p);
ParaPreorder read_preorder(const Json& j);
/// {"sizes":[2,1],"gaps":[0]}
Json write(const ConvexRelation& e);
ConvexRelation read_relation(const Json& j);
/// {"src":{...},"tgt":{...},"values":[...]}
Json write(const PreordMap& r);
PreordMap read_preord_map(const Json& j);

/// {"base":{"sizes":[...]},"gaps":["3/1","inf"]}
Json write(const FPoint& p);
FPoint read_point(const Json& j);
/// {"point":{...},"window":[lo,hi],"coords":[...]}
Json write(const BetaPoint& b);
BetaPoint read_beta(const Json& j);

/// {"base":...,"field":101,"values":{"0,1":dim,...},
///  "maps":[{"from":[gaps],"to":[gaps],"matrix":[[...]]}]}
Json write(const StratSheaf& f);
StratSheaf read_sheaf(const Json& j);

/// {"N":3,"field":101,"spaces":{"0":d,...},
///  "gen_maps":[{"map":{...},"matrix":[[...]]}],"shifts":[[[...]],...]}
Json write(const ParaRep& g);
ParaRep read_rep(const Json& j);

/// {"field":2,"dims":[a,b],"d0":[[...]],"d1":[[...]]}
Json write(const TwoPeriodicComplex& x);
TwoPeriodicComplex read_complex(const Json& j);
/// {"field":2,"objects":[...],"maps":[{"f0":[[...]],"f1":[[...]]}]}
Json write(const FilteredObject& f);
FilteredObject read_filtration(const Json& j);

Json write(const CheckReport& r);
Json write(const HomologyDims& h);

/// {"error":"NotMonotone","message":"..."}
Json write_error(const Error& e);

}  // namespace bc::json

#endif  // BROKENCYCLE_JSON_IO_HPP
