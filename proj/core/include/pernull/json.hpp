#pragma once

#include <nlohmann/json.hpp>

#include "pernull/graph.hpp"
#include "pernull/matching.hpp"
#include "pernull/nullity.hpp"
#include "pernull/permanent.hpp"
#include "pernull/verify.hpp"

namespace pernull {

// Field order is fixed by insertion, so dumps are byte-stable. Coefficients are
// decimal strings; counts and vertex labels are plain integers.
using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const NullityReport& r, const Graph& g);
Json to_json(const GEDecomposition& dec);
Json to_json(const PermPolynomial& p);
Json to_json(const CorpusSpec& spec);
Json to_json(const VerifyResult& r);

}  // namespace pernull
