#pragma once

// JSON ingestion and emission. Loaders throw InvalidArgument on malformed documents.
// Non-finite numbers are written as the strings "inf", "-inf" and "nan".

#include <json.hpp>

#include "gkt/adjoint.hpp"
#include "gkt/grid.hpp"
#include "gkt/ks_space.hpp"
#include "gkt/schatten.hpp"
#include "gkt/semigroup.hpp"
#include "gkt/spectral.hpp"

namespace gkt::io {

using nlohmann::json;

json number(double x);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const CVector& v);
Vector vector_from_json(const json& j, const char* what);
Matrix matrix_from_json(const json& j, const char* what);

json to_json(const GridFunction& f);
GridFunction grid_function_from_json(const json& j);

json to_json(const KSConfig& cfg);
KSConfig ks_config_from_json(const json& j);

json to_json(const GKTriple& t);
GKTriple triple_from_json(const json& j);

json to_json(const BanachModel& m);
BanachModel model_from_json(const json& j, int n);

/// `{n, matrix, model, triple?}`; without a triple the default one for the model is built.
json to_json(const OperatorOnB& op);
OperatorOnB operator_from_json(const json& j);
OperatorOnB load_operator(const std::string& path);

json to_json(const EmbeddingReport& r);
json to_json(const AtaReport& r);
json to_json(const LaxReport& r);
json to_json(const CounterexampleReport& r);
json to_json(const NaturalSelfadjointReport& r);
json to_json(const SpectralPackage& p);
json to_json(const SpectralChecks& c);
json to_json(const BVVectorFunction& bv);
json to_json(const WeylHornReport& r);
json to_json(const LalescoLidskiiReport& r);
json to_json(const DecayEstimate& e);
json to_json(const ContractionWindow& w);
json to_json(const PoincareReport& r);
json to_json(const RelativeBoundReport& r);

}  // namespace gkt::io
