#include "gkt/json_io.hpp"

#include <cmath>
#include <fstream>

#include "gkt/errors.hpp"
#include "gkt/generators.hpp"

namespace gkt::io {

json number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

json to_json(const Vector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(number(v[i]));
    return a;
}

json to_json(const Matrix& m) {
    json a = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(to_json(Vector(m.row(i).transpose())));
    return a;
}

json to_json(const CVector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back({number(v[i].real()), number(v[i].imag())});
    return a;
}

namespace {

double as_number(const json& j, const char* what) {
    if (!j.is_number()) throw InvalidArgument(std::string(what) + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw InvalidArgument(std::string(what) + ": non-finite number");
    return v;
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InvalidArgument(std::string(what) + ": expected an integer");
    return j.get<int>();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Vector vector_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw InvalidArgument(std::string(what) + ": expected an array");
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = as_number(j[i], what);
    return v;
}

Matrix matrix_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw InvalidArgument(std::string(what) + ": expected a non-empty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array()) throw InvalidArgument(std::string(what) + ": rows must be arrays");
    const std::size_t cols = j[0].size();
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw InvalidArgument(std::string(what) + ": ragged rows");
        for (std::size_t k = 0; k < cols; ++k)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = as_number(j[i][k], what);
    }
    return m;
}

json to_json(const GridFunction& f) {
    const Grid& g = f.grid();
    json values = json::array();
    for (double v : f.values()) values.push_back(number(v));
    return {{"grid", {{"n", g.dimension()}, {"L", g.half_width()}, {"m", g.points_per_axis()}}}, {"values", values}};
}

GridFunction grid_function_from_json(const json& j) {
    const json& g = field(j, "grid");
    const int n = as_int(field(g, "n"), "grid.n");
    const double L = as_number(field(g, "L"), "grid.L");
    const int m = as_int(field(g, "m"), "grid.m");
    if (m < 0) throw InvalidArgument("grid.m must be positive");
    const Vector v = vector_from_json(field(j, "values"), "values");
    if (v.size() == 0) throw InvalidArgument("values array is empty");
    return GridFunction(Grid(n, L, static_cast<std::size_t>(m)), std::vector<double>(v.data(), v.data() + v.size()));
}

json to_json(const KSConfig& cfg) {
    json j = {{"n", cfg.dimension()}, {"K", cfg.size()}, {"enumeration_seed_order", "paper"}};
    if (cfg.dyadic_weights()) {
        j["weights"] = "dyadic";
    } else {
        json w = json::array();
        for (double x : cfg.weights()) w.push_back(x);
        j["weights"] = w;
    }
    return j;
}

KSConfig ks_config_from_json(const json& j) {
    const int n = as_int(field(j, "n"), "n");
    const int k = as_int(field(j, "K"), "K");
    if (k < 1) throw InvalidArgument("K must be >= 1");
    if (j.contains("enumeration_seed_order") && j.at("enumeration_seed_order") != "paper")
        throw InvalidArgument("only the 'paper' enumeration order is supported");
    const json& w = field(j, "weights");
    if (w.is_string()) {
        if (w != "dyadic") throw InvalidArgument("weights must be \"dyadic\" or an array");
        return KSConfig::dyadic(n, static_cast<std::size_t>(k));
    }
    const Vector v = vector_from_json(w, "weights");
    if (v.size() != k) throw InvalidArgument("weights length differs from K");
    return KSConfig(CubeEnumeration(n, static_cast<std::size_t>(k)), std::vector<double>(v.data(), v.data() + v.size()));
}

json to_json(const GKTriple& t) {
    return {{"n", t.dimension()}, {"G1", to_json(t.g1())},         {"G2", to_json(t.g2())},
            {"Phi", to_json(t.phi())}, {"lambda", to_json(t.lambda())}, {"t", to_json(t.t())}};
}

GKTriple triple_from_json(const json& j) {
    const int n = as_int(field(j, "n"), "n");
    Matrix g1 = matrix_from_json(field(j, "G1"), "G1");
    Matrix g2 = matrix_from_json(field(j, "G2"), "G2");
    Matrix phi = matrix_from_json(field(j, "Phi"), "Phi");
    Vector lambda = vector_from_json(field(j, "lambda"), "lambda");
    Vector t = j.contains("t") ? vector_from_json(j.at("t"), "t") : Vector();
    if (g1.rows() != n || g2.rows() != n || phi.rows() != n) throw InvalidArgument("triple matrices do not match n");
    return GKTriple(std::move(g1), std::move(g2), std::move(phi), std::move(lambda), std::move(t));
}

json to_json(const BanachModel& m) {
    if (m.kind() == NormKind::Lp) return {{"lp", m.exponent()}};
    return m.name();
}

BanachModel model_from_json(const json& j, int n) {
    if (j.is_string()) return parse_model(j.get<std::string>(), n);
    if (j.is_object() && j.contains("lp")) {
        const double p = as_number(j.at("lp"), "model.lp");
        if (!(p > 1.0)) throw InvalidArgument("lp exponent must exceed 1");
        return BanachModel::lp(n, p);
    }
    throw InvalidArgument("model must be \"l1\", \"l2\", \"sup\" or {\"lp\": p}");
}

json to_json(const OperatorOnB& op) {
    return {{"n", op.dimension()},
            {"matrix", to_json(op.matrix())},
            {"model", to_json(op.model())},
            {"triple", to_json(op.triple())}};
}

OperatorOnB operator_from_json(const json& j) {
    const int n = as_int(field(j, "n"), "n");
    if (n < 1) throw InvalidArgument("n must be >= 1");
    Matrix a = matrix_from_json(field(j, "matrix"), "matrix");
    if (a.rows() != n || a.cols() != n) throw InvalidArgument("matrix is not n x n");
    BanachModel model = j.contains("model") ? model_from_json(j.at("model"), n) : BanachModel::l2(n);
    auto triple = j.contains("triple") ? std::make_shared<const GKTriple>(triple_from_json(j.at("triple")))
                                       : gen::default_triple(model);
    return OperatorOnB(std::move(a), std::move(model), std::move(triple));
}

OperatorOnB load_operator(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
    }
    return operator_from_json(j);
}

json to_json(const EmbeddingReport& r) {
    return {{"ks", number(r.ks)},
            {"l1", number(r.l1)},
            {"l2", number(r.l2)},
            {"linf", number(r.linf)},
            {"alexiewicz", number(r.alexiewicz)},
            {"asserted",
             {{"ks_le_l1", r.ks_le_l1},
              {"ks_le_l2", r.ks_le_l2},
              {"ks_le_linf", r.ks_le_linf},
              {"ks_le_2alexiewicz", r.ks_le_2alexiewicz}}}};
}

json to_json(const AtaReport& r) {
    return {{"asserted",
             {{"g1_selfadjoint_residual", number(r.g1_selfadjoint_residual)},
              {"min_positivity", number(r.min_positivity)},
              {"min_eig", number(r.min_eig)}}},
            {"observed",
             {{"accretivity_min", number(r.accretivity_min)}, {"alt_star_gap", number(r.alt_star_gap)}}}};
}

json to_json(const LaxReport& r) {
    return {{"norm_b", number(r.norm_b)},
            {"norm_b_exact", r.norm_b_exact},
            {"norm_g2", number(r.norm_g2)},
            {"lax_ratio", number(r.ratio())},
            {"g2_selfadjoint", r.g2_selfadjoint},
            {"embedding_constant_le_one", r.embedding_constant_le_one},
            {"asserted", r.asserted},
            {"holds", r.holds}};
}

json to_json(const CounterexampleReport& r) {
    return {{"n", r.n},
            {"x_norm_l2", number(r.x_norm_l2)},
            {"x_norm_l1", number(r.x_norm_l1)},
            {"tx_minus_e1_l2", number(r.tx_minus_e1_l2)},
            {"t_norm_l1", number(r.t_norm_l1)},
            {"expected_x_norm_l2", number(r.expected_x_norm_l2)},
            {"expected_tx_minus_e1_l2", number(r.expected_tx_minus_e1_l2)}};
}

json to_json(const NaturalSelfadjointReport& r) {
    json times = json::array();
    for (double t : r.times) times.push_back(t);
    return {{"adjoint_gap", number(r.adjoint_gap)},
            {"naturally_selfadjoint", r.naturally_selfadjoint},
            {"times", times},
            {"max_group_norm", number(r.max_group_norm)},
            {"group_isometric", r.group_isometric},
            {"single_metric", r.single_metric},
            {"agreement", r.agreement}};
}

json to_json(const SpectralPackage& p) {
    json proj = json::array();
    for (const auto& m : p.family.projections) proj.push_back(to_json(m));
    return {{"breakpoints", to_json(p.family.breakpoints)},
            {"projections", proj},
            {"W", to_json(p.polar.w)},
            {"R", to_json(p.polar.r)},
            {"rank", p.polar.rank}};
}

json to_json(const SpectralChecks& c) {
    return {{"polar_residual", number(c.polar_residual)},
            {"r_selfadjoint", number(c.r_selfadjoint)},
            {"r_min_eig", number(c.r_min_eig)},
            {"r_squared_residual", number(c.r_squared_residual)},
            {"projection_residual", number(c.projection_residual)},
            {"reconstruct_residual", number(c.reconstruct_residual)},
            {"isometry_residual", number(c.isometry_residual)}};
}

json to_json(const BVVectorFunction& bv) {
    json deltas = json::array();
    for (const auto& d : bv.deltas) deltas.push_back(to_json(d));
    return {{"jumps", to_json(bv.jumps)}, {"deltas", deltas}, {"variation", number(bv.variation)}};
}

json to_json(const WeylHornReport& r) {
    return {{"terms", r.terms},
            {"weyl", {{"lhs", number(r.weyl_lhs)}, {"rhs", number(r.weyl_rhs)}, {"slack", number(r.weyl_slack)}}},
            {"horn", {{"lhs", number(r.horn_lhs)}, {"rhs", number(r.horn_rhs)}, {"slack", number(r.horn_slack)}}}};
}

json to_json(const LalescoLidskiiReport& r) {
    return {{"abs_eig_sum", number(r.abs_eig_sum)},
            {"mu_sum", number(r.mu_sum)},
            {"lalesco_slack", number(r.lalesco_slack)},
            {"eig_sum", {number(r.eig_sum_real), number(r.eig_sum_imag)}},
            {"trace", number(r.trace)},
            {"lidskii_residual", number(r.lidskii_residual)}};
}

json to_json(const DecayEstimate& e) {
    return {{"M", number(e.m)},
            {"mu", number(e.mu)},
            {"source", e.source},
            {"worst_bound_ratio", number(e.worst_bound_ratio)},
            {"grid_points", e.grid_points}};
}

json to_json(const ContractionWindow& w) { return {{"T", number(w.t)}, {"r", number(w.r)}}; }

json to_json(const PoincareReport& r) {
    return {{"mu", number(r.decay.mu)},
            {"M", number(r.decay.m)},
            {"T", number(r.window.t)},
            {"r", number(r.window.r)},
            {"c", number(r.c)},
            {"slack", number(r.slack)},
            {"samples", r.samples},
            {"worst_ratio", number(r.worst_ratio)},
            {"violations", r.violations},
            {"spectral_gap_bound", number(r.spectral_gap_bound)},
            {"max_isometry_gap", number(r.max_isometry_gap)},
            {"decay_bound_ratio", number(r.decay.worst_bound_ratio)},
            {"single_metric", r.single_metric},
            {"decay_integral",
             {{"horizon", number(r.integral.horizon)},
              {"value", number(r.integral.integral)},
              {"finite_at_truncation", r.integral.finite}}},
            {"observed",
             {{"b_norm_ratio", number(r.observed_b_ratio)}, {"b_norm_violations", r.observed_b_violations}}}};
}

json to_json(const RelativeBoundReport& r) {
    return {{"a", number(r.a)},
            {"b", number(r.b)},
            {"c", number(r.c)},
            {"c_tilde", number(r.c_tilde)},
            {"samples", r.samples},
            {"premise_worst", number(r.premise_worst)},
            {"premise_holds", r.premise_holds},
            {"consolidated_worst_ratio", number(r.consolidated_worst_ratio)},
            {"consolidated_holds", r.consolidated_holds}};
}

}  // namespace gkt::io
