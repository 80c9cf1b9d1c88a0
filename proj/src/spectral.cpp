#include "gkt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

#include "gkt/adjoint.hpp"
#include "gkt/errors.hpp"
#include "gkt/metric.hpp"
#include "gkt/random.hpp"

namespace gkt {

PolarDecomposition polar_decompose(const OperatorOnB& op) {
    const auto& t = op.triple();
    const Matrix& a = op.matrix();
    const auto pe = metric::pencil_eigen(a.transpose() * t.g2() * a, t.g1());
    const Eigen::Index n = pe.values.size();
    Vector s(n);
    for (Eigen::Index i = 0; i < n; ++i) s[i] = std::sqrt(std::max(pe.values[i], 0.0));
    const double tol = 1e-12 * s.maxCoeff();
    Vector s_plus = Vector::Zero(n);
    int rank = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (s[i] > tol) {
            s_plus[i] = 1.0 / s[i];
            ++rank;
        }
    }
    const Matrix left = pe.vectors.transpose() * t.g1();
    PolarDecomposition pd;
    pd.r = pe.vectors * s.asDiagonal() * left;
    pd.w = a * (pe.vectors * s_plus.asDiagonal() * left);
    pd.rank = rank;
    return pd;
}

Matrix SpectralFamily::at(double lambda) const {
    if (projections.empty()) return {};
    const Eigen::Index n = projections.front().rows();
    Matrix e = Matrix::Zero(n, n);
    for (std::size_t j = 0; j < projections.size(); ++j)
        if (breakpoints[static_cast<Eigen::Index>(j)] <= lambda) e += projections[j];
    return e;
}

SpectralFamily spectral_family(const Matrix& r, const Matrix& g) {
    const auto eig = metric::eigen(r, g);
    const Eigen::Index n = eig.values.size();
    const double tol = 1e-8 * eig.values.cwiseAbs().maxCoeff();
    SpectralFamily sf;
    std::vector<double> points;
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= n; ++i) {
        if (i < n && eig.values[i] - eig.values[i - 1] <= tol) continue;
        const Eigen::Index len = i - start;
        const Matrix v = eig.vectors.middleCols(start, len);
        sf.projections.push_back(v * v.transpose() * g);
        points.push_back(eig.values.segment(start, len).mean());
        start = i;
    }
    sf.breakpoints = Eigen::Map<const Vector>(points.data(), static_cast<Eigen::Index>(points.size()));
    return sf;
}

namespace {

const Matrix& variation_metric(const GKTriple& triple, VariationNorm norm) {
    return norm == VariationNorm::H2 ? triple.g2() : triple.g1();
}

}  // namespace

BVVectorFunction bv_vector_function(const PolarDecomposition& pd, const SpectralFamily& sf, const Vector& x,
                                    const GKTriple& triple, VariationNorm norm) {
    if (!x.allFinite()) throw InvalidArgument("vector has non-finite entries");
    const Matrix& g = variation_metric(triple, norm);
    BVVectorFunction bv;
    bv.jumps = sf.breakpoints;
    for (const auto& p : sf.projections) {
        Vector d = pd.w * (p * x);
        bv.variation += metric::norm(d, g);
        bv.deltas.push_back(std::move(d));
    }
    return bv;
}

double family_variation(const SpectralFamily& sf, const Vector& x, const GKTriple& triple, VariationNorm norm) {
    const Matrix& g = variation_metric(triple, norm);
    double v = 0.0;
    for (const auto& p : sf.projections) v += metric::norm(p * x, g);
    return v;
}

SpectralPackage spectral_package(const OperatorOnB& op) {
    SpectralPackage pkg;
    pkg.polar = polar_decompose(op);
    pkg.family = spectral_family(pkg.polar.r, op.triple().g1());
    return pkg;
}

Vector reconstruct(const SpectralPackage& pkg, const Vector& x) {
    Vector acc = Vector::Zero(x.size());
    for (std::size_t j = 0; j < pkg.family.size(); ++j)
        acc += pkg.family.breakpoints[static_cast<Eigen::Index>(j)] * (pkg.family.projections[j] * x);
    return pkg.polar.w * acc;
}

Vector reconstruct(const OperatorOnB& op, const Vector& x) { return reconstruct(spectral_package(op), x); }

ScalarFunction::ScalarFunction(std::string name, std::function<double(double)> fn)
    : name_(std::move(name)), fn_(std::move(fn)) {}

ScalarFunction ScalarFunction::table(std::vector<double> values) {
    ScalarFunction f("table", nullptr);
    f.table_ = std::move(values);
    f.tabulated_ = true;
    return f;
}

namespace {

std::vector<double> parse_numbers(const std::string& list) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("not a number: '" + item + "'");
        }
        if (used != item.size()) throw InvalidArgument("not a number: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw InvalidArgument("empty number list");
    return out;
}

}  // namespace

ScalarFunction ScalarFunction::parse(const std::string& spec) {
    if (spec == "identity" || spec == "id") return {"identity", [](double l) { return l; }};
    if (spec == "square") return {"square", [](double l) { return l * l; }};
    if (spec == "one") return {"one", [](double) { return 1.0; }};
    if (spec == "exp") return {"exp", [](double l) { return std::exp(l); }};
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "step" && colon != std::string::npos) {
        const auto a = parse_numbers(tail);
        if (a.size() != 1) throw InvalidArgument("step takes one threshold");
        const double at = a[0];
        return {spec, [at](double l) { return l >= at ? 1.0 : 0.0; }};
    }
    if (head == "poly" && colon != std::string::npos) {
        auto c = parse_numbers(tail);
        return {spec, [c](double l) {
                    double v = 0.0;
                    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * l + *it;
                    return v;
                }};
    }
    if (head == "table" && colon != std::string::npos) return table(parse_numbers(tail));
    throw InvalidArgument("unknown function '" + spec + "'");
}

double ScalarFunction::operator()(std::size_t index, double lambda) const {
    if (tabulated_) {
        if (index >= table_.size()) throw InvalidArgument("function table is shorter than the breakpoint list");
        return table_[index];
    }
    return fn_(lambda);
}

std::optional<std::size_t> ScalarFunction::table_size() const {
    if (!tabulated_) return std::nullopt;
    return table_.size();
}

namespace {

std::vector<double> evaluate_at_breakpoints(const SpectralFamily& sf, const ScalarFunction& g) {
    if (auto size = g.table_size(); size && *size != sf.size())
        throw InvalidArgument("function table has " + std::to_string(*size) + " values for " +
                              std::to_string(sf.size()) + " breakpoints");
    std::vector<double> values(sf.size());
    for (std::size_t j = 0; j < sf.size(); ++j) {
        const double l = sf.breakpoints[static_cast<Eigen::Index>(j)];
        values[j] = g(j, l);
        if (!std::isfinite(values[j])) {
            std::ostringstream os;
            os.precision(17);
            os << g.name() << " is not finite at breakpoint " << l;
            throw DomainError(os.str(), l);
        }
    }
    return values;
}

}  // namespace

Vector functional_calculus(const SpectralPackage& pkg, const ScalarFunction& g, const Vector& x) {
    const auto values = evaluate_at_breakpoints(pkg.family, g);
    Vector acc = Vector::Zero(x.size());
    for (std::size_t j = 0; j < values.size(); ++j) acc += values[j] * (pkg.family.projections[j] * x);
    return pkg.polar.w * acc;
}

Matrix spectral_matrix(const SpectralFamily& sf, const ScalarFunction& g) {
    const auto values = evaluate_at_breakpoints(sf, g);
    if (sf.projections.empty()) return {};
    const Eigen::Index n = sf.projections.front().rows();
    Matrix out = Matrix::Zero(n, n);
    for (std::size_t j = 0; j < values.size(); ++j) out += values[j] * sf.projections[j];
    return out;
}

namespace {

int validate_blocks(const BlockOperator& blocks, const Vector& x) {
    const std::size_t k = blocks.size();
    if (k == 0) throw InvalidArgument("block operator is empty");
    const auto& first = blocks.front().front();
    for (const auto& row : blocks) {
        if (row.size() != k) throw InvalidArgument("block operator is not a square block layout");
        for (const auto& b : row) {
            if (!(b.model() == first.model()) || b.dimension() != first.dimension() ||
                b.triple().g1() != first.triple().g1() || b.triple().g2() != first.triple().g2())
                throw InvalidArgument("blocks must share one model and one triple");
        }
    }
    const int d = first.dimension();
    if (x.size() != static_cast<Eigen::Index>(k) * d)
        throw InvalidArgument("stacked vector length does not match the block layout");
    return d;
}

}  // namespace

Vector block_spectral(const BlockOperator& blocks, const Vector& x) {
    const int d = validate_blocks(blocks, x);
    const int k = static_cast<int>(blocks.size());
    std::vector<Vector> parts(static_cast<std::size_t>(k * k));
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
    for (int idx = 0; idx < k * k; ++idx) {
        try {
            const int i = idx / k, j = idx % k;
            parts[static_cast<std::size_t>(idx)] = reconstruct(blocks[i][j], x.segment(j * d, d));
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    Vector y = Vector::Zero(x.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) y.segment(i * d, d) += parts[static_cast<std::size_t>(i * k + j)];
    return y;
}

Vector block_spectral_serial(const BlockOperator& blocks, const Vector& x) {
    const int d = validate_blocks(blocks, x);
    const int k = static_cast<int>(blocks.size());
    Vector y = Vector::Zero(x.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) y.segment(i * d, d) += reconstruct(blocks[i][j], x.segment(j * d, d));
    return y;
}

Matrix assemble_blocks(const BlockOperator& blocks) {
    const Eigen::Index k = static_cast<Eigen::Index>(blocks.size());
    if (k == 0) return {};
    const Eigen::Index d = blocks.front().front().dimension();
    Matrix out(k * d, k * d);
    for (Eigen::Index i = 0; i < k; ++i) {
        if (static_cast<Eigen::Index>(blocks[i].size()) != k) throw InvalidArgument("block operator is not square");
        for (Eigen::Index j = 0; j < k; ++j) out.block(i * d, j * d, d, d) = blocks[i][j].matrix();
    }
    return out;
}

SpectralChecks spectral_checks(const OperatorOnB& op, const SpectralPackage& pkg, std::uint64_t seed, int samples) {
    const auto& t = op.triple();
    const Matrix& a = op.matrix();
    const Eigen::Index n = a.rows();
    const double anorm = a.norm();
    SpectralChecks c;
    const auto& pd = pkg.polar;
    c.polar_residual = anorm > 0.0 ? (a - pd.w * pd.r).norm() / anorm : (pd.w * pd.r).norm();
    c.r_selfadjoint = metric::selfadjoint_residual(pd.r, t.g1());
    c.r_min_eig = metric::eigen(pd.r, t.g1()).values.minCoeff();
    const Matrix ata = banach_adjoint(op).matrix() * a;
    const double ata_norm = ata.norm();
    c.r_squared_residual = ata_norm > 0.0 ? (pd.r * pd.r - ata).norm() / ata_norm : (pd.r * pd.r).norm();

    const auto& ps = pkg.family.projections;
    Matrix sum = Matrix::Zero(n, n);
    for (std::size_t j = 0; j < ps.size(); ++j) {
        sum += ps[j];
        for (std::size_t k = 0; k < ps.size(); ++k) {
            const Matrix expected = j == k ? ps[j] : Matrix::Zero(n, n);
            c.projection_residual = std::max(c.projection_residual, (ps[j] * ps[k] - expected).cwiseAbs().maxCoeff());
        }
    }
    c.projection_residual = std::max(c.projection_residual, (sum - Matrix::Identity(n, n)).cwiseAbs().maxCoeff());

    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        const Vector x = rng.normal_vector(n);
        const double scale = anorm * x.norm();
        const double err = (reconstruct(pkg, x) - a * x).norm();
        c.reconstruct_residual = std::max(c.reconstruct_residual, scale > 0.0 ? err / scale : err);
        const Vector z = pd.r * rng.normal_vector(n);
        const double z1 = t.norm1(z);
        if (z1 > 0.0) c.isometry_residual = std::max(c.isometry_residual, std::abs(t.norm2(pd.w * z) - z1) / z1);
    }
    return c;
}

}  // namespace gkt
