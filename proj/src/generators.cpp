#include "gkt/generators.hpp"

#include <cmath>
#include <sstream>

#include "gkt/adjoint.hpp"
#include "gkt/errors.hpp"
#include "gkt/random.hpp"

namespace gkt::gen {

namespace {

std::vector<double> numbers(const std::string& list, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
            out.push_back(std::stod(item, &used));
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || !std::isfinite(out.back()))
            throw InvalidArgument(what + ": cannot parse '" + item + "'");
    }
    if (out.empty()) throw InvalidArgument(what + ": empty argument list");
    return out;
}

std::pair<std::string, std::string> split_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) return {spec, ""};
    return {spec.substr(0, colon), spec.substr(colon + 1)};
}

int positive_int(const std::string& s, const std::string& what) {
    const auto v = numbers(s, what);
    if (v.size() != 1 || v[0] < 1 || v[0] != std::floor(v[0]) || v[0] > 1e6)
        throw InvalidArgument(what + " must be a positive integer");
    return static_cast<int>(v[0]);
}

}  // namespace

BanachModel model_kind(int kind, int n) {
    switch (kind) {
        case 0: return BanachModel::l1(n);
        case 1: return BanachModel::l2(n);
        case 2: return BanachModel::sup(n);
        case 3: return BanachModel::lp(n, 3.0);
        default: throw InvalidArgument("model kind must be 0..3");
    }
}

OperatorOnB random_operator(std::uint64_t seed, int kind, int n_min, int n_max) {
    if (n_min < 1 || n_max < n_min) throw InvalidArgument("bad dimension range");
    Rng rng(derive_seed(seed, 0));
    const int n = n_min + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n_max - n_min + 1));
    if (kind < 0) kind = static_cast<int>(rng.next() % kModelKinds);
    BanachModel model = model_kind(kind, n);
    auto triple = std::make_shared<const GKTriple>(GKTriple::random(model, derive_seed(seed, 1)));
    Matrix a = rng.normal_matrix(n, n) / std::sqrt(static_cast<double>(n));
    return OperatorOnB(std::move(a), std::move(model), std::move(triple));
}

OperatorOnB random_g2_selfadjoint_l1(std::uint64_t seed, int n) {
    BanachModel model = BanachModel::l1(n);
    GKTriple::Options o;
    o.seed = derive_seed(seed, 1);
    auto triple = std::make_shared<const GKTriple>(GKTriple::build(model, o));
    Rng rng(derive_seed(seed, 0));
    const Matrix s = rng.normal_matrix(n, n);
    const Matrix sym = 0.5 * (s + s.transpose());
    Matrix a = triple->g2().llt().solve(sym);
    return OperatorOnB(std::move(a), std::move(model), std::move(triple));
}

Matrix random_stable_matrix(std::uint64_t seed, int n) {
    Rng rng(seed);
    Matrix a = rng.normal_matrix(n, n) / std::sqrt(static_cast<double>(n));
    const double abscissa = Eigen::EigenSolver<Matrix>(a, false).eigenvalues().real().maxCoeff();
    a -= (abscissa + 0.5) * Matrix::Identity(n, n);
    return a;
}

Matrix jordan_block(int n) {
    if (n < 1) throw InvalidArgument("Jordan block size must be >= 1");
    Matrix j = Matrix::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) j(i, i + 1) = 1.0;
    return j;
}

std::shared_ptr<const GKTriple> default_triple(const BanachModel& model) {
    if (model.kind() == NormKind::L2) return std::make_shared<const GKTriple>(GKTriple::hilbert(model.dimension()));
    return std::make_shared<const GKTriple>(GKTriple::build(model));
}

OperatorOnB builtin_operator(const std::string& spec, int n, const std::string& model_name) {
    const auto [head, tail] = split_spec(spec);
    Matrix a;
    if (head == "random") {
        const std::uint64_t seed = tail.empty() ? 1 : static_cast<std::uint64_t>(positive_int(tail, "random seed"));
        Rng rng(derive_seed(seed, 0));
        a = rng.normal_matrix(n, n) / std::sqrt(static_cast<double>(n));
    } else if (head == "jordan") {
        a = jordan_block(tail.empty() ? n : positive_int(tail, "jordan size"));
    } else if (head == "diag") {
        const auto d = numbers(tail, "diag");
        a = Eigen::Map<const Vector>(d.data(), static_cast<Eigen::Index>(d.size())).asDiagonal();
    } else if (head == "shift_l1") {
        a = ell1_shift_operator(n);
    } else {
        throw InvalidArgument("unknown operator builtin '" + spec + "'");
    }
    BanachModel model = parse_model(model_name, static_cast<int>(a.rows()));
    auto triple = default_triple(model);
    return OperatorOnB(std::move(a), std::move(model), std::move(triple));
}

KSElement builtin_element(const std::string& spec, const Grid& grid) {
    const auto [head, tail] = split_spec(spec);
    const int n = grid.dimension();
    if (head == "gaussian") {
        return GridFunction::sample(grid, [](const Point& x) {
            double r2 = 0.0;
            for (double v : x) r2 += v * v;
            return std::exp(-0.5 * r2);
        });
    }
    if (head == "indicator") {
        const auto ab = numbers(tail, "indicator");
        if (ab.size() != 2 || !(ab[0] < ab[1])) throw InvalidArgument("indicator needs a < b");
        return GridFunction::sample(grid, [a = ab[0], b = ab[1]](const Point& x) {
            for (double v : x)
                if (v < a || v > b) return 0.0;
            return 1.0;
        });
    }
    if (head == "chirp") {
        return GridFunction::sample(grid, [](const Point& x) {
            double p = 1.0;
            for (double v : x) p *= 2.0 * v * std::cos(v * v);
            return p;
        });
    }
    if (head == "dirac") {
        auto y = numbers(tail, "dirac");
        if (y.size() == 1) y.assign(static_cast<std::size_t>(n), y[0]);
        if (static_cast<int>(y.size()) != n) throw InvalidArgument("dirac location has the wrong dimension");
        if (!grid.contains(y)) throw InvalidArgument("dirac location lies outside the grid box");
        return PointMass{y, 1.0};
    }
    if (head == "hermite") {
        const auto k = numbers(tail, "hermite");
        if (k.size() != 1 || k[0] < 0 || k[0] != std::floor(k[0]) || k[0] > 200)
            throw InvalidArgument("hermite index must be a non-negative integer");
        const int order = static_cast<int>(k[0]);
        return GridFunction::sample(grid, [order](const Point& x) {
            double p = hermite_function(order, x[0]);
            for (std::size_t i = 1; i < x.size(); ++i) p *= hermite_function(0, x[i]);
            return p;
        });
    }
    throw InvalidArgument("unknown function builtin '" + spec + "'");
}

}  // namespace gkt::gen
