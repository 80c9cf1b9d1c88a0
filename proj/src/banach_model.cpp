#include "gkt/banach_model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gkt/errors.hpp"
#include "gkt/random.hpp"

namespace gkt {

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

double vector_lp_norm(const Vector& x, double p) {
    if (std::isinf(p)) return x.cwiseAbs().maxCoeff();
    if (p == 1.0) return x.cwiseAbs().sum();
    if (p == 2.0) return x.norm();
    const double scale = x.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0.0;
    double s = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x[i]) / scale, p);
    return scale * std::pow(s, 1.0 / p);
}

}  // namespace

BanachModel::BanachModel(int dimension, NormKind kind, double p) : n_(dimension), kind_(kind), p_(p) {
    if (n_ < 1) throw InvalidArgument("Banach model dimension must be >= 1");
    if (kind_ == NormKind::Lp) {
        if (!(p_ > 1.0) || !std::isfinite(p_)) throw InvalidArgument("l^p model needs 1 < p < infinity");
    } else {
        p_ = kind_ == NormKind::L1 ? 1.0 : kind_ == NormKind::L2 ? 2.0 : std::numeric_limits<double>::infinity();
    }
}

double BanachModel::exponent() const noexcept { return p_; }

double BanachModel::dual_exponent() const noexcept {
    switch (kind_) {
        case NormKind::L1: return std::numeric_limits<double>::infinity();
        case NormKind::Sup: return 1.0;
        case NormKind::L2: return 2.0;
        case NormKind::Lp: return p_ / (p_ - 1.0);
    }
    return 2.0;
}

std::string BanachModel::name() const {
    switch (kind_) {
        case NormKind::L1: return "l1";
        case NormKind::L2: return "l2";
        case NormKind::Sup: return "sup";
        case NormKind::Lp: {
            std::ostringstream os;
            os << "lp:" << p_;
            return os.str();
        }
    }
    return "?";
}

double BanachModel::norm(const Vector& x) const {
    if (x.size() != n_) throw InvalidArgument("vector length does not match model dimension");
    return vector_lp_norm(x, p_);
}

double BanachModel::dual_norm(const Vector& f) const {
    if (f.size() != n_) throw InvalidArgument("functional length does not match model dimension");
    return vector_lp_norm(f, dual_exponent());
}

Vector BanachModel::duality_functional(const Vector& u) const {
    const double nu = norm(u);
    Vector f = Vector::Zero(n_);
    if (nu == 0.0) return f;
    switch (kind_) {
        case NormKind::L2: f = u; break;
        case NormKind::L1:
            for (int i = 0; i < n_; ++i) f[i] = nu * sgn(u[i]);
            break;
        case NormKind::Sup: {
            Eigen::Index j = 0;
            u.cwiseAbs().maxCoeff(&j);  // first maximal index
            f[j] = nu * sgn(u[j]);
            break;
        }
        case NormKind::Lp:
            for (int i = 0; i < n_; ++i) f[i] = std::pow(nu, 2.0 - p_) * std::pow(std::abs(u[i]), p_ - 1.0) * sgn(u[i]);
            break;
    }
    return f;
}

Matrix BanachModel::dense_family(std::uint64_t seed) const {
    const int m = 4 * n_;
    Matrix family = Matrix::Zero(n_, m);
    for (int i = 0; i < n_; ++i) family(i, i) = 1.0;
    Rng rng(seed);
    for (int j = n_; j < m; ++j) {
        Vector v = rng.normal_vector(n_);
        while (v.norm() == 0.0) v = rng.normal_vector(n_);
        family.col(j) = v / norm(v);
    }
    return family;
}

BanachModel parse_model(const std::string& spec, int n) {
    if (spec == "l1") return BanachModel::l1(n);
    if (spec == "l2") return BanachModel::l2(n);
    if (spec == "sup") return BanachModel::sup(n);
    if (spec.rfind("lp:", 0) == 0) {
        try {
            return BanachModel::lp(n, std::stod(spec.substr(3)));
        } catch (const std::logic_error&) {
        }
    }
    throw InvalidArgument("unknown model '" + spec + "' (expected l1, l2, sup or lp:<p>)");
}

}  // namespace gkt
