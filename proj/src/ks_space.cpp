#include "gkt/ks_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "gkt/errors.hpp"
#include "gkt/kernels.hpp"

namespace gkt {

namespace {

std::vector<double> dyadic_rationals(std::size_t count) {
    std::vector<double> out;
    out.reserve(count);
    std::set<double> seen;
    for (int q = 0; out.size() < count; ++q) {
        const long bound = static_cast<long>(q) << q;  // |p/2^q| <= q
        for (long p = 0; p <= bound && out.size() < count; ++p) {
            for (const long signed_p : {p, -p}) {
                const double x = std::ldexp(static_cast<double>(signed_p), -q);
                if (seen.insert(x).second) {
                    out.push_back(x);
                    if (out.size() == count) break;
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<CubeIndex> cube_enumeration(std::size_t count) {
    if (count == 0) throw InvalidArgument("cube enumeration needs K >= 1");
    std::vector<CubeIndex> out;
    out.reserve(count);
    auto push = [&](int l, int i) {
        if (out.size() < count) out.push_back({l, i});
    };
    for (int d = 2; out.size() < count; ++d) {
        if (d == 2) {
            push(1, 1);
        } else if (d == 3) {
            push(2, 1);
            push(1, 2);
        } else if (d % 2 == 0) {
            for (int l = 1; l <= d - 1; ++l) push(l, d - l);
        } else {
            for (int l = d - 2; l >= 1; --l) push(l, d - l);
            push(d - 1, 1);
        }
    }
    return out;
}

std::vector<Point> enumerate_rationals(int n, std::size_t count) {
    if (n < 1 || n > 3) throw InvalidArgument("rational enumeration supports n = 1, 2, 3");
    if (count == 0) throw InvalidArgument("rational enumeration needs K >= 1");
    if (n == 1) {
        std::vector<Point> out;
        out.reserve(count);
        for (double x : dyadic_rationals(count)) out.push_back({x});
        return out;
    }
    const auto pairs = cube_enumeration(count);
    int max_a = 0, max_b = 0;
    for (const auto& p : pairs) {
        max_a = std::max(max_a, p.level);
        max_b = std::max(max_b, p.rational);
    }
    const auto head = dyadic_rationals(static_cast<std::size_t>(max_a));
    const auto tail = enumerate_rationals(n - 1, static_cast<std::size_t>(max_b));
    std::vector<Point> out;
    out.reserve(count);
    for (const auto& p : pairs) {
        Point x{head[p.level - 1]};
        const auto& rest = tail[p.rational - 1];
        x.insert(x.end(), rest.begin(), rest.end());
        out.push_back(std::move(x));
    }
    return out;
}

CubeEnumeration::CubeEnumeration(int n, std::size_t count) : n_(n) {
    if (count == 0) throw InvalidArgument("cube enumeration needs K >= 1");
    indices_ = cube_enumeration(count);
    int max_i = 0;
    for (const auto& p : indices_) max_i = std::max(max_i, p.rational);
    const auto centres = enumerate_rationals(n, static_cast<std::size_t>(max_i));
    cubes_.reserve(count);
    for (const auto& p : indices_) cubes_.emplace_back(centres[p.rational - 1], std::ldexp(1.0, -p.level));
}

KSConfig KSConfig::dyadic(int n, std::size_t count) {
    std::vector<double> w(count);
    for (std::size_t k = 0; k < count; ++k) w[k] = std::ldexp(1.0, -static_cast<int>(k + 1));
    KSConfig cfg(CubeEnumeration(n, count), std::move(w));
    cfg.dyadic_ = true;
    return cfg;
}

KSConfig::KSConfig(CubeEnumeration enumeration, std::vector<double> weights)
    : enumeration_(std::move(enumeration)), weights_(std::move(weights)) {
    if (weights_.size() != enumeration_.size())
        throw InvalidArgument("KS weights length " + std::to_string(weights_.size()) + " != cube count " +
                              std::to_string(enumeration_.size()));
    double sum = 0.0;
    for (double t : weights_) {
        if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("KS weights must be positive");
        sum += t;
    }
    if (sum > 1.0 + 1e-12) throw InvalidArgument("KS weights must sum to at most 1");
}

std::vector<double> ks_functionals(const KSElement& e, const KSConfig& cfg) {
    const auto& cubes = cfg.enumeration().cubes();
    if (const auto* f = std::get_if<GridFunction>(&e)) {
        if (f->grid().dimension() != cfg.dimension())
            throw InvalidArgument("grid dimension does not match KS configuration");
        return kernels::cube_functionals(*f, cubes);
    }
    const auto& d = std::get<PointMass>(e);
    if (static_cast<int>(d.location.size()) != cfg.dimension())
        throw InvalidArgument("point mass dimension does not match KS configuration");
    return kernels::cube_functionals(d, cubes);
}

namespace {

void check_compatible(const KSElement& f, const KSElement& g) {
    const auto* gf = std::get_if<GridFunction>(&f);
    const auto* gg = std::get_if<GridFunction>(&g);
    if (gf && gg && !gf->grid().same_box(gg->grid())) throw InvalidArgument("KS inner product of functions on different grid boxes");
    auto check_mass = [](const GridFunction* grid_fn, const KSElement& other) {
        if (!grid_fn) return;
        if (const auto* d = std::get_if<PointMass>(&other); d && !grid_fn->grid().contains(d->location))
            throw InvalidArgument("point mass lies outside the grid box");
    };
    check_mass(gf, g);
    check_mass(gg, f);
}

}  // namespace

double ks_inner(const KSElement& f, const KSElement& g, const KSConfig& cfg) {
    check_compatible(f, g);
    const auto a = ks_functionals(f, cfg);
    const auto b = ks_functionals(g, cfg);
    return kernels::weighted_dot(a, b, cfg.weights());
}

double ks_norm(const KSElement& f, const KSConfig& cfg) {
    const auto a = ks_functionals(f, cfg);
    return std::sqrt(kernels::weighted_dot(a, a, cfg.weights()));
}

EmbeddingReport embedding_report(const KSElement& f, const KSConfig& cfg) {
    EmbeddingReport r;
    r.ks = ks_norm(f, cfg);
    if (const auto* g = std::get_if<GridFunction>(&f)) {
        r.l1 = lp_norm(*g, 1.0);
        r.l2 = lp_norm(*g, 2.0);
        r.linf = lp_norm(*g, kInfinity);
        r.alexiewicz = alexiewicz_norm(*g);
    } else {
        // A point mass has total variation |w|, no L^2 or L^inf density, and every
        // half-line or origin cube containing it carries mass |w|.
        const double w = std::abs(std::get<PointMass>(f).weight);
        r.l1 = w;
        r.l2 = kInfinity;
        r.linf = kInfinity;
        r.alexiewicz = w;
    }
    auto within = [&](double bound) { return r.ks <= bound + 1e-9 * std::max(1.0, bound); };
    r.ks_le_l1 = within(r.l1);
    r.ks_le_l2 = within(r.l2);
    r.ks_le_linf = within(r.linf);
    r.ks_le_2alexiewicz = within(2.0 * r.alexiewicz);
    return r;
}

double hermite_function(int k, double x) {
    if (k < 0) throw InvalidArgument("Hermite index must be >= 0");
    const double h0 = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
    if (k == 0) return h0;
    double prev = h0;
    double cur = std::sqrt(2.0) * x * h0;
    for (int j = 1; j < k; ++j) {
        const double next = std::sqrt(2.0 / (j + 1)) * x * cur - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

std::vector<std::vector<int>> hermite_multi_indices(int n, std::size_t count) {
    std::vector<std::vector<int>> out;
    for (int degree = 0; out.size() < count; ++degree) {
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        // Lexicographic walk over tuples with the given total degree, first entry largest first.
        auto rec = [&](auto&& self, int axis, int remaining) -> void {
            if (out.size() >= count) return;
            if (axis == n - 1) {
                idx[axis] = remaining;
                out.push_back(idx);
                return;
            }
            for (int v = remaining; v >= 0; --v) {
                idx[axis] = v;
                self(self, axis + 1, remaining - v);
            }
        };
        rec(rec, 0, degree);
    }
    return out;
}

}  // namespace

HermiteKSBasis build_hermite_ks_basis(std::size_t count, const Grid& grid, std::shared_ptr<const KSConfig> cfg,
                                      std::size_t cap) {
    if (!cfg) throw InvalidArgument("missing KS configuration");
    if (count == 0) throw InvalidArgument("Hermite basis needs N >= 1");
    if (count > cap) throw InvalidArgument("Hermite basis size exceeds stability cap " + std::to_string(cap));
    if (grid.points_per_axis() < 8 * count)
        throw InvalidArgument("grid too coarse for Hermite basis: need m >= 8N");
    if (grid.dimension() != cfg->dimension()) throw InvalidArgument("grid dimension does not match KS configuration");

    HermiteKSBasis basis;
    basis.count = count;
    basis.config = cfg;
    const auto multi = hermite_multi_indices(grid.dimension(), count);
    for (const auto& idx : multi) {
        basis.sources.push_back(GridFunction::sample(grid, [&](const Point& x) {
            double v = 1.0;
            for (std::size_t a = 0; a < x.size(); ++a) v *= hermite_function(idx[a], x[a]);
            return v;
        }));
    }

    const auto& weights = cfg->weights();
    const auto K = static_cast<Eigen::Index>(weights.size());
    const auto N = static_cast<Eigen::Index>(count);
    Matrix scaled(K, N);
    for (Eigen::Index j = 0; j < N; ++j) {
        const auto fk = kernels::cube_functionals(basis.sources[j], cfg->enumeration().cubes());
        for (Eigen::Index k = 0; k < K; ++k) scaled(k, j) = std::sqrt(weights[k]) * fk[k];
    }

    Matrix q = Matrix::Zero(K, N);
    Matrix coef = Matrix::Zero(N, N);
    for (Eigen::Index j = 0; j < N; ++j) {
        Eigen::JacobiSVD<Matrix> svd(scaled.leftCols(j + 1));
        const auto& sv = svd.singularValues();
        const double smin = sv(j);
        const double gram_cond = smin > 0.0 ? (sv(0) / smin) * (sv(0) / smin) : kInfinity;
        if (gram_cond > 1e12)
            throw DegeneracyError("KS Gram matrix of Hermite functions loses rank at index " + std::to_string(j + 1) +
                                      " (condition " + std::to_string(gram_cond) + ")",
                                  static_cast<std::size_t>(j));
        Vector v = scaled.col(j);
        Vector c = Vector::Unit(N, j);
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index i = 0; i < j; ++i) {
                const double r = q.col(i).dot(v);
                v -= r * q.col(i);
                c -= r * coef.col(i);
            }
        }
        const double nrm = v.norm();
        q.col(j) = v / nrm;
        coef.col(j) = c / nrm;
    }
    basis.coefficients = coef;

    const auto points = grid.size();
    for (Eigen::Index j = 0; j < N; ++j) {
        std::vector<double> values(points, 0.0);
        for (Eigen::Index i = 0; i <= j; ++i) {
            const double cij = coef(i, j);
            const auto& src = basis.sources[i].values();
            for (std::size_t p = 0; p < points; ++p) values[p] += cij * src[p];
        }
        basis.functions.emplace_back(grid, std::move(values));
    }
    return basis;
}

double gross_steadman_weight(std::size_t n) {
    if (n == 0) throw InvalidArgument("Gross-Steadman weights are indexed from 1");
    const double nn = static_cast<double>(n);
    return 6.0 / (std::numbers::pi * std::numbers::pi * nn * nn);
}

double gross_steadman_weight_mass(std::size_t count) {
    // Summed smallest-first to keep the partial sum accurate.
    double s = 0.0;
    for (std::size_t n = count; n >= 1; --n) s += gross_steadman_weight(n);
    return s;
}

KS1Inner ks1_inner(const KSElement& u, const KSElement& v, const HermiteKSBasis& basis) {
    const KSConfig& cfg = *basis.config;
    const auto& w = cfg.weights();
    const auto fu = ks_functionals(u, cfg);
    const auto fv = ks_functionals(v, cfg);
    KS1Inner out;
    std::vector<double> ru(fu), rv(fv);
    for (std::size_t n = 0; n < basis.count; ++n) {
        const auto fphi = ks_functionals(basis.functions[n], cfg);
        const double a = kernels::weighted_dot(fu, fphi, w);
        const double b = kernels::weighted_dot(fphi, fv, w);
        out.value += a * b / gross_steadman_weight(n + 1);
        for (std::size_t k = 0; k < w.size(); ++k) {
            ru[k] -= a * fphi[k];
            rv[k] -= b * fphi[k];
        }
    }
    auto outside_span = [&](const std::vector<double>& residual, const std::vector<double>& full) {
        const double r = std::sqrt(kernels::weighted_dot(residual, residual, w));
        const double f = std::sqrt(kernels::weighted_dot(full, full, w));
        return r > 1e-8 * std::max(f, 1e-300);
    };
    out.projected = outside_span(ru, fu) || outside_span(rv, fv);
    return out;
}

}  // namespace gkt
