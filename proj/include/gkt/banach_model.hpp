#pragma once

#include <cstdint>
#include <string>

#include "gkt/linalg.hpp"

namespace gkt {

enum class NormKind { L1, L2, Lp, Sup };

/// Finite-dimensional Banach space R^n with an l^1, l^2, l^p or sup norm, its dual norm,
/// the closed-form duality map, and a dense family of unit vectors.
class BanachModel {
public:
    BanachModel(int dimension, NormKind kind, double p = 2.0);

    static BanachModel l1(int n) { return {n, NormKind::L1}; }
    static BanachModel l2(int n) { return {n, NormKind::L2}; }
    static BanachModel lp(int n, double p) { return {n, NormKind::Lp, p}; }
    static BanachModel sup(int n) { return {n, NormKind::Sup}; }

    int dimension() const noexcept { return n_; }
    NormKind kind() const noexcept { return kind_; }
    /// Exponent of the norm (1, 2, p or infinity).
    double exponent() const noexcept;
    /// Conjugate exponent q with 1/p + 1/q = 1.
    double dual_exponent() const noexcept;
    std::string name() const;

    double norm(const Vector& x) const;
    double dual_norm(const Vector& f) const;

    /// f_u with <u, f_u> = ||u||^2 and ||f_u||_* = ||u||. Zero for u = 0.
    /// sup-norm ties go to the smallest maximal index.
    Vector duality_functional(const Vector& u) const;

    /// M = 4n unit vectors: the n coordinate directions followed by 3n seeded random
    /// directions normalised in this norm. Columns of the result.
    Matrix dense_family(std::uint64_t seed) const;

    bool operator==(const BanachModel& other) const noexcept {
        return n_ == other.n_ && kind_ == other.kind_ && (kind_ != NormKind::Lp || p_ == other.p_);
    }

private:
    int n_;
    NormKind kind_;
    double p_;
};

/// Parses "l1", "l2", "sup", "lp:<p>".
BanachModel parse_model(const std::string& spec, int n);

}  // namespace gkt
