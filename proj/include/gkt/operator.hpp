#pragma once

#include <memory>

#include "gkt/banach_model.hpp"
#include "gkt/embedding.hpp"
#include "gkt/linalg.hpp"

namespace gkt {

/// A matrix acting on the Banach model, carrying the triple that defines its adjoint.
/// The triple is shared and immutable.
class OperatorOnB {
public:
    OperatorOnB(Matrix a, BanachModel model, std::shared_ptr<const GKTriple> triple);

    /// Plain matrix in the Hilbert configuration: l2 model, G1 = G2 = I.
    static OperatorOnB hilbert(Matrix a);

    const Matrix& matrix() const noexcept { return a_; }
    const BanachModel& model() const noexcept { return model_; }
    const GKTriple& triple() const noexcept { return *triple_; }
    const std::shared_ptr<const GKTriple>& triple_ptr() const noexcept { return triple_; }
    int dimension() const noexcept { return static_cast<int>(a_.rows()); }

    /// Same model and triple, different matrix.
    OperatorOnB with_matrix(Matrix a) const { return {std::move(a), model_, triple_}; }

private:
    Matrix a_;
    BanachModel model_;
    std::shared_ptr<const GKTriple> triple_;
};

}  // namespace gkt
