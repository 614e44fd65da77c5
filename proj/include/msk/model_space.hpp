#pragma once

#include <Eigen/Dense>
#include <vector>

#include "msk/rational_matrix.hpp"

namespace msk {

/// One linear condition sum_j w_{j,t} f_j^(t)(point) = 0 on H^2 vectors f.
struct InterpolationCondition {
    Complex point;                      // in the open disk
    struct Term {
        int component;                  // j
        int deriv_order;                // t
        Complex weight;                 // w_{j,t}
    };
    std::vector<Term> terms;
};

using InterpolationConditions = std::vector<InterpolationCondition>;

/// Membership conditions for ker H*_{flip(Phi)}: f is in the kernel iff
/// Phi~ f is analytic in the disk; one condition per principal-part
/// coefficient of each row at each disk pole of Phi~.
InterpolationConditions hankel_kernel_conditions(const RationalMatrix& phi);

/// Finite-dimensional subspace of H^2_n spanned by rational vectors.
class ModelSpace {
public:
    static ModelSpace from_conditions(const InterpolationConditions& conds, int ambient_dim);
    static ModelSpace from_vectors(int ambient_dim, std::vector<RationalMatrix> vectors);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(onb_.size()); }
    /// Orthonormal basis (exact rational linear combinations).
    const std::vector<RationalMatrix>& basis() const { return onb_; }
    const MatrixXcd& gram() const { return gram_; }
    double gram_condition() const { return gram_condition_; }

    /// span-membership residual of f (H^2 norm of the projection defect)
    double span_residual(const RationalMatrix& f) const;
    /// checks (f - f(0))/z stays in the span for every basis vector
    bool backward_shift_invariant(double tolerance) const;

private:
    int ambient_dim_ = 0;
    std::vector<RationalMatrix> onb_;
    MatrixXcd gram_;
    double gram_condition_ = 1.0;
};

/// Constructive Beurling-Lax-Halmos step: from K = H(Theta) recover the
/// square two-sided inner Theta, normalized by the positive square root
/// at the probe point.
RationalMatrix model_space_to_inner(const ModelSpace& K, Complex probe);

}  // namespace msk
