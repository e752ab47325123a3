#pragma once

#include <span>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

/// Dense real symmetric matrix, lower triangle stored once (packed by rows).
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int n);

    int order() const { return n_; }

    double operator()(int i, int j) const { return packed_[index(i, j)]; }
    void set(int i, int j, double value) { packed_[index(i, j)] = value; }
    void add(int i, int j, double value) { packed_[index(i, j)] += value; }

    /// Maximum absolute row sum.
    double norm_inf() const;
    double trace() const;
    std::vector<double> multiply(std::span<const double> x) const;

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    static long index(int i, int j) {
        return i >= j ? static_cast<long>(i) * (i + 1) / 2 + j : static_cast<long>(j) * (j + 1) / 2 + i;
    }

    int n_;
    std::vector<double> packed_;
};

struct Spectrum {
    /// Eigenvalues in ascending order.
    std::vector<double> values;
    /// max ||M v - θ v||_2 / max(1, ||M||_inf) over the checked eigenpairs (unit v).
    double max_residual = 0.0;
};

/// Largest residual a spectrum may carry and still be returned.
inline constexpr double kResidualTolerance = 1e-8;
/// Sweep budget of the QL iteration, per eigenvalue.
inline constexpr int kQlSweepsPerEigenvalue = 60;

/**
 * All eigenvalues of a symmetric matrix.
 *
 * Householder reduction to tridiagonal form, then implicitly shifted QL. The
 * smallest, second-smallest, second-largest and largest eigenvalues are
 * checked by recovering their eigenvectors (inverse iteration on the
 * tridiagonal matrix, then back-transformation) and measuring the residual
 * against the original matrix.
 *
 * Throws ConvergenceError if QL exceeds its budget or a residual exceeds
 * kResidualTolerance.
 */
Spectrum eigenvalues(const SymmetricMatrix& m);

SymmetricMatrix laplacian(const Graph& g);
SymmetricMatrix adjacency(const Graph& g);
SymmetricMatrix signless_laplacian(const Graph& g);

// The following require n >= 2 and throw PreconditionError otherwise.

/// Algebraic connectivity: second-smallest Laplacian eigenvalue.
double mu2(const Graph& g);
/// Second-largest adjacency eigenvalue.
double lambda2(const Graph& g);
/// max(|λ_2|, |λ_n|) of the adjacency matrix.
double lambda_abs(const Graph& g);
/// Second-largest signless-Laplacian eigenvalue.
double q2(const Graph& g);

/// Connected d-regular graph whose adjacency eigenvalues other than ±d lie in
/// [-2√(d-1), 2√(d-1)] (1e-8 slack). Throws PreconditionError naming the
/// failed precondition (regularity or connectivity).
bool is_ramanujan(const Graph& g);

}  // namespace rigidity
