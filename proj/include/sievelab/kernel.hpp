#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace sievelab {

/// Point on the flat interface patch; only the first dim() coordinates are used.
using GPoint = std::array<double, 2>;

/// Axis-aligned box describing the interface patch in R^{n-1} (n = 2 or 3).
struct GammaExtent {
    int dim = 1;
    std::array<double, 2> lo{{-0.5, -0.5}};
    std::array<double, 2> hi{{0.5, 0.5}};

    double volume() const;
    bool contains(const GPoint& p, double tol = 1e-12) const;

    /// Centered box of edge length L in the given dimension.
    static GammaExtent centered(int dim, double edge);
};

enum class KernelKind { Constant, Gaussian, SeparableProduct, Tabulated };

/// Symmetric, strictly positive coupling kernel on the closure of Gamma x Gamma.
///
/// Symmetry and positivity are verified at construction by dense sampling on a
/// 64-per-dimension grid; a kernel violating either property is rejected.
/// Sampled bounds are kept as k_min/k_max. Instances are immutable and safe to
/// share across threads.
class InterfaceKernel {
public:
    static InterfaceKernel constant(const GammaExtent& extent, double value);
    /// amplitude * exp(-|x-y|^2 / length^2)
    static InterfaceKernel gaussian(const GammaExtent& extent, double amplitude = 1.0,
                                    double length = 1.0);
    /// offset + amplitude * g(x) g(y), g(x) = prod_d cos(pi * freq * x_d)
    static InterfaceKernel separable_product(const GammaExtent& extent, double offset = 1.0,
                                             double amplitude = 0.5, double freq = 1.0);
    /// Values on a uniform nx-by-ny grid over closure(Gamma) x closure(Gamma), dim 1 only.
    /// Symmetry is enforced by averaging (T(x,y)+T(y,x))/2 at load time.
    static InterfaceKernel tabulated(const GammaExtent& extent, std::vector<double> values,
                                     int nx, int ny);
    /// Plain-text table: header "n_x n_y", then row-major grid of reals.
    static InterfaceKernel tabulated_from_stream(const GammaExtent& extent, std::istream& in);

    double evaluate(const GPoint& x, const GPoint& y) const;

    KernelKind kind() const { return kind_; }
    const GammaExtent& extent() const { return extent_; }
    double k_min() const { return k_min_; }
    double k_max() const { return k_max_; }

private:
    InterfaceKernel(KernelKind kind, GammaExtent extent);
    double evaluate_raw(const GPoint& x, const GPoint& y) const;
    void sample_and_validate();

    KernelKind kind_;
    GammaExtent extent_;
    std::array<double, 3> params_{{0, 0, 0}};
    std::vector<double> table_;
    int table_nx_ = 0, table_ny_ = 0;
    double k_min_ = 0, k_max_ = 0;
};

/// Midpoint quadrature nodes/weights for integrals over Gamma. Weights are
/// positive and sum to the patch volume.
struct GammaQuadrature {
    std::vector<GPoint> nodes;
    std::vector<double> weights;

    static GammaQuadrature midpoint(const GammaExtent& extent, int cells_per_dim);
    double total_weight() const;
};

/// Sum_q w_q K(x, y_q), approximating the kernel row integral at x.
double row_integral(const InterfaceKernel& kernel, const GPoint& x, const GammaQuadrature& quad);

/// Tensor-product quadrature of the weighted double integral of K(x,y) v(x,y).
double double_integral(const InterfaceKernel& kernel,
                       const std::function<double(const GPoint&, const GPoint&)>& v,
                       const GammaQuadrature& quad);

}  // namespace sievelab
