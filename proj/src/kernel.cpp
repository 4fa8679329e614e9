#include "sievelab/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sievelab {

double GammaExtent::volume() const {
    double v = 1.0;
    for (int d = 0; d < dim; ++d) v *= hi[d] - lo[d];
    return v;
}

bool GammaExtent::contains(const GPoint& p, double tol) const {
    for (int d = 0; d < dim; ++d) {
        if (p[d] < lo[d] - tol || p[d] > hi[d] + tol) return false;
    }
    return true;
}

GammaExtent GammaExtent::centered(int dim, double edge) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("GammaExtent: dim must be 1 or 2");
    if (edge <= 0) throw std::invalid_argument("GammaExtent: edge must be positive");
    GammaExtent e;
    e.dim = dim;
    for (int d = 0; d < dim; ++d) {
        e.lo[d] = -edge / 2;
        e.hi[d] = edge / 2;
    }
    return e;
}

InterfaceKernel::InterfaceKernel(KernelKind kind, GammaExtent extent)
    : kind_(kind), extent_(extent) {}

InterfaceKernel InterfaceKernel::constant(const GammaExtent& extent, double value) {
    InterfaceKernel k(KernelKind::Constant, extent);
    k.params_[0] = value;
    k.sample_and_validate();
    return k;
}

InterfaceKernel InterfaceKernel::gaussian(const GammaExtent& extent, double amplitude,
                                          double length) {
    if (length <= 0) throw std::invalid_argument("gaussian kernel: length must be positive");
    InterfaceKernel k(KernelKind::Gaussian, extent);
    k.params_[0] = amplitude;
    k.params_[1] = length;
    k.sample_and_validate();
    return k;
}

InterfaceKernel InterfaceKernel::separable_product(const GammaExtent& extent, double offset,
                                                   double amplitude, double freq) {
    InterfaceKernel k(KernelKind::SeparableProduct, extent);
    k.params_[0] = offset;
    k.params_[1] = amplitude;
    k.params_[2] = freq;
    k.sample_and_validate();
    return k;
}

InterfaceKernel InterfaceKernel::tabulated(const GammaExtent& extent, std::vector<double> values,
                                           int nx, int ny) {
    if (extent.dim != 1)
        throw std::invalid_argument("tabulated kernel: only 1-d interface tables supported");
    if (nx < 2 || ny < 2 || static_cast<int>(values.size()) != nx * ny)
        throw std::invalid_argument("tabulated kernel: bad table shape");
    if (nx != ny)
        throw std::invalid_argument("tabulated kernel: table must be square for symmetrization");
    InterfaceKernel k(KernelKind::Tabulated, extent);
    // symmetrize in place
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < i; ++j) {
            double avg = 0.5 * (values[i * ny + j] + values[j * nx + i]);
            values[i * ny + j] = avg;
            values[j * nx + i] = avg;
        }
    k.table_ = std::move(values);
    k.table_nx_ = nx;
    k.table_ny_ = ny;
    k.sample_and_validate();
    return k;
}

InterfaceKernel InterfaceKernel::tabulated_from_stream(const GammaExtent& extent,
                                                       std::istream& in) {
    int nx = 0, ny = 0;
    if (!(in >> nx >> ny)) throw std::runtime_error("tabulated kernel: missing header");
    if (nx < 2 || ny < 2) throw std::runtime_error("tabulated kernel: grid must be at least 2x2");
    std::vector<double> values(static_cast<size_t>(nx) * ny);
    for (auto& v : values) {
        if (!(in >> v)) throw std::runtime_error("tabulated kernel: truncated table");
    }
    return tabulated(extent, std::move(values), nx, ny);
}

double InterfaceKernel::evaluate_raw(const GPoint& x, const GPoint& y) const {
    switch (kind_) {
        case KernelKind::Constant:
            return params_[0];
        case KernelKind::Gaussian: {
            double r2 = 0;
            for (int d = 0; d < extent_.dim; ++d) {
                double dd = x[d] - y[d];
                r2 += dd * dd;
            }
            double l = params_[1];
            return params_[0] * std::exp(-r2 / (l * l));
        }
        case KernelKind::SeparableProduct: {
            double gx = 1, gy = 1;
            for (int d = 0; d < extent_.dim; ++d) {
                gx *= std::cos(std::numbers::pi * params_[2] * x[d]);
                gy *= std::cos(std::numbers::pi * params_[2] * y[d]);
            }
            return params_[0] + params_[1] * gx * gy;
        }
        case KernelKind::Tabulated: {
            // bilinear interpolation on the uniform grid over closure x closure
            double a = extent_.lo[0], b = extent_.hi[0];
            double sx = (x[0] - a) / (b - a) * (table_nx_ - 1);
            double sy = (y[0] - a) / (b - a) * (table_ny_ - 1);
            int ix = std::min(static_cast<int>(sx), table_nx_ - 2);
            int iy = std::min(static_cast<int>(sy), table_ny_ - 2);
            ix = std::max(ix, 0);
            iy = std::max(iy, 0);
            double fx = sx - ix, fy = sy - iy;
            auto at = [&](int i, int j) { return table_[i * table_ny_ + j]; };
            return (1 - fx) * (1 - fy) * at(ix, iy) + fx * (1 - fy) * at(ix + 1, iy) +
                   (1 - fx) * fy * at(ix, iy + 1) + fx * fy * at(ix + 1, iy + 1);
        }
    }
    return 0;
}

double InterfaceKernel::evaluate(const GPoint& x, const GPoint& y) const {
    if (!extent_.contains(x) || !extent_.contains(y))
        throw std::domain_error("InterfaceKernel::evaluate: point outside closure of Gamma");
    return evaluate_raw(x, y);
}

void InterfaceKernel::sample_and_validate() {
    const int per_dim = 64;
    std::vector<GPoint> grid;
    if (extent_.dim == 1) {
        grid.reserve(per_dim);
        for (int i = 0; i < per_dim; ++i) {
            double t = (i + 0.5) / per_dim;
            grid.push_back({extent_.lo[0] + t * (extent_.hi[0] - extent_.lo[0]), 0.0});
        }
    } else {
        grid.reserve(per_dim * per_dim);
        for (int i = 0; i < per_dim; ++i)
            for (int j = 0; j < per_dim; ++j) {
                double ti = (i + 0.5) / per_dim, tj = (j + 0.5) / per_dim;
                grid.push_back({extent_.lo[0] + ti * (extent_.hi[0] - extent_.lo[0]),
                                extent_.lo[1] + tj * (extent_.hi[1] - extent_.lo[1])});
            }
    }
    double kmin = std::numeric_limits<double>::infinity();
    double kmax = -kmin;
    for (const auto& x : grid) {
        for (const auto& y : grid) {
            double kxy = evaluate_raw(x, y);
            double kyx = evaluate_raw(y, x);
            double scale = std::max({1.0, std::abs(kxy), std::abs(kyx)});
            if (std::abs(kxy - kyx) > 1e-12 * scale)
                throw std::invalid_argument("InterfaceKernel: sampled symmetry violation");
            if (!(kxy > 0))
                throw std::invalid_argument("InterfaceKernel: sampled positivity violation");
            kmin = std::min(kmin, kxy);
            kmax = std::max(kmax, kxy);
        }
    }
    k_min_ = kmin;
    k_max_ = kmax;
}

GammaQuadrature GammaQuadrature::midpoint(const GammaExtent& extent, int cells_per_dim) {
    if (cells_per_dim < 1) throw std::invalid_argument("GammaQuadrature: need at least one cell");
    GammaQuadrature q;
    if (extent.dim == 1) {
        double h = (extent.hi[0] - extent.lo[0]) / cells_per_dim;
        q.nodes.reserve(cells_per_dim);
        for (int i = 0; i < cells_per_dim; ++i) {
            q.nodes.push_back({extent.lo[0] + (i + 0.5) * h, 0.0});
            q.weights.push_back(h);
        }
    } else {
        double hx = (extent.hi[0] - extent.lo[0]) / cells_per_dim;
        double hy = (extent.hi[1] - extent.lo[1]) / cells_per_dim;
        for (int i = 0; i < cells_per_dim; ++i)
            for (int j = 0; j < cells_per_dim; ++j) {
                q.nodes.push_back(
                    {extent.lo[0] + (i + 0.5) * hx, extent.lo[1] + (j + 0.5) * hy});
                q.weights.push_back(hx * hy);
            }
    }
    return q;
}

double GammaQuadrature::total_weight() const {
    double s = 0;
    for (double w : weights) s += w;
    return s;
}

double row_integral(const InterfaceKernel& kernel, const GPoint& x, const GammaQuadrature& quad) {
    if (quad.nodes.empty()) throw std::invalid_argument("row_integral: empty quadrature");
    double s = 0;
    for (size_t q = 0; q < quad.nodes.size(); ++q)
        s += quad.weights[q] * kernel.evaluate(x, quad.nodes[q]);
    return s;
}

double double_integral(const InterfaceKernel& kernel,
                       const std::function<double(const GPoint&, const GPoint&)>& v,
                       const GammaQuadrature& quad) {
    if (quad.nodes.empty()) throw std::invalid_argument("double_integral: empty quadrature");
    double s = 0;
    for (size_t p = 0; p < quad.nodes.size(); ++p) {
        double row = 0;
        for (size_t q = 0; q < quad.nodes.size(); ++q) {
            row += quad.weights[q] * kernel.evaluate(quad.nodes[p], quad.nodes[q]) *
                   v(quad.nodes[p], quad.nodes[q]);
        }
        s += quad.weights[p] * row;
    }
    return s;
}

}  // namespace sievelab
