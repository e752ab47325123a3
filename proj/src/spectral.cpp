#include "rigidity/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rigidity/error.hpp"

namespace rigidity {

namespace {

// Householder reduction A = Q T Q^T with Q = H_0 H_1 ... H_{n-3}.
struct Tridiagonal {
    std::vector<double> diagonal;
    std::vector<double> offdiagonal;  // offdiagonal[i] couples i and i+1; last entry is 0
    std::vector<std::vector<double>> reflectors;  // reflector k acts on indices k+1..n-1
    std::vector<double> betas;
};

Tridiagonal tridiagonalize(const SymmetricMatrix& m) {
    const int n = m.order();
    std::vector<double> w(static_cast<std::size_t>(n) * n);
    auto at = [&](int i, int j) -> double& { return w[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            at(i, j) = at(j, i) = m(i, j);
        }
    }

    Tridiagonal t;
    t.diagonal.assign(n, 0.0);
    t.offdiagonal.assign(n, 0.0);
    std::vector<double> p(n);
    for (int k = 0; k + 2 < n; ++k) {
        const int len = n - k - 1;
        std::vector<double> v(len);
        double tail = 0.0;
        for (int i = 0; i < len; ++i) {
            v[i] = at(k + 1 + i, k);
            if (i > 0) {
                tail += v[i] * v[i];
            }
        }
        t.diagonal[k] = at(k, k);
        if (tail == 0.0) {
            t.offdiagonal[k] = v[0];
            t.reflectors.emplace_back();
            t.betas.push_back(0.0);
            continue;
        }
        const double norm = std::sqrt(v[0] * v[0] + tail);
        const double alpha = v[0] >= 0.0 ? -norm : norm;
        v[0] -= alpha;
        const double beta = 2.0 / (v[0] * v[0] + tail);

        // B <- H B H on the trailing block via the symmetric rank-2 update.
        double pv = 0.0;
        for (int i = 0; i < len; ++i) {
            double s = 0.0;
            const double* row = &at(k + 1 + i, k + 1);
            for (int j = 0; j < len; ++j) {
                s += row[j] * v[j];
            }
            p[i] = beta * s;
            pv += p[i] * v[i];
        }
        const double half = 0.5 * beta * pv;
        for (int i = 0; i < len; ++i) {
            p[i] -= half * v[i];
        }
        for (int i = 0; i < len; ++i) {
            double* row = &at(k + 1 + i, k + 1);
            for (int j = 0; j < len; ++j) {
                row[j] -= v[i] * p[j] + p[i] * v[j];
            }
        }
        t.offdiagonal[k] = alpha;
        t.reflectors.push_back(std::move(v));
        t.betas.push_back(beta);
    }
    if (n >= 2) {
        t.diagonal[n - 2] = at(n - 2, n - 2);
        t.offdiagonal[n - 2] = at(n - 1, n - 2);
    }
    t.diagonal[n - 1] = at(n - 1, n - 1);
    return t;
}

// Implicitly shifted QL on a symmetric tridiagonal matrix; eigenvalues left in d.
void tridiagonal_ql(std::vector<double>& d, std::vector<double> e) {
    const int n = static_cast<int>(d.size());
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int sweeps = 0;
        while (true) {
            int m = l;
            for (; m < n - 1; ++m) {
                const double scale = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * scale) {
                    break;
                }
            }
            if (m == l) {
                break;
            }
            if (++sweeps > kQlSweepsPerEigenvalue) {
                throw ConvergenceError("QL iteration exceeded " + std::to_string(kQlSweepsPerEigenvalue) +
                                       " sweeps at eigenvalue " + std::to_string(l));
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool deflated = false;
            for (int i = m - 1; i >= l; --i) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (deflated) {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

// One eigenvector of the tridiagonal matrix for a computed eigenvalue, by
// inverse iteration with a partially pivoted LU of (T - θI).
std::vector<double> tridiagonal_eigenvector(const Tridiagonal& t, double theta, double scale) {
    const int n = static_cast<int>(t.diagonal.size());
    std::vector<double> diag(n);
    std::vector<double> up1(n, 0.0);
    std::vector<double> up2(n, 0.0);
    std::vector<double> mult(n, 0.0);
    std::vector<char> swapped(n, 0);
    const double tiny = std::max(scale, 1.0) * std::numeric_limits<double>::epsilon();

    for (int i = 0; i < n; ++i) {
        diag[i] = t.diagonal[i] - theta;
        up1[i] = i + 1 < n ? t.offdiagonal[i] : 0.0;
    }
    for (int i = 0; i + 1 < n; ++i) {
        const double sub = t.offdiagonal[i];
        if (std::fabs(diag[i]) >= std::fabs(sub)) {
            if (diag[i] == 0.0) {
                diag[i] = tiny;
            }
            mult[i] = sub / diag[i];
            diag[i + 1] -= mult[i] * up1[i];
            up1[i + 1] -= mult[i] * up2[i];
        } else {
            swapped[i] = 1;
            mult[i] = diag[i] / sub;
            const double old_diag_next = diag[i + 1];
            const double old_up_next = up1[i + 1];
            const double old_up = up1[i];
            diag[i] = sub;
            up1[i] = old_diag_next;
            up2[i] = old_up_next;
            diag[i + 1] = old_up - mult[i] * old_diag_next;
            up1[i + 1] = -mult[i] * old_up_next;
        }
    }
    if (diag[n - 1] == 0.0) {
        diag[n - 1] = tiny;
    }

    std::vector<double> y(n);
    // Deterministic start vector with no special structure.
    for (int i = 0; i < n; ++i) {
        y[i] = 1.0 + 0.5 * std::sin(1.0 + 7.0 * i);
    }
    for (int iteration = 0; iteration < 3; ++iteration) {
        for (int i = 0; i + 1 < n; ++i) {
            if (swapped[i]) {
                std::swap(y[i], y[i + 1]);
            }
            y[i + 1] -= mult[i] * y[i];
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = y[i];
            if (i + 1 < n) {
                s -= up1[i] * y[i + 1];
            }
            if (i + 2 < n) {
                s -= up2[i] * y[i + 2];
            }
            y[i] = s / diag[i];
        }
        double norm = 0.0;
        for (double v : y) {
            norm += v * v;
        }
        norm = std::sqrt(norm);
        if (!std::isfinite(norm) || norm == 0.0) {
            throw ConvergenceError("inverse iteration broke down");
        }
        for (double& v : y) {
            v /= norm;
        }
    }
    return y;
}

std::vector<double> back_transform(const Tridiagonal& t, std::vector<double> y) {
    const int n = static_cast<int>(y.size());
    for (int k = static_cast<int>(t.reflectors.size()) - 1; k >= 0; --k) {
        const auto& v = t.reflectors[k];
        if (v.empty()) {
            continue;
        }
        double dot = 0.0;
        for (int i = 0; i + k + 1 < n; ++i) {
            dot += v[i] * y[k + 1 + i];
        }
        dot *= t.betas[k];
        for (int i = 0; i + k + 1 < n; ++i) {
            y[k + 1 + i] -= dot * v[i];
        }
    }
    return y;
}

double residual(const SymmetricMatrix& m, const std::vector<double>& x, double theta) {
    const auto mx = m.multiply(x);
    double r = 0.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double diff = mx[i] - theta * x[i];
        r += diff * diff;
        norm += x[i] * x[i];
    }
    return std::sqrt(r / norm);
}

void require_order(const Graph& g, const char* what) {
    if (g.order() < 2) {
        throw PreconditionError(std::string(what) + " needs at least two vertices");
    }
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(int n) : n_(n), packed_(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0) {
    if (n < 1) {
        throw InputError("matrix order must be positive");
    }
}

double SymmetricMatrix::norm_inf() const {
    double best = 0.0;
    for (int i = 0; i < n_; ++i) {
        double row = 0.0;
        for (int j = 0; j < n_; ++j) {
            row += std::fabs((*this)(i, j));
        }
        best = std::max(best, row);
    }
    return best;
}

double SymmetricMatrix::trace() const {
    double sum = 0.0;
    for (int i = 0; i < n_; ++i) {
        sum += (*this)(i, i);
    }
    return sum;
}

std::vector<double> SymmetricMatrix::multiply(std::span<const double> x) const {
    std::vector<double> y(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
        const double* row = &packed_[index(i, 0)];
        for (int j = 0; j < i; ++j) {
            y[i] += row[j] * x[j];
            y[j] += row[j] * x[i];
        }
        y[i] += row[i] * x[i];
    }
    return y;
}

Spectrum eigenvalues(const SymmetricMatrix& m) {
    const int n = m.order();
    const double scale = m.norm_inf();
    const Tridiagonal t = tridiagonalize(m);

    Spectrum spectrum;
    spectrum.values = t.diagonal;
    tridiagonal_ql(spectrum.values, t.offdiagonal);
    std::sort(spectrum.values.begin(), spectrum.values.end());

    std::vector<int> checked = {0, 1, n - 2, n - 1};
    std::erase_if(checked, [n](int i) { return i < 0 || i >= n; });
    std::sort(checked.begin(), checked.end());
    checked.erase(std::unique(checked.begin(), checked.end()), checked.end());
    for (int i : checked) {
        const double theta = spectrum.values[i];
        const auto x = back_transform(t, tridiagonal_eigenvector(t, theta, scale));
        spectrum.max_residual = std::max(spectrum.max_residual, residual(m, x, theta) / std::max(1.0, scale));
    }
    if (!(spectrum.max_residual <= kResidualTolerance)) {
        throw ConvergenceError("eigenpair residual " + std::to_string(spectrum.max_residual) +
                               " exceeds tolerance");
    }
    return spectrum;
}

SymmetricMatrix laplacian(const Graph& g) {
    SymmetricMatrix l(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        l.set(v, v, g.degree(v));
    }
    for (const Edge& e : g.edges()) {
        l.set(e.u, e.v, -1.0);
    }
    return l;
}

SymmetricMatrix adjacency(const Graph& g) {
    SymmetricMatrix a(g.order());
    for (const Edge& e : g.edges()) {
        a.set(e.u, e.v, 1.0);
    }
    return a;
}

SymmetricMatrix signless_laplacian(const Graph& g) {
    SymmetricMatrix q(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        q.set(v, v, g.degree(v));
    }
    for (const Edge& e : g.edges()) {
        q.set(e.u, e.v, 1.0);
    }
    return q;
}

double mu2(const Graph& g) {
    require_order(g, "mu2");
    return eigenvalues(laplacian(g)).values[1];
}

double lambda2(const Graph& g) {
    require_order(g, "lambda2");
    const auto values = eigenvalues(adjacency(g)).values;
    return values[values.size() - 2];
}

double lambda_abs(const Graph& g) {
    require_order(g, "lambda_abs");
    const auto values = eigenvalues(adjacency(g)).values;
    return std::max(std::fabs(values[values.size() - 2]), std::fabs(values.front()));
}

double q2(const Graph& g) {
    require_order(g, "q2");
    const auto values = eigenvalues(signless_laplacian(g)).values;
    return values[values.size() - 2];
}

bool is_ramanujan(const Graph& g) {
    if (!g.is_regular()) {
        throw PreconditionError("is_ramanujan: graph is not regular");
    }
    if (!is_connected(g)) {
        throw PreconditionError("is_ramanujan: graph is not connected");
    }
    const int d = g.min_degree();
    const double bound = 2.0 * std::sqrt(std::max(0, d - 1)) + 1e-8;
    auto values = eigenvalues(adjacency(g)).values;
    values.pop_back();  // λ_1 = d
    for (double lambda : values) {
        if (std::fabs(std::fabs(lambda) - d) <= 1e-8) {
            continue;
        }
        if (std::fabs(lambda) > bound) {
            return false;
        }
    }
    return true;
}

}  // namespace rigidity
