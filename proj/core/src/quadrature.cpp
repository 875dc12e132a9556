#include "perfhom/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "perfhom/grid.hpp"

namespace perfhom {

void gauss_legendre(int n, double* nodes, double* weights) {
    constexpr double pi = std::numbers::pi;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));  // Chebyshev initial guess
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

double circle_quadrature(const std::function<double(const std::array<double, 3>&)>& f,
                         double Theta, int n_q, int dim) {
    if (n_q < 16) throw ConfigError("circle_quadrature: N_q must be >= 16");
    constexpr double pi = std::numbers::pi;
    if (Theta == 0.0) return 0.0;
    if (dim == 2) {
        // Trapezoid on the periodic circle; weight sums to 2*pi*Theta exactly.
        const double w = 2.0 * pi * Theta / n_q;
        double s = 0.0, c = 0.0;
        for (int i = 0; i < n_q; ++i) {
            const double phi = 2.0 * pi * i / n_q;
            const double v = f({Theta * std::cos(phi), Theta * std::sin(phi), 0.0}) - c;
            const double t = s + v;
            c = (t - s) - v;
            s = t;
        }
        return s * w;
    }
    // d=3: Gauss-Legendre in cos(polar) x trapezoid in azimuth.
    const int n_mu = n_q, n_phi = 2 * n_q;
    std::vector<double> mu(n_mu), wmu(n_mu);
    gauss_legendre(n_mu, mu.data(), wmu.data());
    double s = 0.0;
    for (int i = 0; i < n_mu; ++i) {
        const double sint = std::sqrt(std::max(0.0, 1.0 - mu[i] * mu[i]));
        double ring = 0.0;
        for (int j = 0; j < n_phi; ++j) {
            const double phi = 2.0 * pi * j / n_phi;
            ring += f({Theta * sint * std::cos(phi), Theta * sint * std::sin(phi),
                       Theta * mu[i]});
        }
        s += wmu[i] * ring * (2.0 * pi / n_phi);
    }
    return s * Theta * Theta;
}

}  // namespace perfhom
