#include "transonic/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace transonic {

std::vector<double> Axis::coordinates() const {
    std::vector<double> x(nodes());
    for (int i = 0; i < nodes(); ++i) x[i] = this->x(i);
    return x;
}

Box Box::make(double r_s, double r2, double theta0, double z_half, int n_r, int n_t, int n_z) {
    if (n_r < 3 || n_t < 3 || n_z < 3) throw std::invalid_argument("grid needs at least 4 nodes per axis");
    return Box{Axis{r_s, r2, n_r}, Axis{-theta0, theta0, n_t}, Axis{-z_half, z_half, n_z}};
}

Field2 Field3::slice(int i) const {
    Field2 s(nt_, nz_);
    std::copy_n(v_.data() + index(i, 0, 0), s.size(), s.data());
    return s;
}

void Field3::set_slice(int i, const Field2& s) { std::copy_n(s.data(), s.size(), v_.data() + index(i, 0, 0)); }

void diff_line(const double* f, double* out, int n, std::ptrdiff_t s, double h) {
    const double c = 1.0 / (2.0 * h);
    for (int i = 1; i < n - 1; ++i) out[i * s] = (f[(i + 1) * s] - f[(i - 1) * s]) * c;
    const double e = 1.0 / (6.0 * h);
    out[0] = (-11.0 * f[0] + 18.0 * f[s] - 9.0 * f[2 * s] + 2.0 * f[3 * s]) * e;
    const int m = n - 1;
    out[m * s] = (11.0 * f[m * s] - 18.0 * f[(m - 1) * s] + 9.0 * f[(m - 2) * s] - 2.0 * f[(m - 3) * s]) * e;
}

void diff2_line(const double* f, double* out, int n, std::ptrdiff_t s, double h) {
    const double c = 1.0 / (h * h);
    for (int i = 1; i < n - 1; ++i) out[i * s] = (f[(i + 1) * s] - 2.0 * f[i * s] + f[(i - 1) * s]) * c;
    out[0] = (2.0 * f[0] - 5.0 * f[s] + 4.0 * f[2 * s] - f[3 * s]) * c;
    const int m = n - 1;
    out[m * s] = (2.0 * f[m * s] - 5.0 * f[(m - 1) * s] + 4.0 * f[(m - 2) * s] - f[(m - 3) * s]) * c;
}

void diff4_line(const double* f, double* out, int n, std::ptrdiff_t s, double h) {
    const double c = 1.0 / (12.0 * h);
    for (int i = 2; i < n - 2; ++i)
        out[i * s] = (-f[(i + 2) * s] + 8.0 * f[(i + 1) * s] - 8.0 * f[(i - 1) * s] + f[(i - 2) * s]) * c;
    const int m = n - 1;
    auto one_sided = [&](int at, int dir, const double (&w)[5]) {
        double v = 0.0;
        for (int q = 0; q < 5; ++q) v += w[q] * f[(at + dir * q) * s];
        return dir * v * c;
    };
    constexpr double end[5] = {-25.0, 48.0, -36.0, 16.0, -3.0};
    constexpr double next[5] = {-3.0, -10.0, 18.0, -6.0, 1.0};
    out[0] = one_sided(0, 1, end);
    out[m * s] = one_sided(m, -1, end);
    // second node: the stencil starts one node outward
    out[s] = (next[0] * f[0] + next[1] * f[s] + next[2] * f[2 * s] + next[3] * f[3 * s] + next[4] * f[4 * s]) * c;
    out[(m - 1) * s] = -(next[0] * f[m * s] + next[1] * f[(m - 1) * s] + next[2] * f[(m - 2) * s] +
                         next[3] * f[(m - 3) * s] + next[4] * f[(m - 4) * s]) * c;
}

namespace {

void diff4_reflect_line(const double* f, double* out, int n, std::ptrdiff_t s, double h, double sign) {
    const int m = n - 1;
    auto at = [&](int i) {
        if (i < 0) return sign * f[-i * s];
        if (i > m) return sign * f[(2 * m - i) * s];
        return f[i * s];
    };
    const double c = 1.0 / (12.0 * h);
    for (int i = 0; i < n; ++i) out[i * s] = (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) * c;
}

}  // namespace

std::vector<double> diff(const std::vector<double>& f, double h) {
    std::vector<double> out(f.size());
    diff_line(f.data(), out.data(), int(f.size()), 1, h);
    return out;
}

std::vector<double> diff2(const std::vector<double>& f, double h) {
    std::vector<double> out(f.size());
    diff2_line(f.data(), out.data(), int(f.size()), 1, h);
    return out;
}

std::vector<double> diff4(const std::vector<double>& f, double h) {
    std::vector<double> out(f.size());
    diff4_line(f.data(), out.data(), int(f.size()), 1, h);
    return out;
}

std::vector<double> diff4_second(const std::vector<double>& f, double h) {
    const int n = int(f.size()), m = n - 1;
    const double c = 1.0 / (12.0 * h * h);
    std::vector<double> out(f.size());
    for (int i = 2; i < n - 2; ++i)
        out[i] = (-f[i + 2] + 16.0 * f[i + 1] - 30.0 * f[i] + 16.0 * f[i - 1] - f[i - 2]) * c;
    constexpr double end[6] = {45.0, -154.0, 214.0, -156.0, 61.0, -10.0};
    constexpr double next[6] = {10.0, -15.0, -4.0, 14.0, -6.0, 1.0};
    double a = 0.0, b = 0.0, y = 0.0, z = 0.0;
    for (int q = 0; q < 6; ++q) {
        a += end[q] * f[q];
        b += next[q] * f[q];
        y += end[q] * f[m - q];
        z += next[q] * f[m - q];
    }
    out[0] = a * c;
    out[1] = b * c;
    out[m] = y * c;
    out[m - 1] = z * c;
    return out;
}

namespace {

template <class Kernel>
Field3 apply_lines(const Field3& f, int axis, double h, Kernel kernel) {
    Field3 out(f.nr(), f.nt(), f.nz());
    const int n0 = f.nr(), n1 = f.nt(), n2 = f.nz();
    if (axis == 0) {
        const std::ptrdiff_t s = std::ptrdiff_t(n1) * n2;
        for (int j = 0; j < n1; ++j)
            for (int k = 0; k < n2; ++k) kernel(f.data() + f.index(0, j, k), out.data() + f.index(0, j, k), n0, s, h);
    } else if (axis == 1) {
        for (int i = 0; i < n0; ++i)
            for (int k = 0; k < n2; ++k) kernel(f.data() + f.index(i, 0, k), out.data() + f.index(i, 0, k), n1, n2, h);
    } else {
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n1; ++j) kernel(f.data() + f.index(i, j, 0), out.data() + f.index(i, j, 0), n2, 1, h);
    }
    return out;
}

template <class Kernel>
Field2 apply_lines(const Field2& f, int axis, double h, Kernel kernel) {
    Field2 out(f.nt(), f.nz());
    if (axis == 0) {
        for (int k = 0; k < f.nz(); ++k) kernel(f.data() + k, out.data() + k, f.nt(), f.nz(), h);
    } else {
        for (int j = 0; j < f.nt(); ++j)
            kernel(f.data() + std::size_t(j) * f.nz(), out.data() + std::size_t(j) * f.nz(), f.nz(), 1, h);
    }
    return out;
}

}  // namespace

Field3 diff(const Field3& f, int axis, double h) { return apply_lines(f, axis, h, diff_line); }
Field3 diff2(const Field3& f, int axis, double h) { return apply_lines(f, axis, h, diff2_line); }
Field3 diff4(const Field3& f, int axis, double h) { return apply_lines(f, axis, h, diff4_line); }
Field2 diff4(const Field2& f, int axis, double h) { return apply_lines(f, axis, h, diff4_line); }

Field3 diff4(const Field3& f, int axis, double h, Parity p) {
    if (axis == 0) return diff4(f, 0, h);
    const double sign = p == Parity::cosine ? 1.0 : -1.0;
    return apply_lines(f, axis, h, [sign](const double* in, double* out, int n, std::ptrdiff_t s, double hh) {
        diff4_reflect_line(in, out, n, s, hh, sign);
    });
}

Field2 diff4(const Field2& f, int axis, double h, Parity p) {
    const double sign = p == Parity::cosine ? 1.0 : -1.0;
    return apply_lines(f, axis, h, [sign](const double* in, double* out, int n, std::ptrdiff_t s, double hh) {
        diff4_reflect_line(in, out, n, s, hh, sign);
    });
}
Field2 diff(const Field2& f, int axis, double h) { return apply_lines(f, axis, h, diff_line); }
Field2 diff2(const Field2& f, int axis, double h) { return apply_lines(f, axis, h, diff2_line); }

CubicStencil cubic_stencil(const Axis& a, double x) {
    const double t = (x - a.lo) / a.step();
    int i0 = int(std::floor(t)) - 1;
    i0 = std::clamp(i0, 0, a.nodes() - 4);
    CubicStencil s;
    s.first = i0;
    for (int m = 0; m < 4; ++m) {
        double w = 1.0;
        for (int q = 0; q < 4; ++q) {
            if (q == m) continue;
            w *= (t - (i0 + q)) / double(m - q);
        }
        s.w[m] = w;
    }
    return s;
}

double interpolate(const std::vector<double>& f, const Axis& a, double x) {
    const CubicStencil s = cubic_stencil(a, x);
    double v = 0.0;
    for (int m = 0; m < 4; ++m) v += s.w[m] * f[s.first + m];
    return v;
}

double interpolate(const Field2& f, const Axis& a2, const Axis& a3, double y2, double y3) {
    const CubicStencil s2 = cubic_stencil(a2, y2);
    const CubicStencil s3 = cubic_stencil(a3, y3);
    double v = 0.0;
    for (int m = 0; m < 4; ++m) {
        double row = 0.0;
        for (int q = 0; q < 4; ++q) row += s3.w[q] * f(s2.first + m, s3.first + q);
        v += s2.w[m] * row;
    }
    return v;
}

double interpolate(const Field3& f, const Box& b, double y1, double y2, double y3) {
    const CubicStencil s1 = cubic_stencil(b.radial, y1);
    const CubicStencil s2 = cubic_stencil(b.angular, y2);
    const CubicStencil s3 = cubic_stencil(b.axial, y3);
    double v = 0.0;
    for (int p = 0; p < 4; ++p) {
        double plane = 0.0;
        for (int m = 0; m < 4; ++m) {
            const double* row = f.data() + f.index(s1.first + p, s2.first + m, s3.first);
            const double r = s3.w[0] * row[0] + s3.w[1] * row[1] + s3.w[2] * row[2] + s3.w[3] * row[3];
            plane += s2.w[m] * r;
        }
        v += s1.w[p] * plane;
    }
    return v;
}

std::vector<double> trapezoid_weights(const Axis& a) {
    std::vector<double> w(a.nodes(), a.step());
    w.front() *= 0.5;
    w.back() *= 0.5;
    return w;
}

double integrate(const Field2& f, const Axis& a2, const Axis& a3) {
    const auto w2 = trapezoid_weights(a2);
    const auto w3 = trapezoid_weights(a3);
    double s = 0.0;
    for (int j = 0; j < f.nt(); ++j)
        for (int k = 0; k < f.nz(); ++k) s += w2[j] * w3[k] * f(j, k);
    return s;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) {
        if (std::isnan(x)) return x;
        m = std::max(m, std::abs(x));
    }
    return m;
}

}  // namespace transonic
