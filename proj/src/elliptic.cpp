#include "transonic/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "transonic/errors.hpp"
#include "transonic/parallel.hpp"

namespace transonic {

RadialModes to_modes(const ModalBasis& basis, const Field3& f, Parity p2, Parity p3) {
    RadialModes out(f.nr());
    parallel_for(f.nr(), [&](int i) { out[i] = basis.transform(f.slice(i), p2, p3); });
    return out;
}

Field3 from_modes(const ModalBasis& basis, const RadialModes& m, Parity p2, Parity p3) {
    const Field2 first = basis.inverse(m[0], p2, p3);
    Field3 out(int(m.size()), first.nt(), first.nz());
    parallel_for(int(m.size()), [&](int i) { out.set_slice(i, basis.inverse(m[i], p2, p3)); });
    return out;
}

RadialModes zero_modes(const ModalBasis& basis, int nr) {
    return RadialModes(nr, ModalCoefficients::Zero(basis.angular_modes(), basis.axial_modes()));
}

bool solve_tridiagonal(const std::vector<double>& lower, const std::vector<double>& diag,
                       const std::vector<double>& upper, std::vector<double>& rhs) {
    const std::size_t n = diag.size();
    std::vector<double> c(n, 0.0);
    double pivot = diag[0];
    if (std::abs(pivot) < 1e-300 || !std::isfinite(pivot)) return false;
    c[0] = n > 1 ? upper[0] / pivot : 0.0;
    rhs[0] /= pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = diag[i] - lower[i] * c[i - 1];
        if (std::abs(pivot) < 1e-300 || !std::isfinite(pivot)) return false;
        c[i] = i + 1 < n ? upper[i] / pivot : 0.0;
        rhs[i] = (rhs[i] - lower[i] * rhs[i - 1]) / pivot;
    }
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= c[i] * rhs[i + 1];
    return true;
}

EllipticSolver::EllipticSolver(const Box& box, const ModalBasis& basis, const BackgroundCoefficients& coeffs)
    : box_(box), basis_(basis), a0_(coeffs.a0), a1_(coeffs.a1), a3_(coeffs.a3), a4_(coeffs.a4) {
    y_ = box.radial.coordinates();
    for (double y : y_) {
        d1_.push_back(coeffs.ellipticity(y));
        first_.push_back(1.0 / y + coeffs.first_order(y));
        d3_.push_back(coeffs.entropy_coupling(y));
        d4_.push_back(coeffs.nonlocal_weight(y));
    }
}

namespace {

// Deferred-correction sweeps lifting the radial second-order solves to fourth order.
constexpr int kCorrectionSweeps = 4;

// Radial profile of one mode across all nodes.
std::vector<double> profile(const RadialModes& m, int k, int l) {
    std::vector<double> v(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) v[i] = m[i](k, l);
    return v;
}

void store(RadialModes& m, int k, int l, const std::vector<double>& v) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i](k, l) = v[i];
}

double wall_defect(const Field3& f, bool angular_walls, bool axial_walls) {
    double d = 0.0;
    for (int i = 0; i < f.nr(); ++i) {
        if (angular_walls)
            for (int k = 0; k < f.nz(); ++k)
                d = std::max({d, std::abs(f(i, 0, k)), std::abs(f(i, f.nt() - 1, k))});
        if (axial_walls)
            for (int j = 0; j < f.nt(); ++j)
                d = std::max({d, std::abs(f(i, j, 0)), std::abs(f(i, j, f.nz() - 1))});
    }
    return d;
}

}  // namespace

PiSolution EllipticSolver::solve_pi(const Field3& G1, const Field3& G2, const Field3& G3) const {
    const int nr = box_.nr(), N = nr - 1;
    const double h = box_.radial.step();
    const RadialModes g1 = to_modes(basis_, G1, Parity::sine, Parity::sine);
    const RadialModes g2 = to_modes(basis_, G2, Parity::cosine, Parity::sine);
    const RadialModes g3 = to_modes(basis_, G3, Parity::sine, Parity::cosine);

    PiSolution out;
    out.modes = zero_modes(basis_, nr);
    out.reduced1 = g1;
    out.reduced2 = g2;
    out.reduced3 = g3;
    const double scale = std::max({max_abs(G1), max_abs(G2), max_abs(G3)});
    out.compatibility = scale > 0.0
                            ? std::max({wall_defect(G1, true, true), wall_defect(G2, false, true),
                                        wall_defect(G3, true, false)}) / scale
                            : 0.0;

    const int M2 = basis_.angular_modes(), M3 = basis_.axial_modes();
    std::vector<double> residual(std::size_t(M2) * M3, 0.0);
    parallel_for(M2 * M3, [&](int idx) {
        const int k = idx / M3, l = idx % M3;
        if (k == 0 || l == 0) return;
        const double kap = basis_.angular_wavenumber(k), lam = basis_.axial_wavenumber(l);
        const std::vector<double> a = profile(g1, k, l), b = profile(g2, k, l), c = profile(g3, k, l);
        const std::vector<double> da = nr >= 6 ? diff4(a, h) : diff(a, h);
        std::vector<double> rhs(N - 1), lo(N - 1), di(N - 1), up(N - 1);
        for (int i = 1; i < N; ++i) {
            const double y = y_[i];
            rhs[i - 1] = da[i] + a[i] / y - kap / y * b[i] - lam * c[i];
            lo[i - 1] = 1.0 / (h * h) - 1.0 / (2.0 * h * y);
            up[i - 1] = 1.0 / (h * h) + 1.0 / (2.0 * h * y);
            di[i - 1] = -2.0 / (h * h) - (kap * kap / (y * y) + lam * lam);
        }
        auto solve = [&](std::vector<double> g) {
            if (!solve_tridiagonal(lo, di, up, g)) {
                throw ModalSolveFailure(fmt::format("Poisson solve failed in mode ({}, {})", k, l), k, l);
            }
            std::vector<double> v(nr, 0.0);
            std::copy(g.begin(), g.end(), v.begin() + 1);
            return v;
        };
        std::vector<double> full = solve(rhs);
        // interior defect of the fourth-order scheme; corrected while sweeps remain
        double res = 0.0;
        for (int sweep = 0; sweep <= kCorrectionSweeps; ++sweep) {
            const bool fourth = nr >= 6;
            const std::vector<double> d = fourth ? diff4(full, h) : diff(full, h);
            const std::vector<double> dd = fourth ? diff4_second(full, h) : diff2(full, h);
            std::vector<double> defect(N - 1);
            for (int i = 1; i < N; ++i) {
                const double c2 = kap * kap / (y_[i] * y_[i]) + lam * lam;
                defect[i - 1] = rhs[i - 1] - (dd[i] + d[i] / y_[i] - c2 * full[i]);
            }
            res = std::abs(*std::max_element(defect.begin(), defect.end(),
                                              [](double x, double z) { return std::abs(x) < std::abs(z); }));
            if (!fourth || sweep == kCorrectionSweeps) break;
            const std::vector<double> e = solve(defect);
            for (int i = 0; i < nr; ++i) full[i] += e[i];
        }
        residual[idx] = res;
        const std::vector<double> dp = nr >= 6 ? diff4(full, h) : diff(full, h);
        for (int i = 0; i < nr; ++i) {
            out.modes[i](k, l) = full[i];
            out.reduced1[i](k, l) -= dp[i];
            out.reduced2[i](k, l) -= kap * full[i] / y_[i];
            out.reduced3[i](k, l) -= lam * full[i];
        }
    });
    out.equation_residual = *std::max_element(residual.begin(), residual.end());
    out.pi = from_modes(basis_, out.modes, Parity::sine, Parity::sine);
    return out;
}

struct EllipticSolver::Factor {
    enum Kind { kCurl1, kDiv, kCurl2, kCurl3 };
    struct Row {
        Kind kind;
        int node;  // node index for curl1, left node of the cell otherwise
    };
    bool has_b = false, has_d = false;
    int b_offset = 0, d_offset = 0, columns = 0;
    std::vector<Row> rows;
    Eigen::SparseMatrix<double> A;
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> normal;

    int col_a(int i, int N) const { return (i == 0 || i == N) ? -1 : i - 1; }
    int col_b(int i) const { return has_b ? b_offset + i : -1; }
    int col_d(int i) const { return has_d ? d_offset + i : -1; }
};

const EllipticSolver::Factor& EllipticSolver::div_curl_factor(int k, int l) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find({k, l});
        if (it != cache_.end()) return *it->second;
    }
    auto f = std::make_shared<Factor>();
    const int N = box_.radial.intervals;
    const double h = box_.radial.step();
    const double kap = basis_.angular_wavenumber(k), lam = basis_.axial_wavenumber(l);
    f->has_b = k > 0;
    f->has_d = l > 0;
    f->b_offset = N - 1;
    f->d_offset = f->b_offset + (f->has_b ? N + 1 : 0);
    f->columns = f->d_offset + (f->has_d ? N + 1 : 0);

    std::vector<Eigen::Triplet<double>> t;
    int row = 0;
    auto put = [&](int col, double v) {
        if (col >= 0 && v != 0.0) t.emplace_back(row, col, v);
    };
    if (f->has_b && f->has_d) {
        for (int i = 0; i <= N; ++i) {
            put(f->col_b(i), lam);
            put(f->col_d(i), -kap / y_[i]);
            f->rows.push_back({Factor::kCurl1, i});
            ++row;
        }
    }
    for (int i = 0; i < N; ++i) {
        const double ym = 0.5 * (y_[i] + y_[i + 1]);
        put(f->col_a(i, N), -1.0 / h + 0.5 / ym);
        put(f->col_a(i + 1, N), 1.0 / h + 0.5 / ym);
        put(f->col_b(i), 0.5 * kap / ym);
        put(f->col_b(i + 1), 0.5 * kap / ym);
        put(f->col_d(i), 0.5 * lam);
        put(f->col_d(i + 1), 0.5 * lam);
        f->rows.push_back({Factor::kDiv, i});
        ++row;
        if (f->has_d) {
            put(f->col_a(i, N), -0.5 * lam);
            put(f->col_a(i + 1, N), -0.5 * lam);
            put(f->col_d(i), 1.0 / h);
            put(f->col_d(i + 1), -1.0 / h);
            f->rows.push_back({Factor::kCurl2, i});
            ++row;
        }
        if (f->has_b) {
            put(f->col_b(i), -1.0 / h + 0.5 / ym);
            put(f->col_b(i + 1), 1.0 / h + 0.5 / ym);
            put(f->col_a(i, N), 0.5 * kap / ym);
            put(f->col_a(i + 1, N), 0.5 * kap / ym);
            f->rows.push_back({Factor::kCurl3, i});
            ++row;
        }
    }
    f->A.resize(row, f->columns);
    f->A.setFromTriplets(t.begin(), t.end());
    const Eigen::SparseMatrix<double> AtA = Eigen::SparseMatrix<double>(f->A.transpose()) * f->A;
    f->normal.compute(AtA);
    if (f->normal.info() != Eigen::Success) {
        throw ModalSolveFailure(fmt::format("div-curl normal equations singular in mode ({}, {})", k, l), k, l);
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(std::make_pair(k, l), f);
    return *it->second;
}

DivCurlSolution EllipticSolver::solve_div_curl(const PiSolution& pi, double tolerance_factor) const {
    const int nr = box_.nr(), N = nr - 1;
    const double h = box_.radial.step();
    const int M2 = basis_.angular_modes(), M3 = basis_.axial_modes();
    DivCurlSolution out;
    out.a = zero_modes(basis_, nr);
    out.b = zero_modes(basis_, nr);
    out.d = zero_modes(basis_, nr);
    std::vector<double> div_res(std::size_t(M2) * M3, 0.0), curl_res(div_res), src_div(div_res), trunc(div_res);

    parallel_for(M2 * M3, [&](int idx) {
        const int k = idx / M3, l = idx % M3;
        const double kap = basis_.angular_wavenumber(k), lam = basis_.axial_wavenumber(l);
        const std::vector<double> g1 = profile(pi.reduced1, k, l), g2 = profile(pi.reduced2, k, l),
                                  g3 = profile(pi.reduced3, k, l);

        // divergence of the reduced sources on the cells, and its truncation scale
        double sd = 0.0;
        for (int i = 0; i < N; ++i) {
            const double ym = 0.5 * (y_[i] + y_[i + 1]);
            const double v = (g1[i + 1] - g1[i]) / h + 0.5 * (g1[i] + g1[i + 1]) / ym -
                             kap * 0.5 * (g2[i] + g2[i + 1]) / ym - lam * 0.5 * (g3[i] + g3[i + 1]);
            sd = std::max(sd, std::abs(v));
        }
        const std::vector<double> p = profile(pi.modes, k, l);
        const std::vector<double> p4 = diff2(diff2(p, h), h);
        const std::vector<double> g1c = diff2(diff(g1, h), h), g1b = diff2(g1, h);
        const std::vector<double> g2b = diff2(g2, h), g3b = diff2(g3, h);
        double tr = 0.0;
        for (int i = 0; i < nr; ++i) {
            tr = std::max(tr, std::abs(p4[i]) + std::abs(g1c[i]) +
                                  (std::abs(g1b[i]) + kap * std::abs(g2b[i])) / y_[i] + lam * std::abs(g3b[i]));
        }
        src_div[idx] = sd;
        trunc[idx] = h * h * tr;

        const Factor& f = div_curl_factor(k, l);
        Eigen::VectorXd rhs(Eigen::Index(f.rows.size()));
        for (std::size_t r = 0; r < f.rows.size(); ++r) {
            const int i = f.rows[r].node;
            switch (f.rows[r].kind) {
                case Factor::kCurl1: rhs[r] = g1[i]; break;
                case Factor::kDiv: rhs[r] = 0.0; break;
                case Factor::kCurl2: rhs[r] = 0.5 * (g2[i] + g2[i + 1]); break;
                case Factor::kCurl3: rhs[r] = 0.5 * (g3[i] + g3[i + 1]); break;
            }
        }
        const Eigen::VectorXd x = f.normal.solve(f.A.transpose() * rhs);
        const Eigen::VectorXd res = f.A * x - rhs;
        double dr = 0.0, cr = 0.0;
        for (std::size_t r = 0; r < f.rows.size(); ++r) {
            double& slot = f.rows[r].kind == Factor::kDiv ? dr : cr;
            slot = std::max(slot, std::abs(res[r]));
        }
        div_res[idx] = dr;
        curl_res[idx] = cr;
        for (int i = 0; i <= N; ++i) {
            const int ca = f.col_a(i, N), cb = f.col_b(i), cd = f.col_d(i);
            out.a[i](k, l) = ca >= 0 ? x[ca] : 0.0;
            out.b[i](k, l) = cb >= 0 ? x[cb] : 0.0;
            out.d[i](k, l) = cd >= 0 ? x[cd] : 0.0;
        }
    });
    out.div_residual = *std::max_element(div_res.begin(), div_res.end());
    out.curl_residual = *std::max_element(curl_res.begin(), curl_res.end());
    out.source_divergence = *std::max_element(src_div.begin(), src_div.end());
    out.truncation = *std::max_element(trunc.begin(), trunc.end());
    for (std::size_t q = 0; q < src_div.size(); ++q) {
        if (src_div[q] > tolerance_factor * trunc[q] && src_div[q] > 1e-13) {
            throw SolvabilityViolation(fmt::format(
                "reduced vorticity sources carry divergence {:.3e} in mode ({}, {}), above {:.1f} x truncation {:.3e}",
                src_div[q], int(q) / M3, int(q) % M3, tolerance_factor, trunc[q]));
        }
    }
    out.v1 = from_modes(basis_, out.a, Parity::cosine, Parity::cosine);
    out.v2 = from_modes(basis_, out.b, Parity::sine, Parity::cosine);
    out.v3 = from_modes(basis_, out.d, Parity::cosine, Parity::sine);
    return out;
}

ShockPoisson EllipticSolver::solve_m1(const Field2& q5) const {
    ShockPoisson out;
    const double rs = box_.radial.lo;
    out.q5_integral = integrate(q5, box_.angular, box_.axial);
    ModalCoefficients q = basis_.transform(q5, Parity::cosine, Parity::cosine);
    out.modes = ModalCoefficients::Zero(q.rows(), q.cols());
    for (int k = 0; k < q.rows(); ++k)
        for (int l = 0; l < q.cols(); ++l) {
            if (k == 0 && l == 0) continue;
            const double kap = basis_.angular_wavenumber(k), lam = basis_.axial_wavenumber(l);
            out.modes(k, l) = -a3_ * q(k, l) / (kap * kap / (rs * rs) + lam * lam);
        }
    out.m1 = basis_.inverse(out.modes, Parity::cosine, Parity::cosine);
    out.m1_integral = integrate(out.m1, box_.angular, box_.axial);
    return out;
}

PotentialSolution EllipticSolver::solve_potential(const Field3& G5, const ModalCoefficients& m1,
                                                  const Field2& m2) const {
    return solve_potential_modes(to_modes(basis_, G5, Parity::cosine, Parity::cosine), m1,
                                 basis_.transform(m2, Parity::cosine, Parity::cosine));
}

PotentialSolution EllipticSolver::solve_potential_modes(const RadialModes& G5, const ModalCoefficients& m1,
                                                        const ModalCoefficients& m2) const {
    const int nr = box_.nr(), N = nr - 1;
    const double h = box_.radial.step();
    const int M2 = basis_.angular_modes(), M3 = basis_.axial_modes();
    PotentialSolution out;
    out.X = zero_modes(basis_, nr);
    out.dX = zero_modes(basis_, nr);
    std::vector<double> robin(std::size_t(M2) * M3, 0.0), neumann(robin), closure(robin);

    parallel_for(M2 * M3, [&](int idx) {
        const int k = idx / M3, l = idx % M3;
        const double kap = basis_.angular_wavenumber(k), lam = basis_.axial_wavenumber(l);
        std::vector<double> lo(nr, 0.0), di(nr, 0.0), up(nr, 0.0), Y(nr), Z(nr);
        for (int i = 0; i < nr; ++i) {
            const double d1 = d1_[i], f = first_[i], y = y_[i];
            const double c = kap * kap / (y * y) + lam * lam;
            Y[i] = G5[i](k, l);
            Z[i] = a0_ * a1_ * d4_[i];
            if (i == 0) {
                // ghost value from X'(r_s) - a4 X(r_s) = m1
                di[i] = -2.0 * d1 / (h * h) - 2.0 * d1 * a4_ / h + f * a4_ - c;
                up[i] = 2.0 * d1 / (h * h);
            } else if (i == N) {
                // ghost value from X'(r2) = m2
                lo[i] = 2.0 * d1 / (h * h);
                di[i] = -2.0 * d1 / (h * h) - c;
            } else {
                lo[i] = d1 / (h * h) - f / (2.0 * h);
                di[i] = -2.0 * d1 / (h * h) - c;
                up[i] = d1 / (h * h) + f / (2.0 * h);
            }
        }
        if (!solve_tridiagonal(lo, di, up, Z)) {
            throw ModalSolveFailure(fmt::format("potential solve failed in mode ({}, {})", k, l), k, l);
        }
        const double gap = 1.0 - Z[0];
        closure[idx] = std::abs(gap);
        if (std::abs(gap) < 1e-10) {
            throw SuperpositionDegenerate(
                fmt::format("shock-trace closure 1 - Z(r_s) = {:.3e} in mode ({}, {})", gap, k, l));
        }
        // second-order ghost-point solve for interior data G and boundary data (left, right)
        auto solve = [&](std::vector<double> G, double left, double right) {
            G[0] += (2.0 * d1_[0] / h - first_[0]) * left;
            G[N] -= (2.0 * d1_[N] / h + first_[N]) * right;
            if (!solve_tridiagonal(lo, di, up, G)) {
                throw ModalSolveFailure(fmt::format("potential solve failed in mode ({}, {})", k, l), k, l);
            }
            const double x0 = G[0] / gap;
            for (int i = 0; i < nr; ++i) G[i] += x0 * Z[i];
            return G;
        };
        std::vector<double> X = solve(Y, m1(k, l), m2(k, l));
        // deferred correction toward the fourth-order scheme: the equation at interior
        // nodes, the boundary relations with one-sided fourth-order slopes
        double left = 0.0, right = 0.0;
        for (int sweep = 0; nr >= 6 && sweep <= kCorrectionSweeps; ++sweep) {
            const std::vector<double> d = diff4(X, h), dd = diff4_second(X, h);
            std::vector<double> defect(nr, 0.0);
            for (int i = 1; i < N; ++i) {
                const double c = kap * kap / (y_[i] * y_[i]) + lam * lam;
                defect[i] = G5[i](k, l) -
                            (d1_[i] * dd[i] + first_[i] * d[i] - c * X[i] - a0_ * a1_ * d4_[i] * X[0]);
            }
            left = m1(k, l) - (d[0] - a4_ * X[0]);
            right = m2(k, l) - d[N];
            if (sweep == kCorrectionSweeps) break;
            const std::vector<double> e = solve(defect, left, right);
            for (int i = 0; i < nr; ++i) X[i] += e[i];
        }
        robin[idx] = std::abs(left);
        neumann[idx] = std::abs(right);
        std::vector<double> dX = nr >= 6 ? diff4(X, h) : diff(X, h);
        dX[0] = a4_ * X[0] + m1(k, l);
        dX[N] = m2(k, l);
        store(out.X, k, l, X);
        store(out.dX, k, l, dX);
    });
    out.robin_residual = *std::max_element(robin.begin(), robin.end());
    out.neumann_residual = *std::max_element(neumann.begin(), neumann.end());
    out.min_closure = *std::min_element(closure.begin(), closure.end());
    out.phi = from_modes(basis_, out.X, Parity::cosine, Parity::cosine);
    return out;
}

VelocityField EllipticSolver::assemble_velocity(const PotentialSolution& phi, const DivCurlSolution& w) const {
    const int nr = box_.nr();
    RadialModes n1 = w.a, n2 = w.b, n3 = w.d;
    const ModalCoefficients& trace = phi.dX[0];
    for (int i = 0; i < nr; ++i) {
        const double y = y_[i];
        for (int k = 0; k < basis_.angular_modes(); ++k)
            for (int l = 0; l < basis_.axial_modes(); ++l) {
                const double kap = basis_.angular_wavenumber(k), lam = basis_.axial_wavenumber(l);
                n1[i](k, l) += phi.dX[i](k, l) - d3_[i] / a3_ * trace(k, l);
                if (k > 0) n2[i](k, l) -= kap * phi.X[i](k, l) / y;
                if (l > 0) n3[i](k, l) -= lam * phi.X[i](k, l);
            }
    }
    VelocityField v;
    v.v1 = from_modes(basis_, n1, Parity::cosine, Parity::cosine);
    v.v2 = from_modes(basis_, n2, Parity::sine, Parity::cosine);
    v.v3 = from_modes(basis_, n3, Parity::cosine, Parity::sine);
    return v;
}

}  // namespace transonic
