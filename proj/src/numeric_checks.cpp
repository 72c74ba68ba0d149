#include "loxo/numeric_checks.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "loxo/errors.hpp"

namespace loxo {

namespace {

Eigen::MatrixXd to_double(const IntMatrix& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j).get_d();
    return out;
}

}  // namespace

std::vector<double> eigenvalue_moduli(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionError("eigenvalues of non-square matrix");
    if (m.rows() == 0) return {};
    Eigen::EigenSolver<Eigen::MatrixXd> solver(to_double(m), false);
    std::vector<double> moduli;
    moduli.reserve(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) moduli.push_back(std::abs(solver.eigenvalues()(i)));
    std::sort(moduli.begin(), moduli.end());
    return moduli;
}

int count_moduli_above(const IntMatrix& m, double threshold) {
    auto moduli = eigenvalue_moduli(m);
    return static_cast<int>(std::count_if(moduli.begin(), moduli.end(),
                                          [&](double x) { return x > threshold; }));
}

double spectral_radius_estimate(const IntMatrix& m) {
    auto moduli = eigenvalue_moduli(m);
    return moduli.empty() ? 0.0 : moduli.back();
}

int numeric_rank(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_double(m));
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    const double cutoff = sv(0) * 1e-9 * std::max(m.rows(), m.cols());
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;
    return r;
}

std::pair<int, int> numeric_signature(const IntMatrix& m) {
    if (!m.is_square() || !m.is_symmetric())
        throw PreconditionError("numeric signature needs a symmetric matrix");
    if (m.rows() == 0) return {0, 0};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_double(m), Eigen::EigenvaluesOnly);
    int pos = 0, neg = 0;
    const auto& ev = solver.eigenvalues();
    const double cutoff = 1e-9 * std::max(1.0, std::abs(ev(ev.size() - 1)));
    for (int i = 0; i < ev.size(); ++i) {
        if (ev(i) > cutoff)
            ++pos;
        else if (ev(i) < -cutoff)
            ++neg;
    }
    return {pos, neg};
}

}  // namespace loxo
