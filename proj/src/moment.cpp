#include "conred/moment.hpp"

#include <cmath>

namespace conred {

namespace {
constexpr double kSkewTol = 1e-12;

// sin(t)/t with a guarded series below t < 1e-4 to avoid cancellation.
double sinc(double t) {
    if (std::abs(t) < 1e-4) {
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0);
    }
    return std::sin(t) / t;
}
} // namespace

std::pair<double, double> Hermitian2::eigenvalues() const {
    const double mean = 0.5 * (h11 + h22);
    const double rad = std::hypot(0.5 * (h11 - h22), std::abs(h12));
    return {mean + rad, mean - rad};
}

Hermitian2 operator+(const Hermitian2& a, const Hermitian2& b) {
    return Hermitian2{a.h11 + b.h11, a.h22 + b.h22, a.h12 + b.h12};
}

Hermitian2 operator*(double c, const Hermitian2& h) { return Hermitian2{c * h.h11, c * h.h22, c * h.h12}; }

double frobenius_distance(const Hermitian2& a, const Hermitian2& b) {
    const double d11 = a.h11 - b.h11;
    const double d22 = a.h22 - b.h22;
    const double d12 = std::abs(a.h12 - b.h12);
    return std::sqrt(d11 * d11 + d22 * d22 + 2.0 * d12 * d12);
}

LieElement::LieElement(const Eigen::Matrix2cd& m) : m_(m) {
    if ((m + m.adjoint()).cwiseAbs().maxCoeff() > kSkewTol)
        raise(errc::malformed_input, "LieElement requires a skew-Hermitian matrix");
}

LieElement LieElement::eta() {
    Eigen::Matrix2cd m;
    m << cd(0, 0), cd(1, 0), cd(-1, 0), cd(0, 0);
    return LieElement(m);
}
LieElement LieElement::xi() {
    Eigen::Matrix2cd m;
    m << cd(0, 0), cd(0, 1), cd(0, 1), cd(0, 0);
    return LieElement(m);
}
LieElement LieElement::rho() {
    Eigen::Matrix2cd m;
    m << cd(0, 1), cd(0, 0), cd(0, 0), cd(0, 0);
    return LieElement(m);
}
LieElement LieElement::gamma() {
    Eigen::Matrix2cd m;
    m << cd(0, 0), cd(0, 0), cd(0, 0), cd(0, 1);
    return LieElement(m);
}

ProjVector ProjVector::from_flat(const RepDescriptor& rep, const Eigen::VectorXcd& flat) {
    if (flat.size() != rep.dim())
        raise(errc::bad_length, "flat vector length does not match the representation dimension");
    ProjVector Z;
    Z.blocks.reserve(static_cast<std::size_t>(rep.r()));
    for (int a = 1; a <= rep.r(); ++a)
        Z.blocks.push_back(flat.segment(rep.block_offset(a), rep.summand(a).k + 1));
    return Z;
}

ProjVector ProjVector::basis_vector(const RepDescriptor& rep, IndexPair idx) {
    Eigen::VectorXcd flat = Eigen::VectorXcd::Zero(rep.dim());
    flat(rep.flat_index(idx)) = cd(1, 0);
    return from_flat(rep, flat);
}

Eigen::VectorXcd ProjVector::flatten() const {
    Eigen::Index total = 0;
    for (const auto& b : blocks)
        total += b.size();
    Eigen::VectorXcd flat(total);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        flat.segment(at, b.size()) = b;
        at += b.size();
    }
    return flat;
}

double ProjVector::squared_norm() const {
    double s = 0.0;
    for (const auto& b : blocks)
        s += b.squaredNorm();
    return s;
}

std::pair<Eigen::VectorXcd, Eigen::VectorXcd> f_pair(int k, const Eigen::VectorXcd& Zb) {
    if (k < 1)
        raise(errc::bad_length, "f_pair requires k >= 1");
    if (Zb.size() != k + 1)
        raise(errc::bad_length, "f_pair requires a coordinate vector of length k + 1");
    Eigen::VectorXcd F1(k), F2(k);
    for (int j = 1; j <= k; ++j) {
        F1(j - 1) = std::sqrt(double(k - j + 1)) * Zb(j - 1);
        F2(j - 1) = std::sqrt(double(j)) * Zb(j);
    }
    return {F1, F2};
}

Hermitian2 phi_block(int k, std::int64_t l, const Eigen::VectorXcd& Zb) {
    const double n2 = Zb.squaredNorm();
    if (n2 <= 0.0)
        raise(errc::zero_vector, "phi_block requires a nonzero coordinate vector");
    if (k == 0)
        return Hermitian2{double(l), double(l), cd(0, 0)};
    auto [F1, F2] = f_pair(k, Zb);
    Hermitian2 H;
    H.h11 = F1.squaredNorm() / n2 + double(l);
    H.h22 = F2.squaredNorm() / n2 + double(l);
    H.h12 = (F2.transpose() * F1.conjugate()).value() / n2;
    return H;
}

Hermitian2 phi_rep(const RepDescriptor& rep, const ProjVector& Z) {
    if (static_cast<int>(Z.blocks.size()) != rep.r())
        raise(errc::bad_length, "block count does not match the descriptor");
    const double total = Z.squared_norm();
    if (total <= 0.0)
        raise(errc::zero_vector, "phi_rep requires a nonzero vector");
    Hermitian2 H;
    for (int a = 1; a <= rep.r(); ++a) {
        const Eigen::VectorXcd& Zb = Z.blocks[static_cast<std::size_t>(a - 1)];
        const Summand& s = rep.summand(a);
        if (Zb.size() != s.k + 1)
            raise(errc::bad_length, "block length does not match k_a + 1");
        const double w = Zb.squaredNorm();
        if (w <= 0.0)
            continue;
        H = H + (w / total) * phi_block(static_cast<int>(s.k), s.l, Zb);
    }
    return H;
}

std::pair<double, double> psi_rep(const RepDescriptor& rep, const ProjVector& Z) {
    const Hermitian2 H = phi_rep(rep, Z);
    return {H.h11, H.h22};
}

cd upsilon(const RepDescriptor& rep, const ProjVector& Z) { return phi_rep(rep, Z).h12; }

Eigen::MatrixXcd lie_action_matrix(const RepDescriptor& rep, const LieElement& alpha) {
    const Eigen::Matrix2cd& a = alpha.matrix();
    const cd a11 = a(0, 0), a12 = a(0, 1), a21 = a(1, 0), a22 = a(1, 1);
    const cd tr = a11 + a22;
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(rep.dim(), rep.dim());
    for (int b = 1; b <= rep.r(); ++b) {
        const Summand& s = rep.summand(b);
        const Eigen::Index off = rep.block_offset(b);
        const auto k = static_cast<int>(s.k);
        for (int j = 0; j <= k; ++j) {
            A(off + j, off + j) = -(double(s.l) * tr + double(k - j) * a11 + double(j) * a22);
            if (j >= 1)
                A(off + j - 1, off + j) = -std::sqrt(double(j) * double(k - j + 1)) * a21;
            if (j < k)
                A(off + j + 1, off + j) = -std::sqrt(double(k - j) * double(j + 1)) * a12;
        }
    }
    return A;
}

double equivariance_residual(const RepDescriptor& rep, const ProjVector& Z, const LieElement& alpha, double h) {
    if (h <= 0.0)
        raise(errc::out_of_range, "equivariance_residual requires a positive step");
    const Eigen::VectorXcd flat = Z.flatten();
    if (flat.squaredNorm() <= 0.0)
        raise(errc::zero_vector, "equivariance_residual requires a nonzero vector");
    const Eigen::MatrixXcd A = lie_action_matrix(rep, alpha);
    const Eigen::MatrixXcd step = expm((h * A).eval());
    const Eigen::MatrixXcd step_back = expm((-h * A).eval());
    const Hermitian2 Hp = phi_rep(rep, ProjVector::from_flat(rep, step * flat));
    const Hermitian2 Hm = phi_rep(rep, ProjVector::from_flat(rep, step_back * flat));
    const Eigen::Matrix2cd dH = (Hp.matrix() - Hm.matrix()) / (2.0 * h);
    const Eigen::Matrix2cd H = phi_rep(rep, Z).matrix();
    const Eigen::Matrix2cd bracket = alpha.matrix() * H - H * alpha.matrix();
    return (dH - bracket).norm();
}

Eigen::Matrix2cd exp_antidiag(cd z) {
    const double t = std::abs(z);
    const cd w = sinc(t) * z;
    Eigen::Matrix2cd m;
    m << cd(std::cos(t), 0), cd(0, 1) * w, cd(0, 1) * std::conj(w), cd(std::cos(t), 0);
    return m;
}

Eigen::Matrix2cd exp_antidiag_series(cd z, int n) {
    if (n < 1)
        raise(errc::out_of_range, "exp_antidiag_series requires n >= 1");
    Eigen::Matrix2cd B;
    B << cd(0, 0), cd(0, 1) * z, cd(0, 1) * std::conj(z), cd(0, 0);
    Eigen::Matrix2cd sum = Eigen::Matrix2cd::Identity();
    Eigen::Matrix2cd term = Eigen::Matrix2cd::Identity();
    for (int m = 1; m <= n; ++m) {
        term = (term * B / double(m)).eval();
        sum += term;
    }
    return sum;
}

Hermitian2 conjugate_diag(cd z, std::pair<double, double> nu) {
    const auto [nu1, nu2] = nu;
    const double t = std::abs(z);
    const double c = std::cos(t), s = std::sin(t);
    const cd u = t > 0.0 ? z / t : cd(1, 0); // z/|z|, irrelevant when sin = 0
    Hermitian2 H;
    H.h11 = nu1 * c * c + nu2 * s * s;
    H.h22 = nu2 * c * c + nu1 * s * s;
    H.h12 = cd(0, 1) * (nu2 - nu1) * c * s * u;
    return H;
}

double weighted_moment(std::span<const double> a, std::span<const double> d, const Eigen::VectorXcd& Z) {
    if (a.size() != d.size() || static_cast<Eigen::Index>(a.size()) != Z.size())
        raise(errc::length_mismatch, "weighted_moment requires weights and coordinates of equal length");
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double m = d[j] * std::norm(Z(static_cast<Eigen::Index>(j)));
        num += a[j] * m;
        den += m;
    }
    if (den <= 0.0)
        raise(errc::zero_vector, "weighted_moment requires a vector of positive weighted norm");
    return num / den;
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& A) {
    const double nrm = A.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    Eigen::MatrixXcd B = A;
    if (nrm > 0.25) {
        squarings = std::max(0, static_cast<int>(std::ceil(std::log2(nrm / 0.25))));
        B /= std::pow(2.0, squarings);
    }
    const Eigen::Index n = A.rows();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
    for (int m = 1; m <= 24; ++m) {
        term = (term * B / double(m)).eval();
        sum += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18)
            break;
    }
    for (int i = 0; i < squarings; ++i)
        sum = (sum * sum).eval();
    return sum;
}

} // namespace conred
