#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "conred/rep.hpp"

namespace conred {

using cd = std::complex<double>;

// The Hermitian matrix H = -i Phi; all moment-map values are stated as H.
struct Hermitian2 {
    double h11 = 0.0;
    double h22 = 0.0;
    cd h12{0.0, 0.0};

    Eigen::Matrix2cd matrix() const {
        Eigen::Matrix2cd m;
        m << cd(h11, 0.0), h12, std::conj(h12), cd(h22, 0.0);
        return m;
    }
    double trace() const { return h11 + h22; }
    double det() const { return h11 * h22 - std::norm(h12); }
    // Eigenvalues in descending order, from the closed 2x2 form.
    std::pair<double, double> eigenvalues() const;
};

Hermitian2 operator+(const Hermitian2& a, const Hermitian2& b);
Hermitian2 operator*(double c, const Hermitian2& h);
double frobenius_distance(const Hermitian2& a, const Hermitian2& b);

// An element of u(2): a 2x2 skew-Hermitian matrix, checked at construction.
class LieElement {
public:
    explicit LieElement(const Eigen::Matrix2cd& m);
    const Eigen::Matrix2cd& matrix() const { return m_; }

    static LieElement eta();   // [[0, 1], [-1, 0]]
    static LieElement xi();    // [[0, i], [i, 0]]
    static LieElement rho();   // [[i, 0], [0, 0]]
    static LieElement gamma(); // [[0, 0], [0, i]]

private:
    Eigen::Matrix2cd m_;
};

// A point of the representation space split into per-summand blocks.
struct ProjVector {
    std::vector<Eigen::VectorXcd> blocks;

    static ProjVector from_flat(const RepDescriptor& rep, const Eigen::VectorXcd& flat);
    static ProjVector basis_vector(const RepDescriptor& rep, IndexPair idx);
    Eigen::VectorXcd flatten() const;
    double squared_norm() const;
};

// The pair (F1, F2) with F1_j = sqrt(k - j + 1) z_{j-1}, F2_j = sqrt(j) z_j.
std::pair<Eigen::VectorXcd, Eigen::VectorXcd> f_pair(int k, const Eigen::VectorXcd& Zb);

// Moment matrix of one summand; for k = 0 this is the constant l * I.
Hermitian2 phi_block(int k, std::int64_t l, const Eigen::VectorXcd& Zb);

// Convex combination of the per-block moment matrices with weights
// |Z_a|^2 / |Z|^2; zero blocks contribute nothing.
Hermitian2 phi_rep(const RepDescriptor& rep, const ProjVector& Z);

// Diagonal part (h11, h22) of phi_rep.
std::pair<double, double> psi_rep(const RepDescriptor& rep, const ProjVector& Z);

// Off-diagonal entry h12 of phi_rep; the scalar shadow of the transverse map.
cd upsilon(const RepDescriptor& rep, const ProjVector& Z);

// Derivative of the representation as a block tridiagonal operator on C^dim.
Eigen::MatrixXcd lie_action_matrix(const RepDescriptor& rep, const LieElement& alpha);

// Frobenius norm of the central-difference equivariance defect
// | dH(alpha . Z) - [alpha, H(Z)] | at step h.
double equivariance_residual(const RepDescriptor& rep, const ProjVector& Z, const LieElement& alpha, double h);

// exp of the antidiagonal generator B_z = i [[0, z], [conj z, 0]]:
// cos(|z|) I + B_{sinc(|z|) z}, with the analytic extension at z = 0.
Eigen::Matrix2cd exp_antidiag(cd z);

// Truncated exponential series sum_{m=0}^{n} B_z^m / m!, matrix products only.
Eigen::Matrix2cd exp_antidiag_series(cd z, int n);

// The conjugated diagonal e^{B_z} D_nu e^{-B_z}, in closed form.
Hermitian2 conjugate_diag(cd z, std::pair<double, double> nu);

// Weighted moment sum a_j d_j |z_j|^2 / sum d_j |z_j|^2.
double weighted_moment(std::span<const double> a, std::span<const double> d, const Eigen::VectorXcd& Z);

// Dense matrix exponential by scaling and squaring; dimensions here are tiny.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& A);

} // namespace conred
