// sobolev.hpp: anisotropic fractional Sobolev norms on the slab, the
// tangential multiplier Lambda = (1 - Delta_2)^{1/2}, vertical cutoff pairs
// (chi, psi), tangential difference quotients D and shifts tau, and the
// div-curl decomposition diagnostic.
//
// The working norm is N_s(f) = ( sum_{j=0..floor(s)} ||Lambda^{s-j}
// d3^j f||_{L2}^2 )^{1/2}: tangential-fractional times vertical-integer,
// exactly computable in the spectral-collocation representation.
#pragma once

#include "lelab/field.hpp"

namespace lelab {

// tangential difference-quotient spec: direction l in {1,2}, increment h
struct QuotientSpec {
    int direction = 1;
    double h = 1e-2;
};

// chi and psi are functions of x3 alone: chi = 1 on a neighborhood of
// Gamma_1 containing supp psi, psi = 1 nearer to Gamma_1, both vanish near
// Gamma_0. Built from the exp(-1/t) smoothstep; transition of chi is
// [z_chi_lo, z_chi_lo + chi_width], same for psi.
class CutoffPair {
  public:
    static CutoffPair standard(GridPtr grid, double z_chi_lo = 0.6, double chi_width = 0.1,
                               double z_psi_lo = 0.8, double psi_width = 0.05);

    const ScalarField& chi() const { return chi_; }
    const ScalarField& psi() const { return psi_; }
    double z_chi_lo() const { return z_chi_lo_; }
    double z_psi_lo() const { return z_psi_lo_; }

    // 0 for t<=0, 1 for t>=1, C-infinity monotone in between
    static double smoothstep(double t);

  private:
    CutoffPair() = default;
    ScalarField chi_, psi_;
    double z_chi_lo_ = 0.0, z_psi_lo_ = 0.0;
};

// tangential Fourier multiplier (1 + k1^2 + k2^2)^{sigma/2}; any real sigma
ScalarField lambda_power(const ScalarField& f, double sigma);

// N_s; throws std::invalid_argument when floor(s) > n3 - 2
double aniso_norm(const ScalarField& f, double s);
double aniso_norm(const VectorField& f, double s);

// N_s(cutoff * f), product dealiased
double localized_norm(const ScalarField& f, const ScalarField& cutoff, double s);
double localized_norm(const VectorField& f, const ScalarField& cutoff, double s);

// tau f(x) = f(x + h e_l), exact spectral translation
ScalarField shift(const ScalarField& f, const QuotientSpec& q);
VectorField shift(const VectorField& f, const QuotientSpec& q);

// D f = (tau f - f)/h
ScalarField diff_quotient(const ScalarField& f, const QuotientSpec& q);
VectorField diff_quotient(const VectorField& f, const QuotientSpec& q);

// N_s(f) against the four right-hand-side terms of the div-curl inequality
struct DivCurlDecomposition {
    double lhs;       // N_s(f)
    double l2;        // ||f||_{L2}
    double curl;      // N_{s-1}(curl f)
    double div;       // N_{s-1}(div f)
    double boundary;  // tangential-gradient trace norm at index s - 1.5
};
DivCurlDecomposition div_curl_decomposition(const VectorField& f, double s);

}  // namespace lelab
