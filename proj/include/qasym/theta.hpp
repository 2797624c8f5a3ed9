#pragma once

#include "qasym/qpochhammer.hpp"

namespace qasym {

// z split into pi * floor(z/pi) + z_pi with z_pi in [0, pi), computed with
// extended-precision pi so the residue is exact to working precision for
// |z| up to ~10^6.
struct ThetaArgument {
    Real z;
    Real z_pi;
    long floor_z_pi;
};
// shift_minus_half_pi subtracts pi/2 before reducing, inside the extended
// precision, so that shifted pole/symmetry points stay exact.
ThetaArgument reduce_mod_pi(const Real& z, const PrecisionContext& ctx,
                            bool shift_minus_half_pi = false);

enum class ThetaRoute { series, triple_product };

// theta_j(z, q), j in 1..4. The series route sums the defining bilateral
// series (pairing n with -n); the triple-product route assembles theta_4 from
// three q-Pochhammer symbols and maps the other indices onto it.
EvalResult theta_direct(int j, const Complex& z, const QPoint& q, const PrecisionContext& ctx,
                        ThetaRoute route = ThetaRoute::series);

// Closed asymptotic forms at q = 1 (real z): a Gaussian image pair in z_pi,
// with the (-1)^floor bookkeeping for the antiperiodic pair j = 1, 2.
EvalResult theta_asymptotic(int j, const Real& z, const QPoint& q, const PrecisionContext& ctx);

// theta_j'(z, q)/theta_j(z, q) by the classical Lambert-type sine series.
EvalResult theta_logderiv_direct(int j, const Real& z, const QPoint& q,
                                 const PrecisionContext& ctx);

// Closed asymptotic log-derivatives: (1/log q)[2(z_pi - pi/2) + pi coth(...)]
// for j = 1, 2 and the tanh twin for j = 3, 4.
EvalResult theta_logderiv_asymptotic(int j, const Real& z, const QPoint& q,
                                     const PrecisionContext& ctx);

// E~_{2k}(q) ~ [(theta_2(0, sqrt q) + theta_3(0, sqrt q)) / (2 sqrt i)]^(4k);
// the imaginary residue is checked against 10 eps and discarded.
EvalResult eisenstein_from_theta(long k, const QPoint& q, const PrecisionContext& ctx);

}  // namespace qasym
