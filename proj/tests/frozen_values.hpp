#pragma once
// generated by tests/oracle/mint.cpp (binary128); do not edit

#include <complex>
#include <utility>

namespace frozen {

inline const std::complex<double> gamma_4p2_1p3i{-9.850063781769435215860e-01, 6.129555052047169138016e+00};
inline const std::complex<double> gamma_m3p7_2p1i{-7.195585790019687740579e-04, 5.708535082962350317203e-04};
inline const std::complex<double> gamma_12p5_m7i{9.079151271289308878284e+06, 1.747952503248503013608e+07};
inline const std::complex<double> gamma_0p1_0p2i{1.539100343386794802019e+00, -3.838491901837911260698e+00};
inline const std::complex<double> gamma_30_40i{1.874199767303780187988e+21, -1.510844503332867868596e+21};
inline const std::complex<double> rgamma_m20p5_3i{1.696353114702676332505e+22, 4.892463458040446257094e+21};
inline const std::complex<double> poch_0p3_0p7i_m4{-2.398301422709489506815e-03, 5.225691917852625698556e-02};
inline const std::complex<double> poch_1p5_m2i_9{-3.060835400390625000000e+06, 2.818895117187500000000e+06};
inline const std::complex<double> dilog_0p3_0p4i{2.665968667427404341612e-01, 4.613628918191089731891e-01};
inline const std::complex<double> dilog_m0p9_0p4i{-7.685760451658002603553e-01, 2.836571724025032203888e-01};
inline const std::complex<double> dilog_0p8{1.074794600008248359395e+00, -0.000000000000000000000e+00};
inline const std::complex<double> dilog_0p95i{-1.884863645689357209124e-01, 8.763375413342027783419e-01};
inline const std::complex<double> dilog_0p2_m0p97i{-3.334944625945119642482e-02, -9.668358470773189101526e-01};
inline const std::complex<double> gauss_q0p9_w1{7.824753711155174726730e+00, 0.000000000000000000000e+00};
inline const std::complex<double> gauss_q0p5_w2{6.566530242626247637513e+00, 0.000000000000000000000e+00};
inline const std::complex<double> h2_dougall_0p1_0p2_1p4_1p6{1.383155650879246868712e+00, 0.000000000000000000000e+00};
inline const std::complex<double> h1_m2_0p7_3{7.592248305592305555941e+00, 0.000000000000000000000e+00};
inline const std::complex<double> h1_m1_2_2{-2.500000000000000000000e-01, 0.000000000000000000000e+00};
inline const std::complex<double> h2_steep_unit{1.551566058761480164923e+01, 0.000000000000000000000e+00};
inline const std::complex<double> h2_steep_alt{-1.330962712517159221386e+00, -5.058751352916441770040e-01};
inline const std::complex<double> h1_minus1_0p3_1p7{1.754056903438475168690e+00, 0.000000000000000000000e+00};
inline const std::complex<double> binomial_0p3_0p1i_0p4{1.164093188808918441673e+00, 5.951664006999780887651e-02};
inline const std::complex<double> qpinf_0p5_0p5{2.887880950866024212789e-01, 0.000000000000000000000e+00};
inline const std::complex<double> qp_0p3_0p5_m5{2.732121000174855744011e-01, -0.000000000000000000000e+00};
inline const std::complex<double> qp_cplx_7{1.920949899984277205695e-01, -8.819361637401667255668e-02};
inline const std::complex<double> qpinf_cplx{2.661224741711732826897e-01, 3.246335516888810877375e-01};
inline const std::complex<double> qgamma_3p5_0p9{3.019487697499517527616e+00, 0.000000000000000000000e+00};
inline const std::complex<double> psi11_real{-1.754071449978513975229e-01, 0.000000000000000000000e+00};
inline const std::complex<double> psi11_cplx{2.656351842839730274993e-01, -5.325590660936726046838e-01};
inline const std::complex<double> psi66_bailey{-6.144065086977351372610e-01, 0.000000000000000000000e+00};
inline const std::complex<double> ram_m2_closed{1.766011251496275705287e+00, 0.000000000000000000000e+00};
inline const std::complex<double> m3cos_a0{1.828250024371683577563e+00, 0.000000000000000000000e+00};
inline const std::complex<double> cauchy_1p3_0p4_0p1i{1.780948198938937209578e+00, -2.959708888201129914585e-02};
inline const std::complex<double> fourier_m1_0p6_0p3_t1{1.705739054148067118716e+00, 2.577972438992181079554e-01};
inline const std::complex<double> qfourier_m1{9.941187027517993987404e-01, 2.201473792305813680602e-02};
inline const std::complex<double> qfourier_m2{3.666526610132571374105e-01, 1.054264338455335854545e-01};
inline const std::complex<double> qbeta_full_0p5{5.635305138544539274581e+00, 0.000000000000000000000e+00};
inline const std::complex<double> qbeta_full_cplx_alpha{1.967593348940559750372e+00, -1.642688233155840450556e-01};

inline const std::pair<const char*, std::complex<double>> all[] = {
    {"gamma_4p2_1p3i", gamma_4p2_1p3i},
    {"gamma_m3p7_2p1i", gamma_m3p7_2p1i},
    {"gamma_12p5_m7i", gamma_12p5_m7i},
    {"gamma_0p1_0p2i", gamma_0p1_0p2i},
    {"gamma_30_40i", gamma_30_40i},
    {"rgamma_m20p5_3i", rgamma_m20p5_3i},
    {"poch_0p3_0p7i_m4", poch_0p3_0p7i_m4},
    {"poch_1p5_m2i_9", poch_1p5_m2i_9},
    {"dilog_0p3_0p4i", dilog_0p3_0p4i},
    {"dilog_m0p9_0p4i", dilog_m0p9_0p4i},
    {"dilog_0p8", dilog_0p8},
    {"dilog_0p95i", dilog_0p95i},
    {"dilog_0p2_m0p97i", dilog_0p2_m0p97i},
    {"gauss_q0p9_w1", gauss_q0p9_w1},
    {"gauss_q0p5_w2", gauss_q0p5_w2},
    {"h2_dougall_0p1_0p2_1p4_1p6", h2_dougall_0p1_0p2_1p4_1p6},
    {"h1_m2_0p7_3", h1_m2_0p7_3},
    {"h1_m1_2_2", h1_m1_2_2},
    {"h2_steep_unit", h2_steep_unit},
    {"h2_steep_alt", h2_steep_alt},
    {"h1_minus1_0p3_1p7", h1_minus1_0p3_1p7},
    {"binomial_0p3_0p1i_0p4", binomial_0p3_0p1i_0p4},
    {"qpinf_0p5_0p5", qpinf_0p5_0p5},
    {"qp_0p3_0p5_m5", qp_0p3_0p5_m5},
    {"qp_cplx_7", qp_cplx_7},
    {"qpinf_cplx", qpinf_cplx},
    {"qgamma_3p5_0p9", qgamma_3p5_0p9},
    {"psi11_real", psi11_real},
    {"psi11_cplx", psi11_cplx},
    {"psi66_bailey", psi66_bailey},
    {"ram_m2_closed", ram_m2_closed},
    {"m3cos_a0", m3cos_a0},
    {"cauchy_1p3_0p4_0p1i", cauchy_1p3_0p4_0p1i},
    {"fourier_m1_0p6_0p3_t1", fourier_m1_0p6_0p3_t1},
    {"qfourier_m1", qfourier_m1},
    {"qfourier_m2", qfourier_m2},
    {"qbeta_full_0p5", qbeta_full_0p5},
    {"qbeta_full_cplx_alpha", qbeta_full_cplx_alpha},
};

}  // namespace frozen
