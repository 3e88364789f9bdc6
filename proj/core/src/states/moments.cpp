#include "so32bec/states/moments.hpp"

namespace so32bec {

ClosedMoments closed_form_moments(const CoherentParams& v, const DisplacementParams& d) {
  const Complex za = d.za(), zb = d.zb();
  const double za2 = std::norm(za), zb2 = std::norm(zb);
  const double sh = std::sinh(v.r), ch = std::cosh(v.r);
  const double sh2 = sh * sh, ch2 = ch * ch;
  const double s2r = std::sinh(2.0 * v.r);
  const double st = std::sin(v.theta), ct = std::cos(v.theta);
  const double s2t = std::sin(2.0 * v.theta);
  auto phase = [](double x) { return std::exp(Complex(0.0, x)); };

  ClosedMoments out;
  out.m.na = za2 + sh2;
  out.m.nb = zb2 + sh2;

  const Complex a_term = std::conj(za) * std::conj(za) * phase(v.phi + v.psi) +
                         za * za * phase(-(v.phi + v.psi));
  out.m.na2 = (za2 + sh2) * (za2 + sh2) + ch2 * (za2 + sh2) + za2 * sh2 -
              0.5 * s2r * st * a_term.real();

  const Complex b_term = std::conj(zb) * std::conj(zb) * phase(v.psi - v.phi) +
                         zb * zb * phase(v.phi - v.psi);
  out.m.nb2 = (zb2 + sh2) * (zb2 + sh2) + ch2 * (zb2 + sh2) + zb2 * sh2 +
              0.5 * s2r * st * b_term.real();

  Complex cross = (za2 + sh2) * (zb2 + sh2) + ch2 * sh2 * ct * ct +
                  0.5 * s2r * ct *
                      (phase(v.psi) * std::conj(za) * std::conj(zb) +
                       phase(-v.psi) * za * zb) -
                  2.0 * za * std::conj(zb) * sh2 * s2t * std::sin(v.phi);
  out.m.nanb = cross.real();
  out.imag_residual = std::abs(cross.imag());
  return out;
}

MomentSet brute_force_moments(const StateVector& s) {
  const ModeIndex a0{Species::a, 0}, b0{Species::b, 0};
  const PolyC na(BosonMonomial::number(a0), Complex(1.0));
  const PolyC nb(BosonMonomial::number(b0), Complex(1.0));

  auto mean = [&s](const PolyC& p) { return expectation(s, lift(p, s.space())).real(); };

  MomentSet m;
  m.na = mean(na);
  m.nb = mean(nb);
  m.na2 = mean(na * na);
  m.nb2 = mean(nb * nb);
  m.nanb = mean(na * nb);
  return m;
}

}  // namespace so32bec
