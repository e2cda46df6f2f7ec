#pragma once

// Stationary moments and the adiabatic cooling rate of the linearised
// atom-membrane model, written once for any arithmetic lane type V
// (double, or a SIMD wrapper with + - * / and broadcast from double).
// Both instantiations evaluate the same expression tree, so results agree
// bit for bit as long as the build does not contract into FMA.

namespace cpcool::kernels {

template <class V>
struct ClosedForm {
  V n;          // fluctuation occupation <da^+ da>
  V m;          // flexural occupation
  V k[13];      // k[1]..k[12]; k[0] unused
  V lambda3;
  V mu3;
  V gamma_eff;  // > 0 means m relaxes, m(t) = a e^{-gamma_eff t} + m_ss
};

template <class V>
inline V sq(V x) {
  return x * x;
}

/// omega, nu, g, gamma: rad/s. a = |alpha|^2.
template <class V>
inline ClosedForm<V> closed_form(V w, V nu, V g, V G, V a) {
  const V zero(0.0);
  const V G2 = sq(G);
  const V G4 = sq(G2);
  const V w2 = sq(w);
  const V g2 = sq(g);
  const V g4 = sq(g2);
  const V nu2 = sq(nu);
  const V a2 = sq(a);
  const V a3 = a2 * a;
  const V a4 = sq(a2);

  ClosedForm<V> r;
  r.mu3 = nu * (G2 + V(4.0) * w2) + V(16.0) * g2 * w * a;
  r.lambda3 = nu * (G2 + w2) + V(9.0) * g2 * w * a;
  const V mu3 = r.mu3;
  const V lam3 = r.lambda3;
  const V lm = lam3 * mu3;
  const V common = (G2 + w2) * (G2 + V(4.0) * w2);

  r.k[0] = zero;
  r.k[1] = -(V(2.0) * (G2 * g * a - V(4.0) * g * w2 * a)) / mu3;
  r.k[2] = zero;
  r.k[3] = -(V(2.0) * (G2 * nu * a + V(8.0) * g2 * w * a2)) / mu3;
  r.k[4] = V(4.0) * G * (nu * w * a + V(2.0) * g2 * a2) / mu3;
  r.k[5] = g / lm *
           (V(4.0) * g2 * w * a3 * (V(5.0) * G2 - V(16.0) * w2) +
            V(2.0) * a2 * (V(2.0) * G4 * nu + G2 * w * (V(8.0) * g2 - V(7.0) * nu * w) +
                           V(8.0) * g2 * w2 * w) +
            a * nu * common);
  r.k[6] = zero;
  r.k[7] = G * g / (V(2.0) * w * lm) *
           (V(16.0) * g2 * w * a3 * (G2 - V(5.0) * w2) -
            V(2.0) * w * a2 * (nu * w * (V(8.0) * w2 - G2) + V(8.0) * g2 * (G2 + w2)) -
            a * nu * common);
  r.k[8] = g / (w * lm) *
           (V(96.0) * g4 * w2 * a4 +
            V(2.0) * nu * w * a2 * (V(3.0) * G2 * nu * w + V(2.0) * g2 * (V(7.0) * G2 + V(16.0) * w2)) +
            V(16.0) * g2 * w * a3 * (G2 * nu + V(2.0) * w * (V(6.0) * g2 + nu * w)) +
            a * nu2 * common);
  r.k[9] = -(V(2.0) * g2) / (nu * lm) *
           (V(2.0) * g2 * w * a3 * (G2 + V(4.0) * w2) +
            V(2.0) * a2 *
                (G4 * nu - V(4.0) * G2 * w * (nu * w - V(2.0) * g2) +
                 V(4.0) * w2 * w * (V(2.0) * g2 + nu * w)) +
            a * nu * common);
  r.k[10] = zero;
  // |alpha|^4 multiplies all three groups.
  r.k[11] = a2 / (w * lm) *
            (-(V(16.0) * g4 * w * a2 * (G2 - V(8.0) * w2)) +
             V(16.0) * a * g2 * w * (G2 * nu * w + g2 * (G2 - V(2.0) * w2)) +
             nu * (G2 - V(2.0) * w2) * (V(2.0) * G2 * nu * w + g2 * (G2 + V(4.0) * w2)));
  r.k[12] = -(G * a2) / lm *
            (V(96.0) * g4 * w * a2 +
             V(16.0) * a * g2 * (G2 * nu + w * (V(3.0) * g2 + V(2.0) * nu * w)) +
             V(3.0) * nu * (V(2.0) * G2 * nu * w + g2 * (G2 + V(4.0) * w2)));

  const V two_w_lm = V(2.0) * w * lm;
  r.n = -(-(V(2.0) * G4 * nu2 * w * a) - V(2.0) * G2 * nu2 * w2 * w * a -
          V(16.0) * G2 * g4 * w * a3 + V(16.0) * G2 * g4 * w * a2 -
          V(64.0) * g4 * w2 * w * a3) / two_w_lm -
        (V(16.0) * g4 * w2 * w * a2 + G4 * g2 * nu * a - V(36.0) * G2 * g2 * nu * w2 * a2 +
         V(5.0) * G2 * g2 * nu * w2 * a + V(4.0) * g2 * nu * w2 * w2 * a) / two_w_lm;

  const V nu3 = nu2 * nu;
  const V nu4 = nu2 * nu2;
  const V w3 = w2 * w;
  const V w4 = w2 * w2;
  const V m_first = -((G2 + w2) *
                      (-(V(48.0) * g2 * w * a) - V(3.0) * G2 * nu + V(4.0) * nu3 - V(12.0) * nu * w2)) /
                    (V(48.0) * nu * w * lam3);
  const V m_second = a *
                     (V(16.0) * G2 * g2 * w * a + V(48.0) * g2 * nu2 * w * a - V(32.0) * g2 * w3 * a +
                      G4 * nu + V(4.0) * G2 * nu3 + V(2.0) * G2 * nu * w2 + V(8.0) * nu3 * w2 -
                      V(8.0) * nu * w4) /
                     (V(32.0) * nu * w * lam3);
  const V m_third = (G2 * g * a - V(4.0) * g * w2 * a) *
                    (-(V(192.0) * g4 * w2 * a2) + V(16.0) * g2 * nu3 * w * a - G4 * nu2 -
                     V(4.0) * G2 * nu4 + V(18.0) * G2 * nu2 * w2 + V(8.0) * nu4 * w2 -
                     V(8.0) * nu2 * w4) /
                    (V(32.0) * g * nu * w * lm);
  // Constant term enters with a minus sign.
  const V m_fourth = (V(3.0) * w - V(2.0) * nu) / (V(6.0) * w);
  r.m = m_first + m_second + m_third - m_fourth;

  const V rate_num = V(64.0) * G * g2 * lam3 * nu2 * w * a;
  const V rate_den =
      V(32.0) * g2 * w * a *
          (V(8.0) * g2 * w * a * (G2 - V(3.0) * nu2 + w2) +
           nu * (G4 + V(5.0) * w2 * (G2 - V(2.0) * nu2) - G2 * nu2 + V(4.0) * nu4 + V(4.0) * w4)) +
      nu2 * (G2 + w2) * (G4 + V(8.0) * G2 * (nu2 + w2) + V(16.0) * sq(nu2 - w2));
  r.gamma_eff = -(rate_num / rate_den);
  return r;
}

/// Amplitude of m(t) = a e^{-gamma_eff t} + m_ss for initial occupation m0,
/// evaluated from the explicit adiabatic-elimination expression.
template <class V>
inline V cooling_amplitude(V w, V nu, V g, V G, V a, V m0) {
  const V G2 = sq(G);
  const V G4 = sq(G2);
  const V w2 = sq(w);
  const V g2 = sq(g);
  const V g4 = sq(g2);
  const V nu2 = sq(nu);
  const V a2 = sq(a);
  const V a3 = a2 * a;
  const V a4 = sq(a2);
  const V s = V(2.0) * m0 + V(1.0);

  const V t1 = V(32.0) * g4 * w2 * a4 * (G2 + V(4.0) * (V(3.0) * nu2 + w2));
  const V t2 = V(16.0) * g2 * w * a3 *
               (G4 * nu + V(2.0) * G2 * (V(8.0) * g2 * w + V(2.0) * nu2 * nu + nu * w2) -
                V(8.0) * w *
                    (g2 * (-(V(6.0) * nu2) + V(9.0) * nu * s * w - V(2.0) * w2) - nu2 * nu * w +
                     nu * w2 * w));
  const V t3 = a * nu2 * (G2 + w2) * (G2 + V(4.0) * w2) *
               (G2 + V(4.0) * (nu2 - V(2.0) * nu * s * w + w2));
  const V t4 = V(2.0) * nu * w * a2 *
               (G2 * nu * w * (V(7.0) * G2 + V(12.0) * nu2 - V(20.0) * w2) +
                V(4.0) * g2 *
                    (V(4.0) * G4 + G2 * (V(14.0) * nu2 - V(25.0) * s * nu * w + V(20.0) * w2) +
                     V(4.0) * w2 * (V(8.0) * nu2 - V(13.0) * s * nu * w + V(4.0) * w2)));
  const V numerator = (t1 + t2 + t3 + t4) / (nu * w);
  const V denominator =
      V(16.0) * (g2 * w * a2 * (V(25.0) * G2 * nu + V(144.0) * a * g2 * w + V(52.0) * nu * w2) +
                 a * nu2 * (G2 + w2) * (G2 + V(4.0) * w2));
  // The expression yields m_ss - m0; flip to the decaying convention.
  return -(numerator / denominator);
}

}  // namespace cpcool::kernels
