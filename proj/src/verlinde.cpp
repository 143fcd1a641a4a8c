#include "thetawb/verlinde.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <mpfr.h>

#include "thetawb/errors.hpp"

namespace thetawb {

namespace {

class MpfrNumber {
 public:
  explicit MpfrNumber(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrNumber() { mpfr_clear(v_); }
  MpfrNumber(const MpfrNumber&) = delete;
  MpfrNumber& operator=(const MpfrNumber&) = delete;

  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

struct Attempt {
  mpz_class rounded;
  double residual;
};

Attempt evaluate(int g, int k, mpfr_prec_t prec) {
  MpfrNumber pi(prec), angle(prec), s(prec), term(prec), sum(prec), scale(prec), frac(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_set_ui(sum.get(), 0, MPFR_RNDN);
  for (int j = 1; j <= k + 1; ++j) {
    mpfr_mul_ui(angle.get(), pi.get(), static_cast<unsigned long>(j), MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), static_cast<unsigned long>(k + 2), MPFR_RNDN);
    mpfr_sin(s.get(), angle.get(), MPFR_RNDN);
    mpfr_pow_ui(term.get(), s.get(), static_cast<unsigned long>(2 * g - 2), MPFR_RNDN);
    mpfr_ui_div(term.get(), 1, term.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  mpfr_set_ui(scale.get(), static_cast<unsigned long>(k + 2), MPFR_RNDN);
  mpfr_div_ui(scale.get(), scale.get(), 2, MPFR_RNDN);
  mpfr_pow_ui(scale.get(), scale.get(), static_cast<unsigned long>(g - 1), MPFR_RNDN);
  mpfr_mul(sum.get(), sum.get(), scale.get(), MPFR_RNDN);

  Attempt out;
  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, sum.get(), MPFR_RNDN);
  out.rounded = mpz_class(z);
  mpz_clear(z);
  mpfr_sub_z(frac.get(), sum.get(), out.rounded.get_mpz_t(), MPFR_RNDN);
  out.residual = std::fabs(mpfr_get_d(frac.get(), MPFR_RNDN));
  return out;
}

}  // namespace

VerlindeResult verlinde_su2_detailed(int g, int k) {
  if (g < 2) throw std::invalid_argument("Verlinde formula needs g >= 2");
  if (k < 1 || k > 64) throw std::invalid_argument("Verlinde level must be in [1,64]");
  constexpr double kMaxResidual = 1.0 / 4294967296.0;  // 2^-32

  long bits = 64 + static_cast<long>(std::ceil(8.0 * g * std::log2(k + 2.0)));
  for (int attempt = 0; attempt < 2; ++attempt, bits *= 2) {
    const Attempt a = evaluate(g, k, bits);
    if (a.residual < kMaxResidual && a.rounded > 0) return {a.rounded, bits, a.residual};
  }
  throw NumericIndeterminate("Verlinde sum failed the integrality gate at g=" + std::to_string(g) +
                             " k=" + std::to_string(k));
}

mpz_class sym_power_dim(int g, int n) {
  if (g < 0 || n < 0) throw std::invalid_argument("negative argument");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), (1ul << g) + static_cast<unsigned long>(n) - 1, static_cast<unsigned long>(n));
  return b;
}

mpz_class invariant_quartic_count(int g) {
  if (g < 2) throw std::invalid_argument("need g >= 2");
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(g));
  return (p + 1) / 2;
}

mpz_class even_theta_dim(int g, int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("even_theta_dim needs even n >= 2");
  if (g < 1) throw std::invalid_argument("need g >= 1");
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(g));
  return p / 2 + (mpz_class(1) << (g - 1));
}

}  // namespace thetawb
