#include "nonroot/comparable_real.hpp"

#include "nonroot/errors.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace nonroot {

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(unsigned precision) { mpfr_init2(v_, static_cast<mpfr_prec_t>(precision)); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct Enclosure {
  MpfrValue lo;
  MpfrValue hi;
  explicit Enclosure(unsigned p) : lo(p), hi(p) {}
};

// Encloses 2 sin(pi d) for d in [0, 1/2]; sin is increasing on [0, pi/2].
void enclose(const Rational& d, Enclosure& e, unsigned precision) {
  MpfrValue pi_hi(precision), dq(precision), half_pi_lo(precision);

  mpfr_const_pi(e.lo.get(), MPFR_RNDD);
  mpfr_set_q(dq.get(), d.get_mpq_t(), MPFR_RNDD);
  mpfr_mul(e.lo.get(), e.lo.get(), dq.get(), MPFR_RNDD);
  mpfr_sin(e.lo.get(), e.lo.get(), MPFR_RNDD);
  mpfr_mul_2ui(e.lo.get(), e.lo.get(), 1, MPFR_RNDD);

  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  mpfr_set_q(dq.get(), d.get_mpq_t(), MPFR_RNDU);
  mpfr_mul(e.hi.get(), pi_hi.get(), dq.get(), MPFR_RNDU);
  mpfr_const_pi(half_pi_lo.get(), MPFR_RNDD);
  mpfr_div_2ui(half_pi_lo.get(), half_pi_lo.get(), 1, MPFR_RNDD);
  if (mpfr_cmp(e.hi.get(), half_pi_lo.get()) >= 0) {
    // The argument bound may pass the maximum of sin; 2 is always an upper bound.
    mpfr_set_ui(e.hi.get(), 2, MPFR_RNDU);
  } else {
    mpfr_sin(e.hi.get(), e.hi.get(), MPFR_RNDU);
    mpfr_mul_2ui(e.hi.get(), e.hi.get(), 1, MPFR_RNDU);
  }
}

}  // namespace

ComparableReal ComparableReal::chord_of(const Rational& angular_distance) {
  if (angular_distance < 0 || angular_distance > Rational(1, 2))
    throw std::invalid_argument("angular distance " + to_string(angular_distance) + " outside [0, 1/2]");
  return ComparableReal(angular_distance);
}

std::optional<Rational> ComparableReal::exact() const {
  if (d_ == 0) return Rational(0);
  if (d_ == Rational(1, 6)) return Rational(1);
  if (d_ == Rational(1, 2)) return Rational(2);
  return std::nullopt;
}

std::strong_ordering ComparableReal::compare(const Rational& r) const {
  if (auto v = exact()) return cmp(*v, r) <=> 0;
  for (unsigned p = kInitialPrecision; p <= kMaxPrecision; p *= 2) {
    Enclosure e(p);
    enclose(d_, e, p);
    if (mpfr_cmp_q(e.hi.get(), r.get_mpq_t()) < 0) return std::strong_ordering::less;
    if (mpfr_cmp_q(e.lo.get(), r.get_mpq_t()) > 0) return std::strong_ordering::greater;
  }
  throw Indeterminate("chord of " + to_string(d_) + " vs " + to_string(r) + " undecided at " +
                      std::to_string(kMaxPrecision) + " bits");
}

std::pair<double, double> ComparableReal::enclosure(unsigned precision) const {
  Enclosure e(precision);
  enclose(d_, e, precision);
  return {mpfr_get_d(e.lo.get(), MPFR_RNDD), mpfr_get_d(e.hi.get(), MPFR_RNDU)};
}

double ComparableReal::approx() const {
  if (auto v = exact()) return v->get_d();
  auto [lo, hi] = enclosure(kInitialPrecision);
  return (lo + hi) / 2;
}

}  // namespace nonroot
