#include "bmwf/ratfunc.hpp"

#include "bmwf/error.hpp"

namespace bmwf {

RatFunc::RatFunc(Poly num, std::string var) : num_(std::move(num)), den_(Poly(1)), var_(std::move(var)) {}

RatFunc::RatFunc(Poly num, Poly den, std::string var)
    : num_(std::move(num)), den_(std::move(den)), var_(std::move(var)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  Rational lead = den_.leading();
  if (lead != Rational(1)) {
    Rational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

void RatFunc::check_var(const RatFunc& o) const {
  // Constants carry no real dependence on the variable tag.
  if (var_ != o.var_ && !is_constant() && !o.is_constant())
    throw Error(ErrorCode::DomainMismatch, "rational functions in different variables: " + var_ + ", " + o.var_);
}

Rational RatFunc::evaluate(const Rational& x) const {
  Rational d = den_.evaluate(x);
  if (d.is_zero())
    throw Error(ErrorCode::PoleAtEvaluation, str() + " at " + var_ + "=" + x.str());
  return num_.evaluate(x) / d;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
  return RatFunc(den_, num_, var_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  check_var(o);
  if (is_constant()) var_ = o.var_;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  check_var(o);
  if (is_constant()) var_ = o.var_;
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc operator-(RatFunc a) {
  a.num_ = -a.num_;
  return a;
}

std::string RatFunc::str() const {
  if (den_ == Poly(1)) return num_.str(var_);
  return "(" + num_.str(var_) + ")/(" + den_.str(var_) + ")";
}

}  // namespace bmwf
