#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permspec/bigint.hpp"

namespace permspec {

// A point of the unit torus [0, 1), held as an exact rational.  Decimal
// ingestion requires at least 40 significant digits so that floor counts
// L*alpha computed from the rational stand in reliably for the intended
// irrational endpoint (documented accepted risk: a flip would need some
// L*alpha within L*10^-40 of an integer).
class Angle {
  public:
    Angle() = default;
    explicit Angle(Rat value);

    // Parses "0.41421356..." (or ".414...").  Requires >= 40 significant
    // fractional digits (leading zeros after the point do not count).
    static Angle from_decimal(std::string_view text);

    // Exact rationals reduced mod 1; no digit-count requirement.  Intended
    // for library-internal use and rational test points.
    static Angle from_rational(const Rat& value);

    // Named 60-digit constants: "sqrt2", "sqrt3", "sqrt5", "sqrt6", "phi".
    // Each is the fractional part truncated to 60 decimal digits, derived
    // from exact integer square roots (no embedded literals to mistype).
    static Angle named(std::string_view name);

    static bool is_named(std::string_view name);
    static std::vector<std::string> named_list();

    const Rat& value() const { return value_; }
    double to_double() const;

    bool operator<(const Angle& o) const { return value_ < o.value_; }
    bool operator==(const Angle& o) const { return value_ == o.value_; }

  private:
    Rat value_ = 0;
};

// floor(L * a) for integer L >= 0
Int floor_scaled(const Angle& a, const Int& L);

// fractional part of x, in [0, 1)
Rat frac_part(const Rat& x);

// {j*alpha} - {j*beta} as an exact rational
Rat frac_diff(const Angle& alpha, const Angle& beta, const Int& j);

struct Interval {
    Angle alpha;
    Angle beta;

    Interval() = default;
    Interval(Angle a, Angle b);

    Rat length() const { return beta.value() - alpha.value(); }
};

// True if L*alpha or L*beta lies within L*10^-40 of an integer, signalling
// that the rational stand-in for an irrational endpoint could flip a floor
// count.  Cheap double-precision screen for experiment diagnostics.
bool near_integer_product(const Interval& I, const Int& L);

// Streams the exact numerators of {j*a} for j = 1, 2, ... over the fixed
// denominator denominator(a).  Values are produced lazily.
class FracSequence {
  public:
    explicit FracSequence(const Angle& a);

    // numerator of {j*a} for the next j (starting at j = 1)
    const Int& next();

    const Int& denominator() const { return den_; }
    std::int64_t index() const { return j_; }

  private:
    Int num_;
    Int den_;
    Int current_;
    std::int64_t j_ = 0;
};

}  // namespace permspec
