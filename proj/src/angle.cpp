#include "permspec/angle.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace permspec {

namespace {

constexpr int kNamedDigits = 60;

Rat truncated_sqrt_frac(int radicand) {
    // floor(sqrt(radicand) * 10^60) mod 10^60, over 10^60
    const Int scale = pow10(kNamedDigits);
    const Int root = isqrt(Int(radicand) * scale * scale);
    return Rat(root % scale, scale);
}

Rat truncated_phi_frac() {
    // floor((1 + sqrt(5))/2 * 10^60) mod 10^60, over 10^60
    const Int scale = pow10(kNamedDigits);
    const Int root5 = isqrt(Int(5) * scale * scale);
    const Int phi_floor = (scale + root5) / 2;
    return Rat(phi_floor % scale, scale);
}

}  // namespace

Angle::Angle(Rat value) : value_(std::move(value)) {
    if (value_ < 0 || value_ >= 1) throw std::invalid_argument("Angle: value must lie in [0,1)");
}

Angle Angle::from_decimal(std::string_view text) {
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '0') ++pos;
    if (pos >= text.size() || text[pos] != '.')
        throw std::invalid_argument("Angle: expected a decimal literal in [0,1) like 0.4142...");
    ++pos;
    std::string digits;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("Angle: invalid character in decimal literal");
        digits.push_back(text[pos]);
    }
    if (digits.empty()) throw std::invalid_argument("Angle: no fractional digits");
    std::size_t lead = 0;
    while (lead < digits.size() && digits[lead] == '0') ++lead;
    if (digits.size() - lead < 40)
        throw std::invalid_argument(
            "Angle: decimal literal needs at least 40 significant digits; "
            "use a named constant or supply more digits");
    const Int num(digits);
    const Int den = pow10(static_cast<int>(digits.size()));
    return Angle(Rat(num, den));
}

Angle Angle::from_rational(const Rat& value) { return Angle(frac_part(value)); }

Angle Angle::named(std::string_view name) {
    if (name == "sqrt2") return Angle(truncated_sqrt_frac(2));
    if (name == "sqrt3") return Angle(truncated_sqrt_frac(3));
    if (name == "sqrt5") return Angle(truncated_sqrt_frac(5));
    if (name == "sqrt6") return Angle(truncated_sqrt_frac(6));
    if (name == "phi") return Angle(truncated_phi_frac());
    throw std::invalid_argument("Angle: unknown named constant '" + std::string(name) + "'");
}

bool Angle::is_named(std::string_view name) {
    return name == "sqrt2" || name == "sqrt3" || name == "sqrt5" || name == "sqrt6" ||
           name == "phi";
}

std::vector<std::string> Angle::named_list() { return {"sqrt2", "sqrt3", "sqrt5", "sqrt6", "phi"}; }

double Angle::to_double() const { return static_cast<double>(value_); }

Int floor_scaled(const Angle& a, const Int& L) {
    if (L < 0) throw std::invalid_argument("floor_scaled: L must be non-negative");
    return (L * boost::multiprecision::numerator(a.value())) /
           boost::multiprecision::denominator(a.value());
}

Rat frac_part(const Rat& x) {
    const Int num = boost::multiprecision::numerator(x);
    const Int den = boost::multiprecision::denominator(x);
    Int r = num % den;
    if (r < 0) r += den;
    return Rat(r, den);
}

Rat frac_diff(const Angle& alpha, const Angle& beta, const Int& j) {
    return frac_part(Rat(j) * alpha.value()) - frac_part(Rat(j) * beta.value());
}

Interval::Interval(Angle a, Angle b) : alpha(std::move(a)), beta(std::move(b)) {
    if (!(alpha.value() < beta.value()))
        throw std::invalid_argument("Interval: requires alpha < beta");
}

bool near_integer_product(const Interval& I, const Int& L) {
    const double Ld = static_cast<double>(L);
    const double tol = Ld * 1e-40;
    for (const Angle* a : {&I.alpha, &I.beta}) {
        const double x = Ld * a->to_double();
        if (std::abs(x - std::round(x)) < tol) return true;
    }
    return false;
}

FracSequence::FracSequence(const Angle& a)
    : num_(boost::multiprecision::numerator(a.value())),
      den_(boost::multiprecision::denominator(a.value())),
      current_(0) {}

const Int& FracSequence::next() {
    current_ += num_;
    if (current_ >= den_) current_ -= den_;
    ++j_;
    return current_;
}

}  // namespace permspec
