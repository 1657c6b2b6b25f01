#include "tabula/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace tabula {

Rational Rational::make(Int num, Int den)
{
	if (den == 0)
		throw std::invalid_argument("rational with zero denominator");
	if (num < 0 || den < 0)
		throw std::invalid_argument("rational components must be nonnegative");
	if (num == 0)
		return Rational{0, 1};
	auto const g = std::gcd(num, den);
	return Rational{num / g, den / g};
}

Rational operator+(Rational a, Rational b)
{
	auto const g = std::gcd(a.den_, b.den_);
	auto const lhs = a.num_ * (b.den_ / g);
	auto const rhs = b.num_ * (a.den_ / g);
	return Rational::make(lhs + rhs, a.den_ / g * b.den_);
}

Rational operator*(Rational a, Rational b)
{
	auto const g1 = std::gcd(a.num_, b.den_);
	auto const g2 = std::gcd(b.num_, a.den_);
	return Rational::make((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

std::strong_ordering operator<=>(Rational a, Rational b)
{
	return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Rational::str() const
{
	return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, Rational r)
{
	return os << r.num() << '/' << r.den();
}

} // namespace tabula
