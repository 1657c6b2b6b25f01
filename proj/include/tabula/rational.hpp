#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace tabula {

/// Exact nonnegative fraction, always kept in lowest terms (zero is 0/1).
///
/// Durations and time positions of the tablature are sums of powers of two
/// with at most a factor 3, so 64-bit components are far from overflow;
/// operations still cross-reduce before multiplying.
class Rational
{
public:
	using Int = std::int64_t;

	constexpr Rational() noexcept = default;

	/// Reduced num/den. Throws std::invalid_argument when den == 0 or
	/// either component is negative.
	static Rational make(Int num, Int den);

	constexpr Int num() const noexcept { return num_; }
	constexpr Int den() const noexcept { return den_; }

	friend Rational operator+(Rational a, Rational b);
	friend Rational operator*(Rational a, Rational b);
	Rational& operator+=(Rational b) { return *this = *this + b; }
	Rational& operator*=(Rational b) { return *this = *this * b; }

	friend constexpr bool operator==(Rational const&, Rational const&) = default;
	friend std::strong_ordering operator<=>(Rational a, Rational b);

	std::string str() const;

private:
	constexpr Rational(Int num, Int den) noexcept : num_(num), den_(den) {}

	Int num_ = 0;
	Int den_ = 1;
};

inline Rational rat_make(Rational::Int num, Rational::Int den) { return Rational::make(num, den); }
inline Rational rat_add(Rational a, Rational b) { return a + b; }
inline Rational rat_mul(Rational a, Rational b) { return a * b; }
inline std::strong_ordering rat_cmp(Rational a, Rational b) { return a <=> b; }

std::ostream& operator<<(std::ostream& os, Rational r);

} // namespace tabula
