#include "totdk/dedekind.hpp"

#include <optional>
#include <string>

#include "totdk/arith.hpp"
#include "totdk/errors.hpp"
#include "wide.hpp"

namespace totdk {

namespace {

const Rational kHalf = Rational::make(1, 2);


}  // namespace

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational{};
  return frac(x) - kHalf;
}

Rational dedekind_naive(std::uint64_t b, std::uint64_t a, const Limits& limits) {
  if (a == 0) throw DomainError("dedekind_naive: a must be >= 1");
  if (a > limits.naive_dedekind) {
    throw ResourceError("dedekind_naive: a = " + std::to_string(a) + " exceeds naive bound " +
                        std::to_string(limits.naive_dedekind));
  }
  // For 0 < k < a, ((k/a)) = (2k - a) / 2a and ((kb/a)) = (2r - a) / 2a with
  // r = kb mod a, or 0 when r = 0. The k = a term is ((b))((1)) = 0. Every
  // summand is therefore an integer over 4a^2.
  using detail::i128;
  const auto a128 = static_cast<i128>(a);
  detail::Accumulator total;
  for (std::uint64_t k = 1; k < a; ++k) {
    const auto r = static_cast<std::uint64_t>(static_cast<detail::u128>(k) * b % a);
    if (r == 0) continue;
    total.add(detail::checked_mul(2 * static_cast<i128>(r) - a128, 2 * static_cast<i128>(k) - a128));
  }
  return Rational::make(total.value(), Integer(4) * a * a);
}

Integer reciprocity_numerator(std::uint64_t a, std::uint64_t b) {
  const Integer ia(a);
  const Integer ib(b);
  return ia * ia + ib * ib + 1 - 3 * ia * ib;
}

Rational reciprocity_rhs(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw DomainError("reciprocity_rhs: arguments must be >= 1");
  return Rational::make(reciprocity_numerator(a, b), Integer(12) * a * b);
}

namespace dedekind_step {

DedekindArgs reduce_gcd(DedekindArgs args) {
  if (args.a == 0) throw DomainError("Dedekind sum: a must be >= 1");
  const std::uint64_t g = gcd(args.b, args.a);
  return {args.b / g, args.a / g};
}

DedekindArgs reduce_mod(DedekindArgs args) {
  if (args.a == 0) throw DomainError("Dedekind sum: a must be >= 1");
  return {args.b % args.a, args.a};
}

Reciprocity reciprocity(DedekindArgs args) {
  if (args.a == 0 || args.b == 0 || gcd(args.b, args.a) != 1) {
    throw DomainError("reciprocity needs coprime positive arguments, got (" + std::to_string(args.b) + ", " +
                      std::to_string(args.a) + ")");
  }
  return {reciprocity_rhs(args.b, args.a), {args.a, args.b}};
}

}  // namespace dedekind_step

namespace {

// Unrolling s(b_k, a_k) = rhs_k - s(b_{k+1}, a_{k+1}) gives
//   s(b_0, a_0) = P_k + (-1)^k s(b_k, a_k),  P_k = sum_{i<k} (-1)^i rhs_i.
// Since 6a s(b, a) is an integer for coprime arguments, M_k = 12 a_0 a_k P_k
// is an integer, and
//   M_{k+1} = (a_{k+1} M_k + (-1)^k a_0 num_k) / a_k
// with num_k the reciprocity numerator. The loop ends at a_K = 1, where
// s(b_0, a_0) = M_K / (12 a_0). No gcd is taken per step.
struct ScaledSum {
  Integer scaled;  // M_K
  unsigned depth = 0;
};

// 128-bit version. Writing M_k = q a_k + r keeps every product below
// a_0 a_k^2; returns nullopt if anything still overflows.
std::optional<ScaledSum> scaled_sum_narrow(DedekindArgs args) {
  using detail::i128;
  const auto a0 = static_cast<i128>(args.a);
  i128 scaled = 0;
  bool positive = true;
  unsigned depth = 0;
  while (args.a > 1) {
    const auto a = static_cast<i128>(args.a);
    const auto b = static_cast<i128>(args.b);
    i128 step = 0;
    if (__builtin_mul_overflow(a * a + b * b + 1 - 3 * a * b, a0, &step)) return std::nullopt;
    if (!positive) step = -step;
    i128 head = 0;
    i128 tail = 0;
    if (__builtin_mul_overflow(scaled / a, b, &head)) return std::nullopt;
    if (__builtin_add_overflow((scaled % a) * b, step, &tail)) return std::nullopt;
    if (tail % a != 0) throw InvariantViolation("dedekind_fast: scaled accumulator is not integral");
    if (__builtin_add_overflow(head, tail / a, &scaled)) return std::nullopt;
    args = dedekind_step::reduce_mod({args.a, args.b});
    positive = !positive;
    ++depth;
  }
  return ScaledSum{detail::to_integer(scaled), depth};
}

ScaledSum scaled_sum_wide(DedekindArgs args) {
  const std::uint64_t a0 = args.a;
  Integer scaled;
  bool positive = true;
  unsigned depth = 0;
  while (args.a > 1) {
    Integer step = reciprocity_numerator(args.b, args.a) * a0;
    if (!positive) step = -step;
    const Integer numer = scaled * args.b + step;
    Integer rem;
    boost::multiprecision::divide_qr(numer, Integer(args.a), scaled, rem);
    if (rem != 0) throw InvariantViolation("dedekind_fast: scaled accumulator is not integral");
    args = dedekind_step::reduce_mod({args.a, args.b});
    positive = !positive;
    ++depth;
  }
  return {std::move(scaled), depth};
}

}  // namespace

FastDedekind dedekind_fast_traced(std::uint64_t b, std::uint64_t a) {
  using namespace dedekind_step;
  const DedekindArgs start = reduce_mod(reduce_gcd({b, a}));
  // Invariant inside both loops: gcd(b_k, a_k) = 1, a_k > 1, b_k >= 1.
  // Operands up to about 2^41 stay in 128 bits.
  ScaledSum sum;
  if (auto narrow = scaled_sum_narrow(start)) {
    sum = std::move(*narrow);
  } else {
    sum = scaled_sum_wide(start);
  }
  return {Rational::make(sum.scaled, Integer(12) * start.a), sum.depth};
}

}  // namespace totdk
