#include "support.hpp"

namespace mrgp {
namespace {

using test::E;
using test::F;

TEST(Field, ParsesNames) {
  EXPECT_TRUE(parse_field("Q").is_rational());
  EXPECT_TRUE(parse_field("rational").is_rational());
  EXPECT_EQ(parse_field("Q(sqrt 5)").d(), 5);
  EXPECT_EQ(parse_field("Q(sqrt(-3))").d(), -3);
  EXPECT_EQ(parse_field("Q(sqrt2)").d(), 2);
  EXPECT_EQ(parse_field(" Q( sqrt -1 ) ").d(), -1);
}

TEST(Field, RejectsBadInput) {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const MathError& e) {
      return e.kind();
    }
    return ErrorKind::internal;
  };
  EXPECT_EQ(kind_of([] { make_field(4); }), ErrorKind::non_squarefree);
  EXPECT_EQ(kind_of([] { make_field(-12); }), ErrorKind::non_squarefree);
  EXPECT_EQ(kind_of([] { make_field(0); }), ErrorKind::invalid_d);
  EXPECT_EQ(kind_of([] { make_field(1); }), ErrorKind::invalid_d);
  EXPECT_EQ(kind_of([] { parse_field("R(sqrt 2)"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { parse_field("Q(sqrt x)"); }), ErrorKind::parse_error);
  EXPECT_EQ(kind_of([] { E(F(1), 1, 1); }), ErrorKind::field_mismatch);
  EXPECT_EQ(kind_of([] { E(F(2), 1) + E(F(3), 1); }), ErrorKind::field_mismatch);
}

TEST(Field, BasisChoice) {
  EXPECT_EQ(F(2).basis(), BasisMode::omega_sqrt);
  EXPECT_EQ(F(3).basis(), BasisMode::omega_sqrt);
  EXPECT_EQ(F(5).basis(), BasisMode::omega_half);
  EXPECT_EQ(F(-3).basis(), BasisMode::omega_half);
  EXPECT_EQ(F(-7).basis(), BasisMode::omega_half);
  EXPECT_EQ(F(-1).basis(), BasisMode::omega_sqrt);
  EXPECT_EQ(F(-5).basis(), BasisMode::omega_sqrt);
}

TEST(Field, OmegaSquared) {
  for (std::int64_t d : {2, 3, 5, 13, -1, -3, -7, -5}) {
    const QuadField f = F(d);
    const QuadInt w = omega(f);
    // w satisfies its minimal polynomial w^2 - Tr(w) w + N(w) = 0
    EXPECT_TRUE((w * w - w * trace(w) + norm(w)).is_zero()) << d;
    // (2w - Tr w)^2 = D, i.e. sqrt(D) lies in Z[w] with the right square
    const QuadInt r = w * Int(2) - trace(w);
    const Int scale = f.basis() == BasisMode::omega_half ? 1 : 4;
    EXPECT_EQ(r * r, from_integer(f, Int(d) * scale)) << d;
  }
}

TEST(Field, NormTraceConjugate) {
  const QuadField f = F(5);
  const QuadInt x = E(f, 3, 2);  // 3 + 2w = 4 + sqrt 5
  EXPECT_EQ(norm(x), 11);
  EXPECT_EQ(trace(x), 8);
  EXPECT_EQ(x * conjugate(x), from_integer(f, 11));
  EXPECT_EQ(conjugate(conjugate(x)), x);
  const QuadField q = F(1);
  EXPECT_EQ(norm(E(q, -7)), -7);
  EXPECT_EQ(conjugate(E(q, -7)), E(q, -7));
}

TEST(Field, Division) {
  const QuadField f = F(2);
  const QuadInt a = E(f, 3, 1);
  const QuadInt b = E(f, 5, -2);
  EXPECT_EQ(exact_div(a * b, b), a);
  EXPECT_TRUE(divides(b, a * b));
  EXPECT_FALSE(divides(E(f, 3), E(f, 1, 1)));
  EXPECT_THROW(exact_div(E(f, 1), E(f, 2)), MathError);
  EXPECT_THROW(exact_div(E(f, 1), E(f, 0)), MathError);
  // 1 + sqrt 2 is a unit, so it divides everything
  EXPECT_TRUE(divides(E(f, 1, 1), E(f, 7, 3)));
}

TEST(Field, RealSign) {
  const QuadField f = F(2);
  EXPECT_EQ(real_sign(E(f, -1, 1)), 1);    // sqrt 2 - 1
  EXPECT_EQ(real_sign(E(f, 1, -1)), -1);   // 1 - sqrt 2
  EXPECT_EQ(real_sign(E(f, 99, -70)), 1);  // 99 - 70 sqrt 2 ~ 0.00505
  EXPECT_EQ(real_sign(E(f, -99, 70)), -1);
  EXPECT_EQ(real_sign(E(f, 0)), 0);
  const QuadField g = F(5);
  EXPECT_EQ(real_sign(E(g, -1, 1)), 1);  // w - 1 ~ 0.618
  EXPECT_EQ(real_sign(E(g, 2, -2)), -1);  // 2 - 2w = 1 - sqrt 5
  EXPECT_THROW(real_sign(E(F(-1), 1, 1)), MathError);
}

TEST(Field, Embeddings) {
  const QuadField f = F(5);
  const QuadInt w = omega(f);
  EXPECT_NEAR(real_embedding(w).get_d(), (1 + std::sqrt(5.0)) / 2, 1e-12);
  const auto [l1, l2] = log_abs_embeddings(pow(w, 40));
  EXPECT_NEAR(l1, 40 * std::log((1 + std::sqrt(5.0)) / 2), 1e-9);
  EXPECT_NEAR(l2, -l1, 1e-9);
}

TEST(Field, TextRoundTrip) {
  const QuadField f = F(5);
  const QuadInt x = E(f, 16, -24);  // 4 - 24 w
  EXPECT_EQ(to_string(x), "16 - 24*w");
  EXPECT_EQ(parse_element(f, to_string(x)), x);
  EXPECT_EQ(parse_element(f, to_sqrt_string(x)), x);
  EXPECT_EQ(to_sqrt_string(omega(f)), "(1 + 1*sqrt(5))/2");
  EXPECT_EQ(parse_element(f, "56 - 24*sqrt(5)"), E(f, 80, -48));
  EXPECT_EQ(parse_element(f, "(1+sqrt5)/2"), omega(f));
  EXPECT_EQ(parse_element(F(-1), "-i"), E(F(-1), 0, -1));
  EXPECT_EQ(parse_element(F(1), "-17"), E(F(1), -17));
  EXPECT_THROW(parse_element(f, "(1+sqrt(5)"), MathError);
  EXPECT_THROW(parse_element(f, "2*"), MathError);
  EXPECT_THROW(parse_element(F(1), "1+w"), MathError);
  EXPECT_THROW(parse_element(f, "(sqrt(5))/2"), MathError);
}

TEST(Field, Powers) {
  const QuadField f = F(2);
  const QuadInt e = E(f, 1, 1);
  EXPECT_EQ(pow(e, 0), E(f, 1));
  EXPECT_EQ(pow(e, 3), E(f, 7, 5));
  EXPECT_EQ(unit_pow(e, -3), E(f, -7, 5));
  EXPECT_EQ(unit_pow(e, -3) * pow(e, 3), E(f, 1));
}

}  // namespace
}  // namespace mrgp
