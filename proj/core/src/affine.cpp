#include "lasg/affine.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

#include "lasg/errors.hpp"

namespace lasg {

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(([+-]?[0-9]+)(?:/([0-9]+))?)");
  std::match_results<std::string_view::const_iterator> match;
  if (!std::regex_match(text.begin(), text.end(), match, pattern)) {
    throw std::invalid_argument("not a rational literal: '" +
                                std::string(text) + "'");
  }
  using boost::multiprecision::cpp_int;
  std::string num = match[1].str();
  if (num.front() == '+') num.erase(0, 1);
  cpp_int p(num);
  cpp_int q(1);
  if (match[2].matched) {
    q = cpp_int(match[2].str());
    if (q == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                  "'");
    }
  }
  return Rational(p, q);
}

std::string to_string(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational affine_product(const AffineParams& p, const Rational& a,
                        const Rational& b) {
  if (p.variant == AffineVariant::Additive) {
    return b - a - p.r;
  }
  if (a == 0 || p.r == 0) {
    throw std::domain_error("division by zero in b a^-1 r^-1 (a=" +
                            to_string(a) + ", r=" + to_string(p.r) + ")");
  }
  return b / a / p.r;
}

AffineReport check_affine_construction(const AffineParams& p,
                                       const std::vector<Rational>& points) {
  std::vector<Rational> distinct = points;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 3) {
    throw InsufficientPoints(distinct.size());
  }
  // Counterexamples carry point indices as ElemId.
  if (points.size() > 256) {
    throw std::invalid_argument("at most 256 sample points");
  }

  auto op = [&p](const Rational& a, const Rational& b) {
    return affine_product(p, a, b);
  };

  AffineReport report;
  report.left_invertive = {Law::LeftInvertive, true, std::nullopt};
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& a = points[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& b = points[j];
      const Rational ab = op(a, b);
      if (!report.non_commutative && ab != op(b, a)) {
        report.non_commutative = {a, b};
      }
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = points[k];
        ++report.triples_checked;
        const Rational lhs = op(ab, c);
        if (report.left_invertive.holds && lhs != op(op(c, b), a)) {
          report.left_invertive.holds = false;
          report.left_invertive.counterexample =
              std::vector<ElemId>{elem(i), elem(j), elem(k)};
          report.left_invertive_failure = {a, b, c};
        }
        if (!report.non_associative && lhs != op(a, op(b, c))) {
          report.non_associative = {a, b, c};
        }
      }
    }
  }
  return report;
}

}  // namespace lasg
