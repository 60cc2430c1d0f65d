#include "qgain/quaternion.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace qgg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_components(std::string_view token) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = token.find(',', start);
    if (comma == std::string_view::npos) {
      parts.push_back(trim(token.substr(start)));
      break;
    }
    parts.push_back(trim(token.substr(start, comma - start)));
    start = comma + 1;
  }
  if (parts.size() != 4) {
    throw std::invalid_argument("quaternion token '" + std::string(token) +
                                "' must have exactly 4 comma-separated components");
  }
  return parts;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

double parse_decimal(std::string_view text) {
  // std::from_chars for double is not available on every toolchain we target.
  std::string owned(text);
  std::istringstream in(owned);
  in.imbue(std::locale::classic());
  double value = 0.0;
  in >> value;
  if (in.fail() || !in.eof()) {
    throw std::invalid_argument("'" + owned + "' is not a decimal number");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const std::size_t slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("'" + std::string(text) + "' is not a rational a/b");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("'" + std::string(text) + "' has a zero denominator");
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

ExactQuaternion cayley_unit(const ExactQuaternion& v) {
  if (!is_pure(v)) throw std::invalid_argument("cayley_unit: argument must be pure imaginary");
  const ExactQuaternion one = ExactQuaternion::identity();
  // 1 - v vanishes only for v = 1, which is not pure.
  return (one + v) * inverse(one - v);
}

const std::array<ExactQuaternion, 8>& lipschitz_units() {
  static const std::array<ExactQuaternion, 8> units = {
      ExactQuaternion::identity(), -ExactQuaternion::identity(),
      ExactQuaternion::i(),        -ExactQuaternion::i(),
      ExactQuaternion::j(),        -ExactQuaternion::j(),
      ExactQuaternion::k(),        -ExactQuaternion::k(),
  };
  return units;
}

FloatQuaternion to_float(const ExactQuaternion& q) {
  return FloatQuaternion(q.w().get_d(), q.x().get_d(), q.y().get_d(), q.z().get_d());
}

std::string to_token(const ExactQuaternion& q) {
  return q.w().get_str() + "," + q.x().get_str() + "," + q.y().get_str() + "," + q.z().get_str();
}

ExactQuaternion parse_token(std::string_view token) {
  const auto parts = split_components(token);
  return ExactQuaternion(parse_rational(parts[0]), parse_rational(parts[1]),
                         parse_rational(parts[2]), parse_rational(parts[3]));
}

FloatQuaternion parse_float_token(std::string_view token) {
  const auto parts = split_components(token);
  double c[4];
  for (int t = 0; t < 4; ++t) {
    if (parts[t].find_first_of(".eE") == std::string_view::npos) {
      c[t] = parse_rational(parts[t]).get_d();
    } else {
      c[t] = parse_decimal(parts[t]);
    }
  }
  return FloatQuaternion(c[0], c[1], c[2], c[3]);
}

std::ostream& operator<<(std::ostream& os, const ExactQuaternion& q) { return os << to_token(q); }

std::ostream& operator<<(std::ostream& os, const FloatQuaternion& q) {
  return os << q.w() << ',' << q.x() << ',' << q.y() << ',' << q.z();
}

}  // namespace qgg
