#include "asua/rational.hpp"

#include "asua/error.hpp"

#include <cctype>
#include <string>

namespace asua {

std::string format_fraction(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string format_decimal(const Rational& r, unsigned places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);

  mpz_class num = abs(r.get_num()) * scale;
  const mpz_class& den = r.get_den();
  mpz_class q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * rem >= den) ++q;

  std::string digits = q.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out;
  if (sgn(r) < 0 && q != 0) out.push_back('-');
  out.append(digits, 0, digits.size() - places);
  if (places > 0) {
    out.push_back('.');
    out.append(digits, digits.size() - places, places);
  }
  return out;
}

std::string format_compact(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return format_fraction(r);
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                          : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  std::string num_str(num);
  if (!num_str.empty() && num_str.front() == '+') num_str.erase(0, 1);
  Rational r{mpz_class(num_str), mpz_class(std::string(den))};
  if (r.get_den() == 0)
    throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

}  // namespace asua
