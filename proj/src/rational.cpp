#include "hck/rational.hpp"

#include <regex>
#include <sstream>

#include "hck/error.hpp"

namespace hck {

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(\s*([+-]?\d+)(?:/(\d+))?\s*)");
  std::string s(text);
  std::smatch match;
  if (!std::regex_match(s, match, pattern)) {
    throw InputError("not an exact rational: '" + s + "'");
  }
  Integer num(match[1].str().front() == '+' ? match[1].str().substr(1) : match[1].str());
  Integer den(1);
  if (match[2].matched) {
    den = Integer(match[2].str());
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::int64_t floor_to_int(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q.get_si();
}

std::int64_t ceil_to_int(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q.get_si();
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const std::vector<Rational>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i].get_str();
  }
  return os.str();
}

}  // namespace hck
