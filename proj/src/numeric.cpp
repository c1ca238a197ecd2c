#include "hardmap/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace hardmap {

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string num = text, den = "1";
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string::npos)
      throw std::invalid_argument("malformed rational literal: " + text);
  }
  auto check_digits = [](const std::string& s, bool sign_ok) {
    size_t i = 0;
    if (sign_ok && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!check_digits(num, true) || !check_digits(den, false))
    throw std::invalid_argument("malformed rational literal: " + text);
  mpq_class q;
  if (q.set_str(num + "/" + den, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

namespace {
std::vector<mpz_class> g_factorials{1_mpz};  // g_factorials[k] = k!
}

void ensure_factorials(long n) {
  while (static_cast<long>(g_factorials.size()) <= n) {
    long k = static_cast<long>(g_factorials.size());
    g_factorials.push_back(g_factorials.back() * k);
  }
}

mpz_class binomial(long a, long b) {
  if (a < 0) throw std::invalid_argument("binomial requires a >= 0");
  if (b < 0 || b > a) return 0;
  ensure_factorials(a);
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), g_factorials[a].get_mpz_t(), g_factorials[b].get_mpz_t());
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), g_factorials[a - b].get_mpz_t());
  return r;
}

double log_mpz(const mpz_class& z) {
  if (z <= 0) throw std::domain_error("log of non-positive integer");
  long exp2;
  double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

double log_mpq(const mpq_class& q) {
  if (q <= 0) throw std::domain_error("log of non-positive rational");
  return log_mpz(q.get_num()) - log_mpz(q.get_den());
}

}  // namespace hardmap
