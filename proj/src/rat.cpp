#include "linkstar/rat.hpp"

#include <cctype>

#include "linkstar/error.hpp"

namespace linkstar {

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

std::size_t hash_mpz(const mpz_class& z, std::size_t seed) {
  const mpz_srcptr raw = z.get_mpz_t();
  const std::size_t limbs = mpz_size(raw);
  std::size_t h = seed ^ (static_cast<std::size_t>(mpz_sgn(raw) + 1) * 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(raw, static_cast<mp_size_t>(i))) +
         0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || (den[0] == '-' || den[0] == '+')) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  mpq_class q(parse_integer(num), d);
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::DegeneratePair, "division by zero");
  v_ /= o.v_;
  return *this;
}

std::size_t Rat::hash() const {
  return hash_mpz(v_.get_den(), hash_mpz(v_.get_num(), 0x51ed27b3ULL));
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

}  // namespace linkstar
