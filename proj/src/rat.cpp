#include "scatterlab/rat.hpp"

#include "scatterlab/error.hpp"

#include <cctype>

namespace scatterlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::validation: return "validation";
    case ErrorKind::parse: return "parse";
    case ErrorKind::range: return "range";
    case ErrorKind::undecidable_pair: return "undecidable-pair";
    case ErrorKind::unsupported_split: return "unsupported-split";
    case ErrorKind::horizon_exceeded: return "horizon-exceeded";
    case ErrorKind::not_interval_union: return "not-interval-union";
    case ErrorKind::not_supported: return "not-supported";
    case ErrorKind::profile_mismatch: return "profile-mismatch";
    case ErrorKind::not_well_ordered: return "not-well-ordered";
    case ErrorKind::not_totally_disconnected: return "not-totally-disconnected";
    case ErrorKind::chain_intractable: return "chain-intractable";
    case ErrorKind::non_injective: return "non-injective";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::structural_mismatch: return "structural-mismatch";
    case ErrorKind::usage: return "usage";
  }
  return "unknown";
}

Rat::Rat(long num, long den) {
  if (den == 0) fail(ErrorKind::validation, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.v_ == 0) fail(ErrorKind::validation, "division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view p = text.substr(0, slash);
  std::string_view q = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(p) || !valid_integer(q) || q[0] == '-' || q[0] == '+')
    fail(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");
  mpz_class den = parse_integer(q);
  if (den == 0) fail(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  return Rat(mpq_class(parse_integer(p), den));
}

std::string Rat::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::pretty() const {
  if (is_integer()) return v_.get_num().get_str();
  return str();
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

Rat pow(const Rat& r, long k) {
  if (k < 0) return pow(Rat(1) / r, -k);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), static_cast<unsigned long>(k));
  return Rat(mpq_class(n, d));
}

mpz_class floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

Rat from_integer(const mpz_class& z) { return Rat(mpq_class(z)); }

}  // namespace scatterlab
