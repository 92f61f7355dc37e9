#include "multitile/rational.hpp"

#include <cctype>

#include "multitile/errors.hpp"

namespace multitile {

std::string rational_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& s) {
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int_token(s)) throw ParseError("invalid rational: '" + s + "'");
    return Rat(Int(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int_token(num) || !valid_int_token(den))
    throw ParseError("invalid rational: '" + s + "'");
  Int d(den);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  return make_rat(Int(num), d);
}

bool lex_less(const VecQ& a, const VecQ& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

bool lex_less(const VecZ& a, const VecZ& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

VecQ to_rational(const VecZ& v) {
  VecQ out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

}  // namespace multitile
