#include "stix/rat.hpp"

#include <sstream>

namespace stix {

Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

Int floor_int(const Rat& r) {
  Int n = rat_num(r);
  Int d = rat_den(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

Int round_nearest(const Rat& r) { return floor_int(r + Rat(1, 2)); }

Rat sqrt_upper(const Rat& r) {
  if (r < 0) throw DomainError("sqrt_upper: negative input");
  if (r == 0) return Rat(0);
  const Int a = rat_num(r);
  const Int b = rat_den(r);
  const Int ab = a * b;
  Int s = boost::multiprecision::sqrt(ab);  // floor of the integer square root
  if (s * s < ab) ++s;
  return Rat(s, b);
}

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw DomainError("rat_parse: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw DomainError("rat_parse: zero denominator in \"" + s + "\"");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rat(n, d);
  } catch (const std::runtime_error&) {
    throw DomainError("rat_parse: malformed rational \"" + s + "\"");
  }
}

std::string rat_str(const Rat& r) {
  const Int d = rat_den(r);
  if (d == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + d.str();
}

namespace {

Rat pow10_rat(int e) {
  Int p = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= 10;
  return e < 0 ? Rat(1, p) : Rat(p);
}

}  // namespace

std::string rat_decimal(const Rat& r, int significant_digits) {
  if (significant_digits < 1) throw DomainError("rat_decimal: need at least one digit");
  if (r == 0) return "0";
  const bool neg = r < 0;
  Rat a = neg ? Rat(-r) : r;

  int e = 0;  // decimal exponent: 10^e <= a < 10^(e+1)
  Rat t = a;
  while (t >= 10) {
    t /= 10;
    ++e;
  }
  while (t < 1) {
    t *= 10;
    --e;
  }

  Int digits = round_nearest(a * pow10_rat(significant_digits - 1 - e));
  std::string ds = digits.str();
  if (static_cast<int>(ds.size()) > significant_digits) {
    // rounding carried past the leading digit (e.g. 0.999... -> 1.000...)
    ds = ds.substr(0, significant_digits);
    ++e;
  }

  std::string out;
  if (e >= significant_digits - 1) {
    out = ds + std::string(e - (significant_digits - 1), '0');
  } else if (e >= 0) {
    out = ds.substr(0, e + 1) + "." + ds.substr(e + 1);
  } else {
    out = "0." + std::string(-e - 1, '0') + ds;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return neg ? "-" + out : out;
}

namespace {

void require_same_dim(const RatVec& a, const RatVec& b, const char* who) {
  if (a.size() != b.size()) throw DomainError(std::string(who) + ": dimension mismatch");
}

}  // namespace

RatVec vec_add(const RatVec& a, const RatVec& b) {
  require_same_dim(a, b, "vec_add");
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  require_same_dim(a, b, "vec_sub");
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec vec_neg(const RatVec& a) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

RatVec vec_scale(const Rat& s, const RatVec& a) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

Rat vec_dot(const RatVec& a, const RatVec& b) {
  require_same_dim(a, b, "vec_dot");
  Rat out = 0;
  for (size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

Rat vec_sum(const RatVec& a) {
  Rat out = 0;
  for (const Rat& x : a) out += x;
  return out;
}

Rat norm_sq(const RatVec& a) { return vec_dot(a, a); }

bool is_sum_zero(const RatVec& a) { return vec_sum(a) == 0; }

std::string vec_str(const RatVec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << rat_str(a[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace stix
