#include "stix/field.hpp"

#include <algorithm>

#include "stix/lattice.hpp"

namespace stix {

bool is_prime_power(int q, int* p_out, int* k_out) {
  if (q < 2) return false;
  int p = 0;
  for (int f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) p = q;  // q itself is prime
  int k = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (k_out) *k_out = k;
  return true;
}

namespace {

std::vector<int> to_poly(int enc, int p, int k) {
  std::vector<int> digits(k, 0);
  for (int i = 0; i < k && enc > 0; ++i) {
    digits[i] = enc % p;
    enc /= p;
  }
  return digits;
}

int from_poly(const std::vector<int>& digits, int p) {
  int enc = 0;
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) enc = enc * p + digits[i];
  return enc;
}

int poly_degree(const std::vector<int>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

int inv_mod_p(int a, int p) {
  int r = 1;
  int e = p - 2;  // Fermat; p prime
  int b = a % p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// remainder of a modulo b over GF(p); b nonzero
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  const int db = poly_degree(b);
  const int lead_inv = inv_mod_p(b[db], p);
  for (int d = poly_degree(a); d >= db; d = poly_degree(a)) {
    int c = a[d] * lead_inv % p;
    for (int i = 0; i <= db; ++i) {
      a[d - db + i] = ((a[d - db + i] - c * b[i]) % p + p) % p;
    }
  }
  return a;
}

bool is_irreducible(const std::vector<int>& poly, int p) {
  const int k = poly_degree(poly);
  for (int dv = 1; 2 * dv <= k; ++dv) {
    int total = 1;
    for (int i = 0; i < dv; ++i) total *= p;
    for (int low = 0; low < total; ++low) {
      std::vector<int> div = to_poly(low, p, dv);
      div.resize(dv + 1, 0);
      div[dv] = 1;
      if (poly_degree(poly_mod(poly, div, p)) < 0) return false;
    }
  }
  return true;
}

std::vector<int> find_modulus(int p, int k) {
  if (k == 1) return {0, 1};
  int total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (int low = 0; low < total; ++low) {
    std::vector<int> cand = to_poly(low, p, k);
    cand.resize(k + 1, 0);
    cand[k] = 1;
    if (is_irreducible(cand, p)) return cand;
  }
  throw std::logic_error("find_modulus: no irreducible polynomial found");
}

int multiplicative_order(const FieldTable& f, int e) {
  if (e == 0) return 0;
  int x = e;
  int ord = 1;
  while (x != 1) {
    x = f.mul(x, e);
    ++ord;
    if (ord > f.q) throw std::logic_error("multiplicative_order: runaway");
  }
  return ord;
}

void build_log_tables(FieldTable& f) {
  f.log_of.assign(f.q, -1);
  f.exp_of.assign(f.q - 1, 0);
  int x = 1;
  for (int t = 0; t < f.q - 1; ++t) {
    f.exp_of[t] = x;
    if (f.log_of[x] != -1) throw std::logic_error("build_log_tables: alpha not primitive");
    f.log_of[x] = t;
    x = f.mul(x, f.alpha);
  }
  if (x != 1) throw std::logic_error("build_log_tables: alpha order mismatch");
}

}  // namespace

int FieldTable::add(int a, int b) const {
  auto da = to_poly(a, p, k);
  auto db = to_poly(b, p, k);
  for (int i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % p;
  return from_poly(da, p);
}

int FieldTable::sub(int a, int b) const {
  auto da = to_poly(a, p, k);
  auto db = to_poly(b, p, k);
  for (int i = 0; i < k; ++i) da[i] = ((da[i] - db[i]) % p + p) % p;
  return from_poly(da, p);
}

int FieldTable::neg(int a) const { return sub(0, a); }

int FieldTable::mul(int a, int b) const {
  auto da = to_poly(a, p, k);
  auto db = to_poly(b, p, k);
  std::vector<int> conv(2 * k - 1, 0);
  for (int i = 0; i < k; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < k; ++j) conv[i + j] = (conv[i + j] + da[i] * db[j]) % p;
  }
  if (k > 1) conv = poly_mod(std::move(conv), modulus, p);
  conv.resize(k);
  return from_poly(conv, p);
}

std::string FieldTable::element_name(int enc) const {
  if (enc == 0) return "0";
  auto digits = to_poly(enc, p, k);
  std::string out;
  for (int i = k - 1; i >= 0; --i) {
    if (digits[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string term;
    if (i == 0 || digits[i] != 1) term += std::to_string(digits[i]);
    if (i >= 1) term += "w";
    if (i >= 2) term += "^" + std::to_string(i);
    out += term;
  }
  return out;
}

FieldTable field_make(int q) {
  int p = 0;
  int k = 0;
  if (!is_prime_power(q, &p, &k))
    throw DomainError("field_make: " + std::to_string(q) + " is not a prime power");
  FieldTable f;
  f.p = p;
  f.k = k;
  f.q = q;
  f.modulus = find_modulus(p, k);
  f.elems.resize(q);
  for (int i = 0; i < q; ++i) f.elems[i] = i;
  f.alpha = 0;
  for (int e : f.elems) {
    if (e == 0) continue;
    if (multiplicative_order(f, e) == q - 1) {
      f.alpha = e;
      break;
    }
  }
  if (f.alpha == 0) throw std::logic_error("field_make: no primitive element");
  build_log_tables(f);
  return f;
}

FieldTable field_make_custom(int q, std::vector<int> elems, int alpha) {
  FieldTable f = field_make(q);
  if (static_cast<int>(elems.size()) != q)
    throw DomainError("field_make_custom: element list must have q entries");
  std::vector<int> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < q; ++i)
    if (sorted[i] != i) throw DomainError("field_make_custom: element list must be a permutation of 0..q-1");
  if (elems[0] != 0) throw DomainError("field_make_custom: first element must be 0");
  if (alpha <= 0 || alpha >= q || multiplicative_order(f, alpha) != q - 1)
    throw DomainError("field_make_custom: alpha must have multiplicative order q-1");
  f.elems = std::move(elems);
  f.alpha = alpha;
  build_log_tables(f);
  return f;
}

LogMatrix log_matrix(const FieldTable& f) {
  const int n = f.q;
  LogMatrix m;
  m.n = n;
  m.entry.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      m.entry[i][j] = f.log_of[f.sub(f.elems[i], f.elems[j])];
    }
  }
  return m;
}

bool verify_row_difference(const LogMatrix& m, int i, int j) {
  const int n = m.n;
  if (i == j || i < 0 || j < 0 || i > n || j > n)
    throw DomainError("verify_row_difference: need two distinct indices in 0..n");
  const int mod = n - 1;
  std::vector<bool> seen(mod, false);
  for (int r = 0; r <= n; ++r) {
    if (r == i || r == j) continue;
    int diff = ((m.entry[i][r] - m.entry[j][r]) % mod + mod) % mod;
    if (seen[diff]) return false;
    seen[diff] = true;
  }
  return true;
}

OffsetFamily offsets_from_matrix(const LogMatrix& m) {
  const int n = m.n;
  if (n < 2) throw DomainError("offsets_from_matrix: need n >= 2");
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!verify_row_difference(m, i, j))
        throw DomainError("offsets_from_matrix: row difference check failed for pair (" +
                          std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");

  OffsetFamily fam;
  fam.n = n;
  fam.u.assign(n + 1, RatVec(n + 1, Rat(0)));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == j || i == n || j == n) continue;
      fam.u[i][j] = (Rat(m.entry[i][j]) + Rat(1, 2)) / (n - 1) - Rat(1, 2);
    }
    if (!is_sum_zero(fam.u[i]))
      throw std::logic_error("offsets_from_matrix: offset row does not sum to zero");
  }
  fam.v = shortest_vectors(n);
  return fam;
}

OffsetFamily make_offset_family(int n) { return offsets_from_matrix(log_matrix(field_make(n))); }

}  // namespace stix
