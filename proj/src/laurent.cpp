#include "coxhecke/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "coxhecke/errors.hpp"

namespace coxhecke {

const LaurentPoly& LaurentPoly::zero() {
  static const LaurentPoly z;
  return z;
}

const LaurentPoly& LaurentPoly::one() {
  static const LaurentPoly o(Int(1));
  return o;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& [e, c] : terms) {
    if (c == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().first == e)
      p.terms_.back().second += c;
    else
      p.terms_.emplace_back(e, std::move(c));
    if (p.terms_.back().second == 0) p.terms_.pop_back();
  }
  return p;
}

const Int& LaurentPoly::coeff(int n) const {
  static const Int kZero = 0;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), n,
      [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == n) return it->second;
  return kZero;
}

std::optional<std::pair<int, int>> LaurentPoly::degree_window() const {
  if (terms_.empty()) return std::nullopt;
  return std::make_pair(terms_.front().first, terms_.back().first);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.terms_.push_back(*b++);
    } else {
      Int c = a->second + b->second;
      if (c != 0) out.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return LaurentPoly();
  // Dense accumulation over the exponent window of the product.
  int lo = terms_.front().first + o.terms_.front().first;
  int hi = terms_.back().first + o.terms_.back().first;
  std::vector<Int> acc(static_cast<size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) acc[ea + eb - lo] += ca * cb;
  LaurentPoly out;
  for (int e = lo; e <= hi; ++e)
    if (acc[e - lo] != 0) out.terms_.emplace_back(e, std::move(acc[e - lo]));
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.terms_.emplace_back(-it->first, it->second);
  return out;
}

LaurentPoly LaurentPoly::shifted(int n) const {
  LaurentPoly out(*this);
  for (auto& [e, c] : out.terms_) e += n;
  return out;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
  if (c == 0) return LaurentPoly();
  LaurentPoly out(*this);
  for (auto& [e, k] : out.terms_) k *= c;
  return out;
}

LaurentPoly LaurentPoly::positive_part() const {
  LaurentPoly out;
  for (const auto& t : terms_)
    if (t.first > 0) out.terms_.push_back(t);
  return out;
}

LaurentPoly LaurentPoly::negative_part() const {
  LaurentPoly out;
  for (const auto& t : terms_)
    if (t.first < 0) out.terms_.push_back(t);
  return out;
}

bool LaurentPoly::all_coeffs_nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Int c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = c < 0 ? Int(-c) : c;
    int e = it->first;
    if (e == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

namespace {

// Minimal recursive-descent reader for the str() grammar.
struct PolyReader {
  const std::string& s;
  size_t i = 0;

  explicit PolyReader(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  Int read_uint() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail(ErrorCode::BadInput, "expected integer in '" + s + "'");
    return Int(s.substr(start, i - start));
  }

  int read_exponent() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i;
    } else if (peek() == '+') {
      ++i;
    }
    Int mag = read_uint();
    if (mag > 1000000) fail(ErrorCode::BadInput, "exponent out of range");
    int e = static_cast<int>(mag.convert_to<long>());
    return neg ? -e : e;
  }

  // term := uint ['*'? 'v' ['^' int]] | 'v' ['^' int]
  LaurentPoly::Term read_term() {
    Int c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = read_uint();
      have_coeff = true;
      skip_ws();
      if (i < s.size() && s[i] == '*') ++i;
    }
    skip_ws();
    if (i < s.size() && s[i] == 'v') {
      ++i;
      int e = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = read_exponent();
      }
      return {e, c};
    }
    if (!have_coeff) fail(ErrorCode::BadInput, "expected term in '" + s + "'");
    return {0, c};
  }

  LaurentPoly read_poly() {
    std::vector<LaurentPoly::Term> terms;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i;
    } else if (peek() == '+') {
      ++i;
    }
    while (true) {
      auto [e, c] = read_term();
      terms.emplace_back(e, neg ? Int(-c) : c);
      if (eof()) break;
      char op = peek();
      if (op != '+' && op != '-')
        fail(ErrorCode::BadInput, "unexpected character in '" + s + "'");
      neg = (op == '-');
      ++i;
    }
    return LaurentPoly::from_terms(std::move(terms));
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  PolyReader r(text);
  if (r.eof()) fail(ErrorCode::BadInput, "empty polynomial text");
  LaurentPoly p = r.read_poly();
  return p;
}

BiLaurentPoly BiLaurentPoly::from_sorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  BiLaurentPoly out;
  for (auto& [k, c] : terms) {
    if (c == 0) continue;
    if (!out.terms_.empty() && out.terms_.back().first == k)
      out.terms_.back().second += c;
    else
      out.terms_.emplace_back(k, std::move(c));
    if (out.terms_.back().second == 0) out.terms_.pop_back();
  }
  return out;
}

BiLaurentPoly BiLaurentPoly::from_v(const LaurentPoly& p) {
  std::vector<Term> terms;
  for (const auto& [e, c] : p.terms()) terms.push_back({{e, 0}, c});
  return from_sorted(std::move(terms));
}

BiLaurentPoly BiLaurentPoly::from_vprime(const LaurentPoly& p) {
  std::vector<Term> terms;
  for (const auto& [e, c] : p.terms()) terms.push_back({{0, e}, c});
  return from_sorted(std::move(terms));
}

BiLaurentPoly BiLaurentPoly::operator+(const BiLaurentPoly& o) const {
  std::vector<Term> terms = terms_;
  terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
  return from_sorted(std::move(terms));
}

BiLaurentPoly BiLaurentPoly::operator-(const BiLaurentPoly& o) const {
  std::vector<Term> terms = terms_;
  for (const auto& [k, c] : o.terms_) terms.push_back({k, Int(-c)});
  return from_sorted(std::move(terms));
}

BiLaurentPoly BiLaurentPoly::operator*(const BiLaurentPoly& o) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      terms.push_back({{ka.first + kb.first, ka.second + kb.second},
                       Int(ca * cb)});
  return from_sorted(std::move(terms));
}

std::string BiLaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    os << c.str() << "*v^" << k.first << "*w^" << k.second;
    first = false;
  }
  return os.str();
}

}  // namespace coxhecke
