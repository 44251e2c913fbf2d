#include "spoly/format.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace spoly {

namespace {

// Shortest decimal that round-trips the double exactly.
std::string fmt_double(double x) {
  if (x == static_cast<long long>(x) && std::abs(x) < 1e15) {
    return std::to_string(static_cast<long long>(x));
  }
  char buf[64];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == x) break;
  }
  return buf;
}

class Parser {
 public:
  Parser(const std::string& text, int nvars_hint)
      : s_(text), nvars_hint_(nvars_hint) {}

  Polynomial run() {
    skip_ws();
    Term t = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
    const int n = nvars_hint_ > 0 ? nvars_hint_ : std::max(1, max_var_);
    if (nvars_hint_ > 0 && max_var_ > nvars_hint_)
      throw ParseError("variable index exceeds nvars", 0);
    Polynomial f(n);
    for (auto& [mono, c] : t) {
      MultiIndex a(n, 0);
      for (auto& [var, e] : mono) a[var - 1] += e;
      f.add_term(a, c);
    }
    return f;
  }

 private:
  // A term list maps {var -> exponent} monomials to coefficients; expansion
  // happens on the fly so parenthesized sums multiply out exactly.
  using Mono = std::map<int, int>;
  using Term = std::map<Mono, Cplx>;

  Term parse_expr() {
    Term acc;
    bool neg = consume_sign();
    merge(acc, parse_term(), neg ? Cplx(-1.0) : Cplx(1.0));
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
      const bool minus = s_[pos_] == '-';
      ++pos_;
      merge(acc, parse_term(), minus ? Cplx(-1.0) : Cplx(1.0));
    }
    return acc;
  }

  Term parse_term() {
    Term acc = parse_factor();
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != '*') break;
      ++pos_;
      acc = multiply(acc, parse_factor());
    }
    return acc;
  }

  Term parse_factor() {
    Term base = parse_base();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      const int e = parse_uint();
      Term acc;
      acc[{}] = 1.0;
      for (int k = 0; k < e; ++k) acc = multiply(acc, base);
      return acc;
    }
    return base;
  }

  Term parse_base() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Term inner = parse_expr();
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != ')')
        throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (c == 'z') return parse_variable();
    if (c == 'i' && !next_is_digit()) {
      ++pos_;
      Term t;
      t[{}] = Cplx(0.0, 1.0);
      return t;
    }
    return parse_number();
  }

  Term parse_variable() {
    ++pos_;  // 'z'
    int idx = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      idx = parse_uint();
    if (idx < 1) throw ParseError("variable index must be >= 1", pos_);
    max_var_ = std::max(max_var_, idx);
    Term t;
    t[{{idx, 1}}] = 1.0;
    return t;
  }

  Term parse_number() {
    const std::size_t start = pos_;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) throw ParseError("expected number", start);
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    Cplx c = v;
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      c = Cplx(0.0, v);
    }
    Term t;
    t[{}] = c;
    return t;
  }

  int parse_uint() {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc() || v < 0) throw ParseError("expected integer", pos_);
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  static void merge(Term& acc, const Term& t, Cplx scale) {
    for (const auto& [m, c] : t) acc[m] += scale * c;
  }

  static Term multiply(const Term& a, const Term& b) {
    Term r;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        Mono m = ma;
        for (const auto& [var, e] : mb) m[var] += e;
        r[m] += ca * cb;
      }
    return r;
  }

  bool consume_sign() {
    skip_ws();
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      const bool neg = s_[pos_] == '-';
      ++pos_;
      return neg;
    }
    return false;
  }

  bool next_is_digit() const {
    return pos_ + 1 < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]));
  }

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int nvars_hint_;
  int max_var_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars_hint) {
  return Parser(text, nvars_hint).run();
}

std::string format_complex(Cplx c) {
  if (c.imag() == 0.0) return fmt_double(c.real());
  return "(" + fmt_double(c.real()) + "+" + fmt_double(c.imag()) + "i)";
}

Cplx parse_complex(const std::string& text) {
  Polynomial p = parse_polynomial(text, 1);
  if (p.degree(0) > 0) throw ParseError("expected a constant", 0);
  return p.coeff({0});
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [a, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += format_complex(c);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      out += "*z" + std::to_string(i + 1);
      if (a[i] > 1) out += "^" + std::to_string(a[i]);
    }
  }
  return out;
}

std::string polynomial_to_json(const Polynomial& f) {
  nlohmann::ordered_json j;
  j["nvars"] = f.nvars();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [a, c] : f.terms()) {
    nlohmann::ordered_json t;
    t["alpha"] = a;
    t["re"] = c.real();
    t["im"] = c.imag();
    j["terms"].push_back(t);
  }
  return j.dump();
}

Polynomial polynomial_from_json(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  Polynomial f(j.at("nvars").get<int>());
  for (const auto& t : j.at("terms")) {
    MultiIndex a = t.at("alpha").get<MultiIndex>();
    f.add_term(a, Cplx(t.at("re").get<double>(),
                       t.value("im", 0.0)));
  }
  return f;
}

Polynomial load_polynomial_arg(const std::string& arg, int nvars_hint) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::runtime_error("cannot open " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return polynomial_from_json(ss.str());
  }
  return parse_polynomial(arg, nvars_hint);
}

}  // namespace spoly
