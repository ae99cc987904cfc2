#pragma once

// Canonical text and LaTeX rendering of Laurent polynomials in t, and the inverse parser.
//
//   t^2 - 2 + t^-2      (3/4)t^3 - t^{1/2}      -t^{-3/2} + 5
//
// Terms are printed by descending exponent. Even u-exponents print as integer
// powers of t, odd ones as t^{k/2}.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vir/exact/laurent.hpp"

namespace vir {

namespace detail {

inline std::string t_power_text(int u_exp, bool latex) {
  if (u_exp == 0) return "";
  if (u_exp == 2) return "t";
  std::string e;
  if (u_exp % 2 == 0) {
    e = std::to_string(u_exp / 2);
    if (latex && e.size() > 1) return "t^{" + e + "}";
    return "t^" + e;
  }
  return "t^{" + std::to_string(u_exp) + "/2}";
}

inline std::string rat_abs_text(const BigRat& a, bool with_var, bool latex) {
  // a > 0
  if (a.get_den() == 1) return (with_var && a == 1) ? std::string() : a.get_num().get_str();
  if (latex) return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  if (with_var) return "(" + a.get_str() + ")";
  return a.get_str();
}

inline std::string render(const LaurentPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  const auto& ts = p.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    const bool neg = sgn(it->coef) < 0;
    const BigRat a = neg ? BigRat(-it->coef) : it->coef;
    if (it == ts.rbegin())
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    const std::string var = t_power_text(it->exp, latex);
    os << rat_abs_text(a, !var.empty(), latex) << var;
  }
  return os.str();
}

}  // namespace detail

inline std::string to_string(const LaurentPoly& p) { return detail::render(p, false); }
inline std::string to_latex(const LaurentPoly& p) { return detail::render(p, true); }

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

/// Parses the canonical text form (and the looser variants "t", "2*t", "t^{2}").
inline LaurentPoly parse_laurent(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::vector<LaurentPoly::Term> terms;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed polynomial \"" + text + "\": " + why);
  };
  auto read_int = [&](std::string& out) {
    std::size_t st = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    out = s.substr(st, i - st);
    if (out.empty() || out == "-" || out == "+") fail("expected integer");
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      fail("missing operator");
    }
    BigRat coef(1);
    bool have_coef = false;
    if (i < s.size() && s[i] == '(') {
      std::size_t close = s.find(')', i);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      coef = parse_rat(s.substr(i + 1, close - i - 1));
      i = close + 1;
      have_coef = true;
    } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::string num;
      read_int(num);
      if (i < s.size() && s[i] == '/') {
        ++i;
        std::string den;
        read_int(den);
        num += "/" + den;
      }
      coef = parse_rat(num);
      have_coef = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    int u_exp = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      u_exp = 2;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool brace = i < s.size() && s[i] == '{';
        if (brace) ++i;
        std::string e;
        read_int(e);
        if (i < s.size() && s[i] == '/') {
          ++i;
          std::string d;
          read_int(d);
          if (d != "2") fail("only half-integer powers are representable");
          u_exp = std::stoi(e);
        } else {
          u_exp = 2 * std::stoi(e);
        }
        if (brace) {
          if (i >= s.size() || s[i] != '}') fail("unbalanced brace");
          ++i;
        }
      }
    } else if (!have_coef) {
      fail("expected a term");
    }
    terms.push_back({u_exp, sign < 0 ? BigRat(-coef) : coef});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace vir
