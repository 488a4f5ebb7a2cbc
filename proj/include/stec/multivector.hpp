#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "stec/rational.hpp"
#include "stec/signature.hpp"

namespace stec {

// Sparse multivector over the full 2^(k+n)-dimensional exterior algebra of a
// signature. Mixed grades are first class; zero coefficients are never
// stored, so is_zero() and exact comparisons are structural. Values are
// immutable in practice: every operation returns a fresh multivector.
template <typename S>
class Multivector {
 public:
  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector zero(Signature sig) { return Multivector(sig); }

  static Multivector scalar(Signature sig, S value) {
    Multivector v(sig);
    v.add_term(Blade{}, std::move(value));
    return v;
  }

  static Multivector basis(Signature sig, Blade b, S coeff = S(1)) {
    require_within(b, sig);
    Multivector v(sig);
    v.add_term(b, std::move(coeff));
    return v;
  }

  static Multivector axis(Signature sig, int i, S coeff = S(1)) {
    return basis(sig, Blade::axis(i), std::move(coeff));
  }

  const Signature& signature() const { return sig_; }
  const std::map<Blade, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? S(0) : it->second;
  }

  // Set of grades present (ascending).
  std::vector<int> grades() const {
    std::vector<int> gs;
    for (const auto& [b, c] : terms_) {
      int g = b.grade();
      bool seen = false;
      for (int x : gs) seen = seen || x == g;
      if (!seen) gs.push_back(g);
    }
    std::sort(gs.begin(), gs.end());
    return gs;
  }

  bool is_pure_grade(int m) const {
    for (const auto& [b, c] : terms_)
      if (b.grade() != m) return false;
    return true;
  }

  Multivector grade_part(int m) const {
    if (m < 0 || m > sig_.dims()) throw std::domain_error("grade out of range");
    Multivector out(sig_);
    for (const auto& [b, c] : terms_)
      if (b.grade() == m) out.add_term(b, c);
    return out;
  }

  void add_term(Blade b, S coeff) {
    require_within(b, sig_);
    if (coeff == S(0)) return;
    auto [it, inserted] = terms_.try_emplace(b, std::move(coeff));
    if (!inserted) {
      it->second += coeff;
      if (it->second == S(0)) terms_.erase(it);
    }
  }

  Multivector& operator+=(const Multivector& o) {
    require_same_signature(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }

  Multivector& operator-=(const Multivector& o) {
    require_same_signature(o);
    for (const auto& [b, c] : o.terms_) add_term(b, S(-c));
    return *this;
  }

  Multivector& operator*=(const S& s) {
    if (s == S(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
  friend Multivector operator*(const S& s, Multivector a) { return a *= s; }
  friend Multivector operator-(const Multivector& a) {
    Multivector out(a.sig_);
    for (const auto& [b, c] : a.terms_) out.add_term(b, S(-c));
    return out;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
  }

  void require_same_signature(const Multivector& o) const {
    if (!(sig_ == o.sig_))
      throw std::invalid_argument("multivector signature mismatch");
  }

 private:
  Signature sig_;
  std::map<Blade, S> terms_;
};

// --- products of section "exterior algebra" -------------------------------

// u ^ v: bilinear extension of e_I ^ e_J = sigma(I,J) e_{I+J}.
template <typename S>
Multivector<S> wedge(const Multivector<S>& u, const Multivector<S>& v) {
  u.require_same_signature(v);
  Multivector<S> out(u.signature());
  for (const auto& [bi, ci] : u.terms())
    for (const auto& [bj, cj] : v.terms()) {
      SignedBlade m = sorted_merge(bi, bj);
      if (m.sign == 0) continue;
      out.add_term(m.blade, m.sign > 0 ? S(ci * cj) : S(-(ci * cj)));
    }
  return out;
}

// u . v: same-blade terms weighted by the metric; cross terms vanish.
template <typename S>
S dot(const Multivector<S>& u, const Multivector<S>& v) {
  u.require_same_signature(v);
  S acc(0);
  const auto& a = u.terms();
  const auto& b = v.terms();
  auto it = a.begin();
  auto jt = b.begin();
  while (it != a.end() && jt != b.end()) {
    if (it->first < jt->first) {
      ++it;
    } else if (jt->first < it->first) {
      ++jt;
    } else {
      S prod = it->second * jt->second;
      acc += metric_sign(it->first, u.signature()) > 0 ? prod : S(-prod);
      ++it;
      ++jt;
    }
  }
  return acc;
}

// Hodge complement: e_I -> Delta_{I,I} sigma(I,I^c) e_{I^c}.
template <typename S>
Multivector<S> hodge(const Multivector<S>& v) {
  const Signature& sig = v.signature();
  Multivector<S> out(sig);
  for (const auto& [b, c] : v.terms()) {
    Blade bc = complement(b, sig);
    int s = metric_sign(b, sig) * merge_sign(b, bc);
    out.add_term(bc, s > 0 ? c : S(-c));
  }
  return out;
}

// Inverse complement: e_I -> Delta_{I^c,I^c} sigma(I^c,I) e_{I^c}.
template <typename S>
Multivector<S> inv_hodge(const Multivector<S>& v) {
  const Signature& sig = v.signature();
  Multivector<S> out(sig);
  for (const auto& [b, c] : v.terms()) {
    Blade bc = complement(b, sig);
    int s = metric_sign(bc, sig) * merge_sign(bc, b);
    out.add_term(bc, s > 0 ? c : S(-c));
  }
  return out;
}

// Left interior product u _| v. On blades with I subset of J:
//   e_I _| e_J = Delta_{I,I} sigma(J\I, I) e_{J\I};
// zero otherwise. Grade |J| - |I|.
template <typename S>
Multivector<S> left_contraction(const Multivector<S>& u, const Multivector<S>& v) {
  u.require_same_signature(v);
  Multivector<S> out(u.signature());
  for (const auto& [bi, ci] : u.terms())
    for (const auto& [bj, cj] : v.terms()) {
      if (!bi.subset_of(bj)) continue;
      Blade rest = bj.minus(bi);
      int s = metric_sign(bi, u.signature()) * merge_sign(rest, bi);
      out.add_term(rest, s > 0 ? S(ci * cj) : S(-(ci * cj)));
    }
  return out;
}

// Right interior product u |_ v. On blades with J subset of I:
//   e_I |_ e_J = Delta_{J,J} sigma(J, I\J) e_{I\J};
// zero otherwise. Grade |I| - |J|.
template <typename S>
Multivector<S> right_contraction(const Multivector<S>& u, const Multivector<S>& v) {
  u.require_same_signature(v);
  Multivector<S> out(u.signature());
  for (const auto& [bi, ci] : u.terms())
    for (const auto& [bj, cj] : v.terms()) {
      if (!bj.subset_of(bi)) continue;
      Blade rest = bi.minus(bj);
      int s = metric_sign(bj, u.signature()) * merge_sign(bj, rest);
      out.add_term(rest, s > 0 ? S(ci * cj) : S(-(ci * cj)));
    }
  return out;
}

// Cross product (u ^ v)^(-H), defined only for grade-1 inputs in (0,3).
template <typename S>
Multivector<S> cross(const Multivector<S>& u, const Multivector<S>& v) {
  u.require_same_signature(v);
  if (!(u.signature() == Signature(0, 3)))
    throw std::domain_error("cross product requires signature (0,3)");
  if (!(u.is_zero() || u.is_pure_grade(1)) || !(v.is_zero() || v.is_pure_grade(1)))
    throw std::domain_error("cross product requires grade-1 operands");
  return inv_hodge(wedge(u, v));
}

template <typename S>
Multivector<S> grade_project(const Multivector<S>& v, int m) {
  return v.grade_part(m);
}

// --- rendering -------------------------------------------------------------

inline std::string blade_text(Blade b, const Signature& sig) {
  if (b.is_scalar()) return "1";
  std::string out = "e";
  if (sig.dims() >= 10) {
    out += '{';
    bool first = true;
    for (int i : b.indices()) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(i);
    }
    out += '}';
  } else {
    for (int i : b.indices()) out += static_cast<char>('0' + i);
  }
  return out;
}

inline std::string render_coeff(const Rational& c) { return to_fraction_string(c); }

// Fixed 17-significant-digit formatting keeps reports byte-deterministic.
inline std::string render_coeff(double c) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", c);
  return buf;
}

template <typename S>
std::string to_string(const Multivector<S>& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : v.terms()) {
    S mag = c < S(0) ? S(-c) : c;
    if (first) {
      if (c < S(0)) out += '-';
      first = false;
    } else {
      out += c < S(0) ? " - " : " + ";
    }
    if (b.is_scalar()) {
      out += render_coeff(mag);
    } else {
      out += render_coeff(mag);
      out += '*';
      out += blade_text(b, v.signature());
    }
  }
  return out;
}

// Largest absolute coefficient; the residual norm used throughout the
// verification suites.
inline double inf_norm(const Multivector<double>& v) {
  double m = 0.0;
  for (const auto& [b, c] : v.terms()) m = std::max(m, std::fabs(c));
  return m;
}

inline Multivector<double> to_double_mv(const Multivector<Rational>& v) {
  Multivector<double> out(v.signature());
  for (const auto& [b, c] : v.terms()) out.add_term(b, to_double(c));
  return out;
}

}  // namespace stec
