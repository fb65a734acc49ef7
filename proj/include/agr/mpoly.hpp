#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "agr/gaussq.hpp"

namespace agr {

// Variable context shared by the polynomials of one computation.
struct PolyRing {
  std::vector<std::string> vars;
  bool laurent = false;  // negative exponents admitted

  static std::shared_ptr<const PolyRing> make(std::vector<std::string> names,
                                              bool laurent = false) {
    auto r = std::make_shared<PolyRing>();
    r->vars = std::move(names);
    r->laurent = laurent;
    return r;
  }
};

using RingPtr = std::shared_ptr<const PolyRing>;

// Sparse multivariate (optionally Laurent) polynomial over GaussQ.
// Terms map exponent tuples to nonzero coefficients; tuples have fixed
// length equal to the number of ring variables.
class MPoly {
 public:
  using Exp = std::vector<int>;

  MPoly() = default;
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MPoly constant(RingPtr ring, const GaussQ& c) {
    MPoly p(std::move(ring));
    if (!c.is_zero()) p.terms_[Exp(p.ring_->vars.size(), 0)] = c;
    return p;
  }
  static MPoly variable(RingPtr ring, std::size_t idx, int power = 1) {
    if (idx >= ring->vars.size()) throw std::invalid_argument("MPoly: bad variable index");
    if (power < 0 && !ring->laurent)
      throw std::invalid_argument("MPoly: negative power in non-Laurent ring");
    MPoly p(std::move(ring));
    Exp e(p.ring_->vars.size(), 0);
    e[idx] = power;
    if (power != 0 || true) p.terms_[e] = GaussQ(1);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::map<Exp, GaussQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exp& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
  }
  GaussQ constant_value() const {
    if (terms_.empty()) return GaussQ(0);
    if (!is_constant()) throw std::domain_error("MPoly: not a constant");
    return terms_.begin()->second;
  }

  void add_term(const Exp& e, const GaussQ& c) {
    if (c.is_zero()) return;
    if (e.size() != ring_->vars.size()) throw std::invalid_argument("MPoly: exponent arity");
    if (!ring_->laurent)
      for (int k : e)
        if (k < 0) throw std::invalid_argument("MPoly: negative exponent");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // A default-constructed MPoly has no ring and is the universal zero;
  // arithmetic adopts the ring of the other operand.
  friend MPoly operator+(const MPoly& p, const MPoly& q) {
    if (!p.ring_) return q;
    if (!q.ring_) return p;
    p.check_ring(q);
    MPoly r = p;
    for (const auto& [e, c] : q.terms_) r.add_term(e, c);
    return r;
  }
  friend MPoly operator-(const MPoly& p, const MPoly& q) {
    if (!q.ring_) return p;
    if (!p.ring_) return -q;
    p.check_ring(q);
    MPoly r = p;
    for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
    return r;
  }
  friend MPoly operator-(const MPoly& p) {
    MPoly r(p.ring_);
    for (const auto& [e, c] : p.terms_) r.terms_[e] = -c;
    return r;
  }
  friend MPoly operator*(const MPoly& p, const MPoly& q) {
    if (!p.ring_) return p;
    if (!q.ring_) return q;
    p.check_ring(q);
    MPoly r(p.ring_);
    for (const auto& [e1, c1] : p.terms_)
      for (const auto& [e2, c2] : q.terms_) {
        Exp e = e1;
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  friend MPoly operator*(const GaussQ& c, const MPoly& p) {
    MPoly r(p.ring_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : p.terms_) r.terms_[e] = c * k;
    return r;
  }

  MPoly& operator+=(const MPoly& q) { return *this = *this + q; }
  MPoly& operator-=(const MPoly& q) { return *this = *this - q; }
  MPoly& operator*=(const MPoly& q) { return *this = *this * q; }

  friend bool operator==(const MPoly& p, const MPoly& q) {
    if (!p.ring_ || !q.ring_) return p.terms_.empty() && q.terms_.empty();
    p.check_ring(q);
    return p.terms_ == q.terms_;
  }
  friend bool operator!=(const MPoly& p, const MPoly& q) { return !(p == q); }

  MPoly derivative(std::size_t var) const {
    if (var >= ring_->vars.size()) throw std::invalid_argument("MPoly: bad variable index");
    MPoly r(ring_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exp d = e;
      d[var] -= 1;
      r.add_term(d, GaussQ(e[var]) * c);
    }
    return r;
  }

  GaussQ eval(const std::vector<GaussQ>& point) const {
    if (point.size() != ring_->vars.size()) throw std::invalid_argument("MPoly: eval arity");
    GaussQ acc(0);
    for (const auto& [e, c] : terms_) {
      GaussQ t = c;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (e[k] < 0 && point[k].is_zero())
          throw std::domain_error("MPoly: Laurent evaluation at zero");
        GaussQ b = point[k];
        int n = e[k] > 0 ? e[k] : -e[k];
        GaussQ pw(1);
        for (int s = 0; s < n; ++s) pw *= b;
        t = e[k] > 0 ? t * pw : t / pw;
      }
      acc += t;
    }
    return acc;
  }

  // Substitute polynomials for all variables (images share a common ring).
  MPoly substitute(const std::vector<MPoly>& images) const {
    if (images.size() != ring_->vars.size()) throw std::invalid_argument("MPoly: subst arity");
    if (images.empty()) throw std::invalid_argument("MPoly: empty substitution");
    RingPtr target = images[0].ring();
    MPoly acc(target);
    for (const auto& [e, c] : terms_) {
      MPoly t = MPoly::constant(target, c);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] < 0) throw std::domain_error("MPoly: Laurent substitution unsupported");
        for (int s = 0; s < e[k]; ++s) t *= images[k];
      }
      acc += t;
    }
    return acc;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  // Exact division (throws if the quotient is not a polynomial); this is the
  // division step of fraction-free elimination, which is always exact.
  friend MPoly exact_div(const MPoly& p, const MPoly& d) {
    p.check_ring(d);
    if (d.is_zero()) throw std::domain_error("MPoly: division by zero");
    MPoly rem = p, quot(p.ring_);
    const auto& [de, dc] = *d.terms_.rbegin();  // leading term in lex order
    while (!rem.is_zero()) {
      const auto& [re, rc] = *rem.terms_.rbegin();
      Exp q = re;
      for (std::size_t k = 0; k < q.size(); ++k) {
        q[k] -= de[k];
        if (q[k] < 0 && !p.ring_->laurent) throw std::domain_error("MPoly: inexact division");
      }
      GaussQ qc = rc / dc;
      MPoly m(p.ring_);
      m.terms_[q] = qc;
      quot += m;
      rem -= m * d;
    }
    return quot;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Print highest lex term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = c.str();
      if (!first) out += cs[0] == '-' ? " - " : " + ";
      std::string mon;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!mon.empty()) mon += "*";
        mon += ring_->vars[k];
        if (e[k] != 1) mon += "^" + std::to_string(e[k]);
      }
      std::string body = !first && cs[0] == '-' ? cs.substr(1) : cs;
      if (mon.empty()) {
        out += body;
      } else if (body == "1") {
        out += mon;
      } else if (body == "-1") {
        out += "-" + mon;
      } else {
        bool composite = body.find('+') != std::string::npos ||
                         body.find('-', 1) != std::string::npos ||
                         body.find('i') != std::string::npos;
        out += (composite ? "(" + body + ")" : body) + "*" + mon;
      }
      first = false;
    }
    return out;
  }

 private:
  void check_ring(const MPoly& other) const {
    if (ring_ == other.ring_) return;
    if (!ring_ || !other.ring_ || ring_->vars != other.ring_->vars ||
        ring_->laurent != other.ring_->laurent)
      throw std::invalid_argument("MPoly: variable-list mismatch");
  }

  RingPtr ring_;
  std::map<Exp, GaussQ> terms_;
};

}  // namespace agr
