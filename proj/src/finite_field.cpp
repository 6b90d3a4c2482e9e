#include "utg/finite_field.hpp"

#include <string>

#include "utg/core.hpp"

namespace utg {

  bool is_prime(unsigned n) {
    if (n < 2) {
      return false;
    }
    for (unsigned d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  namespace {
    // Monic irreducible polynomials, low coefficient first, leading 1 implied.
    std::vector<unsigned> modulus_for(unsigned p, unsigned k) {
      if (k == 1) {
        return {0};
      }
      switch (p * 100 + k) {
        case 202: return {1, 1};           // x^2 + x + 1
        case 203: return {1, 1, 0};        // x^3 + x + 1
        case 204: return {1, 1, 0, 0};     // x^4 + x + 1
        case 205: return {1, 0, 1, 0, 0};  // x^5 + x^2 + 1
        case 206: return {1, 1, 0, 0, 0, 0};
        case 302: return {1, 0};           // x^2 + 1
        case 303: return {1, 2, 0};        // x^3 + 2x + 1
        case 502: return {2, 1};           // x^2 + x + 2
        case 702: return {3, 1};           // x^2 + x + 3
        default: break;
      }
      throw Error("no field of order " + std::to_string(p) + "^"
                  + std::to_string(k) + " in this build");
    }
  }  // namespace

  FiniteField::FiniteField(unsigned q) : q_(q), p_(0), k_(0) {
    for (unsigned d = 2; d <= q; ++d) {
      if (q % d == 0) {
        p_ = d;
        break;
      }
    }
    if (q < 2 || q > 64 || !is_prime(p_)) {
      throw Error("unsupported field order " + std::to_string(q));
    }
    unsigned m = q;
    while (m % p_ == 0) {
      m /= p_;
      ++k_;
    }
    if (m != 1) {
      throw Error(std::to_string(q) + " is not a prime power");
    }
    auto const modulus = modulus_for(p_, k_);

    auto digits = [this](Element a) {
      std::vector<unsigned> d(k_);
      for (unsigned i = 0; i < k_; ++i) {
        d[i] = a % p_;
        a /= p_;
      }
      return d;
    };
    auto code = [this](std::vector<unsigned> const& d) {
      Element a = 0;
      for (unsigned i = k_; i-- > 0;) {
        a = a * p_ + d[i];
      }
      return a;
    };

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    for (Element a = 0; a < q_; ++a) {
      auto da = digits(a);
      std::vector<unsigned> dn(k_);
      for (unsigned i = 0; i < k_; ++i) {
        dn[i] = (p_ - da[i]) % p_;
      }
      neg_[a] = code(dn);
      for (Element b = 0; b < q_; ++b) {
        auto db = digits(b);
        std::vector<unsigned> ds(k_);
        for (unsigned i = 0; i < k_; ++i) {
          ds[i] = (da[i] + db[i]) % p_;
        }
        add_[a * q_ + b] = code(ds);
        // Schoolbook product then reduction modulo the monic modulus.
        std::vector<unsigned> prod(2 * k_, 0);
        for (unsigned i = 0; i < k_; ++i) {
          for (unsigned j = 0; j < k_; ++j) {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
          }
        }
        if (k_ == 1) {
          mul_[a * q_ + b] = (a * b) % p_;
          continue;
        }
        for (unsigned d = 2 * k_ - 1; d >= k_; --d) {
          unsigned c = prod[d];
          if (c == 0) {
            continue;
          }
          prod[d] = 0;
          for (unsigned i = 0; i < k_; ++i) {
            prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - c) * modulus[i]) % p_;
          }
        }
        prod.resize(k_);
        mul_[a * q_ + b] = code(prod);
      }
    }

    frob_.resize(q_);
    for (Element a = 0; a < q_; ++a) {
      frob_[a] = pow(a, p_);
    }

    gen_ = 0;
    for (Element a = 1; a < q_; ++a) {
      if (multiplicative_order(a) == q_ - 1) {
        gen_ = a;
        break;
      }
    }
    if (gen_ == 0) {
      throw Error("modulus for GF(" + std::to_string(q_)
                  + ") is not irreducible");
    }

    by_index_.assign(q_, 0);
    index_.assign(q_, 0);
    Element x = 1;
    for (std::size_t j = 1; j < q_; ++j) {
      by_index_[j] = x;
      index_[x] = j;
      x = mul(x, gen_);
    }
  }

  FiniteField::Element FiniteField::pow(Element a, unsigned e) const {
    Element r = 1;
    for (unsigned i = 0; i < e; ++i) {
      r = mul(r, a);
    }
    return r;
  }

  unsigned FiniteField::multiplicative_order(Element a) const {
    if (a == 0) {
      return 0;
    }
    Element x = a;
    unsigned n = 1;
    while (x != 1) {
      x = mul(x, a);
      if (++n > q_) {
        return 0;  // zero divisor: the modulus was reducible
      }
    }
    return n;
  }

  FiniteField::Element FiniteField::inv(Element a) const {
    if (a == 0) {
      throw Error("inverse of zero");
    }
    return pow(a, q_ - 2);
  }

  void FiniteField::self_test() const {
    auto fail = [this](char const* what) {
      throw Error("GF(" + std::to_string(q_) + ") self-test: " + what);
    };
    for (Element a = 0; a < q_; ++a) {
      if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0) {
        fail("identities");
      }
      if (add(a, neg(a)) != 0) {
        fail("additive inverse");
      }
      if (a != 0 && mul(a, inv(a)) != 1) {
        fail("multiplicative inverse");
      }
      for (Element b = 0; b < q_; ++b) {
        if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) {
          fail("commutativity");
        }
        if (a != 0 && b != 0 && mul(a, b) == 0) {
          fail("zero divisor");
        }
        if (frobenius(add(a, b)) != add(frobenius(a), frobenius(b))
            || frobenius(mul(a, b)) != mul(frobenius(a), frobenius(b))) {
          fail("frobenius");
        }
        for (Element c = 0; c < q_; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c))
              || mul(mul(a, b), c) != mul(a, mul(b, c))
              || mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
            fail("associativity or distributivity");
          }
        }
      }
    }
    if (multiplicative_order(gen_) != q_ - 1) {
      fail("generator order");
    }
  }

}  // namespace utg
